#pragma once

#include <string>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf::theta {

// Truncated power series in q with exact rational coefficients; index = power.
using QPol = std::vector<Rat>;

// theta(u) = sum_n (-1)^n q^{(n+1/2)^2/2} e^{(n+1/2)u} = w * theta_tilde(u, q)
// with w = q^{1/8}; all exponents of theta are 1 mod 8 in w, so theta_tilde
// is an honest series in integer powers of q. theta is odd in u.
struct ThetaSeries {
  long q_order = 0;
  long u_order = 0;
  std::vector<QPol> u_coeff;  // u_coeff[j] = coefficient of u^j, a q-series
};

ThetaSeries theta(long q_order, long u_order);

// theta'(0) divided by the common w prefactor: 1 - 3q + 5q^3 - 7q^6 + ...
QPol theta_prime0(long q_order);

// Bivariate series in (u, v) with q-series coefficients, dense and truncated
// at a total degree; used only by the degree-1 oracle.
struct BivSeries {
  long q_order = 0;
  long deg = 0;                        // max total degree kept
  std::vector<std::vector<QPol>> c;   // c[i][j] = coeff of u^i v^j

  const QPol& at(long i, long j) const { return c[i][j]; }
};

// N(uv) * F_tau(u,v) for the theta quotient F = theta'(0) theta(u+v) /
// (theta(u) theta(v)); multiplying by uv clears the 1/u + 1/v singular part,
// so coeff of u^a v^b in F sits at (a+1, b+1). The w prefactors cancel.
BivSeries kronecker_via_theta(long q_order, long uv_degree);

// The same object assembled from the Kuznetsov lifting of the weight-k
// Eisenstein series over Q (all k >= 0; odd weights contribute zero).
BivSeries kuznetsov_assembly_uv(long q_order, long uv_degree);

struct OracleReport {
  bool equal = true;
  std::vector<std::string> mismatches;
};

// Coefficient-by-coefficient comparison through q^q_order and total
// (u,v)-degree uv_degree of F itself.
OracleReport theta_oracle_compare(long q_order, long uv_degree);

}  // namespace hmf::theta
