#pragma once

#include <map>
#include <string>
#include <vector>

#include "hmf/kronecker.hpp"
#include "hmf/symbolic.hpp"

namespace hmf::periods {

using kron::Bounds;
using series::FourierSeries;
using series::Monomial;
using series::PolySeries;

// Polynomial in N(X) with exponents in [-1, k-1]; the even part lives on even
// exponents in [0, k-2], the odd part on odd exponents in [-1, k-1].
struct PeriodPolynomial {
  long k = 0;
  int t = 1;
  std::map<long, Rat> coeff;  // exponent n -> coefficient of N(X)^n

  Rat at(long n) const;
  bool is_zero() const;
  void prune();
  bool operator==(const PeriodPolynomial& o) const;
  std::string str() const;
};

// N(X)^{k-2} P(-1/X) as a polynomial in N(X): n -> k-2-n with sign (-1)^{tn}.
PeriodPolynomial reflect(const PeriodPolynomial& p);

// p_k^+(X) = N(X)^{k-2} + (-1)^t
PeriodPolynomial p_plus(long k, int t);

// p_k^-(X): interior odd n in [1, k-3] with coefficient
// zeta_F(-n) zeta_F(n+2-k) / (Gamma(n+1)^t Gamma(k-n-1)^t), endpoints n = -1
// and n = k-1 regularized to (-1)^t zeta_F(1-k)/Gamma(k)^t on both ends (the
// unique reading under which N(X)^{k-2} R(-1/X) = (-1)^t R(X) survives and
// the assembled layer matches the series product).
PeriodPolynomial p_minus(long k, int disc);

// <G_k, G_k> = Gamma(k-1)^t zeta_F(k-1) / (4 pi)^{t(k-1)} * zeta_F(1-k)/2^t.
// k = 2 is rejected: zeta_F(1) diverges.
sym::SymbolicConstant eisenstein_petersson(long k, int disc);

// omega^- = sqrt(D) Gamma(k-1)^t / 2^t,
// omega^+ = D^{k-3/2} zeta_F(k-1) / (2 pi i)^{t(k-1)} * omega^-
sym::SymbolicConstant omega_minus(long k, int disc);
sym::SymbolicConstant omega_plus(long k, int disc);

// C_k^{Eis} = (-1)^t (2^t Gamma(k-1)^t / zeta_F(1-k))
//             (p_k^+(X) p_k^-(Y) + p_k^+(Y) p_k^-(X)) G_k(tau)
PolySeries eisenstein_layer(long k, int disc, const Bounds& bounds);

// Gamma(k-1)^t * (raw product layer) - C_k^{Eis}; equals the cusp part
// sum_f R_f(X,Y) f(tau) of the grade-k layer.
PolySeries extract_cusp(long k, int disc, const Bounds& bounds);

struct EigenformExtraction {
  enum class Status { no_cusp_forms, rank_one, unsupported_rank };
  Status status = Status::no_cusp_forms;
  long rank = 0;
  FourierSeries eigenform;            // first orbit coefficient normalized to 1
  PeriodPolynomial even_factor;       // lowest nonzero coefficient scaled to 1
  PeriodPolynomial odd_factor;
  bool factors_rational = true;
  bool factor_split_consistent = true;
};

// Rank-1 factorization of the cusp layer as R(X,Y) f(tau), exact linear
// algebra over the coefficient field, no thresholds.
EigenformExtraction extract_eigenform(long k, int disc, const Bounds& bounds);

// Rankin-Cohen bracket [f,g]_p of weights (k1, k2), parallel p, with the
// derivative normalized as the nu-twist (so the (2 pi i)^{-tp} is built in):
// sum over vector l + l' = (p,..,p) of
//   (-1)^{|l|} C(k1+p-1, l')_vec C(k2+p-1, l)_vec  D^l f D^{l'} g.
FourierSeries rankin_cohen(const FourierSeries& f, const FourierSeries& g, long k1, long k2,
                           long p);

struct RCReport {
  bool zero = true;
  FourierSeries diff;
};

// Exact Fourier-level consistency of the proof chain: the coefficient of
// N(X)^p N(Y)^q (0 <= p < q <= (k-2)/2, p+q odd) in the raw layer equals
//   (-1)^{tp} 2^{2t} / (Gamma(q+1)^t Gamma(k-q-1)^t) [G_{q-p+1}, G_{k-q-p-1}]_p
// plus the singular cross terms at q = p+1 and p+q = k-3.
RCReport rc_consistency(long k, long p, long q, int disc, const Bounds& bounds);

}  // namespace hmf::periods
