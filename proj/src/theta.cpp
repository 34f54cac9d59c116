#include "hmf/theta.hpp"

#include <sstream>
#include <stdexcept>

#include "hmf/kronecker.hpp"
#include "hmf/qseries.hpp"

namespace hmf::theta {

namespace {

QPol qp_zero(long q_order) { return QPol(q_order + 1, Rat(0)); }

bool qp_is_zero(const QPol& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

void qp_add_to(QPol& a, const QPol& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) a[i] += b[i];
}

QPol qp_mul(const QPol& a, const QPol& b, long q_order) {
  QPol out = qp_zero(q_order);
  for (long i = 0; i <= q_order; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; i + j <= q_order; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

QPol qp_scale(const QPol& a, const Rat& c) {
  QPol out = a;
  for (auto& x : out) x *= c;
  return out;
}

// inverse of a q-series with unit constant term
QPol qp_inverse(const QPol& a, long q_order) {
  if (a[0] == 0) throw std::domain_error("qp_inverse: zero constant term");
  QPol out = qp_zero(q_order);
  out[0] = 1 / a[0];
  for (long n = 1; n <= q_order; ++n) {
    Rat acc = 0;
    for (long i = 1; i <= n; ++i) acc += a[i] * out[n - i];
    out[n] = -acc / a[0];
  }
  return out;
}

BivSeries biv_zero(long q_order, long deg) {
  BivSeries s;
  s.q_order = q_order;
  s.deg = deg;
  s.c.assign(deg + 1, std::vector<QPol>(deg + 1, qp_zero(q_order)));
  return s;
}

BivSeries biv_mul(const BivSeries& a, const BivSeries& b) {
  BivSeries out = biv_zero(a.q_order, a.deg);
  for (long i = 0; i <= a.deg; ++i)
    for (long j = 0; i + j <= a.deg; ++j) {
      if (qp_is_zero(a.c[i][j])) continue;
      for (long k = 0; i + k <= a.deg; ++k)
        for (long l = 0; i + j + k + l <= a.deg; ++l) {
          if (qp_is_zero(b.c[k][l])) continue;
          qp_add_to(out.c[i + k][j + l], qp_mul(a.c[i][j], b.c[k][l], a.q_order));
        }
    }
  return out;
}

// inverse of a bivariate series whose (0,0,q^0) coefficient is nonzero
BivSeries biv_inverse(const BivSeries& a) {
  BivSeries out = biv_zero(a.q_order, a.deg);
  QPol inv00 = qp_inverse(a.c[0][0], a.q_order);
  // solve sum_{(p,q) <= (i,j)} a[p][q] * out[i-p][j-q] = delta by total degree
  for (long d = 0; d <= a.deg; ++d) {
    for (long i = 0; i <= d; ++i) {
      long j = d - i;
      QPol rhs = qp_zero(a.q_order);
      if (i == 0 && j == 0) rhs[0] = 1;
      for (long p = 0; p <= i; ++p)
        for (long q = 0; q <= j; ++q) {
          if (p == 0 && q == 0) continue;
          if (qp_is_zero(a.c[p][q])) continue;
          QPol t = qp_mul(a.c[p][q], out.c[i - p][j - q], a.q_order);
          for (long s = 0; s <= a.q_order; ++s) rhs[s] -= t[s];
        }
      out.c[i][j] = qp_mul(rhs, inv00, a.q_order);
    }
  }
  return out;
}

}  // namespace

ThetaSeries theta(long q_order, long u_order) {
  ThetaSeries t;
  t.q_order = q_order;
  t.u_order = u_order;
  t.u_coeff.assign(u_order + 1, qp_zero(q_order));
  // triangular exponents n(n+1)/2 <= q_order, n and -1-n paired implicitly
  for (long n = 0;; ++n) {
    long tri = n * (n + 1) / 2;
    if (tri > q_order) break;
    for (long side = 0; side < 2; ++side) {
      long nn = side == 0 ? n : -1 - n;
      Rat half(2 * nn + 1, 2);
      int sign = (((nn % 2) + 2) % 2 == 0) ? 1 : -1;
      Rat power = Rat(sign);
      for (long j = 0; j <= u_order; ++j) {
        t.u_coeff[j][tri] += power / Rat(factorial(j));
        power *= half;
      }
    }
  }
  return t;
}

QPol theta_prime0(long q_order) {
  ThetaSeries t = theta(q_order, 1);
  return t.u_coeff[1];
}

BivSeries kronecker_via_theta(long q_order, long uv_degree) {
  long deg = uv_degree + 2;  // N(uv) F has total degree two above F
  ThetaSeries t = theta(q_order, deg);
  // h(u) = theta_tilde(u)/u, a unit at the origin
  std::vector<QPol> h(t.u_coeff.begin() + 1, t.u_coeff.end());

  BivSeries hu = biv_zero(q_order, deg);
  BivSeries hv = biv_zero(q_order, deg);
  for (long j = 0; j < (long)h.size() && j <= deg; ++j) {
    hu.c[j][0] = h[j];
    hv.c[0][j] = h[j];
  }
  // (u+v) h(u+v) = theta_tilde(u+v), expanded by binomials
  BivSeries theta_uv = biv_zero(q_order, deg);
  for (long j = 1; j <= deg && j < (long)t.u_coeff.size(); ++j) {
    for (long i = 0; i <= j; ++i) {
      QPol term = qp_scale(t.u_coeff[j], Rat(binomial(j, i)));
      qp_add_to(theta_uv.c[i][j - i], term);
    }
  }
  BivSeries den = biv_mul(hu, hv);
  BivSeries quot = biv_mul(theta_uv, biv_inverse(den));
  // multiply through by theta'(0)
  QPol tp = theta_prime0(q_order);
  for (long i = 0; i <= deg; ++i)
    for (long j = 0; i + j <= deg; ++j) quot.c[i][j] = qp_mul(quot.c[i][j], tp, q_order);
  return quot;
}

BivSeries kuznetsov_assembly_uv(long q_order, long uv_degree) {
  long deg = uv_degree + 2;
  BivSeries out = biv_zero(q_order, deg);
  // uv * (1/u + 1/v) = u + v
  out.c[1][0][0] = 1;
  out.c[0][1][0] = 1;
  // uv * sum over all weights k >= 2, odd and even; the shared g-table sends
  // odd weights to zero
  for (long k = 2; k + 1 <= deg; ++k) {
    for (long l = 0; l + 1 <= deg && l + k <= deg; ++l) {
      kron::GCoefficient g = kron::g_coefficient(k, series::expvec(l), 1, q_order);
      if (g.is_zero()) continue;
      QPol coeff = qp_zero(q_order);
      coeff[0] = g.series.constant.a;
      for (const auto& [nu, c] : g.series.terms) coeff[nu.n] = c.a;
      qp_add_to(out.c[l + 1][l + k], coeff);
      if (l + 1 != l + k) qp_add_to(out.c[l + k][l + 1], coeff);
    }
  }
  return out;
}

OracleReport theta_oracle_compare(long q_order, long uv_degree) {
  BivSeries lhs = kuznetsov_assembly_uv(q_order, uv_degree);
  BivSeries rhs = kronecker_via_theta(q_order, uv_degree);
  OracleReport rep;
  for (long i = 0; i <= lhs.deg; ++i) {
    for (long j = 0; i + j <= lhs.deg; ++j) {
      for (long s = 0; s <= q_order; ++s) {
        if (lhs.c[i][j][s] != rhs.c[i][j][s]) {
          rep.equal = false;
          std::ostringstream os;
          os << "u^" << (i - 1) << " v^" << (j - 1) << " q^" << s << ": assembly "
             << rat_str(lhs.c[i][j][s]) << " vs theta " << rat_str(rhs.c[i][j][s]);
          rep.mismatches.push_back(os.str());
        }
      }
    }
  }
  return rep;
}

}  // namespace hmf::theta
