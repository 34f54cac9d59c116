#include "hmf/periods.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hmf/arithmetic.hpp"

namespace hmf::periods {

using field::FieldElement;
using field::NuIndex;
using series::ExpVec;

namespace {

int sign_pow(long e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

Rat gamma_pow_t(long n, int t) {
  Rat g(gamma_int(n));
  return t == 2 ? g * g : g;
}

ExpVec par(long e, int t) { return t == 1 ? ExpVec{e, 0} : ExpVec{e, e}; }

}  // namespace

Rat PeriodPolynomial::at(long n) const {
  auto it = coeff.find(n);
  return it == coeff.end() ? Rat(0) : it->second;
}

bool PeriodPolynomial::is_zero() const {
  for (const auto& [n, c] : coeff)
    if (c != 0) return false;
  return true;
}

void PeriodPolynomial::prune() {
  for (auto it = coeff.begin(); it != coeff.end();) {
    if (it->second == 0)
      it = coeff.erase(it);
    else
      ++it;
  }
}

bool PeriodPolynomial::operator==(const PeriodPolynomial& o) const {
  PeriodPolynomial a = *this, b = o;
  a.prune();
  b.prune();
  return a.coeff == b.coeff;
}

std::string PeriodPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : coeff) {
    if (c == 0) continue;
    if (!first) os << " + ";
    os << rat_str(c) << "*N(X)^" << n;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

PeriodPolynomial reflect(const PeriodPolynomial& p) {
  PeriodPolynomial out;
  out.k = p.k;
  out.t = p.t;
  for (const auto& [n, c] : p.coeff) {
    out.coeff[p.k - 2 - n] += c * Rat(sign_pow(p.t * n));
  }
  out.prune();
  return out;
}

PeriodPolynomial p_plus(long k, int t) {
  if (k < 2 || k % 2 != 0) throw std::domain_error("p_plus: k must be even >= 2");
  PeriodPolynomial out;
  out.k = k;
  out.t = t;
  out.coeff[k - 2] += 1;
  out.coeff[0] += Rat(t == 1 ? -1 : 1);
  out.prune();
  return out;
}

PeriodPolynomial p_minus(long k, int disc) {
  if (k < 2 || k % 2 != 0) throw std::domain_error("p_minus: k must be even >= 2");
  int t = field::degree(disc);
  PeriodPolynomial out;
  out.k = k;
  out.t = t;
  for (long n = 1; n <= k - 3; n += 2) {
    Rat c = arith::zeta_f_neg(n + 1, disc) * arith::zeta_f_neg(k - n - 1, disc) /
            (gamma_pow_t(n + 1, t) * gamma_pow_t(k - n - 1, t));
    out.coeff[n] += c;
  }
  Rat endpoint = Rat(t == 1 ? -1 : 1) * arith::zeta_f_neg(k, disc) / gamma_pow_t(k, t);
  out.coeff[k - 1] += endpoint;
  out.coeff[-1] += endpoint;
  out.prune();
  return out;
}

sym::SymbolicConstant eisenstein_petersson(long k, int disc) {
  if (k < 4 || k % 2 != 0)
    throw std::domain_error("eisenstein_petersson: k = 2 hits zeta_F(1); need even k >= 4");
  int t = field::degree(disc);
  Rat rational = gamma_pow_t(k - 1, t) * arith::zeta_f_neg(k, disc) /
                 (rat_pow(Rat(2), t) * rat_pow(Rat(4), t * (k - 1)));
  auto c = sym::SymbolicConstant::from_rat(rational, disc);
  c.pi_pow = -t * (k - 1);
  c.zeta_args[k - 1] = 1;
  return c;
}

sym::SymbolicConstant omega_minus(long k, int disc) {
  int t = field::degree(disc);
  auto c = sym::SymbolicConstant::from_rat(gamma_pow_t(k - 1, t) / rat_pow(Rat(2), t), disc);
  c.sqrt_d_pow = 1;
  c.normalize();
  return c;
}

sym::SymbolicConstant omega_plus(long k, int disc) {
  int t = field::degree(disc);
  // D^{k-3/2} zeta_F(k-1) (2 pi i)^{-t(k-1)}
  auto c = sym::SymbolicConstant::from_rat(
      rat_pow(Rat(disc), k - 2) / rat_pow(Rat(2), t * (k - 1)), disc);
  c.sqrt_d_pow = 1;
  c.pi_pow = -t * (k - 1);
  c.i_pow = -t * (k - 1);
  c.zeta_args[k - 1] = 1;
  c.normalize();
  return c * omega_minus(k, disc);
}

PolySeries eisenstein_layer(long k, int disc, const Bounds& bounds) {
  if (k < 2 || k % 2 != 0) throw std::domain_error("eisenstein_layer: k must be even >= 2");
  int t = field::degree(disc);
  PeriodPolynomial pp = p_plus(k, t);
  PeriodPolynomial pm = p_minus(k, disc);
  Rat scalar = Rat(t == 1 ? -1 : 1) * rat_pow(Rat(2), t) * gamma_pow_t(k - 1, t) /
               arith::zeta_f_neg(k, disc);
  FourierSeries g = series::eisenstein(k, disc, bounds.trace_bound);
  FourierSeries scaled = series::scale(g, scalar);
  PolySeries out(disc, k, bounds.trace_bound);
  for (const auto& [a, ca] : pp.coeff) {
    for (const auto& [b, cb] : pm.coeff) {
      FourierSeries term = series::scale(scaled, ca * cb);
      out.accumulate(Monomial{par(a, t), par(b, t)}, term);  // p+(X) p-(Y)
      out.accumulate(Monomial{par(b, t), par(a, t)}, term);  // p+(Y) p-(X)
    }
  }
  out.prune();
  return out;
}

PolySeries extract_cusp(long k, int disc, const Bounds& bounds) {
  PolySeries layer = kron::product_layer(k, disc, bounds);
  PolySeries normalized = series::scale(layer, gamma_pow_t(k - 1, field::degree(disc)));
  return series::sub(normalized, eisenstein_layer(k, disc, bounds));
}

namespace {

// exact row-reduction over the field Q(sqrt(D)); returns rank
long field_rank(std::vector<std::vector<FieldElement>> rows) {
  long rank = 0;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  size_t lead = 0;
  for (size_t r = 0; r < rows.size() && lead < ncols; ++lead) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][lead].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    FieldElement inv = rows[r][lead].inverse();
    for (size_t c = lead; c < ncols; ++c) rows[r][c] = rows[r][c] * inv;
    for (size_t rr = 0; rr < rows.size(); ++rr) {
      if (rr == r || rows[rr][lead].is_zero()) continue;
      FieldElement factor = rows[rr][lead];
      for (size_t c = lead; c < ncols; ++c)
        rows[rr][c] = rows[rr][c] - factor * rows[r][c];
    }
    ++r;
    ++rank;
  }
  return rank;
}

PeriodPolynomial normalize_lowest(PeriodPolynomial p) {
  p.prune();
  if (p.coeff.empty()) return p;
  Rat lead = p.coeff.begin()->second;
  for (auto& [n, c] : p.coeff) c /= lead;
  return p;
}

}  // namespace

EigenformExtraction extract_eigenform(long k, int disc, const Bounds& bounds) {
  int t = field::degree(disc);
  PolySeries cusp = extract_cusp(k, disc, bounds);
  cusp.prune();
  EigenformExtraction out;
  out.eigenform = FourierSeries::zero(disc, bounds.trace_bound);

  std::vector<NuIndex> indices = field::enumerate_indices(disc, bounds.trace_bound);
  std::vector<Monomial> monos;
  for (const auto& [m, s] : cusp.mono) monos.push_back(m);
  if (monos.empty()) return out;

  std::vector<std::vector<FieldElement>> rows;
  for (const auto& m : monos) {
    const FourierSeries& s = cusp.mono.at(m);
    if (!s.constant.is_zero())
      throw std::logic_error("cusp layer has a nonzero constant term");
    std::vector<FieldElement> row;
    row.reserve(indices.size());
    for (const auto& nu : indices) row.push_back(s.coeff(nu));
    rows.push_back(std::move(row));
  }

  out.rank = field_rank(rows);
  if (out.rank == 0) return out;
  if (out.rank > 1) {
    out.status = EigenformExtraction::Status::unsupported_rank;
    return out;
  }
  out.status = EigenformExtraction::Status::rank_one;

  // pick the first monomial with a nonzero series as the eigenform carrier
  size_t carrier = 0;
  while (carrier < monos.size() && cusp.mono.at(monos[carrier]).is_zero()) ++carrier;
  FourierSeries f = cusp.mono.at(monos[carrier]);
  // normalize the first nonzero orbit coefficient (in index order) to 1
  FieldElement unit = FieldElement::rational(0, disc);
  size_t pivot_col = 0;
  for (size_t j = 0; j < indices.size(); ++j) {
    FieldElement c = f.coeff(indices[j]);
    if (!c.is_zero()) {
      unit = c;
      pivot_col = j;
      break;
    }
  }
  f = series::scale(f, unit.inverse());
  out.eigenform = f;

  // R(X,Y) coefficients: row = r_m * f exactly (rank 1)
  std::map<std::pair<long, long>, FieldElement> r_coeff;
  for (const auto& m : monos) {
    const FourierSeries& s = cusp.mono.at(m);
    if (!series::exp_parallel(m.x, t) || !series::exp_parallel(m.y, t))
      throw std::logic_error("cusp layer has a non-parallel monomial");
    FieldElement r = s.coeff(indices[pivot_col]);  // f is 1 at the pivot
    if (!(series::scale(f, r) == s))
      throw std::logic_error("rank-1 factorization residual is nonzero");
    if (!r.is_zero()) r_coeff[{m.x[0], m.y[0]}] = r;
  }

  // split into even x odd blocks: R = (-1)^t (E(X)O(Y) + E(Y)O(X))*scalar
  std::map<long, std::map<long, FieldElement>> block;  // even a -> odd b -> r
  for (const auto& [ab, r] : r_coeff) {
    auto [a, b] = ab;
    if (a % 2 == 0 && (((b % 2) + 2) % 2 == 1)) block[a][b] = r;
    if (!r.is_rational()) out.factors_rational = false;
  }
  if (block.empty()) {
    out.factor_split_consistent = false;
    return out;
  }
  long a0 = block.begin()->first;
  long b0 = block.begin()->second.begin()->first;
  PeriodPolynomial even, odd;
  even.k = odd.k = k;
  even.t = odd.t = t;
  FieldElement ref = block[a0][b0];
  for (const auto& [b, r] : block[a0]) {
    FieldElement val = r / ref;
    if (!val.is_rational()) out.factors_rational = false;
    odd.coeff[b] = val.a;
  }
  for (const auto& [a, row] : block) {
    FieldElement val = row.count(b0) ? row.at(b0) / ref : FieldElement::rational(0, disc);
    if (!val.is_rational()) out.factors_rational = false;
    even.coeff[a] = val.a;
  }
  // outer-product consistency across the whole block and the mirrored block
  for (const auto& [ab, r] : r_coeff) {
    auto [a, b] = ab;
    FieldElement expect = FieldElement::rational(0, disc);
    if (a % 2 == 0 && ((b % 2 + 2) % 2) == 1)
      expect = ref * FieldElement::rational(even.at(a) * odd.at(b), disc);
    else if (((a % 2 + 2) % 2) == 1 && b % 2 == 0)
      expect = ref * FieldElement::rational(even.at(b) * odd.at(a), disc);
    if (!(expect == r)) out.factor_split_consistent = false;
  }
  out.even_factor = normalize_lowest(even);
  out.odd_factor = normalize_lowest(odd);
  return out;
}

FourierSeries rankin_cohen(const FourierSeries& f, const FourierSeries& g, long k1, long k2,
                           long p) {
  if (f.disc != g.disc) throw std::domain_error("discriminant mismatch");
  if (p < 0) throw std::domain_error("rankin_cohen: negative p");
  int t = field::degree(f.disc);
  FourierSeries acc = FourierSeries::zero(f.disc, std::min(f.trace_bound, g.trace_bound));
  long l1_max = (t == 2) ? p : 0;
  for (long l0 = 0; l0 <= p; ++l0) {
    for (long l1 = 0; l1 <= l1_max; ++l1) {
      ExpVec l{l0, l1};
      ExpVec lp{p - l0, t == 2 ? p - l1 : 0};
      Rat c(binomial(k1 + p - 1, lp[0]) * binomial(k2 + p - 1, l[0]));
      if (t == 2) c *= Rat(binomial(k1 + p - 1, lp[1]) * binomial(k2 + p - 1, l[1]));
      c *= sign_pow(series::exp_total(l, t));
      FourierSeries term = series::mul(series::nu_twist(f, l), series::nu_twist(g, lp));
      acc = series::add(acc, series::scale(term, c));
    }
  }
  return acc;
}

RCReport rc_consistency(long k, long p, long q, int disc, const Bounds& bounds) {
  if (!(0 <= p && p < q && q <= (k - 2) / 2))
    throw std::domain_error("rc_consistency: need 0 <= p < q <= (k-2)/2");
  if ((p + q) % 2 == 0) throw std::domain_error("rc_consistency: p + q must be odd");
  int t = field::degree(disc);
  long B = bounds.trace_bound;

  PolySeries layer = kron::product_layer(k, disc, bounds);
  FourierSeries lhs = layer.coeff(Monomial{par(p, t), par(q, t)});

  long w1 = q - p + 1, w2 = k - q - p - 1;
  FourierSeries g1 = series::eisenstein(w1, disc, B);
  FourierSeries g2 = series::eisenstein(w2, disc, B);
  FourierSeries bracket = rankin_cohen(g1, g2, w1, w2, p);
  Rat scalar = Rat(sign_pow(t * p)) * rat_pow(Rat(2), 2 * t) /
               (gamma_pow_t(q + 1, t) * gamma_pow_t(k - q - 1, t));
  FourierSeries rhs = series::scale(bracket, scalar);

  // The singular cross terms reach interior monomials only for t = 1 (they
  // are dropped from the t = 2 layers); the bracket side gains the matching
  // corrections at q = p+1 and p+q = k-3.
  if (t == 1) {
    if (q == p + 1) {
      auto edge = kron::g_coefficient(k - 2 * q, par(q, t), disc, B);
      rhs = series::add(rhs, series::scale(edge.series, Rat(sign_pow(t * q))));
    }
    if (p + q == k - 3) {
      auto edge = kron::g_coefficient(q - p + 1, par(p + 1, t), disc, B);
      rhs = series::add(rhs, series::scale(edge.series, Rat(sign_pow(t))));
    }
  }

  RCReport rep;
  rep.diff = series::sub(lhs, rhs);
  rep.diff.prune();
  rep.zero = rep.diff.is_zero();
  return rep;
}

}  // namespace hmf::periods
