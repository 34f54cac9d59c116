#include "hmf/quadfield.hpp"

#include <map>
#include <stdexcept>

#include "hmf/arithmetic.hpp"

namespace hmf::field {

namespace {

void require_same_disc(const FieldElement& x, const FieldElement& y) {
  if (x.disc != y.disc) throw std::domain_error("discriminant mismatch");
}

int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

int FieldElement::sign() const {
  if (b == 0) return sgn(a);
  if (a == 0) return sgn(b);
  int sa = sgn(a), sb = sgn(b);
  if (sa == sb) return sa;
  // a and b*sqrt(D) have opposite signs; compare a^2 against D*b^2.
  Rat cmp = a * a - Rat(disc) * b * b;
  if (cmp > 0) return sa;
  if (cmp < 0) return sb;
  return 0;  // unreachable for D > 1 nonsquare
}

bool FieldElement::totally_positive() const {
  if (disc == 1) return a > 0;
  return sign() > 0 && conj().sign() > 0;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_disc(*this, o);
  return FieldElement(a + o.a, b + o.b, disc);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_disc(*this, o);
  return FieldElement(a - o.a, b - o.b, disc);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_disc(*this, o);
  return FieldElement(a * o.a + Rat(disc) * b * o.b, a * o.b + b * o.a, disc);
}

FieldElement FieldElement::inverse() const {
  if (disc == 1) {
    if (a == 0) throw std::domain_error("inverse of zero field element");
    return FieldElement(1 / a, 0, 1);
  }
  Rat n = norm();
  if (n == 0) throw std::domain_error("inverse of zero field element");
  return FieldElement(a / n, -b / n, disc);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = FieldElement::rational(1, disc);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool FieldElement::is_integral() const {
  if (disc == 1) return b == 0 && a.get_den() == 1;
  Rat x = 2 * a, y = 2 * b;
  if (x.get_den() != 1 || y.get_den() != 1) return false;
  if (disc % 4 == 0) {
    // O = Z[sqrt(D/4)]: a integral, b a half-integer
    return a.get_den() == 1;
  }
  // O = Z[(1+sqrt(D))/2]: (x + y sqrt(D))/2 with x = y (mod 2)
  return (x.get_num() - y.get_num()) % 2 == 0;
}

std::string FieldElement::str() const {
  if (b == 0) return rat_str(a);
  return rat_str(a) + " + " + rat_str(b) + "*sqrt(" + std::to_string(disc) + ")";
}

bool NuIndex::valid() const {
  if (n < 1) return false;
  if (disc == 1) return m == 0;
  if ((Int(n) * n) * disc <= Int(m) * m) return false;  // total positivity
  if (disc % 4 == 0) return m % 2 == 0;
  return ((m - n) % 2) == 0;
}

FieldElement NuIndex::value() const {
  if (disc == 1) return FieldElement(Rat(n), 0, 1);
  return FieldElement(rat(n, 2), rat(m, 2 * (long)disc), disc);
}

FieldElement NuIndex::ideal_generator() const {
  if (disc == 1) return FieldElement(Rat(n), 0, 1);
  return FieldElement(rat(m, 2), rat(n, 2), disc);
}

Int NuIndex::ideal_norm() const {
  if (disc == 1) return Int(n);
  Int num = Int(n) * n * disc - Int(m) * m;
  return num / 4;
}

namespace {

Int isqrt(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Continued fraction of (P0 + sqrt(N))/Q0 driving the convergent recurrence;
// returns the first convergent-derived element of |norm| 1.
FieldElement unit_from_cf(int disc) {
  long N, P, Q;
  bool half_basis = (disc % 4 == 1);
  if (half_basis) {
    N = disc;
    P = 1;
    Q = 2;
  } else {
    N = disc / 4;
    P = 0;
    Q = 1;
  }
  Int sqrtN = isqrt(Int(N));
  Int p_prev = 0, p_cur = 1;  // p_{-2}, p_{-1}
  Int q_prev = 1, q_cur = 0;
  for (int step = 0; step < 200; ++step) {
    Int a = (Int(P) + sqrtN) / Q;
    long al = a.get_si();
    Int p_next = al * p_cur + p_prev;
    Int q_next = al * q_cur + q_prev;
    p_prev = p_cur;
    p_cur = p_next;
    q_prev = q_cur;
    q_cur = q_next;
    // candidate unit p - q * conj(omega)
    Rat px(p_cur), qx(q_cur);
    FieldElement u = half_basis ? FieldElement((2 * px - qx) / 2, qx / 2, disc)
                                : FieldElement(px, qx / 2, disc);
    Rat nrm = u.norm();
    if (nrm == 1 || nrm == -1) return u;
    P = al * Q - P;
    Q = (N - P * P) / Q;
    if (Q == 0) throw std::logic_error("square discriminant in unit_from_cf");
  }
  throw std::logic_error("fundamental unit not found within CF iteration budget");
}

}  // namespace

FieldElement fundamental_unit(int disc) {
  arith::require_disc(disc);
  if (disc == 1) throw std::domain_error("fundamental_unit: D = 1 has no unit structure");
  return unit_from_cf(disc);
}

const UnitData& unit_data(int disc) {
  arith::require_disc(disc);
  if (disc == 1) throw std::domain_error("unit_data: D = 1 has no unit structure");
  static std::map<int, UnitData> cache;
  auto it = cache.find(disc);
  if (it != cache.end()) return it->second;
  UnitData d;
  d.fundamental_unit = fundamental_unit(disc);
  Rat nrm = d.fundamental_unit.norm();
  d.norm_of_unit = nrm == 1 ? 1 : -1;
  if (d.norm_of_unit != -1) {
    throw std::logic_error("allowlisted discriminant lacks a negative-norm unit");
  }
  d.coefficient_orbit_generator = d.fundamental_unit * d.fundamental_unit;
  if (!d.coefficient_orbit_generator.totally_positive()) {
    throw std::logic_error("squared fundamental unit must be totally positive");
  }
  return cache.emplace(disc, std::move(d)).first->second;
}

std::vector<NuIndex> enumerate_indices(int disc, long trace_bound) {
  arith::require_disc(disc);
  std::vector<NuIndex> out;
  if (disc == 1) {
    for (long n = 1; n <= trace_bound; ++n) out.emplace_back(0, n, 1);
    return out;
  }
  for (long n = 1; n <= trace_bound; ++n) {
    for (long m = -n * 8; m <= n * 8; ++m) {
      NuIndex nu(m, n, disc);
      if (Int(m) * m >= Int(n) * n * disc) continue;
      if (nu.valid()) out.push_back(nu);
    }
  }
  return out;
}

namespace {

NuIndex index_from_element(const FieldElement& x) {
  // invert nu = (m + n sqrt(D)) / (2 sqrt(D)): n = 2a, m = 2Db
  Rat nr = 2 * x.a, mr = 2 * Rat(x.disc) * x.b;
  if (nr.get_den() != 1 || mr.get_den() != 1) {
    throw std::logic_error("element is not in the inverse different lattice");
  }
  NuIndex nu(mr.get_num().get_si(), nr.get_num().get_si(), x.disc);
  if (!nu.valid()) throw std::logic_error("element is not a valid totally positive index");
  return nu;
}

}  // namespace

NuIndex canonical_rep(const NuIndex& nu) {
  if (!nu.valid()) throw std::domain_error("canonical_rep: invalid index");
  if (nu.disc == 1) return nu;
  const auto& units = unit_data(nu.disc);
  const FieldElement g = units.coefficient_orbit_generator;
  const FieldElement gi = g.inverse();
  FieldElement x = nu.value();
  // trace along the orbit is strictly convex; walk downhill, then break ties.
  for (;;) {
    Rat t = x.trace();
    FieldElement xg = x * g;
    FieldElement xgi = x * gi;
    if (xg.trace() < t) {
      x = xg;
    } else if (xgi.trace() < t) {
      x = xgi;
    } else {
      NuIndex best = index_from_element(x);
      for (const FieldElement& nb : {xg, xgi}) {
        if (nb.trace() == t) {
          NuIndex cand = index_from_element(nb);
          if (cand < best) best = cand;
        }
      }
      return best;
    }
  }
}

namespace {

// Smallest element of O with |norm| = target, by box search over
// (x + y sqrt(D))/2. Existence is guaranteed by class number 1.
FieldElement element_of_norm(int disc, long target) {
  for (long y = 0; y <= 4 * target + 64; ++y) {
    Int dy2 = Int(disc) * y * y;
    for (long s : {+1L, -1L}) {
      Int x2 = dy2 + s * 4 * target;
      if (x2 < 0) continue;
      Int x = isqrt(x2);
      if (x * x != x2) continue;
      long xl = x.get_si();
      FieldElement cand(rat(xl, 2), rat(y, 2), disc);
      if (!cand.is_integral()) continue;
      if (cand.is_zero()) continue;
      return cand;
    }
  }
  throw std::logic_error("element_of_norm: no generator found for norm " +
                         std::to_string(target));
}

long valuation_at(const FieldElement& alpha, const FieldElement& pi) {
  FieldElement x = alpha;
  long v = 0;
  for (;;) {
    FieldElement q = x / pi;
    if (!q.is_integral()) return v;
    x = q;
    ++v;
    if (v > 256) throw std::logic_error("runaway valuation");
  }
}

Int geometric_norm_sum(long p, long r, long count) {
  // 1 + p^r + ... + p^(r*count)
  Int acc = 0;
  Int pr = int_pow(Int(p), (unsigned long)r);
  Int term = 1;
  for (long i = 0; i <= count; ++i) {
    acc += term;
    term *= pr;
  }
  return acc;
}

std::vector<std::pair<long, long>> factorize(Int n) {
  std::vector<std::pair<long, long>> out;
  Int m = n;
  for (long p = 2; Int(p) * p <= m; p += (p == 2 ? 1 : 2)) {
    if (m % p == 0) {
      long e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (m > 1) out.emplace_back(m.get_si(), 1);
  return out;
}

}  // namespace

std::vector<PrimeIdeal> primes_above(int disc, long p) {
  arith::require_disc(disc);
  if (disc == 1) return {PrimeIdeal{FieldElement(Rat(p), 0, 1), Int(p), 0}};
  static std::map<std::pair<int, long>, std::vector<PrimeIdeal>> cache;
  auto key = std::make_pair(disc, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<PrimeIdeal> out;
  int chi = arith::character(disc, p);
  if (chi == -1) {
    out.push_back({FieldElement(Rat(p), 0, disc), Int(p) * p, -1});
  } else {
    FieldElement pi = element_of_norm(disc, p);
    if (chi == 1) {
      out.push_back({pi, Int(p), +1});
      out.push_back({pi.conj(), Int(p), +1});
    } else {
      out.push_back({pi, Int(p), 0});
    }
  }
  cache[key] = out;
  return out;
}

Int sigma_of_element(const FieldElement& alpha, long r) {
  if (alpha.is_zero()) throw std::domain_error("sigma of the zero ideal");
  if (!alpha.is_integral()) throw std::domain_error("sigma of a non-integral element");
  Rat nrm = alpha.norm();
  Int nabs = abs(nrm.get_num());
  if (alpha.disc == 1) {
    Int acc = 1;
    for (auto [p, e] : factorize(nabs)) acc *= geometric_norm_sum(p, r, e);
    return acc;
  }
  Int acc = 1;
  for (auto [p, e] : factorize(nabs)) {
    auto ideals = primes_above(alpha.disc, p);
    if (ideals[0].ramification == -1) {
      if (e % 2 != 0) throw std::logic_error("odd valuation at an inert prime");
      acc *= geometric_norm_sum(p, 2 * r, e / 2);
    } else if (ideals[0].ramification == 0) {
      acc *= geometric_norm_sum(p, r, e);
    } else {
      long v = valuation_at(alpha, ideals[0].generator);
      long w = valuation_at(alpha, ideals[1].generator);
      if (v + w != e) throw std::logic_error("split valuations do not add up");
      acc *= geometric_norm_sum(p, r, v) * geometric_norm_sum(p, r, w);
    }
  }
  return acc;
}

Int divisor_sum(const NuIndex& nu, long r) {
  if (!nu.valid()) throw std::domain_error("divisor_sum: invalid index");
  return sigma_of_element(nu.ideal_generator(), r);
}

NuIndex index_product(const NuIndex& nu1, const NuIndex& nu2) {
  if (nu1.disc != nu2.disc) throw std::domain_error("discriminant mismatch");
  if (nu1.disc == 1) return NuIndex(0, nu1.n * nu2.n, 1);
  FieldElement gen = nu1.ideal_generator() * nu2.ideal_generator();
  // gen generates the product ideal; divide by sqrt(D) to land back in the
  // inverse different and pick the totally positive associate. The negative-
  // norm unit flips exactly one embedding, so {x, -x, x e, -x e} realizes all
  // four sign patterns.
  FieldElement nu = gen / FieldElement(0, 1, nu1.disc);
  const FieldElement eps = unit_data(nu1.disc).fundamental_unit;
  for (const FieldElement& cand : {nu, -nu, nu * eps, -(nu * eps)}) {
    if (cand.totally_positive()) return canonical_rep(index_from_element(cand));
  }
  throw std::logic_error("no totally positive associate found");
}

}  // namespace hmf::field
