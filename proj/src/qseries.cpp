#include "hmf/qseries.hpp"

#include <stdexcept>

#include "hmf/arithmetic.hpp"

namespace hmf::series {

namespace {

void require_same(const FourierSeries& f, const FourierSeries& g) {
  if (f.disc != g.disc) throw std::domain_error("discriminant mismatch");
}

}  // namespace

FourierSeries FourierSeries::one(int disc, long bound) {
  FourierSeries s(disc, bound);
  s.constant = FieldElement::rational(1, disc);
  return s;
}

bool FourierSeries::is_zero() const {
  if (!constant.is_zero()) return false;
  for (const auto& [nu, c] : terms)
    if (!c.is_zero()) return false;
  return true;
}

bool FourierSeries::is_rational() const {
  if (!constant.is_rational()) return false;
  for (const auto& [nu, c] : terms)
    if (!c.is_rational()) return false;
  return true;
}

FieldElement FourierSeries::coeff(const NuIndex& nu) const {
  auto it = terms.find(nu);
  if (it == terms.end()) return FieldElement::rational(0, disc);
  return it->second;
}

void FourierSeries::set_coeff(const NuIndex& nu, FieldElement c) {
  if (nu.trace() > trace_bound) throw std::domain_error("index beyond trace bound");
  if (c.is_zero())
    terms.erase(nu);
  else
    terms[nu] = std::move(c);
}

void FourierSeries::prune() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
}

bool FourierSeries::operator==(const FourierSeries& o) const {
  if (disc != o.disc) return false;
  if (!(constant == o.constant) && !(constant.is_zero() && o.constant.is_zero())) return false;
  // compare as sparse maps with implicit zeros, over the common bound
  long bound = std::min(trace_bound, o.trace_bound);
  for (const auto& [nu, c] : terms) {
    if (nu.trace() > bound) continue;
    if (!(o.coeff(nu) == c)) return false;
  }
  for (const auto& [nu, c] : o.terms) {
    if (nu.trace() > bound) continue;
    if (!(coeff(nu) == c)) return false;
  }
  return true;
}

FourierSeries add(const FourierSeries& f, const FourierSeries& g) {
  require_same(f, g);
  FourierSeries out(f.disc, std::min(f.trace_bound, g.trace_bound));
  out.constant = f.constant + g.constant;
  for (const auto& [nu, c] : f.terms)
    if (nu.trace() <= out.trace_bound) out.terms[nu] = c;
  for (const auto& [nu, c] : g.terms) {
    if (nu.trace() > out.trace_bound) continue;
    auto it = out.terms.find(nu);
    if (it == out.terms.end())
      out.terms[nu] = c;
    else
      it->second = it->second + c;
  }
  out.prune();
  return out;
}

FourierSeries sub(const FourierSeries& f, const FourierSeries& g) {
  return add(f, scale(g, Rat(-1)));
}

FourierSeries scale(const FourierSeries& f, const FieldElement& c) {
  FourierSeries out(f.disc, f.trace_bound);
  if (c.is_zero()) return out;
  out.constant = f.constant * c;
  for (const auto& [nu, x] : f.terms) out.terms[nu] = x * c;
  return out;
}

FourierSeries scale(const FourierSeries& f, const Rat& c) {
  return scale(f, FieldElement::rational(c, f.disc));
}

FourierSeries mul(const FourierSeries& f, const FourierSeries& g) {
  require_same(f, g);
  long bound = std::min(f.trace_bound, g.trace_bound);
  FourierSeries out(f.disc, bound);
  out.constant = f.constant * g.constant;
  // constant * series cross terms
  if (!g.constant.is_zero()) {
    for (const auto& [nu, c] : f.terms)
      if (nu.trace() <= bound) out.terms[nu] = c * g.constant;
  }
  if (!f.constant.is_zero()) {
    for (const auto& [nu, c] : g.terms) {
      if (nu.trace() > bound) continue;
      auto it = out.terms.find(nu);
      FieldElement v = c * f.constant;
      if (it == out.terms.end())
        out.terms[nu] = v;
      else
        it->second = it->second + v;
    }
  }
  // convolution over pairs of totally positive indices
  for (const auto& [nu1, c1] : f.terms) {
    if (nu1.trace() >= bound) continue;
    for (const auto& [nu2, c2] : g.terms) {
      if (nu1.trace() + nu2.trace() > bound) continue;
      NuIndex nu(nu1.m + nu2.m, nu1.n + nu2.n, f.disc);
      FieldElement v = c1 * c2;
      auto it = out.terms.find(nu);
      if (it == out.terms.end())
        out.terms[nu] = v;
      else
        it->second = it->second + v;
    }
  }
  out.prune();
  return out;
}

FourierSeries nu_twist(const FourierSeries& f, const ExpVec& w) {
  int t = field::degree(f.disc);
  if (w[0] < 0 || (t == 2 && w[1] < 0)) throw std::domain_error("nu_twist: negative exponent");
  if (w[0] == 0 && (t == 1 || w[1] == 0)) return f;
  FourierSeries out(f.disc, f.trace_bound);
  for (const auto& [nu, c] : f.terms) {
    FieldElement factor = FieldElement::rational(1, f.disc);
    if (t == 1) {
      factor = FieldElement::rational(rat_pow(Rat(nu.n), w[0]), 1);
    } else {
      FieldElement v = nu.value();
      factor = v.pow(w[0]) * v.conj().pow(w[1]);
    }
    out.terms[nu] = c * factor;
  }
  out.prune();
  return out;
}

FourierSeries eisenstein(long k, int disc, long trace_bound) {
  arith::require_disc(disc);
  if (k < 2) throw std::domain_error("eisenstein: weight must be >= 2");
  int t = field::degree(disc);
  FourierSeries out(disc, trace_bound);
  if (k % 2 == 0) {
    out.constant =
        FieldElement::rational(arith::zeta_f_neg(k, disc) / rat_pow(Rat(2), t), disc);
  }
  for (const auto& nu : field::enumerate_indices(disc, trace_bound)) {
    out.terms[nu] = FieldElement::rational(Rat(field::divisor_sum(nu, k - 1)), disc);
  }
  return out;
}

}  // namespace hmf::series
