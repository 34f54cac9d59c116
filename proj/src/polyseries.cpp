#include "hmf/polyseries.hpp"

#include <sstream>
#include <stdexcept>

namespace hmf::series {

std::string Monomial::str(int t) const {
  std::ostringstream os;
  if (t == 1) {
    os << "X^" << x[0] << " Y^" << y[0];
  } else if (exp_parallel(x, t) && exp_parallel(y, t)) {
    os << "N(X)^" << x[0] << " N(Y)^" << y[0];
  } else {
    os << "X^(" << x[0] << "," << x[1] << ") Y^(" << y[0] << "," << y[1] << ")";
  }
  return os.str();
}

bool PolySeries::is_zero() const {
  for (const auto& [m, s] : mono)
    if (!s.is_zero()) return false;
  return true;
}

const FourierSeries* PolySeries::find(const Monomial& m) const {
  auto it = mono.find(m);
  return it == mono.end() ? nullptr : &it->second;
}

FourierSeries PolySeries::coeff(const Monomial& m) const {
  const FourierSeries* s = find(m);
  return s ? *s : FourierSeries::zero(disc, trace_bound);
}

void PolySeries::accumulate(const Monomial& m, const FourierSeries& s) {
  auto it = mono.find(m);
  if (it == mono.end())
    mono.emplace(m, s);
  else
    it->second = series::add(it->second, s);
}

void PolySeries::prune() {
  for (auto it = mono.begin(); it != mono.end();) {
    it->second.prune();
    if (it->second.is_zero())
      it = mono.erase(it);
    else
      ++it;
  }
}

bool PolySeries::operator==(const PolySeries& o) const {
  if (disc != o.disc) return false;
  for (const auto& [m, s] : mono) {
    if (!(o.coeff(m) == s)) return false;
  }
  for (const auto& [m, s] : o.mono) {
    if (!(coeff(m) == s)) return false;
  }
  return true;
}

PolySeries add(const PolySeries& a, const PolySeries& b) {
  if (a.disc != b.disc) throw std::domain_error("discriminant mismatch");
  PolySeries out(a.disc, a.grade_k, std::min(a.trace_bound, b.trace_bound));
  for (const auto& [m, s] : a.mono) out.accumulate(m, s);
  for (const auto& [m, s] : b.mono) out.accumulate(m, s);
  out.prune();
  return out;
}

PolySeries sub(const PolySeries& a, const PolySeries& b) { return add(a, scale(b, Rat(-1))); }

PolySeries scale(const PolySeries& a, const Rat& c) {
  PolySeries out(a.disc, a.grade_k, a.trace_bound);
  if (c == 0) return out;
  for (const auto& [m, s] : a.mono) out.mono.emplace(m, series::scale(s, c));
  return out;
}

PolySeries swap_xy(const PolySeries& a) {
  PolySeries out(a.disc, a.grade_k, a.trace_bound);
  for (const auto& [m, s] : a.mono) out.mono.emplace(Monomial{m.y, m.x}, s);
  return out;
}

}  // namespace hmf::series
