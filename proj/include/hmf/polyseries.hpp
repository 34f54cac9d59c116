#pragma once

#include <map>
#include <string>

#include "hmf/qseries.hpp"

namespace hmf::series {

// A monomial X^{x} Y^{y} with componentwise integer exponents, possibly
// negative on the singular layers (-1 anywhere, -2 only at grade 0).
struct Monomial {
  ExpVec x{0, 0};
  ExpVec y{0, 0};

  auto operator<=>(const Monomial& o) const = default;
  std::string str(int t) const;
};

// Polynomial in X_1..X_t, Y_1..Y_t with FourierSeries coefficients, carrying
// one T-grade k.
struct PolySeries {
  int disc = 1;
  long grade_k = 0;
  long trace_bound = 0;
  std::map<Monomial, FourierSeries> mono;

  PolySeries() = default;
  PolySeries(int disc_, long k_, long bound_) : disc(disc_), grade_k(k_), trace_bound(bound_) {}

  bool is_zero() const;
  const FourierSeries* find(const Monomial& m) const;
  FourierSeries coeff(const Monomial& m) const;
  void accumulate(const Monomial& m, const FourierSeries& s);
  void prune();

  bool operator==(const PolySeries& o) const;
};

PolySeries add(const PolySeries& a, const PolySeries& b);
PolySeries sub(const PolySeries& a, const PolySeries& b);
PolySeries scale(const PolySeries& a, const Rat& c);
PolySeries swap_xy(const PolySeries& a);

}  // namespace hmf::series
