#pragma once

#include <array>
#include <map>

#include "hmf/quadfield.hpp"

namespace hmf::series {

using field::FieldElement;
using field::NuIndex;

// Exponent vector for the t embeddings; only the first entry is meaningful
// when t = 1. Componentwise arithmetic throughout.
using ExpVec = std::array<long, 2>;

inline ExpVec expvec(long e0, long e1 = 0) { return {e0, e1}; }
inline long exp_total(const ExpVec& e, int t) { return t == 1 ? e[0] : e[0] + e[1]; }
inline bool exp_parallel(const ExpVec& e, int t) { return t == 1 || e[0] == e[1]; }
inline ExpVec exp_add(const ExpVec& a, const ExpVec& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline ExpVec exp_shift(const ExpVec& a, long s, int t) {
  return t == 1 ? ExpVec{a[0] + s, 0} : ExpVec{a[0] + s, a[1] + s};
}

// Trace-truncated q-expansion over the field: the nu = 0 constant plus a
// finite map over totally positive indices with trace <= trace_bound.
// Absent index means coefficient zero.
struct FourierSeries {
  int disc = 1;
  long trace_bound = 0;
  FieldElement constant;
  std::map<NuIndex, FieldElement> terms;

  FourierSeries() = default;
  FourierSeries(int disc_, long bound_)
      : disc(disc_), trace_bound(bound_), constant(FieldElement::rational(0, disc_)) {}

  static FourierSeries zero(int disc, long bound) { return FourierSeries(disc, bound); }
  static FourierSeries one(int disc, long bound);

  bool is_zero() const;
  // true when every coefficient has zero sqrt(D) component
  bool is_rational() const;

  FieldElement coeff(const NuIndex& nu) const;
  void set_coeff(const NuIndex& nu, FieldElement c);
  void prune();  // drop stored zeros

  bool operator==(const FourierSeries& o) const;
};

FourierSeries add(const FourierSeries& f, const FourierSeries& g);
FourierSeries sub(const FourierSeries& f, const FourierSeries& g);
FourierSeries scale(const FourierSeries& f, const FieldElement& c);
FourierSeries scale(const FourierSeries& f, const Rat& c);

// Convolution product; exact through trace min(Bf, Bg).
FourierSeries mul(const FourierSeries& f, const FourierSeries& g);

// Coefficient at nu multiplied by nu^w = nu1^{w0} * nu2^{w1} over the two
// embeddings (n^{w0} for D = 1). This is D^w f / (2 pi i)^{|w|}; the constant
// term dies for w != 0. The whole pipeline stays in exact field arithmetic.
FourierSeries nu_twist(const FourierSeries& f, const ExpVec& w);

// Normalized Hilbert Eisenstein series: constant zeta_F(1-k)/2^t and
// coefficient sigma_{k-1}(nu*D) at nu. Odd k >= 3 is accepted with constant
// term 0 (such series are never claimed to be modular forms).
FourierSeries eisenstein(long k, int disc, long trace_bound);

}  // namespace hmf::series
