#pragma once

#include "hmf/polyseries.hpp"

namespace hmf::kron {

using series::ExpVec;
using series::FourierSeries;
using series::Monomial;
using series::PolySeries;

struct Bounds {
  long trace_bound = 4;
  long xy_degree = -1;  // < 0 means no cap on stored monomial exponents
};

// Kuznetsov coefficient g_{h,l}: (-2)^t / (l! (l+h-1)!) * D^l G_{F,h} for even
// h >= 2, a unit scalar marker at (h, l) = (0, 0), zero otherwise. Odd h gives
// zero: the k = 0 layer of the series has leading coefficient 1 and the sum
// over weights contributes only even layers (the degree-1 theta quotient is
// odd under (u, v) -> (-u, -v), which kills every odd-weight term).
struct GCoefficient {
  long h = 0;
  ExpVec ell{0, 0};
  bool singular = false;  // the (0,0) layer, a bare 1/N(u) + 1/N(v) marker
  FourierSeries series;   // zero series when neither regular nor singular

  bool is_zero() const { return !singular && series.is_zero(); }
};

GCoefficient g_coefficient(long h, const ExpVec& ell, int disc, long trace_bound);

// Raw coefficient of the N(T)^{k-2} layer of F_tau(T,-XYT) * F_tau(XT,YT),
// assembled as the double sum over (h, l, h', l') with h + h' + 2(l + l') = k
// as a vector equation (h, h' parallel scalars, l + l' forced parallel).
// k = 0 gives the singular leading layer; odd k gives the empty series.
PolySeries product_layer(long k, int disc, const Bounds& bounds);

// The closed-form grade-0 layer (N(X)+N(Y))(N(XY)+(-1)^t) / N(XY)^2.
PolySeries leading_layer_closed_form(int disc, long trace_bound);

}  // namespace hmf::kron
