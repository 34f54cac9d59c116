#include "hmf/kronecker.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include "hmf/arithmetic.hpp"

namespace hmf::kron {

namespace {

int parity_sign(long total) { return (total % 2 + 2) % 2 == 0 ? 1 : -1; }

const FourierSeries& g_series_cached(long h, const ExpVec& ell, int disc, long trace_bound) {
  static std::map<std::tuple<int, long, long, long, long>, FourierSeries> cache;
  auto key = std::make_tuple(disc, trace_bound, h, ell[0], ell[1]);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  int t = field::degree(disc);
  FourierSeries g = series::nu_twist(series::eisenstein(h, disc, trace_bound), ell);
  Rat denom(factorial(ell[0]) * factorial(ell[0] + h - 1));
  if (t == 2) denom *= Rat(factorial(ell[1]) * factorial(ell[1] + h - 1));
  g = series::scale(g, rat_pow(Rat(-2), t) / denom);
  return cache.emplace(key, std::move(g)).first->second;
}

}  // namespace

GCoefficient g_coefficient(long h, const ExpVec& ell, int disc, long trace_bound) {
  arith::require_disc(disc);
  int t = field::degree(disc);
  GCoefficient out;
  out.h = h;
  out.ell = ell;
  out.series = FourierSeries::zero(disc, trace_bound);
  if (ell[0] < 0 || (t == 2 && ell[1] < 0)) return out;
  if (h == 0) {
    if (ell[0] == 0 && (t == 1 || ell[1] == 0)) out.singular = true;
    return out;
  }
  if (h < 2 || h % 2 != 0) return out;
  out.series = g_series_cached(h, ell, disc, trace_bound);
  return out;
}

PolySeries product_layer(long k, int disc, const Bounds& bounds) {
  arith::require_disc(disc);
  if (k < 0) throw std::domain_error("product_layer: negative grade");
  int t = field::degree(disc);
  long B = bounds.trace_bound;
  PolySeries out(disc, k, B);
  const FourierSeries one = FourierSeries::one(disc, B);

  for (long h = 0; h <= k; h += 2) {
    for (long hp = 0; k - h - hp >= 0; hp += 2) {
      long rem = k - h - hp;
      if (rem % 2 != 0) continue;
      long s = rem / 2;
      for (long l0 = 0; l0 <= s; ++l0) {
        long l1_max = (t == 2) ? s : 0;
        for (long l1 = 0; l1 <= l1_max; ++l1) {
          ExpVec ell{l0, l1};
          ExpVec ellp{s - l0, t == 2 ? s - l1 : 0};
          if (h == 0 && (ell[0] != 0 || ell[1] != 0)) continue;
          if (hp == 0 && (ellp[0] != 0 || ellp[1] != 0)) continue;
          // For t = 2 a singular factor pairs only with an untwisted partner:
          // the twisted cross terms are non-modular (multiples of D^l G_h) and
          // the layer identity requires their absence. For t = 1 they are
          // genuinely part of the theta quotient; quasimodularity of the
          // weight-2 series absorbs them into the layer identities.
          bool twisted = (ell[0] | ell[1] | ellp[0] | ellp[1]) != 0;
          if (t == 2 && twisted && (h == 0 || hp == 0)) continue;
          GCoefficient g1 = g_coefficient(h, ell, disc, B);
          GCoefficient g2 = g_coefficient(hp, ellp, disc, B);
          if (g1.is_zero() || g2.is_zero()) continue;

          FourierSeries prod;
          if (g1.singular && g2.singular)
            prod = one;
          else if (g1.singular)
            prod = g2.series;
          else if (g2.singular)
            prod = g1.series;
          else
            prod = series::mul(g1.series, g2.series);

          // factor from F(T,-XYT): (-XY)^{l+h-1} + (-XY)^{l}
          struct XYPart {
            ExpVec e;
            int sign;
          };
          XYPart a1{series::exp_shift(ell, h - 1, t),
                    parity_sign(series::exp_total(series::exp_shift(ell, h - 1, t), t))};
          XYPart a2{ell, parity_sign(series::exp_total(ell, t))};
          // factor from F(XT,YT): X^{l'} Y^{l'+h'-1} + X^{l'+h'-1} Y^{l'}
          ExpVec ellp_sh = series::exp_shift(ellp, hp - 1, t);
          struct XYSplit {
            ExpVec x, y;
          };
          XYSplit b1{ellp, ellp_sh};
          XYSplit b2{ellp_sh, ellp};

          for (const XYPart& a : {a1, a2}) {
            for (const XYSplit& b : {b1, b2}) {
              Monomial mono{series::exp_add(a.e, b.x), series::exp_add(a.e, b.y)};
              if (bounds.xy_degree >= 0 &&
                  (mono.x[0] > bounds.xy_degree || mono.y[0] > bounds.xy_degree ||
                   mono.x[1] > bounds.xy_degree || mono.y[1] > bounds.xy_degree))
                continue;
              out.accumulate(mono, series::scale(prod, Rat(a.sign)));
            }
          }
        }
      }
    }
  }
  out.prune();
  return out;
}

PolySeries leading_layer_closed_form(int disc, long trace_bound) {
  int t = field::degree(disc);
  PolySeries out(disc, 0, trace_bound);
  const FourierSeries one = FourierSeries::one(disc, trace_bound);
  const FourierSeries sign_t = series::scale(one, Rat(t == 1 ? -1 : 1));
  // (N(X)+N(Y))(N(XY)+(-1)^t)/N(XY)^2 expanded into four Laurent monomials
  auto par = [&](long e) { return series::exp_shift(ExpVec{0, 0}, e, t); };
  out.accumulate(Monomial{par(0), par(-1)}, one);
  out.accumulate(Monomial{par(-1), par(0)}, one);
  out.accumulate(Monomial{par(-1), par(-2)}, sign_t);
  out.accumulate(Monomial{par(-2), par(-1)}, sign_t);
  return out;
}

}  // namespace hmf::kron
