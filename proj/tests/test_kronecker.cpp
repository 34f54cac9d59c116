#include "doctest.h"
#include "hmf/arithmetic.hpp"
#include "hmf/kronecker.hpp"
#include "hmf/theta.hpp"

using namespace hmf;
using namespace hmf::kron;
using series::ExpVec;
using series::expvec;
using series::FourierSeries;
using series::Monomial;

namespace {

Monomial par_mono(long p, long q, int t) {
  return t == 1 ? Monomial{expvec(p), expvec(q)}
                : Monomial{ExpVec{p, p}, ExpVec{q, q}};
}

}  // namespace

TEST_CASE("g coefficient table") {
  // weight 1 and odd weights give zero
  CHECK(g_coefficient(1, expvec(0, 0), 5, 2).is_zero());
  CHECK(g_coefficient(3, expvec(0, 0), 5, 2).is_zero());
  CHECK(g_coefficient(5, expvec(0), 1, 4).is_zero());
  // negative twist gives zero
  CHECK(g_coefficient(2, expvec(-1, 0), 5, 2).is_zero());
  // the singular marker
  auto g00 = g_coefficient(0, expvec(0, 0), 5, 2);
  CHECK(g00.singular);
  CHECK(g_coefficient(0, expvec(1, 0), 5, 2).is_zero());
  // (-2)^2 * (1/120) at h = 2, l = 0 over D = 5
  auto g20 = g_coefficient(2, expvec(0, 0), 5, 2);
  CHECK(g20.series.constant.a == rat(1, 30));
  // twist kills the constant
  CHECK(g_coefficient(2, expvec(1, 0), 5, 2).series.constant.is_zero());
}

TEST_CASE("theta series low-order data") {
  // theta'(0)/w = 1 - 3q + 5q^3 - 7q^6 + ...
  theta::QPol tp = theta::theta_prime0(8);
  CHECK(tp[0] == 1);
  CHECK(tp[1] == -3);
  CHECK(tp[2] == 0);
  CHECK(tp[3] == 5);
  CHECK(tp[6] == -7);
  // u-coefficient of theta at order w^1 is 1; theta is odd in u
  theta::ThetaSeries th = theta::theta(6, 7);
  CHECK(th.u_coeff[1][0] == 1);
  for (long j = 0; j <= th.u_order; j += 2) {
    for (long s = 0; s <= th.q_order; ++s) CHECK(th.u_coeff[j][s] == 0);
  }
}

TEST_CASE("theta quotient has the 1/u + 1/v singular part") {
  theta::BivSeries f_uv = theta::kronecker_via_theta(4, 4);
  // uv * F: coefficient of u^1 v^0 is 1 (i.e. 1/v in F), same for u^0 v^1
  CHECK(f_uv.at(1, 0)[0] == 1);
  CHECK(f_uv.at(0, 1)[0] == 1);
  CHECK(f_uv.at(0, 0)[0] == 0);
  // F is odd under (u,v) -> (-u,-v): even total degrees vanish
  for (long i = 0; i <= f_uv.deg; ++i)
    for (long j = 0; i + j <= f_uv.deg; ++j)
      if ((i + j) % 2 == 0)
        for (long s = 0; s <= f_uv.q_order; ++s) CHECK(f_uv.at(i, j)[s] == 0);
}

TEST_CASE("degree-1 oracle: Kuznetsov assembly equals the theta quotient") {
  auto rep = theta::theta_oracle_compare(6, 6);
  CHECK(rep.equal);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("including odd weights in the assembly would break the oracle") {
  // the q^1 u^0 v^2 coefficient of the quotient vanishes by parity, while a
  // weight-3 term would contribute -sigma_2(1) = -1 there
  theta::BivSeries f_uv = theta::kronecker_via_theta(2, 4);
  CHECK(f_uv.at(1, 3)[1] == 0);
  FourierSeries g3 = series::eisenstein(3, 1, 2);
  CHECK(g3.coeff(field::NuIndex(0, 1, 1)).a == 1);  // the would-be term
}

TEST_CASE("grade-0 layer reproduces the closed-form leading term") {
  for (int disc : {1, 5}) {
    PolySeries lead = product_layer(0, disc, Bounds{3, -1});
    CHECK(lead == leading_layer_closed_form(disc, 3));
  }
}

TEST_CASE("grade-1 and odd grades are empty") {
  CHECK(product_layer(1, 5, Bounds{3, -1}).is_zero());
  CHECK(product_layer(3, 5, Bounds{3, -1}).is_zero());
  CHECK(product_layer(5, 1, Bounds{4, -1}).is_zero());
}

TEST_CASE("grade-2 layer over Q(sqrt5): 8 (N(X)+N(Y))(N(XY)+1)/N(XY) G_2") {
  PolySeries layer = product_layer(2, 5, Bounds{4, -1});
  FourierSeries g2 = series::eisenstein(2, 5, 4);
  FourierSeries expect = series::scale(g2, Rat(8));
  CHECK(layer.mono.size() == 4);
  CHECK(layer.coeff(par_mono(1, 0, 2)) == expect);
  CHECK(layer.coeff(par_mono(0, 1, 2)) == expect);
  CHECK(layer.coeff(par_mono(-1, 0, 2)) == expect);
  CHECK(layer.coeff(par_mono(0, -1, 2)) == expect);
}

TEST_CASE("layers are symmetric under X <-> Y") {
  for (int disc : {1, 5}) {
    for (long k : {2L, 4L, 6L}) {
      PolySeries layer = product_layer(k, disc, Bounds{3, -1});
      CHECK(layer == series::swap_xy(layer));
    }
  }
}

TEST_CASE("monomial reflection symmetry p,q -> k-2-q, k-2-p") {
  // coefficient at N(X)^p N(Y)^q maps to N(X)^{k-2-q} N(Y)^{k-2-p} with the
  // sign (-XY)-parity gives; over t = 2 the sign is +1
  for (long k : {4L, 6L, 8L}) {
    PolySeries layer = product_layer(k, 5, Bounds{3, -1});
    for (const auto& [m, s] : layer.mono) {
      Monomial reflected{ExpVec{k - 2 - m.y[0], k - 2 - m.y[1]},
                         ExpVec{k - 2 - m.x[0], k - 2 - m.x[1]}};
      CHECK(layer.coeff(reflected) == s);
    }
  }
}

TEST_CASE("parallel collapse and rationality of even layers over Q(sqrt5)") {
  for (long k : {2L, 4L, 6L, 8L, 10L}) {
    PolySeries layer = product_layer(k, 5, Bounds{3, -1});
    for (const auto& [m, s] : layer.mono) {
      CHECK(series::exp_parallel(m.x, 2));
      CHECK(series::exp_parallel(m.y, 2));
      CHECK(s.is_rational());
    }
  }
}

TEST_CASE("grade-12 layer over Q contains Delta") {
  // b_12 minus its Eisenstein part is rank one with q-factor proportional to
  // Delta = q - 24q^2 + 252q^3 - 1472q^4 ...; checked fully in the periods
  // suite, here just the layer's interior monomial structure
  PolySeries layer = product_layer(12, 1, Bounds{5, -1});
  // (1,2) gets no Eisenstein contribution (p+ is supported on {0, 10}), so
  // that monomial's series is a pure cusp multiple: no constant term
  FourierSeries c = layer.coeff(par_mono(1, 2, 1));
  CHECK(!c.is_zero());
  CHECK(c.constant.is_zero());
  // (0,1) does carry the Eisenstein series: nonzero constant
  CHECK(!layer.coeff(par_mono(0, 1, 1)).constant.is_zero());
}

TEST_CASE("xy-degree cap filters stored monomials") {
  PolySeries capped = product_layer(6, 5, Bounds{3, 2});
  for (const auto& [m, s] : capped.mono) {
    CHECK(m.x[0] <= 2);
    CHECK(m.y[0] <= 2);
  }
}
