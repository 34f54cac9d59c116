#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "hmf/arithmetic.hpp"
#include "hmf/quadfield.hpp"

using namespace hmf;
using namespace hmf::field;

namespace {

FieldElement fe(long a_num, long a_den, long b_num, long b_den, int disc) {
  return FieldElement(rat(a_num, a_den), rat(b_num, b_den), disc);
}

// Brute-force divisor oracle: every ideal divisor of (alpha), enumerated as
// elements of bounded height dividing alpha, deduplicated by associateness.
std::vector<FieldElement> divisors_brute(const FieldElement& alpha) {
  int D = alpha.disc;
  std::vector<FieldElement> out;
  Rat n = alpha.norm();
  long nabs = labs(n.get_num().get_si());
  long bound = 8 * nabs + 16;
  auto divides = [](const FieldElement& g, const FieldElement& x) {
    return !(g.is_zero()) && (x / g).is_integral();
  };
  auto associate = [&](const FieldElement& g1, const FieldElement& g2) {
    return divides(g1, g2) && divides(g2, g1);
  };
  for (long x = -bound; x <= bound; ++x) {
    for (long y = -bound / 2; y <= bound / 2; ++y) {
      FieldElement cand = fe(x, 2, y, 2, D);
      if (cand.is_zero() || !cand.is_integral()) continue;
      Rat cn = cand.norm();
      if (abs(cn.get_num()) > nabs) continue;
      if (!divides(cand, alpha)) continue;
      bool seen = false;
      for (const auto& d : out)
        if (associate(cand, d)) seen = true;
      if (!seen) out.push_back(cand);
    }
  }
  return out;
}

Int sigma_brute(const FieldElement& alpha, long r) {
  Int acc = 0;
  for (const auto& d : divisors_brute(alpha)) {
    Rat n = d.norm();
    Int nn = abs(n.get_num());
    acc += int_pow(nn, (unsigned long)r);
  }
  return acc;
}

}  // namespace

TEST_CASE("field element arithmetic basics") {
  FieldElement phi = fe(1, 2, 1, 2, 5);
  CHECK(phi.norm() == Rat(-1));
  CHECK(phi.trace() == Rat(1));
  CHECK(phi.conj().conj() == phi);
  CHECK(phi.is_integral());
  CHECK((phi * phi.inverse()) == FieldElement::rational(1, 5));
  CHECK(phi.pow(3) == fe(2, 1, 1, 1, 5));  // phi^3 = 2 + sqrt5
  CHECK(phi.totally_positive() == false);  // conjugate embedding negative
  CHECK((phi * phi).totally_positive());
}

TEST_CASE("sign without floating point") {
  CHECK(fe(2, 1, -1, 1, 5).sign() == -1);  // 2 - sqrt5 < 0
  CHECK(fe(3, 1, -1, 1, 5).sign() == 1);   // 3 - sqrt5 > 0
  CHECK(fe(-2, 1, 1, 1, 5).sign() == 1);   // sqrt5 - 2 > 0
  CHECK(fe(0, 1, 0, 1, 5).sign() == 0);
}

TEST_CASE("integrality per discriminant class") {
  CHECK(fe(1, 2, 1, 2, 5).is_integral());
  CHECK(!fe(1, 2, 0, 1, 5).is_integral());
  CHECK(fe(3, 1, 1, 2, 8).is_integral());  // 3 + sqrt2
  CHECK(!fe(1, 2, 1, 2, 8).is_integral());
  CHECK(fe(7, 1, 0, 1, 1).is_integral());
  CHECK(!fe(1, 2, 0, 1, 1).is_integral());
}

TEST_CASE("fundamental units via continued fractions") {
  CHECK(fundamental_unit(5) == fe(1, 2, 1, 2, 5));    // (1+sqrt5)/2
  CHECK(fundamental_unit(8) == fe(1, 1, 1, 2, 8));    // 1+sqrt2
  CHECK(fundamental_unit(13) == fe(3, 2, 1, 2, 13));  // (3+sqrt13)/2
  CHECK(fundamental_unit(17) == fe(4, 1, 1, 1, 17));  // 4+sqrt17
  CHECK(fundamental_unit(29) == fe(5, 2, 1, 2, 29));
  CHECK(fundamental_unit(37) == fe(6, 1, 1, 1, 37));
  CHECK(fundamental_unit(41) == fe(32, 1, 5, 1, 41));
  CHECK_THROWS(fundamental_unit(1));
}

TEST_CASE("fundamental unit is minimal (brute force cross-check)") {
  for (int D : arith::supported_discs()) {
    if (D == 1) continue;
    FieldElement eps = fundamental_unit(D);
    Rat n = eps.norm();
    CHECK((n == 1 || n == -1));
    CHECK(eps.sign() > 0);
    // no unit strictly between 1 and eps
    for (long x = 1; Rat(x, 2) < eps.a; ++x) {
      for (long y = 1; y <= x + 2; ++y) {
        FieldElement cand = fe(x, 2, y, 2, D);
        if (!cand.is_integral()) continue;
        Rat cn = cand.norm();
        if (cn != 1 && cn != -1) continue;
        CHECK(!(cand.sign() > 0 && (cand - FieldElement::rational(1, D)).sign() > 0 &&
                (eps - cand).sign() > 0));
      }
    }
  }
}

TEST_CASE("unit data invariants") {
  for (int D : {5, 8, 13, 17, 29, 37, 41}) {
    const UnitData& u = unit_data(D);
    CHECK(u.norm_of_unit == -1);
    CHECK(u.coefficient_orbit_generator.totally_positive());
    CHECK(u.coefficient_orbit_generator == u.fundamental_unit * u.fundamental_unit);
  }
}

TEST_CASE("index enumeration over Q(sqrt5)") {
  auto one = enumerate_indices(5, 1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == NuIndex(-1, 1, 5));
  CHECK(one[1] == NuIndex(1, 1, 5));
  auto two = enumerate_indices(5, 2);
  REQUIRE(two.size() == 7);
  CHECK(two[2] == NuIndex(-4, 2, 5));
  CHECK(two[3] == NuIndex(-2, 2, 5));
  CHECK(two[4] == NuIndex(0, 2, 5));
  CHECK(two[5] == NuIndex(2, 2, 5));
  CHECK(two[6] == NuIndex(4, 2, 5));
}

TEST_CASE("index enumeration rational case") {
  auto idx = enumerate_indices(1, 3);
  REQUIRE(idx.size() == 3);
  for (long i = 0; i < 3; ++i) CHECK(idx[i] == NuIndex(0, i + 1, 1));
}

TEST_CASE("enumeration prefix property and exact positivity") {
  for (int D : {5, 8, 13, 41}) {
    auto small = enumerate_indices(D, 3);
    auto large = enumerate_indices(D, 6);
    REQUIRE(small.size() <= large.size());
    for (size_t i = 0; i < small.size(); ++i) CHECK(small[i] == large[i]);
    for (const auto& nu : large) {
      CHECK(nu.valid());
      CHECK(Int(nu.n) * nu.n * D > Int(nu.m) * nu.m);
      CHECK(nu.value().totally_positive());
    }
  }
}

TEST_CASE("canonical representative") {
  // the two trace-1 indices over D=5 form a single orbit
  NuIndex a(-1, 1, 5), b(1, 1, 5);
  CHECK(canonical_rep(a) == canonical_rep(b));
  CHECK(canonical_rep(a).trace() == 1);
  for (int D : {5, 8}) {
    for (const auto& nu : enumerate_indices(D, 6)) {
      NuIndex c = canonical_rep(nu);
      CHECK(canonical_rep(c) == c);  // idempotent
      CHECK(c.trace() <= nu.trace());
    }
  }
  // multiplying (-1,1) by phi^2 lands on (1,1), the orbit mate
  const auto& u = unit_data(5);
  FieldElement moved = a.value() * u.coefficient_orbit_generator;
  Rat nr = 2 * moved.a, mr = 10 * moved.b;
  NuIndex translated(mr.get_num().get_si(), nr.get_num().get_si(), 5);
  CHECK(translated == b);
  CHECK(canonical_rep(translated) == canonical_rep(a));
}

TEST_CASE("divisor sums over Q(sqrt5)") {
  CHECK(divisor_sum(NuIndex(1, 1, 5), 1) == 1);    // unit ideal
  CHECK(divisor_sum(NuIndex(0, 2, 5), 1) == 6);    // ramified (sqrt5): 1+5
  CHECK(divisor_sum(NuIndex(2, 2, 5), 1) == 5);    // inert (2): 1+4
  CHECK(divisor_sum(NuIndex(4, 2, 5), 1) == 1);    // unit ideal again
  CHECK(divisor_sum(NuIndex(0, 2, 5), 3) == 126);  // 1 + 125
}

TEST_CASE("divisor sums match brute-force enumeration") {
  for (int D : {5, 8}) {
    for (const auto& nu : enumerate_indices(D, 5)) {
      FieldElement alpha = nu.ideal_generator();
      for (long r : {0L, 1L, 2L}) {
        CHECK(divisor_sum(nu, r) == sigma_brute(alpha, r));
      }
    }
  }
}

TEST_CASE("divisor sum is constant on orbits") {
  for (int D : {5, 8}) {
    for (const auto& nu : enumerate_indices(D, 6)) {
      for (long r : {1L, 3L}) {
        CHECK(divisor_sum(nu, r) == divisor_sum(canonical_rep(nu), r));
      }
    }
  }
}

TEST_CASE("sigma multiplicativity on coprime ideal products") {
  for (int D : {5, 8}) {
    auto indices = enumerate_indices(D, 4);
    for (const auto& n1 : indices) {
      for (const auto& n2 : indices) {
        Int a = n1.ideal_norm(), b = n2.ideal_norm();
        if (gcd(a, b) != 1) continue;
        NuIndex prod = index_product(n1, n2);
        CHECK(prod.ideal_norm() == a * b);
        for (long r : {1L, 2L}) {
          CHECK(divisor_sum(prod, r) == divisor_sum(n1, r) * divisor_sum(n2, r));
        }
      }
    }
  }
}

TEST_CASE("primes above rational primes") {
  auto p5 = primes_above(5, 5);
  REQUIRE(p5.size() == 1);
  CHECK(p5[0].ramification == 0);
  CHECK(p5[0].norm == 5);
  auto p2 = primes_above(5, 2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].ramification == -1);
  CHECK(p2[0].norm == 4);
  auto p11 = primes_above(5, 11);
  REQUIRE(p11.size() == 2);
  CHECK(p11[0].ramification == 1);
  CHECK(abs(p11[0].generator.norm().get_num()) == 11);
  // 2 splits in Q(sqrt17)
  auto q2 = primes_above(17, 2);
  REQUIRE(q2.size() == 2);
  CHECK(q2[0].norm == 2);
}
