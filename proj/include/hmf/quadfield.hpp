#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf::field {

// Number of real embeddings: 1 for the rational field, 2 otherwise.
inline int degree(int disc) { return disc == 1 ? 1 : 2; }

// An element a + b*sqrt(D) of Q(sqrt(D)), exact. For D = 1 the coefficient b
// is identically zero and the element is the rational a.
struct FieldElement {
  Rat a;
  Rat b;
  int disc = 1;

  FieldElement() = default;
  FieldElement(Rat a_, Rat b_, int disc_) : a(std::move(a_)), b(std::move(b_)), disc(disc_) {
    a.canonicalize();
    b.canonicalize();
  }
  static FieldElement rational(Rat r, int disc_) { return FieldElement(std::move(r), 0, disc_); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  FieldElement conj() const { return disc == 1 ? *this : FieldElement(a, -b, disc); }
  Rat norm() const { return disc == 1 ? a : a * a - Rat(disc) * b * b; }
  Rat trace() const { return disc == 1 ? a : Rat(2) * a; }

  // Sign of a + b*sqrt(D) without floating point.
  int sign() const;
  bool totally_positive() const;

  FieldElement operator-() const { return FieldElement(-a, -b, disc); }
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator*(const Rat& c) const { return FieldElement(a * c, b * c, disc); }
  FieldElement inverse() const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement pow(long e) const;

  bool operator==(const FieldElement& o) const { return disc == o.disc && a == o.a && b == o.b; }

  // Membership in the ring of integers O of the field with discriminant disc.
  bool is_integral() const;

  std::string str() const;
};

// A totally positive element nu of the inverse different, encoded as
// nu = (m + n*sqrt(D)) / (2*sqrt(D)). Integrality of nu*D forces m = n (mod 2)
// for D = 1 (mod 4) and m = 0 (mod 2) for D = 0 (mod 4); trace(nu) = n.
// For D = 1 the index is just the positive integer n (m stays 0).
struct NuIndex {
  long m = 0;
  long n = 0;
  int disc = 1;

  NuIndex() = default;
  NuIndex(long m_, long n_, int disc_) : m(m_), n(n_), disc(disc_) {}

  long trace() const { return n; }
  bool valid() const;
  FieldElement value() const;

  // Generator nu * sqrt(D) of the integral ideal nu*D (nu itself for D = 1).
  FieldElement ideal_generator() const;
  Int ideal_norm() const;  // |N(nu*D)|, a positive integer

  auto operator<=>(const NuIndex& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    return m <=> o.m;
  }
  bool operator==(const NuIndex& o) const = default;
};

// Fundamental unit data; every supported D > 1 has a negative-norm unit.
struct UnitData {
  FieldElement fundamental_unit;        // smallest unit > 1
  int norm_of_unit = 0;                 // always -1 on the allowlist
  FieldElement coefficient_orbit_generator;  // epsilon_0^2, totally positive
};

// Fundamental unit via the continued-fraction expansion of (1+sqrt(D))/2
// (D odd) or sqrt(D/4) (D even).
FieldElement fundamental_unit(int disc);
const UnitData& unit_data(int disc);

// Every totally positive nu in the inverse different with trace(nu) <= bound,
// ordered lexicographically by (n, m). Complete and duplicate-free.
std::vector<NuIndex> enumerate_indices(int disc, long trace_bound);

// Unique representative of the orbit {eta^2 nu : eta a unit} with minimal
// trace, ties broken by minimal m. Idempotent.
NuIndex canonical_rep(const NuIndex& nu);

// sigma_r(nu*D) = sum of N(c)^r over integral ideal divisors c of nu*D.
Int divisor_sum(const NuIndex& nu, long r);

// sigma_r of the principal ideal generated by an integral alpha != 0.
Int sigma_of_element(const FieldElement& alpha, long r);

// Index nu3 with nu3*D = (nu1*D)(nu2*D) as ideals, canonicalized.
NuIndex index_product(const NuIndex& nu1, const NuIndex& nu2);

// Splitting data for a rational prime: the prime ideals above p.
struct PrimeIdeal {
  FieldElement generator;
  Int norm;         // p or p^2
  int ramification;  // +1 split, -1 inert, 0 ramified
};
std::vector<PrimeIdeal> primes_above(int disc, long p);

}  // namespace hmf::field
