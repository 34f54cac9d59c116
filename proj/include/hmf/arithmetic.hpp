#pragma once

#include <map>
#include <vector>

#include "hmf/rational.hpp"

namespace hmf::arith {

// Real quadratic fields of strict class number 1 whose fundamental unit has
// norm -1, plus D = 1 for the rational field. Everything downstream assumes
// one of these discriminants; class numbers are not computed here.
bool disc_supported(int disc);
const std::vector<int>& supported_discs();
void require_disc(int disc);

// Bernoulli number B_n in the convention B_1 = -1/2. Memoized.
Rat bernoulli(long n);

// Bernoulli polynomial B_n(x) evaluated at an exact rational.
Rat bernoulli_poly(long n, const Rat& x);

// Kronecker symbol (D/a), the real primitive character mod D attached to the
// field of discriminant D. Defined for every integer a.
int character(int disc, long a);

// Twisted Bernoulli number B_{n,chi} for chi = (D/.);
// computed as D^{n-1} * sum_{a=1..D} chi(a) B_n(a/D).
Rat twisted_bernoulli(long n, int disc);

// zeta_F(1-k) for even k >= 2: -B_k/k over the rationals, and
// zeta(1-k) * L(1-k, chi) = (B_k/k) * (B_{k,chi}/k) for D > 1. Memoized.
Rat zeta_f_neg(long k, int disc);

struct ZetaTable {
  int disc = 1;
  std::map<long, Rat> values;  // even k -> zeta_F(1-k)
};

ZetaTable zeta_table(int disc, long k_max);

}  // namespace hmf::arith
