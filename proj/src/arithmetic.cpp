#include "hmf/arithmetic.hpp"

#include <algorithm>
#include <stdexcept>

namespace hmf::arith {

const std::vector<int>& supported_discs() {
  static const std::vector<int> discs = {1, 5, 8, 13, 17, 29, 37, 41};
  return discs;
}

bool disc_supported(int disc) {
  const auto& v = supported_discs();
  return std::find(v.begin(), v.end(), disc) != v.end();
}

void require_disc(int disc) {
  if (!disc_supported(disc)) {
    throw std::domain_error("unsupported discriminant " + std::to_string(disc));
  }
}

Rat bernoulli(long n) {
  if (n < 0) throw std::domain_error("bernoulli: negative index");
  static std::vector<Rat> table = {Rat(1)};
  // sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1
  while ((long)table.size() <= n) {
    long m = (long)table.size();
    Rat acc = 0;
    for (long j = 0; j < m; ++j) acc += Rat(binomial(m + 1, j)) * table[j];
    table.push_back(-acc / Rat(m + 1));
  }
  return table[n];
}

Rat bernoulli_poly(long n, const Rat& x) {
  // B_n(x) = sum_j C(n,j) B_j x^{n-j}
  Rat acc = 0;
  for (long j = 0; j <= n; ++j) {
    acc += Rat(binomial(n, j)) * bernoulli(j) * rat_pow(x, n - j);
  }
  return acc;
}

namespace {

// Jacobi symbol (a/n) for odd n > 0.
int jacobi(long a, long n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int character(int disc, long a) {
  require_disc(disc);
  if (disc == 1) return a == 0 ? 0 : 1;
  // Kronecker symbol (D/a) with D > 0: split off the sign and the 2-part of a.
  if (a == 0) return 0;
  int result = 1;
  long n = a;
  if (n < 0) n = -n;  // (D/-1) = 1 for D > 0
  while (n % 2 == 0) {
    if (disc % 2 == 0) return 0;
    long r = disc % 8;
    if (r == 3 || r == 5) result = -result;
    n /= 2;
  }
  if (n == 1) return result;
  return result * jacobi(disc, n);
}

Rat twisted_bernoulli(long n, int disc) {
  require_disc(disc);
  if (disc == 1) throw std::domain_error("twisted_bernoulli needs D > 1");
  if (n < 1) throw std::domain_error("twisted_bernoulli: n must be positive");
  Rat acc = 0;
  for (long a = 1; a <= disc; ++a) {
    int chi = character(disc, a);
    if (chi == 0) continue;
    acc += Rat(chi) * bernoulli_poly(n, Rat(a, disc));
  }
  return acc * rat_pow(Rat(disc), n - 1);
}

Rat zeta_f_neg(long k, int disc) {
  require_disc(disc);
  if (k < 2 || k % 2 != 0) throw std::domain_error("zeta_f_neg: k must be even and >= 2");
  static std::map<std::pair<int, long>, Rat> cache;
  auto key = std::make_pair(disc, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Rat value;
  if (disc == 1) {
    value = -bernoulli(k) / Rat(k);
  } else {
    // zeta(1-k) = -B_k/k, L(1-k, chi) = -B_{k,chi}/k
    value = bernoulli(k) * twisted_bernoulli(k, disc) / Rat(k * k);
  }
  cache[key] = value;
  return value;
}

ZetaTable zeta_table(int disc, long k_max) {
  ZetaTable t;
  t.disc = disc;
  for (long k = 2; k <= k_max; k += 2) t.values[k] = zeta_f_neg(k, disc);
  return t;
}

}  // namespace hmf::arith
