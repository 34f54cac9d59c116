#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmf {

// All coefficient arithmetic in this library is exact. Rat is a reduced
// fraction of arbitrary-precision integers; no floating point appears
// anywhere in the computation paths or the output.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return 1;
  if (e < 0) {
    if (base == 0) throw std::domain_error("rat_pow: 0^negative");
    Rat inv = 1 / base;
    return rat_pow(inv, -e);
  }
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
  out.canonicalize();
  return out;
}

inline Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), (unsigned long)n);
  return out;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return out;
}

// Gamma(n) for positive integer n, as used in the Gamma(k-1)^t prefactors.
inline Int gamma_int(long n) {
  if (n < 1) throw std::domain_error("gamma_int needs n >= 1");
  return factorial(n - 1);
}

// Serialized as "num/den" ("num" when den == 1); the JSON output format.
inline std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace hmf
