#pragma once

#include <map>
#include <string>

#include "hmf/rational.hpp"

namespace hmf::sym {

// Exact bookkeeping for Petersson-norm scale factors: a value
//   rational * sqrt(D)^s * i^e * pi^p * prod zeta_F(arg)^mult
// with s in {0,1} (integer powers of D folded into the rational part) and
// e mod 4. A quotient whose transcendental parts cancel reduces to a pure
// rational.
struct SymbolicConstant {
  Rat rational = 0;
  int disc = 1;
  int sqrt_d_pow = 0;            // 0 or 1 after normalization
  int i_pow = 0;                 // 0..3 after normalization
  long pi_pow = 0;
  std::map<long, long> zeta_args;  // argument -> exponent, zero entries dropped

  static SymbolicConstant from_rat(Rat r, int disc);
  static SymbolicConstant sqrt_d(int disc);
  static SymbolicConstant i_unit(int disc);
  static SymbolicConstant pi_power(long e, int disc);
  static SymbolicConstant zeta_factor(long arg, int disc);

  void normalize();
  bool is_zero() const { return rational == 0; }
  bool is_pure_rational() const;
  Rat as_rational() const;  // throws unless pure rational

  SymbolicConstant operator*(const SymbolicConstant& o) const;
  SymbolicConstant operator/(const SymbolicConstant& o) const;
  SymbolicConstant pow(long e) const;

  bool operator==(const SymbolicConstant& o) const;
  std::string str() const;
};

}  // namespace hmf::sym
