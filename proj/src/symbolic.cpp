#include "hmf/symbolic.hpp"

#include <sstream>
#include <stdexcept>

namespace hmf::sym {

SymbolicConstant SymbolicConstant::from_rat(Rat r, int disc) {
  SymbolicConstant c;
  c.rational = std::move(r);
  c.disc = disc;
  return c;
}

SymbolicConstant SymbolicConstant::sqrt_d(int disc) {
  SymbolicConstant c = from_rat(1, disc);
  c.sqrt_d_pow = 1;
  return c;
}

SymbolicConstant SymbolicConstant::i_unit(int disc) {
  SymbolicConstant c = from_rat(1, disc);
  c.i_pow = 1;
  return c;
}

SymbolicConstant SymbolicConstant::pi_power(long e, int disc) {
  SymbolicConstant c = from_rat(1, disc);
  c.pi_pow = e;
  return c;
}

SymbolicConstant SymbolicConstant::zeta_factor(long arg, int disc) {
  if (arg == 1) throw std::domain_error("zeta_F(1) diverges");
  SymbolicConstant c = from_rat(1, disc);
  c.zeta_args[arg] = 1;
  return c;
}

void SymbolicConstant::normalize() {
  if (rational == 0) {
    sqrt_d_pow = 0;
    i_pow = 0;
    pi_pow = 0;
    zeta_args.clear();
    return;
  }
  // fold sqrt(D)^2 = D and i^2 = -1 into the rational part
  while (sqrt_d_pow >= 2) {
    rational *= disc;
    sqrt_d_pow -= 2;
  }
  while (sqrt_d_pow < 0) {
    rational /= disc;
    sqrt_d_pow += 2;
  }
  i_pow = ((i_pow % 4) + 4) % 4;
  if (i_pow >= 2) {
    rational = -rational;
    i_pow -= 2;
  }
  for (auto it = zeta_args.begin(); it != zeta_args.end();) {
    if (it->second == 0)
      it = zeta_args.erase(it);
    else
      ++it;
  }
}

bool SymbolicConstant::is_pure_rational() const {
  return rational == 0 ||
         (sqrt_d_pow == 0 && i_pow == 0 && pi_pow == 0 && zeta_args.empty());
}

Rat SymbolicConstant::as_rational() const {
  if (!is_pure_rational()) throw std::domain_error("symbolic constant is not rational: " + str());
  return rational;
}

SymbolicConstant SymbolicConstant::operator*(const SymbolicConstant& o) const {
  if (disc != o.disc) throw std::domain_error("discriminant mismatch");
  SymbolicConstant c = *this;
  c.rational *= o.rational;
  c.sqrt_d_pow += o.sqrt_d_pow;
  c.i_pow += o.i_pow;
  c.pi_pow += o.pi_pow;
  for (const auto& [arg, e] : o.zeta_args) c.zeta_args[arg] += e;
  c.normalize();
  return c;
}

SymbolicConstant SymbolicConstant::operator/(const SymbolicConstant& o) const {
  if (o.rational == 0) throw std::domain_error("division by zero symbolic constant");
  SymbolicConstant inv = o;
  inv.rational = 1 / o.rational;
  inv.sqrt_d_pow = -o.sqrt_d_pow;
  inv.i_pow = -o.i_pow;
  inv.pi_pow = -o.pi_pow;
  for (auto& [arg, e] : inv.zeta_args) e = -e;
  inv.normalize();
  return *this * inv;
}

SymbolicConstant SymbolicConstant::pow(long e) const {
  SymbolicConstant out = from_rat(1, disc);
  SymbolicConstant base = *this;
  long n = e < 0 ? -e : e;
  for (long i = 0; i < n; ++i) out = out * base;
  if (e < 0) out = from_rat(1, disc) / out;
  return out;
}

bool SymbolicConstant::operator==(const SymbolicConstant& o) const {
  SymbolicConstant a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.rational == b.rational && a.disc == b.disc && a.sqrt_d_pow == b.sqrt_d_pow &&
         a.i_pow == b.i_pow && a.pi_pow == b.pi_pow && a.zeta_args == b.zeta_args;
}

std::string SymbolicConstant::str() const {
  std::ostringstream os;
  os << rat_str(rational);
  if (sqrt_d_pow) os << " * sqrt(" << disc << ")";
  if (i_pow) os << " * i^" << i_pow;
  if (pi_pow) os << " * pi^" << pi_pow;
  for (const auto& [arg, e] : zeta_args) {
    os << " * zeta_F(" << arg << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace hmf::sym
