#pragma once

// Test-only oracles, independent of the library's Eisenstein builder.

#include "hmf/qseries.hpp"

namespace hmf_test {

// Delta = (E4^3 - E6^2)/1728 with E4, E6 assembled from raw divisor sums.
inline hmf::series::FourierSeries delta_oracle(long bound) {
  using namespace hmf;
  auto sigma = [](long n, long r) {
    Int acc = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) acc += int_pow(Int(d), r);
    return acc;
  };
  series::FourierSeries e4(1, bound), e6(1, bound);
  e4.constant = field::FieldElement::rational(1, 1);
  e6.constant = field::FieldElement::rational(1, 1);
  for (long n = 1; n <= bound; ++n) {
    e4.set_coeff(field::NuIndex(0, n, 1),
                 field::FieldElement::rational(Rat(240) * Rat(sigma(n, 3)), 1));
    e6.set_coeff(field::NuIndex(0, n, 1),
                 field::FieldElement::rational(Rat(-504) * Rat(sigma(n, 5)), 1));
  }
  series::FourierSeries num =
      series::sub(series::mul(series::mul(e4, e4), e4), series::mul(e6, e6));
  return series::scale(num, rat(1, 1728));
}

}  // namespace hmf_test
