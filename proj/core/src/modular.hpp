#pragma once

#include <stdexcept>

namespace pdc::detail {

// Inverse of a modulo m for coprime a, m >= 1; result in [0, m).
inline int mod_inverse(int a, int m) {
  int r0 = m, r1 = ((a % m) + m) % m;
  int s0 = 0, s1 = 1;
  while (r1 != 0) {
    const int q = r0 / r1;
    const int r2 = r0 - q * r1;
    const int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw std::logic_error("mod_inverse of non-coprime arguments");
  return ((s0 % m) + m) % m;
}

}  // namespace pdc::detail
