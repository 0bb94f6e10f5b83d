#pragma once

#include <random>

#include "rigidpq/rigidity.hpp"

namespace gen {

using rigidpq::Int;

/// Each slot uniform among characters with the slot parity and a nonzero
/// canonical eigenspace (alpha, beta >= 1 and alpha + beta <= n - 1).
inline rigidpq::CharacterSextuple admissible_sextuple(Int n, std::mt19937_64& rng) {
  const rigidpq::GroupModulus m{n};
  std::array<rigidpq::Character, 6> slots;
  for (std::size_t i = 0; i < 6; ++i) {
    const auto want = rigidpq::kSlotParity[i / 2];
    for (;;) {
      const Int a = 1 + static_cast<Int>(rng() % (n - 2));
      const Int b = 1 + static_cast<Int>(rng() % (n - 2));
      if (a + b > n - 1 || a % 2 != want[0] || b % 2 != want[1]) continue;
      slots[i] = rigidpq::Character{m, a, b};
      break;
    }
  }
  return rigidpq::CharacterSextuple{slots};
}

/// chi(k_p)^{-1} read off directly: k_0 = k_1 = (1,0), k_inf = (0,1).
/// Entries are exponents of eta, -1 for zero.
inline std::vector<std::vector<Int>> obstruction_exponents(const rigidpq::CharacterSextuple& s,
                                                            Int n) {
  std::vector<std::vector<Int>> m(6, std::vector<Int>(6, -1));
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t col = 2 * (i / 2);
    m[i][col] = 0;
    m[i][col + 1] = (n - (i / 2 == 2 ? s[i].beta() : s[i].alpha())) % n;
  }
  return m;
}

}  // namespace gen
