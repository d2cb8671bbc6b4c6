#pragma once

#include <random>

#include "fano/lattice.hpp"

namespace fano::testing {

// Random element of GL_n(Z) as a short product of shears, swaps and sign
// flips; entries stay small for n <= 7.
inline UnimodularMap random_unimodular(int n, std::mt19937& rng) {
  Mat m = Mat::identity(n);
  std::uniform_int_distribution<int> row(0, n - 1), op(0, 2), sign(0, 1);
  for (int step = 0; step < 3 * n; ++step) {
    int i = row(rng), j = row(rng);
    switch (op(rng)) {
      case 0:  // shear: row_i += +-row_j
        if (i != j) {
          Int s = sign(rng) ? 1 : -1;
          for (int c = 0; c < n; ++c)
            m.at(i, c) = checked_add(m.at(i, c), checked_mul(s, m.at(j, c)));
        }
        break;
      case 1:  // swap
        for (int c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(j, c));
        break;
      default:  // negate a row
        for (int c = 0; c < n; ++c) m.at(i, c) = -m.at(i, c);
        break;
    }
  }
  return UnimodularMap(std::move(m));
}

}  // namespace fano::testing
