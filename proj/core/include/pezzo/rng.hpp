#pragma once

#include <cstdint>
#include <random>

#include "pezzo/linalg.hpp"

namespace pezzo {

/// Deterministic sampling helper for the property suites.  Draws go
/// through modular reduction of the raw engine output, so sequences are
/// identical across standard library implementations.
class SampleRng {
 public:
  explicit SampleRng(uint64_t seed) : eng_(seed) {}

  int64_t int_in(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(eng_() % static_cast<uint64_t>(hi - lo + 1));
  }

  Rational small_int(int bound = 9) {
    return Rational(BigInt(int_in(-bound, bound)));
  }

  Rational nonzero_int(int bound = 9) {
    while (true) {
      Rational r = small_int(bound);
      if (r != 0) return r;
    }
  }

  Rational rational(int num_bound = 9, int den_bound = 4) {
    return ratio(BigInt(int_in(-num_bound, num_bound)),
                 BigInt(int_in(1, den_bound)));
  }

  RatVector vec(std::size_t n, int bound = 9) {
    RatVector v(n);
    for (auto& x : v) x = small_int(bound);
    return v;
  }

  RatMatrix mat(std::size_t rows, std::size_t cols, int bound = 9) {
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = small_int(bound);
    return m;
  }

  /// Random rank-r matrix via resampling.
  RatMatrix full_rank_mat(std::size_t rows, std::size_t cols, int bound = 4) {
    while (true) {
      RatMatrix m = mat(rows, cols, bound);
      if (rank(m) == std::min(rows, cols)) return m;
    }
  }

  RatMatrix skew(std::size_t n, int bound = 9) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m.at(i, j) = small_int(bound);
        m.at(j, i) = -m.at(i, j);
      }
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace pezzo
