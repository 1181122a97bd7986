#pragma once

#include <random>

#include "hopflab/catalog.hpp"

namespace testing {

using namespace hopflab;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + 1); }

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline Scalar random_rational(std::mt19937_64& g, const Field& f, long bound = 9) {
  long d = uniform(g, 1, bound);
  return f.make(uniform(g, -bound, bound), d);
}

inline Scalar random_nonzero(std::mt19937_64& g, const Field& f, long bound = 9) {
  for (;;) {
    Scalar x = random_rational(g, f, bound);
    if (!x.is_zero()) return x;
  }
}

inline Matrix random_matrix(std::mt19937_64& g, const Field& f, std::size_t r, std::size_t c, long bound = 5) {
  Matrix m(r, c);
  for (auto& x : m.data()) x = f.make(uniform(g, -bound, bound));
  return m;
}

}  // namespace testing
