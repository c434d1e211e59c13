#pragma once

#include "exactdet/matrix.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>

namespace exactdet {

/// Deterministic random integer matrices for benchmarks and property tests.
/// The generator is pinned to mt19937_64 with entries mapped as
///   lo + (next() mod (hi - lo + 1)),
/// filled in row-major order, so a (seed, n, lo, hi) quadruple reproduces the
/// same matrix on any platform. std::uniform_int_distribution is avoided on
/// purpose: its output is implementation-defined.
class RandomMatrixSource {
public:
  explicit RandomMatrixSource(std::uint64_t seed) : rng_(seed) {}

  RationalMatrix next(Index n, long long lo, long long hi) {
    if (hi < lo)
      throw std::invalid_argument("entry range is empty");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    RationalMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        m(i, j) = Rational(lo + static_cast<long long>(rng_() % span));
    return m;
  }

private:
  std::mt19937_64 rng_;
};

} // namespace exactdet
