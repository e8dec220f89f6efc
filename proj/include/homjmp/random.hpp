#pragma once

#include <cstdint>
#include <random>

#include "homjmp/linalg.hpp"

namespace homjmp {

/// Seeded source of small random rationals for sampled probes.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Scalar scalar() {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    return Scalar(num(rng_), den(rng_));
  }

  Scalar nonzero_scalar() {
    Scalar s;
    do s = scalar();
    while (s.is_zero());
    return s;
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = scalar();
    return v;
  }

  Matrix matrix(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar();
    return m;
  }

  Tensor3 tensor(std::size_t n) {
    Tensor3 t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) t(i, j, k) = scalar();
    return t;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace homjmp
