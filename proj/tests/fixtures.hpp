#pragma once

#include <vector>

#include "homjmp/constructions.hpp"
#include "homjmp/io.hpp"

namespace fixtures {

using namespace homjmp;

inline Vector e(std::size_t n, std::size_t i) { return basis_vector(n, i); }

inline std::vector<Scalar> ex3_lambdas() { return {Scalar(2), Scalar(3), Scalar(5, 7), Scalar(-4)}; }

/// Pseudo-Euclidean JMP built from the T*-extension of ex3-flat, twisted by θ ⊕ θᵀ.
inline AlgebraDocument p6(const std::string& theta = "swap", bool twisted = true) {
  return example("p6", {{"theta", theta}, {"twisted", twisted ? "1" : "0"}});
}

inline HomJMPAlgebra jmp_of(const AlgebraDocument& d) { return std::get<HomJMPAlgebra>(d.structure); }

}  // namespace fixtures
