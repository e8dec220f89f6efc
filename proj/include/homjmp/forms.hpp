#pragma once

#include <map>
#include <optional>
#include <string>

#include "homjmp/identity.hpp"
#include "homjmp/triples.hpp"

namespace homjmp {

struct FormFlags {
  bool symmetric = false;
  bool nondegenerate = false;
  /// Per product name ("mul", or "bracket" and "jordan"): B(p(x,y),z) = B(x,p(y,z)).
  std::map<std::string, bool> invariant;
  bool alpha_compatible = false;
  /// Present only when γ was supplied: B(p(x,y),γz) = B(γx,p(y,z)) for every product.
  std::optional<bool> gamma_invariant;
};

/// Throws DimensionMismatch on shape errors and PreconditionFailed when γ is
/// not a weak morphism.
FormFlags check_form_properties(const HomAlgebra& a, const BilinearForm& b, const Matrix* gamma = nullptr);
FormFlags check_form_properties(const HomJMPAlgebra& j, const BilinearForm& b, const Matrix* gamma = nullptr);

/// Symmetric, nondegenerate, invariant for both products and α-compatible.
/// Each condition is a sub-report; invariance failures carry a basis witness.
CheckReport check_pseudo_euclidean_homjmp(const HomJMPAlgebra& j, const BilinearForm& b);

/// B(L(x,y)z, γt) = −B(γz, L(x,y)t) on all basis 4-tuples (γ = id when
/// omitted) plus B(αx,y) = B(x,αy) for the system's twist.
CheckReport check_triple_invariance(const HomTripleSystem& t, const BilinearForm& b, const Matrix* gamma = nullptr);

}  // namespace homjmp
