#pragma once

#include "homjmp/identity.hpp"

namespace homjmp {

/// Ternary bracket with a single twist used in both twisted slots.
struct HomTripleSystem {
  Tensor4 triple;
  Matrix twist;

  HomTripleSystem() = default;
  HomTripleSystem(Tensor4 t, Matrix tw);
  std::size_t dim() const { return triple.dim(); }
  /// twist{x,y,z} = {twist x, twist y, twist z} on basis triples.
  bool is_multiplicative() const;
};

/// Hom-Lie triple system plus a Jordan product, sharing the twist.
struct HLJPSystem {
  Tensor4 triple;
  Tensor3 jordan;
  Matrix twist;

  HLJPSystem() = default;
  HLJPSystem(Tensor4 t, Tensor3 j, Matrix tw);
  std::size_t dim() const { return triple.dim(); }
  HomTripleSystem triple_system() const { return {triple, twist}; }
};

/// {x,y,z} = 2{{x,y},α z} − {{y,z},α x} − {{z,x},α y} on the bracket of `m`.
Vector malcev_triple_product(const HomAlgebra& m, const Vector& x, const Vector& y, const Vector& z);

/// Triple system of a Hom-Malcev algebra with twist α². Throws
/// PreconditionFailed when `m` fails the Hom-Malcev check.
HomTripleSystem triple_from_malcev(const HomAlgebra& m);

/// ({,,}, x∘_α y = α(x)∘α(y), α²). Throws PreconditionFailed when `j` fails
/// the Hom-JMP suite.
HLJPSystem hljp_from_homjmp(const HomJMPAlgebra& j);

/// Left skewsymmetry, ternary Jacobi, multiplicativity and the twisted
/// fundamental identity, each on all basis tuples.
CheckReport check_hlts_axioms(const HomTripleSystem& t);

/// Hom-Jordan part, Hom-Lie triple part and the ternary Leibniz rule
/// {αx, αy, z∘t} = {x,y,z}∘αt + αz∘{x,y,t}. When the Jordan product is also
/// Hom-associative the cross check "hom-lie-poisson" is recorded as true.
CheckReport check_hljp(const HLJPSystem& s);

}  // namespace homjmp
