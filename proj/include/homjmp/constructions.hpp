#pragma once

#include <utility>
#include <vector>

#include "homjmp/identity.hpp"

namespace homjmp {

enum class MorphismRequirement { Weak, Full };

/// Composition twist: every product becomes β∘product and the twist β∘α.
/// Throws PreconditionFailed unless β is a weak morphism (or a morphism when
/// `require` is Full).
HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& beta, MorphismRequirement require);
HomJMPAlgebra yau_twist(const HomJMPAlgebra& j, const Matrix& beta, MorphismRequirement require);

/// Conjugation twist: x *' y = a(x) * a(y) and twist a∘α. Coincides with the
/// composition twist whenever a is a weak morphism.
HomAlgebra conjugation_twist(const HomAlgebra& alg, const Matrix& a);
HomJMPAlgebra conjugation_twist(const HomJMPAlgebra& j, const Matrix& a);

/// A_n: products α^n∘{,}, α^n∘∘, twist α^{n+1}, form B_n(x,y) = B(α^n x, y).
/// The input must be pseudo-Euclidean; throws PreconditionFailed otherwise.
std::pair<HomJMPAlgebra, BilinearForm> an_family(const HomJMPAlgebra& j, const BilinearForm& b, unsigned n);

/// A ⊕ A* with the coadjoint-type bracket and product and the hyperbolic
/// pairing B(x+f, y+g) = f(y) + g(x). Basis order (e_1..e_n, e^1..e^n).
struct TStarExtension {
  HomJMPAlgebra base;
  HomJMPAlgebra result;
  BilinearForm form;
};

/// Throws PreconditionFailed when the base twist is not the identity or the
/// base fails the JMP suite.
TStarExtension t_star_extension(const HomJMPAlgebra& base);

/// Brute-force construction of the T*-extension products straight from the
/// functional definitions f∘ad_y and f∘L_y (independent of the coordinate
/// formulas used by t_star_extension).
HomJMPAlgebra t_star_products_by_functionals(const HomJMPAlgebra& base);

struct BetaAutomorphism {
  Matrix beta;                 // diag(a, aᵀ)
  bool is_automorphism;        // β ∈ Aut(P), checked on P's structure constants
  bool image_in_centers;       // Im(a² − Id) ⊆ Z_J ∩ Z_M, checked on the base
};

/// Throws PreconditionFailed unless `a` is an automorphism of the base.
BetaAutomorphism beta_from_automorphism(const TStarExtension& ext, const Matrix& a);

/// Annihilator of the bracket: {z : {z, x} = {x, z} = 0 for all x}.
std::vector<Vector> center_malcev(const HomJMPAlgebra& j);
/// Annihilator of the Jordan product.
std::vector<Vector> center_jordan(const HomJMPAlgebra& j);
/// Whether v lies in the span of `basis`.
bool in_span(const std::vector<Vector>& basis, const Vector& v);

/// Conjugation twist by a ∈ Aut_S(A, B) with form B_a(x,y) = B(a x, y).
/// Throws PreconditionFailed when a is not a B-symmetric automorphism.
std::pair<HomJMPAlgebra, BilinearForm> twisted_pseudo_euclidean(const HomJMPAlgebra& j, const BilinearForm& b,
                                                                const Matrix& a);

/// Twist map invertible.
bool is_regular(const HomJMPAlgebra& j);

}  // namespace homjmp
