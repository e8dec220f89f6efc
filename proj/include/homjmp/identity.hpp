#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "homjmp/algebra.hpp"

namespace homjmp {

// ---------------------------------------------------------------------------
// Expression trees

/// Which structure-constant tensor a product node reads.
enum class ProductKind { Main, Bracket, Jordan };

/// Products and twist powers available to identity evaluation.
///
/// From a single-product algebra the bracket and Jordan slots hold the minus
/// and plus algebras; from a JMP pair the main slot holds {x,y}/2 + x∘y.
class EvalContext {
 public:
  explicit EvalContext(const HomAlgebra& a, unsigned max_twist = 6);
  explicit EvalContext(const HomJMPAlgebra& j, unsigned max_twist = 6);
  EvalContext(Tensor3 main, Tensor3 bracket, Tensor3 jordan, const Matrix& twist, unsigned max_twist = 6);

  std::size_t dim() const { return main_.dim(); }
  const Tensor3& product(ProductKind k) const;
  Vector twist(unsigned power, const Vector& v) const { return powers_.apply(power, v); }
  unsigned max_twist() const { return powers_.max_power(); }

 private:
  Tensor3 main_, bracket_, jordan_;
  TwistPowers powers_;
};

/// Formal polynomial expression in vector variables built from products,
/// twist powers and rational linear combinations. Immutable; subtrees are
/// shared.
class IdentityExpr {
 public:
  enum class Kind { Variable, Product, Twist, Sum };

  static IdentityExpr variable(std::size_t index);
  static IdentityExpr product(ProductKind which, IdentityExpr left, IdentityExpr right);
  static IdentityExpr twisted(unsigned power, IdentityExpr child);
  static IdentityExpr sum(std::vector<std::pair<Scalar, IdentityExpr>> terms);

  Kind kind() const;
  /// Number of variables (max index + 1).
  std::size_t arity() const;
  unsigned max_twist() const;
  /// Degree in variable `var` if every monomial has the same degree in it.
  std::optional<unsigned> degree_in(std::size_t var) const;

  Vector eval(const EvalContext& ctx, std::span<const Vector> vars) const;

  friend IdentityExpr operator+(const IdentityExpr& a, const IdentityExpr& b);
  friend IdentityExpr operator-(const IdentityExpr& a, const IdentityExpr& b);
  friend IdentityExpr operator*(const Scalar& s, const IdentityExpr& e);

 private:
  struct Node;
  explicit IdentityExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Shorthand builders used by the identity catalogue.
namespace expr {
inline IdentityExpr var(std::size_t i) { return IdentityExpr::variable(i); }
inline IdentityExpr mul(const IdentityExpr& a, const IdentityExpr& b) {
  return IdentityExpr::product(ProductKind::Main, a, b);
}
inline IdentityExpr br(const IdentityExpr& a, const IdentityExpr& b) {
  return IdentityExpr::product(ProductKind::Bracket, a, b);
}
inline IdentityExpr jo(const IdentityExpr& a, const IdentityExpr& b) {
  return IdentityExpr::product(ProductKind::Jordan, a, b);
}
inline IdentityExpr tw(const IdentityExpr& a, unsigned k = 1) { return IdentityExpr::twisted(k, a); }
/// (xy)α(z) − α(x)(yz) for product `p`.
IdentityExpr associator(ProductKind p, const IdentityExpr& x, const IdentityExpr& y, const IdentityExpr& z);
/// Cyclic sum of (xy)α(z) for product `p`.
IdentityExpr jacobiator(ProductKind p, const IdentityExpr& x, const IdentityExpr& y, const IdentityExpr& z);
}  // namespace expr

// ---------------------------------------------------------------------------
// Multilinear identities

/// Multilinear form of an identity. When `degree` > 1 the variable `var` has
/// been polarized: its slot is replaced in place by `degree` fresh slots and
///   L(x_1..x_d; rest) = Σ_{∅≠S⊆{1..d}} (−1)^{d−|S|} I(Σ_{i∈S} x_i; rest).
struct MultilinearIdentity {
  std::string name;
  IdentityExpr source;
  std::size_t var = 0;
  unsigned degree = 1;

  std::size_t arity() const { return source.arity() - 1 + degree; }
  Vector evaluate(const EvalContext& ctx, std::span<const Vector> slots) const;
};

/// Linearizes `source` in `var`, which must occur with degree `degree` in
/// every monomial; every other variable must be linear. Homogeneity is
/// checked on the tree and by a scaling probe on a seeded generic algebra.
/// Throws PreconditionFailed("not homogeneous of stated degree") otherwise.
MultilinearIdentity polarize(const IdentityExpr& source, std::size_t var, unsigned degree, std::string name);

/// Wraps an identity that is already linear in every variable.
MultilinearIdentity multilinear(const IdentityExpr& source, std::string name);

// ---------------------------------------------------------------------------
// Reports

struct Witness {
  std::vector<std::size_t> basis_tuple;  // empty for sampled (non-basis) inputs
  std::vector<Vector> inputs;
  Vector residual;
};

struct CheckReport {
  std::string identity;
  bool pass = true;
  std::optional<Witness> witness;
  std::uint64_t tuples_checked = 0;
  std::vector<CheckReport> sub;
  /// Named consistency checks between this verdict and related ones.
  std::map<std::string, bool> cross_checks;

  /// Pass iff every part passes; the witness is taken from the first failure.
  static CheckReport conjunction(std::string name, std::vector<CheckReport> parts);
  const CheckReport* find(const std::string& name) const;
};

/// Index of the first tuple in [0, total) for which `fails` holds, scanning
/// in canonical order. Work may be split across threads; the result does not
/// depend on the split.
std::optional<std::uint64_t> find_first_failure(std::uint64_t total, const std::function<bool(std::uint64_t)>& fails);

/// Worker threads used by enumerations (0 = hardware concurrency).
void set_enumeration_workers(unsigned workers);
unsigned enumeration_workers();

/// Decodes a canonical tuple index into base-n digits, most significant first.
std::vector<std::size_t> decode_tuple(std::uint64_t index, std::size_t n, std::size_t arity);

/// Evaluates `m` on all n^arity basis tuples in lexicographic order.
CheckReport check_multilinear(const MultilinearIdentity& m, const EvalContext& ctx);

/// Evaluates the unpolarized source identity on `samples` seeded random inputs.
CheckReport check_sampled(const MultilinearIdentity& m, const EvalContext& ctx, std::size_t samples,
                          std::uint64_t seed);

// ---------------------------------------------------------------------------
// Identity catalogue

namespace identities {
const MultilinearIdentity& hom_flexible();
const MultilinearIdentity& hom_left_alternative();
const MultilinearIdentity& hom_right_alternative();
const MultilinearIdentity& hom_associative(ProductKind p);
const MultilinearIdentity& commutativity(ProductKind p);
const MultilinearIdentity& skewsymmetry(ProductKind p);
const MultilinearIdentity& hom_jordan(ProductKind p);
const MultilinearIdentity& hom_malcev(ProductKind p);
const MultilinearIdentity& hom_leibniz();
const MultilinearIdentity& hom_leibniz_skew_form();
const MultilinearIdentity& flexible_characterization();
const MultilinearIdentity& rl_condition();
const MultilinearIdentity& power_three();
const MultilinearIdentity& power_four();
/// 2 S_A − J_{A⁻}
const MultilinearIdentity& cyclic_associator_lemma();
/// J_{A⁻}(x², α(y), α(x))
const MultilinearIdentity& minus_jacobiator_square();
/// as_A(x², α(y), α(x)) − as_{A⁺}(x², α(y), α(x))
const MultilinearIdentity& associator_plus_agreement();
/// Every catalogued identity whose checked form comes from polarization.
std::vector<const MultilinearIdentity*> polarized();
}  // namespace identities

// ---------------------------------------------------------------------------
// Checkers

CheckReport check_hom_flexible(const HomAlgebra& a);
CheckReport check_hom_alternative(const HomAlgebra& a);
CheckReport check_hom_jordan(const HomAlgebra& a);
CheckReport check_hom_malcev(const HomAlgebra& a);
CheckReport check_hom_leibniz(const HomJMPAlgebra& j);
CheckReport check_hom_jmp(const HomJMPAlgebra& j);
CheckReport check_admissible_jmp(const HomAlgebra& a);
CheckReport check_flexible_characterization(const HomAlgebra& a);
CheckReport check_condition_rl(const HomAlgebra& a);
CheckReport check_hom_associative(const HomAlgebra& a);

struct PowerCheckOptions {
  bool strict = true;           // polarized third/fourth power identities
  unsigned max_power = 0;       // sampled mode: verify n-th power Hom-associativity for n <= max_power
  std::size_t samples = 100;
  std::uint64_t seed = 0;
};
/// Throws std::invalid_argument when sampled mode is requested with max_power < 2.
CheckReport check_power_hom_associative(const HomAlgebra& a, const PowerCheckOptions& opts);

struct MapFlags {
  bool weak_morphism = false;
  bool morphism = false;
  bool automorphism = false;
  std::optional<bool> symmetric_wrt_form;
};

MapFlags check_map_properties(const HomAlgebra& a, const Matrix& m, const BilinearForm* form = nullptr);
MapFlags check_map_properties(const HomJMPAlgebra& j, const Matrix& m, const BilinearForm* form = nullptr);

}  // namespace homjmp
