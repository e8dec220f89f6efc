#include "homjmp/identity.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <thread>

#include "homjmp/random.hpp"

namespace homjmp {

// ---------------------------------------------------------------------------
// EvalContext

EvalContext::EvalContext(const HomAlgebra& a, unsigned max_twist)
    : main_(a.mul), bracket_(minus_algebra(a).mul), jordan_(plus_algebra(a).mul), powers_(a.twist, max_twist) {}

EvalContext::EvalContext(const HomJMPAlgebra& j, unsigned max_twist)
    : main_(Scalar(1, 2) * j.bracket + j.jordan), bracket_(j.bracket), jordan_(j.jordan), powers_(j.twist, max_twist) {}

EvalContext::EvalContext(Tensor3 main, Tensor3 bracket, Tensor3 jordan, const Matrix& twist, unsigned max_twist)
    : main_(std::move(main)), bracket_(std::move(bracket)), jordan_(std::move(jordan)), powers_(twist, max_twist) {
  if (bracket_.dim() != main_.dim() || jordan_.dim() != main_.dim() || twist.rows() != main_.dim())
    throw DimensionMismatch("EvalContext: products and twist must share one dimension");
}

const Tensor3& EvalContext::product(ProductKind k) const {
  switch (k) {
    case ProductKind::Main: return main_;
    case ProductKind::Bracket: return bracket_;
    case ProductKind::Jordan: return jordan_;
  }
  return main_;
}

// ---------------------------------------------------------------------------
// IdentityExpr

struct IdentityExpr::Node {
  Kind kind;
  std::size_t index = 0;  // Variable
  ProductKind which = ProductKind::Main;
  unsigned power = 0;  // Twist
  std::vector<IdentityExpr> children;
  std::vector<Scalar> coefficients;  // Sum
};

IdentityExpr IdentityExpr::variable(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->index = index;
  return IdentityExpr(std::move(n));
}

IdentityExpr IdentityExpr::product(ProductKind which, IdentityExpr left, IdentityExpr right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->which = which;
  n->children = {std::move(left), std::move(right)};
  return IdentityExpr(std::move(n));
}

IdentityExpr IdentityExpr::twisted(unsigned power, IdentityExpr child) {
  if (power == 0) return child;
  if (child.kind() == Kind::Twist) {
    power += child.node_->power;
    child = child.node_->children.front();
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Twist;
  n->power = power;
  n->children = {std::move(child)};
  return IdentityExpr(std::move(n));
}

IdentityExpr IdentityExpr::sum(std::vector<std::pair<Scalar, IdentityExpr>> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  for (auto& [c, e] : terms) {
    if (c.is_zero()) continue;
    n->coefficients.push_back(c);
    n->children.push_back(std::move(e));
  }
  return IdentityExpr(std::move(n));
}

IdentityExpr::Kind IdentityExpr::kind() const { return node_->kind; }

std::size_t IdentityExpr::arity() const {
  if (node_->kind == Kind::Variable) return node_->index + 1;
  std::size_t a = 0;
  for (const auto& c : node_->children) a = std::max(a, c.arity());
  return a;
}

unsigned IdentityExpr::max_twist() const {
  unsigned m = 0;
  for (const auto& c : node_->children) m = std::max(m, c.max_twist());
  return node_->kind == Kind::Twist ? std::max(m, node_->power) : m;
}

std::optional<unsigned> IdentityExpr::degree_in(std::size_t var) const {
  switch (node_->kind) {
    case Kind::Variable: return node_->index == var ? 1u : 0u;
    case Kind::Twist: return node_->children.front().degree_in(var);
    case Kind::Product: {
      auto l = node_->children[0].degree_in(var);
      auto r = node_->children[1].degree_in(var);
      if (!l || !r) return std::nullopt;
      return *l + *r;
    }
    case Kind::Sum: {
      std::optional<unsigned> d;
      for (const auto& c : node_->children) {
        auto cd = c.degree_in(var);
        if (!cd) return std::nullopt;
        if (d && *d != *cd) return std::nullopt;
        d = cd;
      }
      return d ? d : std::optional<unsigned>(0u);
    }
  }
  return std::nullopt;
}

Vector IdentityExpr::eval(const EvalContext& ctx, std::span<const Vector> vars) const {
  switch (node_->kind) {
    case Kind::Variable:
      if (node_->index >= vars.size()) throw DimensionMismatch("identity variable out of range");
      return vars[node_->index];
    case Kind::Twist:
      if (node_->power > ctx.max_twist()) throw std::out_of_range("twist power exceeds evaluation context");
      return ctx.twist(node_->power, node_->children.front().eval(ctx, vars));
    case Kind::Product: {
      Vector l = node_->children[0].eval(ctx, vars);
      if (is_zero(l)) return zero_vector(ctx.dim());
      return apply_product(ctx.product(node_->which), l, node_->children[1].eval(ctx, vars));
    }
    case Kind::Sum: {
      Vector r(ctx.dim());
      for (std::size_t i = 0; i < node_->children.size(); ++i)
        axpy(r, node_->coefficients[i], node_->children[i].eval(ctx, vars));
      return r;
    }
  }
  return {};
}

IdentityExpr operator+(const IdentityExpr& a, const IdentityExpr& b) {
  return IdentityExpr::sum({{Scalar(1), a}, {Scalar(1), b}});
}

IdentityExpr operator-(const IdentityExpr& a, const IdentityExpr& b) {
  return IdentityExpr::sum({{Scalar(1), a}, {Scalar(-1), b}});
}

IdentityExpr operator*(const Scalar& s, const IdentityExpr& e) { return IdentityExpr::sum({{s, e}}); }

namespace expr {

IdentityExpr associator(ProductKind p, const IdentityExpr& x, const IdentityExpr& y, const IdentityExpr& z) {
  using P = IdentityExpr;
  return P::product(p, P::product(p, x, y), tw(z)) - P::product(p, tw(x), P::product(p, y, z));
}

IdentityExpr jacobiator(ProductKind p, const IdentityExpr& x, const IdentityExpr& y, const IdentityExpr& z) {
  using P = IdentityExpr;
  return IdentityExpr::sum({{Scalar(1), P::product(p, P::product(p, x, y), tw(z))},
                            {Scalar(1), P::product(p, P::product(p, y, z), tw(x))},
                            {Scalar(1), P::product(p, P::product(p, z, x), tw(y))}});
}

}  // namespace expr

// ---------------------------------------------------------------------------
// Polarization

Vector MultilinearIdentity::evaluate(const EvalContext& ctx, std::span<const Vector> slots) const {
  if (slots.size() != arity())
    throw DimensionMismatch(name + ": expected " + std::to_string(arity()) + " inputs, got " +
                            std::to_string(slots.size()));
  if (degree == 1) return source.eval(ctx, slots);

  const std::size_t n_vars = source.arity();
  std::vector<Vector> vars(n_vars);
  for (std::size_t v = 0; v < n_vars; ++v) {
    if (v < var) vars[v] = slots[v];
    else if (v > var) vars[v] = slots[v + degree - 1];
  }
  Vector total(ctx.dim());
  const unsigned full = 1u << degree;
  for (unsigned mask = 1; mask < full; ++mask) {
    Vector s(ctx.dim());
    for (unsigned i = 0; i < degree; ++i)
      if (mask & (1u << i)) s += slots[var + i];
    vars[var] = std::move(s);
    Vector term = source.eval(ctx, vars);
    if ((degree - static_cast<unsigned>(std::popcount(mask))) % 2 == 1) total -= term;
    else total += term;
  }
  return total;
}

namespace {

/// Generic dense algebra used for homogeneity and linearity probes.
const EvalContext& probe_context() {
  static const EvalContext ctx = [] {
    RationalSampler rs(0x5eed);
    const std::size_t n = 3;
    return EvalContext(rs.tensor(n), rs.tensor(n), rs.tensor(n), rs.matrix(n, n), 8);
  }();
  return ctx;
}

void probe_linearity(const MultilinearIdentity& m) {
  const EvalContext& ctx = probe_context();
  RationalSampler rs(0x11ea);
  const std::size_t n = ctx.dim();
  for (std::size_t slot = 0; slot < m.arity(); ++slot) {
    std::vector<Vector> in(m.arity());
    for (auto& v : in) v = rs.vector(n);
    Vector u = rs.vector(n), w = rs.vector(n);
    Scalar a = rs.nonzero_scalar(), b = rs.nonzero_scalar();
    in[slot] = a * u + b * w;
    Vector combined = m.evaluate(ctx, in);
    in[slot] = u;
    Vector lu = m.evaluate(ctx, in);
    in[slot] = w;
    Vector lw = m.evaluate(ctx, in);
    if (combined != a * lu + b * lw)
      throw PreconditionFailed(m.name + ": not linear in slot " + std::to_string(slot));
  }
}

void require_probe_twists(const IdentityExpr& e) {
  if (e.max_twist() > probe_context().max_twist())
    throw PreconditionFailed("identity uses twist powers beyond the probe context");
}

}  // namespace

MultilinearIdentity polarize(const IdentityExpr& source, std::size_t var, unsigned degree, std::string name) {
  const std::string err = name + ": not homogeneous of stated degree";
  if (degree == 0 || degree > 8) throw PreconditionFailed(err);
  const std::size_t n_vars = source.arity();
  if (var >= n_vars) throw PreconditionFailed(err);
  for (std::size_t v = 0; v < n_vars; ++v) {
    auto d = source.degree_in(v);
    if (!d || *d != (v == var ? degree : 1u)) throw PreconditionFailed(err);
  }
  require_probe_twists(source);

  // Scaling probe: I(t x) = t^d I(x) for t in {2, 3}.
  const EvalContext& ctx = probe_context();
  RationalSampler rs(0x5ca1e);
  std::vector<Vector> vars(n_vars);
  for (auto& v : vars) v = rs.vector(ctx.dim());
  Vector base = source.eval(ctx, vars);
  for (long t : {2L, 3L}) {
    std::vector<Vector> scaled = vars;
    scaled[var] = Scalar(t) * vars[var];
    Scalar factor = 1;
    for (unsigned i = 0; i < degree; ++i) factor *= Scalar(t);
    if (source.eval(ctx, scaled) != factor * base) throw PreconditionFailed(err);
  }

  MultilinearIdentity m{std::move(name), source, var, degree};
  probe_linearity(m);
  return m;
}

MultilinearIdentity multilinear(const IdentityExpr& source, std::string name) {
  for (std::size_t v = 0; v < source.arity(); ++v) {
    auto d = source.degree_in(v);
    if (!d || *d != 1) throw PreconditionFailed(name + ": not linear in every variable");
  }
  require_probe_twists(source);
  MultilinearIdentity m{std::move(name), source, 0, 1};
  probe_linearity(m);
  return m;
}

// ---------------------------------------------------------------------------
// Reports and enumeration

CheckReport CheckReport::conjunction(std::string name, std::vector<CheckReport> parts) {
  CheckReport r;
  r.identity = std::move(name);
  for (const auto& p : parts) {
    r.tuples_checked += p.tuples_checked;
    if (!p.pass && r.pass) {
      r.pass = false;
      r.witness = p.witness;
    }
  }
  r.sub = std::move(parts);
  return r;
}

const CheckReport* CheckReport::find(const std::string& name) const {
  if (identity == name) return this;
  for (const auto& s : sub)
    if (const auto* f = s.find(name)) return f;
  return nullptr;
}

namespace {
std::atomic<unsigned> g_workers{0};
}

void set_enumeration_workers(unsigned workers) { g_workers = workers; }

unsigned enumeration_workers() {
  unsigned w = g_workers.load();
  if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
  return w;
}

std::optional<std::uint64_t> find_first_failure(std::uint64_t total, const std::function<bool(std::uint64_t)>& fails) {
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(enumeration_workers(), total));
  if (workers <= 1 || total < 1024) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (fails(i)) return i;
    return std::nullopt;
  }

  std::atomic<std::uint64_t> best{total};
  std::exception_ptr error;
  std::mutex error_mu;
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
      pool.emplace_back([&, lo, hi] {
        try {
          for (std::uint64_t i = lo; i < hi && i < best.load(std::memory_order_relaxed); ++i) {
            if (fails(i)) {
              std::uint64_t cur = best.load();
              while (i < cur && !best.compare_exchange_weak(cur, i)) {
              }
              return;
            }
          }
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  if (best.load() == total) return std::nullopt;
  return best.load();
}

std::vector<std::size_t> decode_tuple(std::uint64_t index, std::size_t n, std::size_t arity) {
  std::vector<std::size_t> t(arity);
  for (std::size_t p = arity; p-- > 0;) {
    t[p] = static_cast<std::size_t>(index % n);
    index /= n;
  }
  return t;
}

namespace {

std::uint64_t tuple_count(std::size_t n, std::size_t arity) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= n;
  return total;
}

std::vector<Vector> basis_inputs(const std::vector<std::size_t>& tuple, std::size_t n) {
  std::vector<Vector> in;
  in.reserve(tuple.size());
  for (auto i : tuple) in.push_back(basis_vector(n, i));
  return in;
}

}  // namespace

CheckReport check_multilinear(const MultilinearIdentity& m, const EvalContext& ctx) {
  const std::size_t n = ctx.dim(), arity = m.arity();
  const std::uint64_t total = n == 0 ? 0 : tuple_count(n, arity);
  CheckReport r;
  r.identity = m.name;
  auto first = find_first_failure(total, [&](std::uint64_t idx) {
    auto in = basis_inputs(decode_tuple(idx, n, arity), n);
    return !is_zero(m.evaluate(ctx, in));
  });
  if (!first) {
    r.tuples_checked = total;
    return r;
  }
  Witness w;
  w.basis_tuple = decode_tuple(*first, n, arity);
  w.inputs = basis_inputs(w.basis_tuple, n);
  w.residual = m.evaluate(ctx, w.inputs);
  r.pass = false;
  r.witness = std::move(w);
  r.tuples_checked = *first + 1;
  return r;
}

CheckReport check_sampled(const MultilinearIdentity& m, const EvalContext& ctx, std::size_t samples,
                          std::uint64_t seed) {
  RationalSampler rs(seed);
  CheckReport r;
  r.identity = m.name + " (sampled)";
  const std::size_t n_vars = m.source.arity();
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<Vector> in(n_vars);
    for (auto& v : in) v = rs.vector(ctx.dim());
    Vector res = m.source.eval(ctx, in);
    ++r.tuples_checked;
    if (!is_zero(res)) {
      r.pass = false;
      r.witness = Witness{{}, std::move(in), std::move(res)};
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Catalogue

namespace identities {

using namespace expr;
using enum ProductKind;

namespace {
const IdentityExpr x = var(0), y = var(1), z = var(2);

IdentityExpr prod(ProductKind p, const IdentityExpr& a, const IdentityExpr& b) {
  return IdentityExpr::product(p, a, b);
}

template <std::size_t N>
const MultilinearIdentity& per_kind(std::array<MultilinearIdentity, N>& table, ProductKind p) {
  return table[static_cast<std::size_t>(p)];
}
}  // namespace

const MultilinearIdentity& hom_flexible() {
  static const auto m = polarize(associator(Main, x, y, x), 0, 2, "hom-flexible");
  return m;
}

const MultilinearIdentity& hom_left_alternative() {
  static const auto m = polarize(associator(Main, x, x, y), 0, 2, "hom-left-alternative");
  return m;
}

const MultilinearIdentity& hom_right_alternative() {
  static const auto m = polarize(associator(Main, x, y, y), 1, 2, "hom-right-alternative");
  return m;
}

namespace {
template <typename F>
std::array<MultilinearIdentity, 3> build_per_kind(F f) {
  return {f(Main), f(Bracket), f(Jordan)};
}
}  // namespace

const MultilinearIdentity& hom_associative(ProductKind p) {
  static auto t = build_per_kind([](ProductKind k) { return multilinear(associator(k, x, y, z), "hom-associative"); });
  return per_kind(t, p);
}

const MultilinearIdentity& commutativity(ProductKind p) {
  static auto t = build_per_kind(
      [](ProductKind k) { return multilinear(prod(k, x, y) - prod(k, y, x), "commutativity"); });
  return per_kind(t, p);
}

const MultilinearIdentity& skewsymmetry(ProductKind p) {
  static auto t = build_per_kind([](ProductKind k) { return polarize(prod(k, x, x), 0, 2, "skewsymmetry"); });
  return per_kind(t, p);
}

const MultilinearIdentity& hom_jordan(ProductKind p) {
  static auto t = build_per_kind([](ProductKind k) {
    return polarize(associator(k, prod(k, x, x), tw(y), tw(x)), 0, 3, "hom-jordan-identity");
  });
  return per_kind(t, p);
}

const MultilinearIdentity& hom_malcev(ProductKind p) {
  static auto t = build_per_kind([](ProductKind k) {
    IdentityExpr lhs = jacobiator(k, tw(x), tw(y), prod(k, x, z));
    IdentityExpr rhs = prod(k, jacobiator(k, x, y, z), tw(x, 2));
    return polarize(lhs - rhs, 0, 2, "hom-malcev-identity");
  });
  return per_kind(t, p);
}

const MultilinearIdentity& hom_leibniz() {
  static const auto m = multilinear(
      IdentityExpr::sum({{Scalar(1), br(tw(x), jo(y, z))},
                         {Scalar(-1), jo(br(x, y), tw(z))},
                         {Scalar(-1), jo(tw(y), br(x, z))}}),
      "hom-leibniz");
  return m;
}

const MultilinearIdentity& hom_leibniz_skew_form() {
  static const auto m = multilinear(
      IdentityExpr::sum({{Scalar(1), br(jo(x, y), tw(z))},
                         {Scalar(-1), jo(br(x, z), tw(y))},
                         {Scalar(-1), jo(tw(x), br(y, z))}}),
      "hom-leibniz-skew-form");
  return m;
}

const MultilinearIdentity& flexible_characterization() {
  static const auto m = multilinear(
      IdentityExpr::sum({{Scalar(1), associator(Main, x, y, z)},
                         {Scalar(-1, 4), jacobiator(Bracket, x, y, z)},
                         {Scalar(-1, 4), br(tw(y), br(z, x))},
                         {Scalar(-1), associator(Jordan, x, y, z)}}),
      "flexible-characterization");
  return m;
}

const MultilinearIdentity& rl_condition() {
  static const auto m = [] {
    IdentityExpr sq = mul(x, x);
    IdentityExpr lhs = mul(mul(sq, tw(y)), tw(x, 2));
    IdentityExpr rhs = mul(tw(sq), mul(tw(y), tw(x)));
    return polarize(lhs - rhs, 0, 3, "rl-condition");
  }();
  return m;
}

const MultilinearIdentity& power_three() {
  static const auto m = [] {
    IdentityExpr sq = mul(x, x);
    return polarize(mul(sq, tw(x)) - mul(tw(x), sq), 0, 3, "third-power-hom-associative");
  }();
  return m;
}

const MultilinearIdentity& power_four() {
  static const auto m = [] {
    IdentityExpr sq = mul(x, x);
    IdentityExpr cube = mul(sq, tw(x));
    return polarize(mul(cube, tw(x, 2)) - mul(tw(sq), tw(sq)), 0, 4, "fourth-power-hom-associative");
  }();
  return m;
}

const MultilinearIdentity& cyclic_associator_lemma() {
  static const auto m = multilinear(
      IdentityExpr::sum({{Scalar(2), associator(Main, x, y, z)},
                         {Scalar(2), associator(Main, y, z, x)},
                         {Scalar(2), associator(Main, z, x, y)},
                         {Scalar(-1), jacobiator(Bracket, x, y, z)}}),
      "cyclic-associator-vs-minus-jacobiator");
  return m;
}

const MultilinearIdentity& minus_jacobiator_square() {
  static const auto m =
      polarize(jacobiator(Bracket, mul(x, x), tw(y), tw(x)), 0, 3, "minus-jacobiator-on-square");
  return m;
}

const MultilinearIdentity& associator_plus_agreement() {
  static const auto m = [] {
    IdentityExpr sq = mul(x, x);
    return polarize(associator(Main, sq, tw(y), tw(x)) - associator(Jordan, sq, tw(y), tw(x)), 0, 3,
                    "associator-equals-plus-associator-on-square");
  }();
  return m;
}

std::vector<const MultilinearIdentity*> polarized() {
  return {&hom_flexible(),        &hom_left_alternative(),    &hom_right_alternative(), &skewsymmetry(Main),
          &hom_jordan(Main),      &hom_malcev(Main),          &rl_condition(),          &power_three(),
          &power_four(),          &minus_jacobiator_square(), &associator_plus_agreement()};
}

}  // namespace identities

// ---------------------------------------------------------------------------
// Checkers

CheckReport check_hom_flexible(const HomAlgebra& a) {
  return check_multilinear(identities::hom_flexible(), EvalContext(a));
}

CheckReport check_hom_alternative(const HomAlgebra& a) {
  EvalContext ctx(a);
  return CheckReport::conjunction("hom-alternative",
                                  {check_multilinear(identities::hom_left_alternative(), ctx),
                                   check_multilinear(identities::hom_right_alternative(), ctx)});
}

CheckReport check_hom_jordan(const HomAlgebra& a) {
  EvalContext ctx(a);
  std::vector<CheckReport> parts{check_multilinear(identities::commutativity(ProductKind::Main), ctx)};
  if (parts.front().pass) parts.push_back(check_multilinear(identities::hom_jordan(ProductKind::Main), ctx));
  return CheckReport::conjunction("hom-jordan", std::move(parts));
}

CheckReport check_hom_malcev(const HomAlgebra& a) {
  EvalContext ctx(a);
  std::vector<CheckReport> parts{check_multilinear(identities::skewsymmetry(ProductKind::Main), ctx)};
  if (parts.front().pass) parts.push_back(check_multilinear(identities::hom_malcev(ProductKind::Main), ctx));
  return CheckReport::conjunction("hom-malcev", std::move(parts));
}

CheckReport check_hom_leibniz(const HomJMPAlgebra& j) {
  EvalContext ctx(j);
  CheckReport main = check_multilinear(identities::hom_leibniz(), ctx);
  CheckReport skew = check_multilinear(identities::hom_leibniz_skew_form(), ctx);
  CheckReport r = main;
  r.sub.clear();
  if (j.bracket.is_skew()) r.cross_checks["skew-form-equivalent"] = main.pass == skew.pass;
  r.sub = {std::move(main), std::move(skew)};
  return r;
}

CheckReport check_hom_jmp(const HomJMPAlgebra& j) {
  return CheckReport::conjunction("hom-jmp",
                                  {check_hom_malcev(j.bracket_algebra()), check_hom_jordan(j.jordan_algebra()),
                                   check_hom_leibniz(j)});
}

CheckReport check_admissible_jmp(const HomAlgebra& a) {
  CheckReport r = check_hom_jmp(minus_plus_pair(a));
  r.identity = "admissible-hom-jmp";
  return r;
}

CheckReport check_flexible_characterization(const HomAlgebra& a) {
  CheckReport r = check_multilinear(identities::flexible_characterization(), EvalContext(a));
  CheckReport flex = check_hom_flexible(a);
  r.cross_checks["equals-flexible"] = r.pass == flex.pass;
  r.sub.push_back(std::move(flex));
  return r;
}

CheckReport check_condition_rl(const HomAlgebra& a) {
  CheckReport r = check_multilinear(identities::rl_condition(), EvalContext(a));
  if (check_hom_flexible(a).pass && check_hom_malcev(minus_algebra(a)).pass) {
    CheckReport adm = check_admissible_jmp(a);
    r.cross_checks["equals-admissible"] = r.pass == adm.pass;
  }
  return r;
}

CheckReport check_hom_associative(const HomAlgebra& a) {
  return check_multilinear(identities::hom_associative(ProductKind::Main), EvalContext(a));
}

CheckReport check_power_hom_associative(const HomAlgebra& a, const PowerCheckOptions& opts) {
  if (opts.strict) {
    EvalContext ctx(a);
    return CheckReport::conjunction("power-hom-associative",
                                    {check_multilinear(identities::power_three(), ctx),
                                     check_multilinear(identities::power_four(), ctx)});
  }
  if (opts.max_power < 2) throw std::invalid_argument("power check: N must be >= 2");

  const unsigned big_n = opts.max_power;
  CheckReport r;
  r.identity = "nth-power-hom-associative(N=" + std::to_string(big_n) + ")";
  TwistPowers powers(a.twist, big_n);
  RationalSampler rs(opts.seed);
  for (std::size_t s = 0; s < opts.samples; ++s) {
    Vector x = rs.vector(a.dim());
    PowerTable t = hom_power_table(a, x, big_n, powers);
    ++r.tuples_checked;
    for (unsigned n = 2; n <= big_n; ++n)
      for (unsigned i = 1; i < n; ++i) {
        Vector rhs = apply_product(a.mul, powers.apply(n - i - 1, t[i]), powers.apply(i - 1, t[n - i]));
        Vector res = t[n] - rhs;
        if (!is_zero(res)) {
          r.pass = false;
          r.identity += " at n=" + std::to_string(n) + ", i=" + std::to_string(i);
          r.witness = Witness{{}, {x}, std::move(res)};
          return r;
        }
      }
  }
  return r;
}

namespace {

bool preserves(const Tensor3& c, const Matrix& m) {
  const std::size_t n = c.dim();
  std::vector<Vector> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = m.column(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (mat_apply(m, c.product_of_basis(i, j)) != apply_product(c, images[i], images[j])) return false;
  return true;
}

MapFlags map_flags(std::initializer_list<const Tensor3*> products, const Matrix& twist, const Matrix& m,
                   const BilinearForm* form) {
  const std::size_t n = twist.rows();
  if (m.rows() != n || m.cols() != n) throw DimensionMismatch("map must be square of the algebra dimension");
  MapFlags f;
  f.weak_morphism = std::all_of(products.begin(), products.end(), [&](const Tensor3* c) { return preserves(*c, m); });
  f.morphism = f.weak_morphism && m * twist == twist * m;
  f.automorphism = f.morphism && rank(m) == n;
  if (form) {
    if (form->dim() != n) throw DimensionMismatch("form dimension differs from algebra");
    f.symmetric_wrt_form = m.transpose() * form->matrix == form->matrix * m;
  }
  return f;
}

}  // namespace

MapFlags check_map_properties(const HomAlgebra& a, const Matrix& m, const BilinearForm* form) {
  return map_flags({&a.mul}, a.twist, m, form);
}

MapFlags check_map_properties(const HomJMPAlgebra& j, const Matrix& m, const BilinearForm* form) {
  return map_flags({&j.bracket, &j.jordan}, j.twist, m, form);
}

}  // namespace homjmp
