#include "homjmp/triples.hpp"

#include <functional>

namespace homjmp {

HomTripleSystem::HomTripleSystem(Tensor4 t, Matrix tw) : triple(std::move(t)), twist(std::move(tw)) {
  if (twist.rows() != triple.dim() || twist.cols() != triple.dim())
    throw DimensionMismatch("triple system twist must be square of the system dimension");
}

HLJPSystem::HLJPSystem(Tensor4 t, Tensor3 j, Matrix tw) : triple(std::move(t)), jordan(std::move(j)), twist(std::move(tw)) {
  if (jordan.dim() != triple.dim()) throw DimensionMismatch("jordan and triple dims differ");
  if (twist.rows() != triple.dim() || twist.cols() != triple.dim())
    throw DimensionMismatch("HLJP twist must be square of the system dimension");
}

namespace {

std::uint64_t power_of(std::size_t n, std::size_t k) {
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < k; ++i) t *= n;
  return t;
}

std::vector<Vector> basis(std::size_t n) {
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(basis_vector(n, i));
  return e;
}

/// Enumerates all basis tuples of `arity` and reports the first nonzero residual.
CheckReport enumerate(std::string name, std::size_t n, std::size_t arity,
                      const std::function<Vector(const std::vector<std::size_t>&)>& residual) {
  CheckReport r;
  r.identity = std::move(name);
  const std::uint64_t total = n == 0 ? 0 : power_of(n, arity);
  auto first = find_first_failure(total, [&](std::uint64_t idx) { return !is_zero(residual(decode_tuple(idx, n, arity))); });
  if (!first) {
    r.tuples_checked = total;
    return r;
  }
  Witness w;
  w.basis_tuple = decode_tuple(*first, n, arity);
  for (auto i : w.basis_tuple) w.inputs.push_back(basis_vector(n, i));
  w.residual = residual(w.basis_tuple);
  r.pass = false;
  r.witness = std::move(w);
  r.tuples_checked = *first + 1;
  return r;
}

/// Σ_m coeffs[m] · table(m)
Vector contract(const Vector& coeffs, const std::function<const Vector&(std::size_t)>& table, std::size_t n) {
  Vector out(n);
  for (std::size_t m = 0; m < coeffs.size(); ++m)
    if (!coeffs[m].is_zero()) axpy(out, coeffs[m], table(m));
  return out;
}

}  // namespace

bool HomTripleSystem::is_multiplicative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (mat_apply(twist, triple.product_of_basis(i, j, k)) !=
            apply_triple(triple, twist.column(i), twist.column(j), twist.column(k)))
          return false;
  return true;
}

Vector malcev_triple_product(const HomAlgebra& m, const Vector& x, const Vector& y, const Vector& z) {
  Vector r = Scalar(2) * apply_product(m.mul, apply_product(m.mul, x, y), mat_apply(m.twist, z));
  r -= apply_product(m.mul, apply_product(m.mul, y, z), mat_apply(m.twist, x));
  r -= apply_product(m.mul, apply_product(m.mul, z, x), mat_apply(m.twist, y));
  return r;
}

HomTripleSystem triple_from_malcev(const HomAlgebra& m) {
  if (!check_hom_malcev(m).pass) throw PreconditionFailed("triple_from_malcev: input is not Hom-Malcev");
  const std::size_t n = m.dim();
  const auto e = basis(n);
  Tensor4 t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = malcev_triple_product(m, e[i], e[j], e[k]);
        for (std::size_t l = 0; l < n; ++l) t(i, j, k, l) = v[l];
      }
  return {std::move(t), m.twist * m.twist};
}

HLJPSystem hljp_from_homjmp(const HomJMPAlgebra& j) {
  if (!check_hom_jmp(j).pass) throw PreconditionFailed("hljp_from_homjmp: input is not a Hom-JMP algebra");
  HomTripleSystem t = triple_from_malcev(j.bracket_algebra());
  return {std::move(t.triple), conjugate_inputs(j.jordan, j.twist), std::move(t.twist)};
}

CheckReport check_hlts_axioms(const HomTripleSystem& s) {
  const std::size_t n = s.dim();
  const Tensor4& t = s.triple;
  std::vector<std::vector<std::vector<Vector>>> tb(n, std::vector<std::vector<Vector>>(n, std::vector<Vector>(n)));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) tb[a][b][c] = t.product_of_basis(a, b, c);
  std::vector<Vector> al(n);
  for (std::size_t i = 0; i < n; ++i) al[i] = s.twist.column(i);

  CheckReport skew = enumerate("left-skewsymmetry", n, 3, [&](const auto& v) {
    return tb[v[0]][v[1]][v[2]] + tb[v[1]][v[0]][v[2]];
  });
  CheckReport jacobi = enumerate("ternary-jacobi", n, 3, [&](const auto& v) {
    return tb[v[0]][v[1]][v[2]] + tb[v[1]][v[2]][v[0]] + tb[v[2]][v[0]][v[1]];
  });
  CheckReport mult = enumerate("triple-multiplicativity", n, 3, [&](const auto& v) {
    return mat_apply(s.twist, tb[v[0]][v[1]][v[2]]) - apply_triple(t, al[v[0]], al[v[1]], al[v[2]]);
  });

  // Fundamental identity in (x, y, u, v, w). Tables of the trilinear map with
  // twisted basis arguments make each tuple a handful of sparse contractions.
  auto idx = [n](std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; };
  std::vector<Vector> twist_twist_e(n * n * n), e_twist_twist(n * n * n), twist_e_twist(n * n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector ec = basis_vector(n, c), eb = basis_vector(n, b), ea = basis_vector(n, a);
        twist_twist_e[idx(a, b, c)] = apply_triple(t, al[a], al[b], ec);
        e_twist_twist[idx(a, b, c)] = apply_triple(t, ea, al[b], al[c]);
        twist_e_twist[idx(a, b, c)] = apply_triple(t, al[a], eb, al[c]);
      }
  CheckReport fundamental = enumerate("fundamental-identity", n, 5, [&](const auto& v) {
    const std::size_t x = v[0], y = v[1], u = v[2], vv = v[3], w = v[4];
    Vector r = contract(tb[u][vv][w], [&](std::size_t m) -> const Vector& { return twist_twist_e[idx(x, y, m)]; }, n);
    r -= contract(tb[x][y][u], [&](std::size_t m) -> const Vector& { return e_twist_twist[idx(m, vv, w)]; }, n);
    r -= contract(tb[x][y][vv], [&](std::size_t m) -> const Vector& { return twist_e_twist[idx(u, m, w)]; }, n);
    r -= contract(tb[x][y][w], [&](std::size_t m) -> const Vector& { return twist_twist_e[idx(u, vv, m)]; }, n);
    return r;
  });

  return CheckReport::conjunction("hom-lie-triple-system",
                                  {std::move(skew), std::move(jacobi), std::move(mult), std::move(fundamental)});
}

CheckReport check_hljp(const HLJPSystem& s) {
  const std::size_t n = s.dim();
  HomAlgebra jordan{s.jordan, s.twist};
  std::vector<Vector> al(n);
  for (std::size_t i = 0; i < n; ++i) al[i] = s.twist.column(i);
  const auto e = basis(n);

  CheckReport leibniz = enumerate("ternary-leibniz", n, 4, [&](const auto& v) {
    const auto &x = e[v[0]], &y = e[v[1]], &z = e[v[2]], &t = e[v[3]];
    Vector r = apply_triple(s.triple, al[v[0]], al[v[1]], apply_product(s.jordan, z, t));
    r -= apply_product(s.jordan, apply_triple(s.triple, x, y, z), al[v[3]]);
    r -= apply_product(s.jordan, al[v[2]], apply_triple(s.triple, x, y, t));
    return r;
  });

  CheckReport r = CheckReport::conjunction(
      "hom-lie-jordan-poisson-triple-system",
      {check_hom_jordan(jordan), check_hlts_axioms(s.triple_system()), std::move(leibniz)});
  r.cross_checks["hom-lie-poisson"] = r.pass && check_hom_associative(jordan).pass;
  return r;
}

}  // namespace homjmp
