#include "homjmp/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "homjmp/constructions.hpp"

namespace homjmp {

using nlohmann::json;

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw ParseError(field + ": " + what); }

Scalar scalar_from_json(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "coefficient must be a rational string such as \"3\" or \"-1/2\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    fail(field, e.what());
  }
}

std::size_t index_from_json(const json& j, std::size_t n, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "index must be an integer");
  const auto v = j.get<long long>();
  if (v < 0 || static_cast<unsigned long long>(v) >= n)
    fail(field, "index " + std::to_string(v) + " out of range for dim " + std::to_string(n));
  return static_cast<std::size_t>(v);
}

std::string at(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

json sparse3(const Tensor3& t) {
  json out = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) out.push_back(json::array({i, j, k, t(i, j, k).str()}));
  return out;
}

json sparse4(const Tensor4& t) {
  json out = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (!t(i, j, k, l).is_zero()) out.push_back(json::array({i, j, k, l, t(i, j, k, l).str()}));
  return out;
}

/// Reads [i0, .., i_{arity-1}, "c"] entries; duplicates are rejected.
template <class T>
T dense_from_sparse(const json& list, std::size_t n, std::size_t arity, const std::string& field) {
  if (!list.is_array()) fail(field, "product must be a list of entries");
  T t(n);
  std::size_t cells = 1;
  for (std::size_t a = 0; a < arity; ++a) cells *= n;
  std::vector<bool> seen(cells, false);
  for (std::size_t e = 0; e < list.size(); ++e) {
    const auto& entry = list[e];
    const std::string f = at(field, e);
    if (!entry.is_array() || entry.size() != arity + 1)
      fail(f, "entry must have " + std::to_string(arity) + " indices and a coefficient");
    std::size_t flat = 0;
    std::array<std::size_t, 4> idx{};
    for (std::size_t a = 0; a < arity; ++a) {
      idx[a] = index_from_json(entry[a], n, f);
      flat = flat * n + idx[a];
    }
    if (seen[flat]) fail(f, "duplicate entry");
    seen[flat] = true;
    Scalar c = scalar_from_json(entry[arity], f);
    if constexpr (std::is_same_v<T, Tensor3>)
      t(idx[0], idx[1], idx[2]) = std::move(c);
    else
      t(idx[0], idx[1], idx[2], idx[3]) = std::move(c);
  }
  return t;
}

Matrix square_from_json(const json& j, std::size_t n, const std::string& field) {
  Matrix m = matrix_from_json(j, field);
  if (m.rows() != n || m.cols() != n) fail(field, "must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return m;
}

/// A triple system may name both twists; only equal twists are supported.
Matrix triple_twist_from_json(const json& j, std::size_t n) {
  if (!j.is_object()) return square_from_json(j, n, "twist");
  if (!j.contains("alpha1") || !j.contains("alpha2")) fail("twist", "expected a matrix or {\"alpha1\", \"alpha2\"}");
  Matrix a1 = square_from_json(j["alpha1"], n, "twist.alpha1");
  Matrix a2 = square_from_json(j["alpha2"], n, "twist.alpha2");
  if (a1 != a2) fail("twist", "distinct twists alpha1 != alpha2 are not supported");
  return a1;
}

const json& require(const json& j, const std::string& key, const std::string& prefix = "") {
  if (!j.contains(key)) fail(prefix + key, "missing");
  return j[key];
}

}  // namespace

std::string AlgebraDocument::kind() const {
  return std::visit(overloaded{[](const HomAlgebra&) { return std::string("algebra"); },
                               [](const HomJMPAlgebra&) { return std::string("jmp"); },
                               [](const auto&) { return std::string("triple"); }},
                    structure);
}

std::size_t AlgebraDocument::dim() const {
  return std::visit([](const auto& s) { return s.dim(); }, structure);
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "matrix must be a list of rows");
  const std::size_t rows = j.size();
  if (rows && j[0].is_array() && !j[0].empty() && j[0][0].is_array())
    fail(field, "expected a single matrix; distinct twists alpha1 != alpha2 are not supported");
  const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) fail(at(field, r), "rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from_json(j[r][c], at(at(field, r), c));
  }
  return m;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

json to_json(const AlgebraDocument& doc) {
  json j;
  j["format"] = kFormatVersion;
  j["name"] = doc.name;
  j["kind"] = doc.kind();
  j["dim"] = doc.dim();
  j["meta"] = doc.meta.is_null() ? json::object() : doc.meta;
  json products = json::object();
  std::visit(overloaded{[&](const HomAlgebra& a) {
                          products["mul"] = sparse3(a.mul);
                          j["twist"] = matrix_to_json(a.twist);
                        },
                        [&](const HomJMPAlgebra& a) {
                          products["bracket"] = sparse3(a.bracket);
                          products["jordan"] = sparse3(a.jordan);
                          j["twist"] = matrix_to_json(a.twist);
                        },
                        [&](const HomTripleSystem& t) {
                          products["triple"] = sparse4(t.triple);
                          j["twist"] = matrix_to_json(t.twist);
                        },
                        [&](const HLJPSystem& t) {
                          products["triple"] = sparse4(t.triple);
                          products["jordan"] = sparse3(t.jordan);
                          j["twist"] = matrix_to_json(t.twist);
                        }},
             doc.structure);
  j["products"] = std::move(products);
  if (doc.form) j["form"] = matrix_to_json(doc.form->matrix);
  return j;
}

AlgebraDocument from_json(const json& j) {
  if (!j.is_object()) fail("document", "must be an object");
  const json& format = require(j, "format");
  if (!format.is_number_integer() || format.get<long long>() != kFormatVersion)
    fail("format", "unsupported version (expected " + std::to_string(kFormatVersion) + ")");

  AlgebraDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("name", "must be a string");
    doc.name = j["name"].get<std::string>();
  }
  const json& dimj = require(j, "dim");
  if (!dimj.is_number_integer() || dimj.get<long long>() < 0) fail("dim", "must be a non-negative integer");
  const auto n = static_cast<std::size_t>(dimj.get<long long>());
  const json& kindj = require(j, "kind");
  if (!kindj.is_string()) fail("kind", "must be a string");
  const std::string kind = kindj.get<std::string>();
  const json& products = require(j, "products");
  if (!products.is_object()) fail("products", "must be an object of named entry lists");
  const json& twistj = require(j, "twist");

  auto allowed = [&](std::initializer_list<const char*> names) {
    for (auto it = products.begin(); it != products.end(); ++it) {
      bool ok = false;
      for (auto* nm : names) ok = ok || it.key() == nm;
      if (!ok) fail("products." + it.key(), "not a product of kind \"" + kind + "\"");
    }
  };

  if (kind == "algebra") {
    allowed({"mul"});
    auto mul = dense_from_sparse<Tensor3>(require(products, "mul", "products."), n, 3, "products.mul");
    doc.structure = HomAlgebra(std::move(mul), square_from_json(twistj, n, "twist"));
  } else if (kind == "jmp") {
    allowed({"bracket", "jordan"});
    auto br = dense_from_sparse<Tensor3>(require(products, "bracket", "products."), n, 3, "products.bracket");
    auto jo = dense_from_sparse<Tensor3>(require(products, "jordan", "products."), n, 3, "products.jordan");
    doc.structure = HomJMPAlgebra(std::move(br), std::move(jo), square_from_json(twistj, n, "twist"));
  } else if (kind == "triple") {
    allowed({"triple", "jordan"});
    auto t = dense_from_sparse<Tensor4>(require(products, "triple", "products."), n, 4, "products.triple");
    Matrix tw = triple_twist_from_json(twistj, n);
    if (products.contains("jordan"))
      doc.structure = HLJPSystem(std::move(t), dense_from_sparse<Tensor3>(products["jordan"], n, 3, "products.jordan"),
                                 std::move(tw));
    else
      doc.structure = HomTripleSystem(std::move(t), std::move(tw));
  } else {
    fail("kind", "must be \"algebra\", \"jmp\" or \"triple\", got \"" + kind + "\"");
  }

  if (j.contains("form")) doc.form = BilinearForm{square_from_json(j["form"], n, "form")};
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) fail("meta", "must be an object");
    doc.meta = j["meta"];
  }
  return doc;
}

std::string save(const AlgebraDocument& doc) { return to_json(doc).dump(2) + "\n"; }

namespace {
json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

AlgebraDocument load(const std::string& text) { return from_json(parse_text(text)); }

AlgebraDocument load_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return load(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_file(const AlgebraDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot write file");
  out << save(doc);
}

Matrix load_map(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail("document", "must be an object");
  const json& format = require(j, "format");
  if (!format.is_number_integer() || format.get<long long>() != kFormatVersion) fail("format", "unsupported version");
  Matrix m = matrix_from_json(require(j, "map"), "map");
  if (m.rows() != m.cols()) fail("map", "must be square");
  return m;
}

Matrix load_map_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return load_map(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string save_map(const Matrix& m) {
  json j;
  j["format"] = kFormatVersion;
  j["map"] = matrix_to_json(m);
  return j.dump(2) + "\n";
}

json report_to_json(const CheckReport& r) {
  json j;
  j["identity"] = r.identity;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["tuples_checked"] = r.tuples_checked;
  if (r.witness) {
    json w;
    w["basis_tuple"] = r.witness->basis_tuple;
    json inputs = json::array();
    for (const auto& v : r.witness->inputs) inputs.push_back(vector_to_json(v));
    w["inputs"] = std::move(inputs);
    w["residual"] = vector_to_json(r.witness->residual);
    j["witness"] = std::move(w);
  }
  if (!r.sub.empty()) {
    json sub = json::array();
    for (const auto& s : r.sub) sub.push_back(report_to_json(s));
    j["sub"] = std::move(sub);
  }
  if (!r.cross_checks.empty()) j["cross_checks"] = r.cross_checks;
  return j;
}

// ---------------------------------------------------------------------------
// Examples

Matrix ex3_twist(const Scalar& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("twist must be invertible (lambda = 0)");
  const std::vector<Scalar> d{Scalar(1), lambda, lambda.inverse()};
  return Matrix::diagonal(d);
}

HomAlgebra ex3_flat() {
  Tensor3 c(3);
  c(0, 1, 1) = 1;
  c(1, 0, 1) = -1;
  c(0, 2, 2) = -1;
  c(2, 0, 2) = 1;
  c(1, 2, 0) = 1;
  c(2, 1, 0) = -1;
  return {std::move(c), Matrix::identity(3)};
}

HomAlgebra ex3(const Scalar& lambda) { return conjugation_twist(ex3_flat(), ex3_twist(lambda)); }

HomAlgebra ex5(const Scalar& nu, const Scalar& lambda) {
  if (nu.is_zero()) throw std::invalid_argument("twist must be invertible (nu = 0)");
  if (lambda.is_zero()) throw std::invalid_argument("twist must be invertible (lambda = 0)");
  const Scalar half(1, 2);
  const Scalar nu_inv = nu.inverse();
  Tensor3 c(5);
  c(0, 1, 4) = 1;
  c(0, 1, 3) = half;
  c(0, 3, 0) = half * nu;
  c(1, 0, 4) = 1;
  c(1, 0, 3) = -half;
  c(1, 3, 1) = -half * nu_inv;
  c(2, 3, 2) = half * lambda;
  c(3, 0, 0) = -half * nu;
  c(3, 1, 1) = half * nu_inv;
  c(3, 2, 2) = -half * lambda;
  c(3, 3, 4) = -1;
  const std::vector<Scalar> d{nu, nu_inv, lambda, Scalar(1), Scalar(1)};
  return {std::move(c), Matrix::diagonal(d)};
}

Matrix ex3_involution(const std::string& which) {
  if (which == "id") return Matrix::identity(3);
  Matrix m(3, 3);
  if (which == "swap") {
    m(0, 0) = -1;
    m(1, 2) = 1;
    m(2, 1) = 1;
  } else if (which == "neg") {
    m(0, 0) = 1;
    m(1, 1) = -1;
    m(2, 2) = -1;
  } else {
    throw std::invalid_argument("unknown involution \"" + which + "\" (expected swap, neg or id)");
  }
  return m;
}

namespace {

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& p) : p_(p) {}

  Scalar rational(const std::string& key, const Scalar& fallback) {
    used_.push_back(key);
    auto it = p_.find(key);
    if (it == p_.end()) return fallback;
    try {
      return Scalar::parse(it->second);
    } catch (const ParseError& e) {
      throw std::invalid_argument("parameter " + key + ": " + e.what());
    }
  }

  std::string text(const std::string& key, const std::string& fallback) {
    used_.push_back(key);
    auto it = p_.find(key);
    return it == p_.end() ? fallback : it->second;
  }

  void finish(const std::string& name) const {
    for (const auto& [k, v] : p_)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw std::invalid_argument("example " + name + " has no parameter \"" + k + "\"");
  }

 private:
  const std::map<std::string, std::string>& p_;
  std::vector<std::string> used_;
};

}  // namespace

AlgebraDocument example(const std::string& name, const std::map<std::string, std::string>& params) {
  Params p(params);
  AlgebraDocument doc;
  doc.name = name;
  doc.meta["constructed-by"] = "example";
  json recorded = json::object();

  if (name == "zero") {
    const Scalar n = p.rational("n", Scalar(3));
    if (!n.is_integer() || n.sign() < 0 || n > Scalar(64)) throw std::invalid_argument("parameter n must be an integer in [0, 64]");
    doc.structure = HomAlgebra::zero(static_cast<std::size_t>(n.numerator().get_ui()));
    recorded["n"] = n.str();
  } else if (name == "ex3") {
    const Scalar lambda = p.rational("lambda", Scalar(1));
    doc.structure = ex3(lambda);
    recorded["lambda"] = lambda.str();
  } else if (name == "ex3-flat") {
    doc.structure = ex3_flat();
  } else if (name == "ex5") {
    const Scalar nu = p.rational("nu", Scalar(1));
    const Scalar lambda = p.rational("lambda", Scalar(1));
    doc.structure = ex5(nu, lambda);
    recorded["nu"] = nu.str();
    recorded["lambda"] = lambda.str();
  } else if (name == "p6") {
    const std::string theta = p.text("theta", "swap");
    const std::string twisted = p.text("twisted", "1");
    if (twisted != "0" && twisted != "1") throw std::invalid_argument("parameter twisted must be 0 or 1");
    const Matrix th = ex3_involution(theta);
    TStarExtension ext = t_star_extension(minus_plus_pair(ex3_flat()));
    if (twisted == "1") {
      const BetaAutomorphism beta = beta_from_automorphism(ext, th);
      auto [j, b] = twisted_pseudo_euclidean(ext.result, ext.form, beta.beta);
      doc.structure = std::move(j);
      doc.form = std::move(b);
    } else {
      doc.structure = ext.result;
      doc.form = ext.form;
    }
    recorded["theta"] = theta;
    recorded["twisted"] = twisted;
  } else {
    throw std::invalid_argument("unknown example \"" + name + "\" (expected zero, ex3, ex3-flat, ex5 or p6)");
  }
  p.finish(name);
  doc.meta["params"] = std::move(recorded);
  return doc;
}

// ---------------------------------------------------------------------------
// Suites and reports

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flexible", "alternative", "jordan", "malcev",     "leibniz", "jmp",
                                              "admissible", "rl-condition", "power", "pseudo-euclidean", "hlts", "hljp"};
  return names;
}

namespace {

CheckReport flag(std::string name, bool ok) {
  CheckReport r;
  r.identity = std::move(name);
  r.pass = ok;
  r.tuples_checked = 1;
  return r;
}

CheckReport power_suite(const HomAlgebra& a, std::uint64_t seed) {
  PowerCheckOptions strict;
  PowerCheckOptions sampled;
  sampled.strict = false;
  sampled.max_power = 6;
  sampled.samples = 100;
  sampled.seed = seed;
  return CheckReport::conjunction("power-hom-associative",
                                  {check_power_hom_associative(a, strict), check_power_hom_associative(a, sampled)});
}

CheckReport algebra_form_report(const HomAlgebra& a, const BilinearForm& b) {
  const FormFlags f = check_form_properties(a, b);
  return CheckReport::conjunction("pseudo-euclidean",
                                  {flag("form-symmetric", f.symmetric), flag("form-nondegenerate", f.nondegenerate),
                                   flag("mul-invariant", f.invariant.at("mul")),
                                   flag("alpha-compatible", f.alpha_compatible)});
}

/// HLTS of a Hom-Malcev bracket: the Malcev check gates the construction.
CheckReport hlts_from_bracket(const HomAlgebra& bracket) {
  CheckReport malcev = check_hom_malcev(bracket);
  if (!malcev.pass) return CheckReport::conjunction("hlts", {std::move(malcev)});
  return CheckReport::conjunction("hlts", {std::move(malcev), check_hlts_axioms(triple_from_malcev(bracket))});
}

CheckReport hljp_from_jmp(const HomJMPAlgebra& j) {
  CheckReport jmp = check_hom_jmp(j);
  if (!jmp.pass) return CheckReport::conjunction("hljp", {std::move(jmp)});
  return CheckReport::conjunction("hljp", {std::move(jmp), check_hljp(hljp_from_homjmp(j))});
}

std::optional<CheckReport> single_product_suite(const HomAlgebra& a, const std::string& s, std::uint64_t seed) {
  if (s == "flexible") return check_hom_flexible(a);
  if (s == "alternative") return check_hom_alternative(a);
  if (s == "rl-condition") return check_condition_rl(a);
  if (s == "power") return power_suite(a, seed);
  return std::nullopt;
}

std::optional<CheckReport> jmp_suite(const HomJMPAlgebra& j, const std::optional<BilinearForm>& form,
                                     const std::string& s) {
  if (s == "jordan") return check_hom_jordan(j.jordan_algebra());
  if (s == "malcev") return check_hom_malcev(j.bracket_algebra());
  if (s == "leibniz") return check_hom_leibniz(j);
  if (s == "jmp") return check_hom_jmp(j);
  if (s == "hlts") return hlts_from_bracket(j.bracket_algebra());
  if (s == "hljp") return hljp_from_jmp(j);
  if (s == "pseudo-euclidean" && form) return check_pseudo_euclidean_homjmp(j, *form);
  return std::nullopt;
}

std::optional<Matrix> meta_gamma(const AlgebraDocument& doc) {
  if (!doc.meta.is_object() || !doc.meta.contains("gamma")) return std::nullopt;
  return square_from_json(doc.meta["gamma"], doc.dim(), "meta.gamma");
}

}  // namespace

std::optional<CheckReport> run_suite(const AlgebraDocument& doc, const std::string& suite, std::uint64_t seed) {
  return std::visit(
      overloaded{
          [&](const HomAlgebra& a) -> std::optional<CheckReport> {
            if (auto r = single_product_suite(a, suite, seed)) return r;
            if (suite == "admissible" || suite == "jmp") return check_admissible_jmp(a);
            if (suite == "pseudo-euclidean") {
              if (!doc.form) return std::nullopt;
              return algebra_form_report(a, *doc.form);
            }
            // Binary suites on a single product act on its commutator and anticommutator.
            return jmp_suite(minus_plus_pair(a), std::nullopt, suite);
          },
          [&](const HomJMPAlgebra& j) -> std::optional<CheckReport> {
            if (suite == "admissible") return check_admissible_jmp(jmp_to_admissible(j));
            if (auto r = single_product_suite(jmp_to_admissible(j), suite, seed)) return r;
            return jmp_suite(j, doc.form, suite);
          },
          [&](const HomTripleSystem& t) -> std::optional<CheckReport> {
            if (suite == "hlts") return check_hlts_axioms(t);
            if (suite == "pseudo-euclidean" && doc.form) {
              const auto g = meta_gamma(doc);
              return check_triple_invariance(t, *doc.form, g ? &*g : nullptr);
            }
            return std::nullopt;
          },
          [&](const HLJPSystem& s) -> std::optional<CheckReport> {
            if (suite == "hlts") return check_hlts_axioms(s.triple_system());
            if (suite == "hljp") return check_hljp(s);
            if (suite == "pseudo-euclidean" && doc.form) {
              const auto g = meta_gamma(doc);
              return check_triple_invariance(s.triple_system(), *doc.form, g ? &*g : nullptr);
            }
            return std::nullopt;
          }},
      doc.structure);
}

json build_report(const AlgebraDocument& doc, std::uint64_t seed) {
  json checks = json::object();
  json classification = json::object();
  const bool single = doc.kind() == "algebra";
  for (const auto& s : suite_names()) {
    auto r = run_suite(doc, s, seed);
    if (!r) continue;
    checks[s] = report_to_json(*r);
    std::string key = s;
    if (single && s == "jordan") key = "jordan(plus)";
    if (single && s == "malcev") key = "malcev(minus)";
    if (single && s == "leibniz") key = "leibniz(minus,plus)";
    classification[key] = r->pass;
  }
  json j;
  j["format"] = kFormatVersion;
  j["name"] = doc.name;
  j["kind"] = doc.kind();
  j["dim"] = doc.dim();
  j["seed"] = seed;
  j["checks"] = std::move(checks);
  j["classification"] = std::move(classification);
  return j;
}

}  // namespace homjmp
