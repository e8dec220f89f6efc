#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "homjmp/forms.hpp"
#include "homjmp/identity.hpp"
#include "homjmp/triples.hpp"

namespace homjmp {

/// In-memory form of an algebra file. The structure determines the file's
/// "kind": HomAlgebra ↔ "algebra", HomJMPAlgebra ↔ "jmp", HomTripleSystem or
/// HLJPSystem ↔ "triple" (the latter carries a "jordan" product list).
struct AlgebraDocument {
  using Structure = std::variant<HomAlgebra, HomJMPAlgebra, HomTripleSystem, HLJPSystem>;

  std::string name;
  Structure structure;
  std::optional<BilinearForm> form;
  nlohmann::json meta = nlohmann::json::object();

  std::string kind() const;
  std::size_t dim() const;
};

inline constexpr int kFormatVersion = 1;

nlohmann::json to_json(const AlgebraDocument& doc);
/// Throws ParseError naming the offending field or entry.
AlgebraDocument from_json(const nlohmann::json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string save(const AlgebraDocument& doc);
AlgebraDocument load(const std::string& text);
AlgebraDocument load_file(const std::string& path);
void save_file(const AlgebraDocument& doc, const std::string& path);

/// Map files: {"format": 1, "map": [[...], ...]} with rational strings.
Matrix load_map(const std::string& text);
Matrix load_map_file(const std::string& path);
std::string save_map(const Matrix& m);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json vector_to_json(const Vector& v);

/// Structured form of a CheckReport (exact rationals as strings).
nlohmann::json report_to_json(const CheckReport& r);

// ---------------------------------------------------------------------------
// Worked examples

/// α_λ = diag(1, λ, 1/λ) on the three-dimensional example.
Matrix ex3_twist(const Scalar& lambda);
/// The untwisted three-dimensional table (e1e2 = e2, e2e3 = e1, e3e1 = e3, skew).
HomAlgebra ex3_flat();
/// Three-dimensional example twisted by α_λ: x ⋆_α y = α(x) ⋆ α(y).
HomAlgebra ex3(const Scalar& lambda);
/// Five-dimensional example with α = diag(ν, 1/ν, λ, 1, 1).
HomAlgebra ex5(const Scalar& nu, const Scalar& lambda);
/// Involutive automorphisms of ex3-flat: "swap" (e1 ↦ −e1, e2 ↔ e3), "neg"
/// (diag(1,−1,−1)) and "id".
Matrix ex3_involution(const std::string& which);

/// Generates a named example: zero (n), ex3 (lambda), ex3-flat, ex5 (nu,
/// lambda), p6 (theta, twisted). Parameters are rational strings. Throws
/// std::invalid_argument for unknown names or parameters and for zero λ/ν.
AlgebraDocument example(const std::string& name, const std::map<std::string, std::string>& params);

// ---------------------------------------------------------------------------
// Reports

/// Suite names accepted by `check`.
const std::vector<std::string>& suite_names();

/// Runs one suite against the document. Returns nullopt when the suite does
/// not apply to the document's kind.
std::optional<CheckReport> run_suite(const AlgebraDocument& doc, const std::string& suite, std::uint64_t seed);

/// Full report: every applicable check plus a classification map.
nlohmann::json build_report(const AlgebraDocument& doc, std::uint64_t seed);

}  // namespace homjmp
