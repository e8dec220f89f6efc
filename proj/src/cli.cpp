#include "homjmp/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "homjmp/constructions.hpp"
#include "homjmp/io.hpp"

namespace homjmp {

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Prints `doc` on `out` and returns 1: a precondition identity failed.
int failure(std::ostream& out, json doc) {
  out << doc.dump(2) << "\n";
  return 1;
}

json map_flags_json(const MapFlags& f) {
  json j;
  j["weak_morphism"] = f.weak_morphism;
  j["morphism"] = f.morphism;
  j["automorphism"] = f.automorphism;
  if (f.symmetric_wrt_form) j["symmetric_wrt_form"] = *f.symmetric_wrt_form;
  return j;
}

void emit(const AlgebraDocument& doc, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << save(doc);
  else
    save_file(doc, path);
}

json derived_meta(const AlgebraDocument& src, const std::string& by) {
  json m = json::object();
  m["constructed-by"] = by;
  m["source"] = src.name;
  return m;
}

/// Algebra inputs act through their commutator/anticommutator pair.
HomJMPAlgebra as_jmp(const AlgebraDocument& doc, const std::string& command) {
  if (const auto* j = std::get_if<HomJMPAlgebra>(&doc.structure)) return *j;
  if (const auto* a = std::get_if<HomAlgebra>(&doc.structure)) return minus_plus_pair(*a);
  throw UsageError(command + ": expected an algebra or jmp file, got kind \"" + doc.kind() + "\"");
}

int cmd_check(const std::string& file, const std::string& suite, std::uint64_t seed, std::ostream& out) {
  const AlgebraDocument doc = load_file(file);
  json reports = json::object();
  bool pass = true;
  if (suite == "all") {
    for (const auto& s : suite_names()) {
      auto r = run_suite(doc, s, seed);
      if (!r) continue;
      pass = pass && r->pass;
      reports[s] = report_to_json(*r);
    }
  } else {
    auto r = run_suite(doc, suite, seed);
    if (!r) throw UsageError("suite \"" + suite + "\" does not apply to kind \"" + doc.kind() + "\"");
    pass = r->pass;
    reports[suite] = report_to_json(*r);
  }
  json j;
  j["file"] = doc.name;
  j["suite"] = suite;
  j["seed"] = seed;
  j["verdict"] = pass ? "pass" : "fail";
  j["reports"] = std::move(reports);
  out << j.dump(2) << "\n";
  return pass ? 0 : 1;
}

int cmd_twist(const std::string& file, const std::string& map_file, bool weak, const std::string& output,
              std::ostream& out) {
  const AlgebraDocument doc = load_file(file);
  const Matrix beta = load_map_file(map_file);
  if (beta.rows() != doc.dim()) throw UsageError("twist: map dimension does not match the algebra");
  AlgebraDocument res;
  res.name = doc.name + "-twist";
  res.meta = derived_meta(doc, "twist");
  res.meta["map"] = matrix_to_json(beta);
  res.meta["requirement"] = weak ? "weak-morphism" : "morphism";
  const auto req = weak ? MorphismRequirement::Weak : MorphismRequirement::Full;

  MapFlags flags;
  if (const auto* a = std::get_if<HomAlgebra>(&doc.structure)) {
    flags = check_map_properties(*a, beta);
    if (flags.weak_morphism && (weak || flags.morphism)) res.structure = yau_twist(*a, beta, req);
  } else if (const auto* j = std::get_if<HomJMPAlgebra>(&doc.structure)) {
    flags = check_map_properties(*j, beta);
    if (flags.weak_morphism && (weak || flags.morphism)) res.structure = yau_twist(*j, beta, req);
  } else {
    throw UsageError("twist: expected an algebra or jmp file");
  }
  if (!flags.weak_morphism || (!weak && !flags.morphism)) {
    json f;
    f["verdict"] = "fail";
    f["reason"] = weak ? "map is not a weak morphism" : "map is not a morphism";
    f["map_properties"] = map_flags_json(flags);
    return failure(out, std::move(f));
  }
  emit(res, output, out);
  return 0;
}

int cmd_textend(const std::string& file, const std::string& auto_file, const std::string& output, std::ostream& out) {
  const AlgebraDocument doc = load_file(file);
  const HomJMPAlgebra base = as_jmp(doc, "textend");
  if (base.twist != Matrix::identity(base.dim())) throw UsageError("textend: the input twist must be the identity");
  CheckReport jmp = check_hom_jmp(base);
  if (!jmp.pass) {
    json f;
    f["verdict"] = "fail";
    f["reason"] = "input is not a JMP algebra";
    f["report"] = report_to_json(jmp);
    return failure(out, std::move(f));
  }
  const TStarExtension ext = t_star_extension(base);
  AlgebraDocument res;
  res.name = doc.name + "-textension";
  res.meta = derived_meta(doc, "textension");

  if (auto_file.empty()) {
    res.structure = ext.result;
    res.form = ext.form;
    emit(res, output, out);
    return 0;
  }

  const Matrix a = load_map_file(auto_file);
  if (a.rows() != base.dim()) throw UsageError("textend: automorphism dimension does not match the algebra");
  const MapFlags flags = check_map_properties(base, a);
  if (!flags.automorphism) {
    json f;
    f["verdict"] = "fail";
    f["reason"] = "map is not an automorphism of the base";
    f["map_properties"] = map_flags_json(flags);
    return failure(out, std::move(f));
  }
  const BetaAutomorphism beta = beta_from_automorphism(ext, a);
  if (!beta.is_automorphism) {
    json f;
    f["verdict"] = "fail";
    f["reason"] = "beta is not an automorphism of the extension";
    f["beta"] = matrix_to_json(beta.beta);
    f["beta_is_automorphism"] = beta.is_automorphism;
    f["image_in_centers"] = beta.image_in_centers;
    return failure(out, std::move(f));
  }
  auto [j, b] = twisted_pseudo_euclidean(ext.result, ext.form, beta.beta);
  res.structure = std::move(j);
  res.form = std::move(b);
  res.meta["automorphism"] = matrix_to_json(a);
  res.meta["beta"] = matrix_to_json(beta.beta);
  res.meta["image_in_centers"] = beta.image_in_centers;
  emit(res, output, out);
  return 0;
}

int cmd_anfamily(const std::string& file, unsigned n, const std::string& output, std::ostream& out) {
  const AlgebraDocument doc = load_file(file);
  const auto* j = std::get_if<HomJMPAlgebra>(&doc.structure);
  if (!j) throw UsageError("anfamily: expected a jmp file");
  if (!doc.form) throw UsageError("anfamily: the input needs a \"form\"");
  CheckReport pe = check_pseudo_euclidean_homjmp(*j, *doc.form);
  if (!pe.pass) {
    json f;
    f["verdict"] = "fail";
    f["reason"] = "input is not pseudo-Euclidean";
    f["report"] = report_to_json(pe);
    return failure(out, std::move(f));
  }
  auto [an, bn] = an_family(*j, *doc.form, n);
  AlgebraDocument res;
  res.name = doc.name + "-a" + std::to_string(n);
  res.meta = derived_meta(doc, "an-family");
  res.meta["n"] = n;
  res.structure = std::move(an);
  res.form = std::move(bn);
  emit(res, output, out);
  return 0;
}

int cmd_triple(const std::string& file, const std::string& output, std::ostream& out) {
  const AlgebraDocument doc = load_file(file);
  AlgebraDocument res;
  res.name = doc.name + "-triple";
  res.meta = derived_meta(doc, "triple");
  if (const auto* a = std::get_if<HomAlgebra>(&doc.structure)) {
    const HomAlgebra bracket = minus_algebra(*a);
    CheckReport m = check_hom_malcev(bracket);
    if (!m.pass) {
      json f;
      f["verdict"] = "fail";
      f["reason"] = "commutator algebra is not Hom-Malcev";
      f["report"] = report_to_json(m);
      return failure(out, std::move(f));
    }
    res.structure = triple_from_malcev(bracket);
  } else if (const auto* j = std::get_if<HomJMPAlgebra>(&doc.structure)) {
    CheckReport r = check_hom_jmp(*j);
    if (!r.pass) {
      json f;
      f["verdict"] = "fail";
      f["reason"] = "input is not a Hom-JMP algebra";
      f["report"] = report_to_json(r);
      return failure(out, std::move(f));
    }
    res.structure = hljp_from_homjmp(*j);
    if (doc.form) {
      res.form = doc.form;
      res.meta["gamma"] = matrix_to_json(j->twist);
    }
  } else {
    throw UsageError("triple: expected an algebra or jmp file");
  }
  emit(res, output, out);
  return 0;
}

int cmd_report(const std::string& file, std::uint64_t seed, std::ostream& out) {
  out << build_report(load_file(file), seed).dump(2) << "\n";
  return 0;
}

int cmd_example(const std::string& name, const std::vector<std::string>& raw, const std::string& output,
                std::ostream& out) {
  std::map<std::string, std::string> params;
  for (const auto& kv : raw) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got \"" + kv + "\"");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  emit(example(name, params), output, out);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact identity checks and constructions for Hom-JMP algebras", "homjmp"};
  app.require_subcommand(1);

  std::string file, map_file, auto_file, output, name, suite = "all";
  std::uint64_t seed = kDefaultSeed;
  unsigned n = 0;
  bool weak = false;
  std::vector<std::string> params;

  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);

  auto* check = app.add_subcommand("check", "Run identity suites on an algebra file");
  check->add_option("FILE", file, "Algebra file")->required();
  check->add_option("--suite", suite, "Suite to run")->check(CLI::IsMember(suites));
  check->add_option("--seed", seed, "Seed for sampled checks")->envname("HOMJMP_SEED");

  auto* twist = app.add_subcommand("twist", "Compose products and twist with a (weak) morphism");
  twist->add_option("FILE", file, "Algebra file")->required();
  twist->add_option("--map", map_file, "Map file")->required();
  twist->add_flag("--weak", weak, "Accept weak morphisms");
  twist->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* textend = app.add_subcommand("textend", "T*-extension of a JMP algebra");
  textend->add_option("FILE", file, "Algebra file")->required();
  textend->add_option("--auto", auto_file, "Automorphism map file; twists the extension by its beta");
  textend->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* anfamily = app.add_subcommand("anfamily", "n-th member of the A_n family of a pseudo-Euclidean algebra");
  anfamily->add_option("FILE", file, "JMP file with a form")->required();
  anfamily->add_option("--n", n, "Index n >= 0")->required();
  anfamily->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* triple = app.add_subcommand("triple", "Derived Hom-Lie (Jordan-Poisson) triple system");
  triple->add_option("FILE", file, "Algebra file")->required();
  triple->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* report = app.add_subcommand("report", "Every applicable check plus a classification");
  report->add_option("FILE", file, "Algebra file")->required();
  report->add_option("--seed", seed, "Seed for sampled checks")->envname("HOMJMP_SEED");

  auto* ex = app.add_subcommand("example", "Write a worked example: zero, ex3, ex3-flat, ex5, p6");
  ex->add_option("NAME", name, "Example name")->required();
  ex->add_option("--param", params, "Parameter k=v (repeatable)");
  ex->add_option("-o,--output", output, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*check) return cmd_check(file, suite, seed, out);
    if (*twist) return cmd_twist(file, map_file, weak, output, out);
    if (*textend) return cmd_textend(file, auto_file, output, out);
    if (*anfamily) return cmd_anfamily(file, n, output, out);
    if (*triple) return cmd_triple(file, output, out);
    if (*report) return cmd_report(file, seed, out);
    if (*ex) return cmd_example(name, params, output, out);
  } catch (const PreconditionFailed& e) {
    json f;
    f["verdict"] = "fail";
    f["reason"] = e.what();
    return failure(out, std::move(f));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace homjmp
