#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "homjmp/cli.hpp"

using namespace homjmp;
using fixtures::e;
using nlohmann::json;

namespace {

std::string tmp(const std::string& name) { return std::string(HOMJMP_TEST_TMP) + "/" + name; }

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "homjmp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string parse_error_of(const std::string& text) {
  try {
    load(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

const char* kZeroHeader = R"({"format": 1, "name": "t", "kind": "algebra", "dim": 3,
  "twist": [["1","0","0"],["0","1","0"],["0","0","1"]], )";

}  // namespace

TEST_CASE("save and load round-trip") {
  AlgebraDocument zero = example("zero", {{"n", "3"}});
  AlgebraDocument back = load(save(zero));
  CHECK(std::get<HomAlgebra>(back.structure).mul == std::get<HomAlgebra>(zero.structure).mul);
  CHECK(std::get<HomAlgebra>(back.structure).twist == Matrix::identity(3));
  CHECK(back.name == "zero");

  for (const auto& doc : {example("ex3", {{"lambda", "-5/7"}}), example("ex5", {{"nu", "2"}, {"lambda", "3"}}),
                          fixtures::p6(), fixtures::p6("neg", false)}) {
    const std::string once = save(doc);
    CHECK(save(load(once)) == once);
  }
  AlgebraDocument t;
  t.name = "triple";
  t.structure = hljp_from_homjmp(fixtures::jmp_of(fixtures::p6()));
  const std::string ts = save(t);
  CHECK(save(load(ts)) == ts);
  CHECK(load(ts).kind() == "triple");
  CHECK(std::holds_alternative<HLJPSystem>(load(ts).structure));
}

TEST_CASE("sparse entries encode products directly") {
  AlgebraDocument d = load(std::string(kZeroHeader) + R"("products": {"mul": [[0,1,1,"1"]]}})");
  const auto& a = std::get<HomAlgebra>(d.structure);
  CHECK(apply_product(a.mul, e(3, 0), e(3, 1)) == e(3, 1));
  CHECK(apply_product(a.mul, e(3, 1), e(3, 0)) == zero_vector(3));
}

TEST_CASE("load errors name the offending field") {
  CHECK(parse_error_of(std::string(kZeroHeader) + R"("products": {"mul": [[0,1,1,"1/0"]]}})")
            .find("denominator must be positive") != std::string::npos);
  CHECK(parse_error_of(std::string(kZeroHeader) + R"("products": {"mul": [[0,1,1,"1/0"]]}})")
            .find("products.mul[0]") != std::string::npos);
  CHECK(parse_error_of(std::string(kZeroHeader) + R"("products": {"mul": [[0,3,1,"1"]]}})").find("out of range") !=
        std::string::npos);
  CHECK(parse_error_of(std::string(kZeroHeader) + R"("products": {"mul": [[0,1,1,2]]}})").find("rational string") !=
        std::string::npos);
  CHECK(parse_error_of(std::string(kZeroHeader) + R"("products": {"mul": [[0,1,1,"1"],[0,1,1,"2"]]}})")
            .find("duplicate") != std::string::npos);
  CHECK(parse_error_of(R"({"format": 1, "name": "j", "kind": "jmp", "dim": 1, "twist": [["1"]],
      "products": {"bracket": []}})")
            .find("products.jordan") != std::string::npos);
  CHECK(parse_error_of(R"({"format": 2})").find("format") != std::string::npos);
  CHECK(parse_error_of("{ not json").find("invalid JSON") != std::string::npos);
  CHECK(parse_error_of(R"({"format": 1, "name": "t", "kind": "triple", "dim": 1,
      "twist": {"alpha1": [["1"]], "alpha2": [["2"]]}, "products": {"triple": []}})")
            .find("alpha1 != alpha2") != std::string::npos);
  CHECK(parse_error_of(R"({"format": 1, "name": "t", "kind": "triple", "dim": 1,
      "twist": {"alpha1": [["1"]], "alpha2": [["1"]]}, "products": {"triple": []}})")
            .empty());
  CHECK(parse_error_of(std::string(kZeroHeader) + R"("products": {"mul": []}, "form": [["1"]]})").find("form") !=
        std::string::npos);
}

TEST_CASE("examples") {
  CHECK(std::get<HomAlgebra>(example("ex3", {{"lambda", "1"}}).structure).mul == ex3_flat().mul);
  CHECK(std::get<HomAlgebra>(example("ex3-flat", {}).structure).mul == ex3_flat().mul);
  const AlgebraDocument five = example("ex5", {{"nu", "2"}, {"lambda", "3"}});
  const auto& a = std::get<HomAlgebra>(five.structure);
  CHECK(a.mul(0, 1, 4) == Scalar(1));
  CHECK(a.mul(0, 1, 3) == Scalar(1, 2));
  for (const auto& bad : std::vector<std::map<std::string, std::string>>{{{"lambda", "0"}}}) {
    try {
      example("ex3", bad);
      FAIL("expected an error");
    } catch (const std::invalid_argument& ex) {
      CHECK(std::string(ex.what()).find("twist must be invertible") != std::string::npos);
    }
  }
  CHECK_THROWS_WITH_AS(example("ex5", {{"nu", "0"}, {"lambda", "1"}}), doctest::Contains("twist must be invertible"),
                       std::invalid_argument);
  CHECK_THROWS_AS(example("ex9", {}), std::invalid_argument);
  CHECK_THROWS_AS(example("ex3", {{"mu", "1"}}), std::invalid_argument);
  CHECK(example("p6", {}).form.has_value());
  CHECK(example("p6", {}).dim() == 6);
}

TEST_CASE("cli check exit codes") {
  write(tmp("zero3.json"), save(example("zero", {})));
  write(tmp("ex3_2.json"), save(example("ex3", {{"lambda", "2"}})));
  CHECK(cli({"check", tmp("zero3.json"), "--suite", "all"}).code == 0);

  Run alt = cli({"check", tmp("ex3_2.json"), "--suite", "alternative"});
  CHECK(alt.code == 1);
  json doc = json::parse(alt.out);
  CHECK(doc["verdict"] == "fail");
  CHECK(doc["reports"]["alternative"]["sub"][0]["witness"]["basis_tuple"] == json::array({0, 0, 1}));
  // library and CLI agree
  CHECK((doc["verdict"] == "pass") == check_hom_alternative(ex3(Scalar(2))).pass);

  CHECK(cli({"check", tmp("ex3_2.json"), "--suite", "admissible"}).code == 0);
  CHECK(cli({"bogus"}).code == 2);
  Run flag = cli({"check", tmp("ex3_2.json"), "--frobnicate"});
  CHECK(flag.code == 2);
  CHECK(flag.err.find("check") != std::string::npos);
  CHECK(cli({"check", tmp("ex3_2.json"), "--suite", "nonsense"}).code == 2);
  CHECK(cli({"check", tmp("missing.json")}).code == 2);
  CHECK(cli({}).code == 2);
  write(tmp("bad.json"), std::string(kZeroHeader) + R"("products": {"mul": [[0,1,1,"1/0"]]}})");
  Run bad = cli({"check", tmp("bad.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("denominator must be positive") != std::string::npos);
  CHECK(cli({"check", tmp("ex3_2.json"), "--suite", "hljp"}).code == 0);
}

TEST_CASE("report is deterministic and honours the seed") {
  write(tmp("ex3_5.json"), save(example("ex3", {{"lambda", "5"}})));
  Run a = cli({"report", tmp("ex3_5.json"), "--seed", "9"});
  Run b = cli({"report", tmp("ex3_5.json"), "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json r = json::parse(a.out);
  CHECK(r["seed"] == 9);
  CHECK(r["classification"]["admissible"] == true);
  CHECK(r["classification"]["alternative"] == false);

  setenv("HOMJMP_SEED", "77", 1);
  json env = json::parse(cli({"report", tmp("ex3_5.json")}).out);
  unsetenv("HOMJMP_SEED");
  CHECK(env["seed"] == 77);
  CHECK(json::parse(cli({"report", tmp("ex3_5.json")}).out)["seed"] == 1);
}

TEST_CASE("cli constructions") {
  write(tmp("flat.json"), save(example("ex3-flat", {})));
  write(tmp("alpha2.json"), save_map(ex3_twist(Scalar(2))));
  write(tmp("swap.json"), save_map(ex3_involution("swap")));
  write(tmp("diag2.json"), save_map(ex3_twist(Scalar(2))));
  write(tmp("scale.json"), save_map(Scalar(2) * Matrix::identity(3)));

  Run tw = cli({"twist", tmp("flat.json"), "--map", tmp("alpha2.json")});
  REQUIRE(tw.code == 0);
  AlgebraDocument twisted = load(tw.out);
  CHECK(std::get<HomAlgebra>(twisted.structure).mul == ex3(Scalar(2)).mul);
  CHECK(twisted.meta["constructed-by"] == "twist");
  CHECK(cli({"twist", tmp("flat.json"), "--map", tmp("scale.json")}).code == 1);
  CHECK(cli({"twist", tmp("flat.json"), "--map", tmp("scale.json"), "--weak"}).code == 1);

  Run te = cli({"textend", tmp("flat.json"), "-o", tmp("p6u.json")});
  REQUIRE(te.code == 0);
  AlgebraDocument p = load_file(tmp("p6u.json"));
  CHECK(p.dim() == 6);
  CHECK(p.meta["constructed-by"] == "textension");
  CHECK(cli({"check", tmp("p6u.json"), "--suite", "pseudo-euclidean"}).code == 0);

  Run tb = cli({"textend", tmp("flat.json"), "--auto", tmp("swap.json"), "-o", tmp("p6.json")});
  REQUIRE(tb.code == 0);
  AlgebraDocument viacli = load_file(tmp("p6.json"));
  AlgebraDocument direct = fixtures::p6();
  CHECK(fixtures::jmp_of(viacli).bracket == fixtures::jmp_of(direct).bracket);
  CHECK(fixtures::jmp_of(viacli).jordan == fixtures::jmp_of(direct).jordan);
  CHECK(fixtures::jmp_of(viacli).twist == fixtures::jmp_of(direct).twist);
  CHECK(*viacli.form == *direct.form);
  CHECK(cli({"check", tmp("p6.json"), "--suite", "pseudo-euclidean"}).code == 0);
  Run nb = cli({"textend", tmp("flat.json"), "--auto", tmp("diag2.json")});
  CHECK(nb.code == 1);
  CHECK(json::parse(nb.out)["image_in_centers"] == false);

  Run an = cli({"anfamily", tmp("p6.json"), "--n", "2", "-o", tmp("a2.json")});
  REQUIRE(an.code == 0);
  CHECK(cli({"check", tmp("a2.json"), "--suite", "pseudo-euclidean"}).code == 0);
  CHECK(cli({"anfamily", tmp("flat.json"), "--n", "1"}).code == 2);

  Run tr = cli({"triple", tmp("p6.json"), "-o", tmp("p6t.json")});
  REQUIRE(tr.code == 0);
  CHECK(cli({"check", tmp("p6t.json"), "--suite", "all"}).code == 0);
  CHECK(cli({"check", tmp("p6t.json"), "--suite", "flexible"}).code == 2);

  Run ex = cli({"example", "ex5", "--param", "nu=2", "--param", "lambda=3", "-o", tmp("ex5.json")});
  CHECK(ex.code == 0);
  CHECK(cli({"example", "ex3", "--param", "lambda=0"}).code == 2);
  CHECK(cli({"example", "ex3", "--param", "lambda"}).code == 2);
}
