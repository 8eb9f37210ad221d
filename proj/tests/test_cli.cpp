#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ering/cli.hpp"
#include "ering/errors.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace ering;
using oracle::fn;
using oracle::mat;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = ERING_FIXTURES;

Model fixture(const std::string& name) { return load_model(kFixtures / name); }

SuiteRequest request(SuiteId id, const Carrier& c, std::size_t budget = 100, std::uint64_t seed = 1) {
  SuiteRequest r;
  r.suite = id;
  r.strategy = {default_mode(c), seed, budget, 6};
  return r;
}

ModelError model_error(const std::string& text) {
  try {
    parse_model(text, "m.json");
  } catch (const ModelError& e) {
    return e;
  }
  ADD_FAILURE() << "no ModelError for " << text;
  return ModelError("", 0, 0, "", "");
}

fs::path temp_dir() {
  fs::path d = fs::temp_directory_path() / ("ering_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

// Runs the CLI and returns its exit status.
int cli(const std::string& args) {
  const std::string cmd = std::string(ERING_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(LoadModel, Examples) {
  const Model z = parse_model(R"({"kind": "function_ring", "atoms": [["x"], ["y"]], "values": "int"})");
  EXPECT_EQ(z.carrier->kind(), CarrierKind::function_ring);
  EXPECT_TRUE(z.carrier->integer_valued());
  EXPECT_EQ(z.carrier->effects().size(), 4u);
  EXPECT_EQ(z.mutation, Mutation::none);

  const Model m = parse_model(R"({"kind": "matrix", "dim": 2})");
  EXPECT_EQ(m.carrier->kind(), CarrierKind::matrix_model);
  EXPECT_EQ(m.carrier->one(), mat({{1, 0}, {0, 1}}));

  const Model p = fixture("product.json");
  EXPECT_EQ(p.carrier->kind(), CarrierKind::product);
  EXPECT_EQ(p.name, "Z x Z");
  EXPECT_EQ(fixture("ints3.json").carrier->effects().size(), 8u);
  EXPECT_EQ(fixture("grid4.json").carrier->effects().size(), 25u);
}

TEST(LoadModel, SemanticErrorsNameTheField) {
  const ModelError empty = model_error("{\n  \"kind\": \"function_ring\",\n  \"atoms\": [],\n  \"values\": \"int\"\n}");
  EXPECT_EQ(empty.field(), "/atoms");
  EXPECT_EQ(empty.line(), 3u);
  EXPECT_EQ(empty.column(), 3u);

  EXPECT_EQ(model_error(R"({"kind": "function_ring", "atoms": 2, "values": "int", "grid": 4})").field(), "/grid");
  EXPECT_EQ(model_error(R"({"kind": "function_ring", "atoms": 2, "values": "real"})").field(), "/values");
  EXPECT_EQ(model_error(R"({"kind": "function_ring", "atoms": [["x"], ["x"]], "values": "int"})").field(), "/atoms");
  EXPECT_EQ(model_error(R"({"kind": "matrix", "dim": 0})").field(), "/dim");
  EXPECT_EQ(model_error(R"({"kind": "torus"})").field(), "/kind");
  EXPECT_EQ(model_error(R"({"kind": "matrix", "dim": 2, "mutation": "typo"})").field(), "/mutation");
  EXPECT_EQ(model_error(R"({"kind": "matrix"})").field(), "");
  EXPECT_EQ(model_error("[1, 2]").field(), "");

  try {
    load_model(kFixtures / "bad" / "unknown_field.json");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.field(), "/right/dims");
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("unknown_field.json:4:"), std::string::npos);
  }
  // mutations only at the top level
  EXPECT_EQ(model_error(R"({"kind": "product", "left": {"kind": "matrix", "dim": 1, "mutation": "symmetric_cone"},
                            "right": {"kind": "matrix", "dim": 1}})")
                .field(),
            "/left/mutation");
}

TEST(LoadModel, SyntaxErrorsHaveLineAndColumn) {
  try {
    load_model(kFixtures / "bad" / "syntax.json");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 12u);
    EXPECT_TRUE(e.field().empty());
  }
  EXPECT_THROW(load_model(kFixtures / "missing.json"), ModelError);
}

TEST(ElementJson, RoundTrip) {
  const Rational half(1, 2);
  const std::vector<Element> elements = {fn({1, -half, 0}), mat({{1, half}, {half, Rational(-3, 7)}}),
                                         Element(fn({2}), mat({{0}}))};
  for (const auto& e : elements) EXPECT_EQ(element_from_json(element_to_json(e)), e) << element_to_json(e);
  EXPECT_EQ(element_to_json(fn({1, -half})), R"(["1","-1/2"])");
  EXPECT_EQ(element_from_json("[1, \"2/4\"]"), fn({1, half}));
  EXPECT_THROW(element_from_json("[[1, 2], [3]]"), std::invalid_argument);
  EXPECT_THROW(element_from_json("[\"x\"]"), std::invalid_argument);
  EXPECT_THROW(element_from_json("{\"first\": [1]}"), std::invalid_argument);
  EXPECT_THROW(element_from_json("[1,"), std::invalid_argument);
}

TEST(RunSuite, AxiomsPassOnIntegers) {
  const Model m = fixture("ints2.json");
  const auto req = request(SuiteId::axioms, *m.carrier);
  const auto r = run_suite(m, req);
  EXPECT_EQ(verdict(r), "pass");
  EXPECT_EQ(exit_status(r, true), exit_code::pass);
  EXPECT_NE(render_text(m, req, r).find("0 failures"), std::string::npos);
}

TEST(RunSuite, BringOnRationalsIsAllFalse) {
  const Model m = parse_model(R"({"kind": "function_ring", "atoms": 2, "values": "rational"})");
  const auto r = run_suite(m, request(SuiteId::bring, *m.carrier));
  EXPECT_EQ(exit_status(r, true), exit_code::pass);
  int decided = 0;
  for (const auto& [k, v] : r.findings)
    if (k.rfind("th:E=P.(", 0) == 0) {
      EXPECT_EQ(v.rfind("false:", 0), 0u) << k << " " << v;
      ++decided;
    }
  EXPECT_EQ(decided, 6);
}

TEST(RunSuite, CapabilityMismatch) {
  const Model q = fixture("rationals3.json");
  EXPECT_THROW(run_suite(q, request(SuiteId::stone, *q.carrier)), CapabilityError);
  const Model m = fixture("matrix2.json");
  auto req = request(SuiteId::boolean, *m.carrier);
  EXPECT_THROW(run_suite(m, req), CapabilityError);
  req.suite = SuiteId::axioms;
  req.strategy.mode = SampleMode::exhaustive;
  EXPECT_THROW(run_suite(m, req), CapabilityError);
}

TEST(RunSuite, AllSkipsIncompatibleSuites) {
  const Model m = fixture("grid4.json");
  const auto r = run_suite(m, request(SuiteId::all, *m.carrier, 60));
  EXPECT_EQ(r.suite, "all");
  EXPECT_TRUE(r.passed());
  const bool skipped_stone = std::any_of(r.notes.begin(), r.notes.end(),
                                         [](const std::string& n) { return n.rfind("skipped stone:", 0) == 0; });
  EXPECT_TRUE(skipped_stone);
  const bool ran_boolean = std::any_of(r.laws.begin(), r.laws.end(),
                                       [](const LawTally& t) { return t.law_id == "th:ellgroup.sup"; });
  EXPECT_TRUE(ran_boolean);
}

TEST(RunSuite, StrictTurnsUndecidedIntoExitTwo) {
  VerificationReport r;
  r.undecided.push_back({0, "coexistence.witness", {}, "no witness"});
  EXPECT_EQ(verdict(r), "undecided");
  EXPECT_EQ(exit_status(r, false), exit_code::pass);
  EXPECT_EQ(exit_status(r, true), exit_code::undecided);
  r.failures.push_back({1, "FF.i", {}, "x", "y"});
  EXPECT_EQ(exit_status(r, true), exit_code::failures);
}

struct MutantCase {
  const char* file;
  SuiteId suite;
  const char* law;
};

class Mutants : public ::testing::TestWithParam<MutantCase> {};

TEST_P(Mutants, RejectedWithReplayableCounterexample) {
  const auto& mc = GetParam();
  const Model m = load_model(kFixtures / "mutants" / mc.file);
  const auto req = request(mc.suite, *m.carrier, 200);
  const auto r = run_suite(m, req);
  ASSERT_EQ(exit_status(r, false), exit_code::failures);
  const bool named = std::any_of(r.failures.begin(), r.failures.end(), [&](const Failure& f) { return f.law_id == mc.law; });
  EXPECT_TRUE(named) << "first failure: " << r.failures[0].law_id;

  const std::string js = render_json(m, req, r);
  const auto j = nlohmann::json::parse(js);
  ASSERT_FALSE(j["failures"].empty());
  const auto& f0 = j["failures"][0];
  EXPECT_TRUE(f0.contains("inputs"));
  EXPECT_FALSE(f0["actual"].get<std::string>().empty());

  const auto replayed = replay_report(m, js);
  ASSERT_EQ(replayed.size(), r.failures.size());
  for (const auto& x : replayed) EXPECT_EQ(x.outcome.status, LawStatus::violated) << x.law_id << " case " << x.case_id;
}

INSTANTIATE_TEST_SUITE_P(
    Fixtures, Mutants,
    ::testing::Values(MutantCase{"effects_not_closed.json", SuiteId::axioms, "def:eoring.orthosupplement"},
                      MutantCase{"symmetric_cone.json", SuiteId::axioms, "def:eoring.i"},
                      MutantCase{"lax_psd_oracle.json", SuiteId::axioms, "th:G.cone-witness"},
                      MutantCase{"fake_projection.json", SuiteId::projections, "P.idempotent"},
                      MutantCase{"left_compression.json", SuiteId::compression, "th:compbase.in-G"},
                      MutantCase{"broken_join_hom.json", SuiteId::boolean, "th:Booext.phi.join"}),
    [](const auto& info) {
      std::string n = info.param.file;
      return n.substr(0, n.find('.'));
    });

TEST(Reports, TextAndJsonCarryTheSameVerdicts) {
  const Model m = load_model(kFixtures / "mutants" / "broken_join_hom.json");
  const auto req = request(SuiteId::boolean, *m.carrier);
  const auto r = run_suite(m, req);
  const std::string text = render_text(m, req, r);
  const auto j = nlohmann::json::parse(render_json(m, req, r));
  EXPECT_NE(text.find("verdict:   " + j["verdict"].get<std::string>()), std::string::npos);
  EXPECT_NE(text.find(std::to_string(j["failures"].size()) + " failures"), std::string::npos);
  for (const auto& law : j["laws"]) {
    std::istringstream lines(text);
    std::string line;
    bool found = false;
    while (std::getline(lines, line)) {
      std::istringstream words(line);
      std::string id, v;
      words >> id >> v;
      if (id == law["id"] && v == law["verdict"]) found = true;
    }
    EXPECT_TRUE(found) << law["id"];
  }
}

TEST(Reports, JsonSchemaFields) {
  const Model m = fixture("ints2.json");
  const auto req = request(SuiteId::effects, *m.carrier);
  const auto j = nlohmann::json::parse(render_json(m, req, run_suite(m, req)));
  for (const char* key : {"schema_version", "model", "suite", "strategy", "cases_total", "failures", "undecided",
                          "verdict", "laws", "findings", "notes"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["suite"], "effects");
  EXPECT_EQ(j["strategy"]["mode"], "exhaustive");
}

TEST(Reports, JsonIsDeterministic) {
  for (const char* name : {"matrix2.json", "ints3.json"}) {
    const Model m = fixture(name);
    const auto req = request(SuiteId::all, *m.carrier, 40, 9);
    EXPECT_EQ(render_json(m, req, run_suite(m, req)), render_json(m, req, run_suite(m, req))) << name;
  }
}

TEST(Reports, AtomicWrite) {
  const fs::path dir = temp_dir();
  const fs::path p = dir / "r.txt";
  write_atomically(p, "one");
  write_atomically(p, "two");
  std::ifstream in(p);
  std::string s;
  in >> s;
  EXPECT_EQ(s, "two");
  EXPECT_FALSE(fs::exists(dir / "r.txt.tmp"));
  EXPECT_THROW(write_atomically(dir / "no" / "such" / "dir.txt", "x"), std::runtime_error);
  fs::remove_all(dir);
}

TEST(FindLaw, FallsBackAcrossSuites) {
  EXPECT_EQ(find_law(SuiteId::omp, Mutation::none, "P.idempotent").id, "P.idempotent");
  EXPECT_EQ(find_law(SuiteId::axioms, Mutation::none, "th:bring.unit").id, "th:bring.unit");
  EXPECT_THROW(find_law(SuiteId::all, Mutation::none, "no.such.law"), std::out_of_range);
  EXPECT_THROW(replay_report(fixture("ints2.json"), "{\"schema_version\": 9}"), std::invalid_argument);
}

TEST(Cli, ExitCodes) {
  const std::string f = kFixtures.string();
  const fs::path dir = temp_dir();
  const std::string out = (dir / "out.json").string();
  EXPECT_EQ(cli("verify --model " + f + "/ints2.json --suite axioms --budget 100"), exit_code::pass);
  EXPECT_EQ(cli("verify --model " + f + "/mutants/symmetric_cone.json --suite axioms --budget 100 --format json --report " + out),
            exit_code::failures);
  EXPECT_EQ(cli("replay --model " + f + "/mutants/symmetric_cone.json --report " + out), exit_code::pass);
  EXPECT_EQ(cli("verify --model " + f + "/matrix2.json --suite effects --budget 100 --strict"), exit_code::undecided);
  EXPECT_EQ(cli("verify --model " + f + "/matrix2.json --suite effects --budget 100"), exit_code::pass);
  EXPECT_EQ(cli("verify --model " + f + "/bad/empty_atoms.json --suite axioms"), exit_code::usage);
  EXPECT_EQ(cli("verify --model " + f + "/ints2.json --suite nonsense"), exit_code::usage);
  EXPECT_EQ(cli("verify --model " + f + "/ints2.json"), exit_code::usage);
  EXPECT_EQ(cli("verify --model " + f + "/rationals3.json --suite stone"), exit_code::capability);
  EXPECT_EQ(cli("verify --model " + f + "/ints2.json --suite axioms --report " + f + "/no/such/dir/r.txt"),
            exit_code::usage);
  fs::remove_all(dir);
}

TEST(Cli, ByteIdenticalJsonReports) {
  const std::string f = kFixtures.string();
  const fs::path dir = temp_dir();
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  const std::string args = "verify --model " + f + "/matrix2.json --suite compression --seed 5 --budget 50 --format json --report ";
  ASSERT_EQ(cli(args + a), exit_code::pass);
  ASSERT_EQ(cli(args + b), exit_code::pass);
  std::ifstream ia(a), ib(b);
  std::stringstream sa, sb;
  sa << ia.rdbuf();
  sb << ib.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
  fs::remove_all(dir);
}
