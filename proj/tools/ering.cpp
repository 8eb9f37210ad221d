// ering: run e-ring law suites against model files.
//
//   ering verify --model m.json --suite axioms [--seed N] [--budget N] [--bound N]
//                [--mode auto|exhaustive|seeded] [--strict] [--report path] [--format text|json]
//   ering replay --model m.json --report r.json

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ering/cli.hpp"
#include "ering/errors.hpp"

using namespace ering;

namespace {

struct VerifyArgs {
  std::string model;
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t budget = 1000;
  std::size_t bound = 6;
  std::string mode = "auto";
  bool strict = false;
  std::string report;
  std::string format = "text";
};

int verify(const VerifyArgs& a) {
  const Model model = load_model(a.model);
  SuiteRequest req;
  req.suite = *parse_suite_id(a.suite);
  req.strict = a.strict;
  req.strategy.seed = a.seed;
  req.strategy.case_budget = a.budget;
  req.strategy.magnitude_bound = a.bound;
  req.strategy.mode = a.mode == "auto"         ? default_mode(*model.carrier)
                      : a.mode == "exhaustive" ? SampleMode::exhaustive
                                               : SampleMode::seeded;
  const ReportFormat format = a.format == "json" ? ReportFormat::json : ReportFormat::text;

  const VerificationReport r = run_suite(model, req);
  const std::string body = render(format, model, req, r);
  if (a.report.empty()) {
    std::cout << body;
  } else {
    write_atomically(a.report, body);
    std::cout << to_string(req.suite) << ": " << verdict(r) << ", " << r.total_cases << " cases, "
              << r.failures.size() << " failures, " << r.undecided.size() << " undecided\n";
  }
  return exit_status(r, a.strict);
}

int replay(const std::string& model_path, const std::string& report_path) {
  const Model model = load_model(model_path);
  std::ifstream in(report_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + report_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  int status = exit_code::pass;
  for (const auto& x : replay_report(model, buffer.str())) {
    const bool reproduced = x.outcome.status == LawStatus::violated;
    std::cout << "case " << x.case_id << " " << x.law_id << ": " << (reproduced ? "reproduced" : "not reproduced");
    if (!x.outcome.actual.empty()) std::cout << " (" << x.outcome.actual << ")";
    std::cout << "\n";
    if (!reproduced) status = exit_code::failures;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify e-ring laws on finite and matrix models"};
  app.require_subcommand(1);

  VerifyArgs v;
  std::vector<std::string> suites;
  for (const char* s : {"axioms", "lemmas", "effects", "projections", "omp", "compression", "boolean", "bring",
                        "stone", "all"})
    suites.emplace_back(s);
  auto* verify_cmd = app.add_subcommand("verify", "Run a law suite against a model");
  verify_cmd->add_option("--model", v.model, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--suite", v.suite, "Suite id")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--seed", v.seed, "Sampling seed")->capture_default_str();
  verify_cmd->add_option("--budget", v.budget, "Cases per sampled quantifier")->capture_default_str();
  verify_cmd->add_option("--bound", v.bound, "Magnitude bound for samples")->capture_default_str();
  verify_cmd->add_option("--mode", v.mode, "Case selection")
      ->check(CLI::IsMember({"auto", "exhaustive", "seeded"}))
      ->capture_default_str();
  verify_cmd->add_flag("--strict", v.strict, "Treat undecided cases as failures");
  verify_cmd->add_option("--report", v.report, "Report path (stdout if omitted)");
  verify_cmd->add_option("--format", v.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string replay_model, replay_report_path;
  auto* replay_cmd = app.add_subcommand("replay", "Re-check the failures recorded in a JSON report");
  replay_cmd->add_option("--model", replay_model, "Model file (JSON)")->required()->check(CLI::ExistingFile);
  replay_cmd->add_option("--report", replay_report_path, "JSON report")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage;
  }

  try {
    if (verify_cmd->parsed()) return verify(v);
    return replay(replay_model, replay_report_path);
  } catch (const ModelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const CapabilityError& e) {
    std::cerr << "capability: " << e.what() << "\n";
    return exit_code::capability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code::usage;
  }
}
