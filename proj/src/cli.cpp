#include "ering/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "ering/axioms.hpp"
#include "ering/boolean.hpp"
#include "ering/effects.hpp"
#include "ering/errors.hpp"
#include "ering/projections.hpp"
#include "json.hpp"

namespace ering {

using ojson = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

const std::vector<std::pair<SuiteId, const char*>> kSuiteNames = {
    {SuiteId::axioms, "axioms"}, {SuiteId::lemmas, "lemmas"}, {SuiteId::effects, "effects"},
    {SuiteId::projections, "projections"}, {SuiteId::omp, "omp"}, {SuiteId::compression, "compression"},
    {SuiteId::boolean, "boolean"}, {SuiteId::bring, "bring"}, {SuiteId::stone, "stone"}, {SuiteId::all, "all"},
};

CompressionFamily compression_family(Mutation m) {
  return m == Mutation::left_compression ? CompressionFamily::left : CompressionFamily::sandwich;
}

BooleanMapFamily boolean_family(Mutation m) {
  return m == Mutation::broken_join_hom ? BooleanMapFamily::broken_join : BooleanMapFamily::identity;
}

VerificationReport run_one(SuiteId id, const Model& model, const SampleStrategy& s) {
  const Carrier& c = *model.carrier;
  switch (id) {
    case SuiteId::axioms: return verify_ering_axioms(c, s);
    case SuiteId::lemmas: return verify_lemma_suite(c, s);
    case SuiteId::effects: return verify_effect_suite(c, s);
    case SuiteId::projections: return verify_projection_suite(c, s);
    case SuiteId::omp: return verify_omp_suite(c, s);
    case SuiteId::compression: return verify_compression_suite(c, s, compression_family(model.mutation));
    case SuiteId::boolean: return verify_boolean_suite(c, s, boolean_family(model.mutation));
    case SuiteId::bring: return verify_bring_suite(c, s);
    case SuiteId::stone: return verify_stone_suite(c, s);
    case SuiteId::all: break;
  }
  throw std::logic_error("run_one: no single suite for 'all'");
}

const std::vector<Law>& laws_of(SuiteId id, Mutation m) {
  switch (id) {
    case SuiteId::axioms: return axiom_laws();
    case SuiteId::lemmas: return lemma_laws();
    case SuiteId::effects: return effect_laws();
    case SuiteId::projections: return projection_laws();
    case SuiteId::omp: return omp_laws();
    case SuiteId::compression: return compression_laws(compression_family(m));
    case SuiteId::boolean: return boolean_laws(boolean_family(m));
    case SuiteId::bring: return bring_laws();
    case SuiteId::stone: return stone_laws();
    case SuiteId::all: break;
  }
  throw std::out_of_range("no law table for 'all'");
}

std::string rational_text(const Rational& r) { return r.to_string(); }

ojson element_json(const Element& e) {
  if (e.is_pair()) {
    ojson out = ojson::object();
    out["first"] = element_json(e.first());
    out["second"] = element_json(e.second());
    return out;
  }
  ojson out = ojson::array();
  if (e.is_matrix()) {
    const Matrix& m = e.matrix();
    for (std::size_t i = 0; i < m.dim(); ++i) {
      ojson row = ojson::array();
      for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(rational_text(m(i, j)));
      out.push_back(std::move(row));
    }
    return out;
  }
  for (const auto& v : e.values()) out.push_back(rational_text(v));
  return out;
}

Rational rational_from(const ojson& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw std::invalid_argument("expected a rational string or an integer, got " + j.dump());
}

Element element_from(const ojson& j) {
  if (j.is_object()) {
    if (!j.contains("first") || !j.contains("second") || j.size() != 2)
      throw std::invalid_argument("a pair needs exactly \"first\" and \"second\"");
    return Element(element_from(j.at("first")), element_from(j.at("second")));
  }
  if (!j.is_array()) throw std::invalid_argument("expected an array or a pair object, got " + j.dump());
  if (!j.empty() && j[0].is_array()) {
    const std::size_t n = j.size();
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!j[i].is_array() || j[i].size() != n) throw std::invalid_argument("matrix rows must have length " + std::to_string(n));
      for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from(j[i][k]);
    }
    return Element(std::move(m));
  }
  std::vector<Rational> values;
  for (const auto& v : j) values.push_back(rational_from(v));
  return Element::function(std::move(values));
}

ojson inputs_json(const std::vector<NamedElement>& inputs) {
  ojson out = ojson::object();
  for (const auto& [name, e] : inputs) out[name] = element_json(e);
  return out;
}

ojson strategy_json(const SuiteRequest& req) {
  ojson s = ojson::object();
  s["mode"] = to_string(req.strategy.mode);
  s["seed"] = req.strategy.seed;
  s["budget"] = req.strategy.case_budget;
  s["bound"] = req.strategy.magnitude_bound;
  s["strict"] = req.strict;
  return s;
}

std::string show_inputs(const std::vector<NamedElement>& inputs) {
  std::string out;
  for (const auto& [name, e] : inputs) {
    if (!out.empty()) out += ", ";
    out += name + " = " + e.to_string();
  }
  return out.empty() ? "(none)" : out;
}

}  // namespace

std::string to_string(SuiteId id) {
  for (const auto& [s, name] : kSuiteNames)
    if (s == id) return name;
  return "unknown";
}

std::optional<SuiteId> parse_suite_id(std::string_view name) {
  for (const auto& [s, n] : kSuiteNames)
    if (name == n) return s;
  return std::nullopt;
}

SampleMode default_mode(const Carrier& c) { return c.enumerable_E() ? SampleMode::exhaustive : SampleMode::seeded; }

VerificationReport run_suite(const Model& model, const SuiteRequest& request) {
  if (request.suite != SuiteId::all) return run_one(request.suite, model, request.strategy);

  VerificationReport all;
  all.suite = "all";
  all.carrier = model.carrier->describe();
  all.strategy = request.strategy;
  all.evidence = request.strategy.mode == SampleMode::exhaustive ? "exhaustive" : "sampled";
  bool first = true;
  std::vector<std::string> skipped;
  for (const auto& [id, name] : kSuiteNames) {
    if (id == SuiteId::all) continue;
    try {
      const VerificationReport r = run_one(id, model, request.strategy);
      if (first) all.evidence = r.evidence;
      first = false;
      all.merge(r);
    } catch (const CapabilityError& e) {
      skipped.push_back(std::string("skipped ") + name + ": " + e.what());
    }
  }
  all.notes.insert(all.notes.end(), skipped.begin(), skipped.end());
  return all;
}

std::string verdict(const VerificationReport& r) {
  if (!r.failures.empty()) return "fail";
  if (!r.undecided.empty()) return "undecided";
  return "pass";
}

std::string verdict(const LawTally& t) {
  if (t.failures > 0) return "fail";
  if (t.undecided > 0) return "undecided";
  if (t.cases == t.vacuous) return "vacuous";
  return "pass";
}

int exit_status(const VerificationReport& r, bool strict) {
  if (!r.failures.empty()) return exit_code::failures;
  if (strict && !r.undecided.empty()) return exit_code::undecided;
  return exit_code::pass;
}

std::string render_text(const Model& model, const SuiteRequest& request, const VerificationReport& r) {
  std::ostringstream out;
  const SampleStrategy& s = request.strategy;
  out << "model:     " << (model.name.empty() ? "" : model.name + " ") << r.carrier;
  if (model.mutation != Mutation::none) out << " [mutation " << to_string(model.mutation) << "]";
  out << "\nsuite:     " << to_string(request.suite) << "\nstrategy:  " << to_string(s.mode) << ", seed " << s.seed
      << ", budget " << s.case_budget << ", bound " << s.magnitude_bound << (request.strict ? ", strict" : "")
      << "\nevidence:  " << r.evidence << "\ncases:     " << r.total_cases << "\nverdict:   " << verdict(r) << " ("
      << r.failures.size() << " failures, " << r.undecided.size() << " undecided)\n\n";

  std::size_t width = 4;
  for (const auto& t : r.laws) width = std::max(width, t.law_id.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "law" << std::setw(11) << "verdict" << std::right
      << std::setw(9) << "cases" << std::setw(9) << "vacuous" << std::setw(10) << "failures" << std::setw(11)
      << "undecided" << "\n";
  for (const auto& t : r.laws)
    out << std::left << std::setw(static_cast<int>(width) + 2) << t.law_id << std::setw(11) << verdict(t)
        << std::right << std::setw(9) << t.cases << std::setw(9) << t.vacuous << std::setw(10) << t.failures
        << std::setw(11) << t.undecided << "\n";

  if (!r.failures.empty()) {
    out << "\nfailures\n";
    for (const auto& f : r.failures)
      out << "  case " << f.case_id << "  " << f.law_id << "\n    inputs:   " << show_inputs(f.inputs)
          << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
  }
  if (!r.undecided.empty()) {
    out << "\nundecided\n";
    for (const auto& u : r.undecided)
      out << "  case " << u.case_id << "  " << u.law_id << "\n    inputs:   " << show_inputs(u.inputs)
          << "\n    note:     " << u.note << "\n";
  }
  if (!r.findings.empty()) {
    out << "\nfindings\n";
    for (const auto& [k, v] : r.findings) out << "  " << k << ": " << v << "\n";
  }
  if (!r.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : r.notes) out << "  " << n << "\n";
  }
  return out.str();
}

std::string render_json(const Model& model, const SuiteRequest& request, const VerificationReport& r) {
  ojson j = ojson::object();
  j["schema_version"] = kSchemaVersion;
  ojson m = ojson::object();
  m["name"] = model.name;
  m["carrier"] = r.carrier;
  m["mutation"] = to_string(model.mutation);
  j["model"] = std::move(m);
  j["suite"] = to_string(request.suite);
  j["strategy"] = strategy_json(request);
  j["evidence"] = r.evidence;
  j["cases_total"] = r.total_cases;
  j["verdict"] = verdict(r);

  ojson failures = ojson::array();
  for (const auto& f : r.failures) {
    ojson x = ojson::object();
    x["case"] = f.case_id;
    x["law"] = f.law_id;
    x["inputs"] = inputs_json(f.inputs);
    x["expected"] = f.expected;
    x["actual"] = f.actual;
    failures.push_back(std::move(x));
  }
  j["failures"] = std::move(failures);

  ojson undecided = ojson::array();
  for (const auto& u : r.undecided) {
    ojson x = ojson::object();
    x["case"] = u.case_id;
    x["law"] = u.law_id;
    x["inputs"] = inputs_json(u.inputs);
    x["note"] = u.note;
    undecided.push_back(std::move(x));
  }
  j["undecided"] = std::move(undecided);

  ojson laws = ojson::array();
  for (const auto& t : r.laws) {
    ojson x = ojson::object();
    x["id"] = t.law_id;
    x["statement"] = t.statement;
    x["verdict"] = verdict(t);
    x["cases"] = t.cases;
    x["vacuous"] = t.vacuous;
    x["failures"] = t.failures;
    x["undecided"] = t.undecided;
    laws.push_back(std::move(x));
  }
  j["laws"] = std::move(laws);

  ojson findings = ojson::array();
  for (const auto& [k, v] : r.findings) findings.push_back(ojson{{"key", k}, {"value", v}});
  j["findings"] = std::move(findings);
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string render(ReportFormat format, const Model& model, const SuiteRequest& request, const VerificationReport& r) {
  return format == ReportFormat::json ? render_json(model, request, r) : render_text(model, request, r);
}

void write_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot replace " + path.string() + ": " + ec.message());
  }
}

std::string element_to_json(const Element& e) { return element_json(e).dump(); }

Element element_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw std::invalid_argument(e.what());
  }
  return element_from(j);
}

const Law& find_law(SuiteId suite, Mutation mutation, std::string_view id) {
  auto search = [&](SuiteId s) -> const Law* {
    for (const auto& law : laws_of(s, mutation))
      if (law.id == id) return &law;
    return nullptr;
  };
  if (suite != SuiteId::all)
    if (const Law* l = search(suite)) return *l;
  for (const auto& [s, _] : kSuiteNames)
    if (s != SuiteId::all)
      if (const Law* l = search(s)) return *l;
  throw std::out_of_range("no law with id " + std::string(id));
}

std::vector<ReplayResult> replay_report(const Model& model, const std::string& report_json) {
  ojson j;
  try {
    j = ojson::parse(report_json);
  } catch (const ojson::parse_error& e) {
    throw std::invalid_argument(std::string("report is not JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("schema_version", 0) != kSchemaVersion)
    throw std::invalid_argument("not a schema " + std::to_string(kSchemaVersion) + " report");
  try {
    const auto suite = parse_suite_id(j.at("suite").get<std::string>());
    if (!suite) throw std::invalid_argument("unknown suite " + j.at("suite").dump());
    const ojson& st = j.at("strategy");
    SampleStrategy s;
    s.mode = st.at("mode").get<std::string>() == "exhaustive" ? SampleMode::exhaustive : SampleMode::seeded;
    s.seed = st.at("seed").get<std::uint64_t>();
    s.case_budget = st.at("budget").get<std::size_t>();
    s.magnitude_bound = st.at("bound").get<std::size_t>();

    std::vector<ReplayResult> out;
    for (const auto& f : j.at("failures")) {
      Failure failure;
      failure.case_id = f.at("case").get<std::size_t>();
      failure.law_id = f.at("law").get<std::string>();
      for (const auto& [name, value] : f.at("inputs").items()) failure.inputs.emplace_back(name, element_from(value));
      const Law& law = find_law(*suite, model.mutation, failure.law_id);
      out.push_back({failure.case_id, failure.law_id, replay(law, *model.carrier, s, failure)});
    }
    return out;
  } catch (const ojson::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace ering
