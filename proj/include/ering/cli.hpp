#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ering/model.hpp"
#include "ering/report.hpp"

namespace ering {

enum class SuiteId { axioms, lemmas, effects, projections, omp, compression, boolean, bring, stone, all };

std::string to_string(SuiteId id);
std::optional<SuiteId> parse_suite_id(std::string_view name);

enum class ReportFormat { text, json };

struct SuiteRequest {
  SuiteId suite = SuiteId::axioms;
  SampleStrategy strategy;
  bool strict = false;  // undecided cases fail the run
};

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int failures = 1;
inline constexpr int undecided = 2;  // only under --strict
inline constexpr int usage = 3;
inline constexpr int capability = 4;
}  // namespace exit_code

/// Exhaustive when the carrier enumerates E, seeded otherwise.
SampleMode default_mode(const Carrier& c);

/// Runs one suite, or every suite for SuiteId::all. A single suite that
/// cannot run on the carrier throws CapabilityError; `all` skips it with a
/// note. Map-level mutations select the map family of the compression and
/// boolean suites.
VerificationReport run_suite(const Model& model, const SuiteRequest& request);

/// "pass", "fail" or "undecided".
std::string verdict(const VerificationReport& r);
int exit_status(const VerificationReport& r, bool strict);

/// Per-law verdict: "pass", "fail", "undecided", or "vacuous" when every case
/// was vacuous (or there were none).
std::string verdict(const LawTally& t);

std::string render_text(const Model& model, const SuiteRequest& request, const VerificationReport& r);
/// Schema version 1; see README. Byte-identical for identical inputs.
std::string render_json(const Model& model, const SuiteRequest& request, const VerificationReport& r);
std::string render(ReportFormat format, const Model& model, const SuiteRequest& request, const VerificationReport& r);

/// Writes to a sibling temporary file and renames it over `path`.
/// Throws std::runtime_error if the file cannot be written.
void write_atomically(const std::filesystem::path& path, const std::string& content);

/// Elements as JSON: functions are arrays of rational strings, matrices are
/// arrays of rows, pairs are {"first": .., "second": ..}.
std::string element_to_json(const Element& e);
/// Throws std::invalid_argument on malformed input.
Element element_from_json(std::string_view text);

/// The law with this id that the suite (or, failing that, any suite) uses
/// under the given mutation. Throws std::out_of_range.
const Law& find_law(SuiteId suite, Mutation mutation, std::string_view id);

struct ReplayResult {
  std::size_t case_id = 0;
  std::string law_id;
  LawOutcome outcome;
};

/// Re-evaluates every failure recorded in a JSON report against `model`.
/// Throws std::invalid_argument if the report is not a schema-1 report.
std::vector<ReplayResult> replay_report(const Model& model, const std::string& report_json);

}  // namespace ering
