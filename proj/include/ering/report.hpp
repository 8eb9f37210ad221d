#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ering/carrier.hpp"
#include "ering/element.hpp"
#include "ering/sampling.hpp"

namespace ering {

enum class LawStatus { holds, vacuous, violated, undecided };

struct LawOutcome {
  LawStatus status = LawStatus::holds;
  std::string expected;
  std::string actual;

  static LawOutcome holds() { return {}; }
  static LawOutcome vacuous() { return {LawStatus::vacuous, {}, {}}; }
  static LawOutcome violated(std::string expected, std::string actual) {
    return {LawStatus::violated, std::move(expected), std::move(actual)};
  }
  static LawOutcome undecided(std::string note) { return {LawStatus::undecided, {}, std::move(note)}; }
};

struct LawContext {
  const Carrier& carrier;
  const SampleStrategy& strategy;
};

using LawCheck = std::function<LawOutcome(const LawContext&, std::span<const Element>)>;

/// A universally quantified statement checked one input tuple at a time.
/// The check depends only on the carrier, the strategy, and the inputs, so a
/// recorded failure can be replayed on its own.
struct Law {
  std::string id;         // theorem tag, e.g. "FF.iii" or "th:pqinP"
  std::string statement;  // one-line human reading
  std::vector<std::string> inputs;
  LawCheck check;
};

using NamedElement = std::pair<std::string, Element>;

struct Failure {
  std::size_t case_id = 0;
  std::string law_id;
  std::vector<NamedElement> inputs;
  std::string expected;
  std::string actual;
};

struct Undecided {
  std::size_t case_id = 0;
  std::string law_id;
  std::vector<NamedElement> inputs;
  std::string note;
};

struct LawTally {
  std::string law_id;
  std::string statement;
  std::size_t cases = 0;
  std::size_t vacuous = 0;
  std::size_t failures = 0;
  std::size_t undecided = 0;
};

/// Outcome of one suite run.
struct VerificationReport {
  std::string suite;
  std::string carrier;
  SampleStrategy strategy;
  std::string evidence;  // "exhaustive" or "sampled"
  std::size_t total_cases = 0;
  std::vector<Failure> failures;
  std::vector<Undecided> undecided;
  std::vector<LawTally> laws;
  std::vector<std::pair<std::string, std::string>> findings;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  /// Appends another report's cases, renumbering its case ids.
  void merge(const VerificationReport& other);
};

/// Collects (law, inputs) cases, evaluates them on worker threads, and
/// aggregates outcomes in case order so the report is scheduling-independent.
class SuiteRun {
public:
  SuiteRun(std::string suite, const Carrier& carrier, const SampleStrategy& strategy);

  /// `law` must outlive the run.
  void add(const Law& law, std::vector<Element> inputs);
  void finding(std::string key, std::string value);
  void note(std::string text);
  /// Overrides the evidence label derived from the strategy mode.
  void evidence(std::string label);
  /// Registers a law in the tally table even if it receives no cases.
  void declare(const Law& law);

  std::size_t size() const { return cases_.size(); }

  VerificationReport finish();

private:
  struct Case {
    const Law* law;
    std::vector<Element> inputs;
  };

  const Carrier& carrier_;
  SampleStrategy strategy_;
  VerificationReport report_;
  std::vector<const Law*> declared_;
  std::vector<Case> cases_;
};

/// Evaluates a law on one tuple, turning exceptions into violations.
LawOutcome evaluate(const Law& law, const LawContext& ctx, std::span<const Element> inputs);

/// Re-runs a recorded failure against `carrier`.
LawOutcome replay(const Law& law, const Carrier& carrier, const SampleStrategy& strategy, const Failure& failure);

/// Runs f(i) for i in [0, n) on a small thread pool; nested calls run inline.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

/// Finds a law by id in `table`; throws std::out_of_range.
const Law& law_by_id(const std::vector<Law>& table, std::string_view id);

}  // namespace ering
