#include "ering/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

namespace ering {

void VerificationReport::merge(const VerificationReport& other) {
  const std::size_t offset = total_cases;
  total_cases += other.total_cases;
  for (auto f : other.failures) {
    f.case_id += offset;
    failures.push_back(std::move(f));
  }
  for (auto u : other.undecided) {
    u.case_id += offset;
    undecided.push_back(std::move(u));
  }
  laws.insert(laws.end(), other.laws.begin(), other.laws.end());
  for (const auto& [k, v] : other.findings) findings.emplace_back(other.suite + "." + k, v);
  for (const auto& n : other.notes) notes.push_back(other.suite + ": " + n);
  if (evidence != other.evidence) evidence = "mixed";
}

SuiteRun::SuiteRun(std::string suite, const Carrier& carrier, const SampleStrategy& strategy)
    : carrier_(carrier), strategy_(strategy) {
  report_.suite = std::move(suite);
  report_.carrier = carrier.describe();
  report_.strategy = strategy;
  report_.evidence = strategy.mode == SampleMode::exhaustive ? "exhaustive" : "sampled";
}

void SuiteRun::declare(const Law& law) {
  if (std::find(declared_.begin(), declared_.end(), &law) == declared_.end()) declared_.push_back(&law);
}

void SuiteRun::add(const Law& law, std::vector<Element> inputs) {
  if (inputs.size() != law.inputs.size())
    throw std::logic_error("law " + law.id + " expects " + std::to_string(law.inputs.size()) + " inputs");
  declare(law);
  cases_.push_back({&law, std::move(inputs)});
}

void SuiteRun::finding(std::string key, std::string value) { report_.findings.emplace_back(std::move(key), std::move(value)); }

void SuiteRun::note(std::string text) { report_.notes.push_back(std::move(text)); }

void SuiteRun::evidence(std::string label) { report_.evidence = std::move(label); }

LawOutcome evaluate(const Law& law, const LawContext& ctx, std::span<const Element> inputs) {
  try {
    return law.check(ctx, inputs);
  } catch (const std::exception& e) {
    return LawOutcome::violated("law evaluates without error", std::string("exception: ") + e.what());
  }
}

VerificationReport SuiteRun::finish() {
  std::vector<LawOutcome> outcomes(cases_.size());
  const LawContext ctx{carrier_, strategy_};
  parallel_for(cases_.size(), [&](std::size_t i) { outcomes[i] = evaluate(*cases_[i].law, ctx, cases_[i].inputs); });

  std::map<const Law*, std::size_t> slot;
  for (const Law* law : declared_) {
    slot[law] = report_.laws.size();
    report_.laws.push_back({law->id, law->statement});
  }
  for (std::size_t i = 0; i < cases_.size(); ++i) {
    const Case& c = cases_[i];
    LawTally& tally = report_.laws[slot.at(c.law)];
    ++tally.cases;
    const LawOutcome& out = outcomes[i];
    auto named = [&] {
      std::vector<NamedElement> v;
      for (std::size_t k = 0; k < c.inputs.size(); ++k) v.emplace_back(c.law->inputs[k], c.inputs[k]);
      return v;
    };
    switch (out.status) {
      case LawStatus::holds: break;
      case LawStatus::vacuous: ++tally.vacuous; break;
      case LawStatus::violated:
        ++tally.failures;
        report_.failures.push_back({i, c.law->id, named(), out.expected, out.actual});
        break;
      case LawStatus::undecided:
        ++tally.undecided;
        report_.undecided.push_back({i, c.law->id, named(), out.actual});
        break;
    }
  }
  report_.total_cases = cases_.size();
  cases_.clear();
  return std::move(report_);
}

LawOutcome replay(const Law& law, const Carrier& carrier, const SampleStrategy& strategy, const Failure& failure) {
  std::vector<Element> inputs;
  for (const auto& [name, value] : failure.inputs) inputs.push_back(value);
  return evaluate(law, LawContext{carrier, strategy}, inputs);
}

namespace {
thread_local bool inside_worker = false;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
  if (workers <= 1 || inside_worker) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      inside_worker = true;
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          f(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

const Law& law_by_id(const std::vector<Law>& table, std::string_view id) {
  for (const auto& law : table)
    if (law.id == id) return law;
  throw std::out_of_range("unknown law '" + std::string(id) + "'");
}

}  // namespace ering
