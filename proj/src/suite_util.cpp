#include "suite_util.hpp"

#include "ering/errors.hpp"

namespace ering::detail {

void require_strategy(const Carrier& c, const SampleStrategy& s, const std::string& suite) {
  if (s.mode == SampleMode::exhaustive && !c.enumerable_E())
    throw CapabilityError(suite + ": exhaustive mode needs an enumerable carrier, " + c.describe() + " is not");
}

std::vector<Element> effect_universe(const Carrier& c, const SampleStrategy& s, Rng& rng) {
  if (s.mode == SampleMode::exhaustive) return c.effects();
  std::vector<Element> out = c.landmark_effects();
  for (std::size_t i = 0; i < s.case_budget; ++i) out.push_back(c.sample_effect(rng, s.magnitude_bound));
  return out;
}

std::vector<Element> projection_universe(const Carrier& c, const SampleStrategy& s, Rng& rng, std::size_t count) {
  std::vector<Element> out;
  for (auto& p : c.projection_candidates(rng, count, s.magnitude_bound))
    if (idempotent(c, p)) out.push_back(std::move(p));
  return out;
}

Element cone_sample(const Carrier& c, const SampleStrategy& s, Rng& rng) {
  return c.sample_cone(rng, s.magnitude_bound, s.magnitude_bound);
}

Element group_sample(const Carrier& c, const SampleStrategy& s, Rng& rng) {
  if (rng.coin()) return c.sample_raw(rng, s.magnitude_bound);
  Element a = cone_sample(c, s, rng);
  Element b = cone_sample(c, s, rng);
  return c.subtract(a, b);
}

bool enumerable_pairs(const std::vector<Element>& u) { return u.size() * u.size() <= 250'000; }

bool idempotent(const Carrier& c, const Element& g) { return c.in_G(g) && c.multiply(g, g) == g; }

bool leq(const Carrier& c, const Element& g, const Element& h) { return c.is_in_Eplus(c.subtract(h, g)); }

Element integer_multiple(const Carrier& c, std::int64_t n, const Element& a) { return c.scale(Rational(n), a); }

LawOutcome expect(bool ok, std::string expected, const std::function<std::string()>& actual) {
  if (ok) return LawOutcome::holds();
  return LawOutcome::violated(std::move(expected), actual());
}

LawOutcome agree(std::initializer_list<std::pair<const char*, bool>> conditions) {
  bool first = conditions.begin()->second;
  bool same = true;
  std::string values;
  for (const auto& [name, value] : conditions) {
    same = same && value == first;
    if (!values.empty()) values += ", ";
    values += std::string(name) + "=" + (value ? "true" : "false");
  }
  if (same) return LawOutcome::holds();
  return LawOutcome::violated("all conditions equal", values);
}

std::string show(const Element& e) { return e.to_string(); }

}  // namespace ering::detail
