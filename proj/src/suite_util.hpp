#pragma once

// Case generation and small predicates shared by the verification suites.

#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ering/carrier.hpp"
#include "ering/report.hpp"

namespace ering::detail {

/// Throws CapabilityError for exhaustive mode on a non-enumerable carrier.
void require_strategy(const Carrier& c, const SampleStrategy& s, const std::string& suite);

/// Every effect (exhaustive) or landmarks plus `case_budget` sampled effects.
std::vector<Element> effect_universe(const Carrier& c, const SampleStrategy& s, Rng& rng);

/// Projections to quantify over. All of them when the carrier lists them
/// finitely, otherwise landmarks plus seeded line projections.
std::vector<Element> projection_universe(const Carrier& c, const SampleStrategy& s, Rng& rng, std::size_t count = 24);

/// Sum of at most magnitude_bound sampled effects.
Element cone_sample(const Carrier& c, const SampleStrategy& s, Rng& rng);
/// Alternates raw samples and differences of cone samples.
Element group_sample(const Carrier& c, const SampleStrategy& s, Rng& rng);

/// Pairs over `u` when |u|^2 is small enough to enumerate.
bool enumerable_pairs(const std::vector<Element>& u);

bool idempotent(const Carrier& c, const Element& g);
bool leq(const Carrier& c, const Element& g, const Element& h);
Element integer_multiple(const Carrier& c, std::int64_t n, const Element& a);

/// holds if ok, otherwise a violation with the lazily built actual text.
LawOutcome expect(bool ok, std::string expected, const std::function<std::string()>& actual);

/// holds if every named condition has the same truth value.
LawOutcome agree(std::initializer_list<std::pair<const char*, bool>> conditions);

std::string show(const Element& e);

}  // namespace ering::detail
