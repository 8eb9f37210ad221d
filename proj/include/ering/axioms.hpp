#pragma once

#include <cstdint>
#include <vector>

#include "ering/carrier.hpp"
#include "ering/report.hpp"

namespace ering {

/// g <= h iff h - g is in E+.
bool leq(const Carrier& c, const Element& g, const Element& h);

/// Least n >= 0 with g <= n * 1.
std::int64_t order_unit_index(const Carrier& c, const Element& g);

/// Closure of E and conditions (i)-(vi) of the e-ring definition, plus two
/// cross-checks of the E+ oracle against the generated cone (sums of sampled
/// effects are accepted; accepted elements have an oracle-free witness).
/// Throws CapabilityError for exhaustive mode on a non-enumerable carrier.
VerificationReport verify_ering_axioms(const Carrier& c, const SampleStrategy& s);

/// Order structure of G and the elementary lemmas (AA, E, FF, M, orderunit,
/// CC, DD).
VerificationReport verify_lemma_suite(const Carrier& c, const SampleStrategy& s);

const std::vector<Law>& axiom_laws();
const std::vector<Law>& lemma_laws();

}  // namespace ering
