#include "ering/effects.hpp"

#include <algorithm>

#include "ering/axioms.hpp"
#include "ering/errors.hpp"
#include "suite_util.hpp"

namespace ering {

using detail::expect;
using detail::idempotent;
using detail::show;
using In = std::span<const Element>;

namespace {

// Stream labels for Rng::derived, so searches inside laws replay identically.
constexpr std::uint64_t kSharpStream = 0x5348415250;  // "SHARP"
constexpr std::uint64_t kCoexStream = 0x434f4558;     // "COEX"

void same_carrier(const Effect& e, const Effect& f) {
  if (&e.carrier() != &f.carrier()) throw CarrierMismatch("effects belong to different carriers");
}

}  // namespace

Effect::Effect(const Carrier& c, Element e) : carrier_(&c), element_(std::move(e)) {
  if (!c.is_in_E(element_)) throw PreconditionError(element_.to_string() + " is not an effect of " + c.describe());
}

std::optional<Effect> oplus(const Effect& e, const Effect& f) {
  same_carrier(e, f);
  const Carrier& c = e.carrier();
  Element sum = c.add(e.element(), f.element());
  if (!c.is_in_E(sum)) return std::nullopt;
  return Effect(c, std::move(sum));
}

Effect orthosupplement(const Effect& e) { return Effect(e.carrier(), e.carrier().complement(e.element())); }

SharpnessReport is_sharp(const Effect& eff, const SampleStrategy& s) {
  const Carrier& c = eff.carrier();
  const Element& e = eff.element();
  SharpnessReport r;
  r.condition_iii = c.multiply(e, e) == e;
  r.sharp = r.condition_iii;

  std::vector<Element> candidates;
  if (c.enumerable_E()) {
    candidates = c.effects();
    r.exhaustive = true;
  } else {
    candidates = c.landmark_effects();
    Rng rng = Rng::derived(s.seed, kSharpStream);
    const std::size_t n = std::min<std::size_t>(s.case_budget, 64);
    for (std::size_t i = 0; i < n; ++i) candidates.push_back(c.sample_effect(rng, s.magnitude_bound));
  }
  // e itself and e - e^2 are the natural witnesses against (ii); try them first
  const Element defect = c.subtract(e, c.multiply(e, e));
  candidates.insert(candidates.begin(), {e, defect, c.scale(Rational(1, 2), defect)});
  r.candidates = candidates.size();

  const Element ne = c.complement(e);
  for (const auto& d : candidates) {
    if (d != c.zero() && c.is_in_E(d) && leq(c, d, e) && leq(c, d, ne)) {
      r.condition_ii = false;
      r.witness_ii = d;
      break;
    }
  }

  auto refutes_i = [&](const Element& a, const Element& b) {
    const Element sum = c.add(a, b);
    return c.is_in_E(sum) && !leq(c, sum, e);
  };
  if (r.witness_ii && refutes_i(*r.witness_ii, e)) {
    r.condition_i = false;
    r.witness_i = std::make_pair(*r.witness_ii, e);
    return r;
  }
  std::vector<Element> down;
  for (const auto& u : candidates)
    if (c.is_in_E(u) && leq(c, u, e)) down.push_back(u);
  auto check_pair = [&](const Element& a, const Element& b) {
    if (!refutes_i(a, b)) return false;
    r.condition_i = false;
    r.witness_i = std::make_pair(a, b);
    return true;
  };
  if (down.size() * down.size() <= 40'000) {
    for (std::size_t i = 0; i < down.size(); ++i)
      for (std::size_t j = i; j < down.size(); ++j)
        if (check_pair(down[i], down[j])) return r;
  } else {
    r.exhaustive = false;
    Rng rng = Rng::derived(s.seed, kSharpStream + 1);
    for (std::size_t k = 0; k < 40'000; ++k) {
      const Element& a = down[rng.below(down.size())];
      if (check_pair(a, down[rng.below(down.size())])) return r;
    }
  }
  return r;
}

bool commutes(const Carrier& c, const Element& g, const Element& h) { return c.multiply(g, h) == c.multiply(h, g); }

std::vector<Element> commutant(const Carrier& c, const Element& g, const std::vector<Element>& universe) {
  std::vector<Element> out;
  for (const auto& h : universe)
    if (commutes(c, g, h)) out.push_back(h);
  return out;
}

std::vector<Element> commutant(const Carrier& c, const std::vector<Element>& xs, const std::vector<Element>& universe) {
  std::vector<Element> out;
  for (const auto& h : universe)
    if (std::all_of(xs.begin(), xs.end(), [&](const Element& x) { return commutes(c, x, h); })) out.push_back(h);
  return out;
}

std::string to_string(CoexistenceVerdict v) {
  switch (v) {
    case CoexistenceVerdict::coexistent: return "coexistent";
    case CoexistenceVerdict::undecided: return "undecided";
    case CoexistenceVerdict::not_coexistent: return "not_coexistent";
  }
  return "unknown";
}

bool validate_witness(const Carrier& c, const Element& e, const Element& f, const CoexistenceWitness& w) {
  return c.is_in_E(w.d) && c.is_in_E(w.e1) && c.is_in_E(w.f1) && c.is_in_E(c.add(c.add(w.d, w.e1), w.f1)) &&
         c.add(w.d, w.e1) == e && c.add(w.d, w.f1) == f;
}

// Single-variable form of coexistence.
//
// Claim: e, f in E are coexistent iff some d in E has d <= e, d <= f and
// e + f - d in E; the witness is then (d, e - d, f - d).
//
// (=>) Given d, e1, f1 in E with d + e1 + f1 in E, e = d + e1, f = d + f1:
// e - d = e1 >= 0 and f - d = f1 >= 0, and e + f - d = d + e1 + f1 in E.
// (<=) Put e1 := e - d and f1 := f - d. Then 0 <= e1, and e1 <= e <= 1
// because d >= 0, so e1 in E by E.i; likewise f1. Finally
// d + e1 + f1 = e + f - d in E, e = d + e1 and f = d + f1.
//
// So the search only ranges over d.
namespace {

std::optional<CoexistenceWitness> try_d(const Carrier& c, const Element& e, const Element& f, const Element& d) {
  if (!c.in_G(d) || !c.is_in_E(d) || !leq(c, d, e) || !leq(c, d, f)) return std::nullopt;
  if (!c.is_in_E(c.subtract(c.add(e, f), d))) return std::nullopt;
  return CoexistenceWitness{d, c.subtract(e, d), c.subtract(f, d)};
}

CoexistenceResult found(CoexistenceWitness w, std::string route) {
  return {CoexistenceVerdict::coexistent, std::move(w), std::move(route)};
}

CoexistenceResult search(const Carrier& c, const Element& e, const Element& f, const SampleStrategy& s) {
  if (auto w = try_d(c, e, f, c.zero())) return found(std::move(*w), "d = 0 (e + f in E)");

  if (c.pointwise()) {
    auto ev = c.point_values(e);
    const auto fv = c.point_values(f);
    for (std::size_t i = 0; i < ev.size(); ++i) ev[i] = std::max(Rational(0), ev[i] + fv[i] - Rational(1));
    if (auto w = try_d(c, e, f, c.from_point_values(ev))) return found(std::move(*w), "d = max(0, e + f - 1)");
  }

  const Element ef = c.multiply(e, f);
  if (ef == c.multiply(f, e))
    if (auto w = try_d(c, e, f, ef)) return found(std::move(*w), "d = ef (commuting)");

  // bounded search over scaled candidates, lowest index wins
  std::vector<Element> bases{e, f, c.multiply(e, e), c.multiply(f, f),
                             c.scale(Rational(1, 2), c.add(ef, c.multiply(f, e)))};
  for (auto& l : c.landmark_effects()) bases.push_back(std::move(l));
  Rng rng = Rng::derived(s.seed, kCoexStream);
  for (auto& p : c.projection_candidates(rng, 16, s.magnitude_bound)) bases.push_back(std::move(p));
  const std::size_t extra = std::min<std::size_t>(s.case_budget, 32);
  for (std::size_t i = 0; i < extra; ++i) bases.push_back(c.sample_effect(rng, s.magnitude_bound));
  const auto denominators = static_cast<std::int64_t>(std::max<std::size_t>(2, s.magnitude_bound));

  std::vector<Element> candidates;
  for (const auto& b : bases)
    for (std::int64_t k = 1; k <= denominators; ++k) candidates.push_back(c.scale(Rational(1, k), b));

  constexpr std::size_t kBlock = 64;
  for (std::size_t start = 0; start < candidates.size(); start += kBlock) {
    const std::size_t len = std::min(kBlock, candidates.size() - start);
    std::vector<std::optional<CoexistenceWitness>> hits(len);
    parallel_for(len, [&](std::size_t i) { hits[i] = try_d(c, e, f, candidates[start + i]); });
    for (auto& h : hits)
      if (h) return found(std::move(*h), "d from bounded search");
  }
  return {CoexistenceVerdict::undecided, std::nullopt,
          "no witness among " + std::to_string(candidates.size()) + " candidates"};
}

}  // namespace

CoexistenceResult coexistence_witness(const Effect& e, const Effect& f, const SampleStrategy& s) {
  same_carrier(e, f);
  const Carrier& c = e.carrier();
  // Projections are coexistent exactly when they commute.
  if (idempotent(c, e.element()) && idempotent(c, f.element()) && !commutes(c, e.element(), f.element()))
    return {CoexistenceVerdict::not_coexistent, std::nullopt, "noncommuting projections"};
  return search(c, e.element(), f.element(), s);
}

const std::vector<Law>& effect_laws() {
  static const std::vector<Law> laws = {
      {"oplus.zero", "e + 0 = e", {"e"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0])) return LawOutcome::vacuous();
         const auto r = oplus(Effect(c, in[0]), Effect(c, c.zero()));
         return expect(r && r->element() == in[0], "e (+) 0 = e", [] { return std::string("e (+) 0 differs"); });
       }},
      {"oplus.commutative", "e (+) f and f (+) e are defined together and agree", {"e", "f"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0]) || !c.is_in_E(in[1])) return LawOutcome::vacuous();
         const Effect e(c, in[0]), f(c, in[1]);
         return expect(oplus(e, f) == oplus(f, e), "e (+) f = f (+) e", [] { return std::string("sides differ"); });
       }},
      {"oplus.associative", "(e (+) f) (+) g defined implies e (+) (f (+) g) defined and equal", {"e", "f", "g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         for (const auto& a : in)
           if (!c.is_in_E(a)) return LawOutcome::vacuous();
         const Effect e(c, in[0]), f(c, in[1]), g(c, in[2]);
         const auto ef = oplus(e, f);
         if (!ef) return LawOutcome::vacuous();
         const auto left = oplus(*ef, g);
         if (!left) return LawOutcome::vacuous();
         const auto fg = oplus(f, g);
         const auto right = fg ? oplus(e, *fg) : std::nullopt;
         return expect(right && *right == *left, "e (+) (f (+) g) = (e (+) f) (+) g",
                       [&] { return right ? "right side " + show(right->element()) : std::string("right side undefined"); });
       }},
      {"oplus.orthosupplement", "e (+) (1 - e) = 1", {"e"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0])) return LawOutcome::vacuous();
         const Effect e(c, in[0]);
         const auto r = oplus(e, orthosupplement(e));
         return expect(r && r->element() == c.one(), "e (+) (1 - e) = 1", [] { return std::string("sum is not 1"); });
       }},
      {"orthosupplement.involution", "1 - (1 - e) = e", {"e"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0])) return LawOutcome::vacuous();
         const Effect e(c, in[0]);
         return expect(orthosupplement(orthosupplement(e)) == e, "1 - (1 - e) = e",
                       [] { return std::string("not an involution"); });
       }},
      {"th:sharp", "the three sharpness conditions agree", {"e"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0])) return LawOutcome::vacuous();
         const auto r = is_sharp(Effect(c, in[0]), x.strategy);
         return detail::agree({{"(i)", r.condition_i}, {"(ii)", r.condition_ii}, {"(iii)", r.condition_iii}});
       }},
      {"commutant.symmetric", "gCh iff hCg, and 1, g lie in C(g)", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const bool ok = commutes(c, in[0], in[1]) == commutes(c, in[1], in[0]) && commutes(c, in[0], c.one()) &&
                         commutes(c, in[0], in[0]);
         return expect(ok, "C is symmetric and contains 1, g", [] { return std::string("commutation asymmetric"); });
       }},
      {"commutant.commutative-carrier", "a carrier flagged commutative has C(g) = G", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.commutative()) return LawOutcome::vacuous();
         return expect(commutes(c, in[0], in[1]), "gh = hg", [] { return std::string("gh != hg"); });
       }},
      {"lm:CimpliesCE.i", "commuting effects are coexistent via d = ef", {"e", "f"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0]) || !c.is_in_E(in[1]) || !commutes(c, in[0], in[1])) return LawOutcome::vacuous();
         const Element d = c.multiply(in[0], in[1]);
         const CoexistenceWitness w{d, c.subtract(in[0], d), c.subtract(in[1], d)};
         if (!validate_witness(c, in[0], in[1], w))
           return LawOutcome::violated("(ef, e - ef, f - ef) is a witness", "witness invalid");
         const auto r = coexistence_witness(Effect(c, in[0]), Effect(c, in[1]), x.strategy);
         return expect(r.verdict == CoexistenceVerdict::coexistent, "search finds a witness",
                       [&] { return to_string(r.verdict) + ": " + r.route; });
       }},
      {"lm:CimpliesCE.ii", "e + f <= 1 implies coexistent with d = 0", {"e", "f"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0]) || !c.is_in_E(in[1]) || !leq(c, c.add(in[0], in[1]), c.one()))
           return LawOutcome::vacuous();
         const auto r = coexistence_witness(Effect(c, in[0]), Effect(c, in[1]), x.strategy);
         return expect(r.witness && r.witness->d == c.zero(), "witness with d = 0",
                       [&] { return to_string(r.verdict) + ": " + r.route; });
       }},
      {"coexistence.witness", "returned witnesses validate exactly; negative verdicts only for projections",
       {"e", "f"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0]) || !c.is_in_E(in[1])) return LawOutcome::vacuous();
         const auto r = coexistence_witness(Effect(c, in[0]), Effect(c, in[1]), x.strategy);
         switch (r.verdict) {
           case CoexistenceVerdict::coexistent:
             return expect(r.witness && validate_witness(c, in[0], in[1], *r.witness), "valid witness",
                           [] { return std::string("witness fails validation"); });
           case CoexistenceVerdict::not_coexistent:
             return expect(idempotent(c, in[0]) && idempotent(c, in[1]), "negative verdict on projections only",
                           [] { return std::string("non-projection reported not coexistent"); });
           case CoexistenceVerdict::undecided: return LawOutcome::undecided(r.route);
         }
         return LawOutcome::holds();
       }},
      {"th:coexist-P", "projections p, q are coexistent iff pq = qp", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !idempotent(c, in[1])) return LawOutcome::vacuous();
         if (!c.is_in_E(in[0]) || !c.is_in_E(in[1])) return LawOutcome::vacuous();
         // the search itself, without the certificate shortcut
         const auto r = search(c, in[0], in[1], x.strategy);
         const bool commute = commutes(c, in[0], in[1]);
         if (commute)
           return expect(r.verdict == CoexistenceVerdict::coexistent, "commuting projections coexistent",
                         [&] { return r.route; });
         return expect(r.verdict != CoexistenceVerdict::coexistent, "no witness for noncommuting projections",
                       [&] { return "witness d = " + show(r.witness->d); });
       }},
  };
  return laws;
}

VerificationReport verify_effect_suite(const Carrier& c, const SampleStrategy& s) {
  detail::require_strategy(c, s, "effects");
  const auto& laws = effect_laws();
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };
  Rng rng(s.seed);
  SuiteRun run("effects", c, s);
  for (const auto& l : laws) run.declare(l);

  const auto U = detail::effect_universe(c, s, rng);
  const auto P = detail::projection_universe(c, s, rng);
  auto pick = [&](const std::vector<Element>& v) -> const Element& { return v[rng.below(v.size())]; };

  for (const auto& e : U) {
    run.add(law("oplus.zero"), {e});
    run.add(law("oplus.orthosupplement"), {e});
    run.add(law("orthosupplement.involution"), {e});
  }
  const std::size_t sharp_cases = s.mode == SampleMode::exhaustive ? U.size() : std::min(U.size(), std::max<std::size_t>(s.case_budget, 500));
  for (std::size_t i = 0; i < sharp_cases; ++i) run.add(law("th:sharp"), {U[i]});
  for (const auto& p : P) run.add(law("th:sharp"), {p});

  std::vector<std::pair<Element, Element>> pairs;
  if (s.mode == SampleMode::exhaustive && detail::enumerable_pairs(U)) {
    for (const auto& e : U)
      for (const auto& f : U) pairs.emplace_back(e, f);
  } else {
    for (std::size_t i = 0; i < s.case_budget; ++i) {
      const Element& e = pick(U);
      pairs.emplace_back(e, pick(U));
    }
    // halves of effects always satisfy e + f <= 1
    for (std::size_t i = 0; i < s.case_budget / 4; ++i) {
      const Element e = c.scale(Rational(1, 2), pick(U));
      pairs.emplace_back(e, c.scale(Rational(1, 2), pick(U)));
    }
  }
  for (std::size_t i = 0; i < s.case_budget / 4; ++i) {
    const Element& e = pick(U);
    pairs.emplace_back(e, c.multiply(e, e));
  }
  for (const auto& [e, f] : pairs) {
    run.add(law("oplus.commutative"), {e, f});
    run.add(law("commutant.symmetric"), {e, f});
    run.add(law("commutant.commutative-carrier"), {e, f});
    run.add(law("lm:CimpliesCE.i"), {e, f});
    run.add(law("lm:CimpliesCE.ii"), {e, f});
  }
  // coexistence searches are the expensive part; cap them
  const std::size_t coex = std::min(pairs.size(), std::max<std::size_t>(s.case_budget, 64));
  for (std::size_t i = 0; i < coex; ++i) {
    const auto& [e, f] = pairs[i * pairs.size() / coex];
    run.add(law("coexistence.witness"), {e, f});
  }
  for (std::size_t i = 0; i < s.case_budget; ++i) {
    const Element& e = pick(U);
    const Element& f = pick(U);
    run.add(law("oplus.associative"), {e, f, pick(U)});
  }
  const auto few = detail::projection_universe(c, s, rng, 8);
  for (const auto& p : few)
    for (const auto& q : few) run.add(law("th:coexist-P"), {p, q});

  if (s.mode == SampleMode::exhaustive) run.note("sharpness conditions (i), (ii) quantify over every effect");
  return run.finish();
}

}  // namespace ering
