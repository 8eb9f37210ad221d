#include "ering/axioms.hpp"

#include <algorithm>
#include <stdexcept>

#include "suite_util.hpp"

namespace ering {

using detail::agree;
using detail::expect;
using detail::idempotent;
using detail::show;
using In = std::span<const Element>;

bool leq(const Carrier& c, const Element& g, const Element& h) { return detail::leq(c, g, h); }

std::int64_t order_unit_index(const Carrier& c, const Element& g) {
  auto below = [&](std::int64_t n) { return leq(c, g, c.scale(Rational(n), c.one())); };
  std::int64_t hi = std::max<std::int64_t>(0, c.order_unit_upper_bound(g));
  for (int guard = 0; !below(hi); ++guard) {
    if (guard > 62) throw std::runtime_error("order_unit_index: no n with g <= n*1 for g = " + show(g));
    hi = hi == 0 ? 1 : hi * 2;
  }
  std::int64_t lo = 0;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (below(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

namespace {

bool pos(const Carrier& c, const Element& a) { return c.is_in_Eplus(a); }

std::string rejected(const char* what, const Element& x) { return std::string(what) + " = " + show(x) + " rejected"; }

}  // namespace

const std::vector<Law>& axiom_laws() {
  static const std::vector<Law> laws = {
      {"def:eoring.zero", "0 is an effect", {},
       [](const LawContext& x, In) {
         const Carrier& c = x.carrier;
         return expect(c.is_in_E(c.zero()), "0 in E", [] { return std::string("E oracle rejects 0"); });
       }},
      {"def:eoring.one", "1 is an effect", {},
       [](const LawContext& x, In) {
         const Carrier& c = x.carrier;
         return expect(c.is_in_E(c.one()), "1 in E", [] { return std::string("E oracle rejects 1"); });
       }},
      {"def:eoring.orthosupplement", "e in E implies 1 - e in E", {"e"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0])) return LawOutcome::vacuous();
         const Element r = c.complement(in[0]);
         return expect(c.is_in_E(r), "1 - e in E", [&] { return rejected("1 - e", r); });
       }},
      {"def:eoring.i", "a, -a in E+ implies a = 0", {"a"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !pos(c, c.negate(in[0]))) return LawOutcome::vacuous();
         return expect(in[0] == c.zero(), "a = 0", [&] { return "a and -a both in E+ with a = " + show(in[0]); });
       }},
      {"def:eoring.ii", "a, 1 - a in E+ implies a in E", {"a"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !pos(c, c.complement(in[0]))) return LawOutcome::vacuous();
         return expect(c.is_in_E(in[0]), "a in E", [&] { return rejected("a", in[0]); });
       }},
      {"def:eoring.iii", "a, b in E+ and ab = ba imply ab in E+", {"a", "b"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !pos(c, in[1])) return LawOutcome::vacuous();
         const Element ab = c.multiply(in[0], in[1]);
         if (ab != c.multiply(in[1], in[0])) return LawOutcome::vacuous();
         return expect(pos(c, ab), "ab in E+", [&] { return rejected("ab", ab); });
       }},
      {"def:eoring.iv", "a, b in E+ implies aba in E+", {"a", "b"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !pos(c, in[1])) return LawOutcome::vacuous();
         const Element aba = c.multiply(c.multiply(in[0], in[1]), in[0]);
         return expect(pos(c, aba), "aba in E+", [&] { return rejected("aba", aba); });
       }},
      {"def:eoring.v", "a, b in E+ and aba = 0 imply ab = ba = 0", {"a", "b"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !pos(c, in[1])) return LawOutcome::vacuous();
         const Element ab = c.multiply(in[0], in[1]);
         if (c.multiply(ab, in[0]) != c.zero()) return LawOutcome::vacuous();
         const Element ba = c.multiply(in[1], in[0]);
         return expect(ab == c.zero() && ba == c.zero(), "ab = 0 and ba = 0",
                       [&] { return "aba = 0 but ab = " + show(ab) + ", ba = " + show(ba); });
       }},
      {"def:eoring.vi", "a, b in E+ implies (a - b)^2 in E+", {"a", "b"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !pos(c, in[1])) return LawOutcome::vacuous();
         const Element d = c.subtract(in[0], in[1]);
         const Element sq = c.multiply(d, d);
         return expect(pos(c, sq), "(a - b)^2 in E+", [&] { return rejected("(a - b)^2", sq); });
       }},
      {"th:G.cone-sums", "a finite sum of effects passes the E+ oracle", {"a"},
       [](const LawContext& x, In in) {
         return expect(pos(x.carrier, in[0]), "a in E+", [&] { return rejected("a", in[0]); });
       }},
      {"th:G.cone-witness", "an oracle-accepted g is a sum of effects built without the oracle", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0])) return LawOutcome::vacuous();
         const auto w = c.cone_witness(in[0]);
         if (!w) return LawOutcome::violated("g is a finite sum of effects", "oracle accepts g = " + show(in[0]) +
                                                                                 " but no effect decomposition exists");
         return expect(c.sum(*w) == in[0], "witness sums to g", [&] { return "witness sums to " + show(c.sum(*w)); });
       }},
      {"th:G.decompose", "decompose_positive(a) consists of effects summing to a", {"a"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0])) return LawOutcome::vacuous();
         const auto parts = c.decompose_positive(in[0]);
         for (const auto& p : parts)
           if (!c.is_in_E(p)) return LawOutcome::violated("every summand in E", rejected("summand", p));
         return expect(c.sum(parts) == in[0], "summands add up to a",
                       [&] { return "summands add up to " + show(c.sum(parts)); });
       }},
  };
  return laws;
}

VerificationReport verify_ering_axioms(const Carrier& c, const SampleStrategy& s) {
  detail::require_strategy(c, s, "axioms");
  const auto& laws = axiom_laws();
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };

  Rng rng(s.seed);
  SuiteRun run("axioms", c, s);
  for (const auto& l : laws) run.declare(l);

  const auto effects = detail::effect_universe(c, s, rng);
  run.add(law("def:eoring.zero"), {});
  run.add(law("def:eoring.one"), {});
  for (const auto& e : effects) run.add(law("def:eoring.orthosupplement"), {e});

  std::vector<Element> cone = effects;
  for (std::size_t i = 0; i < s.case_budget; ++i) cone.push_back(detail::cone_sample(c, s, rng));
  for (const auto& a : cone) {
    run.add(law("def:eoring.i"), {a});
    run.add(law("def:eoring.ii"), {a});
    run.add(law("th:G.cone-sums"), {a});
    run.add(law("th:G.decompose"), {a});
  }

  std::vector<std::pair<Element, Element>> pairs;
  if (s.mode == SampleMode::exhaustive && detail::enumerable_pairs(effects)) {
    for (const auto& a : effects)
      for (const auto& b : effects) pairs.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < s.case_budget; ++i) {
    Element a = detail::cone_sample(c, s, rng);
    Element b = detail::cone_sample(c, s, rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  // orthogonal pairs make the hypothesis of (v) nonvacuous on every carrier
  for (const auto& p : detail::projection_universe(c, s, rng, 8)) {
    const Element q = c.complement(p);
    pairs.emplace_back(p, q);
    const Element x = effects[rng.below(effects.size())];
    const Element y = effects[rng.below(effects.size())];
    pairs.emplace_back(c.multiply(c.multiply(p, x), p), c.multiply(c.multiply(q, y), q));
  }
  for (const auto& [a, b] : pairs) {
    run.add(law("def:eoring.iii"), {a, b});
    run.add(law("def:eoring.iv"), {a, b});
    run.add(law("def:eoring.v"), {a, b});
    run.add(law("def:eoring.vi"), {a, b});
  }

  for (std::size_t i = 0; i < s.case_budget; ++i) run.add(law("th:G.cone-witness"), {c.sample_raw(rng, s.magnitude_bound)});
  for (std::size_t i = 0; i < std::min(cone.size(), s.case_budget); ++i) run.add(law("th:G.cone-witness"), {cone[i]});

  if (s.mode == SampleMode::exhaustive)
    run.note("E quantifiers range over all " + std::to_string(effects.size()) + " effects; E+ adds " +
             std::to_string(s.case_budget) + " sampled effect sums");
  return run.finish();
}

const std::vector<Law>& lemma_laws() {
  static const std::vector<Law> laws = {
      {"AA.i", "g in G implies g^2 in E+", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.in_G(in[0])) return LawOutcome::vacuous();
         const Element sq = c.multiply(in[0], in[0]);
         return expect(pos(c, sq), "g^2 in E+", [&] { return rejected("g^2", sq); });
       }},
      {"AA.ii", "gh + hg in G", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.in_G(in[0]) || !c.in_G(in[1])) return LawOutcome::vacuous();
         const Element r = c.add(c.multiply(in[0], in[1]), c.multiply(in[1], in[0]));
         return expect(c.in_G(r), "gh + hg in G", [&] { return "gh + hg = " + show(r) + " outside G"; });
       }},
      {"AA.iii", "g in E+ implies ghg in G", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !c.in_G(in[1])) return LawOutcome::vacuous();
         const Element r = c.multiply(c.multiply(in[0], in[1]), in[0]);
         return expect(c.in_G(r), "ghg in G", [&] { return "ghg = " + show(r) + " outside G"; });
       }},
      {"AA.iv", "php in G", {"p", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !c.in_G(in[1])) return LawOutcome::vacuous();
         const Element r = c.multiply(c.multiply(in[0], in[1]), in[0]);
         return expect(c.in_G(r), "php in G", [&] { return "php = " + show(r) + " outside G"; });
       }},
      {"AA.v", "h in E+ implies php in E+", {"p", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !pos(c, in[1])) return LawOutcome::vacuous();
         const Element r = c.multiply(c.multiply(in[0], in[1]), in[0]);
         return expect(pos(c, r), "php in E+", [&] { return rejected("php", r); });
       }},
      {"E.i", "g in E iff 0 <= g <= 1", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.in_G(in[0])) return LawOutcome::vacuous();
         const bool interval = leq(c, c.zero(), in[0]) && leq(c, in[0], c.one());
         return agree({{"g in E", c.is_in_E(in[0])}, {"0 <= g <= 1", interval}});
       }},
      {"E.ii", "0 and 1 are projections", {},
       [](const LawContext& x, In) {
         const Carrier& c = x.carrier;
         return expect(idempotent(c, c.zero()) && idempotent(c, c.one()), "0, 1 in P",
                       [] { return std::string("0 or 1 is not an idempotent of G"); });
       }},
      {"E.iii", "p in P implies 1 - p in P", {"p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         const Element q = c.complement(in[0]);
         return expect(idempotent(c, q), "1 - p in P", [&] { return "1 - p = " + show(q) + " is not idempotent"; });
       }},
      {"E.iv", "P is contained in E", {"p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         return expect(c.is_in_E(in[0]), "p in E", [&] { return rejected("p", in[0]); });
       }},
      {"FF.i", "commuting e, f in E: 0 <= ef <= e, f <= 1", {"e", "f"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &e = in[0], &f = in[1];
         if (!c.is_in_E(e) || !c.is_in_E(f)) return LawOutcome::vacuous();
         const Element ef = c.multiply(e, f);
         if (ef != c.multiply(f, e)) return LawOutcome::vacuous();
         const bool ok = leq(c, c.zero(), ef) && leq(c, ef, e) && leq(c, ef, f) && leq(c, e, c.one()) &&
                         leq(c, f, c.one());
         return expect(ok, "0 <= ef <= e, f <= 1", [&] { return "ef = " + show(ef); });
       }},
      {"FF.ii", "d, e in E: 0 <= ede <= e^2 <= e <= 1", {"d", "e"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &d = in[0], &e = in[1];
         if (!c.is_in_E(d) || !c.is_in_E(e)) return LawOutcome::vacuous();
         const Element ede = c.multiply(c.multiply(e, d), e);
         const Element e2 = c.multiply(e, e);
         const bool ok = leq(c, c.zero(), ede) && leq(c, ede, e2) && leq(c, e2, e) && leq(c, e, c.one());
         return expect(ok, "0 <= ede <= e^2 <= e <= 1", [&] { return "ede = " + show(ede) + ", e^2 = " + show(e2); });
       }},
      {"FF.iii", "commuting e, f in E: 0 <= e, f <= e + f - ef <= 1", {"e", "f"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &e = in[0], &f = in[1];
         if (!c.is_in_E(e) || !c.is_in_E(f)) return LawOutcome::vacuous();
         const Element ef = c.multiply(e, f);
         if (ef != c.multiply(f, e)) return LawOutcome::vacuous();
         const Element j = c.subtract(c.add(e, f), ef);
         const bool ok = leq(c, c.zero(), e) && leq(c, c.zero(), f) && leq(c, e, j) && leq(c, f, j) &&
                         leq(c, j, c.one());
         return expect(ok, "0 <= e, f <= e + f - ef <= 1", [&] { return "e + f - ef = " + show(j); });
       }},
      {"FF.iv", "e in E: 0 <= e - e^2 <= e, 1 - e <= 1", {"e"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element& e = in[0];
         if (!c.is_in_E(e)) return LawOutcome::vacuous();
         const Element d = c.subtract(e, c.multiply(e, e));
         const Element ne = c.complement(e);
         const bool ok = leq(c, c.zero(), d) && leq(c, d, e) && leq(c, d, ne) && leq(c, e, c.one()) &&
                         leq(c, ne, c.one());
         return expect(ok, "0 <= e - e^2 <= e, 1 - e <= 1", [&] { return "e - e^2 = " + show(d); });
       }},
      {"M.i", "g, h in E+ and gh = 0 imply hg = 0", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0]) || !pos(c, in[1])) return LawOutcome::vacuous();
         if (c.multiply(in[0], in[1]) != c.zero()) return LawOutcome::vacuous();
         const Element hg = c.multiply(in[1], in[0]);
         return expect(hg == c.zero(), "hg = 0", [&] { return "gh = 0 but hg = " + show(hg); });
       }},
      {"M.ii", "g, h, k in E+, k commuting with g and h, g <= h imply gk <= hk", {"g", "h", "k"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &g = in[0], &h = in[1], &k = in[2];
         if (!pos(c, g) || !pos(c, h) || !pos(c, k) || !leq(c, g, h)) return LawOutcome::vacuous();
         const Element gk = c.multiply(g, k), hk = c.multiply(h, k);
         if (gk != c.multiply(k, g) || hk != c.multiply(k, h)) return LawOutcome::vacuous();
         return expect(leq(c, gk, hk), "gk <= hk", [&] { return "gk = " + show(gk) + ", hk = " + show(hk); });
       }},
      {"M.iii", "g, h in E+, gh = hg, g <= h imply g^2 <= h^2", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &g = in[0], &h = in[1];
         if (!pos(c, g) || !pos(c, h) || !leq(c, g, h)) return LawOutcome::vacuous();
         if (c.multiply(g, h) != c.multiply(h, g)) return LawOutcome::vacuous();
         const Element g2 = c.multiply(g, g), h2 = c.multiply(h, h);
         return expect(leq(c, g2, h2), "g^2 <= h^2", [&] { return "g^2 = " + show(g2) + ", h^2 = " + show(h2); });
       }},
      // Tested with n := order_unit_index(g) (at least 1): if g <= m p for some
      // m then g = pgp <= p (n 1) p = n p, so this n is as good as any.
      {"M.iv", "g in E+, p in P, g <= n p imply g = gp = pg", {"g", "p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &g = in[0], &p = in[1];
         if (!pos(c, g) || !idempotent(c, p)) return LawOutcome::vacuous();
         const std::int64_t n = std::max<std::int64_t>(1, order_unit_index(c, g));
         if (!leq(c, g, c.scale(Rational(n), p))) return LawOutcome::vacuous();
         const Element gp = c.multiply(g, p), pg = c.multiply(p, g);
         return expect(gp == g && pg == g, "g = gp = pg", [&] { return "gp = " + show(gp) + ", pg = " + show(pg); });
       }},
      {"M.v", "g in E+ and g^n = 0 (n <= 4) imply g = 0", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!pos(c, in[0])) return LawOutcome::vacuous();
         Element power = in[0];
         for (unsigned n = 1; n <= 4; ++n) {
           if (power == c.zero())
             return expect(in[0] == c.zero(), "g = 0",
                           [&] { return "g^" + std::to_string(n) + " = 0 with g = " + show(in[0]); });
           power = c.multiply(power, in[0]);
         }
         return LawOutcome::vacuous();
       }},
      {"orderunit.i", "order_unit_index(g) is the least n >= 0 with g <= n 1", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.in_G(in[0])) return LawOutcome::vacuous();
         const std::int64_t n = order_unit_index(c, in[0]);
         const bool above = leq(c, in[0], c.scale(Rational(n), c.one()));
         const bool least = n == 0 || !leq(c, in[0], c.scale(Rational(n - 1), c.one()));
         return expect(above && least, "g <= n 1 and not g <= (n - 1) 1",
                       [&] { return "n = " + std::to_string(n) + (above ? " is not least" : " is not an upper bound"); });
       }},
      {"orderunit.ii", "a1, a2, a3 in E+ with a1 + a2 + a3 = 0 are all 0", {"a1", "a2", "a3"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         for (const auto& a : in)
           if (!pos(c, a)) return LawOutcome::vacuous();
         if (c.sum(in) != c.zero()) return LawOutcome::vacuous();
         const bool ok = std::all_of(in.begin(), in.end(), [&](const Element& a) { return a == c.zero(); });
         return expect(ok, "a1 = a2 = a3 = 0", [&] { return std::string("a nonzero summand is in E+"); });
       }},
      {"CC", "e <= p iff e = ep = pe iff e = pep iff e = ep iff e = pe", {"e", "p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &e = in[0], &p = in[1];
         if (!c.is_in_E(e) || !idempotent(c, p)) return LawOutcome::vacuous();
         const Element ep = c.multiply(e, p), pe = c.multiply(p, e);
         return agree({{"(i) e<=p", leq(c, e, p)},
                       {"(ii) e=ep=pe", e == ep && e == pe},
                       {"(iii) e=pep", e == c.multiply(pe, p)},
                       {"(iv) e=ep", e == ep},
                       {"(v) e=pe", e == pe}});
       }},
      {"DD", "p <= e iff p = ep = pe iff p + pep = pe + ep iff p = ep iff p = pe", {"e", "p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element &e = in[0], &p = in[1];
         if (!c.is_in_E(e) || !idempotent(c, p)) return LawOutcome::vacuous();
         const Element ep = c.multiply(e, p), pe = c.multiply(p, e);
         return agree({{"(i) p<=e", leq(c, p, e)},
                       {"(ii) p=ep=pe", p == ep && p == pe},
                       {"(iii) p+pep=pe+ep", c.add(p, c.multiply(pe, p)) == c.add(pe, ep)},
                       {"(iv) p=ep", p == ep},
                       {"(v) p=pe", p == pe}});
       }},
      {"th:G.reflexive", "g <= g", {"g"},
       [](const LawContext& x, In in) {
         return expect(leq(x.carrier, in[0], in[0]), "g <= g", [] { return std::string("0 rejected by E+ oracle"); });
       }},
      {"th:G.antisymmetric", "g <= h and h <= g imply g = h", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!leq(c, in[0], in[1]) || !leq(c, in[1], in[0])) return LawOutcome::vacuous();
         return expect(in[0] == in[1], "g = h", [&] { return std::string("g <= h <= g with g != h"); });
       }},
      {"th:G.transitive", "g <= h and h <= k imply g <= k", {"g", "h", "k"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!leq(c, in[0], in[1]) || !leq(c, in[1], in[2])) return LawOutcome::vacuous();
         return expect(leq(c, in[0], in[2]), "g <= k", [&] { return rejected("k - g", c.subtract(in[2], in[0])); });
       }},
      {"th:G.directed", "g = a - b with a = g + n 1, b = n 1 in the generated cone", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.in_G(in[0])) return LawOutcome::vacuous();
         const std::int64_t n = order_unit_index(c, c.negate(in[0]));
         const Element b = c.scale(Rational(n), c.one());
         const Element a = c.add(in[0], b);
         const bool ok = pos(c, a) && pos(c, b) && c.cone_witness(a) && c.cone_witness(b) && c.subtract(a, b) == in[0];
         return expect(ok, "a, b in E+ with g = a - b",
                       [&] { return "a = " + show(a) + " has no effect decomposition"; });
       }},
  };
  return laws;
}

VerificationReport verify_lemma_suite(const Carrier& c, const SampleStrategy& s) {
  detail::require_strategy(c, s, "lemmas");
  const auto& laws = lemma_laws();
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };

  Rng rng(s.seed);
  SuiteRun run("lemmas", c, s);
  for (const auto& l : laws) run.declare(l);

  const auto U = detail::effect_universe(c, s, rng);
  const auto P = detail::projection_universe(c, s, rng);
  const std::size_t n = s.case_budget;
  std::vector<Element> G, Ep;
  for (std::size_t i = 0; i < n; ++i) G.push_back(detail::group_sample(c, s, rng));
  for (std::size_t i = 0; i < n; ++i) Ep.push_back(detail::cone_sample(c, s, rng));
  auto pick = [&](const std::vector<Element>& v) -> const Element& { return v[rng.below(v.size())]; };
  auto mul = [&](const Element& a, const Element& b) { return c.multiply(a, b); };
  auto sandwich = [&](const Element& p, const Element& a) { return mul(mul(p, a), p); };
  const bool all_pairs = s.mode == SampleMode::exhaustive && detail::enumerable_pairs(U);

  for (const auto& g : G) run.add(law("AA.i"), {g});
  for (std::size_t i = 0; i < n; ++i) run.add(law("AA.ii"), {pick(G), pick(G)});
  for (std::size_t i = 0; i < n; ++i) run.add(law("AA.iii"), {pick(Ep), pick(G)});
  for (std::size_t i = 0; i < n; ++i) run.add(law("AA.iv"), {pick(P), pick(G)});
  for (std::size_t i = 0; i < n; ++i) run.add(law("AA.v"), {pick(P), pick(Ep)});

  for (const auto& e : U) run.add(law("E.i"), {e});
  for (const auto& g : G) run.add(law("E.i"), {g});
  run.add(law("E.ii"), {});
  for (const auto& p : P) {
    run.add(law("E.iii"), {p});
    run.add(law("E.iv"), {p});
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(U.size(), 64); ++i) {
    run.add(law("E.iii"), {U[i]});
    run.add(law("E.iv"), {U[i]});
  }

  std::vector<std::pair<Element, Element>> ef;
  if (all_pairs) {
    for (const auto& e : U)
      for (const auto& f : U) ef.emplace_back(e, f);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const Element& e = pick(U);
      ef.emplace_back(e, pick(U));
    }
  }
  // commuting pairs that exist in every carrier
  for (std::size_t i = 0; i < n / 4; ++i) {
    const Element& e = pick(U);
    const Element& p = pick(P);
    const Element& x = pick(U);
    const Element& y = pick(U);
    ef.emplace_back(e, mul(e, e));
    ef.emplace_back(e, c.complement(e));
    ef.emplace_back(sandwich(p, x), sandwich(c.complement(p), y));
    ef.emplace_back(sandwich(p, x), p);
  }
  for (const auto& [e, f] : ef) {
    run.add(law("FF.i"), {e, f});
    run.add(law("FF.ii"), {e, f});
    run.add(law("FF.iii"), {e, f});
  }
  for (const auto& e : U) run.add(law("FF.iv"), {e});

  for (std::size_t i = 0; i < n; ++i) run.add(law("M.i"), {pick(Ep), pick(Ep)});
  for (std::size_t i = 0; i < n / 4; ++i) {
    const Element& p = pick(P);
    run.add(law("M.i"), {sandwich(p, pick(Ep)), sandwich(c.complement(p), pick(Ep))});
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Element& g = pick(Ep);
    const Element h = c.add(g, pick(Ep));
    run.add(law("M.ii"), {g, h, pick(Ep)});
    const Element& p = pick(P);
    const Element pg = sandwich(p, pick(Ep));
    const Element ph = c.add(pg, sandwich(p, pick(Ep)));
    const Element k = c.add(p, sandwich(c.complement(p), pick(Ep)));
    run.add(law("M.ii"), {pg, ph, k});
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Element& g = pick(Ep);
    run.add(law("M.iii"), {g, c.add(g, pick(Ep))});
    run.add(law("M.iii"), {g, c.add(g, mul(g, g))});
    const auto m = rng.between(1, static_cast<std::int64_t>(s.magnitude_bound));
    run.add(law("M.iii"), {g, c.add(g, c.scale(Rational(m), c.one()))});
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Element& p = pick(P);
    const Element g = sandwich(p, pick(Ep));
    run.add(law("M.iv"), {c.add(g, sandwich(p, pick(Ep))), p});
    run.add(law("M.iv"), {pick(Ep), pick(P)});
  }
  run.add(law("M.v"), {c.zero()});
  for (const auto& a : Ep) run.add(law("M.v"), {a});
  for (std::size_t i = 0; i < std::min<std::size_t>(U.size(), n); ++i) run.add(law("M.v"), {U[i]});

  for (const auto& g : G) run.add(law("orderunit.i"), {g});
  run.add(law("orderunit.ii"), {c.zero(), c.zero(), c.zero()});
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Element& a = pick(Ep);
    const Element& b = pick(Ep);
    run.add(law("orderunit.ii"), {a, b, c.negate(c.add(a, b))});
  }

  std::vector<std::pair<Element, Element>> ep;
  if (all_pairs && U.size() * P.size() <= 250'000) {
    for (const auto& e : U)
      for (const auto& p : P) ep.emplace_back(e, p);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const Element& e = pick(U);
      ep.emplace_back(e, pick(P));
    }
  }
  for (const auto& [e, p] : ep) {
    run.add(law("CC"), {e, p});
    run.add(law("DD"), {e, p});
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Element& p = pick(P);
    run.add(law("CC"), {sandwich(p, pick(U)), p});
    run.add(law("DD"), {c.add(p, sandwich(c.complement(p), pick(U))), p});
  }

  for (const auto& g : G) {
    run.add(law("th:G.reflexive"), {g});
    run.add(law("th:G.directed"), {g});
  }
  for (std::size_t i = 0; i < n / 2; ++i) {
    const Element& g = pick(G);
    const Element h = c.add(g, pick(Ep));
    const Element k = c.add(h, pick(Ep));
    run.add(law("th:G.antisymmetric"), {g, g});
    run.add(law("th:G.antisymmetric"), {g, h});
    run.add(law("th:G.antisymmetric"), {g, pick(G)});
    run.add(law("th:G.transitive"), {g, h, k});
    run.add(law("th:G.transitive"), {g, pick(G), pick(G)});
  }

  run.note("lm:E lists two parts labelled (iii); they are reported as E.iii (complements) and E.iv (P within E)");
  if (!all_pairs) run.note("effect pairs are sampled");
  return run.finish();
}

}  // namespace ering
