#include "ering/projections.hpp"

#include <algorithm>

#include "ering/axioms.hpp"
#include "ering/errors.hpp"
#include "suite_util.hpp"

namespace ering {

using detail::agree;
using detail::expect;
using detail::idempotent;
using detail::show;
using In = std::span<const Element>;

namespace {

constexpr std::uint64_t kRetractionStream = 0x52455452;  // "RETR"
constexpr std::size_t kTripleCap = 250'000;

void same_carrier(const Projection& p, const Projection& q) {
  if (&p.carrier() != &q.carrier()) throw CarrierMismatch("projections belong to different carriers");
}

bool commute(const Carrier& c, const Element& a, const Element& b) { return c.multiply(a, b) == c.multiply(b, a); }

Element sandwich(const Carrier& c, const Element& p, const Element& g) { return c.multiply(c.multiply(p, g), p); }

Element join_of(const Carrier& c, const Element& p, const Element& q) {
  return c.subtract(c.add(p, q), c.multiply(p, q));
}

bool both_projections(const Carrier& c, In in) { return idempotent(c, in[0]) && idempotent(c, in[1]); }

std::vector<Element> elements(std::span<const Projection> ps) {
  std::vector<Element> out;
  for (const auto& p : ps) out.push_back(p.element());
  return out;
}

Law idempotence_law() {
  return {"P.idempotent", "an admitted projection satisfies p = p^2 in G", {"p"},
          [](const LawContext& x, In in) {
            const Carrier& c = x.carrier;
            return expect(idempotent(c, in[0]), "p = p^2",
                          [&] { return "p^2 = " + show(c.multiply(in[0], in[0])); });
          }};
}

Law pnormal_law() {
  return {"lm:Pnormal", "d, e, f, d + e + f in E and d + e, d + f in P imply d, e, f in P", {"d", "e", "f"},
          [](const LawContext& x, In in) {
            const Carrier& c = x.carrier;
            for (const auto& a : in)
              if (!c.is_in_E(a)) return LawOutcome::vacuous();
            if (!c.is_in_E(c.add(c.add(in[0], in[1]), in[2]))) return LawOutcome::vacuous();
            if (!idempotent(c, c.add(in[0], in[1])) || !idempotent(c, c.add(in[0], in[2])))
              return LawOutcome::vacuous();
            return expect(idempotent(c, in[0]) && idempotent(c, in[1]) && idempotent(c, in[2]), "d, e, f in P",
                          [] { return std::string("some part is not idempotent"); });
          }};
}

// (pq, p - pq, q - pq) for commuting pairs satisfies the hypotheses of lm:Pnormal.
void add_pnormal_cases(SuiteRun& run, const Law& law, const Carrier& c, const std::vector<Element>& ps) {
  for (const auto& p : ps)
    for (const auto& q : ps) {
      if (!idempotent(c, p) || !idempotent(c, q) || !commute(c, p, q)) continue;
      const Element d = c.multiply(p, q);
      run.add(law, {d, c.subtract(p, d), c.subtract(q, d)});
    }
}

}  // namespace

bool is_projection(const Carrier& c, const Element& g) { return idempotent(c, g); }

Projection::Projection(const Carrier& c, Element p) : carrier_(&c), element_(std::move(p)) {
  if (!is_projection(c, element_))
    throw PreconditionError(element_.to_string() + " is not a projection of " + c.describe());
}

Projection proj_meet(const Projection& p, const Projection& q) {
  same_carrier(p, q);
  const Carrier& c = p.carrier();
  if (!commute(c, p.element(), q.element()))
    throw PreconditionError("meet is defined only for commuting projections");
  return Projection(c, c.multiply(p.element(), q.element()));
}

Projection proj_join(const Projection& p, const Projection& q) {
  same_carrier(p, q);
  const Carrier& c = p.carrier();
  if (!commute(c, p.element(), q.element()))
    throw PreconditionError("join is defined only for commuting projections");
  return Projection(c, join_of(c, p.element(), q.element()));
}

Projection proj_orthodiff(const Projection& p, const Projection& q) {
  same_carrier(p, q);
  const Carrier& c = p.carrier();
  if (!leq(c, p.element(), q.element()))
    throw PreconditionError("q - p needs p <= q; " + show(p.element()) + " is not below " + show(q.element()));
  return Projection(c, c.subtract(q.element(), p.element()));
}

std::optional<MackeyDecomposition> mackey_compatible(const Projection& p, const Projection& q) {
  same_carrier(p, q);
  const Carrier& c = p.carrier();
  if (!commute(c, p.element(), q.element())) return std::nullopt;
  const Element d = c.multiply(p.element(), q.element());
  MackeyDecomposition m{d, c.subtract(p.element(), d), c.subtract(q.element(), d)};
  const Element total = c.add(c.add(m.d, m.p1), m.q1);
  if (!idempotent(c, m.d) || !idempotent(c, m.p1) || !idempotent(c, m.q1) || !idempotent(c, total))
    throw std::logic_error("commuting projections without a Mackey decomposition: " + show(p.element()) + ", " +
                           show(q.element()));
  return m;
}

Element compress(const Projection& p, const Element& g) { return sandwich(p.carrier(), p.element(), g); }

// ---- laws ----------------------------------------------------------------

const std::vector<Law>& projection_laws() {
  static const std::vector<Law> laws = {
      idempotence_law(),
      {"th:pqinP", "pq in P, pq in E, pq = qp, pq = pqp agree", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in)) return LawOutcome::vacuous();
         const Element pq = c.multiply(in[0], in[1]);
         return agree({{"(i) pq in P", idempotent(c, pq)},
                       {"(ii) pq in E", c.is_in_E(pq)},
                       {"(iii) pq = qp", pq == c.multiply(in[1], in[0])},
                       {"(iv) pq = pqp", pq == c.multiply(pq, in[0])}});
       }},
      {"th:pqinP.inf", "for commuting p, q: pq <= p, q and every effect r <= p, q has r <= pq", {"p", "q", "r"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !commute(c, in[0], in[1]) || !c.is_in_E(in[2])) return LawOutcome::vacuous();
         const Element pq = c.multiply(in[0], in[1]);
         if (!leq(c, pq, in[0]) || !leq(c, pq, in[1]))
           return LawOutcome::violated("pq <= p, q", "pq = " + show(pq) + " is not a lower bound");
         if (!leq(c, in[2], in[0]) || !leq(c, in[2], in[1])) return LawOutcome::holds();
         return expect(leq(c, in[2], pq), "r <= pq", [&] { return "lower bound r not below pq = " + show(pq); });
       }},
      {"cor:pqinP", "for commuting p, q: p + q - pq is a projection above p and q", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !commute(c, in[0], in[1])) return LawOutcome::vacuous();
         const Element j = join_of(c, in[0], in[1]);
         return expect(idempotent(c, j) && leq(c, in[0], j) && leq(c, in[1], j), "p v q in P, p, q <= p v q",
                       [&] { return "p + q - pq = " + show(j); });
       }},
      {"cor:pqinP.sup", "for commuting p, q: every effect r >= p, q has p + q - pq <= r", {"p", "q", "r"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !commute(c, in[0], in[1]) || !c.is_in_E(in[2])) return LawOutcome::vacuous();
         if (!leq(c, in[0], in[2]) || !leq(c, in[1], in[2])) return LawOutcome::vacuous();
         const Element j = join_of(c, in[0], in[1]);
         return expect(leq(c, j, in[2]), "p v q <= r", [&] { return "upper bound r not above " + show(j); });
       }},
      {"cor:pqinP.de-morgan", "for commuting p, q: 1 - (p v q) = (1 - p) ^ (1 - q)", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !commute(c, in[0], in[1])) return LawOutcome::vacuous();
         const Element np = c.complement(in[0]), nq = c.complement(in[1]);
         const Element left = c.complement(join_of(c, in[0], in[1]));
         const Element right = c.multiply(np, nq);
         return expect(commute(c, np, nq) && left == right, "1 - (p v q) = (1 - p)(1 - q)",
                       [&] { return show(left) + " vs " + show(right); });
       }},
      {"cor:q-pinP", "q - p in E, p <= q, q - p in P agree", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in)) return LawOutcome::vacuous();
         const Element d = c.subtract(in[1], in[0]);
         return agree({{"q - p in E", c.is_in_E(d)}, {"p <= q", leq(c, in[0], in[1])}, {"q - p in P", idempotent(c, d)}});
       }},
      {"cor:q-pinP.inf", "for p <= q: q - p <= q, 1 - p and every effect r <= q, 1 - p has r <= q - p",
       {"p", "q", "r"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !leq(c, in[0], in[1]) || !c.is_in_E(in[2])) return LawOutcome::vacuous();
         const Element d = c.subtract(in[1], in[0]), np = c.complement(in[0]);
         if (!leq(c, d, in[1]) || !leq(c, d, np))
           return LawOutcome::violated("q - p <= q, 1 - p", "q - p = " + show(d) + " is not a lower bound");
         if (!leq(c, in[2], in[1]) || !leq(c, in[2], np)) return LawOutcome::holds();
         return expect(leq(c, in[2], d), "r <= q - p", [&] { return "lower bound r not below " + show(d); });
       }},
      {"lm:pCq", "pq = qp iff p, q are Mackey compatible", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in)) return LawOutcome::vacuous();
         const bool commuting = commute(c, in[0], in[1]);
         const auto m = mackey_compatible(Projection(c, in[0]), Projection(c, in[1]));
         if (commuting != m.has_value())
           return LawOutcome::violated("compatible iff commuting", commuting ? "no decomposition" : "decomposition");
         if (!m) return LawOutcome::holds();
         const Element total = c.add(c.add(m->d, m->p1), m->q1);
         const bool ok = c.add(m->d, m->p1) == in[0] && c.add(m->d, m->q1) == in[1] && idempotent(c, total) &&
                         c.multiply(m->d, m->p1) == c.zero() && c.multiply(m->d, m->q1) == c.zero() &&
                         c.multiply(m->p1, m->q1) == c.zero();
         return expect(ok, "p = d + p1, q = d + q1, pairwise orthogonal, sum in P",
                       [&] { return "d = " + show(m->d) + ", p1 = " + show(m->p1) + ", q1 = " + show(m->q1); });
       }},
      pnormal_law(),
      {"proj.ops", "proj_meet, proj_join, proj_orthodiff return pq, p + q - pq, q - p exactly when defined",
       {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in)) return LawOutcome::vacuous();
         const Projection p(c, in[0]), q(c, in[1]);
         auto attempt = [](auto&& f) -> std::optional<Element> {
           try {
             return f().element();
           } catch (const PreconditionError&) {
             return std::nullopt;
           }
         };
         const auto meet = attempt([&] { return proj_meet(p, q); });
         const auto join = attempt([&] { return proj_join(p, q); });
         const auto diff = attempt([&] { return proj_orthodiff(p, q); });
         const bool commuting = commute(c, in[0], in[1]);
         const bool below = leq(c, in[0], in[1]);
         bool ok = meet.has_value() == commuting && join.has_value() == commuting && diff.has_value() == below;
         if (ok && meet) ok = *meet == c.multiply(in[0], in[1]) && *join == join_of(c, in[0], in[1]);
         if (ok && diff) ok = *diff == c.subtract(in[1], in[0]);
         return expect(ok, "operations defined iff preconditions hold, with the stated values",
                       [&] { return std::string("commuting=") + (commuting ? "true" : "false") +
                                    ", p<=q=" + (below ? "true" : "false"); });
       }},
  };
  return laws;
}

const std::vector<Law>& omp_laws() {
  static const std::vector<Law> laws = {
      idempotence_law(),
      {"th:OMP.bounds", "0 <= p <= 1", {"p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         return expect(leq(c, c.zero(), in[0]) && leq(c, in[0], c.one()), "0 <= p <= 1",
                       [] { return std::string("p outside [0, 1]"); });
       }},
      {"th:OMP.involution", "1 - p in P and 1 - (1 - p) = p", {"p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         const Element np = c.complement(in[0]);
         return expect(idempotent(c, np) && c.complement(np) == in[0], "orthocomplement is an involution on P",
                       [&] { return "1 - p = " + show(np); });
       }},
      {"th:OMP.order-reversing", "p <= q implies 1 - q <= 1 - p", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !leq(c, in[0], in[1])) return LawOutcome::vacuous();
         return expect(leq(c, c.complement(in[1]), c.complement(in[0])), "1 - q <= 1 - p",
                       [] { return std::string("order not reversed"); });
       }},
      {"th:OMP.orthogonal-sup", "p <= 1 - q implies p + q in P with p, q <= p + q", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !leq(c, in[0], c.complement(in[1]))) return LawOutcome::vacuous();
         const Element s = c.add(in[0], in[1]);
         return expect(idempotent(c, s) && leq(c, in[0], s) && leq(c, in[1], s), "p + q in P above p and q",
                       [&] { return "p + q = " + show(s); });
       }},
      {"th:OMP.orthogonal-lub", "p <= 1 - q and p, q <= r in P imply p + q <= r", {"p", "q", "r"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !idempotent(c, in[2])) return LawOutcome::vacuous();
         if (!leq(c, in[0], c.complement(in[1])) || !leq(c, in[0], in[2]) || !leq(c, in[1], in[2]))
           return LawOutcome::vacuous();
         return expect(leq(c, c.add(in[0], in[1]), in[2]), "p + q <= r",
                       [] { return std::string("upper bound r not above p + q"); });
       }},
      {"th:OMP.orthomodular", "p <= q implies q - p in P and q = p + (q - p)", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in) || !leq(c, in[0], in[1])) return LawOutcome::vacuous();
         const Element d = c.subtract(in[1], in[0]);
         return expect(idempotent(c, d) && c.add(in[0], d) == in[1], "q = p v (q - p)",
                       [&] { return "q - p = " + show(d); });
       }},
      {"th:p+qinP", "p + q in E, p + q <= 1, pq = 0, pq = qp = 0, p + q in P agree", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!both_projections(c, in)) return LawOutcome::vacuous();
         const Element s = c.add(in[0], in[1]);
         const Element pq = c.multiply(in[0], in[1]);
         const bool pq0 = pq == c.zero();
         return agree({{"(i) p + q in E", c.is_in_E(s)},
                       {"(ii) p + q <= 1", leq(c, s, c.one())},
                       {"(iii) pq = 0", pq0},
                       {"(iv) pq = qp = 0", pq0 && c.multiply(in[1], in[0]) == c.zero()},
                       {"(v) p + q in P", idempotent(c, s)}});
       }},
      pnormal_law(),
  };
  return laws;
}

namespace {

using CompressionMap = Element (*)(const Carrier&, const Element&, const Element&);

Element left_map(const Carrier& c, const Element& p, const Element& g) { return c.multiply(p, g); }

std::vector<Law> make_compression_laws(CompressionMap j) {
  return {
      {"th:compbase.in-G", "J_p(g) lies in G", {"p", "g"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         const Element r = j(c, in[0], in[1]);
         return expect(c.in_G(r), "J_p(g) in G", [&] { return "J_p(g) = " + show(r) + " is outside G"; });
       }},
      {"th:compbase.additive", "J_p(g + h) = J_p(g) + J_p(h)", {"p", "g", "h"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         const Element l = j(c, in[0], c.add(in[1], in[2]));
         const Element r = c.add(j(c, in[0], in[1]), j(c, in[0], in[2]));
         return expect(l == r, "J_p additive", [&] { return show(l) + " vs " + show(r); });
       }},
      {"th:compbase.positive", "h in E+ implies J_p(h) in E+ (AA.v)", {"p", "h"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !c.is_in_Eplus(in[1])) return LawOutcome::vacuous();
         const Element r = j(c, in[0], in[1]);
         return expect(c.is_in_Eplus(r), "J_p(h) in E+", [&] { return "J_p(h) = " + show(r); });
       }},
      {"th:compbase.effects", "e in E implies J_p(e) in E", {"p", "e"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !c.is_in_E(in[1])) return LawOutcome::vacuous();
         const Element r = j(c, in[0], in[1]);
         return expect(c.is_in_E(r), "J_p(e) in E", [&] { return "J_p(e) = " + show(r); });
       }},
      {"th:compbase.unit", "J_p(1) = p", {"p"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         const Element r = j(c, in[0], c.one());
         return expect(r == in[0], "J_p(1) = p", [&] { return "J_p(1) = " + show(r); });
       }},
      {"th:compbase.retraction", "e in E with e <= p implies J_p(e) = e (th:CC)", {"p", "e"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !c.is_in_E(in[1]) || !leq(c, in[1], in[0])) return LawOutcome::vacuous();
         const Element r = j(c, in[0], in[1]);
         return expect(r == in[1], "J_p(e) = e", [&] { return "J_p(e) = " + show(r); });
       }},
      {"th:compbase.idempotent", "J_p(J_p(g)) = J_p(g)", {"p", "g"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         const Element once = j(c, in[0], in[1]);
         const Element twice = j(c, in[0], once);
         return expect(once == twice, "J_p o J_p = J_p", [&] { return show(twice) + " vs " + show(once); });
       }},
      {"th:compbase.J0", "J_0 is the zero map", {"g"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element r = j(c, c.zero(), in[0]);
         return expect(r == c.zero(), "J_0(g) = 0", [&] { return "J_0(g) = " + show(r); });
       }},
      {"th:compbase.J1", "J_1 is the identity", {"g"},
       [j](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element r = j(c, c.one(), in[0]);
         return expect(r == in[0], "J_1(g) = g", [&] { return "J_1(g) = " + show(r); });
       }},
  };
}

}  // namespace

const std::vector<Law>& compression_laws(CompressionFamily family) {
  static const std::vector<Law> sandwich_laws = make_compression_laws(&sandwich);
  static const std::vector<Law> left_laws = make_compression_laws(&left_map);
  return family == CompressionFamily::left ? left_laws : sandwich_laws;
}

// ---- suites --------------------------------------------------------------

namespace {

// Runs the OMP laws over `ps`; pairs always, triples up to kTripleCap.
void add_omp_cases(SuiteRun& run, const Carrier& c, const std::vector<Element>& ps, const SampleStrategy& s,
                   Rng& rng) {
  const auto& laws = omp_laws();
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };
  for (const auto& l : laws) run.declare(l);
  for (const auto& p : ps) {
    run.add(law("P.idempotent"), {p});
    run.add(law("th:OMP.bounds"), {p});
    run.add(law("th:OMP.involution"), {p});
  }
  for (const auto& p : ps)
    for (const auto& q : ps) {
      run.add(law("th:OMP.order-reversing"), {p, q});
      run.add(law("th:OMP.orthogonal-sup"), {p, q});
      run.add(law("th:OMP.orthomodular"), {p, q});
      run.add(law("th:p+qinP"), {p, q});
    }
  const std::size_t n = ps.size();
  if (n * n * n <= kTripleCap) {
    for (const auto& p : ps)
      for (const auto& q : ps)
        for (const auto& r : ps) run.add(law("th:OMP.orthogonal-lub"), {p, q, r});
  } else {
    run.evidence("sampled");
    for (std::size_t i = 0; i < s.case_budget; ++i) {
      const Element& p = ps[rng.below(n)];
      const Element& q = ps[rng.below(n)];
      run.add(law("th:OMP.orthogonal-lub"), {p, q, ps[rng.below(n)]});
    }
  }
  add_pnormal_cases(run, law("lm:Pnormal"), c, ps);
}

}  // namespace

OmpCertificate verify_omp(const Carrier& c, std::span<const Projection> universe, const SampleStrategy& s) {
  for (const auto& p : universe)
    if (&p.carrier() != &c) throw CarrierMismatch("verify_omp: projection from another carrier");
  OmpCertificate cert;
  cert.universe = elements(universe);
  Rng rng(s.seed);
  SuiteRun run("omp", c, s);
  run.evidence("exhaustive");
  add_omp_cases(run, c, cert.universe, s, rng);
  run.note("suprema are relative to the given universe of " + std::to_string(universe.size()) + " projections");
  cert.report = run.finish();
  return cert;
}

VerificationReport verify_omp_suite(const Carrier& c, const SampleStrategy& s) {
  detail::require_strategy(c, s, "omp");
  Rng rng(s.seed);
  // unfiltered, so a non-idempotent candidate surfaces as a P.idempotent failure
  const auto ps = c.projection_candidates(rng, 24, s.magnitude_bound);
  SuiteRun run("omp", c, s);
  if (c.finite_projections()) run.evidence("exhaustive");
  add_omp_cases(run, c, ps, s, rng);
  run.finding("projections", std::to_string(ps.size()));
  if (!c.finite_projections()) run.note("projection universe is sampled; suprema are relative to it");
  return run.finish();
}

VerificationReport verify_projection_suite(const Carrier& c, const SampleStrategy& s) {
  detail::require_strategy(c, s, "projections");
  const auto& laws = projection_laws();
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };
  Rng rng(s.seed);
  SuiteRun run("projections", c, s);
  for (const auto& l : laws) run.declare(l);

  const auto ps = c.projection_candidates(rng, 24, s.magnitude_bound);
  const auto U = detail::effect_universe(c, s, rng);
  for (const auto& p : ps) run.add(law("P.idempotent"), {p});
  std::vector<std::pair<Element, Element>> commuting;
  for (const auto& p : ps)
    for (const auto& q : ps) {
      for (auto id : {"th:pqinP", "cor:pqinP", "cor:pqinP.de-morgan", "cor:q-pinP", "lm:pCq", "proj.ops"})
        run.add(law(id), {p, q});
      if (idempotent(c, p) && idempotent(c, q) && commute(c, p, q)) commuting.emplace_back(p, q);
    }

  const bool exhaustive = s.mode == SampleMode::exhaustive && ps.size() * ps.size() * U.size() <= kTripleCap;
  if (exhaustive) {
    for (const auto& p : ps)
      for (const auto& q : ps)
        for (const auto& r : U)
          for (auto id : {"th:pqinP.inf", "cor:pqinP.sup", "cor:q-pinP.inf"}) run.add(law(id), {p, q, r});
  } else if (!commuting.empty()) {
    // random effects are rarely comparable with p and q, so half the r are
    // built to satisfy the hypotheses
    for (std::size_t i = 0; i < s.case_budget; ++i) {
      const auto& [p, q] = commuting[rng.below(commuting.size())];
      const Element& x = U[rng.below(U.size())];
      const Element meet = c.multiply(p, q);
      const Element join = join_of(c, p, q);
      const bool build = rng.coin();
      run.add(law("th:pqinP.inf"), {p, q, build ? sandwich(c, meet, x) : x});
      run.add(law("cor:pqinP.sup"), {p, q, build ? c.add(join, sandwich(c, c.complement(join), x)) : x});
      const Element diff = c.subtract(q, p);
      run.add(law("cor:q-pinP.inf"), {p, q, build && leq(c, p, q) ? sandwich(c, diff, x) : x});
    }
  }

  add_pnormal_cases(run, law("lm:Pnormal"), c, ps);
  if (s.mode == SampleMode::exhaustive) {
    // every instance of the lm:Pnormal hypotheses with d in E
    std::size_t added = 0;
    for (const auto& d : U)
      for (const auto& p : ps) {
        if (!leq(c, d, p)) continue;
        for (const auto& q : ps)
          if (leq(c, d, q) && added++ < kTripleCap) run.add(law("lm:Pnormal"), {d, c.subtract(p, d), c.subtract(q, d)});
      }
  }
  for (std::size_t i = 0; i < s.case_budget / 4; ++i) {
    const Element& d = U[rng.below(U.size())];
    const Element& e = U[rng.below(U.size())];
    run.add(law("lm:Pnormal"), {d, e, U[rng.below(U.size())]});
  }

  run.finding("projections", std::to_string(ps.size()));
  run.finding("commuting pairs", std::to_string(commuting.size()));
  if (!exhaustive) run.note("infima and suprema are checked against sampled and constructed effects");
  return run.finish();
}

VerificationReport verify_compression_base(const Carrier& c, std::span<const Projection> universe,
                                           const SampleStrategy& s, CompressionFamily family) {
  for (const auto& p : universe)
    if (&p.carrier() != &c) throw CarrierMismatch("verify_compression_base: projection from another carrier");
  const auto& laws = compression_laws(family);
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };
  Rng rng(s.seed);
  SuiteRun run("compression", c, s);
  for (const auto& l : laws) run.declare(l);

  const bool exhaustive = s.mode == SampleMode::exhaustive && c.enumerable_E();
  const auto effects = exhaustive ? c.effects() : std::vector<Element>{};
  const std::size_t per = universe.empty() ? 0 : std::max<std::size_t>(8, s.case_budget / universe.size());
  for (const auto& proj : universe) {
    const Element& p = proj.element();
    run.add(law("th:compbase.unit"), {p});
    for (const auto& e : effects) {
      run.add(law("th:compbase.effects"), {p, e});
      run.add(law("th:compbase.retraction"), {p, e});
      run.add(law("th:compbase.positive"), {p, e});
    }
    for (std::size_t i = 0; i < per; ++i) {
      const Element g = detail::group_sample(c, s, rng);
      const Element h = detail::group_sample(c, s, rng);
      const Element e = c.sample_effect(rng, s.magnitude_bound);
      const Element cone = detail::cone_sample(c, s, rng);
      run.add(law("th:compbase.in-G"), {p, g});
      run.add(law("th:compbase.additive"), {p, g, h});
      run.add(law("th:compbase.idempotent"), {p, g});
      run.add(law("th:compbase.positive"), {p, cone});
      run.add(law("th:compbase.effects"), {p, e});
      // pep <= p, so the retraction hypothesis holds
      run.add(law("th:compbase.retraction"), {p, sandwich(c, p, e)});
      run.add(law("th:compbase.retraction"), {p, e});
    }
  }
  for (std::size_t i = 0; i < std::max<std::size_t>(8, s.case_budget / 4); ++i) {
    const Element g = detail::group_sample(c, s, rng);
    run.add(law("th:compbase.J0"), {g});
    run.add(law("th:compbase.J1"), {g});
  }
  if (!exhaustive) run.evidence("sampled");
  run.note("compression base (derivable laws): the full definition is external");
  if (family == CompressionFamily::left) run.note("map family under test: g -> pg");
  return run.finish();
}

VerificationReport verify_compression_suite(const Carrier& c, const SampleStrategy& s, CompressionFamily family) {
  detail::require_strategy(c, s, "compression");
  Rng rng(s.seed);
  std::vector<Projection> ps;
  for (auto& p : detail::projection_universe(c, s, rng, 8)) ps.emplace_back(c, std::move(p));
  return verify_compression_base(c, ps, s, family);
}

// ---- retractions ---------------------------------------------------------

Endomorphism::Endomorphism(const Carrier& c, std::vector<Element> images) : carrier_(&c), images_(std::move(images)) {
  if (images_.size() != c.spanning_set().size())
    throw PreconditionError("endomorphism table needs " + std::to_string(c.spanning_set().size()) + " images");
  for (const auto& g : images_)
    if (!c.in_G(g)) throw PreconditionError("endomorphism image " + show(g) + " is outside G");
}

Endomorphism Endomorphism::tabulate(const Carrier& c, const std::function<Element(const Element&)>& f) {
  std::vector<Element> images;
  for (const auto& b : c.spanning_set()) images.push_back(f(b));
  return Endomorphism(c, std::move(images));
}

Element Endomorphism::operator()(const Element& g) const {
  const auto coords = carrier_->coordinates(g);
  Element out = carrier_->zero();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) out = carrier_->add(out, carrier_->scale(coords[i], images_[i]));
  return out;
}

Projection retraction_projection(const Carrier& c, const Endomorphism& j, const SampleStrategy& s) {
  if (!c.archimedean()) throw CapabilityError("retraction_projection needs an archimedean carrier");
  const Element p = j(c.one());
  if (!c.is_in_E(p)) throw PreconditionError("J(1) = " + show(p) + " is not an effect");

  Rng rng = Rng::derived(s.seed, kRetractionStream);
  const std::size_t n = std::max<std::size_t>(32, s.case_budget);
  for (std::size_t i = 0; i < n; ++i) {
    const Element h = detail::cone_sample(c, s, rng);
    if (!c.is_in_Eplus(j(h))) throw PreconditionError("J is not order-preserving: J(h) = " + show(j(h)) + " for h = " + show(h));
  }
  std::vector<Element> below{c.zero(), p};
  for (std::size_t i = 0; i < n; ++i) {
    Element e = c.sample_effect(rng, s.magnitude_bound);
    if (leq(c, e, p)) below.push_back(std::move(e));
  }
  for (const auto& e : below)
    if (j(e) != e) throw PreconditionError("J is not a retraction: e = " + show(e) + " <= J(1) but J(e) = " + show(j(e)));
  if (!is_projection(c, p)) throw PreconditionError("J(1) = " + show(p) + " is not a projection");

  const auto basis = c.spanning_set();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Element jp = sandwich(c, p, basis[i]);
    if (j.images()[i] != jp)
      throw PreconditionError("J differs from J_p at g = " + show(basis[i]) + ": J(g) = " + show(j.images()[i]) +
                              ", pgp = " + show(jp));
  }
  return Projection(c, p);
}

Projection retraction_projection(const Carrier& c, const std::function<Element(const Element&)>& j,
                                 const SampleStrategy& s) {
  Rng rng = Rng::derived(s.seed, kRetractionStream + 1);
  for (std::size_t i = 0; i < std::max<std::size_t>(32, s.case_budget); ++i) {
    const Element g = detail::group_sample(c, s, rng);
    const Element h = detail::group_sample(c, s, rng);
    if (j(c.add(g, h)) != c.add(j(g), j(h)))
      throw PreconditionError("J is not additive at g = " + show(g) + ", h = " + show(h));
  }
  return retraction_projection(c, Endomorphism::tabulate(c, j), s);
}

}  // namespace ering
