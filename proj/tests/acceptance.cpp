// Acceptance gate: criteria 1-10, one line each, with wall-clock limits.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "ering/axioms.hpp"
#include "ering/boolean.hpp"
#include "ering/cli.hpp"
#include "ering/effects.hpp"
#include "ering/errors.hpp"
#include "ering/projections.hpp"
#include "oracles.hpp"

using namespace ering;
using oracle::fn;
using oracle::mat;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = ERING_FIXTURES;
const Rational half(1, 2);

CarrierPtr ints(std::size_t n) { return make_function_carrier(MeasurableSpace::discrete(n), ValueRing::integers); }
CarrierPtr rats(std::size_t n, std::optional<std::int64_t> grid) {
  return make_function_carrier(MeasurableSpace::discrete(n), ValueRing::rationals, grid);
}

// Collects the reasons a criterion fails.
struct Check {
  std::vector<std::string> problems;
  std::vector<std::string> facts;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void fact(const std::string& f) { facts.push_back(f); }
};

std::string first_failure(const VerificationReport& r) {
  if (r.failures.empty()) return "";
  return r.failures[0].law_id + " (" + r.failures[0].actual + ")";
}

void require_pass(Check& k, const VerificationReport& r, const std::string& label) {
  k.require(r.passed(), label + " failed: " + first_failure(r));
  k.require(r.undecided.empty(), label + " has " + std::to_string(r.undecided.size()) + " undecided cases");
}

std::vector<Projection> all_projections(const Carrier& c) {
  Rng rng(0);
  std::vector<Projection> out;
  for (auto& p : c.projection_candidates(rng, 0, 1)) out.emplace_back(c, std::move(p));
  return out;
}

void criterion1(Check& k) {
  for (std::size_t n : {2u, 3u}) {
    const auto c = ints(n);
    const auto r = verify_ering_axioms(*c, {SampleMode::exhaustive, 1, 1000, 6});
    require_pass(k, r, std::to_string(n) + "-atom Z axioms");
    k.require(r.evidence == "exhaustive", "evidence is " + r.evidence);
    k.fact(std::to_string(n) + "-atom: " + std::to_string(r.total_cases) + " cases");
  }
}

void criterion2(Check& k) {
  for (std::size_t n : {2u, 3u}) {
    const auto c = make_matrix_carrier(n);
    const auto r = verify_ering_axioms(*c, {SampleMode::seeded, 2024, 300, 6});
    require_pass(k, r, std::to_string(n) + "x" + std::to_string(n) + " axioms");
    k.require(r.total_cases >= 2000, "only " + std::to_string(r.total_cases) + " cases");
    k.fact(std::to_string(n) + "x" + std::to_string(n) + ": " + std::to_string(r.total_cases) + " cases");
  }
}

void criterion3(Check& k) {
  const std::vector<std::pair<const char*, SuiteId>> mutants = {
      {"effects_not_closed.json", SuiteId::axioms}, {"symmetric_cone.json", SuiteId::axioms},
      {"lax_psd_oracle.json", SuiteId::axioms},     {"fake_projection.json", SuiteId::projections},
      {"left_compression.json", SuiteId::compression}, {"broken_join_hom.json", SuiteId::boolean},
  };
  std::size_t killed = 0;
  for (const auto& [file, suite] : mutants) {
    const Model m = load_model(kFixtures / "mutants" / file);
    SuiteRequest req{suite, {default_mode(*m.carrier), 1, 200, 6}, false};
    const auto r = run_suite(m, req);
    if (r.failures.empty()) {
      k.require(false, std::string(file) + " survived " + to_string(suite));
      continue;
    }
    const auto& f = r.failures[0];
    k.require(!f.inputs.empty() || f.law_id == "th:Booext.phi.bounds", std::string(file) + ": empty payload");
    bool reproduced = true;
    for (const auto& x : replay_report(m, render_json(m, req, r))) reproduced = reproduced && x.outcome.status == LawStatus::violated;
    k.require(reproduced, std::string(file) + ": counterexample does not replay");
    ++killed;
  }
  k.fact(std::to_string(killed) + "/" + std::to_string(mutants.size()) + " mutants killed");
}

void criterion4(Check& k) {
  const auto c = ints(3);
  const auto ps = all_projections(*c);
  const auto E = c->effects();
  k.require(ps.size() == 8, "expected 8 projections, got " + std::to_string(ps.size()));
  const SampleStrategy s{SampleMode::exhaustive, 1, 100, 6};
  const LawContext ctx{*c, s};
  const Law& pq = law_by_id(projection_laws(), "th:pqinP");
  const Law& psum = law_by_id(omp_laws(), "th:p+qinP");
  std::size_t pairs = 0;
  for (const auto& p : ps)
    for (const auto& q : ps) {
      ++pairs;
      const auto inf = oracle::brute_infimum(E, p.element(), q.element());
      const auto sup = oracle::brute_supremum(E, p.element(), q.element());
      k.require(inf && proj_meet(p, q).element() == *inf, "meet differs at " + p.element().to_string());
      k.require(sup && proj_join(p, q).element() == *sup, "join differs at " + p.element().to_string());
      if (leq(*c, p.element(), q.element())) {
        const Element d = proj_orthodiff(p, q).element();
        k.require(c->add(p.element(), d) == q.element() && c->is_in_E(d), "orthodiff wrong at " + d.to_string());
      }
      const std::vector<Element> in = {p.element(), q.element()};
      k.require(evaluate(pq, ctx, in).status == LawStatus::holds, "th:pqinP inconsistent");
      k.require(evaluate(psum, ctx, in).status == LawStatus::holds, "th:p+qinP inconsistent");
    }
  k.fact(std::to_string(pairs) + " pairs against " + std::to_string(E.size()) + " effects");
}

void criterion5(Check& k) {
  const auto m = make_matrix_carrier(2);
  const Element P1 = mat({{1, 0}, {0, 0}});
  const Element Q1 = mat({{half, half}, {half, half}});
  std::vector<Projection> u;
  for (const auto& e : {m->zero(), m->one(), P1, m->complement(P1), Q1, m->complement(Q1)}) u.emplace_back(*m, e);
  const auto cert = verify_omp(*m, u, {});
  k.require(cert.passed(), "matrix universe: " + first_failure(cert.report));
  const auto c = ints(3);
  const auto cube = verify_omp(*c, all_projections(*c), {});
  k.require(cube.passed(), "Boolean cube: " + first_failure(cube.report));
  k.require(!mackey_compatible(Projection(*m, P1), Projection(*m, Q1)), "P1, Q1 reported Mackey compatible");
  const auto w = coexistence_witness(Effect(*m, m->scale(half, P1)), Effect(*m, m->scale(half, Q1)), {});
  k.require(w.verdict == CoexistenceVerdict::coexistent && w.witness && w.witness->d == m->zero(),
            "(1/2)P1, (1/2)Q1 not coexistent via d = 0");
  k.require(w.witness && validate_witness(*m, m->scale(half, P1), m->scale(half, Q1), *w.witness),
            "witness does not validate");
}

void criterion6(Check& k) {
  const auto c = rats(3, 4);
  std::size_t n = 0, sharp = 0;
  for (const auto& e : c->effects()) {
    const auto r = is_sharp(Effect(*c, e), {SampleMode::exhaustive, 0, 100, 6});
    k.require(r.consistent() && r.exhaustive, "grid effect " + e.to_string() + " inconsistent");
    ++n;
    sharp += r.sharp;
  }
  k.require(n == 125, "grid carrier has " + std::to_string(n) + " effects");
  k.require(sharp == 8, std::to_string(sharp) + " sharp grid effects, expected 8");

  const auto m = make_matrix_carrier(2);
  Rng rng(6);
  std::vector<Element> effects = m->landmark_effects();
  while (effects.size() < 520) effects.push_back(m->sample_effect(rng, 6));
  for (auto& p : m->projection_candidates(rng, 20, 6)) effects.push_back(p);
  std::size_t msharp = 0;
  for (const auto& e : effects) {
    const auto r = is_sharp(Effect(*m, e), {SampleMode::seeded, 7, 100, 6});
    k.require(r.consistent(), "matrix effect " + e.to_string() + " inconsistent");
    msharp += r.sharp;
  }
  k.fact("125 grid effects (8 sharp), " + std::to_string(effects.size()) + " matrix effects (" +
         std::to_string(msharp) + " sharp)");
}

void criterion7(Check& k) {
  const std::vector<std::tuple<std::string, CarrierPtr, Truth>> cases = {
      {"2-atom Z", ints(2), Truth::yes},
      {"3-atom Z", ints(3), Truth::yes},
      {"2-atom Q grid 4", rats(2, 4), Truth::no},
      {"2x2 matrix", make_matrix_carrier(2), Truth::no},
  };
  for (const auto& [name, c, expected] : cases) {
    const auto r = bring_conditions(*c, {default_mode(*c), 3, 200, 6});
    for (const auto& b : r.conditions)
      k.require(b.value == expected, name + " " + b.id + " is " + to_string(b.value) + ": " + b.basis);
  }
}

void criterion8(Check& k) {
  for (std::size_t n : {2u, 3u}) {
    const auto c = ints(n);
    stone_represent(*c);
    const auto r = verify_stone_suite(*c, {SampleMode::exhaustive, 8, 1000, 6});
    require_pass(k, r, std::to_string(n) + "-atom stone");
    for (const auto& t : r.laws) {
      k.require(t.cases > t.vacuous, t.law_id + " has no cases");
      if (t.law_id == "th:bring.round-trip")
        k.require(t.cases >= c->effects().size() + 1000, "round trip has only " + std::to_string(t.cases) + " cases");
    }
    k.fact(std::to_string(n) + "-atom: " + std::to_string(r.total_cases) + " cases");
  }
}

void criterion9(Check& k) {
  const auto c = rats(3, std::nullopt);
  Rng rng(9);
  auto pmax = [&](std::initializer_list<Element> xs) {
    std::vector<Rational> m = c->point_values(*xs.begin());
    for (const auto& x : xs) {
      const auto v = c->point_values(x);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < v[i]) m[i] = v[i];
    }
    return fn(m);
  };
  std::size_t bounds = 0, quads = 0;
  for (int i = 0; i < 1000; ++i) {
    const Element g = c->sample_raw(rng, 6), h = c->sample_raw(rng, 6);
    const Element s = lattice_sup(*c, g, h);
    k.require(s == pmax({g, h}), "sup differs from max at " + g.to_string() + ", " + h.to_string());
    for (int j = 0; j < 100; ++j) {
      // an upper bound built without lattice_sup
      const Element u = pmax({g, h, c->sample_raw(rng, 6)});
      k.require(leq(*c, s, u), "sup not below upper bound " + u.to_string());
      ++bounds;
    }
    const Element cc = pmax({g, h, c->sample_raw(rng, 6)});
    const Element d = pmax({g, h, c->sample_raw(rng, 6)});
    const Element t = check_interpolation(*c, g, h, cc, d);
    k.require(leq(*c, g, t) && leq(*c, h, t) && leq(*c, t, cc) && leq(*c, t, d), "bad interpolant");
    ++quads;
  }
  k.fact("1000 pairs, " + std::to_string(bounds) + " upper bounds, " + std::to_string(quads) + " quadruples");
}

void criterion10(Check& k) {
  std::size_t runs = 0;
  for (const char* file : {"ints3.json", "matrix2.json", "grid4.json"}) {
    const Model m = load_model(kFixtures / file);
    for (SuiteId id : {SuiteId::axioms, SuiteId::lemmas, SuiteId::effects, SuiteId::projections, SuiteId::omp,
                       SuiteId::compression, SuiteId::boolean, SuiteId::bring, SuiteId::stone}) {
      const SuiteRequest req{id, {default_mode(*m.carrier), 42, 60, 6}, false};
      std::string a, b;
      try {
        a = render_json(m, req, run_suite(m, req));
        b = render_json(m, req, run_suite(m, req));
      } catch (const CapabilityError&) {
        continue;
      }
      k.require(a == b, to_string(id) + " on " + file + " is not byte-identical");
      ++runs;
    }
  }
  k.fact(std::to_string(runs) + " suite/model pairs compared");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0 for no limit
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "axiom suite, exhaustive on 2- and 3-atom Z", 10, criterion1},
      {2, "axiom suite, sampled on 2x2 and 3x3 matrices", 60, criterion2},
      {3, "mutation kill", 0, criterion3},
      {4, "projection order theory on 3-atom Z", 5, criterion4},
      {5, "OMP certificate and the P1, Q1 remark", 0, criterion5},
      {6, "sharpness equivalence", 0, criterion6},
      {7, "b-ring equivalence", 0, criterion7},
      {8, "structure theorem round trip", 10, criterion8},
      {9, "l-group machinery on 3-atom Q", 0, criterion9},
      {10, "determinism", 0, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Check k;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(k);
    } catch (const std::exception& e) {
      k.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s)
      k.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s");
    const bool ok = k.problems.empty();
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << "  [" << timing;
    if (c.limit_s > 0) std::cout << " < " << c.limit_s << "s";
    std::cout << "]";
    for (const auto& f : k.facts) std::cout << "  " << f << ";";
    std::cout << "\n";
    for (std::size_t i = 0; i < k.problems.size() && i < 5; ++i) std::cout << "      " << k.problems[i] << "\n";
  }
  return failed;
}
