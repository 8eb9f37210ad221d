#include <gtest/gtest.h>

#include <algorithm>

#include "ering/axioms.hpp"
#include "ering/effects.hpp"
#include "ering/errors.hpp"
#include "oracles.hpp"

using namespace ering;
using oracle::fn;
using oracle::mat;

namespace {

CarrierPtr ints(std::size_t atoms) { return make_function_carrier(MeasurableSpace::discrete(atoms), ValueRing::integers); }
CarrierPtr rats(std::size_t atoms, std::optional<std::int64_t> grid) {
  return make_function_carrier(MeasurableSpace::discrete(atoms), ValueRing::rationals, grid);
}

const Rational half(1, 2);
const Element P1 = mat({{1, 0}, {0, 0}});
const Element Q1 = mat({{half, half}, {half, half}});

std::string first_failure(const VerificationReport& r) {
  return r.failures.empty() ? "" : r.failures[0].law_id + ": " + r.failures[0].actual;
}

}  // namespace

TEST(Effect, ValidatedAtConstruction) {
  const auto c = ints(2);
  EXPECT_NO_THROW(Effect(*c, fn({1, 0})));
  EXPECT_THROW(Effect(*c, fn({2, 0})), PreconditionError);
  EXPECT_THROW(Effect(*c, fn({-1, 0})), PreconditionError);
}

TEST(Oplus, Examples) {
  const auto c = ints(2);
  const Effect e(*c, fn({1, 0}));
  EXPECT_EQ(oplus(e, Effect(*c, c->zero()))->element(), e.element());
  EXPECT_FALSE(oplus(e, Effect(*c, fn({1, 1}))).has_value());

  const auto m = make_matrix_carrier(2);
  const auto sum = oplus(Effect(*m, m->scale(half, P1)), Effect(*m, m->scale(half, Q1)));
  ASSERT_TRUE(sum);
  EXPECT_EQ(sum->element(), mat({{Rational(3, 4), Rational(1, 4)}, {Rational(1, 4), Rational(1, 4)}}));
}

TEST(Oplus, CarrierMismatch) {
  const auto a = ints(2), b = ints(2);
  EXPECT_THROW(oplus(Effect(*a, a->zero()), Effect(*b, b->zero())), CarrierMismatch);
}

TEST(Orthosupplement, Examples) {
  const auto c = rats(2, std::nullopt);
  EXPECT_EQ(orthosupplement(Effect(*c, c->zero())).element(), c->one());
  EXPECT_EQ(orthosupplement(Effect(*c, fn({Rational(3, 4), Rational(1, 4)}))).element(),
            fn({Rational(1, 4), Rational(3, 4)}));
  const auto m = make_matrix_carrier(2);
  const Effect q(*m, m->complement(Q1));
  EXPECT_EQ(orthosupplement(q).element(), Q1);
}

TEST(Sharp, Examples) {
  const auto c = ints(2);
  auto r = is_sharp(Effect(*c, fn({1, 0})), {});
  EXPECT_TRUE(r.sharp);
  EXPECT_TRUE(r.consistent());

  const auto q = rats(2, std::nullopt);
  r = is_sharp(Effect(*q, fn({half, 0})), {});
  EXPECT_FALSE(r.sharp);
  ASSERT_TRUE(r.witness_ii);
  EXPECT_EQ(*r.witness_ii, fn({half, 0}));
  EXPECT_TRUE(r.consistent());

  const auto m = make_matrix_carrier(2);
  r = is_sharp(Effect(*m, Q1), {});
  EXPECT_TRUE(r.sharp);
  EXPECT_TRUE(r.consistent());
}

TEST(Sharp, AgreesOnEveryGridEffect) {
  const auto c = rats(3, 4);
  std::size_t sharp = 0;
  for (const auto& e : c->effects()) {
    const auto r = is_sharp(Effect(*c, e), {SampleMode::exhaustive, 0, 100, 6});
    EXPECT_TRUE(r.consistent()) << e.to_string();
    EXPECT_TRUE(r.exhaustive);
    sharp += r.sharp;
  }
  EXPECT_EQ(sharp, 8u);
}

TEST(Commutes, Examples) {
  const auto m = make_matrix_carrier(2);
  EXPECT_TRUE(commutes(*m, Q1, Q1));
  EXPECT_FALSE(commutes(*m, P1, Q1));
  const auto c = rats(2, std::nullopt);
  EXPECT_TRUE(commutes(*c, fn({3, half}), fn({-1, 7})));
}

TEST(Commutant, Examples) {
  const auto m = make_matrix_carrier(2);
  const std::vector<Element> u{m->zero(), m->one(), P1, Q1, m->complement(P1)};
  EXPECT_EQ(commutant(*m, m->one(), u), u);
  EXPECT_EQ(commutant(*m, P1, u), (std::vector<Element>{m->zero(), m->one(), P1, m->complement(P1)}));
  EXPECT_EQ(commutant(*m, std::vector<Element>{P1, Q1}, u), (std::vector<Element>{m->zero(), m->one()}));
  const auto c = ints(2);
  EXPECT_EQ(commutant(*c, fn({1, 0}), c->effects()), c->effects());
}

TEST(Coexistence, NoncommutingHalvesUseZeroWitness) {
  const auto m = make_matrix_carrier(2);
  const auto r = coexistence_witness(Effect(*m, m->scale(half, P1)), Effect(*m, m->scale(half, Q1)), {});
  ASSERT_EQ(r.verdict, CoexistenceVerdict::coexistent);
  EXPECT_EQ(r.witness->d, m->zero());
  EXPECT_TRUE(validate_witness(*m, m->scale(half, P1), m->scale(half, Q1), *r.witness));
  EXPECT_FALSE(commutes(*m, m->scale(half, P1), m->scale(half, Q1)));
}

TEST(Coexistence, PointwiseExample) {
  const auto c = rats(2, std::nullopt);
  const Element e = fn({Rational(3, 4), Rational(1, 4)});
  const Element f = fn({half, Rational(3, 4)});
  const auto r = coexistence_witness(Effect(*c, e), Effect(*c, f), {});
  ASSERT_EQ(r.verdict, CoexistenceVerdict::coexistent);
  EXPECT_EQ(r.witness->d, fn({Rational(1, 4), 0}));
  EXPECT_EQ(r.witness->e1, fn({half, Rational(1, 4)}));
  EXPECT_EQ(r.witness->f1, fn({Rational(1, 4), Rational(3, 4)}));
}

TEST(Coexistence, UnitWithItself) {
  for (const auto& c : {rats(2, std::nullopt), make_matrix_carrier(2)}) {
    const auto r = coexistence_witness(Effect(*c, c->one()), Effect(*c, c->one()), {});
    ASSERT_EQ(r.verdict, CoexistenceVerdict::coexistent);
    EXPECT_EQ(r.witness->d, c->one());
    EXPECT_EQ(r.witness->e1, c->zero());
    EXPECT_EQ(r.witness->f1, c->zero());
  }
}

TEST(Coexistence, NoncommutingProjectionsCertified) {
  const auto m = make_matrix_carrier(2);
  const auto r = coexistence_witness(Effect(*m, P1), Effect(*m, Q1), {});
  EXPECT_EQ(r.verdict, CoexistenceVerdict::not_coexistent);
}

TEST(Coexistence, SingleVariableFormMatchesDefinition) {
  // the set of d admitted by the three-variable definition equals the set of
  // d with d <= e, f and e + f - d in E
  for (const auto& c : {rats(2, 2), ints(3), rats(1, 4)}) {
    const auto effects = c->effects();
    for (const auto& e : effects)
      for (const auto& f : effects) {
        auto brute = oracle::three_variable_coexistence(*c, e, f, effects);
        std::vector<Element> single;
        for (const auto& d : effects)
          if (leq(*c, d, e) && leq(*c, d, f) && c->is_in_E(c->subtract(c->add(e, f), d))) single.push_back(d);
        EXPECT_EQ(brute, single);
        const auto r = coexistence_witness(Effect(*c, e), Effect(*c, f), {});
        EXPECT_EQ(r.verdict == CoexistenceVerdict::coexistent, !brute.empty());
        if (r.witness) EXPECT_NE(std::find(brute.begin(), brute.end(), r.witness->d), brute.end());
      }
  }
}

TEST(Coexistence, CommutingMatrixEffectsNeverUndecided) {
  const auto m = make_matrix_carrier(3);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const Element e = m->sample_effect(rng, 4);
    const Element f = m->multiply(e, e);
    const auto r = coexistence_witness(Effect(*m, e), Effect(*m, f), {});
    ASSERT_EQ(r.verdict, CoexistenceVerdict::coexistent);
    EXPECT_TRUE(validate_witness(*m, e, f, *r.witness));
  }
}

TEST(EffectSuite, PassesOnStandardCarriers) {
  const SampleStrategy ex{SampleMode::exhaustive, 3, 200, 6};
  for (const auto& c : {ints(3), rats(2, 4)}) {
    const auto r = verify_effect_suite(*c, ex);
    EXPECT_TRUE(r.passed()) << first_failure(r);
    EXPECT_TRUE(r.undecided.empty());
  }
  const SampleStrategy sm{SampleMode::seeded, 3, 200, 6};
  for (const auto& c : {make_matrix_carrier(2), make_matrix_carrier(3)}) {
    const auto r = verify_effect_suite(*c, sm);
    EXPECT_TRUE(r.passed()) << first_failure(r);
  }
}

TEST(EffectSuite, SharpnessOnSampledMatrixEffects) {
  const auto m = make_matrix_carrier(2);
  const auto r = verify_effect_suite(*m, {SampleMode::seeded, 11, 500, 6});
  for (const auto& t : r.laws)
    if (t.law_id == "th:sharp") {
      EXPECT_GE(t.cases, 500u);
      EXPECT_EQ(t.failures, 0u);
    }
}
