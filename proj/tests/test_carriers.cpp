#include <gtest/gtest.h>

#include <set>

#include "ering/carrier.hpp"
#include "ering/errors.hpp"
#include "ering/mutants.hpp"
#include "oracles.hpp"

using namespace ering;
using oracle::fn;
using oracle::mat;

namespace {

CarrierPtr ints(std::size_t atoms) { return make_function_carrier(MeasurableSpace::discrete(atoms), ValueRing::integers); }
CarrierPtr rats(std::size_t atoms, std::int64_t grid) {
  return make_function_carrier(MeasurableSpace::discrete(atoms), ValueRing::rationals, grid);
}

const Element P1 = mat({{1, 0}, {0, 0}});
const Element Q1 = mat({{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}});

}  // namespace

TEST(MeasurableSpace, Validation) {
  EXPECT_NO_THROW(MeasurableSpace({"x", "y", "z"}, {{"x", "z"}, {"y"}}));
  EXPECT_THROW(MeasurableSpace({"x", "y"}, {{"x"}}), std::invalid_argument);
  EXPECT_THROW(MeasurableSpace({"x", "y"}, {{"x", "y"}, {"y"}}), std::invalid_argument);
  EXPECT_THROW(MeasurableSpace({"x"}, {{"x"}, {}}), std::invalid_argument);
  EXPECT_THROW(MeasurableSpace({"x", "x"}, {{"x"}}), std::invalid_argument);
  EXPECT_THROW(MeasurableSpace({"x"}, {{"w"}}), std::invalid_argument);
}

TEST(FunctionCarrier, EffectCounts) {
  EXPECT_EQ(ints(2)->effects().size(), 4u);
  EXPECT_EQ(ints(3)->effects().size(), 8u);
  EXPECT_EQ(rats(3, 4)->effects().size(), 125u);
  const auto trivial = rats(1, 1)->effects();
  EXPECT_EQ(trivial, (std::vector<Element>{fn({0}), fn({1})}));
}

TEST(FunctionCarrier, RejectsEmptyOrBadGrid) {
  EXPECT_THROW(make_function_carrier(MeasurableSpace({}, {}), ValueRing::integers), std::invalid_argument);
  EXPECT_THROW(make_function_carrier(MeasurableSpace::discrete(2), ValueRing::rationals, 0), std::invalid_argument);
}

TEST(FunctionCarrier, AtomsCarryValues) {
  // three points, two atoms: elements have one value per atom
  const auto c = make_function_carrier(MeasurableSpace({"x", "y", "z"}, {{"x", "z"}, {"y"}}), ValueRing::integers);
  EXPECT_EQ(c->effects().size(), 4u);
  EXPECT_TRUE(c->has_shape(fn({1, 0})));
  EXPECT_FALSE(c->has_shape(fn({1, 0, 1})));
}

TEST(FunctionCarrier, EffectIffValuesInUnitInterval) {
  const auto c = rats(3, 4);
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const Element g = c->sample_raw(rng, 2);
    bool in_unit = true;
    for (const auto& v : g.values()) in_unit = in_unit && v >= Rational(0) && v <= Rational(1);
    EXPECT_EQ(c->is_in_E(g), in_unit) << g.to_string();
  }
  // integer carrier: values must also be integers to lie in G
  EXPECT_FALSE(ints(2)->is_in_E(fn({Rational(1, 2), 0})));
  EXPECT_TRUE(ints(2)->is_in_E(fn({1, 0})));
}

TEST(MatrixCarrier, Examples) {
  const auto m = make_matrix_carrier(2);
  EXPECT_TRUE(m->is_in_E(P1));
  EXPECT_TRUE(m->is_in_E(Q1));
  const Element pq = m->multiply(P1, Q1);
  EXPECT_EQ(pq, mat({{Rational(1, 2), Rational(1, 2)}, {0, 0}}));
  EXPECT_FALSE(m->in_G(pq));
  EXPECT_FALSE(m->enumerable_E());
  EXPECT_THROW(m->effects(), CapabilityError);
  EXPECT_THROW(make_matrix_carrier(0), std::invalid_argument);
}

TEST(MatrixCarrier, OneByOneBehavesLikeScalars) {
  const auto m = make_matrix_carrier(1);
  const auto f = make_function_carrier(MeasurableSpace::discrete(1), ValueRing::rationals);
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    const Element g = m->sample_raw(rng, 3);
    const Element h = f->from_point_values(m->point_values(g));
    EXPECT_EQ(m->is_in_E(g), f->is_in_E(h));
    EXPECT_EQ(m->is_in_Eplus(g), f->is_in_Eplus(h));
  }
}

TEST(ProductCarrier, EffectCounts) {
  EXPECT_EQ(product_carrier(ints(2), ints(1))->effects().size(), 8u);
  const auto c = rats(2, 2);
  const auto prod = product_carrier(c, rats(1, 1));
  std::vector<Element> expected;
  for (const auto& e : c->effects())
    for (const auto& b : {fn({0}), fn({1})}) expected.emplace_back(e, b);
  EXPECT_EQ(prod->effects(), expected);
  EXPECT_FALSE(product_carrier(ints(1), make_matrix_carrier(2))->enumerable_E());
}

TEST(ProductCarrier, MatrixFactorsBehaveLikeTwoAtoms) {
  const auto prod = product_carrier(make_matrix_carrier(1), make_matrix_carrier(1));
  const auto f = make_function_carrier(MeasurableSpace::discrete(2), ValueRing::rationals);
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const Element g = prod->sample_raw(rng, 3);
    const Element h = prod->sample_raw(rng, 3);
    const Element fg = f->from_point_values(prod->point_values(g));
    const Element fh = f->from_point_values(prod->point_values(h));
    EXPECT_EQ(prod->is_in_E(g), f->is_in_E(fg));
    EXPECT_EQ(prod->point_values(prod->multiply(g, h)), f->point_values(f->multiply(fg, fh)));
  }
}

TEST(Decompose, Examples) {
  const auto m = make_matrix_carrier(2);
  const auto parts = decompose_positive(*m, mat({{2, 1}, {1, 1}}));
  const Element third = mat({{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(1, 3)}});
  EXPECT_EQ(parts, (std::vector<Element>{third, third, third}));

  const auto levels = decompose_positive(*ints(2), fn({3, 1}));
  EXPECT_EQ(levels, (std::vector<Element>{fn({1, 1}), fn({1, 0}), fn({1, 0})}));

  EXPECT_TRUE(decompose_positive(*m, m->zero()).empty());
  EXPECT_TRUE(decompose_positive(*ints(2), fn({0, 0})).empty());
  EXPECT_THROW(decompose_positive(*m, mat({{1, 2}, {2, 1}})), PreconditionError);
  EXPECT_THROW(decompose_positive(*ints(2), fn({1, -1})), PreconditionError);
}

TEST(Decompose, RoundTripOnSampledCones) {
  const std::vector<CarrierPtr> carriers{ints(3), rats(2, 4), make_matrix_carrier(2), make_matrix_carrier(3),
                                         product_carrier(ints(1), make_matrix_carrier(2))};
  for (const auto& c : carriers) {
    Rng rng(9);
    for (int i = 0; i < 150; ++i) {
      const Element a = c->sample_cone(rng, 6, 6);
      ASSERT_TRUE(c->is_in_Eplus(a)) << c->describe() << " " << a.to_string();
      const auto parts = c->decompose_positive(a);
      for (const auto& p : parts) EXPECT_TRUE(c->is_in_E(p));
      EXPECT_EQ(c->sum(parts), a);
      const auto w = c->cone_witness(a);
      ASSERT_TRUE(w.has_value());
      for (const auto& p : *w) EXPECT_TRUE(c->is_in_E(p));
      EXPECT_EQ(c->sum(*w), a);
    }
  }
}

TEST(Sampling, EffectsAreEffects) {
  const std::vector<CarrierPtr> carriers{ints(2), rats(3, 4), rats(2, 0 + 3), make_matrix_carrier(2),
                                         make_matrix_carrier(3)};
  for (const auto& c : carriers) {
    Rng rng(21);
    for (int i = 0; i < 300; ++i) EXPECT_TRUE(c->is_in_E(c->sample_effect(rng, 6))) << c->describe();
    for (const auto& e : c->landmark_effects()) EXPECT_TRUE(c->is_in_E(e));
    for (const auto& p : c->projection_candidates(rng, 20, 6)) {
      EXPECT_TRUE(c->in_G(p));
      EXPECT_EQ(c->multiply(p, p), p);
    }
  }
}

TEST(Sampling, DeterministicPerSeed) {
  const auto c = make_matrix_carrier(3);
  Rng a(77), b(77);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(c->sample_cone(a, 6, 6), c->sample_cone(b, 6, 6));
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.between(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
  }
}

TEST(ConeWitness, AbsentOutsideCone) {
  const auto m = make_matrix_carrier(2);
  EXPECT_FALSE(m->cone_witness(mat({{1, 2}, {2, 1}})));
  EXPECT_FALSE(ints(2)->cone_witness(fn({1, -1})));
}

TEST(OrderUnitBound, IsAnUpperBound) {
  const std::vector<CarrierPtr> carriers{ints(3), rats(2, 4), make_matrix_carrier(3)};
  for (const auto& c : carriers) {
    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
      const Element g = c->sample_raw(rng, 5);
      const auto n = c->order_unit_upper_bound(g);
      EXPECT_TRUE(c->is_in_Eplus(c->subtract(c->scale(Rational(n), c->one()), g))) << g.to_string();
    }
  }
}

TEST(Coordinates, ReconstructFromSpanningSet) {
  const std::vector<CarrierPtr> carriers{ints(3), make_matrix_carrier(3), product_carrier(ints(1), make_matrix_carrier(2))};
  for (const auto& c : carriers) {
    Rng rng(12);
    const auto basis = c->spanning_set();
    for (int i = 0; i < 50; ++i) {
      const Element g = c->sample_raw(rng, 4);
      const auto coords = c->coordinates(g);
      ASSERT_EQ(coords.size(), basis.size());
      Element sum = c->zero();
      for (std::size_t k = 0; k < basis.size(); ++k) sum = c->add(sum, c->scale(coords[k], basis[k]));
      EXPECT_EQ(sum, g);
    }
  }
}

TEST(Mutants, Oracles) {
  const auto broken = mutate(ints(2), Mutation::effects_not_closed);
  EXPECT_EQ(broken->effects().size(), 3u);
  EXPECT_TRUE(broken->is_in_E(fn({1, 0})));
  EXPECT_FALSE(broken->is_in_E(fn({0, 1})));

  const auto sym = mutate(ints(2), Mutation::symmetric_cone);
  EXPECT_TRUE(sym->is_in_Eplus(fn({-1, 0})));

  const auto lax = mutate(make_matrix_carrier(2), Mutation::lax_psd_oracle);
  EXPECT_TRUE(lax->is_in_Eplus(mat({{1, 2}, {2, 1}})));

  const auto fake = mutate(ints(2), Mutation::fake_projection);
  Rng rng(0);
  const auto ps = fake->projection_candidates(rng, 10, 6);
  EXPECT_EQ(ps.back(), fn({Rational(1, 2), Rational(1, 2)}));

  EXPECT_EQ(mutate(ints(2), Mutation::left_compression)->kind(), CarrierKind::function_ring);
  EXPECT_EQ(parse_mutation("lax_psd_oracle"), Mutation::lax_psd_oracle);
  EXPECT_FALSE(parse_mutation("nope"));
}
