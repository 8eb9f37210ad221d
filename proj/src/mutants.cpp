#include "ering/mutants.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ering {

namespace {

constexpr std::array<std::pair<Mutation, std::string_view>, 7> kNames{{
    {Mutation::none, "none"},
    {Mutation::effects_not_closed, "effects_not_closed"},
    {Mutation::symmetric_cone, "symmetric_cone"},
    {Mutation::lax_psd_oracle, "lax_psd_oracle"},
    {Mutation::fake_projection, "fake_projection"},
    {Mutation::left_compression, "left_compression"},
    {Mutation::broken_join_hom, "broken_join_hom"},
}};

bool diagonal_only_positive(const Element& x) {
  if (x.is_pair()) return diagonal_only_positive(x.first()) && diagonal_only_positive(x.second());
  if (x.is_matrix()) {
    const Matrix& m = x.matrix();
    if (!m.is_symmetric()) return false;
    for (std::size_t i = 0; i < m.dim(); ++i)
      if (m(i, i).sign() < 0) return false;
    return true;
  }
  return std::all_of(x.values().begin(), x.values().end(), [](const Rational& v) { return v.sign() >= 0; });
}

class MutantCarrier final : public Carrier {
public:
  MutantCarrier(CarrierPtr base, Mutation m) : base_(std::move(base)), mutation_(m) {
    if (m == Mutation::effects_not_closed) {
      for (const auto& e : base_->landmark_effects()) {
        if (e != base_->zero() && e != base_->one() && base_->complement(e) != e) {
          e0_ = e;
          break;
        }
      }
      if (!e0_) throw std::invalid_argument("effects_not_closed: carrier has no effect besides 0 and 1");
    }
  }

  CarrierKind kind() const override { return CarrierKind::mutant; }
  std::string describe() const override { return "mutant[" + to_string(mutation_) + "](" + base_->describe() + ")"; }

  Element zero() const override { return base_->zero(); }
  Element one() const override { return base_->one(); }
  Element add(const Element& a, const Element& b) const override { return base_->add(a, b); }
  Element negate(const Element& a) const override { return base_->negate(a); }
  Element multiply(const Element& a, const Element& b) const override { return base_->multiply(a, b); }
  Element scale(const Rational& s, const Element& a) const override { return base_->scale(s, a); }
  bool has_shape(const Element& a) const override { return base_->has_shape(a); }
  bool in_G(const Element& a) const override { return base_->in_G(a); }

  bool is_in_Eplus(const Element& a) const override {
    switch (mutation_) {
      case Mutation::symmetric_cone: return base_->is_in_Eplus(a) || base_->is_in_Eplus(base_->negate(a));
      case Mutation::lax_psd_oracle: return base_->in_G(a) && diagonal_only_positive(a);
      default: return base_->is_in_Eplus(a);
    }
  }

  bool is_in_E(const Element& a) const override {
    switch (mutation_) {
      case Mutation::effects_not_closed: return a == zero() || a == one() || a == *e0_;
      case Mutation::symmetric_cone:
      case Mutation::lax_psd_oracle: return Carrier::is_in_E(a);
      default: return base_->is_in_E(a);
    }
  }

  bool enumerable_E() const override { return mutation_ == Mutation::effects_not_closed || base_->enumerable_E(); }
  bool archimedean() const override { return base_->archimedean(); }
  bool commutative() const override { return base_->commutative(); }
  bool pointwise() const override { return base_->pointwise(); }
  bool integer_valued() const override { return base_->integer_valued(); }
  bool finite_projections() const override { return base_->finite_projections(); }

  std::vector<Element> effects() const override {
    if (mutation_ == Mutation::effects_not_closed) return {zero(), one(), *e0_};
    return base_->effects();
  }
  std::vector<Element> landmark_effects() const override {
    if (mutation_ == Mutation::effects_not_closed) return {zero(), one(), *e0_};
    return base_->landmark_effects();
  }
  std::vector<Element> projection_candidates(Rng& rng, std::size_t count, std::size_t bound) const override {
    auto out = base_->projection_candidates(rng, count, bound);
    if (mutation_ == Mutation::fake_projection) out.push_back(base_->scale(Rational(1, 2), base_->one()));
    return out;
  }
  Element sample_effect(Rng& rng, std::size_t bound) const override {
    if (mutation_ == Mutation::effects_not_closed) return effects()[rng.below(3)];
    return base_->sample_effect(rng, bound);
  }
  Element sample_raw(Rng& rng, std::size_t bound) const override { return base_->sample_raw(rng, bound); }

  std::vector<Element> decompose_positive(const Element& a) const override { return base_->decompose_positive(a); }
  std::optional<std::vector<Element>> cone_witness(const Element& a) const override { return base_->cone_witness(a); }
  std::int64_t order_unit_upper_bound(const Element& g) const override { return base_->order_unit_upper_bound(g); }
  std::vector<Element> spanning_set() const override { return base_->spanning_set(); }
  std::vector<Rational> coordinates(const Element& g) const override { return base_->coordinates(g); }
  std::size_t point_count() const override { return base_->point_count(); }
  std::vector<Rational> point_values(const Element& g) const override { return base_->point_values(g); }
  Element from_point_values(std::span<const Rational> values) const override {
    return base_->from_point_values(values);
  }

private:
  CarrierPtr base_;
  Mutation mutation_;
  std::optional<Element> e0_;
};

}  // namespace

std::string to_string(Mutation m) {
  for (const auto& [k, name] : kNames)
    if (k == m) return std::string(name);
  return "unknown";
}

std::optional<Mutation> parse_mutation(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_carrier_mutation(Mutation m) {
  return m == Mutation::effects_not_closed || m == Mutation::symmetric_cone || m == Mutation::lax_psd_oracle ||
         m == Mutation::fake_projection;
}

CarrierPtr mutate(CarrierPtr base, Mutation m) {
  if (!is_carrier_mutation(m)) return base;
  return std::make_shared<const MutantCarrier>(std::move(base), m);
}

}  // namespace ering
