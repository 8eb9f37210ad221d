#include <algorithm>
#include <stdexcept>

#include "ering/carrier.hpp"
#include "ering/errors.hpp"

namespace ering {

namespace {

class ProductCarrier final : public Carrier {
public:
  ProductCarrier(CarrierPtr left, CarrierPtr right) : left_(std::move(left)), right_(std::move(right)) {
    if (!left_ || !right_) throw std::invalid_argument("product carrier: null factor");
  }

  CarrierKind kind() const override { return CarrierKind::product; }
  std::string describe() const override { return "product(" + left_->describe() + ", " + right_->describe() + ")"; }

  Element zero() const override { return {left_->zero(), right_->zero()}; }
  Element one() const override { return {left_->one(), right_->one()}; }
  Element add(const Element& a, const Element& b) const override {
    check(a, b);
    return {left_->add(a.first(), b.first()), right_->add(a.second(), b.second())};
  }
  Element negate(const Element& a) const override {
    check(a);
    return {left_->negate(a.first()), right_->negate(a.second())};
  }
  Element multiply(const Element& a, const Element& b) const override {
    check(a, b);
    return {left_->multiply(a.first(), b.first()), right_->multiply(a.second(), b.second())};
  }
  Element scale(const Rational& s, const Element& a) const override {
    check(a);
    return {left_->scale(s, a.first()), right_->scale(s, a.second())};
  }

  bool has_shape(const Element& a) const override {
    return a.is_pair() && left_->has_shape(a.first()) && right_->has_shape(a.second());
  }
  bool in_G(const Element& a) const override {
    return has_shape(a) && left_->in_G(a.first()) && right_->in_G(a.second());
  }
  bool is_in_Eplus(const Element& a) const override {
    return has_shape(a) && left_->is_in_Eplus(a.first()) && right_->is_in_Eplus(a.second());
  }
  bool is_in_E(const Element& a) const override {
    return has_shape(a) && left_->is_in_E(a.first()) && right_->is_in_E(a.second());
  }

  bool enumerable_E() const override { return left_->enumerable_E() && right_->enumerable_E(); }
  bool archimedean() const override { return left_->archimedean() && right_->archimedean(); }
  bool commutative() const override { return left_->commutative() && right_->commutative(); }
  bool pointwise() const override { return left_->pointwise() && right_->pointwise(); }
  bool integer_valued() const override { return left_->integer_valued() && right_->integer_valued(); }
  bool finite_projections() const override { return left_->finite_projections() && right_->finite_projections(); }

  std::vector<Element> effects() const override {
    if (!enumerable_E()) throw CapabilityError(describe() + ": effects are not enumerable");
    return pairs(left_->effects(), right_->effects());
  }

  std::vector<Element> landmark_effects() const override {
    return pairs(left_->landmark_effects(), right_->landmark_effects());
  }

  std::vector<Element> projection_candidates(Rng& rng, std::size_t count, std::size_t bound) const override {
    auto ls = left_->projection_candidates(rng, count, bound);
    auto rs = right_->projection_candidates(rng, count, bound);
    auto all = pairs(ls, rs);
    if (!finite_projections() && all.size() > std::max(count, ls.size() + rs.size())) {
      // keep the landmark corner of the grid, then a seeded selection
      std::vector<Element> out;
      for (std::size_t i = 0; i < all.size() && out.size() < count; ++i) {
        const std::size_t li = i / rs.size(), ri = i % rs.size();
        if (li < 2 || ri < 2 || rng.below(all.size()) < count) out.push_back(all[i]);
      }
      return out;
    }
    return all;
  }

  Element sample_effect(Rng& rng, std::size_t bound) const override {
    Element a = left_->sample_effect(rng, bound);
    Element b = right_->sample_effect(rng, bound);
    return {std::move(a), std::move(b)};
  }

  Element sample_raw(Rng& rng, std::size_t bound) const override {
    Element a = left_->sample_raw(rng, bound);
    Element b = right_->sample_raw(rng, bound);
    return {std::move(a), std::move(b)};
  }

  std::vector<Element> decompose_positive(const Element& a) const override {
    if (!is_in_Eplus(a)) throw PreconditionError("decompose_positive: " + a.to_string() + " is not in E+");
    return zip_padded(left_->decompose_positive(a.first()), right_->decompose_positive(a.second()));
  }

  std::optional<std::vector<Element>> cone_witness(const Element& a) const override {
    if (!has_shape(a)) return std::nullopt;
    auto l = left_->cone_witness(a.first());
    auto r = right_->cone_witness(a.second());
    if (!l || !r) return std::nullopt;
    return zip_padded(*l, *r);
  }

  std::int64_t order_unit_upper_bound(const Element& g) const override {
    check(g);
    return std::max(left_->order_unit_upper_bound(g.first()), right_->order_unit_upper_bound(g.second()));
  }

  std::vector<Element> spanning_set() const override {
    std::vector<Element> out;
    for (auto& b : left_->spanning_set()) out.emplace_back(b, right_->zero());
    for (auto& b : right_->spanning_set()) out.emplace_back(left_->zero(), b);
    return out;
  }

  std::vector<Rational> coordinates(const Element& g) const override {
    check(g);
    auto out = left_->coordinates(g.first());
    auto r = right_->coordinates(g.second());
    out.insert(out.end(), r.begin(), r.end());
    return out;
  }

  std::size_t point_count() const override { return left_->point_count() + right_->point_count(); }
  std::vector<Rational> point_values(const Element& g) const override {
    check(g);
    auto out = left_->point_values(g.first());
    auto r = right_->point_values(g.second());
    out.insert(out.end(), r.begin(), r.end());
    return out;
  }
  Element from_point_values(std::span<const Rational> values) const override {
    const std::size_t split = left_->point_count();
    if (values.size() != split + right_->point_count()) throw std::invalid_argument("from_point_values: wrong length");
    return {left_->from_point_values(values.first(split)), right_->from_point_values(values.subspan(split))};
  }

private:
  void check(const Element& a) const {
    if (!a.is_pair()) throw std::invalid_argument(describe() + ": element " + a.to_string() + " is not a pair");
  }
  void check(const Element& a, const Element& b) const {
    check(a);
    check(b);
  }

  static std::vector<Element> pairs(const std::vector<Element>& ls, const std::vector<Element>& rs) {
    std::vector<Element> out;
    out.reserve(ls.size() * rs.size());
    for (const auto& l : ls)
      for (const auto& r : rs) out.emplace_back(l, r);
    return out;
  }

  std::vector<Element> zip_padded(const std::vector<Element>& ls, const std::vector<Element>& rs) const {
    std::vector<Element> out;
    const std::size_t n = std::max(ls.size(), rs.size());
    for (std::size_t i = 0; i < n; ++i)
      out.emplace_back(i < ls.size() ? ls[i] : left_->zero(), i < rs.size() ? rs[i] : right_->zero());
    return out;
  }

  CarrierPtr left_;
  CarrierPtr right_;
};

}  // namespace

CarrierPtr product_carrier(CarrierPtr left, CarrierPtr right) {
  return std::make_shared<const ProductCarrier>(std::move(left), std::move(right));
}

}  // namespace ering
