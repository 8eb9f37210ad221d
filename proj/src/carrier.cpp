#include "ering/carrier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ering/errors.hpp"

namespace ering {

std::string to_string(CarrierKind kind) {
  switch (kind) {
    case CarrierKind::function_ring: return "function_ring";
    case CarrierKind::matrix_model: return "matrix";
    case CarrierKind::product: return "product";
    case CarrierKind::mutant: return "mutant";
  }
  return "unknown";
}

std::string to_string(ValueRing ring) { return ring == ValueRing::integers ? "integers" : "rationals"; }

MeasurableSpace::MeasurableSpace(std::vector<std::string> points, std::vector<std::vector<std::string>> atoms)
    : points_(std::move(points)), atoms_(std::move(atoms)) {
  std::set<std::string> universe(points_.begin(), points_.end());
  if (universe.size() != points_.size()) throw std::invalid_argument("MeasurableSpace: duplicate point label");
  std::set<std::string> seen;
  for (const auto& atom : atoms_) {
    if (atom.empty()) throw std::invalid_argument("MeasurableSpace: empty atom");
    for (const auto& p : atom) {
      if (!universe.contains(p)) throw std::invalid_argument("MeasurableSpace: unknown point '" + p + "'");
      if (!seen.insert(p).second) throw std::invalid_argument("MeasurableSpace: atoms overlap at '" + p + "'");
    }
  }
  if (seen.size() != universe.size()) throw std::invalid_argument("MeasurableSpace: atoms do not cover all points");
}

MeasurableSpace MeasurableSpace::discrete(std::size_t n) {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> atoms;
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back("p" + std::to_string(i));
    atoms.push_back({points.back()});
  }
  return MeasurableSpace(std::move(points), std::move(atoms));
}

bool Carrier::is_in_E(const Element& a) const { return in_G(a) && is_in_Eplus(a) && is_in_Eplus(complement(a)); }

Element Carrier::power(const Element& a, unsigned n) const {
  Element r = one();
  for (unsigned i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

Element Carrier::sum(std::span<const Element> terms) const {
  Element r = zero();
  for (const auto& t : terms) r = add(r, t);
  return r;
}

Element Carrier::sample_cone(Rng& rng, std::size_t max_terms, std::size_t bound) const {
  const auto terms = rng.between(0, static_cast<std::int64_t>(max_terms));
  Element r = zero();
  for (std::int64_t i = 0; i < terms; ++i) r = add(r, sample_effect(rng, bound));
  return r;
}

std::size_t Carrier::point_count() const { throw CapabilityError(describe() + " has no pointwise view"); }

std::vector<Rational> Carrier::point_values(const Element&) const {
  throw CapabilityError(describe() + " has no pointwise view");
}

Element Carrier::from_point_values(std::span<const Rational>) const {
  throw CapabilityError(describe() + " has no pointwise view");
}

std::vector<Element> decompose_positive(const Carrier& c, const Element& a) { return c.decompose_positive(a); }

// ---------------------------------------------------------------------------
// function ring

namespace {

class FunctionCarrier final : public Carrier {
public:
  FunctionCarrier(MeasurableSpace space, ValueRing ring, std::optional<std::int64_t> grid)
      : space_(std::move(space)), ring_(ring), grid_(grid) {
    if (space_.atom_count() == 0) throw std::invalid_argument("function carrier: empty atom set");
    if (grid_ && *grid_ <= 0) throw std::invalid_argument("function carrier: grid denominator must be positive");
  }

  CarrierKind kind() const override { return CarrierKind::function_ring; }

  std::string describe() const override {
    std::string s = "function_ring[atoms=" + std::to_string(atoms()) + ", values=" + to_string(ring_);
    if (grid_) s += ", grid=" + std::to_string(*grid_);
    return s + "]";
  }

  Element zero() const override { return constant(0); }
  Element one() const override { return constant(1); }

  Element add(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Rational& x, const Rational& y) { return x + y; });
  }
  Element multiply(const Element& a, const Element& b) const override {
    return zip(a, b, [](const Rational& x, const Rational& y) { return x * y; });
  }
  Element negate(const Element& a) const override {
    auto v = shaped(a).values();
    for (auto& x : v) x = -x;
    return Element::function(std::move(v));
  }
  Element scale(const Rational& s, const Element& a) const override {
    auto v = shaped(a).values();
    for (auto& x : v) x *= s;
    return Element::function(std::move(v));
  }

  bool has_shape(const Element& a) const override { return a.is_function() && a.values().size() == atoms(); }

  bool in_G(const Element& a) const override {
    if (!has_shape(a)) return false;
    if (ring_ == ValueRing::rationals) return true;
    return std::all_of(a.values().begin(), a.values().end(), [](const Rational& x) { return x.is_integer(); });
  }

  bool is_in_Eplus(const Element& a) const override {
    return in_G(a) && std::all_of(a.values().begin(), a.values().end(), [](const Rational& x) { return x.sign() >= 0; });
  }

  bool enumerable_E() const override { return ring_ == ValueRing::integers || grid_.has_value(); }
  bool commutative() const override { return true; }
  bool pointwise() const override { return true; }
  bool integer_valued() const override { return ring_ == ValueRing::integers; }
  bool finite_projections() const override { return true; }

  std::vector<Element> effects() const override {
    if (!enumerable_E()) throw CapabilityError(describe() + ": effects are not enumerable without a grid");
    const std::int64_t d = ring_ == ValueRing::integers ? 1 : *grid_;
    return grid_points(d);
  }

  std::vector<Element> landmark_effects() const override {
    std::vector<Element> out{zero(), one()};
    for (std::size_t i = 0; i < atoms(); ++i) out.push_back(indicator_of(i));
    if (ring_ == ValueRing::rationals) {
      out.push_back(constant(Rational(1, 2)));
      out.push_back(scale(Rational(1, 2), indicator_of(0)));
    }
    return out;
  }

  std::vector<Element> projection_candidates(Rng&, std::size_t, std::size_t) const override { return grid_points(1); }

  Element sample_effect(Rng& rng, std::size_t bound) const override {
    std::vector<Rational> v(atoms());
    for (auto& x : v) {
      if (ring_ == ValueRing::integers) {
        x = rng.between(0, 1);
      } else {
        const std::int64_t d = grid_ ? *grid_ : rng.between(1, std::max<std::int64_t>(2, static_cast<std::int64_t>(bound)));
        x = Rational(rng.between(0, d), d);
      }
    }
    return Element::function(std::move(v));
  }

  Element sample_raw(Rng& rng, std::size_t bound) const override {
    const auto b = static_cast<std::int64_t>(std::max<std::size_t>(1, bound));
    std::vector<Rational> v(atoms());
    for (auto& x : v) {
      if (ring_ == ValueRing::integers) {
        x = rng.between(-b, b);
      } else {
        const std::int64_t d = grid_ ? *grid_ : rng.between(1, b);
        x = Rational(rng.between(-b * d, b * d), d);
      }
    }
    return Element::function(std::move(v));
  }

  std::vector<Element> decompose_positive(const Element& a) const override {
    if (!is_in_Eplus(a)) throw PreconditionError("decompose_positive: " + a.to_string() + " is not in E+");
    return *cone_witness(a);
  }

  std::optional<std::vector<Element>> cone_witness(const Element& a) const override {
    if (!has_shape(a)) return std::nullopt;
    Rational top = 0;
    for (const auto& x : a.values()) {
      if (x.sign() < 0) return std::nullopt;
      if (ring_ == ValueRing::integers && !x.is_integer()) return std::nullopt;
      top = std::max(top, x);
    }
    std::vector<Element> terms;
    if (top.is_zero()) return terms;
    if (ring_ == ValueRing::integers) {
      // a = sum over k = 1..max of the indicator of {a >= k}
      for (std::int64_t k = 1; k <= top.ceil_int64(); ++k) {
        std::vector<Rational> level(atoms());
        for (std::size_t i = 0; i < atoms(); ++i) level[i] = a.values()[i] >= Rational(k) ? 1 : 0;
        terms.push_back(Element::function(std::move(level)));
      }
      return terms;
    }
    const std::int64_t copies = top.ceil_int64();
    const Element piece = scale(Rational(1, copies), a);
    terms.assign(static_cast<std::size_t>(copies), piece);
    return terms;
  }

  std::int64_t order_unit_upper_bound(const Element& g) const override {
    Rational top = 0;
    for (const auto& x : shaped(g).values()) top = std::max(top, x);
    return top.ceil_int64();
  }

  std::vector<Element> spanning_set() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < atoms(); ++i) out.push_back(indicator_of(i));
    return out;
  }
  std::vector<Rational> coordinates(const Element& g) const override { return shaped(g).values(); }

  std::size_t point_count() const override { return atoms(); }
  std::vector<Rational> point_values(const Element& g) const override { return shaped(g).values(); }
  Element from_point_values(std::span<const Rational> values) const override {
    if (values.size() != atoms()) throw std::invalid_argument("from_point_values: wrong length");
    return Element::function({values.begin(), values.end()});
  }

private:
  std::size_t atoms() const { return space_.atom_count(); }

  const Element& shaped(const Element& a) const {
    if (!has_shape(a)) throw std::invalid_argument(describe() + ": element " + a.to_string() + " has the wrong shape");
    return a;
  }

  Element constant(const Rational& c) const { return Element::function(std::vector<Rational>(atoms(), c)); }

  Element indicator_of(std::size_t i) const {
    std::vector<Rational> v(atoms(), Rational(0));
    v[i] = 1;
    return Element::function(std::move(v));
  }

  template <class Op>
  Element zip(const Element& a, const Element& b, Op op) const {
    const auto& x = shaped(a).values();
    const auto& y = shaped(b).values();
    std::vector<Rational> r(atoms());
    for (std::size_t i = 0; i < atoms(); ++i) r[i] = op(x[i], y[i]);
    return Element::function(std::move(r));
  }

  // Every function with values k/d, 0 <= k <= d, in lexicographic order.
  std::vector<Element> grid_points(std::int64_t d) const {
    const std::size_t k = atoms();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= static_cast<std::size_t>(d + 1);
      if (total > (std::size_t{1} << 22)) throw CapabilityError(describe() + ": enumeration too large");
    }
    std::vector<Element> out;
    out.reserve(total);
    std::vector<std::int64_t> digits(k, 0);
    for (std::size_t n = 0; n < total; ++n) {
      std::vector<Rational> v(k);
      for (std::size_t i = 0; i < k; ++i) v[i] = Rational(digits[i], d);
      out.push_back(Element::function(std::move(v)));
      for (std::size_t i = k; i-- > 0;) {
        if (++digits[i] <= d) break;
        digits[i] = 0;
      }
    }
    return out;
  }

  MeasurableSpace space_;
  ValueRing ring_;
  std::optional<std::int64_t> grid_;
};

}  // namespace

CarrierPtr make_function_carrier(MeasurableSpace space, ValueRing ring, std::optional<std::int64_t> grid_denominator) {
  return std::make_shared<const FunctionCarrier>(std::move(space), ring, grid_denominator);
}

}  // namespace ering
