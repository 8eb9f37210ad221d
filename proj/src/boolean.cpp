#include "ering/boolean.hpp"

#include <algorithm>
#include <optional>

#include "ering/axioms.hpp"
#include "ering/errors.hpp"
#include "suite_util.hpp"

namespace ering {

using detail::expect;
using detail::idempotent;
using detail::show;
using In = std::span<const Element>;

namespace {

constexpr std::uint64_t kBringStream = 0x4252494e47;  // "BRING"

void require_pointwise(const Carrier& c, const char* what) {
  if (!c.pointwise()) throw CapabilityError(std::string(what) + " needs a pointwise carrier, not " + c.describe());
}

bool commute(const Carrier& c, const Element& a, const Element& b) { return c.multiply(a, b) == c.multiply(b, a); }

// k with x = k * a, if there is one.
std::optional<Rational> multiple_of(const Carrier& c, const Element& x, const Element& a) {
  const auto ca = c.coordinates(a);
  const auto cx = c.coordinates(x);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    const Rational k = cx[i] / ca[i];
    if (c.scale(k, a) == x) return k;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<Element> all_projections(const Carrier& c) {
  if (!c.finite_projections()) throw CapabilityError("the projections of " + c.describe() + " are not finite");
  Rng rng(0);
  std::vector<Element> out;
  for (auto& p : c.projection_candidates(rng, 0, 1))
    if (idempotent(c, p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  return out;
}

// Minimal nonzero members of `universe`.
std::vector<Element> minimal_nonzero(const Carrier& c, const std::vector<Element>& universe) {
  std::vector<Element> out;
  const Element zero = c.zero();
  for (const auto& a : universe) {
    if (a == zero) continue;
    const bool minimal = std::none_of(universe.begin(), universe.end(), [&](const Element& d) {
      return d != zero && d != a && leq(c, d, a);
    });
    if (minimal) out.push_back(a);
  }
  return out;
}

Element atom_sum(const Carrier& c, const std::vector<Element>& atoms, const std::vector<Rational>& k) {
  Element out = c.zero();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (!k[i].is_zero()) out = c.add(out, c.scale(k[i], atoms[i]));
  return out;
}

// Coefficients k_a with ga = k_a a; throws PreconditionError when g is not an
// integer combination of the atoms.
std::vector<Rational> atom_coefficients(const Carrier& c, const std::vector<Element>& atoms, const Element& g) {
  std::vector<Rational> k;
  for (const auto& a : atoms) {
    const auto m = multiple_of(c, c.multiply(g, a), a);
    if (!m) throw PreconditionError("g a is not a multiple of the atom a = " + show(a) + " for g = " + show(g));
    if (!m->is_integer())
      throw PreconditionError("coefficient " + m->to_string() + " of atom " + show(a) + " is not an integer");
    k.push_back(*m);
  }
  if (atom_sum(c, atoms, k) != g) throw PreconditionError("the atoms do not reproduce g = " + show(g));
  return k;
}

std::int64_t to_int64(const Rational& r) { return r.ceil_int64(); }

// First violation of the Boolean-algebra laws on a finite poset under <=,
// with x -> 1 - x as complementation.
std::optional<std::string> boolean_violation(const Carrier& c, const std::vector<Element>& u) {
  const std::size_t n = u.size();
  auto index = [&](const Element& x) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] == x) return i;
    return std::nullopt;
  };
  const auto bottom = index(c.zero()), top = index(c.one());
  if (!bottom || !top) return std::string("0 or 1 missing from the universe");
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = leq(c, u[i], u[j]);

  // greatest lower / least upper bound by search
  auto bound = [&](std::size_t a, std::size_t b, bool lower) -> std::optional<std::size_t> {
    auto below = [&](std::size_t x, std::size_t y) { return lower ? le[x][y] : le[y][x]; };
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < n; ++k) {
      if (!below(k, a) || !below(k, b)) continue;
      if (!best || below(*best, k)) best = k;
    }
    if (!best) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k)
      if (below(k, a) && below(k, b) && !below(k, *best)) return std::nullopt;
    return best;
  };
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n)), join(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto m = bound(i, j, true), s = bound(i, j, false);
      if (!m) return "no meet of " + show(u[i]) + " and " + show(u[j]);
      if (!s) return "no join of " + show(u[i]) + " and " + show(u[j]);
      meet[i][j] = *m;
      join[i][j] = *s;
    }
  for (std::size_t i = 0; i < n; ++i) {
    const auto ni = index(c.complement(u[i]));
    if (!ni) return "1 - x missing for x = " + show(u[i]);
    if (meet[i][*ni] != *bottom || join[i][*ni] != *top)
      return "1 - x is not a Boolean complement of x = " + show(u[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (meet[i][join[j][k]] != join[meet[i][j]][meet[i][k]])
          return "distributivity fails at " + show(u[i]) + ", " + show(u[j]) + ", " + show(u[k]);
  return std::nullopt;
}

bool is_order_unit(const Carrier& c, const Element& u) {
  if (!c.is_in_Eplus(u)) return false;
  Element m = u;
  for (int k = 0; k <= 62; ++k, m = c.add(m, m))
    if (leq(c, c.one(), m)) return true;
  return false;
}

Truth all_of(std::initializer_list<Truth> ts) {
  bool unknown = false;
  for (Truth t : ts) {
    if (t == Truth::no) return Truth::no;
    unknown = unknown || t == Truth::unknown;
  }
  return unknown ? Truth::unknown : Truth::yes;
}

struct Verdict {
  Truth value;
  std::string basis;
};

Verdict combine(const Verdict& a, const Verdict& b) {
  return {all_of({a.value, b.value}), a.basis + "; " + b.basis};
}

// The finite pools every condition draws from.
struct Pools {
  std::vector<Element> E, P, G;
  bool E_all = false, P_all = false;
};

Pools make_pools(const Carrier& c, const SampleStrategy& s) {
  Pools pools;
  Rng rng = Rng::derived(s.seed, kBringStream);
  pools.E_all = c.enumerable_E();
  pools.E = pools.E_all ? c.effects() : c.landmark_effects();
  if (!pools.E_all)
    for (std::size_t i = 0; i < s.case_budget; ++i) pools.E.push_back(c.sample_effect(rng, s.magnitude_bound));
  pools.P_all = c.finite_projections();
  for (auto& p : c.projection_candidates(rng, 24, s.magnitude_bound))
    if (idempotent(c, p)) pools.P.push_back(std::move(p));
  pools.G = c.spanning_set();
  pools.G.insert(pools.G.end(), pools.E.begin(), pools.E.end());
  for (std::size_t i = 0; i < s.case_budget; ++i) pools.G.push_back(detail::group_sample(c, s, rng));
  return pools;
}

Verdict e_equals_p(const Carrier& c, const Pools& pools) {
  for (const auto& e : pools.E)
    if (!idempotent(c, e)) return {Truth::no, "effect " + show(e) + " is not idempotent"};
  if (pools.E_all) return {Truth::yes, "all " + std::to_string(pools.E.size()) + " effects are idempotent"};
  return {Truth::unknown, "no non-idempotent effect among " + std::to_string(pools.E.size()) + " samples"};
}

Verdict e_boolean(const Carrier& c, const Pools& pools) {
  const Element zero = c.zero();
  for (const auto& e : pools.E) {
    const Element ne = c.complement(e);
    // e - e^2 is the natural common lower bound of e and 1 - e
    const Element d = c.subtract(e, c.multiply(e, e));
    if (d != zero && c.is_in_E(d) && leq(c, d, e) && leq(c, d, ne))
      return {Truth::no, "d = " + show(d) + " is a nonzero lower bound of e = " + show(e) + " and 1 - e"};
  }
  if (!pools.E_all) return {Truth::unknown, "no complement violation among sampled effects"};
  if (auto v = boolean_violation(c, pools.E)) return {Truth::no, *v};
  return {Truth::yes, "E is a Boolean algebra under <= with complement 1 - e (checked on all of E)"};
}

// G not inside C(P) rules out l-groups and interpolation groups (th:ellBoo (i)).
std::optional<std::string> noncommuting_g_p(const Carrier& c, const Pools& pools) {
  for (const auto& p : pools.P)
    for (const auto& g : pools.G)
      if (!commute(c, g, p)) return "g = " + show(g) + " does not commute with p = " + show(p) + " (th:ellBoo (i))";
  return std::nullopt;
}

Verdict ell_group(const Carrier& c, const Pools& pools, const SampleStrategy& s) {
  if (c.pointwise()) {
    // th:ellgroup: G commutes with P and every g splits, so pg + (1 - p)h is the sup
    Rng rng = Rng::derived(s.seed, kBringStream + 1);
    const std::size_t n = std::min<std::size_t>(pools.G.size(), 64);
    for (std::size_t i = 0; i < n; ++i) {
      const Element& g = pools.G[rng.below(pools.G.size())];
      const Element& h = pools.G[rng.below(pools.G.size())];
      const Element sup = lattice_sup(c, g, h);
      const Element k = c.add(sup, detail::cone_sample(c, s, rng));
      if (!leq(c, sup, k)) return {Truth::no, "sup of " + show(g) + ", " + show(h) + " is not least"};
    }
    return {Truth::yes, "pointwise carrier: th:ellgroup hypotheses hold (split_positive_negative)"};
  }
  if (auto w = noncommuting_g_p(c, pools)) return {Truth::no, "not an l-group: " + *w};
  return {Truth::unknown, "no l-group construction for this carrier"};
}

Verdict interpolation(const Carrier& c, const Pools& pools, const SampleStrategy& s) {
  if (c.pointwise()) {
    Rng rng = Rng::derived(s.seed, kBringStream + 2);
    const std::size_t n = std::min<std::size_t>(pools.G.size(), 64);
    for (std::size_t i = 0; i < n; ++i) {
      const Element& a = pools.G[rng.below(pools.G.size())];
      const Element& b = pools.G[rng.below(pools.G.size())];
      const Element top = lattice_sup(c, a, b);
      const Element cc = c.add(top, detail::cone_sample(c, s, rng));
      const Element d = c.add(top, detail::cone_sample(c, s, rng));
      check_interpolation(c, a, b, cc, d);
    }
    return {Truth::yes, "l-group sups give interpolants"};
  }
  if (auto w = noncommuting_g_p(c, pools)) return {Truth::no, "not an interpolation group: " + *w};
  return {Truth::unknown, "no interpolant construction for this carrier"};
}

Verdict minimal_order_unit(const Carrier& c, const Pools& pools) {
  for (const auto& u : pools.E)
    if (u != c.one() && is_order_unit(c, u)) return {Truth::no, "u = " + show(u) + " is an order unit below 1"};
  if (pools.E_all) return {Truth::yes, "no effect other than 1 is an order unit"};
  return {Truth::unknown, "no smaller order unit among sampled effects"};
}

Verdict p_boolean(const Carrier& c, const Pools& pools) {
  for (const auto& p : pools.P)
    for (const auto& q : pools.P)
      if (!commute(c, p, q)) return {Truth::no, "p = " + show(p) + ", q = " + show(q) + " do not commute (cor:PBoo)"};
  if (!pools.P_all) return {Truth::unknown, "P is infinite; no noncommuting pair among samples"};
  if (auto v = boolean_violation(c, pools.P)) return {Truth::no, *v};
  return {Truth::yes, "P is a Boolean algebra (checked on all " + std::to_string(pools.P.size()) + " projections)"};
}

// Integer combinations of the atoms of a finite Boolean P are exactly the
// integer combinations of orthogonal subsets of P.
Verdict integer_atom_span(const Carrier& c, const Pools& pools, const std::string& what) {
  if (!pools.P_all) return {Truth::unknown, what + ": P is infinite"};
  const auto atoms = minimal_nonzero(c, pools.P);
  for (const auto& g : pools.G) {
    try {
      atom_coefficients(c, atoms, g);
    } catch (const PreconditionError& e) {
      return {Truth::no, what + " fails at g = " + show(g) + ": " + e.what()};
    }
  }
  if (c.pointwise() && c.integer_valued()) return {Truth::yes, what + ": G is integer-valued on the atoms"};
  return {Truth::unknown, what + ": every sampled g decomposes"};
}

Verdict g_commutative(const Carrier& c) {
  // multiplication is bilinear, so commuting on a spanning set decides it
  const auto span = c.spanning_set();
  for (const auto& a : span)
    for (const auto& b : span)
      if (!commute(c, a, b)) return {Truth::no, show(a) + " and " + show(b) + " do not commute"};
  return {Truth::yes, "the spanning set commutes"};
}

}  // namespace

// ---- l-group machinery -----------------------------------------------------

Projection split_positive_negative(const Carrier& c, const Element& g) {
  require_pointwise(c, "split_positive_negative");
  std::vector<Rational> indicator;
  for (const auto& v : c.point_values(g)) indicator.emplace_back(v.sign() > 0 ? 1 : 0);
  Projection p(c, c.from_point_values(indicator));
  const Element pg = c.multiply(p.element(), g);
  if (!c.is_in_Eplus(pg) || !c.is_in_Eplus(c.negate(c.subtract(g, pg))))
    throw std::logic_error("split_positive_negative: (1 - p)g <= 0 <= pg fails for g = " + show(g));
  return p;
}

Element lattice_sup(const Carrier& c, const Element& g, const Element& h) {
  const Projection p = split_positive_negative(c, c.subtract(g, h));
  const Element s = c.add(c.multiply(p.element(), c.subtract(g, h)), h);
  if (!leq(c, g, s) || !leq(c, h, s)) throw std::logic_error("lattice_sup: " + show(s) + " is not an upper bound");
  return s;
}

Element check_interpolation(const Carrier& c, const Element& a, const Element& b, const Element& cc,
                            const Element& d) {
  if (!leq(c, a, cc) || !leq(c, a, d) || !leq(c, b, cc) || !leq(c, b, d))
    throw PreconditionError("interpolation needs a, b <= c, d");
  const Element t = lattice_sup(c, a, b);
  if (!leq(c, t, cc) || !leq(c, t, d)) throw std::logic_error("interpolant " + show(t) + " is not below c and d");
  return t;
}

// ---- th:E=P ----------------------------------------------------------------

std::string to_string(Truth t) {
  switch (t) {
    case Truth::yes: return "true";
    case Truth::no: return "false";
    case Truth::unknown: return "unknown";
  }
  return "unknown";
}

bool BringReport::all_decided() const {
  return std::none_of(conditions.begin(), conditions.end(),
                      [](const BringCondition& b) { return b.value == Truth::unknown; });
}

bool BringReport::consistent() const {
  std::optional<Truth> seen;
  for (const auto& b : conditions) {
    if (b.value == Truth::unknown) continue;
    if (seen && *seen != b.value) return false;
    seen = b.value;
  }
  return true;
}

bool BringReport::is_bring() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const BringCondition& b) { return b.value == Truth::yes; });
}

BringReport bring_conditions(const Carrier& c, const SampleStrategy& s) {
  const Pools pools = make_pools(c, s);
  BringReport r;
  auto set = [&](std::size_t i, const char* roman, const char* statement, const Verdict& v, bool exhaustive) {
    r.conditions[i] = {std::string("th:E=P.(") + roman + ")", statement, v.value, v.basis, exhaustive};
  };
  const Verdict p_gen = integer_atom_span(c, pools, "P generates G over Z");
  set(0, "i", "P is a Boolean algebra and P generates G", combine(p_boolean(c, pools), p_gen), pools.P_all);
  set(1, "ii", "G is commutative and each g is an integer combination of an orthogonal subset of P",
      combine(g_commutative(c), integer_atom_span(c, pools, "orthogonal integer decomposition")), false);
  set(2, "iii", "G is an l-group and E = P", combine(ell_group(c, pools, s), e_equals_p(c, pools)), pools.E_all);
  set(3, "iv", "G is an interpolation group and 1 is a minimal order unit",
      combine(interpolation(c, pools, s), minimal_order_unit(c, pools)), pools.E_all);
  set(4, "v", "E is a Boolean algebra with complement e -> 1 - e", e_boolean(c, pools), pools.E_all);
  set(5, "vi", "E = P", e_equals_p(c, pools), pools.E_all);
  return r;
}

// ---- Boolean views -----------------------------------------------------------

bool BooleanView::contains(const Element& p) const {
  return std::find(elements.begin(), elements.end(), p) != elements.end();
}

BooleanView boolean_view(const Carrier& c, std::vector<Element> universe) {
  for (const auto& p : universe)
    if (!idempotent(c, p)) throw PreconditionError(show(p) + " is not a projection");
  auto contains = [&](const Element& x) { return std::find(universe.begin(), universe.end(), x) != universe.end(); };
  for (const auto& p : universe) {
    if (!contains(c.complement(p))) throw PreconditionError("universe is not closed under 1 - p at p = " + show(p));
    for (const auto& q : universe) {
      if (!commute(c, p, q))
        throw PreconditionError("p = " + show(p) + ", q = " + show(q) + " are not Mackey compatible");
      const Element m = c.multiply(p, q);
      if (!contains(m) || !contains(c.subtract(c.add(p, q), m)))
        throw PreconditionError("universe is not closed under meet and join at " + show(p) + ", " + show(q));
    }
  }
  BooleanView v{&c, std::move(universe), {}};
  v.atoms = minimal_nonzero(c, v.elements);
  for (const auto& p : v.elements) {
    Element sum = c.zero();
    for (const auto& a : v.atoms)
      if (leq(c, a, p)) sum = c.add(sum, a);
    if (sum != p) throw PreconditionError(show(p) + " is not the join of the atoms below it");
  }
  return v;
}

BooleanView boolean_view(const Carrier& c) { return boolean_view(c, all_projections(c)); }

std::vector<std::pair<Projection, std::int64_t>> atom_decomposition(const Carrier& c, const Element& g) {
  const auto atoms = minimal_nonzero(c, all_projections(c));
  const auto k = atom_coefficients(c, atoms, g);
  std::vector<std::pair<Projection, std::int64_t>> out;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (!k[i].is_zero()) out.emplace_back(Projection(c, atoms[i]), to_int64(k[i]));
  return out;
}

BooleanMap BooleanMap::from_atoms(BooleanView source, BooleanView target, const std::vector<Element>& atom_images) {
  if (atom_images.size() != source.atoms.size())
    throw PreconditionError("need one image per source atom (" + std::to_string(source.atoms.size()) + ")");
  const Carrier& sc = *source.carrier;
  const Carrier& tc = *target.carrier;
  for (const auto& x : atom_images)
    if (!target.contains(x)) throw PreconditionError("atom image " + show(x) + " is not in the target view");
  std::vector<Element> images;
  for (const auto& p : source.elements) {
    Element image = tc.zero();
    for (std::size_t i = 0; i < source.atoms.size(); ++i)
      if (leq(sc, source.atoms[i], p)) image = tc.subtract(tc.add(image, atom_images[i]), tc.multiply(image, atom_images[i]));
    images.push_back(std::move(image));
  }
  return {std::move(source), std::move(target), std::move(images)};
}

Element BooleanMap::operator()(const Element& p) const {
  for (std::size_t i = 0; i < source.elements.size(); ++i)
    if (source.elements[i] == p) return images[i];
  throw PreconditionError(show(p) + " is not in the source view");
}

Element RingHom::operator()(const Element& g) const {
  const auto k = atom_coefficients(*source, atoms, g);
  return atom_sum(*target, atom_images, k);
}

namespace {

// First Boolean-homomorphism law phi breaks, with the offending elements.
std::optional<std::string> hom_violation(const BooleanMap& phi) {
  const Carrier& sc = *phi.source.carrier;
  const Carrier& tc = *phi.target.carrier;
  auto meet = [](const Carrier& c, const Element& a, const Element& b) { return c.multiply(a, b); };
  auto join = [](const Carrier& c, const Element& a, const Element& b) {
    return c.subtract(c.add(a, b), c.multiply(a, b));
  };
  if (phi(sc.zero()) != tc.zero()) return std::string("phi(0) != 0");
  if (phi(sc.one()) != tc.one()) return std::string("phi(1) != 1");
  for (const auto& p : phi.source.elements) {
    if (phi(sc.complement(p)) != tc.complement(phi(p))) return "complement law fails at p = " + show(p);
    for (const auto& q : phi.source.elements) {
      if (phi(meet(sc, p, q)) != meet(tc, phi(p), phi(q)))
        return "meet law fails at p = " + show(p) + ", q = " + show(q);
      if (phi(join(sc, p, q)) != join(tc, phi(p), phi(q)))
        return "join law fails at p = " + show(p) + ", q = " + show(q);
    }
  }
  return std::nullopt;
}

void require_bring(const Carrier& c, const char* what) {
  const Pools pools = make_pools(c, {SampleMode::exhaustive, 0, 0, 2});
  const Verdict v = e_equals_p(c, pools);
  if (v.value != Truth::yes) throw CapabilityError(std::string(what) + ": " + c.describe() + " is not a b-ring (" + v.basis + ")");
}

}  // namespace

RingHom extend_boolean_hom(const BooleanMap& phi, const SampleStrategy& s) {
  const Carrier& sc = *phi.source.carrier;
  const Carrier& tc = *phi.target.carrier;
  require_bring(sc, "extend_boolean_hom");
  require_bring(tc, "extend_boolean_hom");
  if (auto v = hom_violation(phi)) throw PreconditionError("phi is not a Boolean homomorphism: " + *v);

  RingHom hom{&sc, &tc, phi.source.atoms, {}};
  for (const auto& a : hom.atoms) hom.atom_images.push_back(phi(a));

  Rng rng(s.seed);
  std::vector<Element> samples = sc.effects();
  for (std::size_t i = 0; i < std::max<std::size_t>(s.case_budget, 100); ++i)
    samples.push_back(detail::group_sample(sc, s, rng));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Element& g = samples[i];
    const Element& h = samples[(i * 7 + 3) % samples.size()];
    const bool ok = hom(sc.add(g, h)) == tc.add(hom(g), hom(h)) &&
                    hom(sc.multiply(g, h)) == tc.multiply(hom(g), hom(h)) &&
                    (!sc.is_in_Eplus(g) || tc.is_in_Eplus(hom(g)));
    if (!ok) throw std::logic_error("extension is not an order-preserving ring homomorphism at " + show(g));
  }
  if (hom(sc.one()) != tc.one()) throw std::logic_error("extension does not preserve 1");
  return hom;
}

// ---- Stone representation --------------------------------------------------

Element StoneModel::forward(const Element& g) const {
  return target->from_point_values(atom_coefficients(*source, atoms, g));
}

Element StoneModel::backward(const Element& f) const { return atom_sum(*source, atoms, target->point_values(f)); }

namespace {

StoneModel build_stone(const Carrier& c) {
  if (!c.enumerable_E()) throw CapabilityError("stone_represent needs a finite E, " + c.describe() + " is not");
  StoneModel m;
  m.source = &c;
  m.atoms = minimal_nonzero(c, c.effects());
  std::vector<std::string> points;
  for (std::size_t i = 0; i < m.atoms.size(); ++i) points.push_back("a" + std::to_string(i));
  std::vector<std::vector<std::string>> atoms;
  for (const auto& p : points) atoms.push_back({p});
  m.target = make_function_carrier(MeasurableSpace(points, atoms), ValueRing::integers);
  return m;
}

}  // namespace

StoneModel stone_represent(const Carrier& c) {
  if (!c.enumerable_E()) throw CapabilityError("stone_represent needs a finite E, " + c.describe() + " is not");
  const BringReport bring = bring_conditions(c, {SampleMode::exhaustive, 0, 64, 4});
  for (const auto& b : bring.conditions)
    if (b.value != Truth::yes)
      throw CapabilityError("stone_represent: " + c.describe() + " is not a b-ring, " + b.id + " is " +
                            to_string(b.value) + " (" + b.basis + ")");
  StoneModel m = build_stone(c);
  const auto effects = c.effects();
  const auto images = m.target->effects();
  if (effects.size() != images.size()) throw std::logic_error("stone_represent: |E| differs from the target");
  for (const auto& e : effects) {
    const Element f = m.forward(e);
    if (!m.target->is_in_E(f) || m.backward(f) != e)
      throw std::logic_error("stone_represent: round trip fails at " + show(e));
  }
  if (m.forward(c.one()) != m.target->one()) throw std::logic_error("stone_represent: Phi(1) != 1");
  return m;
}

// ---- laws --------------------------------------------------------------------

namespace {

// phi for the boolean suite, as a map from P to P on the same carrier.
Element family_phi(const Carrier& c, BooleanMapFamily family, const Element& p) {
  if (family == BooleanMapFamily::identity || p == c.one() || p == c.zero()) return p;
  const auto atoms = minimal_nonzero(c, all_projections(c));
  return c.multiply(p, c.complement(atoms.back()));
}

Element family_Phi(const Carrier& c, BooleanMapFamily family, const Element& g) {
  const auto atoms = minimal_nonzero(c, all_projections(c));
  const auto k = atom_coefficients(c, atoms, g);
  std::vector<Element> images;
  for (const auto& a : atoms) images.push_back(family_phi(c, family, a));
  return atom_sum(c, images, k);
}

std::vector<Law> make_boolean_laws(BooleanMapFamily family) {
  auto phi = [family](const Carrier& c, const Element& p) { return family_phi(c, family, p); };
  auto join = [](const Carrier& c, const Element& a, const Element& b) {
    return c.subtract(c.add(a, b), c.multiply(a, b));
  };
  return {
      {"th:ellgroup.split", "p = split(g) is a projection with (1 - p)g <= 0 <= pg", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element p = split_positive_negative(c, in[0]).element();
         const Element pg = c.multiply(p, in[0]);
         return expect(c.is_in_Eplus(pg) && leq(c, c.subtract(in[0], pg), c.zero()), "(1 - p)g <= 0 <= pg",
                       [&] { return "p = " + show(p); });
       }},
      {"th:ellgroup.sup", "s = pg + (1 - p)h is above g, h and below every upper bound k", {"g", "h", "k"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const Element s = lattice_sup(c, in[0], in[1]);
         if (!leq(c, in[0], in[2]) || !leq(c, in[1], in[2])) return LawOutcome::holds();
         return expect(leq(c, s, in[2]), "s <= k", [&] { return "s = " + show(s) + " is not below k"; });
       }},
      {"th:ellgroup.max", "the l-group sup is the pointwise maximum", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const auto g = c.point_values(in[0]), h = c.point_values(in[1]);
         std::vector<Rational> m;
         for (std::size_t i = 0; i < g.size(); ++i) m.push_back(std::max(g[i], h[i]));
         const Element s = lattice_sup(c, in[0], in[1]);
         return expect(s == c.from_point_values(m), "sup = max", [&] { return "sup = " + show(s); });
       }},
      {"riesz.interpolation", "a, b <= c, d admits t with a, b <= t <= c, d", {"a", "b", "c", "d"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         for (std::size_t i : {0u, 1u})
           for (std::size_t j : {2u, 3u})
             if (!leq(c, in[i], in[j])) return LawOutcome::vacuous();
         const Element t = check_interpolation(c, in[0], in[1], in[2], in[3]);
         return expect(leq(c, in[0], t) && leq(c, in[1], t), "a, b <= t", [&] { return "t = " + show(t); });
       }},
      {"th:ellBoo.i", "in an l-group every g commutes with every projection", {"g", "p"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[1])) return LawOutcome::vacuous();
         return expect(commute(c, in[0], in[1]), "gp = pg", [] { return std::string("gp != pg"); });
       }},
      {"cor:PBoo", "projections commute pairwise, so P is Boolean", {"p", "q"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !idempotent(c, in[1])) return LawOutcome::vacuous();
         return expect(commute(c, in[0], in[1]), "pq = qp", [] { return std::string("pq != qp"); });
       }},
      {"th:Booext.phi.bounds", "phi(0) = 0 and phi(1) = 1", {},
       [phi](const LawContext& x, In) {
         const Carrier& c = x.carrier;
         return expect(phi(c, c.zero()) == c.zero() && phi(c, c.one()) == c.one(), "phi preserves 0 and 1",
                       [] { return std::string("bound not preserved"); });
       }},
      {"th:Booext.phi.meet", "phi(p ^ q) = phi(p) ^ phi(q)", {"p", "q"},
       [phi](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !idempotent(c, in[1])) return LawOutcome::vacuous();
         const Element l = phi(c, c.multiply(in[0], in[1]));
         const Element r = c.multiply(phi(c, in[0]), phi(c, in[1]));
         return expect(l == r, "meet preserved", [&] { return show(l) + " vs " + show(r); });
       }},
      {"th:Booext.phi.join", "phi(p v q) = phi(p) v phi(q)", {"p", "q"},
       [phi, join](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0]) || !idempotent(c, in[1])) return LawOutcome::vacuous();
         const Element l = phi(c, join(c, in[0], in[1]));
         const Element r = join(c, phi(c, in[0]), phi(c, in[1]));
         return expect(l == r, "join preserved", [&] { return "phi(p v q) = " + show(l) + ", phi(p) v phi(q) = " + show(r); });
       }},
      {"th:Booext.phi.complement", "phi(1 - p) = 1 - phi(p)", {"p"},
       [phi](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!idempotent(c, in[0])) return LawOutcome::vacuous();
         const Element l = phi(c, c.complement(in[0]));
         const Element r = c.complement(phi(c, in[0]));
         return expect(l == r, "complement preserved", [&] { return show(l) + " vs " + show(r); });
       }},
      {"th:Booext.Phi", "the extension of phi is an order-preserving ring homomorphism with Phi(1) = 1", {"g", "h"},
       [family](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.integer_valued()) return LawOutcome::vacuous();
         auto Phi = [&](const Element& g) { return family_Phi(c, family, g); };
         const Element& g = in[0];
         const Element& h = in[1];
         if (Phi(c.one()) != c.one()) return LawOutcome::violated("Phi(1) = 1", "Phi(1) = " + show(Phi(c.one())));
         if (Phi(c.add(g, h)) != c.add(Phi(g), Phi(h))) return LawOutcome::violated("Phi additive", "sums differ");
         if (Phi(c.multiply(g, h)) != c.multiply(Phi(g), Phi(h)))
           return LawOutcome::violated("Phi multiplicative", "products differ");
         return expect(!leq(c, g, h) || leq(c, Phi(g), Phi(h)), "Phi order-preserving",
                       [] { return std::string("order not preserved"); });
       }},
  };
}

}  // namespace

const std::vector<Law>& boolean_laws(BooleanMapFamily family) {
  static const std::vector<Law> identity = make_boolean_laws(BooleanMapFamily::identity);
  static const std::vector<Law> broken = make_boolean_laws(BooleanMapFamily::broken_join);
  return family == BooleanMapFamily::broken_join ? broken : identity;
}

const std::vector<Law>& bring_laws() {
  static const std::vector<Law> laws = {
      {"th:E=P", "the six conditions of th:E=P have the same truth value", {},
       [](const LawContext& x, In) {
         const BringReport r = bring_conditions(x.carrier, x.strategy);
         std::string values;
         for (const auto& b : r.conditions) {
           if (!values.empty()) values += ", ";
           values += b.id.substr(5) + "=" + to_string(b.value);
         }
         if (!r.consistent()) return LawOutcome::violated("all six equal", values);
         if (!r.all_decided()) return LawOutcome::undecided(values);
         return LawOutcome::holds();
       }},
  };
  return laws;
}

const std::vector<Law>& stone_laws() {
  static const std::vector<Law> laws = {
      {"th:bring.unit", "Phi(1) = 1", {},
       [](const LawContext& x, In) {
         const StoneModel m = build_stone(x.carrier);
         return expect(m.forward(x.carrier.one()) == m.target->one(), "Phi(1) = 1",
                       [] { return std::string("Phi(1) != 1"); });
       }},
      {"th:bring.additive", "Phi(g + h) = Phi(g) + Phi(h)", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const StoneModel m = build_stone(c);
         return expect(m.forward(c.add(in[0], in[1])) == m.target->add(m.forward(in[0]), m.forward(in[1])),
                       "additive", [] { return std::string("sums differ"); });
       }},
      {"th:bring.multiplicative", "Phi(gh) = Phi(g) Phi(h)", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const StoneModel m = build_stone(c);
         return expect(m.forward(c.multiply(in[0], in[1])) ==
                           m.target->multiply(m.forward(in[0]), m.forward(in[1])),
                       "multiplicative", [] { return std::string("products differ"); });
       }},
      {"th:bring.order", "g <= h iff Phi(g) <= Phi(h)", {"g", "h"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const StoneModel m = build_stone(c);
         const bool source = leq(c, in[0], in[1]);
         const bool target = leq(*m.target, m.forward(in[0]), m.forward(in[1]));
         return expect(source == target, "order reflected both ways", [&] {
           return std::string("g <= h is ") + (source ? "true" : "false") + " but Phi(g) <= Phi(h) is " +
                  (target ? "true" : "false");
         });
       }},
      {"th:bring.boolean", "Phi restricted to E preserves meets, joins and complements into the target E", {"e", "f"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         if (!c.is_in_E(in[0]) || !c.is_in_E(in[1])) return LawOutcome::vacuous();
         const StoneModel m = build_stone(c);
         const Carrier& t = *m.target;
         const Element fe = m.forward(in[0]), ff = m.forward(in[1]);
         const Element meet = c.multiply(in[0], in[1]);
         const Element join = c.subtract(c.add(in[0], in[1]), meet);
         const bool ok = t.is_in_E(fe) && m.forward(meet) == t.multiply(fe, ff) &&
                         m.forward(join) == t.subtract(t.add(fe, ff), t.multiply(fe, ff)) &&
                         m.forward(c.complement(in[0])) == t.complement(fe);
         return expect(ok, "Boolean homomorphism on E", [&] { return "Phi(e) = " + show(fe); });
       }},
      {"th:bring.onto", "every target effect is Phi of an effect", {},
       [](const LawContext& x, In) {
         const Carrier& c = x.carrier;
         const StoneModel m = build_stone(c);
         for (const auto& f : m.target->effects()) {
           const Element e = m.backward(f);
           if (!c.is_in_E(e) || m.forward(e) != f)
             return LawOutcome::violated("Phi(Phi^-1(f)) = f with Phi^-1(f) in E", "fails at f = " + show(f));
         }
         return LawOutcome::holds();
       }},
      {"th:bring.round-trip", "Phi^-1(Phi(g)) = g", {"g"},
       [](const LawContext& x, In in) {
         const StoneModel m = build_stone(x.carrier);
         const Element back = m.backward(m.forward(in[0]));
         return expect(back == in[0], "round trip is the identity", [&] { return "got " + show(back); });
       }},
      {"th:bring.inverse-round-trip", "Phi(Phi^-1(f)) = f for target elements f", {"f"},
       [](const LawContext& x, In in) {
         const StoneModel m = build_stone(x.carrier);
         if (!m.target->in_G(in[0])) return LawOutcome::vacuous();
         const Element back = m.forward(m.backward(in[0]));
         return expect(back == in[0], "round trip is the identity", [&] { return "got " + show(back); });
       }},
      {"th:bring.no-nilpotents", "Phi(g)^2 = 0 or g^2 = 0 only for g = 0 (M.v)", {"g"},
       [](const LawContext& x, In in) {
         const Carrier& c = x.carrier;
         const StoneModel m = build_stone(c);
         const Element f = m.forward(in[0]);
         const bool image_ok = m.target->multiply(f, f) != m.target->zero() || f == m.target->zero();
         const bool source_ok = c.multiply(in[0], in[0]) != c.zero() || in[0] == c.zero();
         return expect(image_ok && source_ok, "no nonzero nilpotents", [&] { return "g = " + show(in[0]); });
       }},
  };
  return laws;
}

// ---- suites ------------------------------------------------------------------

VerificationReport verify_boolean_suite(const Carrier& c, const SampleStrategy& s, BooleanMapFamily family) {
  detail::require_strategy(c, s, "boolean");
  require_pointwise(c, "boolean suite");
  const auto& laws = boolean_laws(family);
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };
  Rng rng(s.seed);
  SuiteRun run("boolean", c, s);
  for (const auto& l : laws) run.declare(l);

  const auto P = all_projections(c);
  std::vector<Element> G;
  for (std::size_t i = 0; i < s.case_budget; ++i) G.push_back(detail::group_sample(c, s, rng));
  auto pick = [&]() -> const Element& { return G[rng.below(G.size())]; };

  for (const auto& g : G) run.add(law("th:ellgroup.split"), {g});
  for (std::size_t i = 0; i < s.case_budget; ++i) {
    const Element& g = pick();
    const Element& h = pick();
    // k is an upper bound half the time by construction
    const Element sup = lattice_sup(c, g, h);
    Element k = rng.coin() ? c.add(sup, detail::cone_sample(c, s, rng)) : pick();
    run.add(law("th:ellgroup.sup"), {g, h, std::move(k)});
    run.add(law("th:ellgroup.max"), {g, h});
    const Element cc = c.add(sup, detail::cone_sample(c, s, rng));
    run.add(law("riesz.interpolation"), {g, h, cc, c.add(sup, detail::cone_sample(c, s, rng))});
  }
  for (const auto& p : P) {
    for (std::size_t i = 0; i < std::min<std::size_t>(G.size(), 32); ++i) run.add(law("th:ellBoo.i"), {G[i], p});
    run.add(law("th:Booext.phi.complement"), {p});
    for (const auto& q : P) {
      run.add(law("cor:PBoo"), {p, q});
      run.add(law("th:Booext.phi.meet"), {p, q});
      run.add(law("th:Booext.phi.join"), {p, q});
    }
  }
  run.add(law("th:Booext.phi.bounds"), {});
  for (std::size_t i = 0; i < s.case_budget; ++i) {
    const Element& g = pick();
    run.add(law("th:Booext.Phi"), {g, pick()});
  }
  run.finding("projections", std::to_string(P.size()));
  if (family == BooleanMapFamily::broken_join) run.note("Boolean map under test drops the last atom");
  return run.finish();
}

VerificationReport verify_bring_suite(const Carrier& c, const SampleStrategy& s) {
  detail::require_strategy(c, s, "bring");
  SuiteRun run("bring", c, s);
  const Law& law = law_by_id(bring_laws(), "th:E=P");
  run.add(law, {});
  const BringReport r = bring_conditions(c, s);
  for (const auto& b : r.conditions) run.finding(b.id, to_string(b.value) + ": " + b.basis);
  run.finding("b-ring", r.is_bring() ? "yes" : "no");
  run.note("all six conditions of th:E=P are evaluated, (vi) included");
  return run.finish();
}

VerificationReport verify_stone_suite(const Carrier& c, const SampleStrategy& s) {
  detail::require_strategy(c, s, "stone");
  const StoneModel model = stone_represent(c);
  const auto& laws = stone_laws();
  auto law = [&](std::string_view id) -> const Law& { return law_by_id(laws, id); };
  Rng rng(s.seed);
  SuiteRun run("stone", c, s);
  for (const auto& l : laws) run.declare(l);

  run.add(law("th:bring.unit"), {});
  run.add(law("th:bring.onto"), {});
  const auto E = c.effects();
  for (const auto& e : E)
    for (const auto& f : E) {
      run.add(law("th:bring.additive"), {e, f});
      run.add(law("th:bring.multiplicative"), {e, f});
      run.add(law("th:bring.order"), {e, f});
      run.add(law("th:bring.boolean"), {e, f});
    }
  for (const auto& e : E) run.add(law("th:bring.round-trip"), {e});

  const std::size_t n = std::max<std::size_t>(s.case_budget, 1000);
  std::vector<Element> G;
  for (std::size_t i = 0; i < n; ++i) G.push_back(detail::group_sample(c, s, rng));
  for (std::size_t i = 0; i < n; ++i) {
    run.add(law("th:bring.round-trip"), {G[i]});
    run.add(law("th:bring.no-nilpotents"), {G[i]});
    const Element& h = G[rng.below(n)];
    run.add(law("th:bring.additive"), {G[i], h});
    run.add(law("th:bring.multiplicative"), {G[i], h});
    run.add(law("th:bring.order"), {G[i], h});
  }
  for (std::size_t i = 0; i < std::max<std::size_t>(s.case_budget / 4, 100); ++i)
    run.add(law("th:bring.inverse-round-trip"), {model.target->sample_raw(rng, s.magnitude_bound)});
  run.finding("stone points", std::to_string(model.atoms.size()));
  run.note("finite Stone space: one point per atom of E");
  return run.finish();
}

}  // namespace ering
