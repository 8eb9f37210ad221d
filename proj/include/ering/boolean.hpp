#pragma once

#include <array>
#include <string>
#include <vector>

#include "ering/carrier.hpp"
#include "ering/projections.hpp"
#include "ering/report.hpp"

namespace ering {

// ---- l-group machinery (pointwise carriers) -------------------------------

/// Indicator of the atoms where g > 0, so (1 - p)g <= 0 <= pg.
/// Throws CapabilityError unless c.pointwise().
Projection split_positive_negative(const Carrier& c, const Element& g);

/// s = pg + (1 - p)h with p split from g - h; checks g, h <= s.
/// Throws CapabilityError unless c.pointwise().
Element lattice_sup(const Carrier& c, const Element& g, const Element& h);

/// t with a, b <= t <= cc, d, namely lattice_sup(a, b). Throws
/// PreconditionError unless a, b <= cc, d.
Element check_interpolation(const Carrier& c, const Element& a, const Element& b, const Element& cc,
                            const Element& d);

// ---- th:E=P ----------------------------------------------------------------

enum class Truth { yes, no, unknown };
std::string to_string(Truth t);

struct BringCondition {
  std::string id;         // "th:E=P.(i)" ... "th:E=P.(vi)"
  std::string statement;
  Truth value = Truth::unknown;
  std::string basis;      // how the value was reached, with any witness
  bool exhaustive = false;
};

/// The six conditions of th:E=P, each evaluated on its own. A "no" always
/// comes with an exact witness; a "yes" is exhaustive on enumerable carriers
/// and otherwise rests on a constructive argument named in `basis`.
struct BringReport {
  std::array<BringCondition, 6> conditions;

  bool all_decided() const;
  /// No two decided conditions differ.
  bool consistent() const;
  /// All six decided and true.
  bool is_bring() const;
};

BringReport bring_conditions(const Carrier& c, const SampleStrategy& s);

// ---- Boolean algebras of projections ---------------------------------------

/// A finite Boolean algebra of projections with its atoms.
struct BooleanView {
  const Carrier* carrier = nullptr;
  std::vector<Element> elements;
  std::vector<Element> atoms;

  bool contains(const Element& p) const;
};

/// P of a carrier with finitely many projections. Throws CapabilityError if P
/// is not finite and PreconditionError (naming a pair) if P is not Boolean.
BooleanView boolean_view(const Carrier& c);
/// A view over an explicit universe; same validation, plus closure under
/// pq, p + q - pq and 1 - p.
BooleanView boolean_view(const Carrier& c, std::vector<Element> universe);

/// (atom, k) pairs with g = sum k * atom over the atoms of P, zero
/// coefficients omitted. Throws CapabilityError without finite projections
/// and PreconditionError when a coefficient is not an integer or the sum does
/// not reproduce g.
std::vector<std::pair<Projection, std::int64_t>> atom_decomposition(const Carrier& c, const Element& g);

/// A map between Boolean views given by the image of every source element.
struct BooleanMap {
  BooleanView source;
  BooleanView target;
  std::vector<Element> images;  // parallel to source.elements

  /// Image of p as the join of the images of the atoms below p.
  static BooleanMap from_atoms(BooleanView source, BooleanView target, const std::vector<Element>& atom_images);
  Element operator()(const Element& p) const;
};

/// An additive map G -> H given by the images of the source atoms.
struct RingHom {
  const Carrier* source = nullptr;
  const Carrier* target = nullptr;
  std::vector<Element> atoms;
  std::vector<Element> atom_images;

  Element operator()(const Element& g) const;
};

/// Extends a Boolean homomorphism between b-rings to G -> H by
/// sum k_a a -> sum k_a phi(a), then checks additivity, multiplicativity,
/// order preservation and Phi(1) = 1 on samples. Throws CapabilityError if
/// either carrier is not a b-ring and PreconditionError naming the law and
/// elements if phi is not a Boolean homomorphism.
RingHom extend_boolean_hom(const BooleanMap& phi, const SampleStrategy& s);

// ---- Stone representation --------------------------------------------------

/// A b-ring G realized as integer functions on the atoms of E.
struct StoneModel {
  const Carrier* source = nullptr;
  CarrierPtr target;          // integer functions, one point per atom
  std::vector<Element> atoms;  // atom i of E is point i of the target

  /// Phi(g)(a) = k_a where ga = k_a a.
  Element forward(const Element& g) const;
  /// Phi^-1(f) = sum f(a) a.
  Element backward(const Element& f) const;
};

/// Throws CapabilityError unless E is finite and bring_conditions is all
/// true. Checks the Boolean restriction and the round trip on all of E.
StoneModel stone_represent(const Carrier& c);

// ---- suites ------------------------------------------------------------------

/// Which Boolean map the boolean suite checks. `broken_join` keeps 0 and 1
/// but drops the last atom from every other element, which breaks the join
/// and complement laws.
enum class BooleanMapFamily { identity, broken_join };

/// l-group and interpolation laws, the commutation chain of th:ellBoo, and the
/// Boolean-homomorphism laws of th:Booext for the chosen map. Throws
/// CapabilityError unless the carrier is pointwise.
VerificationReport verify_boolean_suite(const Carrier& c, const SampleStrategy& s,
                                        BooleanMapFamily family = BooleanMapFamily::identity);
/// The agreement of the six th:E=P conditions.
VerificationReport verify_bring_suite(const Carrier& c, const SampleStrategy& s);
/// The isomorphism laws of th:bring, exhaustive on E and sampled on G.
/// Throws CapabilityError on a carrier that is not a b-ring.
VerificationReport verify_stone_suite(const Carrier& c, const SampleStrategy& s);

const std::vector<Law>& boolean_laws(BooleanMapFamily family = BooleanMapFamily::identity);
const std::vector<Law>& bring_laws();
const std::vector<Law>& stone_laws();

}  // namespace ering
