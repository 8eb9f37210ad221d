#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ering/carrier.hpp"
#include "ering/report.hpp"

namespace ering {

/// An element of the unit interval E of a carrier. The carrier must outlive
/// the effect.
class Effect {
public:
  /// Throws PreconditionError unless c.is_in_E(e).
  Effect(const Carrier& c, Element e);

  const Carrier& carrier() const { return *carrier_; }
  const Element& element() const { return element_; }

  friend bool operator==(const Effect& a, const Effect& b) {
    return a.carrier_ == b.carrier_ && a.element_ == b.element_;
  }

private:
  const Carrier* carrier_;
  Element element_;
};

/// e + f when it lies in E, nullopt otherwise. Throws CarrierMismatch.
std::optional<Effect> oplus(const Effect& e, const Effect& f);

/// 1 - e.
Effect orthosupplement(const Effect& e);

/// The three equivalent sharpness conditions evaluated separately.
///   (i)   a, b, a + b in E and a, b <= e imply a + b <= e
///   (ii)  d in E with d <= e and d <= 1 - e implies d = 0
///   (iii) e = e^2
/// (iii) is exact; (i) and (ii) are "no counterexample among the tested
/// candidates", over every effect when the carrier is enumerable.
struct SharpnessReport {
  bool sharp = false;  // condition (iii)
  bool condition_i = true;
  bool condition_ii = true;
  bool condition_iii = false;
  std::optional<Element> witness_ii;                          // nonzero d <= e, 1 - e
  std::optional<std::pair<Element, Element>> witness_i;       // a, b with a + b not <= e
  std::size_t candidates = 0;
  bool exhaustive = false;

  bool consistent() const { return condition_i == condition_ii && condition_ii == condition_iii; }
};

SharpnessReport is_sharp(const Effect& e, const SampleStrategy& s);

bool commutes(const Carrier& c, const Element& g, const Element& h);

/// Members of `universe` commuting with g.
std::vector<Element> commutant(const Carrier& c, const Element& g, const std::vector<Element>& universe);
/// Members of `universe` commuting with every element of xs.
std::vector<Element> commutant(const Carrier& c, const std::vector<Element>& xs, const std::vector<Element>& universe);

struct CoexistenceWitness {
  Element d;
  Element e1;
  Element f1;
};

enum class CoexistenceVerdict { coexistent, undecided, not_coexistent };
std::string to_string(CoexistenceVerdict v);

struct CoexistenceResult {
  CoexistenceVerdict verdict = CoexistenceVerdict::undecided;
  std::optional<CoexistenceWitness> witness;
  std::string route;  // which construction produced the verdict
};

/// d, e1, f1 in E, d + e1 + f1 in E, e = d + e1, f = d + f1, checked exactly.
bool validate_witness(const Carrier& c, const Element& e, const Element& f, const CoexistenceWitness& w);

/// Looks for d with d <= e, d <= f, e + f - d in E. Tries d = 0, the
/// pointwise d = max(0, e + f - 1), d = ef for commuting pairs, then a seeded
/// search. Two noncommuting projections are certified not coexistent; any
/// other failed search is undecided. Throws CarrierMismatch.
CoexistenceResult coexistence_witness(const Effect& e, const Effect& f, const SampleStrategy& s);

/// Effect-algebra laws, sharpness, commutants, and coexistence.
VerificationReport verify_effect_suite(const Carrier& c, const SampleStrategy& s);
const std::vector<Law>& effect_laws();

}  // namespace ering
