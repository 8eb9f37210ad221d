#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ering/carrier.hpp"
#include "ering/report.hpp"

namespace ering {

/// p = p^2 in G.
bool is_projection(const Carrier& c, const Element& g);

/// A validated projection. The carrier must outlive it.
class Projection {
public:
  /// Throws PreconditionError unless is_projection(c, p).
  Projection(const Carrier& c, Element p);

  const Carrier& carrier() const { return *carrier_; }
  const Element& element() const { return element_; }

  friend bool operator==(const Projection& a, const Projection& b) {
    return a.carrier_ == b.carrier_ && a.element_ == b.element_;
  }

private:
  const Carrier* carrier_;
  Element element_;
};

/// pq. Throws PreconditionError for a noncommuting pair, CarrierMismatch
/// across carriers.
Projection proj_meet(const Projection& p, const Projection& q);
/// p + q - pq, under the same preconditions as proj_meet.
Projection proj_join(const Projection& p, const Projection& q);
/// q - p. Throws PreconditionError unless p <= q.
Projection proj_orthodiff(const Projection& p, const Projection& q);

/// p = d + p1, q = d + q1 with d, p1, q1, d + p1 + q1 projections.
struct MackeyDecomposition {
  Element d;
  Element p1;
  Element q1;
};

/// The decomposition d = pq, p1 = p - pq, q1 = q - pq when pq = qp (each
/// part verified), nullopt otherwise. Throws CarrierMismatch.
std::optional<MackeyDecomposition> mackey_compatible(const Projection& p, const Projection& q);

/// Result of checking the orthomodular-poset laws over a finite universe of
/// projections. Suprema and infima are relative to that universe.
struct OmpCertificate {
  std::vector<Element> universe;
  VerificationReport report;

  bool passed() const { return report.passed(); }
};

/// Bounds, involution, order reversal, orthogonal sums as least upper bounds,
/// the orthomodular identity, th:p+qinP, and lm:Pnormal on constructed
/// triples, over all pairs (and triples, when few enough) of `universe`.
/// Throws CarrierMismatch if a projection belongs to another carrier.
OmpCertificate verify_omp(const Carrier& c, std::span<const Projection> universe, const SampleStrategy& s);

/// J_p(g) = pgp.
Element compress(const Projection& p, const Element& g);

/// Which map the compression suite treats as J_p. `left` (g -> pg) is a
/// deliberately wrong family used to show the suite can fail.
enum class CompressionFamily { sandwich, left };

/// Laws of the family (J_p): J_p(g) in G, additivity, positivity, J_p(1) = p,
/// the retraction law, idempotence, J_0 = 0 and J_1 = id. Labelled
/// "compression base (derivable laws)"; the full definition is external.
VerificationReport verify_compression_base(const Carrier& c, std::span<const Projection> universe,
                                           const SampleStrategy& s,
                                           CompressionFamily family = CompressionFamily::sandwich);

/// An additive map G -> G given by its images of c.spanning_set().
class Endomorphism {
public:
  /// Throws PreconditionError unless there is one image per spanning element,
  /// each in G.
  Endomorphism(const Carrier& c, std::vector<Element> images);
  /// Tabulates f on the spanning set; f is only ever called there.
  static Endomorphism tabulate(const Carrier& c, const std::function<Element(const Element&)>& f);

  Element operator()(const Element& g) const;
  const std::vector<Element>& images() const { return images_; }

private:
  const Carrier* carrier_;
  std::vector<Element> images_;
};

/// Recovers p = J(1) from a retraction J. J = J_p is checked on the spanning
/// set, which by additivity decides it on all of G. Throws CapabilityError
/// on a non-archimedean carrier and PreconditionError when J(1) is not an
/// effect, J is not order-preserving or not a retraction on sampled effects,
/// or J differs from J_p (the message names the spanning element).
Projection retraction_projection(const Carrier& c, const Endomorphism& j, const SampleStrategy& s);
/// As above for a map given as a function: additivity is checked on sampled
/// pairs (PreconditionError otherwise) before tabulating.
Projection retraction_projection(const Carrier& c, const std::function<Element(const Element&)>& j,
                                 const SampleStrategy& s);

/// Projection order theory: th:pqinP, cor:pqinP, cor:q-pinP with infima and
/// suprema checked against the effect universe, De Morgan, lm:pCq,
/// lm:Pnormal, and the proj_* operations.
VerificationReport verify_projection_suite(const Carrier& c, const SampleStrategy& s);
/// verify_omp over the carrier's projection candidates, which are first
/// checked for idempotence (law P.idempotent).
VerificationReport verify_omp_suite(const Carrier& c, const SampleStrategy& s);
/// verify_compression_base over the carrier's projections.
VerificationReport verify_compression_suite(const Carrier& c, const SampleStrategy& s,
                                            CompressionFamily family = CompressionFamily::sandwich);

const std::vector<Law>& projection_laws();
const std::vector<Law>& omp_laws();
const std::vector<Law>& compression_laws(CompressionFamily family = CompressionFamily::sandwich);

}  // namespace ering
