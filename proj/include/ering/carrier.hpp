#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ering/element.hpp"
#include "ering/rational.hpp"
#include "ering/sampling.hpp"

namespace ering {

enum class CarrierKind { function_ring, matrix_model, product, mutant };
enum class ValueRing { integers, rationals };

std::string to_string(CarrierKind kind);
std::string to_string(ValueRing ring);

/// A finite set of labelled points partitioned into atoms. The field of sets
/// is every union of atoms.
class MeasurableSpace {
public:
  /// Throws std::invalid_argument unless `atoms` are nonempty, pairwise
  /// disjoint, and cover `points` exactly.
  MeasurableSpace(std::vector<std::string> points, std::vector<std::vector<std::string>> atoms);
  /// Points p0..p{n-1}, each its own atom.
  static MeasurableSpace discrete(std::size_t n);

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::vector<std::string>>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }

private:
  std::vector<std::string> points_;
  std::vector<std::vector<std::string>> atoms_;
};

class Carrier;
using CarrierPtr = std::shared_ptr<const Carrier>;

/// A concrete e-ring model. Ring operations act on the enveloping ring R;
/// `in_G` flags values (e.g. non-symmetric matrix products) outside the
/// directed group. E+ and E are membership oracles.
///
/// All members are const and pure, so a carrier may be shared across threads.
class Carrier {
public:
  virtual ~Carrier() = default;

  virtual CarrierKind kind() const = 0;
  virtual std::string describe() const = 0;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element negate(const Element& a) const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  /// Rational multiple of the representation. The result may leave G (for
  /// example halving an integer-valued function); check with in_G.
  virtual Element scale(const Rational& s, const Element& a) const = 0;

  Element subtract(const Element& a, const Element& b) const { return add(a, negate(b)); }
  /// 1 - e
  Element complement(const Element& e) const { return subtract(one(), e); }
  Element power(const Element& a, unsigned n) const;
  Element sum(std::span<const Element> terms) const;

  /// True if `a` has this carrier's shape (atom count / dimension / nesting).
  virtual bool has_shape(const Element& a) const = 0;
  /// Membership in the directed group G. Implies has_shape.
  virtual bool in_G(const Element& a) const = 0;

  /// Positive cone oracle.
  virtual bool is_in_Eplus(const Element& a) const = 0;
  /// Effect oracle: a in G with a and 1 - a in E+.
  virtual bool is_in_E(const Element& a) const;

  virtual bool enumerable_E() const = 0;
  virtual bool archimedean() const { return true; }
  virtual bool commutative() const = 0;
  /// Function-like carrier: elements are determined by finitely many
  /// coordinates, with pointwise ring operations and pointwise order.
  virtual bool pointwise() const = 0;
  /// Every element of G has integer coordinates (pointwise carriers only).
  virtual bool integer_valued() const { return false; }
  /// The full set of projections is finite and listed by projection_candidates.
  virtual bool finite_projections() const = 0;

  /// Every effect. Throws CapabilityError unless enumerable_E().
  virtual std::vector<Element> effects() const = 0;
  /// A few distinguished effects used to seed searches (0, 1, 1/2, ...).
  virtual std::vector<Element> landmark_effects() const = 0;
  /// Projections to test: all of them when finite_projections(), otherwise
  /// landmark projections followed by seeded random ones, up to `count`.
  virtual std::vector<Element> projection_candidates(Rng& rng, std::size_t count, std::size_t bound) const = 0;

  /// An effect, built so that membership holds by construction.
  virtual Element sample_effect(Rng& rng, std::size_t bound) const = 0;
  /// A group element with entries bounded by `bound`, not necessarily positive.
  virtual Element sample_raw(Rng& rng, std::size_t bound) const = 0;
  /// Sum of between 0 and `max_terms` sampled effects; lies in the generated cone.
  Element sample_cone(Rng& rng, std::size_t max_terms, std::size_t bound) const;

  /// Writes a in E+ as a finite sum of effects (empty for a = 0).
  /// Throws PreconditionError if the oracle rejects a.
  virtual std::vector<Element> decompose_positive(const Element& a) const = 0;
  /// Effect summands reproducing a, built without consulting the E+ oracle;
  /// nullopt when no such construction exists (a is not in the generated cone).
  virtual std::optional<std::vector<Element>> cone_witness(const Element& a) const = 0;

  /// Some integer n >= 0 with g <= n * 1, from a norm bound.
  virtual std::int64_t order_unit_upper_bound(const Element& g) const = 0;

  /// Additive generators of G and the coordinates of g in them.
  virtual std::vector<Element> spanning_set() const = 0;
  virtual std::vector<Rational> coordinates(const Element& g) const = 0;

  /// Pointwise view; only valid when pointwise(). Throws CapabilityError otherwise.
  virtual std::size_t point_count() const;
  virtual std::vector<Rational> point_values(const Element& g) const;
  virtual Element from_point_values(std::span<const Rational> values) const;
};

/// Integer- or rational-valued functions on the atoms of `space`.
/// `grid_denominator` d enumerates effects with values k/d; it is only a
/// sample generator, the ring itself is all rational-valued functions.
/// Throws std::invalid_argument for an empty atom set or a zero grid.
CarrierPtr make_function_carrier(MeasurableSpace space, ValueRing ring,
                                 std::optional<std::int64_t> grid_denominator = std::nullopt);

/// n x n rational symmetric matrices with the PSD cone. Throws for n = 0.
CarrierPtr make_matrix_carrier(std::size_t n);

/// Componentwise operations and oracles on pairs.
CarrierPtr product_carrier(CarrierPtr left, CarrierPtr right);

/// Decomposition into effects; free-function form of Carrier::decompose_positive.
std::vector<Element> decompose_positive(const Carrier& c, const Element& a);

}  // namespace ering
