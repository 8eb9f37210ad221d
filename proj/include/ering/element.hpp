#pragma once

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ering/matrix.hpp"
#include "ering/rational.hpp"

namespace ering {

/// One rational value per atom of a finite field of sets. Storing values per
/// atom (rather than per point) is what makes every such function measurable.
struct FunctionElement {
  std::vector<Rational> values;
  friend bool operator==(const FunctionElement&, const FunctionElement&) = default;
};

/// A value of some carrier: a function on atoms, a square matrix, or a pair
/// (for product carriers). Immutable; equality is exact and structural.
class Element {
public:
  Element() : rep_(FunctionElement{}) {}
  Element(FunctionElement f) : rep_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  Element(Matrix m) : rep_(std::move(m)) {}           // NOLINT(google-explicit-constructor)
  Element(Element first, Element second);

  static Element function(std::vector<Rational> values) { return Element(FunctionElement{std::move(values)}); }

  bool is_function() const { return std::holds_alternative<FunctionElement>(rep_); }
  bool is_matrix() const { return std::holds_alternative<Matrix>(rep_); }
  bool is_pair() const { return std::holds_alternative<PairPtr>(rep_); }

  /// Accessors throw std::bad_variant_access on the wrong alternative.
  const std::vector<Rational>& values() const { return std::get<FunctionElement>(rep_).values; }
  const Matrix& matrix() const { return std::get<Matrix>(rep_); }
  const Element& first() const { return std::get<PairPtr>(rep_)->first; }
  const Element& second() const { return std::get<PairPtr>(rep_)->second; }

  std::string to_string() const;

  friend bool operator==(const Element& a, const Element& b);

private:
  using PairPtr = std::shared_ptr<const std::pair<Element, Element>>;
  std::variant<FunctionElement, Matrix, PairPtr> rep_;
};

}  // namespace ering
