#pragma once

#include <optional>
#include <vector>

#include "ering/matrix.hpp"
#include "ering/rational.hpp"

namespace ering {

/// Coefficients c_1..c_n of det(tI - A) = t^n - c_1 t^{n-1} + c_2 t^{n-2} - ...
///
/// c_k is the sum of the k x k principal minors of A. Computed exactly with
/// the Faddeev-LeVerrier recurrence, which only divides by integers 1..n.
std::vector<Rational> char_poly_coeffs(const SymMatrix& a);

/// A real symmetric matrix is positive semidefinite iff every c_k >= 0.
bool is_psd(const SymMatrix& a);

struct RankOneTerm {
  Rational weight;              // > 0
  std::vector<Rational> vector;
};

/// Writes A as a sum of weight * v v^T with positive weights, using symmetric
/// Gaussian elimination (an LDL^T factorization without square roots).
/// Returns nullopt exactly when A is not positive semidefinite.
///
/// This is an independent second route to positivity; is_psd never calls it.
std::optional<std::vector<RankOneTerm>> rank_one_decomposition(const SymMatrix& a);

}  // namespace ering
