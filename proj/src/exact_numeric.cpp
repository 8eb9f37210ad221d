#include "ering/exact_numeric.hpp"

namespace ering {

std::vector<Rational> char_poly_coeffs(const SymMatrix& sym) {
  const Matrix& a = sym.matrix();
  const std::size_t n = a.dim();
  // p(t) = t^n + a_1 t^{n-1} + ... + a_n, with M_k = A M_{k-1} + a_{k-1} I,
  // a_k = -tr(A M_k) / k, M_0 = 0, a_0 = 1.
  std::vector<Rational> coeffs;
  coeffs.reserve(n);
  Matrix m = Matrix::identity(n);  // M_1
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = a * m;
    const Rational ak = -am.trace() / Rational(static_cast<std::int64_t>(k));
    // c_k = (-1)^k a_k
    coeffs.push_back(k % 2 == 0 ? ak : -ak);
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += ak;
    m = std::move(am);
  }
  return coeffs;
}

bool is_psd(const SymMatrix& a) {
  // a negative diagonal entry is a negative 1x1 principal minor
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a(i, i).sign() < 0) return false;
  for (const auto& c : char_poly_coeffs(a))
    if (c.sign() < 0) return false;
  return true;
}

std::optional<std::vector<RankOneTerm>> rank_one_decomposition(const SymMatrix& sym) {
  Matrix s = sym.matrix();
  const std::size_t n = s.dim();
  std::vector<RankOneTerm> terms;
  std::vector<bool> eliminated(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (eliminated[i]) continue;
      if (s(i, i).sign() < 0) return std::nullopt;
      if (pivot == n && s(i, i).sign() > 0) pivot = i;
    }
    if (pivot == n) {
      // Remaining diagonal is zero; a PSD Schur complement must then vanish.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!eliminated[i] && !eliminated[j] && !s(i, j).is_zero()) return std::nullopt;
      break;
    }
    const Rational d = s(pivot, pivot);
    std::vector<Rational> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = s(i, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (col[i].is_zero()) continue;
      const Rational scaled = col[i] / d;
      for (std::size_t j = 0; j < n; ++j) s(i, j) -= scaled * col[j];
    }
    eliminated[pivot] = true;
    std::vector<Rational> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = col[i] / d;
    terms.push_back({d, std::move(v)});
  }
  return terms;
}

}  // namespace ering
