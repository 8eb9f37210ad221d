#include "oracles.hpp"

#include <algorithm>

namespace oracle {

Rational laplace_det(const Matrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational det = 0;
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != col) minor(i - 1, k++) = m(i, j);
    const Rational term = m(0, col) * laplace_det(minor);
    det = col % 2 == 0 ? det + term : det - term;
  }
  return det;
}

namespace {

Rational principal_minor(const Matrix& m, const std::vector<std::size_t>& idx) {
  Matrix sub(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(idx[i], idx[j]);
  return laplace_det(sub);
}

template <class F>
void for_each_subset(std::size_t n, F f) {
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    f(idx);
  }
}

}  // namespace

std::vector<Rational> minor_sums(const Matrix& m) {
  std::vector<Rational> c(m.dim(), Rational(0));
  for_each_subset(m.dim(), [&](const std::vector<std::size_t>& idx) { c[idx.size() - 1] += principal_minor(m, idx); });
  return c;
}

bool all_principal_minors_nonnegative(const Matrix& m) {
  bool ok = true;
  for_each_subset(m.dim(), [&](const std::vector<std::size_t>& idx) { ok = ok && principal_minor(m, idx).sign() >= 0; });
  return ok;
}

Element fn(std::vector<Rational> values) { return Element::function(std::move(values)); }

Element mat(std::initializer_list<std::initializer_list<Rational>> rows) { return Element(Matrix(rows)); }

bool pointwise_leq(const Element& a, const Element& b) {
  for (std::size_t i = 0; i < a.values().size(); ++i)
    if (a.values()[i] > b.values()[i]) return false;
  return true;
}

}  // namespace oracle

namespace oracle {

std::vector<Element> three_variable_coexistence(const ering::Carrier& c, const Element& e, const Element& f,
                                                const std::vector<Element>& effects) {
  std::vector<Element> ds;
  for (const auto& d : effects)
    for (const auto& e1 : effects) {
      if (c.add(d, e1) != e) continue;
      for (const auto& f1 : effects)
        if (c.add(d, f1) == f && c.is_in_E(c.add(c.add(d, e1), f1))) ds.push_back(d);
    }
  return ds;
}

}  // namespace oracle

namespace oracle {

namespace {

std::optional<Element> extreme(const std::vector<Element>& universe, const std::vector<Element>& bounds,
                               bool lower) {
  auto before = [&](const Element& x, const Element& y) { return lower ? pointwise_leq(x, y) : pointwise_leq(y, x); };
  std::vector<Element> candidates;
  for (const auto& u : universe)
    if (std::all_of(bounds.begin(), bounds.end(), [&](const Element& b) { return before(u, b); }))
      candidates.push_back(u);
  for (const auto& c : candidates)
    if (std::all_of(candidates.begin(), candidates.end(), [&](const Element& o) { return before(o, c); })) return c;
  return std::nullopt;
}

}  // namespace

std::optional<Element> brute_infimum(const std::vector<Element>& universe, const Element& a, const Element& b) {
  return extreme(universe, {a, b}, true);
}

std::optional<Element> brute_supremum(const std::vector<Element>& universe, const Element& a, const Element& b) {
  return extreme(universe, {a, b}, false);
}

}  // namespace oracle
