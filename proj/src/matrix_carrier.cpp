#include <algorithm>
#include <stdexcept>

#include "ering/carrier.hpp"
#include "ering/errors.hpp"
#include "ering/exact_numeric.hpp"

namespace ering {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Orthogonal projection onto span{v}: v v^T / (v^T v). Requires v != 0.
Matrix line_projection(const std::vector<Rational>& v) { return (Rational(1) / dot(v, v)) * Matrix::outer(v); }

class MatrixCarrier final : public Carrier {
public:
  explicit MatrixCarrier(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("matrix carrier: dimension must be positive");
  }

  CarrierKind kind() const override { return CarrierKind::matrix_model; }
  std::string describe() const override { return "matrix[n=" + std::to_string(n_) + "]"; }

  Element zero() const override { return Matrix(n_); }
  Element one() const override { return Matrix::identity(n_); }
  Element add(const Element& a, const Element& b) const override { return m(a) + m(b); }
  Element negate(const Element& a) const override { return -m(a); }
  Element multiply(const Element& a, const Element& b) const override { return m(a) * m(b); }
  Element scale(const Rational& s, const Element& a) const override { return s * m(a); }

  bool has_shape(const Element& a) const override { return a.is_matrix() && a.matrix().dim() == n_; }
  bool in_G(const Element& a) const override { return has_shape(a) && a.matrix().is_symmetric(); }
  bool is_in_Eplus(const Element& a) const override { return in_G(a) && is_psd(SymMatrix(a.matrix())); }

  bool enumerable_E() const override { return false; }
  bool commutative() const override { return n_ == 1; }
  bool pointwise() const override { return n_ == 1; }
  bool finite_projections() const override { return n_ == 1; }

  std::vector<Element> effects() const override {
    throw CapabilityError(describe() + ": the effect set is infinite; use seeded sampling");
  }

  std::vector<Element> landmark_effects() const override {
    const Matrix id = Matrix::identity(n_);
    const Rational half(1, 2);
    std::vector<Element> out{Matrix(n_), id, half * id};
    if (n_ >= 2) {
      const Matrix p1 = unit(0);
      const Matrix q1 = q_one();
      out.insert(out.end(), {p1, id - p1, q1, id - q1, half * p1, half * q1});
    }
    return out;
  }

  std::vector<Element> projection_candidates(Rng& rng, std::size_t count, std::size_t bound) const override {
    const Matrix id = Matrix::identity(n_);
    std::vector<Element> out{Matrix(n_), id};
    if (n_ == 1) return out;
    out.insert(out.end(), {unit(0), id - unit(0), q_one(), id - q_one()});
    std::size_t attempts = 0;
    while (out.size() < count && attempts++ < 50 * count) {
      const auto v = random_vector(rng, bound);
      Matrix p = line_projection(v);
      if (n_ >= 3 && rng.coin()) {
        // add an orthogonal line: Gram-Schmidt on a second random vector
        std::vector<Rational> w = random_vector(rng, bound);
        const Rational c = dot(w, v) / dot(v, v);
        for (std::size_t i = 0; i < n_; ++i) w[i] -= c * v[i];
        if (dot(w, w).sign() > 0) p += line_projection(w);
      }
      Element e = rng.coin() ? Element(p) : Element(id - p);
      if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
    }
    return out;
  }

  Element sample_effect(Rng& rng, std::size_t bound) const override {
    const Matrix id = Matrix::identity(n_);
    const auto b = static_cast<std::int64_t>(std::max<std::size_t>(2, bound));
    const Rational t(rng.between(0, b), b);  // convex weight in [0, 1]
    Matrix e;
    switch (rng.below(5)) {
      case 0:  // rank-one projection
        e = line_projection(random_vector(rng, bound));
        break;
      case 1: {  // Gram matrix scaled below 1: lambda_max <= trace
        Matrix g(n_);
        for (std::size_t i = 0; i < n_; ++i)
          for (std::size_t j = 0; j < n_; ++j) g(i, j) = rng.between(-b, b);
        const Matrix gram = g.transpose() * g;
        const Rational tr = gram.trace();
        e = tr.is_zero() ? Matrix(n_) : (t / tr) * gram;
        break;
      }
      case 2: {  // diagonal
        e = Matrix(n_);
        for (std::size_t i = 0; i < n_; ++i) e(i, i) = Rational(rng.between(0, b), b);
        break;
      }
      case 3: {  // convex combination of two line projections
        const Matrix first = line_projection(random_vector(rng, bound));
        const Matrix second = line_projection(random_vector(rng, bound));
        e = t * first + (Rational(1) - t) * second;
        break;
      }
      default:  // scaled line projection
        e = t * line_projection(random_vector(rng, bound));
        break;
    }
    return rng.coin() ? Element(e) : Element(id - e);
  }

  Element sample_raw(Rng& rng, std::size_t bound) const override {
    const auto b = static_cast<std::int64_t>(std::max<std::size_t>(1, bound));
    Matrix g(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j) {
        g(i, j) = Rational(rng.between(-b, b), rng.between(1, 2));
        g(j, i) = g(i, j);
      }
    return g;
  }

  std::vector<Element> decompose_positive(const Element& a) const override {
    if (!is_in_Eplus(a)) throw PreconditionError("decompose_positive: " + a.to_string() + " is not PSD");
    if (a.matrix().is_zero()) return {};
    // trace bounds the top eigenvalue of a PSD matrix
    const std::int64_t copies = std::max<std::int64_t>(1, a.matrix().trace().ceil_int64());
    return std::vector<Element>(static_cast<std::size_t>(copies), scale(Rational(1, copies), a));
  }

  std::optional<std::vector<Element>> cone_witness(const Element& a) const override {
    if (!in_G(a)) return std::nullopt;
    const auto terms = rank_one_decomposition(SymMatrix(a.matrix()));
    if (!terms) return std::nullopt;
    std::vector<Element> out;
    for (const auto& [weight, v] : *terms) {
      // weight * v v^T has the single nonzero eigenvalue weight * |v|^2
      const Rational eig = weight * dot(v, v);
      const std::int64_t copies = std::max<std::int64_t>(1, eig.ceil_int64());
      const Matrix piece = (weight / Rational(copies)) * Matrix::outer(v);
      for (std::int64_t c = 0; c < copies; ++c) out.emplace_back(piece);
    }
    return out;
  }

  std::int64_t order_unit_upper_bound(const Element& g) const override {
    // Gershgorin: every eigenvalue is at most the largest absolute row sum.
    Rational best = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      Rational row;
      for (std::size_t j = 0; j < n_; ++j) row += m(g)(i, j).abs();
      best = std::max(best, row);
    }
    return best.ceil_int64();
  }

  std::vector<Element> spanning_set() const override {
    std::vector<Element> out;
    for (std::size_t i = 0; i < n_; ++i) out.emplace_back(unit(i));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        Matrix s(n_);
        s(i, j) = 1;
        s(j, i) = 1;
        out.emplace_back(std::move(s));
      }
    return out;
  }

  std::vector<Rational> coordinates(const Element& g) const override {
    const Matrix& x = m(g);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n_; ++i) out.push_back(x(i, i));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) out.push_back(x(i, j));
    return out;
  }

  std::size_t point_count() const override { return pointwise() ? 1 : Carrier::point_count(); }
  std::vector<Rational> point_values(const Element& g) const override {
    if (!pointwise()) return Carrier::point_values(g);
    return {m(g)(0, 0)};
  }
  Element from_point_values(std::span<const Rational> values) const override {
    if (!pointwise() || values.size() != 1) return Carrier::from_point_values(values);
    return Matrix{{values[0]}};
  }

private:
  const Matrix& m(const Element& a) const {
    if (!has_shape(a)) throw std::invalid_argument(describe() + ": element " + a.to_string() + " has the wrong shape");
    return a.matrix();
  }

  Matrix unit(std::size_t i) const {
    Matrix e(n_);
    e(i, i) = 1;
    return e;
  }

  // Projection onto span{e0 + e1}.
  Matrix q_one() const {
    std::vector<Rational> v(n_, Rational(0));
    v[0] = 1;
    v[1] = 1;
    return line_projection(v);
  }

  std::vector<Rational> random_vector(Rng& rng, std::size_t bound) const {
    const auto b = static_cast<std::int64_t>(std::max<std::size_t>(1, bound));
    std::vector<Rational> v(n_);
    bool nonzero = false;
    for (auto& x : v) {
      x = rng.between(-b, b);
      nonzero = nonzero || !x.is_zero();
    }
    if (!nonzero) v[rng.below(n_)] = 1;
    return v;
  }

  std::size_t n_;
};

}  // namespace

CarrierPtr make_matrix_carrier(std::size_t n) { return std::make_shared<const MatrixCarrier>(n); }

}  // namespace ering
