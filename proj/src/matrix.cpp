#include "ering/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace ering {

Matrix::Matrix(std::size_t n) : n_(n), data_(n * n) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) : n_(rows.size()) {
  data_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw std::invalid_argument("Matrix: rows must form a square grid");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::outer(const std::vector<Rational>& v) {
  Matrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * v[j];
  return m;
}

bool Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Rational Matrix::trace() const {
  Rational t;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void Matrix::require_same_dim(const Matrix& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Matrix: dimension mismatch");
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_dim(other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_dim(other);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  a.require_same_dim(b);
  const std::size_t n = a.n_;
  Matrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(const Rational& s, Matrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.dim() == 0) throw std::invalid_argument("SymMatrix: dimension must be positive");
  if (!m_.is_symmetric()) throw std::invalid_argument("SymMatrix: matrix is not symmetric");
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows) : SymMatrix(Matrix(rows)) {}

}  // namespace ering
