#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ering/rational.hpp"

namespace ering {

/// Dense square matrix over the rationals. Models the enveloping ring of the
/// matrix carrier, so products of symmetric matrices are allowed to be
/// non-symmetric.
class Matrix {
public:
  Matrix() = default;
  /// n x n zero matrix.
  explicit Matrix(std::size_t n);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Rank-one matrix v v^T.
  static Matrix outer(const std::vector<Rational>& v);

  std::size_t dim() const { return n_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  bool is_symmetric() const;
  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix a);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

private:
  void require_same_dim(const Matrix& other) const;

  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

/// A matrix known to be symmetric. Symmetry is checked at construction.
class SymMatrix {
public:
  /// Throws std::invalid_argument if `m` is not symmetric or is 0 x 0.
  explicit SymMatrix(Matrix m);
  SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) = default;

private:
  Matrix m_;
};

}  // namespace ering
