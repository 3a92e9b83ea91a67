#pragma once

#include <cstddef>
#include <vector>

#include "odac/ring.hpp"

namespace odac {

/// Dense matrix over a finite commutative ring, row-major, entries always
/// canonical representatives. Immutable use is the norm; in-place mutation is
/// confined to construction code.
class Matrix {
public:
  Matrix() = default;
  Matrix(RingPtr ring, std::size_t rows, std::size_t cols);  // zero-filled
  static Matrix identity(const RingPtr& ring, std::size_t n);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  RingElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RingElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<RingElem>& entries() const { return a_; }

  Matrix transpose() const;
  RingElem trace() const;
  bool is_zero() const;
  Matrix scaled(const RingElem& c) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  bool operator==(const Matrix& o) const;

private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RingElem> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix bracket(const Matrix& a, const Matrix& b);  // ab - ba

}  // namespace odac
