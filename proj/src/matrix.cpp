#include "odac/matrix.hpp"

namespace odac {

namespace {
void check_shapes(const Matrix& a, const Matrix& b, bool for_product) {
  if (!a.ring() || !b.ring() || (a.ring().get() != b.ring().get() && !a.ring()->same(*b.ring())))
    fail("ring-mismatch", "matrices over different rings");
  if (for_product) {
    if (a.cols() != b.rows()) fail("shape-mismatch", "incompatible shapes for product");
  } else {
    if (a.rows() != b.rows() || a.cols() != b.cols())
      fail("shape-mismatch", "incompatible shapes");
  }
}
}  // namespace

Matrix::Matrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  a_.assign(rows_ * cols_, ring_->zero());
}

Matrix Matrix::identity(const RingPtr& ring, std::size_t n) {
  Matrix m(ring, n, n);
  RingElem one = ring->one();
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RingElem Matrix::trace() const {
  if (rows_ != cols_) fail("shape-mismatch", "trace of a non-square matrix");
  RingElem s = ring_->zero();
  for (std::size_t i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

Matrix Matrix::scaled(const RingElem& c) const {
  Matrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_shapes(a, b, false);
  Matrix r(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_shapes(a, b, false);
  Matrix r(a.ring_, a.rows_, a.cols_);
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_shapes(a, b, true);
  Matrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingElem& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const RingElem& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace odac
