#pragma once

#include <optional>
#include <vector>

#include "odac/matrix.hpp"

namespace odac {

/// Canonical row form of the row space of M, zero rows dropped: the Howell
/// normal form over Z_{p^a} (reduced row echelon form over fields). Product
/// rings and composite moduli are decomposed into local factors, reduced
/// componentwise and recombined; the result is canonical per row space.
Matrix howell_form(const Matrix& m);

/// Prepared exact solver for A x = b over a finite commutative ring, with the
/// right kernel as a by-product. Construction does the elimination once;
/// solve() is then a cheap reduction. Immutable and safe to share.
class LinearSolver {
public:
  explicit LinearSolver(const Matrix& a);

  std::optional<std::vector<RingElem>> solve(const std::vector<RingElem>& b) const;
  /// Generators of { x : A x = 0 }, canonical.
  const std::vector<std::vector<RingElem>>& kernel() const { return kernel_; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

private:
  struct EngineRow {
    std::vector<RingElem> a;  // length rows_ (image part)
    std::vector<RingElem> u;  // length cols_ (transform part)
    std::size_t pivot;        // pivot column within the combined width
  };

  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  bool local_ = true;
  std::vector<EngineRow> image_rows_;                 // pivots in the image part
  std::vector<std::vector<RingElem>> kernel_;
  // componentwise route for products / composite moduli
  std::vector<LinearSolver> parts_;
  std::shared_ptr<LocalFactorization> lf_;
};

std::vector<std::vector<RingElem>> kernel(const Matrix& m);
std::optional<std::vector<RingElem>> solve(const Matrix& m, const std::vector<RingElem>& b);

/// Row space of a generator matrix (rows = generators), with membership
/// testing backed by a prepared solve against the transpose.
class RowSpace {
public:
  explicit RowSpace(const Matrix& generators);

  bool contains(const std::vector<RingElem>& v) const;
  const Matrix& canonical() const { return canonical_; }
  bool operator==(const RowSpace& o) const { return canonical_ == o.canonical_; }

private:
  Matrix canonical_;
  LinearSolver solver_;  // of generators^T
};

}  // namespace odac
