#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "odac/gf2m.hpp"
#include "odac/linalg.hpp"
#include "odac/matrix.hpp"

namespace odac {

enum class Family { gl, sl, sp, so };

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Descriptor of a classical matrix Lie algebra over a ring. sp requires an
/// even size; sp and so require odd characteristic.
struct AlgebraSpec {
  Family family;
  std::size_t n;  // matrix size
  RingPtr ring;

  AlgebraSpec(Family f, std::size_t size, RingPtr r);

  /// Free-module rank: gl n^2, sl n^2-1, sp_{2k} k(2k+1), so_n n(n-1)/2.
  std::size_t rank() const;
  bool same(const AlgebraSpec& o) const;
};

/// Basis of the algebra in its canonical order. For sp of size 2^(m+1) this
/// is the generalized Pauli basis indexed by Q in enumeration order; other
/// even sp sizes use the block basis; so uses X_(i,j) = e_ij - e_ji, i < j
/// lexicographic; gl/sl use matrix units (plus diagonal differences for sl).
std::vector<Matrix> standard_basis(const AlgebraSpec& spec);

/// Kronecker product of the factors D^(a_i) P^(b_i) read off the coordinates
/// of w, leftmost factor from coordinate 1; D = diag(1,-1), P = antidiag(1,1).
/// Requires odd characteristic.
Matrix jw_matrix(const SympBasis& basis, SympVector w, const RingPtr& ring);

/// X K + K X^T == 0 with K = [[0, I], [-I, 0]].
bool in_sp(const Matrix& x);

/// sum over entries of tr(A*B) without forming the product.
RingElem trace_product(const Matrix& a, const Matrix& b);

/// Coordinates of a matrix in the standard basis; nullopt when the matrix
/// does not lie in the algebra's span.
std::optional<std::vector<RingElem>> matrix_coords(const AlgebraSpec& spec,
                                                   const std::vector<Matrix>& basis,
                                                   const Matrix& m);

Matrix from_coords(const AlgebraSpec& spec, const std::vector<Matrix>& basis,
                   const std::vector<RingElem>& coords);

/// Structure constants c_ij^k with [v_i, v_j] = sum_k c_ij^k v_k, stored
/// sparsely per (i, j). Built once per algebra; immutable afterwards.
class StructureConstants {
public:
  explicit StructureConstants(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Matrix>& basis() const { return basis_; }

  using Term = std::pair<std::uint32_t, RingElem>;  // (k, c_ij^k)
  using Terms = boost::container::small_vector<Term, 2>;
  const Terms& terms(std::size_t i, std::size_t j) const { return table_[i * rank_ + j]; }
  RingElem c(std::size_t i, std::size_t j, std::size_t k) const;

  std::vector<RingElem> bracket_coords(const std::vector<RingElem>& x,
                                       const std::vector<RingElem>& y) const;
  /// Matrix of [x, .] in the basis (column j = coords of [x, v_j]).
  Matrix ad(const std::vector<RingElem>& x) const;
  /// K(x, y) = Tr(ad x . ad y), exact in the ring.
  RingElem killing(const std::vector<RingElem>& x, const std::vector<RingElem>& y) const;
  RingElem killing_from_ad(const Matrix& adx, const Matrix& ady) const;

private:
  AlgebraSpec spec_;
  std::size_t rank_;
  std::vector<Matrix> basis_;
  std::vector<Terms> table_;
};

/// Closed-form Killing coefficient times tr(AB): (2n+2)tr on sp_{2n} and
/// (2n-2)/(2n-3)tr on so_{2n}/so_{2n-1}, i.e. size+2 for sp, size-2 for so.
/// No closed form is provided for gl/sl (Error "unsupported-family").
RingElem killing_closed(Family family, std::size_t size, const Matrix& a, const Matrix& b);

/// Entrywise image of a matrix under the local-factor isomorphism, and back.
std::vector<Matrix> phi_decompose(const LocalFactorization& lf, const Matrix& m);
Matrix phi_compose(const LocalFactorization& lf, const std::vector<Matrix>& parts);

/// Finitely generated submodule of an algebra, generators held as coordinate
/// vectors over the standard basis.
struct Submodule {
  AlgebraSpec ambient;
  std::vector<std::vector<RingElem>> generators;
  std::string label;
};

Matrix generator_matrix(const Submodule& s);  // generators as rows
bool submodule_equal(const Submodule& a, const Submodule& b);

}  // namespace odac
