#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "odac/cartan.hpp"
#include "odac/liealg.hpp"

namespace odac {

/// Partition of the edges of K_{2n} into 2n-1 perfect matchings, built by the
/// round-robin rotation with vertex 2n fixed; class M_k contains {k, 2n}.
/// Vertices are 1-based; pairs are stored (min, max).
struct OneFactorization {
  std::size_t half;  // n
  std::vector<std::vector<std::pair<int, int>>> classes;
};

OneFactorization one_factorization(std::size_t two_n);

struct Provenance {
  std::string tag;  // sl-pauli | sp-restricted | so-even | so-odd | product-lift | external
  std::vector<std::pair<std::string, std::string>> params;
};

struct Decomposition {
  AlgebraSpec algebra;
  std::vector<Submodule> components;
  Provenance provenance;
};

/// gcd(char R, n) = 1 is necessary for a decomposition of sl_n(R) to exist;
/// a failure carries the obstruction scalar matrix in the offending local
/// factor (I_n, or p^(a-b) I_n when the characteristic carries the larger
/// power of p). Pass does not imply existence.
struct SlNecessaryCheck {
  bool pass = false;
  std::uint64_t gcd = 1;
  std::uint64_t prime = 0;              // witness prime when failing
  std::size_t factor_index = 0;         // offending local factor
  RingPtr factor;
  std::optional<Matrix> witness;        // scalar matrix over the factor
  std::string witness_scalar;           // rendered scalar, e.g. "3"
};

SlNecessaryCheck necessary_check_sl(std::size_t n, const RingPtr& ring);

/// sl_{2^(m+1)}(R): one component per line of W (alpha in field order, then
/// the infinity line), each spanned over R by the Pauli matrices of the line.
Decomposition construct_sl_pauli(unsigned m, const RingPtr& ring);

/// sp_{2^(m+1)}(R), m >= 1: the restriction of the sl decomposition, keeping
/// from each line only the Pauli matrices indexed by Q.
Decomposition construct_sp_restricted(unsigned m, const RingPtr& ring);

/// so_{2n}(R): component k spanned by { X_(i,j) : {i,j} in M_k }.
Decomposition construct_so_even(std::size_t n, const RingPtr& ring);

/// so_{2n-1}(R), n >= 2: component k spanned by M_k with the pair {k, 2n}
/// deleted.
Decomposition construct_so_odd(std::size_t n, const RingPtr& ring);

/// Assembles a decomposition over R from decompositions over its local
/// factors (same family and size, factor rings matching the canonical
/// factorization of R in order). Shorter factor lists are padded with zero
/// submodules; component j is the preimage of the tuple of j-th components.
Decomposition lift_product(const std::vector<Decomposition>& per_factor, const RingPtr& ring);

/// Projection of a decomposition onto local factor i; projections of a valid
/// decomposition verify over the factor.
Decomposition project_decomposition(const Decomposition& d, std::size_t factor_index);

}  // namespace odac
