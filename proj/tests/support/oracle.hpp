#pragma once

#include <cstdint>

#include "odac/cartan.hpp"
#include "odac/liealg.hpp"

namespace odac::oracle {

/// Hard limits for the brute-force baselines; enumeration refuses to start
/// beyond them (never sampled or relaxed).
struct SearchBudget {
  std::uint64_t max_module_elements = std::uint64_t(1) << 16;
  std::uint64_t max_subalgebra_candidates = std::uint64_t(1) << 20;
};

/// Normalizer by full enumeration of the ambient module: keeps every x with
/// [x, g] in H for all generators g, membership tested against the enumerated
/// element set of H. Returns the span of the collected set.
Submodule brute_normalizer(const Submodule& h, const StructureConstants& sc,
                           const SearchBudget& budget = {});

/// Exhaustive search for a family of pairwise-orthogonal abelian Cartan
/// submodules whose sum is direct and spans the algebra. Realistic only for
/// rank-3 algebras over rings with at most 4 elements.
bool brute_odac_search(const AlgebraSpec& spec, const SearchBudget& budget = {});

/// |Q| by direct evaluation of q over all coordinate bitstrings; independent
/// of the field machinery.
std::uint64_t brute_count_Q(unsigned m);

}  // namespace odac::oracle
