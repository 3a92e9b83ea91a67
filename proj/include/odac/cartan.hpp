#pragma once

#include <string>
#include <vector>

#include "odac/liealg.hpp"

namespace odac {

/// One concrete verification failure with its witness data.
struct OdacFailure {
  enum class Kind { NotAbelian, NotSelfNormalizing, NotOrthogonal, SumNotDirect, SumNotSpanning };

  Kind kind;
  std::size_t comp_i = 0, comp_j = 0;   // component indices (j used for pairs)
  std::size_t gen_i = 0, gen_j = 0;     // generator indices where applicable
  std::vector<RingElem> witness;        // element coordinates where applicable
  std::string detail;                   // rendered one-line description
};

struct OdacReport {
  bool is_odac = false;
  std::vector<OdacFailure> failures;
};

enum class KillingKind { Generic, Closed };

/// [g_i, g_j] = 0 on all generator pairs (suffices by bilinearity).
bool is_abelian(const Submodule& h, const StructureConstants& sc);

/// N = { x : [x, g] in H for every generator g }, computed as the projection
/// of the kernel of the stacked maps x -> ([x, g_i] mod H). Canonical
/// generators.
Submodule normalizer(const Submodule& h, const StructureConstants& sc);

/// Lower central series H, [H,H], [[H,H],H], ... reaches zero. Requires H to
/// be closed under the bracket (Error "not-closed" otherwise). The series is
/// cut at rank iterations.
bool is_nilpotent(const Submodule& h, const StructureConstants& sc);

/// Nilpotent and self-normalizing.
bool is_cartan(const Submodule& h, const StructureConstants& sc);

/// Full verification: every component abelian and self-normalizing, pairwise
/// Killing-orthogonal on generators, and the sum direct and spanning. Every
/// failure carries a concrete witness; failures are data, not errors.
OdacReport verify_odac(const std::vector<Submodule>& components, const StructureConstants& sc,
                       KillingKind killing = KillingKind::Generic);

}  // namespace odac
