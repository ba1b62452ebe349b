#pragma once

#include <optional>

#include "coxbraid/linalg.hpp"

namespace coxbraid {

// Strict-cone feasibility: is there v in span(subspace_basis) with
// f(v) > 0 for every strict functional and g(v) >= 0 for every weak one?
// Functionals act by the plain dot product; callers bake in any Gram form.
struct ConeProblem {
  int ambient_dim = 0;
  FMat subspace_basis;  // vectors spanning the admissible subspace
  FMat strict;          // functionals required > 0
  FMat weak;            // functionals required >= 0
};

struct ConeResult {
  bool feasible = false;
  std::optional<FVec> witness;  // satisfies every constraint exactly
};

// By scale-invariance the strict system {f(v) > 0} is solved as the exact
// LP feasibility problem {f(v) >= 1, g(v) >= 0} with a phase-one simplex
// under Bland's rule over the ordered field.
ConeResult cone_strictly_feasible(const ConeProblem& p);

}  // namespace coxbraid
