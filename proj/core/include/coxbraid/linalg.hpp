#pragma once

#include <optional>
#include <vector>

#include "coxbraid/cyclotomic.hpp"

namespace coxbraid {

using FVec = std::vector<FieldElement>;
using FMat = std::vector<FVec>;  // row-major

FVec fvec_zero(const RealCyclotomicField* f, int n);
FMat fmat_identity(const RealCyclotomicField* f, int n);
FMat fmat_zero(const RealCyclotomicField* f, int rows, int cols);

FVec fvec_add(const FVec& a, const FVec& b);
FVec fvec_sub(const FVec& a, const FVec& b);
FVec fvec_scale(const FVec& a, const FieldElement& c);
bool fvec_is_zero(const FVec& a);
FieldElement dot(const FVec& a, const FVec& b);

FMat fmat_mul(const FMat& a, const FMat& b);
FVec fmat_apply(const FMat& a, const FVec& v);
FMat fmat_sub(const FMat& a, const FMat& b);
FMat fmat_transpose(const FMat& a);

int rank(FMat m);
// Exact basis of the right kernel, via fraction-free (Bareiss) elimination.
FMat kernel(const FMat& m);
// Independent columns of m, returned as vectors (a basis of the column space).
FMat column_space(const FMat& m);
// Solves a x = b; returns one solution or nothing.
std::optional<FVec> solve(const FMat& a, const FVec& b);

// True iff v lies in the span of the rows of basis.
bool in_span(const FMat& basis, const FVec& v);

}  // namespace coxbraid
