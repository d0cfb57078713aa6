#pragma once

#include <optional>
#include <vector>

#include "nillat/matrix.hpp"

namespace nillat {

// Reduced row echelon form with the pivot column list.
struct Rref {
  RatMat r;
  std::vector<std::size_t> pivots;
};

Rref rref(RatMat a);

std::size_t rank(const RatMat& a);
Rat det(const RatMat& a);
Int det(const IntMat& a);
RatMat inverse(const RatMat& a);

// Exact solution of A·x = b, or nullopt if inconsistent. Free variables are 0.
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

// Basis of the exact null space. Vectors are normalized to primitive integer
// form with positive leading coordinate; one vector per free column, in
// column order.
std::vector<RatVec> kernel(const RatMat& a);

// Scale a nonzero rational vector to a primitive integer vector whose first
// nonzero coordinate is positive.
RatVec primitive(const RatVec& v);

// Canonical basis of the column span: reduced column echelon form with zero
// columns dropped. Two matrices span the same subspace iff their forms agree.
RatMat col_rref(const RatMat& a);

bool subspace_contains(const RatMat& basis, const RatVec& v);
bool subspace_leq(const RatMat& a, const RatMat& b);   // span(a) ⊆ span(b)
bool subspace_equal(const RatMat& a, const RatMat& b);
RatMat subspace_sum(const RatMat& a, const RatMat& b);
RatMat subspace_intersect(const RatMat& a, const RatMat& b);

}  // namespace nillat
