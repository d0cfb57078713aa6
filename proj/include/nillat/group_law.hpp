#pragma once

#include "nillat/lie_algebra.hpp"

namespace nillat {

// Element of the simply connected group G = exp(g), stored as the coordinate
// vector of its logarithm (exponential coordinates of the first kind). The
// product is the BCH polynomial truncated at degree 4, which is exact for
// every algebra of step <= 4.
struct GroupElement {
  AlgebraRef alg;
  RatVec log;
};

GroupElement group_identity(AlgebraRef alg);
GroupElement exp_of(AlgebraRef alg, RatVec log_coords);

bool is_identity(const GroupElement& g);

RatVec bch(const LieAlgebra& g, const RatVec& x, const RatVec& y);

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& a);
// conj(g, h) = g·h·g⁻¹; equals exp(e^{ad X} Y) for g = exp X, h = exp Y.
GroupElement conj(const GroupElement& g, const GroupElement& h);

// e^{ad x} as an exact rational matrix (finite sum by nilpotency).
RatMat exp_ad(const LieAlgebra& g, const RatVec& x);

// An ordered basis whose prefix spans are subalgebras, validated once and
// kept with its inverse for coordinate peeling.
struct MalcevBasis {
  AlgebraRef alg;
  RatMat basis;
  RatMat binv;
};

MalcevBasis make_malcev_basis(const AlgebraRef& alg, const RatMat& basis);

// Coordinates of the second kind: g = exp(t_1 e_1)···exp(t_n e_n).
RatVec malcev_coords(const GroupElement& g, const MalcevBasis& basis);
RatVec malcev_coords(const GroupElement& g, const RatMat& basis);

GroupElement from_malcev(const AlgebraRef& alg, const RatVec& t, const RatMat& basis);
GroupElement from_malcev(const RatVec& t, const MalcevBasis& basis);

}  // namespace nillat
