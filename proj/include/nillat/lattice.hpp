#pragma once

#include <cstdint>
#include <vector>

#include "nillat/group_law.hpp"
#include "nillat/lie_algebra.hpp"

namespace nillat {

// A finitely generated uniform subgroup Gamma = exp(Z e1) ... exp(Z en),
// stored through the logs of its generators (columns of `basis`, a weak
// Malcev basis of the ambient algebra).  `verified` records whether the
// closure certificate has been checked for this generating tuple.
struct UniformSubgroup {
  AlgebraRef alg;
  RatMat basis;
  bool verified = false;
};

inline constexpr std::uint64_t kDefaultAuditSeed = 1729;

// Validates that `basis` is an invertible weak Malcev basis; the result
// starts out unverified.
UniformSubgroup make_subgroup(AlgebraRef alg, const RatMat& basis);

// Membership: g lies in the product set iff its Malcev coordinates with
// respect to the subgroup's basis are all integers.
bool contains(const UniformSubgroup& gamma, const GroupElement& g);
bool contains(const MalcevBasis& mb, const GroupElement& g);

// Checks that the generating tuple is closed under the group operations:
// for every i < j the conjugates exp(ej) exp(±ei) exp(ej)^-1 and the product
// exp(ei) exp(ej) must be members, followed by a randomized audit of 100
// products of integer-coordinate words.  Sets gamma.verified.
bool verify_closure(UniformSubgroup& gamma, std::uint64_t seed = kDefaultAuditSeed);

// True iff every column of h solves exactly in the rational coordinate
// system spanned by the subgroup's log generators.
bool is_rational_subspace(const UniformSubgroup& gamma, const Subspace& h);

// Logs d1..dk with Gamma ∩ exp(h) = exp(Z d1) ... exp(Z dk), for a rational
// subalgebra h.  Requires a verified subgroup.
std::vector<LieElement> intersect_with_rational_subgroup(const UniformSubgroup& gamma,
                                                         const Subspace& h);

// Re-coordinatizes gamma on a basis adapted to the given increasing chain of
// rational ideals: the new tuple generates the same group and each chain
// member is spanned by a prefix of the new basis.  Requires verified input;
// the output is re-verified.
UniformSubgroup basis_through_ideals(const UniformSubgroup& gamma,
                                     const std::vector<Subspace>& chain);

// Pushes a subgroup through an invertible linear map (normally an
// automorphism; closure is preserved only in that case).
UniformSubgroup map_subgroup(const RatMat& phi, const UniformSubgroup& gamma);

// Set equality of two verified subgroups via mutual generator membership.
bool same_subgroup(const UniformSubgroup& a, const UniformSubgroup& b);

// exp(t1 e1) ... exp(tn en) for integer coordinates t.
GroupElement subgroup_word(const UniformSubgroup& gamma, const std::vector<Int>& t);

// A basis of g whose column prefixes run through every member of the given
// increasing chain of ideals, one ideal per prefix dimension, with every
// prefix span itself an ideal.
RatMat strong_flag_through(const AlgebraRef& alg, const std::vector<Subspace>& chain);

// A basis of g whose first dim(h) columns span the subalgebra h and whose
// prefixes are all subalgebras.
RatMat weak_flag_through_subalgebra(const AlgebraRef& alg, const RatMat& h);

}  // namespace nillat
