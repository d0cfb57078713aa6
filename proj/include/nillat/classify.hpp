#pragma once

#include <optional>

#include "nillat/lattice.hpp"
#include "nillat/normal_forms.hpp"

namespace nillat {

// ---------------------------------------------------------------------------
// G5,2

// Parameter normal form
//   Gamma(p,q,a) = exp((1/p)Z X1) exp(Z((1/q)X2 - (a/pq)X1))
//                  exp(Z X3) exp(Z X4) exp(Z X5),
// p, q >= 1, 0 <= a < q.
struct G52Params {
  Int p = 1, q = 1, alpha = 0;
};

struct G52Reduction {
  G52Params params;
  RatMat phi;  // automorphism with phi(Gamma) = Gamma(p,q,alpha)
};

// Elementary divisors r1 | r2 of [[p, alpha],[0, q]]; complete isomorphism
// invariant for uniform subgroups of G5,2.
struct G52Canonical {
  Int r1 = 1, r2 = 1;
};

UniformSubgroup g52_lattice(const G52Params& params);
G52Reduction reduce_g52(const UniformSubgroup& gamma);
bool g52_equiv(const G52Params& a, const G52Params& b);
G52Canonical canon_g52(const UniformSubgroup& gamma);

// Decides isomorphism through the canonical form; a returned matrix is a
// validated automorphism carrying a onto b. nullopt is a proven "no".
std::optional<RatMat> g52_isomorphism(const UniformSubgroup& a, const UniformSubgroup& b);

// ---------------------------------------------------------------------------
// Block data [[D, m]] shared by the G5,4 and G5,6 classifications: an
// invertible upper-triangular integer block D together with a positive
// integer scale m on the last coordinate.
struct DmTuple {
  IntMat d;
  Int m = 1;
};

// ---------------------------------------------------------------------------
// G5,4

// D is 3x3 upper triangular; the lattice is
//   exp(Z d1) exp(Z d2) exp(Z d3) exp(mZ X4) exp(Z X5)
// with d1..d3 the columns of D in the span of X1..X3.
bool s4_member(const IntMat& d, const Int& m);
UniformSubgroup g54_lattice(const DmTuple& t);

// Column-Hermite reduction of the D block; membership is preserved.
DmTuple s4_hermite_close(const DmTuple& t);

struct G54Canonical {
  DmTuple rep;
  RatMat witness;  // automorphism with witness(Gamma) = lattice of rep
};

G54Canonical canon_g54(const UniformSubgroup& gamma);

// Bounded automorphism search. A returned matrix is a validated isomorphism
// witness; nullopt means none within the bound (never a proof of "no").
std::optional<RatMat> g54_isomorphic_search(const UniformSubgroup& a, const UniformSubgroup& b,
                                            const Int& bound);

// ---------------------------------------------------------------------------
// G5,6

// D is 4x4, upper triangular with (0,3), (1,3), (2,3) zero; the lattice is
//   exp(Z d1) ... exp(Z d4) exp(mZ X5).
bool s6_member(const IntMat& d, const Int& m);
UniformSubgroup g56_lattice(const DmTuple& t);

struct G56Canonical {
  DmTuple rep;
  RatMat witness;
};

G56Canonical canon_g56(const UniformSubgroup& gamma);

// Scale equivalence: [[D,m]] [[D',m']]^{-1} = diag(a^5, a^4, a^3, a^2, a) for
// some rational a. Both tuples must be members. Complete for isomorphism.
bool g56_equivalent(const DmTuple& a, const DmTuple& b);
std::optional<Rat> g56_ratio(const DmTuple& a, const DmTuple& b);

std::optional<RatMat> g56_isomorphism(const UniformSubgroup& a, const UniformSubgroup& b);

// ---------------------------------------------------------------------------
// G4 x R

// Valid when p1, p2 >= 1, 0 <= p3 < 2 p1 and p1 p2 + p3 is even.
struct G4xRParams {
  Int p1 = 1, p2 = 1, p3 = 0;
};

bool g4xr_validate(const G4xRParams& p);

// exp(Z e) exp(Z X1) exp(p1 Z X2) exp(Z(p1 p2 X3 - (p3/2) X2)) exp(Z X4)
UniformSubgroup g4xr_construct(const G4xRParams& p);

// Split of a uniform subgroup of N x R^r along the maximal Abelian factor:
// phi is an automorphism with phi(Gamma) = H x Z^r, and h is the uniform
// subgroup H written in the nilpotent factor N.
struct SplitResult {
  UniformSubgroup h;
  std::size_t r = 0;
  RatMat phi;
};

SplitResult split_abelian_factor(const UniformSubgroup& gamma);

std::optional<RatMat> g4xr_isomorphic_search(const UniformSubgroup& a, const UniformSubgroup& b,
                                             const Int& bound);

}  // namespace nillat
