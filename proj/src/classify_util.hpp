#pragma once

#include <vector>

#include "nillat/group_law.hpp"
#include "nillat/lattice.hpp"
#include "nillat/linalg.hpp"
#include "nillat/lie_algebra.hpp"

// Shared internals of the per-group classification pipelines.
namespace nillat::detail {

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

// Smallest m >= 1 with d | m^2 (d >= 1): per prime p^e in d the answer needs
// p^ceil(e/2), i.e. m = d / s with s the largest integer whose square
// divides d. Denominators here are small, so trial division is fine.
inline Int smallest_square_cover(Int d) {
  require(d >= 1, Err::Internal, "square cover of nonpositive integer");
  Int m = 1;
  for (Int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    for (int k = 0; k < (e + 1) / 2; ++k) m *= p;
  }
  if (d > 1) m *= d;  // leftover prime, exponent 1
  return m;
}

// Least positive integer k such that k*r is an integer.
inline Int denominator_of(const Rat& r) { return den(r); }

// Builds the linear map sending the standard basis to the given image
// columns; images of the remaining basis vectors are derived from bracket
// relations, so the result preserves every defining bracket by construction
// (validated by the caller through is_automorphism).
inline RatMat map_from_columns(std::size_t n, const std::vector<std::pair<std::size_t, RatVec>>& cols) {
  RatMat phi(n, n);
  for (const auto& [j, v] : cols) phi.set_col(j, v);
  return phi;
}

// Automorphism of g5_4 determined by the images of X4 and X5:
// X3 = [X5, X4], X2 = [X5, X3], X1 = [X4, X3].
inline RatMat g54_aut_from_top(const LieAlgebra& g, const RatVec& v4, const RatVec& v5) {
  RatVec v3 = bracket_vec(g, v5, v4);
  RatVec v2 = bracket_vec(g, v5, v3);
  RatVec v1 = bracket_vec(g, v4, v3);
  return map_from_columns(5, {{0, v1}, {1, v2}, {2, v3}, {3, v4}, {4, v5}});
}

// Automorphism of g5_6 determined by the images of X4 and X5:
// X3 = [X5, X4], X2 = [X5, X3], X1 = [X5, X2].
inline RatMat g56_aut_from_top(const LieAlgebra& g, const RatVec& v4, const RatVec& v5) {
  RatVec v3 = bracket_vec(g, v5, v4);
  RatVec v2 = bracket_vec(g, v5, v3);
  RatVec v1 = bracket_vec(g, v5, v2);
  return map_from_columns(5, {{0, v1}, {1, v2}, {2, v3}, {3, v4}, {4, v5}});
}

// Shape test for the 3x3 (g5_4) and 4x4 (g5_6) upper-triangular blocks.
inline bool upper_triangular(const IntMat& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (d(i, j) != 0) return false;
  return true;
}

inline Int diag_product(const IntMat& d) {
  Int p = 1;
  for (std::size_t i = 0; i < d.rows(); ++i) p *= d(i, i);
  return p;
}

// [[D, m]] as a rational block-diagonal square matrix of size d.rows()+1.
inline RatMat dm_block(const IntMat& d, const Int& m) {
  std::size_t n = d.rows() + 1;
  RatMat b(n, n);
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) b(i, j) = Rat(d(i, j));
  b(n - 1, n - 1) = Rat(m);
  return b;
}

inline bool mat_is_integral(const RatMat& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_integer(a(i, j))) return false;
  return true;
}

// Validates a claimed isomorphism witness: phi must be an automorphism and
// must carry gamma exactly onto delta.
inline void check_witness(const RatMat& phi, const UniformSubgroup& gamma,
                          const UniformSubgroup& delta) {
  require(is_automorphism(*gamma.alg, phi), Err::Internal, "witness is not an automorphism");
  require(same_subgroup(map_subgroup(phi, gamma), delta), Err::Internal,
          "witness does not map the subgroup onto the target");
}

}  // namespace nillat::detail
