#pragma once

#include <vector>

#include "nillat/matrix.hpp"

namespace nillat {

// Smith normal form U·A·V = S with U, V unimodular, S diagonal with positive
// elementary divisors d_1 | d_2 | ... | d_r. A zero input is reported through
// the `zero` flag (empty divisor list) instead of an exception.
struct SnfResult {
  IntMat u, s, v;
  std::vector<Int> divisors;
  bool zero = false;
};

SnfResult snf(const IntMat& a);

// Column-style Hermite normal form A·T = H with T ∈ GL(n,ℤ):
// h_ij = 0 for i > j, h_ii > 0, and 0 ≤ h_ij < h_ii for i < j. Requires full
// row rank; trailing n−m columns of H are zero. The rational overload treats
// the columns as generators of a finitely generated ℤ-module of rational
// vectors and produces the same canonical reduced form.
struct HnfResult {
  IntMat h;
  IntMat t;
};

struct RatHnfResult {
  RatMat h;
  IntMat t;
};

HnfResult hnf(const IntMat& a);
RatHnfResult hnf(const RatMat& a);

}  // namespace nillat
