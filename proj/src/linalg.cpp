#include "nillat/linalg.hpp"

#include <numeric>

namespace nillat {

Rref rref(RatMat a) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < a.rows() && a(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    a.row_swap(pr, sel);
    Rat inv = Rat(1) / a(pr, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(pr, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pr || a(r, c) == 0) continue;
      Rat f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RatMat& a) { return rref(a).pivots.size(); }

Rat det(const RatMat& a) {
  require(a.rows() == a.cols(), Err::DimensionMismatch, "det of non-square matrix");
  RatMat m = a;
  Rat d(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t sel = c;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) return Rat(0);
    if (sel != c) {
      m.row_swap(c, sel);
      d = -d;
    }
    d *= m(c, c);
    Rat inv = Rat(1) / m(c, c);
    for (std::size_t r = c + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Rat f = m(r, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(c, j);
    }
  }
  return d;
}

Int det(const IntMat& a) { return to_int(det(to_rat(a))); }

RatMat inverse(const RatMat& a) {
  require(a.rows() == a.cols(), Err::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = a.rows();
  RatMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref rr = rref(std::move(aug));
  require(rr.pivots.size() == n && rr.pivots[n - 1] == n - 1, Err::RankDeficient,
          "matrix not invertible");
  RatMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.r(i, n + j);
  return inv;
}

std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
  require(b.size() == a.rows(), Err::DimensionMismatch, "rhs length");
  RatMat aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref rr = rref(std::move(aug));
  for (std::size_t k = 0; k < rr.pivots.size(); ++k)
    if (rr.pivots[k] == a.cols()) return std::nullopt;
  RatVec x(a.cols());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.r(k, a.cols());
  return x;
}

RatVec primitive(const RatVec& v) {
  Int l = 1, g = 0;
  for (const Rat& x : v) l = lcm(l, den(x));
  RatVec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = v[i] * l;
    g = gcd(g, num(w[i]));
  }
  require(g != 0, Err::Internal, "primitive of zero vector");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != 0) {
      if (num(w[i]) < 0) g = -g;
      break;
    }
  for (Rat& x : w) x /= Rat(g);
  return w;
}

std::vector<RatVec> kernel(const RatMat& a) {
  Rref rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(a.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) v[rr.pivots[k]] = -rr.r(k, f);
    basis.push_back(primitive(v));
  }
  return basis;
}

RatMat col_rref(const RatMat& a) {
  Rref rr = rref(a.transpose());
  RatMat out(a.rows(), rr.pivots.size());
  for (std::size_t k = 0; k < rr.pivots.size(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, k) = rr.r(k, i);
  return out;
}

bool subspace_contains(const RatMat& basis, const RatVec& v) {
  if (vec_is_zero(v)) return true;
  if (basis.cols() == 0) return false;
  return solve_rational(basis, v).has_value();
}

bool subspace_leq(const RatMat& a, const RatMat& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!subspace_contains(b, a.col(j))) return false;
  return true;
}

bool subspace_equal(const RatMat& a, const RatMat& b) {
  return col_rref(a) == col_rref(b);
}

RatMat subspace_sum(const RatMat& a, const RatMat& b) {
  require(a.rows() == b.rows(), Err::DimensionMismatch, "subspace sum");
  RatMat cat(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) cat(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) cat(i, a.cols() + j) = b(i, j);
  }
  return col_rref(cat);
}

RatMat subspace_intersect(const RatMat& a, const RatMat& b) {
  require(a.rows() == b.rows(), Err::DimensionMismatch, "subspace intersect");
  if (a.cols() == 0 || b.cols() == 0) return RatMat(a.rows(), 0);
  // Null space of [a | -b]; the a-part of each null vector spans the meet.
  RatMat cat(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) cat(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) cat(i, a.cols() + j) = -b(i, j);
  }
  std::vector<RatVec> nul = kernel(cat);
  std::vector<RatVec> gens;
  for (const RatVec& v : nul) {
    RatVec x(v.begin(), v.begin() + a.cols());
    gens.push_back(a * x);
  }
  if (gens.empty()) return RatMat(a.rows(), 0);
  return col_rref(mat_from_cols(a.rows(), gens));
}

}  // namespace nillat
