#include "nillat/normal_forms.hpp"

#include <algorithm>

namespace nillat {

namespace {

using boost::multiprecision::abs;

// Smallest nonzero |entry| of s in the trailing submatrix at corner t,
// ties broken by lowest (row, col) in row-major order.
bool find_pivot(const IntMat& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs(s(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

Int euclid_q(const Int& a, const Int& p) { return floor_div(a, p); }
Int euclid_q(const Rat& a, const Rat& p) { return rat_floor(a / p); }

template <class T>
struct HnfOut {
  Mat<T> h;
  IntMat t;
};

template <class T>
HnfOut<T> hnf_impl(Mat<T> h) {
  const std::size_t m = h.rows(), n = h.cols();
  require(m <= n, Err::RankDeficient, "more rows than columns");
  IntMat t = IntMat::identity(n);

  auto cadd = [&](std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    h.col_add(dst, src, T(k));
    t.col_add(dst, src, k);
  };
  auto cneg = [&](std::size_t j) {
    h.col_negate(j);
    t.col_negate(j);
  };
  auto cswap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    h.col_swap(a, b);
    t.col_swap(a, b);
  };

  // Bottom row upward: gcd-collect the row across the still-active columns,
  // leaving a single positive entry; that column becomes the row's pivot.
  std::vector<std::size_t> active(n);
  for (std::size_t j = 0; j < n; ++j) active[j] = j;
  std::vector<std::size_t> pivot_col(m);

  for (std::size_t r = m; r-- > 0;) {
    for (;;) {
      std::size_t nz = 0, best = 0;
      bool have_best = false;
      for (std::size_t c : active) {
        if (h(r, c) == 0) continue;
        ++nz;
        if (!have_best || abs(T(h(r, c))) < abs(T(h(r, best)))) {
          best = c;
          have_best = true;
        }
      }
      require(nz > 0, Err::RankDeficient, "rank below row count");
      if (nz == 1) {
        if (h(r, best) < 0) cneg(best);
        pivot_col[r] = best;
        active.erase(std::find(active.begin(), active.end(), best));
        break;
      }
      for (std::size_t c : active) {
        if (c == best || h(r, c) == 0) continue;
        cadd(c, best, -euclid_q(h(r, c), h(r, best)));
      }
    }
  }

  // Reorder to (pivot of row 0, ..., pivot of row m-1, zero columns).
  std::vector<std::size_t> target(pivot_col);
  target.insert(target.end(), active.begin(), active.end());
  std::vector<std::size_t> pos(n);  // current position of original column slot
  for (std::size_t j = 0; j < n; ++j) pos[j] = j;
  std::vector<std::size_t> at(n);  // which slot sits at each position
  for (std::size_t j = 0; j < n; ++j) at[j] = j;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t want = target[j];
    std::size_t cur = pos[want];
    if (cur != j) {
      cswap(j, cur);
      std::swap(at[j], at[cur]);
      pos[at[j]] = j;
      pos[at[cur]] = cur;
    }
  }

  // Reduce entries right of each diagonal into [0, h_ii).
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = j; i-- > 0;) cadd(j, i, -euclid_q(h(i, j), h(i, i)));

  return {std::move(h), std::move(t)};
}

}  // namespace

SnfResult snf(const IntMat& a) {
  SnfResult res{IntMat::identity(a.rows()), a, IntMat::identity(a.cols()), {}, false};
  IntMat& u = res.u;
  IntMat& s = res.s;
  IntMat& v = res.v;
  if (s.is_zero()) {
    res.zero = true;
    return res;
  }

  const std::size_t mn = std::min(s.rows(), s.cols());
  std::size_t t = 0;
  while (t < mn) {
    std::size_t pr, pc;
    if (!find_pivot(s, t, pr, pc)) break;
    if (pr != t) {
      s.row_swap(t, pr);
      u.row_swap(t, pr);
    }
    if (pc != t) {
      s.col_swap(t, pc);
      v.col_swap(t, pc);
    }

    // Clear row t and column t; swaps pull any remainder up as the new,
    // strictly smaller pivot, so this terminates.
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Int q = floor_div(s(i, t), s(t, t));
        if (q != 0) {
          s.row_add(i, t, -q);
          u.row_add(i, t, -q);
        }
        if (s(i, t) != 0) {
          s.row_swap(t, i);
          u.row_swap(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Int q = floor_div(s(t, j), s(t, t));
        if (q != 0) {
          s.col_add(j, t, -q);
          v.col_add(j, t, -q);
        }
        if (s(t, j) != 0) {
          s.col_swap(t, j);
          v.col_swap(t, j);
          dirty = true;
        }
      }
    }

    // Divisor chain: fold any non-multiple into row t and re-clear.
    bool fixed = false;
    for (std::size_t i = t + 1; i < s.rows() && !fixed; ++i)
      for (std::size_t j = t + 1; j < s.cols() && !fixed; ++j)
        if (s(i, j) % s(t, t) != 0) {
          s.row_add(t, i, 1);
          u.row_add(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;  // redo corner t

    if (s(t, t) < 0) {
      s.row_negate(t);
      u.row_negate(t);
    }
    res.divisors.push_back(s(t, t));
    ++t;
  }
  return res;
}

HnfResult hnf(const IntMat& a) {
  HnfOut<Int> out = hnf_impl<Int>(a);
  return {std::move(out.h), std::move(out.t)};
}

RatHnfResult hnf(const RatMat& a) {
  HnfOut<Rat> out = hnf_impl<Rat>(a);
  return {std::move(out.h), std::move(out.t)};
}

}  // namespace nillat
