#include "nillat/lie_algebra.hpp"

#include <utility>

namespace nillat {

namespace {

struct BracketSpec {
  std::size_t i, j, target;  // [X_i, X_j] = X_target, 1-based
};

LieAlgebra build(const std::string& name, std::size_t dim,
                 const std::vector<BracketSpec>& brackets) {
  LieAlgebra g;
  g.name = name;
  g.dim = dim;
  g.table.assign(dim * dim, RatVec(dim));
  for (const BracketSpec& b : brackets) {
    g.table[(b.i - 1) * dim + (b.j - 1)][b.target - 1] += 1;
    g.table[(b.j - 1) * dim + (b.i - 1)][b.target - 1] -= 1;
  }
  return g;
}

void check_jacobi(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j)
      for (std::size_t k = j + 1; k < g.dim; ++k) {
        RatVec s = bracket_vec(g, g.basis_bracket(i, j), unit_vec(g.dim, k));
        s = vec_add(s, bracket_vec(g, g.basis_bracket(j, k), unit_vec(g.dim, i)));
        s = vec_add(s, bracket_vec(g, g.basis_bracket(k, i), unit_vec(g.dim, j)));
        require(vec_is_zero(s), Err::Internal,
                "Jacobi identity fails in " + g.name + " at basis triple");
      }
}

int compute_step(const LieAlgebra& g);

AlgebraRef finish(LieAlgebra g) {
  check_jacobi(g);
  g.step = compute_step(g);
  return std::make_shared<const LieAlgebra>(std::move(g));
}

// Lower central series without the AlgebraRef wrapper (used during
// construction, before the algebra is shared).
std::vector<RatMat> lcs_bases(const LieAlgebra& g) {
  std::vector<RatMat> out;
  RatMat cur = to_rat(IntMat::identity(g.dim));
  out.push_back(cur);
  while (cur.cols() > 0) {
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = 0; j < cur.cols(); ++j) {
        RatVec v = bracket_vec(g, unit_vec(g.dim, i), cur.col(j));
        if (!vec_is_zero(v)) gens.push_back(v);
      }
    RatMat next =
        gens.empty() ? RatMat(g.dim, 0) : col_rref(mat_from_cols(g.dim, gens));
    if (next.cols() == cur.cols()) break;  // cannot happen for nilpotent tables
    out.push_back(next);
    cur = next;
  }
  return out;
}

int compute_step(const LieAlgebra& g) {
  // least k with C^{k+1} = 0; the series list is (C^1, ..., C^{step+1} = 0)
  return int(lcs_bases(g).size()) - 1;
}

}  // namespace

AlgebraRef abelian(std::size_t n) {
  require(n >= 1, Err::UnknownAlgebra, "abelian factor needs positive dimension");
  return finish(build("abelian:" + std::to_string(n), n, {}));
}

AlgebraRef direct_sum(const AlgebraRef& a, const AlgebraRef& b) {
  LieAlgebra g;
  g.name = a->name + "+" + b->name;
  g.dim = a->dim + b->dim;
  g.table.assign(g.dim * g.dim, RatVec(g.dim));
  auto embed = [&](const LieAlgebra& src, std::size_t off) {
    for (std::size_t i = 0; i < src.dim; ++i)
      for (std::size_t j = 0; j < src.dim; ++j) {
        const RatVec& v = src.basis_bracket(i, j);
        for (std::size_t k = 0; k < src.dim; ++k)
          g.table[(off + i) * g.dim + (off + j)][off + k] = v[k];
      }
  };
  embed(*a, 0);
  embed(*b, a->dim);
  return finish(std::move(g));
}

AlgebraRef catalog(const std::string& name) {
  if (name.rfind("abelian:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(8));
    } catch (...) {
      fail(Err::UnknownAlgebra, name);
    }
    return abelian(n);
  }
  if (name == "g3") return finish(build("g3", 3, {{3, 2, 1}}));
  if (name == "g4") return finish(build("g4", 4, {{4, 3, 2}, {4, 2, 1}}));
  if (name == "g5_1") return finish(build("g5_1", 5, {{5, 3, 1}, {4, 2, 1}}));
  if (name == "g5_2") return finish(build("g5_2", 5, {{5, 4, 2}, {5, 3, 1}}));
  if (name == "g5_3") return finish(build("g5_3", 5, {{5, 4, 3}, {5, 3, 1}, {4, 2, 1}}));
  if (name == "g5_4") return finish(build("g5_4", 5, {{5, 4, 3}, {5, 3, 2}, {4, 3, 1}}));
  if (name == "g5_5") return finish(build("g5_5", 5, {{5, 4, 3}, {5, 3, 2}, {5, 2, 1}}));
  if (name == "g5_6")
    return finish(build("g5_6", 5, {{5, 4, 3}, {5, 3, 2}, {5, 2, 1}, {4, 3, 1}}));
  if (name == "g3xR2") {
    LieAlgebra g = build("g3xR2", 5, {{3, 2, 1}});
    return finish(std::move(g));
  }
  if (name == "g4xR") {
    LieAlgebra g = build("g4xR", 5, {{4, 3, 2}, {4, 2, 1}});
    return finish(std::move(g));
  }
  fail(Err::UnknownAlgebra, name);
}

void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
  require(a && b, Err::AlgebraMismatch, "missing algebra reference");
  require(a->name == b->name && a->dim == b->dim, Err::AlgebraMismatch,
          a->name + " vs " + b->name);
}

LieElement element(AlgebraRef alg, RatVec coords) {
  require(coords.size() == alg->dim, Err::DimensionMismatch, "element coords");
  return {std::move(alg), std::move(coords)};
}

LieElement basis_elem(const AlgebraRef& alg, std::size_t i) {
  require(i < alg->dim, Err::DimensionMismatch, "basis index");
  return {alg, unit_vec(alg->dim, i)};
}

RatVec bracket_vec(const LieAlgebra& g, const RatVec& x, const RatVec& y) {
  RatVec out(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < g.dim; ++j) {
      if (y[j] == 0) continue;
      const RatVec& t = g.basis_bracket(i, j);
      Rat c = x[i] * y[j];
      for (std::size_t k = 0; k < g.dim; ++k)
        if (t[k] != 0) out[k] += c * t[k];
    }
  }
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  require_same_algebra(x.alg, y.alg);
  return {x.alg, bracket_vec(*x.alg, x.coords, y.coords)};
}

RatMat ad_matrix(const LieAlgebra& g, const RatVec& x) {
  RatMat m(g.dim, g.dim);
  for (std::size_t j = 0; j < g.dim; ++j)
    m.set_col(j, bracket_vec(g, x, unit_vec(g.dim, j)));
  return m;
}

Subspace make_subspace(AlgebraRef alg, const RatMat& generators) {
  require(generators.rows() == alg->dim, Err::DimensionMismatch, "subspace generators");
  return {std::move(alg), col_rref(generators)};
}

Subspace zero_subspace(AlgebraRef alg) {
  std::size_t n = alg->dim;
  return {std::move(alg), RatMat(n, 0)};
}

Subspace full_subspace(AlgebraRef alg) {
  std::size_t n = alg->dim;
  return {std::move(alg), to_rat(IntMat::identity(n))};
}

std::vector<Subspace> lower_central_series(const AlgebraRef& alg) {
  std::vector<Subspace> out;
  RatMat cur = to_rat(IntMat::identity(alg->dim));
  out.push_back({alg, cur});
  while (cur.cols() > 0) {
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < alg->dim; ++i)
      for (std::size_t j = 0; j < cur.cols(); ++j) {
        RatVec v = bracket_vec(*alg, unit_vec(alg->dim, i), cur.col(j));
        if (!vec_is_zero(v)) gens.push_back(v);
      }
    cur = gens.empty() ? RatMat(alg->dim, 0) : col_rref(mat_from_cols(alg->dim, gens));
    out.push_back({alg, cur});
  }
  return out;
}

namespace {

// Annihilator rows: a matrix whose kernel is exactly span(v-columns).
RatMat annihilator(const RatMat& v) {
  std::vector<RatVec> rows = kernel(v.transpose());
  RatMat b(rows.size(), v.rows());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < v.rows(); ++j) b(i, j) = rows[i][j];
  return b;
}

}  // namespace

RatMat relative_center(const LieAlgebra& g, const RatMat& target) {
  RatMat ann = annihilator(target);
  std::vector<RatVec> rows;
  for (std::size_t j = 0; j < g.dim; ++j) {
    RatMat rj(g.dim, g.dim);
    for (std::size_t k = 0; k < g.dim; ++k) rj.set_col(k, g.basis_bracket(k, j));
    RatMat cond = ann * rj;
    for (std::size_t r = 0; r < cond.rows(); ++r) {
      RatVec row(g.dim);
      for (std::size_t c = 0; c < g.dim; ++c) row[c] = cond(r, c);
      rows.push_back(row);
    }
  }
  RatMat sys(rows.size(), g.dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < g.dim; ++c) sys(r, c) = rows[r][c];
  std::vector<RatVec> ker = kernel(sys);
  return ker.empty() ? RatMat(g.dim, 0) : col_rref(mat_from_cols(g.dim, ker));
}

RatMat normalizer(const LieAlgebra& g, const RatMat& target) {
  RatMat ann = annihilator(target);
  std::vector<RatVec> rows;
  for (std::size_t j = 0; j < target.cols(); ++j) {
    RatVec tj = target.col(j);
    RatMat rj(g.dim, g.dim);
    for (std::size_t k = 0; k < g.dim; ++k)
      rj.set_col(k, bracket_vec(g, unit_vec(g.dim, k), tj));
    RatMat cond = ann * rj;
    for (std::size_t r = 0; r < cond.rows(); ++r) {
      RatVec row(g.dim);
      for (std::size_t c = 0; c < g.dim; ++c) row[c] = cond(r, c);
      rows.push_back(row);
    }
  }
  if (rows.empty()) return col_rref(RatMat::identity(g.dim));
  RatMat sys(rows.size(), g.dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < g.dim; ++c) sys(r, c) = rows[r][c];
  std::vector<RatVec> ker = kernel(sys);
  return ker.empty() ? RatMat(g.dim, 0) : col_rref(mat_from_cols(g.dim, ker));
}

std::vector<Subspace> ascending_central_series(const AlgebraRef& alg) {
  std::vector<Subspace> out;
  RatMat cur(alg->dim, 0);
  for (;;) {
    RatMat next = relative_center(*alg, cur);
    out.push_back({alg, next});
    if (next.cols() == alg->dim) break;
    require(next.cols() > cur.cols(), Err::Internal,
            "ascending central series stalled; algebra not nilpotent?");
    cur = next;
  }
  return out;
}

Subspace center(const AlgebraRef& alg) { return ascending_central_series(alg).front(); }

Subspace derived(const AlgebraRef& alg) {
  std::vector<Subspace> s = lower_central_series(alg);
  return s.size() > 1 ? s[1] : zero_subspace(alg);
}

Subspace centralizer(const Subspace& h) {
  const LieAlgebra& g = *h.alg;
  std::vector<RatVec> rows;
  for (std::size_t j = 0; j < h.basis.cols(); ++j) {
    RatVec ej = h.basis.col(j);
    for (std::size_t i = 0; i < g.dim; ++i) {
      // f_ij(X_k) = <X_i*, [X_k, e_j]>
      RatVec row(g.dim);
      for (std::size_t k = 0; k < g.dim; ++k)
        row[k] = bracket_vec(g, unit_vec(g.dim, k), ej)[i];
      rows.push_back(row);
    }
  }
  if (rows.empty()) return full_subspace(h.alg);
  RatMat sys(rows.size(), g.dim);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < g.dim; ++c) sys(r, c) = rows[r][c];
  std::vector<RatVec> ker = kernel(sys);
  return {h.alg, ker.empty() ? RatMat(g.dim, 0) : col_rref(mat_from_cols(g.dim, ker))};
}

Subspace radical_of_form(const LinearFunctional& l) {
  const LieAlgebra& g = *l.alg;
  RatMat m(g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) {
      const RatVec& b = g.basis_bracket(i, j);
      Rat v;
      for (std::size_t k = 0; k < g.dim; ++k) v += l.coeffs[k] * b[k];
      m(i, j) = v;
    }
  std::vector<RatVec> ker = kernel(m);
  return {l.alg, ker.empty() ? RatMat(g.dim, 0) : col_rref(mat_from_cols(g.dim, ker))};
}

std::size_t abelian_factor_dim(const AlgebraRef& alg) {
  Subspace z = center(alg);
  Subspace d = derived(alg);
  return z.dim() - subspace_intersect(z.basis, d.basis).cols();
}

bool is_subalgebra(const LieAlgebra& g, const RatMat& basis) {
  for (std::size_t a = 0; a < basis.cols(); ++a)
    for (std::size_t b = a + 1; b < basis.cols(); ++b)
      if (!subspace_contains(basis, bracket_vec(g, basis.col(a), basis.col(b)))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const RatMat& basis) {
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t b = 0; b < basis.cols(); ++b)
      if (!subspace_contains(basis, bracket_vec(g, unit_vec(g.dim, i), basis.col(b))))
        return false;
  return true;
}

bool is_automorphism(const LieAlgebra& g, const RatMat& phi) {
  require(phi.rows() == g.dim && phi.cols() == g.dim, Err::DimensionMismatch,
          "automorphism candidate shape");
  if (det(phi) == 0) return false;
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      RatVec lhs = phi * g.basis_bracket(i, j);
      RatVec rhs = bracket_vec(g, phi.col(i), phi.col(j));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace nillat
