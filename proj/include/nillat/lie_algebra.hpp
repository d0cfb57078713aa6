#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nillat/linalg.hpp"
#include "nillat/matrix.hpp"

namespace nillat {

// A catalog nilpotent Lie algebra over Q, given by exact structure constants
// in a fixed basis X_1..X_n. Antisymmetry and the Jacobi identity are checked
// at construction; the step is computed from the lower central series, never
// taken from the name.
struct LieAlgebra {
  std::string name;
  std::size_t dim = 0;
  int step = 0;
  std::vector<RatVec> table;  // table[i*dim+j] = coordinates of [X_i, X_j]

  const RatVec& basis_bracket(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
};

using AlgebraRef = std::shared_ptr<const LieAlgebra>;

struct LieElement {
  AlgebraRef alg;
  RatVec coords;
};

struct Subspace {
  AlgebraRef alg;
  RatMat basis;  // columns, kept in reduced column echelon form

  std::size_t dim() const { return basis.cols(); }
};

struct LinearFunctional {
  AlgebraRef alg;
  RatVec coeffs;  // row vector in the dual basis X_1*..X_n*
};

// Catalog identifiers: g3, g4, g5_1..g5_6, g3xR2, g4xR, abelian:<n>.
AlgebraRef catalog(const std::string& name);
AlgebraRef abelian(std::size_t n);
AlgebraRef direct_sum(const AlgebraRef& a, const AlgebraRef& b);

void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b);

LieElement element(AlgebraRef alg, RatVec coords);
LieElement basis_elem(const AlgebraRef& alg, std::size_t i);

RatVec bracket_vec(const LieAlgebra& g, const RatVec& x, const RatVec& y);
LieElement bracket(const LieElement& x, const LieElement& y);

// Matrix of ad(x): y -> [x, y] in the structure basis.
RatMat ad_matrix(const LieAlgebra& g, const RatVec& x);

Subspace make_subspace(AlgebraRef alg, const RatMat& generators);
Subspace zero_subspace(AlgebraRef alg);
Subspace full_subspace(AlgebraRef alg);

std::vector<Subspace> lower_central_series(const AlgebraRef& alg);
std::vector<Subspace> ascending_central_series(const AlgebraRef& alg);
Subspace center(const AlgebraRef& alg);
Subspace derived(const AlgebraRef& alg);

// Centralizer of a subspace as the common kernel of the functionals
// f_ij(X) = <X_i*, [X, e_j]> over dual basis elements and h-generators.
Subspace centralizer(const Subspace& h);

// Radical {X : <l, [X, Y]> = 0 for all Y} of the skew form B_l.
Subspace radical_of_form(const LinearFunctional& l);

std::size_t abelian_factor_dim(const AlgebraRef& alg);

// {x : [x, g] ⊆ span(target)}: one ascending-center step relative to an
// arbitrary subspace.
RatMat relative_center(const LieAlgebra& g, const RatMat& target);

// {x : [x, span(target)] ⊆ span(target)}.
RatMat normalizer(const LieAlgebra& g, const RatMat& target);

bool is_subalgebra(const LieAlgebra& g, const RatMat& basis);
bool is_ideal(const LieAlgebra& g, const RatMat& basis);

// Exact bracket-preservation test on all basis pairs, plus invertibility.
bool is_automorphism(const LieAlgebra& g, const RatMat& phi);

}  // namespace nillat
