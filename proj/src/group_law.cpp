#include "nillat/group_law.hpp"

namespace nillat {

GroupElement group_identity(AlgebraRef alg) {
  std::size_t n = alg->dim;
  return {std::move(alg), RatVec(n)};
}

GroupElement exp_of(AlgebraRef alg, RatVec log_coords) {
  require(log_coords.size() == alg->dim, Err::DimensionMismatch, "log coordinates");
  return {std::move(alg), std::move(log_coords)};
}

bool is_identity(const GroupElement& g) { return vec_is_zero(g.log); }

RatVec bch(const LieAlgebra& g, const RatVec& x, const RatVec& y) {
  require(g.step <= 4, Err::StepTooHigh, g.name);
  // z = x + y + 1/2 [x,y] + 1/12 [x,[x,y]] + 1/12 [y,[y,x]] - 1/24 [y,[x,[x,y]]]
  RatVec z = vec_add(x, y);
  RatVec xy = bracket_vec(g, x, y);
  if (vec_is_zero(xy)) return z;
  z = vec_add(z, vec_scale(Rat(1, 2), xy));
  RatVec xxy = bracket_vec(g, x, xy);
  RatVec yxy = bracket_vec(g, y, xy);  // [y,[y,x]] = -[y,[x,y]]
  if (!vec_is_zero(xxy)) z = vec_add(z, vec_scale(Rat(1, 12), xxy));
  if (!vec_is_zero(yxy)) z = vec_sub(z, vec_scale(Rat(1, 12), yxy));
  if (!vec_is_zero(xxy)) {
    RatVec yxxy = bracket_vec(g, y, xxy);
    if (!vec_is_zero(yxxy)) z = vec_sub(z, vec_scale(Rat(1, 24), yxxy));
  }
  return z;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  require_same_algebra(a.alg, b.alg);
  return {a.alg, bch(*a.alg, a.log, b.log)};
}

GroupElement inv(const GroupElement& a) { return {a.alg, vec_neg(a.log)}; }

GroupElement conj(const GroupElement& g, const GroupElement& h) {
  return mul(mul(g, h), inv(g));
}

RatMat exp_ad(const LieAlgebra& g, const RatVec& x) {
  RatMat sum = to_rat(IntMat::identity(g.dim));
  RatMat ad = ad_matrix(g, x);
  RatMat power = ad;
  Int factorial = 1;
  for (int k = 1; !power.is_zero(); ++k) {
    factorial *= k;
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t j = 0; j < g.dim; ++j) sum(i, j) += power(i, j) / Rat(factorial);
    require(k <= int(g.dim), Err::Internal, "ad(x) not nilpotent");
    power = power * ad;
  }
  return sum;
}

MalcevBasis make_malcev_basis(const AlgebraRef& alg, const RatMat& basis) {
  require(basis.rows() == alg->dim && basis.cols() == alg->dim, Err::DimensionMismatch,
          "basis shape");
  RatMat binv;
  try {
    binv = inverse(basis);
  } catch (const Error&) {
    fail(Err::NotMalcevBasis, "basis is singular");
  }
  // Prefix spans are subalgebras iff every [e_a, e_b] with a < b lies in the
  // span of e_1..e_b.
  for (std::size_t b = 1; b < alg->dim; ++b)
    for (std::size_t a = 0; a < b; ++a) {
      RatVec w = binv * bracket_vec(*alg, basis.col(a), basis.col(b));
      for (std::size_t k = b + 1; k < alg->dim; ++k)
        require(w[k] == 0, Err::NotMalcevBasis,
                "prefix span is not a subalgebra at index " + std::to_string(b + 1));
    }
  return {alg, basis, binv};
}

RatVec malcev_coords(const GroupElement& g, const MalcevBasis& mb) {
  require_same_algebra(g.alg, mb.alg);
  const LieAlgebra& a = *mb.alg;
  RatVec cur = g.log;
  RatVec t(a.dim);
  for (std::size_t i = a.dim; i-- > 0;) {
    RatVec c = mb.binv * cur;
    for (std::size_t k = i + 1; k < a.dim; ++k)
      require(c[k] == 0, Err::Internal, "peeling left the prefix span");
    t[i] = c[i];
    if (t[i] != 0)
      cur = bch(a, cur, vec_scale(-t[i], mb.basis.col(i)));
  }
  require(vec_is_zero(cur), Err::Internal, "peeling did not terminate at identity");
  return t;
}

RatVec malcev_coords(const GroupElement& g, const RatMat& basis) {
  return malcev_coords(g, make_malcev_basis(g.alg, basis));
}

GroupElement from_malcev(const RatVec& t, const MalcevBasis& mb) {
  require(t.size() == mb.alg->dim, Err::DimensionMismatch, "coordinate count");
  GroupElement g = group_identity(mb.alg);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != 0) g = mul(g, exp_of(mb.alg, vec_scale(t[i], mb.basis.col(i))));
  return g;
}

GroupElement from_malcev(const AlgebraRef& alg, const RatVec& t, const RatMat& basis) {
  return from_malcev(t, make_malcev_basis(alg, basis));
}

}  // namespace nillat
