#include "nillat/classify.hpp"

#include "classify_util.hpp"

namespace nillat {

namespace {

void validate_g52_params(const G52Params& t) {
  require(t.p >= 1 && t.q >= 1, Err::InvalidParams, "need p >= 1 and q >= 1");
  require(t.alpha >= 0 && t.alpha < t.q, Err::InvalidParams, "need 0 <= alpha < q");
}

// [[p, alpha], [0, q]]: the central lattice of Gamma(p,q,alpha) is the
// preimage of Z^2 under this matrix.
IntMat param_mat(const G52Params& t) {
  validate_g52_params(t);
  return IntMat(2, 2, {t.p, t.alpha, Int(0), t.q});
}

std::vector<Int> param_divisors(const G52Params& t) { return snf(param_mat(t)).divisors; }

RatMat inverse2(const RatMat& a) {
  Rat d = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  require(d != 0, Err::Internal, "singular 2x2 block");
  RatMat r(2, 2);
  r(0, 0) = a(1, 1) / d;
  r(0, 1) = -a(0, 1) / d;
  r(1, 0) = -a(1, 0) / d;
  r(1, 1) = a(0, 0) / d;
  return r;
}

}  // namespace

UniformSubgroup g52_lattice(const G52Params& params) {
  validate_g52_params(params);
  AlgebraRef alg = catalog("g5_2");
  RatMat basis(5, 5);
  basis(0, 0) = Rat(1) / Rat(params.p);
  basis(0, 1) = -Rat(params.alpha) / Rat(params.p * params.q);
  basis(1, 1) = Rat(1) / Rat(params.q);
  basis(2, 2) = 1;
  basis(3, 3) = 1;
  basis(4, 4) = 1;
  UniformSubgroup out = make_subgroup(alg, basis);
  require(verify_closure(out), Err::Internal, "parameter lattice failed closure");
  return out;
}

G52Reduction reduce_g52(const UniformSubgroup& gamma) {
  require(gamma.alg && gamma.alg->name == "g5_2", Err::AlgebraMismatch,
          "reduction expects a g5_2 subgroup");
  require(gamma.verified, Err::NotVerified, "reduction needs a verified subgroup");
  const AlgebraRef& alg = gamma.alg;
  const LieAlgebra& g = *alg;

  // The structure ideals: the radical of the form x,y -> X1*([x,y]) is
  // span{X1, X2, X4}, its centralizer is span{X1..X4}, and the derived
  // subalgebra is span{X1, X2}.
  Subspace rad = radical_of_form({alg, unit_vec(5, 0)});
  require(subspace_equal(rad.basis,
                         mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 3)})),
          Err::Internal, "unexpected form radical");
  Subspace zeta = centralizer(rad);
  require(subspace_equal(zeta.basis, mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1),
                                                       unit_vec(5, 2), unit_vec(5, 3)})),
          Err::Internal, "unexpected centralizer");
  Subspace dsub = derived(alg);
  require(subspace_equal(dsub.basis, mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1)})),
          Err::Internal, "unexpected derived subalgebra");

  // Adapted generators: eps1, eps2 span the intersection with the derived
  // subalgebra, eps3, eps4 extend it through the centralizer, eps5 tops out.
  // The basis matrix comes back upper triangular with positive diagonal.
  UniformSubgroup adapted = basis_through_ideals(gamma, {dsub, zeta});
  const RatMat& b = adapted.basis;

  RatMat z2(2, 2);
  z2(0, 0) = b(2, 2);
  z2(0, 1) = b(2, 3);
  z2(1, 0) = b(3, 2);
  z2(1, 1) = b(3, 3);
  RatMat w(2, 2);
  w(0, 0) = b(0, 2);
  w(0, 1) = b(0, 3);
  w(1, 0) = b(1, 2);
  w(1, 1) = b(1, 3);
  RatVec w5 = {b(0, 4), b(1, 4)};
  RatVec z5 = {b(2, 4), b(3, 4)};
  Rat a55 = b(4, 4);
  require(a55 != 0, Err::Internal, "degenerate adapted basis");

  // phi fixes X3, X4, X5 as images of eps3, eps4, eps5 and rescales the
  // derived plane; the blocks are solved from phi(eps_j) = X_j, j = 3, 4, 5.
  RatMat a = inverse2(z2);
  Rat al = Rat(1) / a55;
  RatMat bp = a * w * a;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) bp(i, j) = -al * bp(i, j);
  RatVec v = a * z5;
  for (Rat& x : v) x = -al * x;
  RatVec aw5 = a * w5;
  RatVec u(2);
  for (std::size_t i = 0; i < 2; ++i)
    u[i] = -al * (al * aw5[i] + bp(i, 0) * z5[0] + bp(i, 1) * z5[1]);

  RatMat phi(5, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      phi(i, j) = al * a(i, j);
      phi(i, j + 2) = bp(i, j);
      phi(i + 2, j + 2) = a(i, j);
    }
  phi(0, 4) = u[0];
  phi(1, 4) = u[1];
  phi(2, 4) = v[0];
  phi(3, 4) = v[1];
  phi(4, 4) = al;
  require(is_automorphism(g, phi), Err::Internal, "reduction map is not an automorphism");

  // Central lattice of phi(Gamma), generated by the images of eps1, eps2.
  RatMat central(2, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    RatVec c = a * RatVec{b(0, j), b(1, j)};
    central(0, j) = al * c[0];
    central(1, j) = al * c[1];
  }
  RatMat h = hnf(central).h;

  // Closure forces Z X1 + Z X2 inside the central lattice, which pins the
  // Hermite form to [[1/p, k/(pq)], [0, 1/q]] with 0 <= k < q.
  require(num(h(0, 0)) == 1 && num(h(1, 1)) == 1, Err::Internal,
          "central lattice does not refine Z^2");
  G52Params params;
  params.p = den(h(0, 0));
  params.q = den(h(1, 1));
  Rat k = h(0, 1) * Rat(params.p * params.q);
  require(is_integer(k), Err::Internal, "central lattice does not refine Z^2");
  params.alpha = mod_floor(params.q - to_int(k), params.q);

  detail::check_witness(phi, gamma, g52_lattice(params));
  return {params, phi};
}

bool g52_equiv(const G52Params& a, const G52Params& b) {
  return param_divisors(a) == param_divisors(b);
}

G52Canonical canon_g52(const UniformSubgroup& gamma) {
  std::vector<Int> d = param_divisors(reduce_g52(gamma).params);
  return {d[0], d[1]};
}

std::optional<RatMat> g52_isomorphism(const UniformSubgroup& a, const UniformSubgroup& b) {
  G52Reduction ra = reduce_g52(a);
  G52Reduction rb = reduce_g52(b);
  SnfResult sa = snf(param_mat(ra.params));
  SnfResult sb = snf(param_mat(rb.params));
  if (sa.divisors != sb.divisors) return std::nullopt;

  // W = V_b V_a^{-1} carries the central lattice of Gamma(params_a) onto the
  // one of Gamma(params_b): M_b W M_a^{-1} = U_b^{-1} U_a is unimodular when
  // the Smith forms agree. Repeating W on the X3-X4 plane keeps the bracket
  // relations, so the block map is an automorphism.
  RatMat wmat = to_rat(sb.v) * inverse(to_rat(sa.v));
  RatMat psi(5, 5);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      psi(i, j) = wmat(i, j);
      psi(i + 2, j + 2) = wmat(i, j);
    }
  psi(4, 4) = 1;

  RatMat witness = inverse(rb.phi) * psi * ra.phi;
  detail::check_witness(witness, a, b);
  return witness;
}

}  // namespace nillat
