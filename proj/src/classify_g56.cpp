#include "nillat/classify.hpp"

#include "classify_util.hpp"

namespace nillat {

namespace {

void require_s6_shape(const IntMat& d, const Int& m) {
  require(d.rows() == 4 && d.cols() == 4, Err::BadShape, "D block must be 4x4");
  require(detail::upper_triangular(d), Err::BadShape, "D block must be upper triangular");
  require(d(0, 3) == 0 && d(1, 3) == 0 && d(2, 3) == 0, Err::BadShape,
          "last column of the D block must be pure");
  for (std::size_t i = 0; i < 4; ++i)
    require(d(i, i) != 0, Err::BadShape, "D block must be invertible");
  require(m >= 1, Err::BadShape, "the scale m must be positive");
}

// Coordinates of the pivotal conjugates of the tuple generators: columns are
// the logs of conj(g5, g4), conj(g5, g3), conj(g5, g2) and conj(g4, g3) for
// the generators g_i of the tuple lattice. Membership of the tuple is
// integrality of D^{-1} M.
RatMat conjugation_data(const IntMat& d, const Int& m) {
  Rat a22 = Rat(d(1, 1)), a23 = Rat(d(1, 2)), a33 = Rat(d(2, 2)), a44 = Rat(d(3, 3));
  Rat mm = Rat(m);
  RatMat mat(4, 4);
  mat(0, 0) = a44 * mm * mm * mm / 6 + mm * a44 * a44 / 2;
  mat(0, 1) = mm * a23 + mm * mm * a33 / 2;
  mat(0, 2) = mm * a22;
  mat(0, 3) = a44 * a33;
  mat(1, 0) = a44 * mm * mm / 2;
  mat(1, 1) = mm * a33;
  mat(2, 0) = mm * a44;
  return mat;
}

bool integral_solution(const RatMat& u, const RatVec& p) {
  std::size_t n = u.rows();
  RatVec t(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rat s = p[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= u(ii, j) * t[j];
    t[ii] = s / u(ii, ii);
    if (!is_integer(t[ii])) return false;
  }
  return true;
}

}  // namespace

bool s6_member(const IntMat& d, const Int& m) {
  require_s6_shape(d, m);

  // integer filters for the three forced divisibilities
  if ((m * d(1, 1)) % d(0, 0) != 0) return false;
  if ((m * d(2, 2)) % d(1, 1) != 0) return false;
  if ((m * d(3, 3)) % d(2, 2) != 0) return false;

  RatMat data = conjugation_data(d, m);
  RatMat dd = to_rat(d);
  for (std::size_t j = 0; j < 4; ++j)
    if (!integral_solution(dd, data.col(j))) return false;
  return true;
}

UniformSubgroup g56_lattice(const DmTuple& t) {
  require(s6_member(t.d, t.m), Err::NotMember, "tuple fails the membership conditions");
  RatMat basis(5, 5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) basis(i, j) = Rat(t.d(i, j));
  basis(4, 4) = Rat(t.m);
  UniformSubgroup out = make_subgroup(catalog("g5_6"), basis);
  require(verify_closure(out), Err::Internal, "member tuple failed closure");
  return out;
}

G56Canonical canon_g56(const UniformSubgroup& gamma) {
  require(gamma.alg && gamma.alg->name == "g5_6", Err::AlgebraMismatch,
          "canonical form expects a g5_6 subgroup");
  require(gamma.verified, Err::NotVerified, "canonical form needs a verified subgroup");
  const AlgebraRef& alg = gamma.alg;
  const LieAlgebra& g = *alg;

  // Ideal chain: center, second ascending center, derived subalgebra, and
  // the centralizer of the second center.
  std::vector<Subspace> asc = ascending_central_series(alg);
  Subspace a1 = asc[0];
  Subspace a2 = asc[1];
  require(subspace_equal(a1.basis, mat_from_cols(5, {unit_vec(5, 0)})), Err::Internal,
          "unexpected center");
  require(subspace_equal(a2.basis, mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1)})),
          Err::Internal, "unexpected second ascending center");
  Subspace a3 = derived(alg);
  require(subspace_equal(a3.basis,
                         mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2)})),
          Err::Internal, "unexpected derived subalgebra");
  Subspace a4 = centralizer(a2);
  require(subspace_equal(a4.basis, mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1),
                                                     unit_vec(5, 2), unit_vec(5, 3)})),
          Err::Internal, "unexpected centralizer of the second center");

  UniformSubgroup adapted = basis_through_ideals(gamma, {a1, a2, a3, a4});
  const RatMat& b = adapted.basis;
  Rat a44 = b(3, 3);
  Rat a55 = b(4, 4);

  // The image of X4 carries the scale a55^2 / a44 so that the bracket-derived
  // map is an automorphism; the pulled-back fourth generator is then a pure
  // multiple of X4.
  RatVec v4 = b.col(3);
  for (Rat& x : v4) x *= a55 * a55 / a44;
  RatMat phi = detail::g56_aut_from_top(g, v4, b.col(4));
  require(is_automorphism(g, phi), Err::Internal, "adapted map is not an automorphism");
  RatMat phiinv = inverse(phi);

  RatMat blk(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    RatVec eps = phiinv * b.col(j);
    require(eps[3] == 0 && eps[4] == 0, Err::Internal, "adapted basis not triangular");
    for (std::size_t i = 0; i < 3; ++i) {
      require(i <= j || eps[i] == 0, Err::Internal, "adapted basis not triangular");
      blk(i, j) = eps[i];
    }
  }
  Rat b44 = a44 / (a55 * a55);

  // The pulled-back columns span the same rank-three lattice whatever
  // unimodular mix they arrived with; reduce the off-diagonal entries to
  // their canonical residues so equal subgroups get equal tuples.
  for (std::size_t j = 0; j < 3; ++j)
    require(blk(j, j) > 0, Err::Internal, "canonical block lost positivity");
  for (std::size_t j = 1; j < 3; ++j)
    for (std::size_t i = j; i-- > 0;) {
      Rat t = blk(i, j) / blk(i, i);
      Int q = (num(t) - mod_floor(num(t), den(t))) / den(t);
      if (q == 0) continue;
      for (std::size_t k = 0; k <= i; ++k) blk(k, j) -= Rat(q) * blk(k, i);
    }

  Int m = den(b44);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i <= j; ++i) m = detail::lcm(m, den(blk(i, j)));

  RatMat pi(5, 5);
  pi(0, 0) = Rat(m) * Rat(m) * Rat(m) * Rat(m) * Rat(m);
  pi(1, 1) = Rat(m) * Rat(m) * Rat(m) * Rat(m);
  pi(2, 2) = Rat(m) * Rat(m) * Rat(m);
  pi(3, 3) = Rat(m) * Rat(m);
  pi(4, 4) = Rat(m);

  IntMat dblock(4, 4);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i <= j; ++i) dblock(i, j) = to_int(pi(i, i) * blk(i, j));
  dblock(3, 3) = to_int(pi(3, 3) * b44);
  require(s6_member(dblock, m), Err::Internal,
          "canonical tuple fails the membership conditions");

  RatMat psi = pi * phiinv;
  DmTuple rep{dblock, m};
  detail::check_witness(psi, gamma, g56_lattice(rep));
  return {rep, psi};
}

namespace {

// Scale maps of this profile preserve every bracket.
RatMat scale_block(const Rat& r) {
  RatMat s(5, 5);
  Rat p = r;
  s(4, 4) = p;
  for (std::size_t i = 4; i-- > 0;) {
    p *= r;
    s(i, i) = p;
  }
  return s;
}

// Two tuples can present one subgroup through different column mixes, so
// compare the generated lattices, not the matrices.
bool tuple_lattices_equal(const RatMat& ba, const RatMat& bb) {
  AlgebraRef alg = catalog("g5_6");
  UniformSubgroup la = make_subgroup(alg, ba);
  UniformSubgroup lb = make_subgroup(alg, bb);
  for (std::size_t j = 0; j < 5; ++j) {
    if (!contains(lb, exp_of(alg, ba.col(j)))) return false;
    if (!contains(la, exp_of(alg, bb.col(j)))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> g56_ratio(const DmTuple& a, const DmTuple& b) {
  require(s6_member(a.d, a.m), Err::NotMember, "left tuple fails the membership conditions");
  require(s6_member(b.d, b.m), Err::NotMember, "right tuple fails the membership conditions");

  // The generator levels pin the scale up to sign: m maps with weight one,
  // the diagonal of D with weights five down to two.
  Int pa = a.m, pb = b.m;
  for (std::size_t i = 4; i-- > 0;) {
    pa *= a.m;
    pb *= b.m;
    if (abs(a.d(i, i)) * pb != abs(b.d(i, i)) * pa) return std::nullopt;
  }
  const Rat r0 = Rat(a.m, b.m);
  const Rat r1 = Rat(-a.m, b.m);
  const RatMat ba = detail::dm_block(a.d, a.m);
  const RatMat bb = detail::dm_block(b.d, b.m);
  for (const Rat& r : {r0, r1})
    if (tuple_lattices_equal(ba, scale_block(r) * bb)) return r;
  return std::nullopt;
}

bool g56_equivalent(const DmTuple& a, const DmTuple& b) { return g56_ratio(a, b).has_value(); }

std::optional<RatMat> g56_isomorphism(const UniformSubgroup& a, const UniformSubgroup& b) {
  G56Canonical ca = canon_g56(a);
  G56Canonical cb = canon_g56(b);
  auto ratio = g56_ratio(cb.rep, ca.rep);
  if (!ratio) return std::nullopt;

  // chi carries the canonical lattice of a onto the one of b.
  RatMat chi = scale_block(*ratio);
  RatMat witness = inverse(cb.witness) * chi * ca.witness;
  detail::check_witness(witness, a, b);
  return witness;
}

}  // namespace nillat
