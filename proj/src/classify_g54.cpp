#include "nillat/classify.hpp"

#include "classify_util.hpp"

namespace nillat {

namespace {

void require_s4_shape(const IntMat& d, const Int& m) {
  require(d.rows() == 3 && d.cols() == 3, Err::BadShape, "D block must be 3x3");
  require(detail::upper_triangular(d), Err::BadShape, "D block must be upper triangular");
  require(d(0, 0) != 0 && d(1, 1) != 0 && d(2, 2) != 0, Err::BadShape,
          "D block must be invertible");
  require(m >= 1, Err::BadShape, "the scale m must be positive");
}

// Solves U t = p for upper-triangular U and reports whether t is integral.
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

RatMat diag5(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e) {
  RatMat m(5, 5);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  m(4, 4) = e;
  return m;
}

std::vector<IntMat> gl2_ball(const Int& bound) {
  std::vector<IntMat> out = {IntMat::identity(2)};
  for (Int a = -bound; a <= bound; ++a)
    for (Int b = -bound; b <= bound; ++b)
      for (Int c = -bound; c <= bound; ++c)
        for (Int d = -bound; d <= bound; ++d) {
          Int det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          out.push_back(IntMat(2, 2, {a, b, c, d}));
        }
  return out;
}

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

Rat frac(const Rat& r) { return r - Rat(rat_floor(r)); }

}  // namespace

bool s4_member(const IntMat& d, const Int& m) {
  require_s4_shape(d, m);

  // Integer filters first: (I + E13)-conjugation needs d11 | d33, and two
  // entries of the main conjugation test reduce to d22 | d33 and d33 | m.
  if (d(2, 2) % d(0, 0) != 0) return false;
  if (d(2, 2) % d(1, 1) != 0) return false;
  if (m % d(2, 2) != 0) return false;

  RatMat dm = detail::dm_block(d, m);
  RatMat am = RatMat::identity(4);
  am(0, 2) = Rat(m, 2);
  am(0, 3) = Rat(m, 2);
  am(1, 2) = 1;
  am(1, 3) = Rat(1, 2);
  am(2, 3) = 1;
  RatMat p = am * dm;
  for (std::size_t j = 0; j < 4; ++j)
    if (!integral_solution(dm, p.col(j))) return false;
  return true;
}

UniformSubgroup g54_lattice(const DmTuple& t) {
  require(s4_member(t.d, t.m), Err::NotMember, "tuple fails the membership conditions");
  RatMat basis(5, 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) basis(i, j) = Rat(t.d(i, j));
  basis(3, 3) = Rat(t.m);
  basis(4, 4) = 1;
  UniformSubgroup out = make_subgroup(catalog("g5_4"), basis);
  require(verify_closure(out), Err::Internal, "member tuple failed closure");
  return out;
}

DmTuple s4_hermite_close(const DmTuple& t) {
  require(s4_member(t.d, t.m), Err::NotMember, "tuple fails the membership conditions");
  DmTuple out{hnf(t.d).h, t.m};
  require(s4_member(out.d, out.m), Err::Internal,
          "column reduction did not preserve membership");
  return out;
}

G54Canonical canon_g54(const UniformSubgroup& gamma) {
  require(gamma.alg && gamma.alg->name == "g5_4", Err::AlgebraMismatch,
          "canonical form expects a g5_4 subgroup");
  require(gamma.verified, Err::NotVerified, "canonical form needs a verified subgroup");
  const AlgebraRef& alg = gamma.alg;
  const LieAlgebra& g = *alg;

  Subspace z = center(alg);
  require(subspace_equal(z.basis, mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1)})),
          Err::Internal, "unexpected center");
  Subspace dsub = derived(alg);
  require(subspace_equal(dsub.basis,
                         mat_from_cols(5, {unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2)})),
          Err::Internal, "unexpected derived subalgebra");

  UniformSubgroup adapted = basis_through_ideals(gamma, {z, dsub});
  const RatMat& b = adapted.basis;

  // phi is the automorphism sending X4, X5 to the last two adapted
  // generators; pulling the first three back through it leaves an upper
  // triangular block over span{X1, X2, X3}.
  RatMat phi = detail::g54_aut_from_top(g, b.col(3), b.col(4));
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

  // Minimal positive m for which diag(m^2, m, m) clears all denominators;
  // the first row only needs m^2, so odd prime powers there cost their
  // square cover instead of the full denominator.
  Int m = 1;
  for (std::size_t j = 0; j < 3; ++j) {
    m = detail::lcm(m, detail::smallest_square_cover(den(blk(0, j))));
    m = detail::lcm(m, den(blk(1, j)));
    m = detail::lcm(m, den(blk(2, j)));
  }

  IntMat w(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    w(0, j) = to_int(Rat(m * m) * blk(0, j));
    w(1, j) = to_int(Rat(m) * blk(1, j));
    w(2, j) = to_int(Rat(m) * blk(2, j));
  }
  IntMat dblock = hnf(w).h;
  require(s4_member(dblock, m), Err::Internal,
          "canonical tuple fails the membership conditions");

  RatMat psi = diag5(Rat(m * m), Rat(m), Rat(m), Rat(m), 1) * phiinv;
  DmTuple rep{dblock, m};
  detail::check_witness(psi, gamma, g54_lattice(rep));
  return {rep, psi};
}

std::optional<RatMat> g54_isomorphic_search(const UniformSubgroup& a, const UniformSubgroup& b,
                                            const Int& bound) {
  require(a.alg && b.alg && a.alg->name == "g5_4" && b.alg->name == "g5_4",
          Err::AlgebraMismatch, "search expects g5_4 subgroups");
  require(a.verified && b.verified, Err::NotVerified, "search needs verified subgroups");
  require(bound >= 1, Err::InvalidParams, "need bound >= 1");
  const AlgebraRef& alg = a.alg;
  const LieAlgebra& g = *alg;

  Subspace z = center(alg);
  Subspace dsub = derived(alg);
  RatMat ya = basis_through_ideals(a, {z, dsub}).basis;
  RatMat yb = basis_through_ideals(b, {z, dsub}).basis;

  // Quotient-level lattices of the adapted bases: the center, the X3 line,
  // and the X4-X5 plane. Any isomorphism induces a lattice isomorphism on
  // each level, which pins its block data up to a unimodular choice.
  RatMat za(2, 2), zb(2, 2), la(2, 2), lb(2, 2);
  za(0, 0) = ya(0, 0);
  za(0, 1) = ya(0, 1);
  za(1, 1) = ya(1, 1);
  zb(0, 0) = yb(0, 0);
  zb(0, 1) = yb(0, 1);
  zb(1, 1) = yb(1, 1);
  la(0, 0) = ya(3, 3);
  la(0, 1) = ya(3, 4);
  la(1, 1) = ya(4, 4);
  lb(0, 0) = yb(3, 3);
  lb(0, 1) = yb(3, 4);
  lb(1, 1) = yb(4, 4);

  Rat covol_ratio = 1;
  for (std::size_t i = 0; i < 5; ++i) covol_ratio *= yb(i, i) / ya(i, i);

  RatMat la_inv = inverse2(la);
  RatMat zb_inv = inverse2(zb);

  for (const IntMat& u : gl2_ball(bound)) {
    RatMat bot = lb * to_rat(u) * la_inv;
    Rat delta = bot(0, 0) * bot(1, 1) - bot(0, 1) * bot(1, 0);

    // determinant of the full map is delta^5; the X3 level scales by delta
    Rat d5 = delta * delta * delta * delta * delta;
    if (abs(d5) != covol_ratio) continue;
    if (abs(delta * ya(2, 2)) != yb(2, 2)) continue;

    // center level: multiplication by delta * bot must match the lattices
    RatMat zmap = bot;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) zmap(i, j) *= delta;
    RatMat mz = zb_inv * zmap * za;
    if (!detail::mat_is_integral(mz)) continue;
    if (abs(mz(0, 0) * mz(1, 1) - mz(0, 1) * mz(1, 0)) != 1) continue;

    // X3 shears: the image of the third adapted generator must land in the
    // subgroup. Its central residue is affine in (a34, a35) with an
    // invertible coefficient block, so each choice of lattice offset gives
    // one exact solution.
    Rat t3 = delta * ya(2, 2) / yb(2, 2);
    RatVec r0(2);
    for (std::size_t i = 0; i < 2; ++i)
      r0[i] = ya(0, 2) * zmap(i, 0) + ya(1, 2) * zmap(i, 1) - t3 * yb(i, 2);
    RatMat k(2, 2);
    k(0, 0) = bot(0, 1);
    k(0, 1) = -bot(0, 0);
    k(1, 0) = bot(1, 1);
    k(1, 1) = -bot(1, 0);
    RatMat k_inv = inverse2(k);

    for (int k1 = -1; k1 <= 1; ++k1)
      for (int k2 = -1; k2 <= 1; ++k2) {
        RatVec target = {zb(0, 0) * Rat(k1) + zb(0, 1) * Rat(k2) - r0[0],
                         zb(1, 1) * Rat(k2) - r0[1]};
        RatVec shear = k_inv * target;
        RatVec v4 = {0, 0, shear[0] / ya(2, 2), bot(0, 0), bot(1, 0)};
        RatVec v5 = {0, 0, shear[1] / ya(2, 2), bot(0, 1), bot(1, 1)};

        // central tops of v4 from the image of the fourth generator
        RatMat cand = detail::g54_aut_from_top(g, v4, v5);
        RatVec c4 = malcev_coords(exp_of(alg, cand * ya.col(3)), yb);
        if (!is_integer(c4[2]) || !is_integer(c4[3]) || !is_integer(c4[4])) continue;
        RatVec shift4 = {-(zb(0, 0) * frac(c4[0]) + zb(0, 1) * frac(c4[1])),
                         -(zb(1, 1) * frac(c4[1]))};
        v4[0] = shift4[0] / ya(3, 3);
        v4[1] = shift4[1] / ya(3, 3);

        // central tops of v5 from the image of the fifth generator
        cand = detail::g54_aut_from_top(g, v4, v5);
        RatVec c5 = malcev_coords(exp_of(alg, cand * ya.col(4)), yb);
        if (!is_integer(c5[2]) || !is_integer(c5[3]) || !is_integer(c5[4])) continue;
        RatVec shift5 = {-(zb(0, 0) * frac(c5[0]) + zb(0, 1) * frac(c5[1])),
                         -(zb(1, 1) * frac(c5[1]))};
        v5[0] = shift5[0] / ya(4, 4);
        v5[1] = shift5[1] / ya(4, 4);

        cand = detail::g54_aut_from_top(g, v4, v5);
        if (!is_automorphism(g, cand)) continue;
        if (same_subgroup(map_subgroup(cand, a), b)) return cand;
      }
  }
  return std::nullopt;
}

}  // namespace nillat
