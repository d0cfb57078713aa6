#include "nillat/classify.hpp"

#include <algorithm>
#include <vector>

#include "classify_util.hpp"

namespace nillat {

namespace {

// Basis directions of the Abelian factor: central axes that no bracket
// reaches. The catalog product algebras keep these as coordinate axes.
std::vector<std::size_t> abelian_axes(const LieAlgebra& g) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.dim; ++i) {
    bool central = true;
    for (std::size_t j = 0; j < g.dim && central; ++j)
      if (!vec_is_zero(g.basis_bracket(i, j))) central = false;
    if (!central) continue;
    bool reached = false;
    for (std::size_t j = 0; j < g.dim && !reached; ++j)
      for (std::size_t k = 0; k < g.dim && !reached; ++k)
        if (g.basis_bracket(j, k)[i] != 0) reached = true;
    if (!reached) idx.push_back(i);
  }
  return idx;
}

// The complementary axes must carry the bracket table of a catalog algebra;
// that algebra is where the split-off factor lives.
AlgebraRef match_nilpotent_factor(const LieAlgebra& g, const std::vector<std::size_t>& nidx) {
  std::vector<const char*> names;
  if (nidx.size() == 3) names = {"g3"};
  if (nidx.size() == 4) names = {"g4"};
  if (nidx.size() == 5) names = {"g5_1", "g5_2", "g5_3", "g5_4", "g5_5", "g5_6"};
  for (const char* name : names) {
    AlgebraRef cand = catalog(name);
    bool ok = true;
    for (std::size_t a = 0; a < nidx.size() && ok; ++a)
      for (std::size_t b = 0; b < nidx.size() && ok; ++b) {
        const RatVec& full = g.basis_bracket(nidx[a], nidx[b]);
        const RatVec& part = cand->basis_bracket(a, b);
        for (std::size_t k = 0; k < nidx.size(); ++k)
          if (full[nidx[k]] != part[k]) {
            ok = false;
            break;
          }
      }
    if (ok) return cand;
  }
  fail(Err::AlgebraMismatch, "nilpotent factor does not match a catalog algebra");
}

}  // namespace

bool g4xr_validate(const G4xRParams& p) {
  if (p.p1 < 1 || p.p2 < 1) return false;
  if (p.p3 < 0 || p.p3 >= 2 * p.p1) return false;
  return (p.p1 * p.p2 + p.p3) % 2 == 0;
}

UniformSubgroup g4xr_construct(const G4xRParams& p) {
  require(g4xr_validate(p), Err::InvalidParams, "parameters fail the lattice constraints");
  AlgebraRef alg = catalog("g4xR");
  // Generators e, X1, p1 X2, p1 p2 X3 - (p3/2) X2, X4 in the coordinate
  // order X1..X4, e. The parity constraint on p1 p2 + p3 is exactly what
  // makes the X4 conjugates land back in the lattice.
  RatMat basis(5, 5);
  basis(4, 0) = 1;
  basis(0, 1) = 1;
  basis(1, 2) = Rat(p.p1);
  basis(1, 3) = Rat(-p.p3, Int(2));
  basis(2, 3) = Rat(p.p1 * p.p2);
  basis(3, 4) = 1;
  UniformSubgroup out = make_subgroup(alg, basis);
  require(verify_closure(out), Err::Internal, "parameter lattice failed closure");
  return out;
}

SplitResult split_abelian_factor(const UniformSubgroup& gamma) {
  require(gamma.alg != nullptr, Err::AlgebraMismatch, "missing algebra");
  require(gamma.verified, Err::NotVerified, "split needs a verified subgroup");
  const AlgebraRef& alg = gamma.alg;
  const LieAlgebra& g = *alg;
  const std::size_t n = g.dim;

  const std::size_t r = abelian_factor_dim(alg);
  require(r > 0, Err::NoAbelianFactor, "no Abelian factor to split off");
  std::vector<std::size_t> aidx = abelian_axes(g);
  require(aidx.size() == r, Err::AlgebraMismatch, "basis is not adapted to the Abelian factor");
  std::vector<std::size_t> nidx;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(aidx.begin(), aidx.end(), i) == aidx.end()) nidx.push_back(i);
  require(!nidx.empty(), Err::AlgebraMismatch, "the algebra is Abelian, nothing to split against");
  AlgebraRef nfac = match_nilpotent_factor(g, nidx);

  // Adapted generators through z cap D, z, D + z. The z-stage columns carry
  // the factor lattice; the echelon step has already reduced the Abelian
  // components of the later columns against it.
  Subspace zsub = center(alg);
  Subspace dsub = derived(alg);
  RatMat zd = subspace_intersect(zsub.basis, dsub.basis);
  RatMat dz = subspace_sum(dsub.basis, zsub.basis);
  std::vector<Subspace> chain;
  chain.push_back(make_subspace(alg, zd));
  chain.push_back(zsub);
  if (dz.cols() > zsub.dim()) chain.push_back(make_subspace(alg, dz));
  UniformSubgroup adapted = basis_through_ideals(gamma, chain);
  const RatMat& y = adapted.basis;

  const std::size_t s = zd.cols();
  const std::size_t t = zsub.dim() - s;
  const std::size_t dzdim = dz.cols();

  // First correction: subtract from each z-stage generator its component in
  // z cap D. The correction values are central and killed by the projection
  // onto the Abelian axes, so brackets are untouched.
  RatMat ua(t, t);
  RatMat vb(n, t);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t i = 0; i < t; ++i) ua(i, j) = y(aidx[i], s + j);
    for (std::size_t i = 0; i < n; ++i) vb(i, j) = y(i, s + j);
    for (std::size_t i = 0; i < t; ++i) vb(aidx[i], j) = 0;
  }
  require(rank(ua) == t, Err::Internal, "z-stage does not span the Abelian factor");
  RatMat proj(t, n);
  for (std::size_t i = 0; i < t; ++i) proj(i, aidx[i]) = 1;
  RatMat corr = vb * inverse(ua) * proj;
  RatMat psi1 = RatMat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) psi1(i, j) -= corr(i, j);

  // Second correction: strip the Abelian components of the generators above
  // D + z. The map vanishes on D + z, hence on every bracket, and its values
  // are central, so it is again an automorphism.
  RatMat y1 = psi1 * y;
  RatMat psi2 = RatMat::identity(n);
  if (n > dzdim) {
    RatMat m(n, n);
    RatMat tval(n, n);
    for (std::size_t j = 0; j < dzdim; ++j) m.set_col(j, dz.col(j));
    for (std::size_t j = dzdim; j < n; ++j) {
      RatVec c = y1.col(j);
      m.set_col(j, c);
      RatVec tv(n);
      for (std::size_t i : aidx) tv[i] = -c[i];
      tval.set_col(j, tv);
    }
    RatMat tmap = tval * inverse(m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) psi2(i, j) += tmap(i, j);
  }

  RatMat phi = psi2 * psi1;
  RatMat gfin = phi * y;

  // Every generator must now be pure: z-stage columns inside the factor,
  // the rest inside the nilpotent part. A leftover Abelian component on the
  // D + z layer cannot be removed by any central correction; closure rules
  // it out for the inputs this split is specified on.
  std::vector<bool> arow(n, false);
  for (std::size_t i : aidx) arow[i] = true;
  for (std::size_t j = 0; j < n; ++j) {
    bool zcol = j >= s && j < s + t;
    for (std::size_t i = 0; i < n; ++i) {
      if (zcol && !arow[i])
        require(gfin(i, j) == 0, Err::Internal, "factor generator keeps a nilpotent component");
      if (!zcol && arow[i])
        require(gfin(i, j) == 0, Err::Internal, "nilpotent generator keeps an Abelian component");
    }
  }

  RatMat hbasis(nidx.size(), nidx.size());
  std::size_t hj = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j >= s && j < s + t) continue;
    for (std::size_t i = 0; i < nidx.size(); ++i) hbasis(i, hj) = gfin(nidx[i], j);
    ++hj;
  }
  UniformSubgroup h = make_subgroup(nfac, hbasis);
  require(verify_closure(h), Err::Internal, "split factor fails closure");

  UniformSubgroup product = make_subgroup(alg, gfin);
  require(verify_closure(product), Err::Internal, "split product fails closure");
  detail::check_witness(phi, gamma, product);
  return {h, t, phi};
}

std::optional<RatMat> g4xr_isomorphic_search(const UniformSubgroup& a, const UniformSubgroup& b,
                                             const Int& bound) {
  require(a.alg && a.alg->name == "g4xR" && b.alg && b.alg->name == "g4xR", Err::AlgebraMismatch,
          "search expects g4xR subgroups");
  require(a.verified && b.verified, Err::NotVerified, "search needs verified subgroups");
  require(bound >= 1, Err::InvalidParams, "bound must be at least 1");
  const AlgebraRef& alg = a.alg;
  const LieAlgebra& g = *alg;

  Subspace zsub = center(alg);
  Subspace dsub = derived(alg);
  std::vector<Subspace> chain = {make_subspace(alg, subspace_intersect(zsub.basis, dsub.basis)),
                                 zsub, make_subspace(alg, subspace_sum(dsub.basis, zsub.basis))};
  RatMat ya = basis_through_ideals(a, chain).basis;
  RatMat yb = basis_through_ideals(b, chain).basis;

  // Adapted column order: X1-lead, e-lead, X2-lead, X3-lead, X4-lead. Any
  // automorphism carrying a onto b multiplies the five quotient-level
  // lattices by its eigenvalue on the matching layer, which pins the leading
  // coefficients up to sign and leaves eight integer degrees of freedom on
  // the images of the e-lead and X3-lead generators; containment of all five
  // images plus the covolume identity then forces equality, so those eight
  // reduce to the two offsets enumerated below.
  const Rat sa1 = ya(0, 0), sae = ya(4, 1), sa2 = ya(1, 2), sa3 = ya(2, 3), sa4 = ya(3, 4);
  const Rat sb1 = yb(0, 0), sbe = yb(4, 1), sb2 = yb(1, 2), sb3 = yb(2, 3), sb4 = yb(3, 4);
  const Rat lam_abs = sb4 / sa4;
  const Rat mu_abs = sb3 / sa3;
  const Rat ga_abs = sbe / sae;
  if (sb2 != lam_abs * mu_abs * sa2) return std::nullopt;
  if (sb1 != lam_abs * lam_abs * mu_abs * sa1) return std::nullopt;

  const Rat t12 = ya(0, 1);
  const Rat x1 = ya(0, 2), xe = ya(4, 2);
  const Rat w1 = ya(0, 3), w2 = ya(1, 3), we = ya(4, 3);
  const Rat v1 = ya(0, 4), v2 = ya(1, 4), v3 = ya(2, 4), ve = ya(4, 4);

  std::vector<Int> offsets{0};
  for (Int k = 1; k <= bound; ++k) {
    offsets.push_back(k);
    offsets.push_back(-k);
  }

  for (int s4 : {1, -1}) {
    const Rat d4 = Rat(s4) * lam_abs;
    for (int s3 : {1, -1}) {
      const Rat c3 = Rat(s3) * mu_abs;
      const Rat lam = d4 * d4 * c3;
      const Rat mu = d4 * c3;
      const Rat eps3 = Rat(s4 * s3);
      for (int se : {1, -1}) {
        const Rat ga = Rat(se) * ga_abs;
        for (const Int& k1 : offsets) {
          // Image of the e-lead generator: yb2^{se} yb1^{k1}.
          const Rat beta = (Rat(k1) * sb1 + Rat(se) * yb(0, 1) - t12 * lam) / sae;
          for (const Int& j3 : offsets) {
            // Image of the X3-lead generator: yb4^{s3} yb3^{j3}.
            const Rat c2 = (Rat(s3) * yb(1, 3) + Rat(j3) * sb2 - w2 * mu) / sa3;
            const Rat m1 = d4 * c2;
            // The X2-lead generator has no freedom left; its image must
            // already sit in the target lattice.
            const Rat q2 = (xe * ga - eps3 * yb(4, 2)) / sbe;
            if (!is_integer(q2)) continue;
            const Rat t1 =
                (sa2 * m1 + x1 * lam + xe * beta - eps3 * yb(0, 2) - q2 * yb(0, 1)) / sb1;
            if (!is_integer(t1)) continue;

            const Rat c0 = (Rat(s3) * yb(4, 3) + Rat(j3) * yb(4, 2) - we * ga) / sa3;
            const Rat c1 =
                (Rat(s3) * yb(0, 3) + Rat(j3) * yb(0, 2) - w2 * m1 - w1 * lam - we * beta) / sa3;
            // Image of the X4-lead generator: yb5^{s4}.
            const Rat d3 = (Rat(s4) * yb(2, 4) - v3 * c3) / sa4;
            const Rat d2 = (Rat(s4) * yb(1, 4) - v3 * c2 - v2 * mu) / sa4;
            const Rat d1 =
                (Rat(s4) * yb(0, 4) - v3 * c1 - v2 * m1 - v1 * lam - ve * beta) / sa4;
            const Rat d0 = (Rat(s4) * yb(4, 4) - v3 * c0 - ve * ga) / sa4;

            RatMat phi(5, 5);
            phi(0, 0) = lam;
            phi(0, 1) = m1;
            phi(1, 1) = mu;
            phi(0, 2) = c1;
            phi(1, 2) = c2;
            phi(2, 2) = c3;
            phi(4, 2) = c0;
            phi(0, 3) = d1;
            phi(1, 3) = d2;
            phi(2, 3) = d3;
            phi(3, 3) = d4;
            phi(4, 3) = d0;
            phi(0, 4) = beta;
            phi(4, 4) = ga;
            if (!is_automorphism(g, phi)) continue;
            if (!same_subgroup(map_subgroup(phi, a), b)) continue;
            return phi;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace nillat
