#include "nillat/lattice.hpp"

#include <deque>
#include <optional>
#include <random>
#include <utility>

#include "nillat/error.hpp"
#include "nillat/linalg.hpp"

namespace nillat {

namespace {

// g^k = exp(k log g), exact on one-parameter subgroups.
GroupElement power(const GroupElement& g, const Int& k) {
  return exp_of(g.alg, vec_scale(Rat(k), g.log));
}

// Highest nonzero coordinate of log g in the flag, with its value.  The
// leading Malcev coordinate coincides with the leading log coordinate, so no
// peeling is needed here.
std::optional<std::pair<std::size_t, Rat>> lead_of(const MalcevBasis& flag,
                                                   const GroupElement& g) {
  RatVec c = flag.binv * g.log;
  for (std::size_t i = c.size(); i-- > 0;)
    if (c[i] != 0) return std::make_pair(i, c[i]);
  return std::nullopt;
}

// One flag level of an echelonized generating tuple: a generator whose
// leading flag coordinate (always positive) sits at that level.
struct EchLevel {
  GroupElement eta;
  Rat lead;
};

struct Echelon {
  MalcevBasis flag;
  std::vector<std::optional<EchLevel>> level;

  explicit Echelon(MalcevBasis f) : flag(std::move(f)), level(flag.basis.cols()) {}

  std::vector<std::size_t> present() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < level.size(); ++i)
      if (level[i]) idx.push_back(i);
    return idx;
  }
};

// Folds new elements into the echelon.  At each level a Euclidean exchange
// runs on leading coefficients; the loser drops to a lower level and
// continues, so the generated subgroup never changes.
void sift_in(Echelon& eb, std::deque<GroupElement> work) {
  while (!work.empty()) {
    GroupElement g = work.front();
    work.pop_front();
    for (int guard = 0;; ++guard) {
      require(guard < 4096, Err::Internal, "echelon sift did not terminate");
      auto l = lead_of(eb.flag, g);
      if (!l) break;
      auto [i, a] = *l;
      if (!eb.level[i]) {
        if (a < 0) {
          g = inv(g);
          a = -a;
        }
        eb.level[i] = EchLevel{g, a};
        break;
      }
      Rat b = eb.level[i]->lead;
      Int q = rat_floor(a / b);
      GroupElement r = mul(g, power(inv(eb.level[i]->eta), q));
      Rat rem = a - Rat(q) * b;
      if (rem == 0) {
        g = r;
        continue;
      }
      // 0 < rem < b: the reduced element takes over the level and the old
      // generator goes back through the mill.
      GroupElement old = eb.level[i]->eta;
      eb.level[i] = EchLevel{r, rem};
      g = old;
    }
  }
}

// Membership of w in the ordered product set exp(Z eta_1)...exp(Z eta_k):
// peel top level down, each exponent must come out an integer.
bool peel_member(const Echelon& eb, GroupElement w) {
  for (;;) {
    auto l = lead_of(eb.flag, w);
    if (!l) return true;
    auto [i, a] = *l;
    if (!eb.level[i]) return false;
    Rat q = a / eb.level[i]->lead;
    if (!is_integer(q)) return false;
    w = mul(w, power(inv(eb.level[i]->eta), to_int(q)));
  }
}

// Brings the flag coordinate at each lower occupied level i of every eta_j
// into [0, d_i).  Right-multiplying by eta_i^{-q} shifts coordinate i by
// -q d_i and leaves coordinates above i untouched.
void hermite_reduce(Echelon& eb) {
  std::vector<std::size_t> idx = eb.present();
  for (std::size_t jj = 0; jj < idx.size(); ++jj) {
    std::size_t j = idx[jj];
    for (std::size_t ii = jj; ii-- > 0;) {
      std::size_t i = idx[ii];
      RatVec t = malcev_coords(eb.level[j]->eta, eb.flag);
      Int q = rat_floor(t[i] / eb.level[i]->lead);
      if (q != 0)
        eb.level[j]->eta = mul(eb.level[j]->eta, power(eb.level[i]->eta, -q));
    }
  }
}

// Closes the echelon: conjugates of lower generators by higher ones (both
// signs) and the original generators must all peel with integer exponents.
// Violators are sifted back in until nothing new appears.
void stabilize(Echelon& eb, const std::vector<GroupElement>& gens) {
  sift_in(eb, std::deque<GroupElement>(gens.begin(), gens.end()));
  for (int round = 0; round < 64; ++round) {
    hermite_reduce(eb);
    std::vector<GroupElement> bad;
    std::vector<std::size_t> idx = eb.present();
    for (std::size_t jj = 0; jj < idx.size(); ++jj)
      for (std::size_t ii = 0; ii < jj; ++ii) {
        const GroupElement& hi = eb.level[idx[jj]]->eta;
        const GroupElement& lo = eb.level[idx[ii]]->eta;
        for (GroupElement w : {conj(hi, lo), conj(inv(hi), lo)})
          if (!peel_member(eb, w)) bad.push_back(std::move(w));
      }
    for (const GroupElement& g : gens)
      if (!peel_member(eb, g)) bad.push_back(g);
    if (bad.empty()) return;
    sift_in(eb, std::deque<GroupElement>(bad.begin(), bad.end()));
  }
  fail(Err::Internal, "echelon closure did not stabilize");
}

std::vector<GroupElement> generator_elements(const UniformSubgroup& gamma) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < gamma.basis.cols(); ++i)
    gens.push_back(exp_of(gamma.alg, gamma.basis.col(i)));
  return gens;
}

Echelon echelon_close(const UniformSubgroup& gamma, const RatMat& flag) {
  Echelon eb(make_malcev_basis(gamma.alg, flag));
  stabilize(eb, generator_elements(gamma));
  return eb;
}

// {x : [x, span(h)] ⊆ span(target)}
RatMat maps_into(const LieAlgebra& g, const RatMat& h, const RatMat& target) {
  std::vector<RatVec> ann = kernel(target.transpose());
  std::vector<RatVec> rows;
  for (std::size_t b = 0; b < h.cols(); ++b) {
    RatMat rb(g.dim, g.dim);
    for (std::size_t k = 0; k < g.dim; ++k)
      rb.set_col(k, bracket_vec(g, unit_vec(g.dim, k), h.col(b)));
    for (const RatVec& a : ann) {
      RatVec row(g.dim);
      for (std::size_t c = 0; c < g.dim; ++c) {
        Rat v;
        for (std::size_t r = 0; r < g.dim; ++r) v += a[r] * rb(r, c);
        row[c] = v;
      }
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

void append_col(RatMat& m, const RatVec& v) {
  RatMat out(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
    out(r, m.cols()) = v[r];
  }
  m = out;
}

}  // namespace

UniformSubgroup make_subgroup(AlgebraRef alg, const RatMat& basis) {
  make_malcev_basis(alg, basis);  // validates shape, invertibility, prefixes
  return UniformSubgroup{std::move(alg), basis, false};
}

bool contains(const MalcevBasis& mb, const GroupElement& g) {
  require_same_algebra(mb.alg, g.alg);
  RatVec t = malcev_coords(g, mb);
  for (const Rat& c : t)
    if (!is_integer(c)) return false;
  return true;
}

bool contains(const UniformSubgroup& gamma, const GroupElement& g) {
  return contains(make_malcev_basis(gamma.alg, gamma.basis), g);
}

GroupElement subgroup_word(const UniformSubgroup& gamma, const std::vector<Int>& t) {
  require(t.size() == gamma.alg->dim, Err::DimensionMismatch, "word length");
  RatVec rt(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) rt[i] = Rat(t[i]);
  return from_malcev(gamma.alg, rt, gamma.basis);
}

bool verify_closure(UniformSubgroup& gamma, std::uint64_t seed) {
  MalcevBasis mb = make_malcev_basis(gamma.alg, gamma.basis);
  std::vector<GroupElement> gen = generator_elements(gamma);
  const std::size_t n = gen.size();
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i)
    for (std::size_t j = i + 1; j < n && ok; ++j)
      ok = contains(mb, conj(gen[j], gen[i])) && contains(mb, conj(gen[j], inv(gen[i]))) &&
           contains(mb, mul(gen[i], gen[j]));
  if (ok) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int it = 0; it < 100 && ok; ++it) {
      RatVec t1(n), t2(n);
      for (std::size_t i = 0; i < n; ++i) t1[i] = coef(rng);
      for (std::size_t i = 0; i < n; ++i) t2[i] = coef(rng);
      GroupElement w = mul(from_malcev(t1, mb), from_malcev(t2, mb));
      ok = contains(mb, w);
    }
  }
  gamma.verified = ok;
  return ok;
}

bool is_rational_subspace(const UniformSubgroup& gamma, const Subspace& h) {
  require_same_algebra(gamma.alg, h.alg);
  for (std::size_t j = 0; j < h.basis.cols(); ++j)
    if (!solve_rational(gamma.basis, h.basis.col(j))) return false;
  return true;
}

RatMat strong_flag_through(const AlgebraRef& alg, const std::vector<Subspace>& chain) {
  const std::size_t n = alg->dim;
  std::vector<RatMat> targets;
  for (const Subspace& s : chain) {
    require_same_algebra(alg, s.alg);
    require(is_ideal(*alg, s.basis), Err::NotIdealChain, "chain member is not an ideal");
    RatMat c = col_rref(s.basis);
    if (!targets.empty()) {
      require(subspace_leq(targets.back(), c), Err::NotIdealChain, "chain is not increasing");
      if (targets.back().cols() == c.cols()) continue;
    }
    if (c.cols() == 0) continue;
    targets.push_back(c);
  }
  if (targets.empty() || targets.back().cols() < n)
    targets.push_back(col_rref(RatMat::identity(n)));

  std::vector<RatVec> cols;
  RatMat t(n, 0);
  for (const RatMat& c : targets) {
    while (t.cols() < c.cols()) {
      RatMat z = relative_center(*alg, t);
      RatMat s = subspace_intersect(c, z);
      require(s.cols() > t.cols(), Err::Internal, "central refinement stalled");
      for (std::size_t j = 0; j < s.cols() && t.cols() < c.cols(); ++j) {
        RatVec v = s.col(j);
        if (subspace_contains(t, v)) continue;
        cols.push_back(primitive(v));
        append_col(t, cols.back());
      }
    }
  }
  return mat_from_cols(n, cols);
}

RatMat weak_flag_through_subalgebra(const AlgebraRef& alg, const RatMat& h0) {
  const std::size_t n = alg->dim;
  RatMat h = col_rref(h0);
  require(is_subalgebra(*alg, h), Err::BadInput, "not a subalgebra");

  std::vector<RatVec> cols;
  RatMat t(n, 0);
  // ideals of h first, by ascending centers of h relative to the prefix
  while (t.cols() < h.cols()) {
    RatMat s = subspace_intersect(h, maps_into(*alg, h, t));
    require(s.cols() > t.cols(), Err::Internal, "subalgebra refinement stalled");
    for (std::size_t j = 0; j < s.cols() && t.cols() < h.cols(); ++j) {
      RatVec v = s.col(j);
      if (subspace_contains(t, v)) continue;
      cols.push_back(primitive(v));
      append_col(t, cols.back());
    }
  }
  // then extend to the whole algebra one normalizer step at a time
  while (t.cols() < n) {
    RatMat nz = normalizer(*alg, t);
    bool grew = false;
    for (std::size_t j = 0; j < nz.cols() && !grew; ++j) {
      RatVec v = nz.col(j);
      if (subspace_contains(t, v)) continue;
      cols.push_back(primitive(v));
      append_col(t, cols.back());
      grew = true;
    }
    require(grew, Err::Internal, "normalizer extension stalled");
  }
  return mat_from_cols(n, cols);
}

std::vector<LieElement> intersect_with_rational_subgroup(const UniformSubgroup& gamma,
                                                         const Subspace& h) {
  require_same_algebra(gamma.alg, h.alg);
  require(gamma.verified, Err::NotVerified, "subgroup closure has not been verified");
  require(is_rational_subspace(gamma, h), Err::NotRational,
          "subspace is not rational for this subgroup");
  RatMat flag = weak_flag_through_subalgebra(gamma.alg, h.basis);
  Echelon eb = echelon_close(gamma, flag);
  std::vector<LieElement> out;
  for (std::size_t i = 0; i < h.basis.cols(); ++i)
    if (eb.level[i]) out.push_back({gamma.alg, eb.level[i]->eta.log});
  return out;
}

UniformSubgroup basis_through_ideals(const UniformSubgroup& gamma,
                                     const std::vector<Subspace>& chain) {
  require(gamma.verified, Err::NotVerified, "subgroup closure has not been verified");
  for (const Subspace& s : chain)
    require(is_rational_subspace(gamma, s), Err::NotRational,
            "chain member is not rational for this subgroup");
  RatMat flag = strong_flag_through(gamma.alg, chain);
  Echelon eb = echelon_close(gamma, flag);
  std::vector<RatVec> cols;
  for (std::size_t i = 0; i < eb.level.size(); ++i) {
    require(bool(eb.level[i]), Err::Internal, "echelon level missing for a full-rank subgroup");
    cols.push_back(eb.level[i]->eta.log);
  }
  UniformSubgroup out{gamma.alg, mat_from_cols(gamma.alg->dim, cols), false};
  require(verify_closure(out), Err::Internal, "re-coordinatized basis failed verification");
  // each chain member must now sit under a basis prefix of its dimension
  for (const Subspace& s : chain) {
    RatMat prefix(out.basis.rows(), s.dim());
    for (std::size_t r = 0; r < prefix.rows(); ++r)
      for (std::size_t c = 0; c < prefix.cols(); ++c) prefix(r, c) = out.basis(r, c);
    require(subspace_equal(col_rref(prefix), col_rref(s.basis)), Err::Internal,
            "adapted basis prefix mismatch");
  }
  return out;
}

UniformSubgroup map_subgroup(const RatMat& phi, const UniformSubgroup& gamma) {
  UniformSubgroup out = make_subgroup(gamma.alg, phi * gamma.basis);
  out.verified = gamma.verified;
  return out;
}

bool same_subgroup(const UniformSubgroup& a, const UniformSubgroup& b) {
  require_same_algebra(a.alg, b.alg);
  require(a.verified && b.verified, Err::NotVerified, "set comparison needs verified subgroups");
  MalcevBasis ma = make_malcev_basis(a.alg, a.basis);
  MalcevBasis mb = make_malcev_basis(b.alg, b.basis);
  for (const GroupElement& g : generator_elements(a))
    if (!contains(mb, g)) return false;
  for (const GroupElement& g : generator_elements(b))
    if (!contains(ma, g)) return false;
  return true;
}

}  // namespace nillat
