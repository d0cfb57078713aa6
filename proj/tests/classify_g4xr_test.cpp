#include <optional>

#include "doctest.h"
#include "nillat/classify.hpp"
#include "nillat/lattice.hpp"
#include "nillat/linalg.hpp"

using namespace nillat;

namespace {

// The three parameter constraints, restated from scratch.
bool triple_ok(const Int& p1, const Int& p2, const Int& p3) {
  if (p1 < 1) return false;
  if (p2 < 1) return false;
  if (p3 < 0) return false;
  if (p3 >= 2 * p1) return false;
  return ((p1 * p2 + p3) % 2) == 0;
}

bool conjugation_closed(const UniformSubgroup& gamma) {
  for (std::size_t i = 0; i < gamma.basis.cols(); ++i)
    for (std::size_t j = 0; j < gamma.basis.cols(); ++j) {
      if (i == j) continue;
      GroupElement gi = exp_of(gamma.alg, gamma.basis.col(i));
      GroupElement gj = exp_of(gamma.alg, gamma.basis.col(j));
      if (!contains(gamma, conj(gi, gj))) return false;
      if (!contains(gamma, conj(inv(gi), gj))) return false;
    }
  return true;
}

// The (1,1,1) lattice inside the four-dimensional factor.
UniformSubgroup g4_lattice_111() {
  AlgebraRef g4 = catalog("g4");
  RatMat m(4, 4);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(1, 2) = Rat(-1, 2);
  m(2, 2) = 1;
  m(3, 3) = 1;
  UniformSubgroup h = make_subgroup(g4, m);
  REQUIRE(verify_closure(h));
  return h;
}

}  // namespace

TEST_CASE("parameter validation matches the written-out constraints") {
  CHECK(g4xr_validate({1, 1, 1}));
  CHECK_FALSE(g4xr_validate({1, 1, 0}));
  CHECK(g4xr_validate({2, 3, 0}));
  for (Int p1 = -1; p1 <= 4; ++p1)
    for (Int p2 = -1; p2 <= 4; ++p2)
      for (Int p3 = -2; p3 <= 9; ++p3)
        CHECK(g4xr_validate({p1, p2, p3}) == triple_ok(p1, p2, p3));
}

TEST_CASE("constructed lattices are closed") {
  for (Int p1 = 1; p1 <= 3; ++p1)
    for (Int p2 = 1; p2 <= 3; ++p2)
      for (Int p3 = 0; p3 < 2 * p1; ++p3) {
        if (!g4xr_validate({p1, p2, p3})) continue;
        UniformSubgroup gamma = g4xr_construct({p1, p2, p3});
        CHECK(gamma.verified);
        CHECK(conjugation_closed(gamma));
      }

  UniformSubgroup gamma = g4xr_construct({2, 3, 2});
  CHECK(gamma.basis(4, 0) == 1);
  CHECK(gamma.basis(0, 1) == 1);
  CHECK(gamma.basis(1, 2) == 2);
  CHECK(gamma.basis(1, 3) == -1);
  CHECK(gamma.basis(2, 3) == 6);
  CHECK(gamma.basis(3, 4) == 1);

  CHECK_THROWS_AS(g4xr_construct({1, 1, 0}), Error);
  CHECK_THROWS_AS(g4xr_construct({0, 1, 1}), Error);
  CHECK_THROWS_AS(g4xr_construct({1, 0, 1}), Error);
  CHECK_THROWS_AS(g4xr_construct({1, 1, 2}), Error);
  CHECK_THROWS_AS(g4xr_construct({2, 1, 1}), Error);
}

TEST_CASE("the integer-coordinate lattice is not closed") {
  // conj(exp X4, exp X3) has a half-integer X1 component, so the naive
  // basis generates a non-discrete subgroup.
  UniformSubgroup gamma = make_subgroup(catalog("g4xR"), RatMat::identity(5));
  CHECK_FALSE(verify_closure(gamma));
}

TEST_CASE("splitting an already split lattice is the identity") {
  UniformSubgroup gamma = g4xr_construct({1, 1, 1});
  SplitResult s = split_abelian_factor(gamma);
  CHECK(s.r == 1);
  CHECK(s.phi == RatMat::identity(5));
  CHECK(s.h.verified);
  CHECK(s.h.alg->name == "g4");
  CHECK(same_subgroup(s.h, g4_lattice_111()));
  CHECK(abelian_factor_dim(s.h.alg) == 0);
}

TEST_CASE("splitting strips mixed Abelian components") {
  AlgebraRef alg = catalog("g4xR");

  // e rides on the X3 generator with an integer coefficient; reducing
  // against the factor lattice already removes it.
  RatMat m(5, 5);
  m(4, 0) = 1;
  m(0, 1) = 1;
  m(1, 2) = 1;
  m(1, 3) = Rat(-1, 2);
  m(2, 3) = 1;
  m(4, 3) = 1;
  m(3, 4) = 1;
  UniformSubgroup gamma = make_subgroup(alg, m);
  REQUIRE(verify_closure(gamma));
  SplitResult s = split_abelian_factor(gamma);
  CHECK(s.r == 1);
  CHECK(s.phi == RatMat::identity(5));
  CHECK(same_subgroup(s.h, g4_lattice_111()));

  // A fractional coefficient survives the reduction and needs the genuine
  // correction map.
  m(4, 3) = Rat(1, 2);
  UniformSubgroup gamma2 = make_subgroup(alg, m);
  REQUIRE(verify_closure(gamma2));
  SplitResult s2 = split_abelian_factor(gamma2);
  CHECK(s2.r == 1);
  CHECK(s2.phi != RatMat::identity(5));
  CHECK(is_automorphism(*alg, s2.phi));
  CHECK(same_subgroup(s2.h, g4_lattice_111()));

  // The witness really maps gamma2 onto the direct product of the factor
  // lattices.
  RatMat pb(5, 5);
  pb(4, 0) = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) pb(i, j + 1) = s2.h.basis(i, j);
  UniformSubgroup prod = make_subgroup(alg, pb);
  REQUIRE(verify_closure(prod));
  CHECK(same_subgroup(map_subgroup(s2.phi, gamma2), prod));
}

TEST_CASE("splitting handles a plane factor") {
  UniformSubgroup gamma = make_subgroup(catalog("g3xR2"), RatMat::identity(5));
  REQUIRE(verify_closure(gamma));
  SplitResult s = split_abelian_factor(gamma);
  CHECK(s.r == 2);
  CHECK(s.phi == RatMat::identity(5));
  CHECK(s.h.alg->name == "g3");
  UniformSubgroup expected = make_subgroup(catalog("g3"), RatMat::identity(3));
  REQUIRE(verify_closure(expected));
  CHECK(same_subgroup(s.h, expected));
}

TEST_CASE("split error conditions") {
  UniformSubgroup g4lat = g4_lattice_111();
  CHECK_THROWS_AS(split_abelian_factor(g4lat), Error);
  try {
    split_abelian_factor(g4lat);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NoAbelianFactor);
  }

  UniformSubgroup unverified = make_subgroup(catalog("g4xR"), g4xr_construct({1, 1, 1}).basis);
  CHECK_THROWS_AS(split_abelian_factor(unverified), Error);
  try {
    split_abelian_factor(unverified);
  } catch (const Error& e) {
    CHECK(e.code() == Err::NotVerified);
  }
}

TEST_CASE("the search finds the identity on equal subgroups") {
  UniformSubgroup a = g4xr_construct({2, 3, 0});
  std::optional<RatMat> w = g4xr_isomorphic_search(a, a, 2);
  REQUIRE(w.has_value());
  CHECK(*w == RatMat::identity(5));
}

TEST_CASE("the search recovers a planted automorphism") {
  AlgebraRef alg = catalog("g4xR");
  // Columns follow the shape every automorphism has: X1 and X2 are scaled
  // into the derived directions, X3 stays inside X1..X3 plus e, X4 is free,
  // e maps into the center.
  RatMat psi(5, 5);
  psi(0, 0) = 1;
  psi(0, 1) = 1;
  psi(1, 1) = 1;
  psi(0, 2) = Rat(1, 2);
  psi(1, 2) = 1;
  psi(2, 2) = 1;
  psi(4, 2) = 1;
  psi(2, 3) = 1;
  psi(3, 3) = 1;
  psi(4, 3) = 1;
  psi(0, 4) = 1;
  psi(4, 4) = 1;
  REQUIRE(is_automorphism(*alg, psi));

  UniformSubgroup a = g4xr_construct({2, 1, 2});
  UniformSubgroup b = map_subgroup(psi, a);
  REQUIRE(b.verified);
  std::optional<RatMat> w = g4xr_isomorphic_search(a, b, 3);
  REQUIRE(w.has_value());
  CHECK(is_automorphism(*alg, *w));
  CHECK(same_subgroup(map_subgroup(*w, a), b));
}

TEST_CASE("parameter triples in distinct classes are never connected") {
  // p3 only matters modulo twice gcd(p1, p2) and up to sign, so the grid
  // below picks one triple per class.
  std::vector<G4xRParams> grid = {{1, 1, 1}, {1, 2, 0}, {2, 1, 0}, {2, 2, 0}, {2, 2, 2}};
  std::vector<UniformSubgroup> lats;
  for (const G4xRParams& p : grid) lats.push_back(g4xr_construct(p));
  for (std::size_t i = 0; i < lats.size(); ++i)
    for (std::size_t j = 0; j < lats.size(); ++j) {
      if (i == j) continue;
      CHECK_FALSE(g4xr_isomorphic_search(lats[i], lats[j], 2).has_value());
    }
}

TEST_CASE("triples congruent modulo twice the gcd are connected") {
  // The shear X2 -> X2 + X1/2, X3 -> X3 + X2/2 is an automorphism and maps
  // the (2,1,0) lattice onto the (2,1,2) lattice, so these two valid triples
  // present isomorphic subgroups. The search must find such a witness.
  AlgebraRef alg = catalog("g4xR");
  RatMat shear = RatMat::identity(5);
  shear(0, 1) = Rat(1, 2);
  shear(1, 2) = Rat(1, 2);
  REQUIRE(is_automorphism(*alg, shear));
  UniformSubgroup a = g4xr_construct({2, 1, 0});
  UniformSubgroup b = g4xr_construct({2, 1, 2});
  REQUIRE(same_subgroup(map_subgroup(shear, a), b));

  std::optional<RatMat> w = g4xr_isomorphic_search(a, b, 2);
  REQUIRE(w.has_value());
  CHECK(is_automorphism(*alg, *w));
  CHECK(same_subgroup(map_subgroup(*w, a), b));
}

TEST_CASE("search guards") {
  UniformSubgroup a = g4xr_construct({1, 1, 1});
  CHECK_THROWS_AS(g4xr_isomorphic_search(a, a, 0), Error);

  UniformSubgroup g4lat = g4_lattice_111();
  CHECK_THROWS_AS(g4xr_isomorphic_search(g4lat, g4lat, 1), Error);

  UniformSubgroup unverified = make_subgroup(catalog("g4xR"), a.basis);
  CHECK_THROWS_AS(g4xr_isomorphic_search(a, unverified, 1), Error);
}
