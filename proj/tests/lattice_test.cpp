#include <random>
#include <vector>

#include "doctest.h"
#include "nillat/error.hpp"
#include "nillat/lattice.hpp"
#include "nillat/linalg.hpp"
#include "test_support.hpp"

using namespace nillat;

namespace {

RatMat cols_of(std::size_t n, const std::vector<RatVec>& cols) { return mat_from_cols(n, cols); }

UniformSubgroup standard_subgroup(const AlgebraRef& alg) {
  return make_subgroup(alg, RatMat::identity(alg->dim));
}

RatVec rv(std::vector<Rat> v) { return v; }

}  // namespace

TEST_CASE("membership is integrality of the peeled coordinates") {
  AlgebraRef g54 = catalog("g5_4");
  UniformSubgroup gamma = standard_subgroup(g54);

  CHECK(contains(gamma, group_identity(g54)));
  CHECK(contains(gamma, exp_of(g54, rv({3, -1, 2, 0, 5}))) ==
        contains(gamma, subgroup_word(gamma, {3, -1, 2, 0, 5})));

  // exp(X4 + X3 + X2/2) has coordinates (1/2, 1/2, 1, 1, 0)
  GroupElement bad = exp_of(g54, rv({0, Rat(1, 2), 1, 1, 0}));
  CHECK(malcev_coords(bad, gamma.basis) == rv({Rat(1, 2), Rat(1, 2), 1, 1, 0}));
  CHECK_FALSE(contains(gamma, bad));

  std::mt19937_64 rng(51);
  for (int it = 0; it < 50; ++it) {
    std::vector<Int> t(g54->dim);
    for (Int& c : t) c = testsupport::rand_int(rng, -4, 4);
    CHECK(contains(gamma, subgroup_word(gamma, t)));
  }

  AlgebraRef g3 = catalog("g3");
  CHECK_THROWS_AS((void)contains(gamma, group_identity(g3)), Error);
}

TEST_CASE("closure verification across the catalog") {
  for (const char* name : {"g3", "g5_1", "g5_2", "g3xR2"}) {
    UniformSubgroup gamma = standard_subgroup(catalog(name));
    CHECK_MESSAGE(verify_closure(gamma), name);
    CHECK(gamma.verified);
  }
  UniformSubgroup ab = make_subgroup(abelian(4), RatMat::identity(4));
  CHECK(verify_closure(ab));

  // with unit generators the conjugates land on half-integer coordinates
  for (const char* name : {"g4", "g4xR", "g5_3", "g5_4", "g5_5", "g5_6"}) {
    UniformSubgroup gamma = standard_subgroup(catalog(name));
    CHECK_MESSAGE(!verify_closure(gamma), name);
    CHECK_FALSE(gamma.verified);
  }
}

TEST_CASE("doubling the fourth generator closes the standard tuple") {
  AlgebraRef g54 = catalog("g5_4");
  RatMat b = RatMat::identity(5);
  b(3, 3) = 2;
  UniformSubgroup gamma = make_subgroup(g54, b);
  CHECK(verify_closure(gamma));

  GroupElement w = conj(exp_of(g54, rv({0, 0, 0, 0, 1})), exp_of(g54, rv({0, 0, 0, 2, 0})));
  CHECK(w.log == rv({0, 1, 2, 2, 0}));
  CHECK(malcev_coords(w, gamma.basis) == rv({2, 1, 2, 1, 0}));
  CHECK(contains(gamma, w));
}

TEST_CASE("block-scaled generators close the four-step tuple") {
  AlgebraRef g56 = catalog("g5_6");
  RatMat b = RatMat::identity(5);
  b(1, 1) = 3;
  b(2, 2) = 6;
  b(3, 3) = 6;
  UniformSubgroup gamma = make_subgroup(g56, b);
  CHECK(verify_closure(gamma));

  // conjugation by the top generator wraps 19 copies of X1 into the peel
  GroupElement w = conj(exp_of(g56, rv({0, 0, 0, 0, 1})), exp_of(g56, rv({0, 0, 0, 6, 0})));
  CHECK(malcev_coords(w, gamma.basis) == rv({19, 1, 1, 1, 0}));
}

TEST_CASE("rational subspace check is exact solvability") {
  AlgebraRef g52 = catalog("g5_2");
  UniformSubgroup gamma = standard_subgroup(g52);
  RatVec v(5);
  v[0] = 1;
  v[1] = Rat(1, 3);
  CHECK(is_rational_subspace(gamma, make_subspace(g52, cols_of(5, {v}))));
  CHECK(is_rational_subspace(gamma, center(g52)));
}

TEST_CASE("flags through chains and subalgebras") {
  AlgebraRef g54 = catalog("g5_4");
  std::vector<Subspace> chain = {center(g54), derived(g54)};
  CHECK(strong_flag_through(g54, chain) == RatMat::identity(5));

  // span{X5} is not an ideal
  RatVec x5 = unit_vec(5, 4);
  CHECK_THROWS_WITH_AS((void)strong_flag_through(g54, {make_subspace(g54, cols_of(5, {x5}))}),
                       doctest::Contains("not an ideal"), Error);
  CHECK_THROWS_WITH_AS((void)strong_flag_through(g54, {derived(g54), center(g54)}),
                       doctest::Contains("not increasing"), Error);

  AlgebraRef g52 = catalog("g5_2");
  RatMat f = weak_flag_through_subalgebra(g52, cols_of(5, {x5}));
  CHECK(f == cols_of(5, {unit_vec(5, 4), unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2),
                         unit_vec(5, 3)}));
  (void)make_malcev_basis(g52, f);  // prefixes are subalgebras

  CHECK_THROWS_WITH_AS(
      (void)weak_flag_through_subalgebra(g52, cols_of(5, {unit_vec(5, 3), x5})),
      doctest::Contains("not a subalgebra"), Error);
}

TEST_CASE("intersections with rational subgroups") {
  AlgebraRef g52 = catalog("g5_2");
  UniformSubgroup gamma = standard_subgroup(g52);

  CHECK_THROWS_AS((void)intersect_with_rational_subgroup(gamma, center(g52)), Error);
  REQUIRE(verify_closure(gamma));

  std::vector<LieElement> d = intersect_with_rational_subgroup(gamma, center(g52));
  REQUIRE(d.size() == 2);
  CHECK(d[0].coords == unit_vec(5, 0));
  CHECK(d[1].coords == unit_vec(5, 1));

  d = intersect_with_rational_subgroup(gamma, full_subspace(g52));
  REQUIRE(d.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(d[i].coords == unit_vec(5, i));

  d = intersect_with_rational_subgroup(gamma, make_subspace(g52, cols_of(5, {unit_vec(5, 4)})));
  REQUIRE(d.size() == 1);
  CHECK(d[0].coords == unit_vec(5, 4));

  RatMat b = RatMat::identity(5);
  b(0, 0) = Rat(1, 2);
  b(1, 1) = Rat(1, 4);
  UniformSubgroup fine = make_subgroup(g52, b);
  REQUIRE(verify_closure(fine));
  d = intersect_with_rational_subgroup(fine, make_subspace(g52, cols_of(5, {unit_vec(5, 0)})));
  REQUIRE(d.size() == 1);
  CHECK(d[0].coords == rv({Rat(1, 2), 0, 0, 0, 0}));
}

TEST_CASE("re-coordinatizing on an ideal chain preserves the member set") {
  AlgebraRef g52 = catalog("g5_2");
  RatVec e1 = unit_vec(5, 0), e2 = unit_vec(5, 1), e3 = unit_vec(5, 2), e4 = unit_vec(5, 3),
         e5 = unit_vec(5, 4);
  RatMat b = cols_of(5, {vec_add(e1, e2), e2, vec_add(e3, e1), e4, vec_add(e5, e3)});
  UniformSubgroup gamma = make_subgroup(g52, b);

  CHECK_THROWS_AS((void)basis_through_ideals(gamma, {center(g52)}), Error);
  REQUIRE(verify_closure(gamma));

  UniformSubgroup out = basis_through_ideals(gamma, {center(g52)});
  CHECK(out.verified);

  RatVec tail = e5;
  tail[0] = Rat(1, 2);
  CHECK(out.basis == cols_of(5, {e1, e2, e3, e4, tail}));

  CHECK(same_subgroup(out, gamma));
  CHECK_FALSE(contains(gamma, exp_of(g52, e5)));
  CHECK_FALSE(contains(out, exp_of(g52, e5)));

  // already adapted input reproduces itself
  UniformSubgroup again = basis_through_ideals(out, {center(g52)});
  CHECK(again.basis == out.basis);

  std::mt19937_64 rng(77);
  for (int it = 0; it < 100; ++it) {
    std::vector<Int> t(5);
    for (Int& c : t) c = testsupport::rand_int(rng, -3, 3);
    CHECK(contains(out, subgroup_word(gamma, t)));
    CHECK(contains(gamma, subgroup_word(out, t)));
  }
}

TEST_CASE("adapted basis keeps scaled generators in place") {
  AlgebraRef g54 = catalog("g5_4");
  RatMat b = RatMat::identity(5);
  b(3, 3) = 2;
  UniformSubgroup gamma = make_subgroup(g54, b);
  REQUIRE(verify_closure(gamma));
  UniformSubgroup out = basis_through_ideals(gamma, {center(g54), derived(g54)});
  CHECK(out.basis == b);
}

TEST_CASE("mapping subgroups through automorphisms") {
  AlgebraRef g56 = catalog("g5_6");
  RatMat b = RatMat::identity(5);
  b(1, 1) = 3;
  b(2, 2) = 6;
  b(3, 3) = 6;
  UniformSubgroup gamma = make_subgroup(g56, b);
  REQUIRE(verify_closure(gamma));

  RatMat phi(5, 5);
  phi(0, 0) = 32;
  phi(1, 1) = 16;
  phi(2, 2) = 8;
  phi(3, 3) = 4;
  phi(4, 4) = 2;
  REQUIRE(is_automorphism(*g56, phi));

  UniformSubgroup image = map_subgroup(phi, gamma);
  CHECK(image.verified);
  CHECK(verify_closure(image));
  CHECK(same_subgroup(gamma, gamma));
  CHECK_FALSE(same_subgroup(gamma, image));
}

TEST_CASE("generating tuples must be weak Malcev bases") {
  AlgebraRef g52 = catalog("g5_2");
  RatMat rev(5, 5);
  for (std::size_t i = 0; i < 5; ++i) rev(i, 4 - i) = 1;
  CHECK_THROWS_AS((void)make_subgroup(g52, rev), Error);
}
