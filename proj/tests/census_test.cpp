#include "doctest.h"
#include "nillat/census.hpp"

using namespace nillat;

namespace {

bool has_member(const CensusResult& r, const IntVec& key) {
  for (const CensusClass& c : r.classes)
    for (const IntVec& m : c.members)
      if (m == key) return true;
  return false;
}

const CensusClass* class_of(const CensusResult& r, const IntVec& key) {
  for (const CensusClass& c : r.classes)
    for (const IntVec& m : c.members)
      if (m == key) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("divisor pairs up to two") {
  CensusResult r = census("g5_2", 2);
  REQUIRE(r.classes.size() == 3);
  CHECK(r.classes[0].members == std::vector<IntVec>{{1, 1}});
  CHECK(r.classes[1].members == std::vector<IntVec>{{1, 2}});
  CHECK(r.classes[2].members == std::vector<IntVec>{{2, 2}});
  CHECK(r.lattices == 3);
}

TEST_CASE("smallest product grid has one lattice") {
  CensusResult r = census("g4xR", 1);
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].members == std::vector<IntVec>{{1, 1, 1}});
  CHECK(r.lattices == 1);
}

TEST_CASE("tuple sweeps find the reference members") {
  CensusResult r4 = census("g5_4", 2, 2);
  CHECK(has_member(r4, {1, 0, 0, 1, 0, 1, 2}));
  std::size_t total4 = 0;
  for (const CensusClass& c : r4.classes) {
    CHECK(c.members.size() == 1);
    total4 += c.members.size();
  }
  CHECK(total4 == r4.lattices);

  CensusResult r6 = census("g5_6", 1, 6);
  CHECK(has_member(r6, {1, 0, 0, 3, 0, 6, 6, 1}));
  // tuples presenting the same lattice through a column mix collapse into
  // one class
  const CensusClass* c = class_of(r6, {1, 0, 0, 3, 0, 6, 6, 1});
  REQUIRE(c != nullptr);
  CHECK(std::find(c->members.begin(), c->members.end(), IntVec{1, 1, 2, 3, 3, 6, 6, 1}) !=
        c->members.end());
  std::size_t total6 = 0;
  for (const CensusClass& cc : r6.classes) total6 += cc.members.size();
  CHECK(total6 == r6.lattices);
}

TEST_CASE("census is deterministic") {
  CensusResult a = census("g5_6", 1, 4);
  CensusResult b = census("g5_6", 1, 4);
  REQUIRE(a.classes.size() == b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i)
    CHECK(a.classes[i].members == b.classes[i].members);
}

TEST_CASE("census guards") {
  CHECK_THROWS_AS(census("g3", 2), Error);
  CHECK_THROWS_AS(census("g5_2", 0), Error);
}
