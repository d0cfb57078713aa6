#include "nillat/census.hpp"

#include <algorithm>

#include "nillat/error.hpp"

namespace nillat {

namespace {

void sort_classes(CensusResult& out) {
  for (CensusClass& c : out.classes) std::sort(c.members.begin(), c.members.end());
  std::sort(out.classes.begin(), out.classes.end(),
            [](const CensusClass& a, const CensusClass& b) {
              return a.members.front() < b.members.front();
            });
}

CensusResult census_g52(const Int& bound) {
  CensusResult out{"g5_2", bound, 0, 0, {}};
  for (Int r2 = 1; r2 <= bound; ++r2)
    for (Int r1 = 1; r1 <= r2; ++r1) {
      if (r2 % r1 != 0) continue;
      g52_lattice({r1, r2, 0});
      ++out.lattices;
      out.classes.push_back({{IntVec{r1, r2}}});
    }
  sort_classes(out);
  return out;
}

CensusResult census_g4xr(const Int& bound) {
  CensusResult out{"g4xR", bound, 0, 0, {}};
  for (Int p1 = 1; p1 <= bound; ++p1)
    for (Int p2 = 1; p2 <= bound; ++p2)
      for (Int p3 = 0; p3 < 2 * p1; ++p3) {
        if (!g4xr_validate({p1, p2, p3})) continue;
        g4xr_construct({p1, p2, p3});
        ++out.lattices;
        out.classes.push_back({{IntVec{p1, p2, p3}}});
      }
  sort_classes(out);
  return out;
}

CensusResult census_g54(const Int& bound, const Int& entry) {
  CensusResult out{"g5_4", bound, entry, 0, {}};
  for (Int d00 = 1; d00 <= entry; ++d00)
    for (Int d01 = 0; d01 <= entry; ++d01)
      for (Int d02 = 0; d02 <= entry; ++d02)
        for (Int d11 = 1; d11 <= entry; ++d11)
          for (Int d12 = 0; d12 <= entry; ++d12)
            for (Int d22 = 1; d22 <= entry; ++d22)
              for (Int m = 1; m <= bound; ++m) {
                IntMat d(3, 3);
                d(0, 0) = d00;
                d(0, 1) = d01;
                d(0, 2) = d02;
                d(1, 1) = d11;
                d(1, 2) = d12;
                d(2, 2) = d22;
                if (!s4_member(d, m)) continue;
                g54_lattice({d, m});
                ++out.lattices;
                out.classes.push_back({{IntVec{d00, d01, d02, d11, d12, d22, m}}});
              }
  sort_classes(out);
  return out;
}

CensusResult census_g56(const Int& bound, const Int& entry) {
  CensusResult out{"g5_6", bound, entry, 0, {}};
  std::vector<DmTuple> members;
  std::vector<IntVec> keys;
  for (Int d00 = 1; d00 <= entry; ++d00)
    for (Int d01 = 0; d01 <= entry; ++d01)
      for (Int d02 = 0; d02 <= entry; ++d02)
        for (Int d11 = 1; d11 <= entry; ++d11)
          for (Int d12 = 0; d12 <= entry; ++d12)
            for (Int d22 = 1; d22 <= entry; ++d22)
              for (Int d33 = 1; d33 <= entry; ++d33)
                for (Int m = 1; m <= bound; ++m) {
                  IntMat d(4, 4);
                  d(0, 0) = d00;
                  d(0, 1) = d01;
                  d(0, 2) = d02;
                  d(1, 1) = d11;
                  d(1, 2) = d12;
                  d(2, 2) = d22;
                  d(3, 3) = d33;
                  if (!s6_member(d, m)) continue;
                  g56_lattice({d, m});
                  ++out.lattices;
                  members.push_back({d, m});
                  keys.push_back(IntVec{d00, d01, d02, d11, d12, d22, d33, m});
                }

  std::vector<std::size_t> cls(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    cls[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (cls[j] == j && g56_equivalent(members[j], members[i])) {
        cls[i] = j;
        break;
      }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (cls[i] != i) continue;
    CensusClass c;
    for (std::size_t j = i; j < members.size(); ++j)
      if (cls[j] == i) c.members.push_back(keys[j]);
    out.classes.push_back(std::move(c));
  }
  sort_classes(out);
  return out;
}

}  // namespace

CensusResult census(const std::string& group, const Int& bound, const Int& entry_bound) {
  require(bound >= 1, Err::InvalidParams, "bound must be at least 1");
  const Int entry = entry_bound > 0 ? entry_bound : bound;
  if (group == "g5_2") return census_g52(bound);
  if (group == "g5_4") return census_g54(bound, entry);
  if (group == "g5_6") return census_g56(bound, entry);
  if (group == "g4xR") return census_g4xr(bound);
  fail(Err::UnknownGroup, "census covers g5_2, g5_4, g5_6 and g4xR");
}

}  // namespace nillat
