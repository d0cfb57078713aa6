#pragma once

#include <string>

#include "json.hpp"

#include "nillat/lattice.hpp"

namespace nillat {

using Json = nlohmann::json;

// Wire conventions. Every exact scalar travels as a string: "n" for an
// integer, "p/q" for a proper rational; plain JSON integers are also accepted
// on input. Matrices are {"rows": r, "cols": c, "entries": [[row], ...]}.
// Group elements are {"algebra": name, "log": [coords]}. Lattices are
// {"algebra": name, "basis": [[column], ...], "verified": flag}; the basis
// columns hold the logs of the generators. The verified flag is carried as
// data only, consumers must re-run the closure check before relying on it.

Json to_wire(const Int& n);
Json to_wire(const Rat& r);
Json to_wire(const IntVec& v);
Json to_wire(const RatVec& v);
Json to_wire(const IntMat& m);
Json to_wire(const RatMat& m);
Json to_wire(const GroupElement& g);
Json to_wire(const UniformSubgroup& gamma);

Int int_from_wire(const Json& j);
Rat rat_from_wire(const Json& j);
RatVec rat_vec_from_wire(const Json& j);
IntMat int_mat_from_wire(const Json& j);
RatMat rat_mat_from_wire(const Json& j);
GroupElement group_element_from_wire(const Json& j);
UniformSubgroup subgroup_from_wire(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace nillat
