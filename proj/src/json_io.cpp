#include "nillat/json_io.hpp"

#include <cstdint>
#include <fstream>

#include "nillat/error.hpp"

namespace nillat {

namespace {

// Desk-scale guard; a matrix bigger than this in a JSON file is a mistake.
constexpr std::size_t kMaxMatrixSide = 4096;

Rat rat_from_string(const std::string& s) {
  try {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    require(q != 0, Err::BadInput, "zero denominator in \"" + s + "\"");
    return Rat(p, q);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::BadInput, "not a rational: \"" + s + "\"");
  }
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), Err::BadInput,
          std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t dim_from_wire(const Json& j, const char* what) {
  Int n = int_from_wire(j);
  require(n >= 1 && n <= Int(kMaxMatrixSide), Err::BadInput,
          std::string(what) + " out of range");
  return static_cast<std::size_t>(n);
}

}  // namespace

Json to_wire(const Int& n) { return n.str(); }

Json to_wire(const Rat& r) { return rat_str(r); }

Json to_wire(const IntVec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(to_wire(x));
  return a;
}

Json to_wire(const RatVec& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(to_wire(x));
  return a;
}

Json to_wire(const IntMat& m) { return to_wire(to_rat(m)); }

Json to_wire(const RatMat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_wire(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json to_wire(const GroupElement& g) {
  return Json{{"algebra", g.alg->name}, {"log", to_wire(g.log)}};
}

Json to_wire(const UniformSubgroup& gamma) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < gamma.basis.cols(); ++j) cols.push_back(to_wire(gamma.basis.col(j)));
  return Json{{"algebra", gamma.alg->name}, {"basis", std::move(cols)}, {"verified", gamma.verified}};
}

Rat rat_from_wire(const Json& j) {
  if (j.is_number_unsigned()) return Rat(Int(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  fail(Err::BadInput, "expected an exact scalar (integer or \"p/q\" string), got " + j.dump());
}

Int int_from_wire(const Json& j) {
  Rat r = rat_from_wire(j);
  require(is_integer(r), Err::BadInput, "expected an integer, got " + rat_str(r));
  return num(r);
}

RatVec rat_vec_from_wire(const Json& j) {
  require(j.is_array(), Err::BadInput, "expected an array of scalars");
  RatVec v;
  v.reserve(j.size());
  for (const Json& x : j) v.push_back(rat_from_wire(x));
  return v;
}

RatMat rat_mat_from_wire(const Json& j) {
  std::size_t rows = dim_from_wire(field(j, "rows"), "\"rows\"");
  std::size_t cols = dim_from_wire(field(j, "cols"), "\"cols\"");
  const Json& entries = field(j, "entries");
  require(entries.is_array() && entries.size() == rows, Err::BadInput,
          "\"entries\" must hold one array per row");
  RatMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries.at(i);
    require(row.is_array() && row.size() == cols, Err::BadInput,
            "row " + std::to_string(i) + " must hold \"cols\" scalars");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_wire(row.at(k));
  }
  return m;
}

IntMat int_mat_from_wire(const Json& j) {
  RatMat m = rat_mat_from_wire(j);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      require(is_integer(m(i, k)), Err::BadInput,
              "matrix entry " + rat_str(m(i, k)) + " is not an integer");
  return to_int(m);
}

GroupElement group_element_from_wire(const Json& j) {
  const Json& name = field(j, "algebra");
  require(name.is_string(), Err::BadInput, "\"algebra\" must be a string");
  AlgebraRef alg = catalog(name.get<std::string>());
  RatVec log = rat_vec_from_wire(field(j, "log"));
  require(log.size() == alg->dim, Err::BadInput,
          "\"log\" must hold " + std::to_string(alg->dim) + " coordinates");
  return exp_of(alg, std::move(log));
}

UniformSubgroup subgroup_from_wire(const Json& j) {
  const Json& name = field(j, "algebra");
  require(name.is_string(), Err::BadInput, "\"algebra\" must be a string");
  AlgebraRef alg = catalog(name.get<std::string>());
  const Json& cols = field(j, "basis");
  require(cols.is_array() && !cols.empty(), Err::BadInput,
          "\"basis\" must be a nonempty array of columns");
  RatMat basis(alg->dim, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    RatVec c = rat_vec_from_wire(cols.at(k));
    require(c.size() == alg->dim, Err::BadInput,
            "basis column " + std::to_string(k) + " must hold " + std::to_string(alg->dim) +
                " coordinates");
    basis.set_col(k, c);
  }
  UniformSubgroup gamma = make_subgroup(alg, basis);
  if (j.contains("verified")) {
    require(j.at("verified").is_boolean(), Err::BadInput, "\"verified\" must be a boolean");
    gamma.verified = j.at("verified").get<bool>();
  }
  return gamma;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::BadInput, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const std::exception& e) {
    fail(Err::BadInput, "invalid JSON in " + path + ": " + e.what());
  }
}

}  // namespace nillat
