#include "nillat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nillat/census.hpp"
#include "nillat/classify.hpp"
#include "nillat/json_io.hpp"
#include "nillat/normal_forms.hpp"

namespace nillat {

namespace {

struct Flags {
  std::string group;
  std::string in_path;
  std::string lattice_path;
  std::string params;
  std::string out_path;
  std::string chain = "lower";
  std::vector<std::string> files;
  unsigned long long seed = kDefaultAuditSeed;
  long long bound = 8;
  long long entry_bound = 0;
  bool pretty = false;
};

struct Outcome {
  Json report;
  int code = 0;
};

UniformSubgroup load_verified(const std::string& path, std::uint64_t seed) {
  UniformSubgroup gamma = subgroup_from_wire(load_json_file(path));
  gamma.verified = false;
  require(verify_closure(gamma, seed), Err::NotVerified,
          "generators in " + path + " are not closed under the group law");
  return gamma;
}

std::vector<Int> parse_csv_ints(const std::string& s) {
  std::vector<Int> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t comma = s.find(',', pos);
    std::string tok =
        s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    require(!tok.empty(), Err::BadInput, "empty entry in parameter list \"" + s + "\"");
    try {
      out.emplace_back(tok);
    } catch (const std::exception&) {
      fail(Err::BadInput, "not an integer: \"" + tok + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Outcome do_snf(const Flags& f) {
  SnfResult r = snf(int_mat_from_wire(load_json_file(f.in_path)));
  Json rep;
  rep["divisors"] = to_wire(r.divisors);
  rep["u"] = to_wire(r.u);
  rep["s"] = to_wire(r.s);
  rep["v"] = to_wire(r.v);
  rep["zero"] = r.zero;
  return {std::move(rep), 0};
}

Outcome do_hnf(const Flags& f) {
  RatMat a = rat_mat_from_wire(load_json_file(f.in_path));
  bool integral = true;
  for (std::size_t i = 0; i < a.rows() && integral; ++i)
    for (std::size_t j = 0; j < a.cols() && integral; ++j) integral = is_integer(a(i, j));
  Json rep;
  if (integral) {
    HnfResult r = hnf(to_int(a));
    rep["h"] = to_wire(r.h);
    rep["t"] = to_wire(r.t);
  } else {
    RatHnfResult r = hnf(a);
    rep["h"] = to_wire(r.h);
    rep["t"] = to_wire(r.t);
  }
  return {std::move(rep), 0};
}

Outcome do_mul(const Flags& f) {
  GroupElement a = group_element_from_wire(load_json_file(f.files[0]));
  GroupElement b = group_element_from_wire(load_json_file(f.files[1]));
  return {to_wire(mul(a, b)), 0};
}

Outcome do_inv(const Flags& f) {
  return {to_wire(inv(group_element_from_wire(load_json_file(f.files[0])))), 0};
}

Outcome do_conj(const Flags& f) {
  GroupElement g = group_element_from_wire(load_json_file(f.files[0]));
  GroupElement h = group_element_from_wire(load_json_file(f.files[1]));
  return {to_wire(conj(g, h)), 0};
}

Outcome do_coords(const Flags& f) {
  GroupElement g = group_element_from_wire(load_json_file(f.files[0]));
  RatMat basis = to_rat(IntMat::identity(g.alg->dim));
  if (!f.lattice_path.empty()) {
    UniformSubgroup gamma = subgroup_from_wire(load_json_file(f.lattice_path));
    require_same_algebra(gamma.alg, g.alg);
    basis = gamma.basis;
  }
  RatVec t = malcev_coords(g, basis);
  bool integral = true;
  for (const Rat& x : t)
    if (!is_integer(x)) integral = false;
  Json rep;
  rep["algebra"] = g.alg->name;
  rep["coords"] = to_wire(t);
  rep["integral"] = integral;
  return {std::move(rep), 0};
}

Outcome do_verify(const Flags& f) {
  UniformSubgroup gamma = subgroup_from_wire(load_json_file(f.lattice_path));
  gamma.verified = false;
  bool ok = verify_closure(gamma, f.seed);
  Json rep;
  rep["algebra"] = gamma.alg->name;
  rep["seed"] = std::to_string(f.seed);
  rep["verified"] = ok;
  return {std::move(rep), ok ? 0 : 1};
}

Outcome do_member(const Flags& f) {
  UniformSubgroup gamma = subgroup_from_wire(load_json_file(f.lattice_path));
  GroupElement g = group_element_from_wire(load_json_file(f.files[0]));
  require_same_algebra(gamma.alg, g.alg);
  bool member = contains(gamma, g);
  Json rep;
  rep["member"] = member;
  return {std::move(rep), member ? 0 : 1};
}

Outcome do_refine(const Flags& f) {
  UniformSubgroup gamma = load_verified(f.lattice_path, f.seed);
  std::vector<Subspace> chain;
  if (f.chain == "upper") {
    chain = ascending_central_series(gamma.alg);
  } else {
    std::vector<Subspace> lcs = lower_central_series(gamma.alg);
    for (auto it = lcs.rbegin(); it != lcs.rend(); ++it)
      if (it->dim() > 0) chain.push_back(*it);
  }
  return {to_wire(basis_through_ideals(gamma, chain)), 0};
}

Outcome do_canon(const Flags& f) {
  UniformSubgroup gamma = load_verified(f.lattice_path, f.seed);
  Json rep;
  rep["group"] = f.group;
  if (f.group == "g5_2") {
    G52Canonical c = canon_g52(gamma);
    rep["r"] = Json::array({c.r1.str(), c.r2.str()});
    std::optional<RatMat> w = g52_isomorphism(gamma, g52_lattice({c.r1, c.r2, Int(0)}));
    require(w.has_value(), Err::Internal, "canonical lattice not reachable");
    rep["witness"] = to_wire(*w);
  } else if (f.group == "g5_4") {
    G54Canonical c = canon_g54(gamma);
    rep["d"] = to_wire(c.rep.d);
    rep["m"] = to_wire(c.rep.m);
    rep["witness"] = to_wire(c.witness);
  } else if (f.group == "g5_6") {
    G56Canonical c = canon_g56(gamma);
    rep["d"] = to_wire(c.rep.d);
    rep["m"] = to_wire(c.rep.m);
    rep["witness"] = to_wire(c.witness);
  } else {
    fail(Err::UnknownGroup, "canon supports g5_2, g5_4, g5_6");
  }
  return {std::move(rep), 0};
}

Outcome do_isom(const Flags& f) {
  UniformSubgroup a = load_verified(f.files[0], f.seed);
  UniformSubgroup b = load_verified(f.files[1], f.seed);
  Json rep;
  rep["group"] = f.group;
  std::optional<RatMat> w;
  bool decisive = false;
  if (f.group == "g5_2") {
    w = g52_isomorphism(a, b);
    decisive = true;
  } else if (f.group == "g5_6") {
    w = g56_isomorphism(a, b);
    decisive = true;
  } else if (f.group == "g5_4") {
    w = g54_isomorphic_search(a, b, Int(f.bound));
    rep["bound"] = std::to_string(f.bound);
  } else if (f.group == "g4xR") {
    w = g4xr_isomorphic_search(a, b, Int(f.bound));
    rep["bound"] = std::to_string(f.bound);
  } else {
    fail(Err::UnknownGroup, "isom supports g5_2, g5_4, g5_6, g4xR");
  }
  if (w.has_value()) {
    rep["verdict"] = "yes";
    rep["witness"] = to_wire(*w);
    return {std::move(rep), 0};
  }
  rep["verdict"] = decisive ? "no" : "unknown";
  return {std::move(rep), 1};
}

Outcome do_split(const Flags& f) {
  UniformSubgroup gamma = load_verified(f.files[0], f.seed);
  SplitResult s = split_abelian_factor(gamma);
  Json rep;
  rep["rank"] = s.r;
  rep["h"] = to_wire(s.h);
  rep["phi"] = to_wire(s.phi);
  return {std::move(rep), 0};
}

Outcome do_validate(const Flags& f) {
  std::vector<Int> p = parse_csv_ints(f.params);
  Json rep;
  rep["group"] = f.group;
  rep["params"] = to_wire(p);
  bool valid = false;
  if (f.group == "g5_2") {
    require(p.size() == 3, Err::BadInput, "g5_2 takes p,q,alpha");
    valid = p[0] >= 1 && p[1] >= 1 && p[2] >= 0 && p[2] < p[1];
  } else if (f.group == "g4xR") {
    require(p.size() == 3, Err::BadInput, "g4xR takes p1,p2,p3");
    valid = g4xr_validate({p[0], p[1], p[2]});
  } else if (f.group == "g5_4") {
    require(p.size() == 7, Err::BadInput, "g5_4 takes d00,d01,d02,d11,d12,d22,m");
    IntMat d(3, 3);
    d(0, 0) = p[0];
    d(0, 1) = p[1];
    d(0, 2) = p[2];
    d(1, 1) = p[3];
    d(1, 2) = p[4];
    d(2, 2) = p[5];
    try {
      valid = s4_member(d, p[6]);
    } catch (const Error& e) {
      if (e.code() != Err::BadShape) throw;
      valid = false;
    }
  } else if (f.group == "g5_6") {
    require(p.size() == 8, Err::BadInput, "g5_6 takes d00,d01,d02,d11,d12,d22,d33,m");
    IntMat d(4, 4);
    d(0, 0) = p[0];
    d(0, 1) = p[1];
    d(0, 2) = p[2];
    d(1, 1) = p[3];
    d(1, 2) = p[4];
    d(2, 2) = p[5];
    d(3, 3) = p[6];
    try {
      valid = s6_member(d, p[7]);
    } catch (const Error& e) {
      if (e.code() != Err::BadShape) throw;
      valid = false;
    }
  } else {
    fail(Err::UnknownGroup, "validate-params supports g5_2, g5_4, g5_6, g4xR");
  }
  rep["valid"] = valid;
  return {std::move(rep), valid ? 0 : 1};
}

Outcome do_census(const Flags& f) {
  CensusResult r = census(f.group, Int(f.bound), Int(f.entry_bound));
  Json rep;
  rep["group"] = r.group;
  rep["bound"] = to_wire(r.bound);
  rep["entry_bound"] = to_wire(r.entry_bound);
  rep["lattices"] = r.lattices;
  Json classes = Json::array();
  for (const CensusClass& c : r.classes) {
    Json members = Json::array();
    for (const IntVec& m : c.members) members.push_back(to_wire(m));
    classes.push_back(std::move(members));
  }
  rep["classes"] = std::move(classes);
  return {std::move(rep), 0};
}

// ---------------------------------------------------------------------------
// pretty rendering

std::string scalar_str(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& x : j)
    if (!is_scalar(x)) return false;
  return true;
}

bool is_matrix_object(const Json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("entries");
}

std::string inline_list(const Json& j) {
  std::string s = "[";
  bool first = true;
  for (const Json& x : j) {
    if (!first) s += ", ";
    s += scalar_str(x);
    first = false;
  }
  return s + "]";
}

void print_matrix(const Json& j, std::ostream& os, int indent) {
  const Json& entries = j.at("entries");
  std::size_t cols = j.at("cols").get<std::size_t>();
  std::vector<std::size_t> width(cols, 0);
  for (const Json& row : entries)
    for (std::size_t k = 0; k < cols; ++k)
      width[k] = std::max(width[k], scalar_str(row.at(k)).size());
  std::string pad(indent, ' ');
  for (const Json& row : entries) {
    os << pad << "[";
    for (std::size_t k = 0; k < cols; ++k) {
      std::string s = scalar_str(row.at(k));
      os << " " << std::string(width[k] - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
}

void print_pretty(const Json& j, std::ostream& os, int indent) {
  std::string pad(indent, ' ');
  if (is_matrix_object(j)) {
    print_matrix(j, os, indent);
    return;
  }
  if (j.is_object()) {
    for (const auto& item : j.items()) {
      const Json& v = item.value();
      if (is_scalar(v)) {
        os << pad << item.key() << ": " << scalar_str(v) << "\n";
      } else if (is_flat_array(v)) {
        os << pad << item.key() << ": " << inline_list(v) << "\n";
      } else {
        os << pad << item.key() << ":\n";
        print_pretty(v, os, indent + 2);
      }
    }
    return;
  }
  if (j.is_array()) {
    for (const Json& v : j) {
      if (is_scalar(v)) {
        os << pad << "- " << scalar_str(v) << "\n";
      } else if (is_flat_array(v)) {
        os << pad << "- " << inline_list(v) << "\n";
      } else {
        os << pad << "-\n";
        print_pretty(v, os, indent + 2);
      }
    }
    return;
  }
  os << pad << scalar_str(j) << "\n";
}

std::uint64_t seed_from_env(const char* text) {
  std::uint64_t v = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, v);
  require(ec == std::errc() && ptr == end && text != end, Err::BadInput,
          "NILLAT_SEED must be a nonnegative integer");
  return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  Flags f;
  CLI::App app{"exact computations with uniform subgroups of nilpotent Lie groups"};
  app.require_subcommand(1);
  app.add_option("--seed", f.seed, "seed for the randomized closure audit (env NILLAT_SEED overrides)");
  app.add_flag("--pretty", f.pretty, "render the report as text instead of JSON");
  app.add_option("--out", f.out_path, "also write the JSON report to this file");

  CLI::App* c_snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  c_snf->add_option("--in", f.in_path, "matrix JSON file")->required();

  CLI::App* c_hnf = app.add_subcommand("hnf", "column Hermite normal form");
  c_hnf->add_option("--in", f.in_path, "matrix JSON file")->required();

  CLI::App* c_mul = app.add_subcommand("mul", "product of two group elements");
  c_mul->add_option("files", f.files, "element JSON files")->expected(2)->required();

  CLI::App* c_inv = app.add_subcommand("inv", "inverse of a group element");
  c_inv->add_option("files", f.files, "element JSON file")->expected(1)->required();

  CLI::App* c_conj = app.add_subcommand("conj", "conjugate g h g^-1");
  c_conj->add_option("files", f.files, "element JSON files g, h")->expected(2)->required();

  CLI::App* c_coords = app.add_subcommand("coords", "coordinates of the second kind");
  c_coords->add_option("files", f.files, "element JSON file")->expected(1)->required();
  c_coords->add_option("--lattice", f.lattice_path, "use this lattice basis instead of X1..Xn");

  CLI::App* c_verify = app.add_subcommand("verify", "closure certificate for a generating tuple");
  c_verify->add_option("--lattice", f.lattice_path, "lattice JSON file")->required();

  CLI::App* c_member = app.add_subcommand("member", "membership of an element in a lattice");
  c_member->add_option("--lattice", f.lattice_path, "lattice JSON file")->required();
  c_member->add_option("files", f.files, "element JSON file")->expected(1)->required();

  CLI::App* c_refine = app.add_subcommand("refine", "re-coordinatize along a central series");
  c_refine->add_option("--lattice", f.lattice_path, "lattice JSON file")->required();
  c_refine->add_option("--chain", f.chain, "ideal chain: lower or upper central series")
      ->check(CLI::IsMember({"lower", "upper"}));

  CLI::App* c_canon = app.add_subcommand("canon", "canonical form of a lattice");
  c_canon->add_option("--group", f.group, "g5_2, g5_4 or g5_6")->required();
  c_canon->add_option("--lattice", f.lattice_path, "lattice JSON file")->required();

  CLI::App* c_isom = app.add_subcommand("isom", "decide isomorphism of two lattices");
  c_isom->add_option("--group", f.group, "g5_2, g5_4, g5_6 or g4xR")->required();
  c_isom->add_option("files", f.files, "two lattice JSON files")->expected(2)->required();
  c_isom->add_option("--bound", f.bound, "search bound for the g5_4 and g4xR families")
      ->check(CLI::PositiveNumber);

  CLI::App* c_split = app.add_subcommand("split", "split off the maximal Abelian factor");
  c_split->add_option("files", f.files, "lattice JSON file")->expected(1)->required();

  CLI::App* c_validate = app.add_subcommand("validate-params", "parameter range check");
  c_validate->add_option("--group", f.group, "g5_2, g5_4, g5_6 or g4xR")->required();
  c_validate->add_option("--params", f.params, "comma-separated integers")->required();

  CLI::App* c_census = app.add_subcommand("census", "enumerate lattices up to a bound");
  c_census->add_option("--group", f.group, "g5_2, g5_4, g5_6 or g4xR")->required();
  c_census->add_option("--bound", f.bound, "scale bound")->required()->check(CLI::PositiveNumber);
  c_census->add_option("--entry-bound", f.entry_bound, "entry bound for the D block")
      ->check(CLI::NonNegativeNumber);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    Json rep;
    rep["error"] = "Usage";
    rep["message"] = e.what();
    out << rep.dump() << "\n";
    return 2;
  }

  Outcome oc;
  try {
    if (const char* env = std::getenv("NILLAT_SEED")) f.seed = seed_from_env(env);
    if (app.got_subcommand(c_snf)) oc = do_snf(f);
    else if (app.got_subcommand(c_hnf)) oc = do_hnf(f);
    else if (app.got_subcommand(c_mul)) oc = do_mul(f);
    else if (app.got_subcommand(c_inv)) oc = do_inv(f);
    else if (app.got_subcommand(c_conj)) oc = do_conj(f);
    else if (app.got_subcommand(c_coords)) oc = do_coords(f);
    else if (app.got_subcommand(c_verify)) oc = do_verify(f);
    else if (app.got_subcommand(c_member)) oc = do_member(f);
    else if (app.got_subcommand(c_refine)) oc = do_refine(f);
    else if (app.got_subcommand(c_canon)) oc = do_canon(f);
    else if (app.got_subcommand(c_isom)) oc = do_isom(f);
    else if (app.got_subcommand(c_split)) oc = do_split(f);
    else if (app.got_subcommand(c_validate)) oc = do_validate(f);
    else if (app.got_subcommand(c_census)) oc = do_census(f);
    else fail(Err::BadInput, "no subcommand selected");
    if (!f.out_path.empty()) {
      std::ofstream file(f.out_path);
      require(file.good(), Err::BadInput, "cannot write " + f.out_path);
      file << oc.report.dump() << "\n";
    }
  } catch (const Error& e) {
    std::string msg = e.what();
    std::string prefix = std::string(err_name(e.code())) + ": ";
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    oc.report = Json{{"error", err_name(e.code())}, {"message", msg}};
    oc.code = 2;
  } catch (const std::exception& e) {
    oc.report = Json{{"error", "Internal"}, {"message", e.what()}};
    oc.code = 2;
  }

  if (f.pretty) {
    print_pretty(oc.report, out, 0);
  } else {
    out << oc.report.dump() << "\n";
  }
  return oc.code;
}

}  // namespace nillat
