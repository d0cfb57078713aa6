#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "nillat/census.hpp"
#include "nillat/classify.hpp"
#include "nillat/cli.hpp"
#include "nillat/json_io.hpp"

using namespace nillat;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  Json report;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream os;
  RunResult r;
  r.code = run_cli(args, os);
  r.out = os.str();
  if (!r.out.empty() && r.out.front() == '{') r.report = Json::parse(r.out);
  return r;
}

std::string write_temp(const std::string& name, const Json& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / ("nillat_cli_" + name);
  std::ofstream f(p);
  f << content.dump() << "\n";
  return p.string();
}

std::string lattice_file(const std::string& name, const UniformSubgroup& gamma) {
  return write_temp(name, to_wire(gamma));
}

}  // namespace

TEST_CASE("snf subcommand factors the diagonal example") {
  Json m{{"rows", 2}, {"cols", 2}, {"entries", {{2, 0}, {0, 4}}}};
  RunResult r = run({"snf", "--in", write_temp("m24.json", m)});
  CHECK(r.code == 0);
  CHECK(r.report["divisors"] == Json::array({"2", "4"}));
  CHECK(r.report["zero"] == false);
  IntMat u = int_mat_from_wire(r.report["u"]);
  IntMat s = int_mat_from_wire(r.report["s"]);
  IntMat v = int_mat_from_wire(r.report["v"]);
  CHECK(u * int_mat_from_wire(to_wire(RatMat(2, 2, {Rat(2), Rat(0), Rat(0), Rat(4)}))) * v == s);
}

TEST_CASE("hnf subcommand handles integer and rational input") {
  Json m{{"rows", 2}, {"cols", 2}, {"entries", {{2, 3}, {0, 1}}}};
  RunResult r = run({"hnf", "--in", write_temp("h.json", m)});
  CHECK(r.code == 0);
  CHECK(r.report["h"]["entries"] == Json::array({{"2", "1"}, {"0", "1"}}));

  Json q{{"rows", 1},
         {"cols", 2},
         {"entries", Json::array({Json::array({"1/2", "1/3"})})}};
  r = run({"hnf", "--in", write_temp("hq.json", q)});
  CHECK(r.code == 0);
  CHECK(r.report["h"]["entries"][0][0] == "1/6");
}

TEST_CASE("element subcommands compute in exponential coordinates") {
  std::string g5 = write_temp("e5.json", Json{{"algebra", "g5_4"}, {"log", {0, 0, 0, 0, 1}}});
  std::string g4 = write_temp("e4.json", Json{{"algebra", "g5_4"}, {"log", {0, 0, 0, 1, 0}}});

  RunResult r = run({"conj", g5, g4});
  CHECK(r.code == 0);
  CHECK(r.report["log"] == Json::array({"0", "1/2", "1", "1", "0"}));

  r = run({"mul", g5, g4});
  CHECK(r.code == 0);
  std::string prod = write_temp("prod.json", r.report);
  r = run({"inv", prod});
  CHECK(r.code == 0);
  std::string back = write_temp("back.json", r.report);
  r = run({"mul", prod, back});
  CHECK(r.code == 0);
  CHECK(r.report["log"] == Json::array({"0", "0", "0", "0", "0"}));

  r = run({"coords", g5});
  CHECK(r.code == 0);
  CHECK(r.report["integral"] == true);
}

TEST_CASE("verify and member report verdict exit codes") {
  UniformSubgroup ok = g54_lattice({IntMat::identity(3), Int(2)});
  std::string okf = lattice_file("ok54.json", ok);

  RunResult r = run({"verify", "--lattice", okf});
  CHECK(r.code == 0);
  CHECK(r.report["verified"] == true);
  CHECK(r.report["seed"] == "1729");

  RatMat id5 = to_rat(IntMat::identity(5));
  Json bad = to_wire(make_subgroup(catalog("g5_4"), id5));
  std::string badf = write_temp("bad54.json", bad);
  r = run({"verify", "--lattice", badf});
  CHECK(r.code == 1);
  CHECK(r.report["verified"] == false);

  std::string inside = write_temp("in.json", Json{{"algebra", "g5_4"}, {"log", {0, 0, 0, 2, 0}}});
  std::string outside =
      write_temp("outp.json", Json{{"algebra", "g5_4"}, {"log", {0, 0, 0, 1, 0}}});
  r = run({"member", "--lattice", okf, inside});
  CHECK(r.code == 0);
  CHECK(r.report["member"] == true);
  r = run({"member", "--lattice", okf, outside});
  CHECK(r.code == 1);
  CHECK(r.report["member"] == false);
}

TEST_CASE("refine emits an equivalent verified lattice") {
  UniformSubgroup gamma = g52_lattice({Int(2), Int(4), Int(2)});
  RunResult r = run({"refine", "--lattice", lattice_file("ref.json", gamma)});
  CHECK(r.code == 0);
  UniformSubgroup refined = subgroup_from_wire(r.report);
  CHECK(r.report["verified"] == true);
  REQUIRE(verify_closure(refined));
  CHECK(same_subgroup(refined, gamma));

  r = run({"refine", "--lattice", lattice_file("ref.json", gamma), "--chain", "upper"});
  CHECK(r.code == 0);
  refined = subgroup_from_wire(r.report);
  REQUIRE(verify_closure(refined));
  CHECK(same_subgroup(refined, gamma));
}

TEST_CASE("canon reports the divisor pair of the central lattice") {
  UniformSubgroup gamma = g52_lattice({Int(2), Int(4), Int(2)});
  RunResult r = run({"canon", "--group", "g5_2", "--lattice", lattice_file("c52.json", gamma)});
  CHECK(r.code == 0);
  CHECK(r.report["r"] == Json::array({"2", "4"}));
  RatMat w = rat_mat_from_wire(r.report["witness"]);
  CHECK(is_automorphism(*gamma.alg, w));
  UniformSubgroup target = g52_lattice({Int(2), Int(4), Int(0)});
  UniformSubgroup mapped = map_subgroup(w, gamma);
  REQUIRE(verify_closure(mapped));
  CHECK(same_subgroup(mapped, target));
}

TEST_CASE("canon covers the tuple families") {
  IntMat d = IntMat::identity(3);
  d(2, 2) = 2;
  UniformSubgroup gamma = g54_lattice({d, Int(2)});
  RunResult r = run({"canon", "--group", "g5_4", "--lattice", lattice_file("c54.json", gamma)});
  CHECK(r.code == 0);
  CHECK(r.report["m"] == "2");
  CHECK(int_mat_from_wire(r.report["d"])(2, 2) == 2);

  IntMat d6(4, 4);
  d6(0, 0) = 1;
  d6(1, 1) = 3;
  d6(2, 2) = 6;
  d6(3, 3) = 6;
  UniformSubgroup g6 = g56_lattice({d6, Int(1)});
  r = run({"canon", "--group", "g5_6", "--lattice", lattice_file("c56.json", g6)});
  CHECK(r.code == 0);
  CHECK(r.report["m"] == "1");

  r = run({"canon", "--group", "g4xR", "--lattice", lattice_file("c56.json", g6)});
  CHECK(r.code == 2);
  CHECK(r.report["error"] == "UnknownGroup");
}

TEST_CASE("isom distinguishes yes, no and unknown verdicts") {
  UniformSubgroup a = g52_lattice({Int(2), Int(4), Int(2)});
  UniformSubgroup b = g52_lattice({Int(4), Int(2), Int(0)});
  UniformSubgroup c = g52_lattice({Int(1), Int(8), Int(0)});
  std::string af = lattice_file("ia.json", a);
  RunResult r = run({"isom", "--group", "g5_2", af, lattice_file("ib.json", b)});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "yes");
  RatMat w = rat_mat_from_wire(r.report["witness"]);
  UniformSubgroup mapped = map_subgroup(w, a);
  REQUIRE(verify_closure(mapped));
  CHECK(same_subgroup(mapped, b));

  r = run({"isom", "--group", "g5_2", af, lattice_file("ic.json", c)});
  CHECK(r.code == 1);
  CHECK(r.report["verdict"] == "no");

  UniformSubgroup x = g4xr_construct({Int(2), Int(1), Int(0)});
  UniformSubgroup y = g4xr_construct({Int(2), Int(2), Int(0)});
  r = run({"isom", "--group", "g4xR", "--bound", "2", lattice_file("ix.json", x),
           lattice_file("iy.json", y)});
  CHECK(r.code == 1);
  CHECK(r.report["verdict"] == "unknown");
  CHECK(r.report["bound"] == "2");
}

TEST_CASE("isom identifies the diagonal automorphism image in the filiform family") {
  IntMat d(4, 4);
  d(0, 0) = 1;
  d(1, 1) = 3;
  d(2, 2) = 6;
  d(3, 3) = 6;
  UniformSubgroup a = g56_lattice({d, Int(1)});
  RatMat diag(5, 5);
  Rat two(2);
  diag(0, 0) = two * two * two * two * two;
  diag(1, 1) = two * two * two * two;
  diag(2, 2) = two * two * two;
  diag(3, 3) = two * two;
  diag(4, 4) = two;
  UniformSubgroup b = map_subgroup(diag, a);
  REQUIRE(verify_closure(b));

  std::string af = lattice_file("f56a.json", a);
  RunResult r = run({"isom", "--group", "g5_6", af, lattice_file("f56b.json", b)});
  CHECK(r.code == 0);
  CHECK(r.report["verdict"] == "yes");
  RatMat w = rat_mat_from_wire(r.report["witness"]);
  CHECK(w == diag);
  UniformSubgroup mapped = map_subgroup(w, a);
  REQUIRE(verify_closure(mapped));
  CHECK(same_subgroup(mapped, b));

  RatMat uniform = to_rat(IntMat::identity(5));
  for (std::size_t i = 0; i < 5; ++i) uniform(i, i) = 2;
  UniformSubgroup decoy = map_subgroup(uniform, a);
  REQUIRE(verify_closure(decoy));
  r = run({"isom", "--group", "g5_6", af, lattice_file("f56d.json", decoy)});
  CHECK(r.code == 1);
  CHECK(r.report["verdict"] == "no");
}

TEST_CASE("split reports the rank and the nilpotent factor") {
  UniformSubgroup gamma = g4xr_construct({Int(2), Int(3), Int(2)});
  RunResult r = run({"split", lattice_file("sp.json", gamma)});
  CHECK(r.code == 0);
  CHECK(r.report["rank"] == 1);
  CHECK(r.report["h"]["algebra"] == "g4");
  CHECK(r.report["h"]["verified"] == true);
  RatMat phi = rat_mat_from_wire(r.report["phi"]);
  CHECK(is_automorphism(*gamma.alg, phi));

  UniformSubgroup plain = g52_lattice({Int(1), Int(1), Int(0)});
  r = run({"split", lattice_file("sp2.json", plain)});
  CHECK(r.code == 2);
  CHECK(r.report["error"] == "NoAbelianFactor");
}

TEST_CASE("validate-params accepts and rejects tuples per family") {
  CHECK(run({"validate-params", "--group", "g4xR", "--params", "1,1,1"}).code == 0);
  CHECK(run({"validate-params", "--group", "g4xR", "--params", "2,1,1"}).code == 1);
  CHECK(run({"validate-params", "--group", "g4xR", "--params", "1,1,3"}).code == 1);
  CHECK(run({"validate-params", "--group", "g5_2", "--params", "2,4,2"}).code == 0);
  CHECK(run({"validate-params", "--group", "g5_2", "--params", "2,4,4"}).code == 1);
  CHECK(run({"validate-params", "--group", "g5_2", "--params", "0,1,0"}).code == 1);
  CHECK(run({"validate-params", "--group", "g5_4", "--params", "1,0,0,1,0,1,2"}).code == 0);
  CHECK(run({"validate-params", "--group", "g5_4", "--params", "1,0,0,1,0,1,1"}).code == 1);
  CHECK(run({"validate-params", "--group", "g5_4", "--params", "0,0,0,1,0,1,1"}).code == 1);
  CHECK(run({"validate-params", "--group", "g5_6", "--params", "1,0,0,3,0,6,6,1"}).code == 0);
  CHECK(run({"validate-params", "--group", "g5_6", "--params", "1,0,0,1,0,1,1,1"}).code == 1);
  CHECK(run({"validate-params", "--group", "g5_4", "--params", "1,2,3"}).code == 2);
  CHECK(run({"validate-params", "--group", "g9", "--params", "1"}).code == 2);
  CHECK(run({"validate-params", "--group", "g4xR", "--params", "1,x,1"}).code == 2);
}

TEST_CASE("census subcommand tabulates classes") {
  RunResult r = run({"census", "--group", "g5_2", "--bound", "2"});
  CHECK(r.code == 0);
  CHECK(r.report["lattices"] == 3);
  CHECK(r.report["classes"].size() == 3);
  CHECK(r.report["classes"][0] == Json::array({Json::array({"1", "1"})}));

  r = run({"census", "--group", "g4xR", "--bound", "1"});
  CHECK(r.code == 0);
  CHECK(r.report["classes"] == Json::array({Json::array({Json::array({"1", "1", "1"})})}));

  r = run({"census", "--group", "g9", "--bound", "1"});
  CHECK(r.code == 2);
  CHECK(r.report["error"] == "UnknownGroup");
}

TEST_CASE("identical invocations produce byte-identical reports") {
  UniformSubgroup gamma = g52_lattice({Int(2), Int(4), Int(2)});
  std::string f = lattice_file("det.json", gamma);
  RunResult a = run({"canon", "--group", "g5_2", "--lattice", f});
  RunResult b = run({"canon", "--group", "g5_2", "--lattice", f});
  CHECK(a.out == b.out);

  a = run({"census", "--group", "g5_4", "--bound", "2", "--entry-bound", "1"});
  b = run({"census", "--group", "g5_4", "--bound", "2", "--entry-bound", "1"});
  CHECK(a.out == b.out);
}

TEST_CASE("seed flag and environment override flow into the report") {
  UniformSubgroup ok = g54_lattice({IntMat::identity(3), Int(2)});
  std::string f = lattice_file("seed.json", ok);
  RunResult r = run({"verify", "--lattice", f, "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.report["seed"] == "7");

  setenv("NILLAT_SEED", "99", 1);
  r = run({"verify", "--lattice", f, "--seed", "7"});
  CHECK(r.report["seed"] == "99");
  setenv("NILLAT_SEED", "nope", 1);
  r = run({"verify", "--lattice", f});
  CHECK(r.code == 2);
  unsetenv("NILLAT_SEED");
}

TEST_CASE("out flag writes the same report to a file") {
  Json m{{"rows", 2}, {"cols", 2}, {"entries", {{2, 0}, {0, 4}}}};
  std::string in = write_temp("mo.json", m);
  std::string out = (std::filesystem::temp_directory_path() / "nillat_cli_rep.json").string();
  RunResult r = run({"snf", "--in", in, "--out", out});
  CHECK(r.code == 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == r.out);
}

TEST_CASE("pretty rendering is plain text") {
  UniformSubgroup ok = g54_lattice({IntMat::identity(3), Int(2)});
  RunResult r = run({"canon", "--group", "g5_4", "--lattice", lattice_file("pp.json", ok),
                     "--pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("group: g5_4") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("usage problems exit with code two") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"snf"}).code == 2);
  CHECK(run({"snf", "--in", "/nonexistent/m.json"}).code == 2);
  CHECK(run({"isom", "--group", "g5_2", "only_one.json"}).code == 2);
  CHECK(run({"census", "--group", "g5_2", "--bound", "0"}).code == 2);
  RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("snf") != std::string::npos);
}

TEST_CASE("lattices that fail closure are invalid input for deciders") {
  RatMat id5 = to_rat(IntMat::identity(5));
  Json bad = to_wire(make_subgroup(catalog("g5_4"), id5));
  bad["verified"] = true;  // the wire flag is not trusted
  std::string f = write_temp("lie.json", bad);
  RunResult r = run({"canon", "--group", "g5_4", "--lattice", f});
  CHECK(r.code == 2);
  CHECK(r.report["error"] == "NotVerified");
}
