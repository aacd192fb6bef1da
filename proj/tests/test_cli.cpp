#include <sys/wait.h>

#include <cstdlib>
#include <fstream>

#include "bundle.hpp"
#include "doctest.h"
#include "hopfcyc/serialize.hpp"
#include "support.hpp"

using namespace hopfcyc;
using namespace hopfcyc::cli;

namespace {

const Field Q = Field::rational();

int run(const std::string& args, const std::string& out = "/dev/null") {
  const std::string cmd = std::string(HOPFCYC_CLI) + " " + args + " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string data(const std::string& name) { return testing_support::data_path(name); }

}  // namespace

TEST_CASE("bundle files") {
  Bundle b = parse_bundle("kind = \"triple\"\nhopf = builtin:z2  # comment\n\n[triple]\nsigma = g\n[limits]\nnmax = 4\n");
  CHECK(b.kind() == "triple");
  CHECK(b.get("hopf", "") == "builtin:z2");
  CHECK(b.get("triple.sigma", "") == "g");
  CHECK(b.get("triple.module", "trivial") == "trivial");
  CHECK(b.get_int("limits.nmax", 0) == 4);
  HopfAlgebra h = bundle_hopf(b);
  HopfTriple t = bundle_triple(b, h);
  CHECK(t.sigma == h.element("g"));

  try {
    parse_bundle("kind = triple\n[limits\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_bundle("kind = triple\nkind = smash\n"), ParseError);
  CHECK_THROWS_AS(parse_bundle("just words\n"), ParseError);
  CHECK_THROWS_AS(parse_bundle("[limits]\nnmax = four\n").get_int("limits.nmax", 0), ParseError);
  CHECK_THROWS_AS(parse_bundle("hopf = builtin:z2\n").kind(), ParseError);
}

TEST_CASE("bundle references") {
  CHECK(load_hopf("builtin:z3", Field::prime(3), "").dim() == 3);
  CHECK(load_hopf("builtin:dual:s3", Q, "").is_commutative());
  CHECK_THROWS_AS(load_hopf("builtin:quaternions", Q, ""), PreconditionError);
  HopfAlgebra s = load_hopf("builtin:sweedler", Q, "");
  CHECK_THROWS_AS(parse_grouplike(s, "x"), PreconditionError);
  CHECK_THROWS_AS(parse_character(s, "character:1,1,1,1"), PreconditionError);
  CHECK(parse_module(s, "character:1,-1,0,0").dim() == 1);
  CHECK(parse_comodule(s, "grouplike:g").dim() == 1);
  CHECK(load_hopf("sweedler.hopf", Q, testing_support::data_path("").c_str()).dim() == 4);
}

TEST_CASE("structure files round-trip") {
  for (const HopfAlgebra& h : {sweedler_algebra(Q), symmetric_group_s3(Field::prime(5)), dual_hopf(symmetric_group_s3(Q)),
                               cyclic_group_algebra(3, Field::prime(2))}) {
    HopfAlgebra r = parse_structure(write_structure(h));
    CHECK(r.certificate.ok());
    CHECK(r.space.basis == h.space.basis);
    CHECK(r.mult == h.mult);
    CHECK(r.comult == h.comult);
    CHECK(r.antipode == h.antipode);
    CHECK(r.antipode_inv == h.antipode_inv);
    CHECK(r.counit == h.counit);
    CHECK(r.unit == h.unit);
  }
  std::string text = write_structure(sweedler_algebra(Q));
  std::string broken = text;
  broken.replace(broken.find("[comult]"), 8, "[comul]");
  CHECK_THROWS_AS(parse_structure(broken), ParseError);
  // flip the sign of S(x): axioms fail but the file still parses
  std::string wrong = text;
  auto at = wrong.find("[antipode]");
  auto line = wrong.find("\nx ", at);
  REQUIRE(line != std::string::npos);
  auto end = wrong.find('\n', line + 1);
  wrong.replace(line + 1, end - line - 1, "x gx 1");
  CHECK_FALSE(parse_structure(wrong).certificate.ok());
}

TEST_CASE("command line exit codes") {
  CHECK(run("check builtin:sweedler") == 0);
  CHECK(run("check " + data("sweedler.hopf") + " --samples 4 --seed 7") == 0);
  CHECK(run("check " + data("slq2.hopf") + " --degree 2") == 0);
  CHECK(run("parse " + data("malformed.hopf")) == 2);
  CHECK(run("parse /nonexistent.hopf") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("") == 2);
  CHECK(run("--help") == 0);

  const std::string structure = "cli_sweedler.txt";
  CHECK(run("compile " + data("sweedler.hopf") + " -o " + structure) == 0);
  CHECK(run("check " + structure) == 0);
  std::string text = slurp(structure);
  auto at = text.find("[antipode]");
  auto line = text.find("\nx ", at);
  REQUIRE(line != std::string::npos);
  text.replace(line + 1, text.find('\n', line + 1) - line - 1, "x g*x 1");
  std::ofstream(structure) << text;
  CHECK(run("check " + structure) == 1);
}

TEST_CASE("bundled computations") {
  CHECK(run("triple " + data("z2_triple.toml") + " --nmax 4 --report cli_triple.json", "cli_triple.csv") == 0);
  CHECK(slurp("cli_triple.csv") == "degree,HH,HC,nmax\n0,1,1,4\n1,0,0,4\n2,0,1,4\n3,0,0,4\n");
  CHECK(slurp("cli_triple.json").find("\"cyclic\": true") != std::string::npos);
  CHECK(run("cotriple " + data("z2_triple.toml")) == 2);
  CHECK(run("cotriple " + data("sweedler_cotriple.toml")) == 0);
  CHECK(run("oracle decompose " + data("z2_triple.toml")) == 0);
  CHECK(run("oracle hopf-cohomology " + data("s3_cotriple.toml")) == 0);
  CHECK(run("compare " + data("sweedler_triple.toml")) == 0);
  CHECK(run("compare " + data("sweedler_cotriple.toml")) == 0);
  CHECK(run("smash " + data("z2_smash.toml") + " --report cli_smash.json", "cli_smash.csv") == 0);
  std::string csv = slurp("cli_smash.csv");
  CHECK(csv.rfind("page,p,q,dim,pmax,qmax\n", 0) == 0);
  CHECK(csv.find("E1,1,0,2,3,3\n") != std::string::npos);
  // deterministic output
  CHECK(run("smash " + data("z2_smash.toml"), "cli_smash2.csv") == 0);
  CHECK(slurp("cli_smash2.csv") == csv);
}
