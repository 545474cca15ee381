#include <catch_amalgamated.hpp>
#include <filesystem>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "corpus.hpp"
#include "shg/cli.hpp"
#include "shg/io.hpp"

using namespace shg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("shg-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file(std::string const& name, std::string const& text) {
  auto p = (scratch() / name).string();
  write_file(p, text);
  return p;
}

bool contains(std::string const& hay, std::string const& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("construct then check the Zeuner grid", "[cli]") {
  auto z4 = (scratch() / "z4").string();
  auto c = run({"construct", "zeuner", "--n", "4", "-o", z4});
  REQUIRE(c.code == kExitOk);
  auto r = run({"check", z4});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "center: [0, 1]\n"));
  CHECK(contains(r.out, "verdict: hypergroup\n"));
  CHECK(contains(r.out, "commutative: true\n"));
}

TEST_CASE("lim and equiv on the named examples", "[cli]") {
  auto lz = (scratch() / "lz").string();
  REQUIRE(run({"construct", "semigroup", "--kind", "left-zero", "-o", lz}).code == kExitOk);
  auto r = run({"lim", lz});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "verdict: no LIM\n"));
  CHECK(contains(r.out, "certificate: ["));
  CHECK(contains(r.out, "certificate_verified: true\n"));

  auto tp = (scratch() / "tp").string();
  REQUIRE(run({"construct", "three-point", "--x", "1/2,0,1/2", "--y", "1/2,1/2,0", "--z", "1/2,1/2", "-o", tp}).code ==
          kExitOk);
  auto e = run({"equiv", tp});
  CHECK(e.code == kExitOk);
  CHECK(contains(e.out, "verdict: all three conditions hold\n"));

  auto j = nlohmann::json::parse(run({"--json", "equiv", tp}).out);
  CHECK(j["lim"]["feasible"] == true);
  CHECK(j["condition2"]["feasible"] == true);
  CHECK(j["condition3"]["feasible"] == true);
  CHECK(j["agree"] == true);

  auto z3 = (scratch() / "z3").string();
  REQUIRE(run({"construct", "group", "--group", "cyclic:3", "-o", z3}).code == kExitOk);
  auto jl = nlohmann::json::parse(run({"lim", z3, "--json"}).out);
  CHECK(jl["mean"] == "1/3*0 + 1/3*1 + 1/3*2");
  CHECK(jl["dimension"] == 0);
}

TEST_CASE("every constructor family through the CLI", "[cli]") {
  std::vector<std::vector<std::string>> calls{
      {"group", "--group", "symmetric:3"},
      {"semigroup", "--points", "a,b", "--cayley", "a b; b b"},
      {"semigroup", "--kind", "right-zero", "--size", "3"},
      {"coset", "--group", "symmetric:3", "--subgroup", "e,(12)"},
      {"double-coset", "--group", "symmetric:3", "--subgroup", "e,(12)"},
      {"orbit", "--group", "cyclic:5"},
      {"orbit", "--group", "symmetric:3", "--action", "conjugation"},
      {"three-point", "--x", "1/4,1/4,1/2", "--y", "1/4,1/2,1/4", "--z", "1/2,1/2"},
      {"zeuner", "--n", "8"},
  };
  for (auto call : calls) {
    call.insert(call.begin(), "construct");
    INFO(call[1] << " " << call[2]);
    auto r = run(call);
    REQUIRE(r.code == kExitOk);
    auto doc = parse_structure_document(r.out);  // stdout is the document itself
    CHECK(run({"check", file("constructed", r.out)}).code == kExitOk);
    CHECK(Semihypergroup::verify(doc.table).size() >= 2);
  }
  CHECK(run({"construct", "three-point", "--x", "1/2,1/2,0", "--y", "1/2,1/2,0", "--z", "1/2,1/2"}).code ==
        kExitInputError);  // y1*x3 != z1*x1
  CHECK(run({"construct", "coset", "--subgroup", "e,(123)x"}).code == kExitInputError);
  CHECK(run({"construct", "zeuner", "--n", "3"}).code == kExitInputError);
  CHECK(run({"construct", "torus"}).code == kExitInputError);
}

TEST_CASE("exit code contract", "[cli]") {
  auto bad = file("nonassoc", "points = [x, y]\nx * x = y\nx * y = x\ny * x = x\ny * y = x\n");
  auto r = run({"check", bad});
  CHECK(r.code == kExitCheckFailed);
  CHECK(contains(r.out, "associativity: fail\n"));
  CHECK(contains(r.out, "axiom: associativity\n"));
  CHECK(run({"lim", bad}).code == kExitCheckFailed);
  CHECK(run({"equiv", bad}).code == kExitCheckFailed);

  auto malformed = file("malformed", "points = [x]\nx * x = 1/2*x\n");
  auto m = run({"check", malformed});
  CHECK(m.code == kExitInputError);
  CHECK(contains(m.err, "line 2: mass 1/2 ≠ 1 at (x, x)"));

  CHECK(run({"check", (scratch() / "missing").string()}).code == kExitInputError);
  auto u = run({"frobnicate"});
  CHECK(u.code == kExitInputError);
  CHECK(contains(u.err, "unknown subcommand 'frobnicate'"));
  CHECK(contains(u.err, "Usage:"));
  CHECK(run({"lim", malformed, "--frob"}).code == kExitInputError);
  CHECK(run({}).code == kExitInputError);
  CHECK(run({"fixed-points", malformed}).code == kExitInputError);
  CHECK(run({"--help"}).code == kExitOk);

  for (auto const& [label, s] : corpus::full_corpus()) {
    INFO(label);
    auto p = file("corpus", emit_structure(s.table(), label));
    CHECK(run({"check", p}).code == kExitOk);
    CHECK(run({"lim", p}).code == kExitOk);
    CHECK(run({"equiv", p}).code == kExitOk);
    CHECK(run({"fixed-points", p, "--canonical"}).code == kExitOk);
  }
}

TEST_CASE("actions through the CLI", "[cli]") {
  auto z2 = file("z2", emit_structure(from_group(FiniteGroup::cyclic(2)).table(), "Z2"));
  auto swap = file("swap", "dim = 2\nmatrix 0 = [[1, 0], [0, 1]]\nmatrix 1 = [[0, 1], [1, 0]]\n");
  CHECK(run({"action-check", z2, swap}).code == kExitOk);
  auto fp = run({"fixed-points", z2, swap});
  CHECK(fp.code == kExitOk);
  CHECK(contains(fp.out, "fixed_point: [1/2, 1/2]\n"));

  auto broken = file("broken", "dim = 2\nmatrix 0 = [[1, 0], [0, 1]]\nmatrix 1 = [[1, 0], [1, 0]]\n");
  auto b = run({"action-check", z2, broken});
  CHECK(b.code == kExitCheckFailed);
  CHECK(contains(b.out, "axiom: action law\n"));
  CHECK(contains(b.out, "at: [1, 1]\n"));
  CHECK(run({"fixed-points", z2, broken}).code == kExitCheckFailed);

  auto sub = file("sub", "dim = 2\nmatrix 0 = [[1, 0], [0, 1]]\nmatrix 1 = [[1, 1], [0, 1]]\n");
  auto s = run({"action-check", z2, sub});
  CHECK(s.code == kExitCheckFailed);
  CHECK(contains(s.out, "axiom: stochastic\n"));

  auto lz = file("lz2", emit_structure(left_zero_semigroup({"a", "b"}).table()));
  auto c = run({"fixed-points", lz, "--canonical"});
  CHECK(c.code == kExitOk);
  CHECK(contains(c.out, "verdict: no fixed point\n"));
  CHECK(contains(c.out, "certificate_verified: true\n"));
  CHECK(run({"fixed-points", lz, swap, "--canonical"}).code == kExitInputError);
}

TEST_CASE("randomized commands are deterministic and print their seed", "[cli]") {
  auto z3 = file("z3h", emit_structure(from_group(FiniteGroup::cyclic(3)).table(), "Z3"));
  auto a = run({"fp-harness", z3, "--instances", "5", "--seed", "11"});
  auto b = run({"fp-harness", z3, "--instances", "5", "--seed", "11"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "seed: 11\n"));
  CHECK(contains(a.out, "consistent: true\n"));
  CHECK(contains(run({"fp-harness", z3, "--instances", "2"}).out, "seed: 20260101\n"));

  auto lz = file("lzh", emit_structure(left_zero_semigroup({"a", "b"}).table()));
  auto l = run({"fp-harness", lz, "--instances", "3", "--dims", "3"});
  CHECK(l.code == kExitOk);
  CHECK(contains(l.out, "lim_exists: false\n"));

  auto r1 = run({"arens", z3, "--trials", "20", "--seed", "5"});
  CHECK(r1.code == kExitOk);
  CHECK(r1.out == run({"arens", z3, "--trials", "20", "--seed", "5"}).out);
  CHECK(contains(r1.out, "pairs_checked: 29\n"));

  auto t = run({"--timing", "lim", z3});
  CHECK(contains(t.out, "elapsed_ms: "));
  CHECK_FALSE(contains(run({"lim", z3}).out, "elapsed_ms"));
}
