#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "thom/cli.hpp"
#include "thom/errors.hpp"
#include "thom/euler.hpp"
#include "thom/expr.hpp"
#include "thom/ratfn.hpp"

using namespace thom;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("documented text payloads") {
  const RunResult schur =
      run_cli({"tp", "--algebra", "A2", "--l", "0", "--basis", "schur"});
  CHECK(schur.code == 0);
  CHECK(schur.out == "Δ_{1,1} + 2Δ_{2}\n");
  CHECK(schur.err.empty());

  const RunResult chern =
      run_cli({"tp", "--algebra", "A3", "--l", "0", "--basis", "chern"});
  CHECK(chern.code == 0);
  CHECK(chern.out == "c1^3 + 3*c1*c2 + 2*c3\n");

  // The residue route reproduces the same class.
  const RunResult res =
      run_cli({"residue", "--algebra", "A3", "--l", "0", "--basis", "chern"});
  CHECK(res.code == 0);
  CHECK(res.out == chern.out);

  // Default offset is zero and the table spelling of names is accepted too.
  const RunResult dflt = run_cli({"tp", "--algebra", "A_2"});
  CHECK(dflt.code == 0);
  CHECK(dflt.out == schur.out);
}

TEST_CASE("exit codes separate usage, computation and verification") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"tp"}).code == 2);
  CHECK(run_cli({"tp", "--algebra", "Q9"}).code == 2);
  CHECK(run_cli({"tp", "--algebra", "A2", "--l", "0", "--n", "2"}).code == 2);
  CHECK(run_cli({"tp", "--algebra", "A2", "--n", "2"}).code == 2);
  CHECK(run_cli({"tp", "--algebra", "A2", "--basis", "weights"}).code == 2);
  CHECK(run_cli({"residue", "--algebra", "A4"}).code == 2);

  // Covered data ends at mu = 4: asking past it is a computation failure.
  const RunResult a5 = run_cli({"tp", "--algebra", "A5", "--l", "0"});
  CHECK(a5.code == 1);
  CHECK(contains(a5.err, "A_5"));

  const RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "tp"));
}

TEST_CASE("structured output round-trips and is deterministic") {
  JobSpec job;
  job.command = "tp";
  job.algebra = "A2";
  job.l = 1;
  const ResultDocument doc = execute(job);
  CHECK(parse_structured(doc.structured()) == doc);
  CHECK(doc.codim == 4);

  const std::vector<std::string> args = {"tp",     "--algebra",   "A2",
                                         "--l",    "1",           "--format",
                                         "structured"};
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(contains(a.out, "\"command\": \"tp\""));
  CHECK(contains(a.out, "\"partition\""));

  JobSpec vjob;
  vjob.command = "verify";
  vjob.suite = "fast";
  const ResultDocument vdoc = execute(vjob);
  CHECK(parse_structured(vdoc.structured()) == vdoc);
  for (const CheckReport& r : vdoc.report) CHECK(r.status == "PASS");
}

TEST_CASE("verify subcommand reports per check") {
  const RunResult fast = run_cli({"verify", "--suite", "fast"});
  CHECK(fast.code == 0);
  CHECK(contains(fast.out, "PASS  segre-goldens"));
  CHECK(contains(fast.out, "checks passed"));
}

TEST_CASE("custom table ingestion") {
  const std::string shipped_path = THOM_TABLE_FILE;

  SUBCASE("round trip is byte identical") {
    const EulerTable t = ingest_custom_table(shipped_path);
    CHECK(t.dump() == slurp(shipped_path));
    const EulerEntry* e = t.find(algebra_a(3), m2_ideal(3));
    REQUIRE(e != nullptr);
    CHECK(e->provenance == Provenance::ReciprocityCompleted);
  }

  SUBCASE("wrong-degree entry is rejected by name") {
    spit("cli_bad.tbl", "A_1 | (x^2) | a1\n");
    bool threw = false;
    try {
      ingest_custom_table("cli_bad.tbl");
    } catch (const ValidationError& ex) {
      threw = true;
      CHECK(contains(ex.what(), "A_1"));
    }
    CHECK(threw);
  }

  SUBCASE("missing square row is completed and flagged") {
    spit("cli_a2.tbl", "A_2 | (x^3) | 1\n");
    const EulerTable t = ingest_custom_table("cli_a2.tbl");
    const EulerEntry* e = t.find(algebra_a(2), m2_ideal(2));
    REQUIRE(e != nullptr);
    CHECK(e->provenance == Provenance::ReciprocityCompleted);
    const RatFn want = RatFn::from_factored(
        parse_expression("(1/3)*(a1-2*a2)*(a2-2*a1)"));
    CHECK(RatFn::from_factored(e->value).equals(want));

    const RunResult listing =
        run_cli({"euler", "--algebra", "A2", "--table", "cli_a2.tbl"});
    CHECK(listing.code == 0);
    CHECK(contains(listing.out, "# reciprocity-completed"));

    const RunResult doc = run_cli({"euler", "--algebra", "A2", "--table",
                                   "cli_a2.tbl", "--format", "structured"});
    CHECK(contains(doc.out, "completed 1 square rows by reciprocity"));

    // The completed custom table computes the same class as the built-in.
    const RunResult tp1 =
        run_cli({"tp", "--algebra", "A2", "--table", "cli_a2.tbl"});
    const RunResult tp2 = run_cli({"tp", "--algebra", "A2"});
    CHECK(tp1.code == 0);
    CHECK(tp1.out == tp2.out);
  }

  SUBCASE("shipped rows list with their provenance") {
    const RunResult listing = run_cli({"euler", "--algebra", "A2"});
    CHECK(listing.code == 0);
    CHECK(contains(listing.out, "A_2 | (x^3) | 1  # shipped"));
    CHECK(contains(listing.out, "(x^2,xy,y^2)"));
  }
}

TEST_CASE("series command emits the d-basis expansion") {
  const std::vector<std::string> args = {"series", "--algebra", "A2",
                                         "--index-bound", "2"};
  const RunResult a = run_cli(args);
  const RunResult b = run_cli(args);
  CHECK(a.code == 0);
  CHECK(!a.out.empty());
  CHECK(a.out == b.out);
}
