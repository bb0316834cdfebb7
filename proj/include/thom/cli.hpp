#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thom/euler.hpp"

namespace thom {

// One command-line request. n/p and l are alternatives: l picks the default
// stable source dimension for the family, n/p pin the geometry exactly.
struct JobSpec {
  std::string command;  // tp | series | euler | residue | verify
  std::string algebra;
  std::optional<int> n, p, l;
  std::string basis = "schur";   // schur | chern | roots
  std::string format = "text";   // text | structured
  std::string table_path;        // empty: built-in table
  std::string suite = "all";     // verify: all | fast
  int index_bound = 3;           // series: largest stored d index

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

struct CheckReport {
  std::string check, status, detail;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

// Result of a request: the echoed job geometry, the class data, and the
// rendered text payload. structured() emits the json form; identical jobs
// produce byte-identical documents.
struct ResultDocument {
  std::string command;
  std::string algebra;
  std::optional<int> n, p, l;
  int codim = -1;  // -1 when the command has no single class
  std::vector<std::pair<std::vector<int>, std::string>> terms;
  std::vector<CheckReport> report;
  std::vector<std::string> provenance;
  std::string text;

  std::string structured() const;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

// Inverse of ResultDocument::structured().
ResultDocument parse_structured(const std::string& s);

// Loads a table file and completes the missing square rows by reciprocity;
// dump() on the result still returns the file byte for byte.
EulerTable ingest_custom_table(const std::string& path);

// Computes one request. Throws ValidationError for malformed requests and
// MathError when the computation itself cannot be completed.
ResultDocument execute(const JobSpec& job);

// Full command line entry point (args excludes the program name). Exit
// status: 0 success, 1 computation error, 2 usage error, 3 failed checks.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace thom
