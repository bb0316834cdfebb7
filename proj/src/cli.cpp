#include "thom/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thom/algebra.hpp"
#include "thom/engine.hpp"
#include "thom/errors.hpp"
#include "thom/euler.hpp"
#include "thom/ideals.hpp"
#include "thom/phi.hpp"
#include "thom/residue.hpp"
#include "thom/schur.hpp"
#include "thom/verify.hpp"

namespace thom {
namespace {

using ordered_json = nlohmann::ordered_json;

// Default localization size: the smallest source dimension whose quotient
// form is already stable.
int base_vars(const AlgebraId& q) {
  return q.family == AlgebraFamily::Sigma ? q.mu() : std::max(1, q.mu() - 1);
}

std::string table_note(const JobSpec& job) {
  return job.table_path.empty() ? "table: built-in fixed-point data (mu <= 4)"
                                : "table: " + job.table_path;
}

void note_completions(const EulerTable& t, ResultDocument& doc) {
  int completed = 0;
  for (const auto& [key, e] : t.entries)
    if (e.provenance == Provenance::ReciprocityCompleted) ++completed;
  if (completed > 0)
    doc.provenance.push_back("completed " + std::to_string(completed) +
                             " square rows by reciprocity");
}

void fill_terms(const SchurExpansion& se, ResultDocument& doc) {
  for (const auto& [lam, c] : se.coeffs) doc.terms.push_back({lam, c.get_str()});
}

void do_tp(const JobSpec& job, const EulerTable& t, ResultDocument& doc) {
  const AlgebraId q = parse_algebra(job.algebra);
  if (job.l && (job.n || job.p))
    throw ValidationError("--l conflicts with --n/--p");
  if (job.n.has_value() != job.p.has_value())
    throw ValidationError("--n and --p go together");
  const int l = job.n ? *job.p - *job.n : job.l.value_or(0);

  if (q.family == AlgebraFamily::Phi) {
    if (job.n && *job.n != q.a)
      throw ValidationError(q.str() + " lives on source dimension " +
                            std::to_string(q.a));
    if (job.basis == "roots") {
      const RootForm rf = phi_tp_localized(q.a, q.b, q.a + l);
      doc.codim = rf.codim();
      doc.text = rf.poly.to_string();
      doc.provenance.push_back(
          "pipeline: localization over the pencil fixed points");
    } else {
      const QuotientForm qf = phi_tp_schur(q.a, q.a - q.b, l);
      doc.codim = qf.codim();
      fill_terms(qf.expansion, doc);
      doc.text = job.basis == "chern" ? qf.to_poly().to_string()
                                      : qf.expansion.to_string();
      doc.provenance.push_back("pipeline: closed Schur form of the family");
    }
    return;
  }

  const int n = job.n ? *job.n : base_vars(q);
  const int p = job.p ? *job.p : n + l;
  const RootForm rf = localize_tp(q, n, p, t);
  doc.provenance.push_back(table_note(job));
  if (job.basis == "roots") {
    doc.codim = rf.codim();
    doc.text = rf.poly.to_string();
    doc.provenance.push_back(
        "pipeline: localization over monomial fixed points");
  } else {
    const QuotientForm qf = to_quotient(rf);
    doc.codim = qf.codim();
    fill_terms(qf.expansion, doc);
    doc.text = job.basis == "chern" ? qf.to_poly().to_string()
                                    : qf.expansion.to_string();
    doc.provenance.push_back(
        "pipeline: localization, certified into the quotient basis");
  }
}

void do_series(const JobSpec& job, const EulerTable& t, ResultDocument& doc) {
  const AlgebraId q = parse_algebra(job.algebra);
  const ThomSeries ts = thom_series(q, t, job.index_bound);
  doc.codim = ts.degree;
  for (const auto& [key, c] : ts.terms) doc.terms.push_back({key, c.get_str()});
  doc.text = ts.to_string();
  doc.provenance.push_back(table_note(job));
  doc.provenance.push_back("pipeline: localization runs glued by lowering, "
                           "largest index " +
                           std::to_string(job.index_bound));
}

void do_euler(const JobSpec& job, const EulerTable& t, ResultDocument& doc) {
  EulerTable full = t;
  const bool filtered = !job.algebra.empty();
  AlgebraId q;
  if (filtered) {
    q = parse_algebra(job.algebra);
    if (!full.covers(q))
      throw ValidationError("the table has no rows for " + q.str());
    if (q.mu() >= 2) complete_by_reciprocity(full, q);
  } else {
    complete_table(full);
  }
  std::ostringstream os;
  for (const auto& [key, e] : full.entries) {
    if (filtered && !(key.first == q)) continue;
    const std::string row = key.first.str() + " | " + ideal_str(key.second) +
                            " | " + e.value.to_string();
    os << row << "  # " << provenance_str(e.provenance) << "\n";
    doc.report.push_back({key.first.str() + " | " + ideal_str(key.second),
                          provenance_str(e.provenance), e.value.to_string()});
  }
  std::string text = os.str();
  if (!text.empty()) text.pop_back();
  doc.text = text;
  doc.provenance.push_back(table_note(job));
  note_completions(full, doc);
}

void do_residue(const JobSpec& job, ResultDocument& doc) {
  const AlgebraId q = parse_algebra(job.algebra);
  const auto catalog = kq_catalog();
  const auto it = catalog.find(q);
  if (it == catalog.end())
    throw ValidationError("no catalog generating function for " + q.str());
  if (job.basis == "roots")
    throw ValidationError("the residue computes the stable quotient form");
  const int l = job.l.value_or(0);
  const MPoly out = iterated_residue(it->second, l);
  doc.codim = q.mu() * l + q.gamma();
  const SchurExpansion se = schur_expand(out);
  fill_terms(se, doc);
  doc.text = job.basis == "chern" ? out.to_string() : se.to_string();
  doc.provenance.push_back(
      "pipeline: iterated residue of the catalog generating function");
}

void do_verify(const JobSpec& job, ResultDocument& doc) {
  if (job.suite != "all" && job.suite != "fast")
    throw ValidationError("--suite takes all or fast");
  const std::vector<CheckOutcome> outcomes = run_checks(job.suite == "fast");
  std::ostringstream os;
  int passed = 0;
  for (const CheckOutcome& o : outcomes) {
    doc.report.push_back({o.name, o.passed ? "PASS" : "FAIL", o.detail});
    if (o.passed) {
      ++passed;
      os << "PASS  " << o.name << "\n";
    } else {
      os << "FAIL  " << o.name << ": " << o.detail << "\n";
    }
  }
  os << passed << "/" << outcomes.size() << " checks passed";
  doc.text = os.str();
  doc.provenance.push_back("suite: " + job.suite);
}

ordered_json opt_json(const std::optional<int>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<int> opt_from(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

}  // namespace

std::string ResultDocument::structured() const {
  ordered_json j;
  j["command"] = command;
  j["algebra"] = algebra.empty() ? ordered_json(nullptr) : ordered_json(algebra);
  j["n"] = opt_json(n);
  j["p"] = opt_json(p);
  j["l"] = opt_json(l);
  j["codim"] = codim < 0 ? ordered_json(nullptr) : ordered_json(codim);
  j["terms"] = ordered_json::array();
  for (const auto& [key, coeff] : terms) {
    ordered_json row;
    row["partition"] = key;
    row["coeff"] = coeff;
    j["terms"].push_back(row);
  }
  j["report"] = ordered_json::array();
  for (const CheckReport& r : report) {
    ordered_json row;
    row["check"] = r.check;
    row["status"] = r.status;
    row["detail"] = r.detail;
    j["report"].push_back(row);
  }
  j["provenance"] = provenance;
  j["text"] = text;
  return j.dump(2);
}

ResultDocument parse_structured(const std::string& s) {
  const ordered_json j = ordered_json::parse(s);
  ResultDocument d;
  d.command = j.at("command").get<std::string>();
  if (!j.at("algebra").is_null()) d.algebra = j.at("algebra").get<std::string>();
  d.n = opt_from(j.at("n"));
  d.p = opt_from(j.at("p"));
  d.l = opt_from(j.at("l"));
  if (!j.at("codim").is_null()) d.codim = j.at("codim").get<int>();
  for (const auto& row : j.at("terms"))
    d.terms.push_back({row.at("partition").get<std::vector<int>>(),
                       row.at("coeff").get<std::string>()});
  for (const auto& row : j.at("report"))
    d.report.push_back({row.at("check").get<std::string>(),
                        row.at("status").get<std::string>(),
                        row.at("detail").get<std::string>()});
  d.provenance = j.at("provenance").get<std::vector<std::string>>();
  d.text = j.at("text").get<std::string>();
  return d;
}

EulerTable ingest_custom_table(const std::string& path) {
  EulerTable t = load_table_file(path);
  complete_table(t);
  return t;
}

ResultDocument execute(const JobSpec& job) {
  ResultDocument doc;
  doc.command = job.command;
  doc.algebra = job.algebra;
  doc.n = job.n;
  doc.p = job.p;
  doc.l = job.l;
  const bool needs_table =
      job.command == "tp" || job.command == "series" || job.command == "euler";
  EulerTable t;
  if (needs_table)
    t = job.table_path.empty() ? shipped_table()
                               : ingest_custom_table(job.table_path);

  if (job.command == "tp")
    do_tp(job, t, doc);
  else if (job.command == "series")
    do_series(job, t, doc);
  else if (job.command == "euler")
    do_euler(job, t, doc);
  else if (job.command == "residue")
    do_residue(job, doc);
  else if (job.command == "verify")
    do_verify(job, doc);
  else
    throw ValidationError("unknown command: " + job.command);
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  JobSpec job;
  int n = 0, p = 0, l = 0;

  CLI::App app{"Thom polynomials and Thom series of contact singularities",
               "thom"};
  app.require_subcommand(1);

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", job.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  const auto add_basis = [&](CLI::App* sub) {
    sub->add_option("--basis", job.basis, "schur, chern or roots")
        ->check(CLI::IsMember({"schur", "chern", "roots"}));
  };
  const auto add_table = [&](CLI::App* sub) {
    sub->add_option("--table", job.table_path, "Euler class table file");
  };

  CLI::App* tp = app.add_subcommand("tp", "Thom polynomial of one algebra");
  tp->add_option("--algebra", job.algebra, "singularity name, e.g. A2")
      ->required();
  tp->add_option("--n", n, "source dimension");
  tp->add_option("--p", p, "target dimension");
  tp->add_option("--l", l, "offset p - n at the stable source dimension");
  add_basis(tp);
  add_format(tp);
  add_table(tp);

  CLI::App* series =
      app.add_subcommand("series", "Thom series in the d-basis");
  series->add_option("--algebra", job.algebra, "singularity name")->required();
  series->add_option("--index-bound", job.index_bound,
                     "largest stored d index");
  add_format(series);
  add_table(series);

  CLI::App* euler = app.add_subcommand("euler", "list Euler class rows");
  euler->add_option("--algebra", job.algebra, "restrict to one algebra");
  add_format(euler);
  add_table(euler);

  CLI::App* residue =
      app.add_subcommand("residue", "Thom polynomial by iterated residue");
  residue->add_option("--algebra", job.algebra, "singularity name")
      ->required();
  residue->add_option("--l", l, "offset p - n");
  add_basis(residue);
  add_format(residue);

  CLI::App* verify = app.add_subcommand("verify", "run consistency checks");
  verify->add_option("--suite", job.suite, "all or fast")
      ->check(CLI::IsMember({"all", "fast"}));
  add_format(verify);

  std::vector<const char*> argv;
  argv.push_back("thom");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  job.command = sub->get_name();
  const auto seen = [&](const char* name) {
    const CLI::Option* o = sub->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  if (seen("--n")) job.n = n;
  if (seen("--p")) job.p = p;
  if (seen("--l")) job.l = l;

  try {
    const ResultDocument doc = execute(job);
    out << (job.format == "structured" ? doc.structured() : doc.text) << "\n";
    if (job.command == "verify")
      for (const CheckReport& r : doc.report)
        if (r.status == "FAIL") return 3;
    return 0;
  } catch (const ValidationError& e) {
    err << "invalid request: " << e.what() << "\n";
    return 2;
  } catch (const MathError& e) {
    err << "computation failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace thom
