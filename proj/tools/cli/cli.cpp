#include "cli.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "record.hpp"
#include "verify.hpp"
#include "zeroruns/compositions.hpp"
#include "zeroruns/errors.hpp"
#include "zeroruns/matrices.hpp"
#include "zeroruns/palindromic.hpp"
#include "zeroruns/runcount.hpp"
#include "zeroruns/sequences.hpp"

namespace zeroruns::cli {

namespace {

constexpr int kMaxLength = 2048;

struct Options {
  std::string format = "plain";
  std::optional<int> oracle_cap;

  std::string function;
  int n = 0;
  int x = 0;
  int k = 0;
  bool palindromic = false;
  bool formula = false;
  bool props = false;
  bool stats = false;
  std::string seq_name;
  int r = 2;
  int seq_k = 1;
  int seq_x = 3;
  int from = 1;
  int count = 10;
  std::vector<int> triple;
  int max_n = 0;
  std::string suite = "all";
};

void check_length(int n, const char* what) {
  if (n < 0 || n > kMaxLength) {
    throw PreconditionError(std::string(what) + " must lie in [0, " + std::to_string(kMaxLength) +
                            "]");
  }
}

const char* provenance_of(FPath p) { return p == FPath::recurrence ? "recurrence" : "formula"; }

const char* provenance_of_hat(int n, int x, int k) {
  switch (F_hat_path(n, x, k)) {
    case FHatPath::recurrence: return "recurrence";
    case FHatPath::odd_center_one: return provenance_of(F_path((n - 1) / 2, x / 2, k));
    default: return "formula";
  }
}

Json pair_json(int x, int k) { return Json::array({x, k}); }

Json rational_json(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return count_json(boost::multiprecision::numerator(q));
  return Json(q.str());
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Record cmd_count(const Options& o) {
  check_length(o.n, "n");
  const bool hat = o.function == "Fhat";
  const Count value = hat ? F_hat(o.n, o.x, o.k) : F(o.n, o.x, o.k);
  Record r;
  r.command = "count";
  r.params = {{"function", o.function}, {"n", o.n}, {"x", o.x}, {"k", o.k}};
  r.result = count_json(value);
  r.provenance = hat ? provenance_of_hat(o.n, o.x, o.k) : provenance_of(F_path(o.n, o.x, o.k));
  r.sections.push_back(scalar_table(to_string(value)));
  return r;
}

Record cmd_table(const Options& o) {
  check_length(o.n, "n");
  Record r;
  r.command = "table";
  r.params = {{"n", o.n}, {"palindromic", o.palindromic}};
  r.result = Json::array();
  r.provenance = "recurrence";
  Table t{{"x", "k", "count"}, {}};
  const auto pairs = o.palindromic ? support_hat_set(o.n).pairs : support_set(o.n).pairs;
  for (const auto& [x, k] : pairs) {
    const Count v = o.palindromic ? F_hat(o.n, x, k) : F(o.n, x, k);
    r.result.push_back({{"x", x}, {"k", k}, {"count", count_json(v)}});
    t.rows.push_back({std::to_string(x), std::to_string(k), to_string(v)});
  }
  r.sections.push_back(std::move(t));
  return r;
}

Record cmd_support(const Options& o) {
  check_length(o.n, "n");
  Record r;
  r.command = "support";
  r.params = {{"n", o.n}, {"palindromic", o.palindromic}, {"formula", o.formula}};
  r.provenance = o.palindromic ? "recurrence" : "formula";
  const auto pairs = o.palindromic ? support_hat_set(o.n).pairs : support_set(o.n).pairs;
  Json pj = Json::array();
  Table t{{"x", "k"}, {}};
  for (const auto& [x, k] : pairs) {
    pj.push_back(pair_json(x, k));
    t.rows.push_back({std::to_string(x), std::to_string(k)});
  }
  r.result = {{"size", pairs.size()}, {"pairs", pj}};
  r.sections.push_back(std::move(t));

  std::vector<std::pair<std::string, std::string>> props{{"size", std::to_string(pairs.size())}};
  if (o.formula) {
    if (o.palindromic) {
      if (o.n < 2) throw PreconditionError("support --palindromic --formula requires n >= 2");
      const HatSupportCheck check = check_support_hat_formula(o.n);
      r.result["formula"] = rational_json(check.formula);
      r.result["matches"] = check.matches();
      props.emplace_back("formula", check.formula.str());
      props.emplace_back("matches", bool_text(check.matches()));
    } else {
      const Count f = support_size_formula(o.n);
      r.result["formula"] = count_json(f);
      r.result["matches"] = f == Count(pairs.size());
      props.emplace_back("formula", to_string(f));
      props.emplace_back("matches", bool_text(f == Count(pairs.size())));
    }
    r.provenance += "+formula";
    if (r.provenance == "formula+formula") r.provenance = "formula";
  }
  r.sections.push_back(property_table(props));
  return r;
}

Record cmd_matrix(const Options& o) {
  check_length(o.n, "n");
  if (o.n < 1) throw PreconditionError("matrix requires n >= 1");
  const MatrixKind kind = o.palindromic ? MatrixKind::palindromic : MatrixKind::plain;
  const CountMatrix m = build_matrix(o.n, kind);
  Record r;
  r.command = "matrix";
  r.params = {{"n", o.n}, {"palindromic", o.palindromic}, {"props", o.props}};
  r.provenance = "recurrence";

  Json rows = Json::array();
  Table t{{"x"}, {}};
  for (int k = 0; k < m.order(); ++k) t.header.push_back(std::to_string(k));
  for (int x = 0; x < m.order(); ++x) {
    const auto row = m.row(x);
    rows.push_back(counts_json(row));
    std::vector<std::string> cells{std::to_string(x)};
    for (const auto& v : row) cells.push_back(to_string(v));
    t.rows.push_back(std::move(cells));
  }
  r.result = {{"kind", to_string(kind)}, {"matrix", rows}};
  r.sections.push_back(std::move(t));

  if (o.props) {
    const Count tr = trace(m);
    const Count det = determinant(m);
    const auto eig = eigenvalues(m);
    Json pj = {{"trace", count_json(tr)}, {"determinant", count_json(det)},
               {"eigenvalues", counts_json(eig)}};
    std::vector<std::pair<std::string, std::string>> props{
        {"trace", to_string(tr)}, {"determinant", to_string(det)}, {"eigenvalues", join(eig, " ")}};
    if (kind == MatrixKind::palindromic) {
      const bool idem = is_idempotent(m);
      pj["idempotent"] = idem;
      props.emplace_back("idempotent", bool_text(idem));
    }
    r.result["properties"] = pj;
    r.sections.push_back(property_table(props));
  }
  return r;
}

Record cmd_seq(const Options& o) {
  const auto name = parse_sequence_name(o.seq_name);
  if (!name) throw PreconditionError("unknown sequence '" + o.seq_name + "'");
  if (o.count < 1 || o.count > 10000) throw PreconditionError("--count must lie in [1, 10000]");
  check_length(o.from, "--from");
  check_length(o.from + o.count - 1, "last index");
  SequenceSpec spec;
  spec.name = *name;
  spec.r = o.r;
  spec.k = o.seq_k;
  spec.x = o.seq_x;
  spec.start = o.from;
  spec.count = o.count;
  const auto values = sequence(spec);

  Record r;
  r.command = "seq";
  r.params = {{"name", o.seq_name}, {"r", o.r}, {"k", o.seq_k}, {"x", o.seq_x},
              {"from", o.from}, {"count", o.count}};
  r.result = counts_json(values);
  r.provenance = "recurrence";
  Table t{{"n", "value"}, {}};
  for (std::size_t i = 0; i < values.size(); ++i) {
    t.rows.push_back({std::to_string(o.from + static_cast<int>(i)), to_string(values[i])});
  }
  r.sections.push_back(std::move(t));
  return r;
}

Record cmd_compositions(const Options& o) {
  check_length(o.n - 1, "m - 1");
  if (o.n < 1) throw PreconditionError("compositions requires m >= 1");
  const CompositionStats s = composition_stats(o.n, o.palindromic);
  Record r;
  r.command = "compositions";
  r.params = {{"m", o.n}, {"palindromic", o.palindromic}, {"stats", o.stats}};
  r.provenance = o.stats ? "recurrence+formula" : "recurrence";
  Json by = Json::array();
  Table t{{"largest", "count"}, {}};
  Count total = 0;
  for (int sz = 1; sz <= o.n; ++sz) {
    by.push_back({{"largest", sz}, {"count", count_json(s.by_largest_summand[sz])}});
    t.rows.push_back({std::to_string(sz), to_string(s.by_largest_summand[sz])});
    total += s.by_largest_summand[sz];
  }
  r.result = {{"by_largest_summand", by}};
  r.sections.push_back(std::move(t));
  if (o.stats) {
    r.result["total"] = count_json(total);
    r.result["plus_signs_total"] = count_json(s.plus_signs_total);
    r.result["summands_total"] = count_json(s.summands_total);
    r.sections.push_back(property_table({{"total", to_string(total)},
                                         {"plus_signs_total", to_string(s.plus_signs_total)},
                                         {"summands_total", to_string(s.summands_total)}}));
  }
  return r;
}

const char* provenance_of(PPath p) { return p == PPath::recurrence ? "recurrence" : "formula"; }

const char* provenance_of(PHatPath p) {
  switch (p) {
    case PHatPath::central_split:
    case PHatPath::direct: return "recurrence";
    default: return "formula";
  }
}

Record cmd_partitions(const Options& o) {
  if (o.triple.size() != 1 && o.triple.size() != 3) {
    throw CLI::ValidationError("partitions", "expects n or n x k");
  }
  const int n = o.triple[0];
  check_length(n, "n");
  Record r;
  r.command = "partitions";
  if (o.triple.size() == 3) {
    const int x = o.triple[1];
    const int k = o.triple[2];
    const Count v = o.palindromic ? P_hat(n, x, k) : P(n, x, k);
    r.params = {{"n", n}, {"x", x}, {"k", k}, {"palindromic", o.palindromic}};
    r.result = count_json(v);
    r.provenance = o.palindromic ? provenance_of(P_hat_path(n, x, k)) : provenance_of(P_path(n, x, k));
    r.sections.push_back(scalar_table(to_string(v)));
    return r;
  }
  r.params = {{"n", n}, {"palindromic", o.palindromic}};
  r.provenance = "recurrence";
  const auto pairs = o.palindromic ? support_hat_set(n).pairs : support_set(n).pairs;
  Json classes = Json::array();
  Table t{{"x", "k", "classes"}, {}};
  Count total = 0;
  for (const auto& [x, k] : pairs) {
    const Count v = o.palindromic ? P_hat(n, x, k) : P(n, x, k);
    classes.push_back({{"x", x}, {"k", k}, {"classes", count_json(v)}});
    t.rows.push_back({std::to_string(x), std::to_string(k), to_string(v)});
    total += v;
  }
  r.result = {{"classes", classes}, {"total", count_json(total)}};
  r.sections.push_back(std::move(t));
  std::vector<std::pair<std::string, std::string>> props{{"total", to_string(total)}};
  if (!o.palindromic) {
    const Count p = partition_function(n + 1);
    r.result["partition_number"] = count_json(p);
    props.emplace_back("partition_number", to_string(p));
  }
  r.sections.push_back(property_table(props));
  return r;
}

Record cmd_verify(const Options& o, const OracleLimits& limits) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw PreconditionError("unknown suite '" + o.suite + "'");
  const VerifyReport report = verify(o.max_n, *suite, limits);

  Record r;
  r.command = "verify";
  r.params = {{"max_n", o.max_n}, {"suite", o.suite}};
  r.provenance = "oracle";
  auto findings = [](const std::vector<Finding>& fs) {
    Json arr = Json::array();
    for (const auto& f : fs) arr.push_back({{"check", f.check}, {"detail", f.detail}});
    return arr;
  };
  r.result = {{"passed", report.ok()},
              {"checks", report.checks},
              {"failures", findings(report.failures)},
              {"notes", findings(report.notes)}};

  Table t{{"status", "check", "detail"}, {}};
  for (const auto& f : report.failures) t.rows.push_back({"FAIL", f.check, f.detail});
  for (const auto& f : report.notes) t.rows.push_back({"NOTE", f.check, f.detail});
  if (!t.rows.empty()) r.sections.push_back(std::move(t));
  r.sections.push_back(property_table({{"checks", std::to_string(report.checks)},
                                       {"failures", std::to_string(report.failures.size())},
                                       {"notes", std::to_string(report.notes.size())},
                                       {"passed", bool_text(report.ok())}}));
  return r;
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return Format::plain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact counts of binary words by zero count and longest zero run", "zeroruns"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--oracle-cap", o.oracle_cap, "Longest word the brute-force oracle may enumerate")
      ->envname("ZERORUNS_ORACLE_CAP")
      ->check(CLI::Range(0, 62));

  auto* count = app.add_subcommand("count", "F(n,x,k) or F_hat(n,x,k)");
  count->add_option("function", o.function)->required()->check(CLI::IsMember({"F", "Fhat"}));
  count->add_option("n", o.n)->required();
  count->add_option("x", o.x)->required();
  count->add_option("k", o.k)->required();

  auto* table = app.add_subcommand("table", "Every nonzero count of length n");
  table->add_option("n", o.n)->required();
  table->add_flag("--palindromic", o.palindromic);

  auto* support = app.add_subcommand("support", "Pairs (x,k) with a nonzero count");
  support->add_option("n", o.n)->required();
  support->add_flag("--palindromic", o.palindromic);
  support->add_flag("--formula", o.formula, "Compare the size against its closed form");

  auto* matrix = app.add_subcommand("matrix", "Count matrix of order n+1");
  matrix->add_option("n", o.n)->required();
  matrix->add_flag("--palindromic", o.palindromic);
  matrix->add_flag("--props", o.props, "Trace, determinant, eigenvalues, idempotence");

  auto* seq = app.add_subcommand("seq", "Terms of a named sequence");
  seq->add_option("name", o.seq_name)->required();
  seq->add_option("--r", o.r, "Run bound for t-run and o-run");
  seq->add_option("--k", o.seq_k, "Column for the column sums");
  seq->add_option("--x", o.seq_x, "Zero count for oblong");
  seq->add_option("--from", o.from, "First index");
  seq->add_option("--count", o.count, "Number of terms");

  auto* comps = app.add_subcommand("compositions", "Compositions of m by largest summand");
  comps->add_option("m", o.n)->required();
  comps->add_flag("--palindromic", o.palindromic);
  comps->add_flag("--stats", o.stats, "Totals of plus signs and summands");

  auto* parts = app.add_subcommand("partitions", "Partition classes P(n,x,k), or all of length n");
  parts->add_option("args", o.triple, "n [x k]")->required()->expected(1, 3);
  parts->add_flag("--palindromic", o.palindromic);

  auto* ver = app.add_subcommand("verify", "Cross-check every identity against brute force");
  ver->add_option("--max-n", o.max_n, "Largest word length to check")->required();
  ver->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"all", "core", "palindromic", "compositions"}))
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_usage;
  }

  OracleLimits limits;
  if (o.oracle_cap) limits.max_plain = limits.max_palindromic = *o.oracle_cap;

  try {
    Record record;
    if (count->parsed()) {
      record = cmd_count(o);
    } else if (table->parsed()) {
      record = cmd_table(o);
    } else if (support->parsed()) {
      record = cmd_support(o);
    } else if (matrix->parsed()) {
      record = cmd_matrix(o);
    } else if (seq->parsed()) {
      record = cmd_seq(o);
    } else if (comps->parsed()) {
      record = cmd_compositions(o);
    } else if (parts->parsed()) {
      record = cmd_partitions(o);
    } else {
      record = cmd_verify(o, limits);
    }
    render(record, parse_format(o.format), out);
    if (record.command == "verify" && !record.result["passed"].get<bool>()) {
      err << "verify: " << record.result["failures"].size() << " discrepancies\n";
      return exit_verify_failed;
    }
    return exit_ok;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_verify_failed;
  }
}

}  // namespace zeroruns::cli
