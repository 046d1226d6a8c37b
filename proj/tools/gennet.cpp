#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gennet/asymptotics.hpp"
#include "gennet/closed_forms.hpp"
#include "gennet/oracle.hpp"
#include "json.hpp"

using namespace gennet;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  int threads = 1;
  std::string budget = "none";
  std::string format = "text";
  std::string output;
  bool allow_long = false;
  bool no_root_double_edge = false;

  OracleOptions oracle() const {
    OracleOptions o;
    o.threads = std::max(1, threads);
    o.budget_seconds = parse_budget(budget);
    o.max_n = allow_long ? 13 : 9;
    o.allow_root_double_edge = !no_root_double_edge;
    return o;
  }
};

void add_common(CLI::App* app, Common& c, const std::vector<std::string>& formats) {
  app->add_option("--threads", c.threads, "oracle worker threads")->check(CLI::PositiveNumber);
  app->add_option("--budget", c.budget, "oracle time budget: 30s, 5m, 2h or none");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
  app->add_option("--output", c.output, "write to this file instead of stdout");
  app->add_flag("--allow-long", c.allow_long, "raise the oracle limit from n = 9 to n = 13");
  app->add_flag("--no-root-double-edge", c.no_root_double_edge,
                "oracle: forbid a double edge leaving the root");
}

// Writes to --output when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string rational_text(const BigRational& x) { return to_string(x); }

// ---- count ----

struct CountArgs {
  Common common;
  int k = -1;
  int n = -1;
  int leaves = -1;
  std::string labeling = "vertex";
  std::string stratum = "all";
  std::string method = "series";
};

int cmd_count(const CountArgs& a) {
  Labeling lab = parse_labeling(a.labeling);
  Stratum st = parse_stratum(a.stratum);
  if (a.k < 0) throw UsageError("--k is required");
  int size = lab == Labeling::Vertex ? a.n : (a.leaves >= 0 ? a.leaves : a.n);
  if (size < 0)
    throw UsageError(lab == Labeling::Vertex ? "--n is required for vertex labeling"
                                             : "--leaves is required for leaf labeling");
  int n = lab == Labeling::Vertex ? size : 2 * size + 2 * a.k - 1;

  BigRational value = 0;
  std::string provenance, note;
  if (a.method == "closed") provenance = "closed-form";
  else if (a.method == "oracle") provenance = "oracle";
  else provenance = "series";

  if (lab == Labeling::Vertex && n % 2 == 0) {
    note = "n even";
  } else if (lab == Labeling::Leaf && size < 1) {
    note = "no networks without leaves";
  } else if (a.method == "closed") {
    FormulaValue v = lab == Labeling::Vertex ? exact_vertex(a.k, n, st) : exact_leaf(a.k, size, st);
    if (!v.defined) note = "outside the formula's range";
    else {
      value = v.value;
      if (!v.integral()) note = "non-integer result";
    }
  } else if (a.method == "oracle") {
    OracleOptions o = a.common.oracle();
    if (n > o.max_n)
      throw UsageError("oracle limited to n <= " + std::to_string(o.max_n) +
                       (a.common.allow_long ? "" : " (use --allow-long for up to 13)"));
    if (lab == Labeling::Vertex) {
      CountTable t = enumerate(n, o, a.k).table();
      value = t.get(CountKey{a.k, n, Labeling::Vertex, st});
    } else {
      value = BigRational(count_leaf_labeled(size, a.k, st, o));
    }
  } else {
    if (a.k < 1 || a.k > 3) throw UsageError("series counts need k in 1..3");
    auto v = series_value(Target{a.k, lab, st, Part::Whole, ""}, size);
    value = v ? *v : BigRational(0);
    if (!is_integer(value)) note = "non-integer result";
  }

  Sink sink(a.common.output);
  auto& out = sink.out();
  if (a.common.format == "json") {
    json j = {{"k", a.k},
              {"labeling", to_string(lab)},
              {lab == Labeling::Vertex ? "n" : "leaves", size},
              {"stratum", to_string(st)},
              {"method", a.method},
              {"count", rational_text(value)},
              {"provenance", provenance}};
    if (!note.empty()) j["note"] = note;
    out << j.dump(2) << "\n";
  } else if (a.common.format == "csv") {
    out << "k,labeling,size,stratum,method,count,provenance,note\n"
        << a.k << ',' << to_string(lab) << ',' << size << ',' << to_string(st) << ',' << a.method << ','
        << rational_text(value) << ',' << provenance << ',' << note << "\n";
  } else {
    out << rational_text(value) << "\n";
    out << "provenance: " << provenance << "\n";
    if (!note.empty()) out << "note: " << note << "\n";
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  Common common;
  int max_n = 7;
};

struct CheckRow {
  std::string labeling;
  int k = 0;
  int size = 0;
  Stratum stratum = Stratum::All;
  BigRational series;
  BigRational oracle;
  bool ok() const { return series == oracle; }
};

int cmd_verify(const VerifyArgs& a) {
  OracleOptions o = a.common.oracle();
  if (a.max_n > o.max_n)
    throw UsageError("verify is limited to --max-n " + std::to_string(o.max_n) +
                     (a.common.allow_long ? "" : " (use --allow-long for up to 13)"));
  const double budget = o.budget_seconds;
  auto start = std::chrono::steady_clock::now();
  auto remaining = [&] {
    if (budget <= 0) return 0.0;
    double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (used >= budget) throw BudgetExceeded();
    return budget - used;
  };

  std::vector<CheckRow> rows;
  for (int n = 3; n <= a.max_n; n += 2) {
    o.budget_seconds = remaining();
    CountTable tab = enumerate(n, o).table();
    for (int k = 1; k <= 3; ++k) {
      int l = (n + 1) / 2 - k;
      if (l < 1) continue;
      for (Stratum st : {Stratum::NoMult, Stratum::Mult}) {
        CheckRow r{"vertex", k, n, st};
        r.series = *series_value(Target{k, Labeling::Vertex, st, Part::Whole, ""}, n);
        r.oracle = tab.get(CountKey{k, n, Labeling::Vertex, st});
        rows.push_back(r);
      }
      o.budget_seconds = remaining();
      auto classes = leaf_classes(n, k, o);
      for (Stratum st : {Stratum::NoMult, Stratum::Mult}) {
        CheckRow r{"leaf", k, l, st};
        r.series = *series_value(Target{k, Labeling::Leaf, st, Part::Whole, ""}, l);
        long long c = 0;
        for (auto& cl : classes)
          if ((st == Stratum::Mult) == (cl.cls.r > 0)) ++c;
        r.oracle = BigRational(static_cast<long>(c));
        rows.push_back(r);
      }
    }
  }

  std::map<std::string, int> formula_status;
  for (int k = 1; k <= 3; ++k)
    for (auto& fr : consistency_report(k, a.max_n, nullptr)) ++formula_status[fr.status()];

  int failed = 0;
  for (auto& r : rows) failed += !r.ok();

  Sink sink(a.common.output);
  auto& out = sink.out();
  if (a.common.format == "json") {
    json checks = json::array();
    for (auto& r : rows)
      checks.push_back({{"labeling", r.labeling},
                        {"k", r.k},
                        {"size", r.size},
                        {"stratum", to_string(r.stratum)},
                        {"series", rational_text(r.series)},
                        {"oracle", rational_text(r.oracle)},
                        {"ok", r.ok()}});
    json fs = json::object();
    for (auto& [s, c] : formula_status) fs[s] = c;
    out << json{{"max_n", a.max_n},
                {"checks", checks},
                {"failed", failed},
                {"passed", failed == 0},
                {"formula_vs_series", fs}}
               .dump(2)
        << "\n";
  } else if (a.common.format == "csv") {
    out << "labeling,k,size,stratum,series,oracle,ok\n";
    for (auto& r : rows)
      out << r.labeling << ',' << r.k << ',' << r.size << ',' << to_string(r.stratum) << ','
          << rational_text(r.series) << ',' << rational_text(r.oracle) << ',' << (r.ok() ? "yes" : "no")
          << "\n";
  } else {
    for (auto& r : rows)
      out << (r.ok() ? "ok       " : "MISMATCH ") << r.labeling << " k=" << r.k
          << (r.labeling == "vertex" ? " n=" : " l=") << r.size << " " << to_string(r.stratum)
          << " series=" << rational_text(r.series) << " oracle=" << rational_text(r.oracle) << "\n";
    out << "series vs oracle: " << rows.size() - failed << " of " << rows.size() << " agree\n";
    out << "formula vs series (reported only):";
    for (auto& [s, c] : formula_status) out << " " << s << "=" << c;
    out << "\n";
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

// ---- series ----

struct SeriesArgs {
  Common common;
  int k = -1;
  int max_n = 15;
  std::string stratum = "all";
};

int cmd_series(const SeriesArgs& a) {
  if (a.k < 1 || a.k > 3) throw UsageError("--k must be 1, 2 or 3");
  if (a.max_n < 0) throw UsageError("--max-n must be nonnegative");
  Stratum st = parse_stratum(a.stratum);
  SeriesZ s = series_expand(assemble(a.k, st), a.max_n);
  Sink sink(a.common.output);
  auto& out = sink.out();
  if (a.common.format == "json") {
    json rows = json::array();
    for (int n = 0; n <= a.max_n; ++n)
      rows.push_back({{"n", n},
                      {"numerator", s[n].get_num().get_str()},
                      {"denominator", s[n].get_den().get_str()},
                      {"count", rational_text(s.egf_count(n))}});
    out << json{{"k", a.k}, {"stratum", to_string(st)}, {"coefficients", rows}}.dump(2) << "\n";
  } else if (a.common.format == "csv") {
    out << "n,numerator,denominator,count\n";
    for (int n = 0; n <= a.max_n; ++n)
      out << n << ',' << s[n].get_num().get_str() << ',' << s[n].get_den().get_str() << ','
          << rational_text(s.egf_count(n)) << "\n";
  } else {
    for (int n = 0; n <= a.max_n; ++n)
      out << "n=" << n << " [z^n]=" << rational_text(s[n]) << " count=" << rational_text(s.egf_count(n))
          << "\n";
  }
  return kOk;
}

// ---- asym ----

struct AsymArgs {
  Common common;
  int k = -1;
  int n = -1;
  int leaves = -1;
  int order = 2;
  std::vector<int> n_list;
};

int cmd_asym(const AsymArgs& a) {
  if (a.k < 1 || a.k > 3) throw UsageError("--k must be 1, 2 or 3");
  if (a.order != 1 && a.order != 2) throw UsageError("--order must be 1 or 2");
  Sink sink(a.common.output);
  auto& out = sink.out();
  QSqrt2 d = dk_exact(a.k);
  if (a.leaves >= 0) {
    if (a.leaves < 1) throw UsageError("--leaves must be positive");
    HighFloat est = asym_leaf(a.k, a.leaves);
    if (a.common.format == "json")
      out << json{{"k", a.k}, {"leaves", a.leaves}, {"d_k", d.str()}, {"estimate", format_float(est)}}.dump(2)
          << "\n";
    else if (a.common.format == "csv")
      out << "k,leaves,d_k,estimate\n" << a.k << ',' << a.leaves << ',' << d.str() << ',' << format_float(est) << "\n";
    else
      out << "d_k = " << d.str() << "\nestimate = " << format_float(est) << "\n";
    return kOk;
  }
  std::vector<int> ns = a.n_list;
  if (a.n >= 0) ns.insert(ns.begin(), a.n);
  if (ns.empty()) throw UsageError("give --n, --n-list or --leaves");
  for (int n : ns)
    if (n < 1) throw UsageError("n must be positive");
  auto rows = convergence_table(a.k, ns);
  if (a.common.format == "json") {
    write_table_json(out, rows);
  } else if (a.common.format == "csv") {
    write_table_csv(out, rows);
  } else {
    out << "d_k = " << d.str() << "\n";
    for (auto& r : rows) {
      const HighFloat& est = a.order == 1 ? r.est1 : r.est2;
      const HighFloat& err = a.order == 1 ? r.rel_err1 : r.rel_err2;
      out << "n=" << r.n << " order=" << a.order << " estimate=" << format_float(est)
          << " exact=" << format_float(to_high(r.exact)) << " rel_err=" << format_float(err, 6)
          << " fitted_residual=" << format_float(r.fitted_residual, 6) << "\n";
    }
  }
  return kOk;
}

// ---- report ----

struct ReportArgs {
  Common common;
  int k = -1;
  int max_n = 25;
  int oracle_max_n = 9;
  bool no_oracle = false;
};

int cmd_report(const ReportArgs& a) {
  std::vector<int> ks;
  if (a.k < 0) ks = {1, 2, 3};
  else if (a.k >= 1 && a.k <= 3) ks = {a.k};
  else throw UsageError("--k must be 1, 2 or 3");
  OracleData od;
  if (!a.no_oracle) {
    OracleOptions o = a.common.oracle();
    if (a.oracle_max_n > o.max_n)
      throw UsageError("--oracle-max-n above " + std::to_string(o.max_n) + " needs --allow-long");
    od.collect(std::min(a.oracle_max_n, a.max_n), o);
  }
  std::vector<FormulaResult> rows;
  for (int k : ks) {
    auto part = consistency_report(k, a.max_n, a.no_oracle ? nullptr : &od);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  Sink sink(a.common.output);
  auto& out = sink.out();
  if (a.common.format == "json") write_report_json(out, rows);
  else if (a.common.format == "csv") write_report_csv(out, rows);
  else
    for (auto& r : rows)
      out << r.formula_id << " k=" << r.k << (r.labeling == Labeling::Vertex ? " n=" : " l=") << r.arg
          << " value=" << (r.value.defined ? rational_text(r.value.value) : "-")
          << " series=" << (r.series ? rational_text(*r.series) : "-")
          << " oracle=" << (r.oracle ? rational_text(*r.oracle) : "-") << " status=" << r.status() << "\n";
  return kOk;
}

// ---- networks ----

struct NetworksArgs {
  Common common;
  int n = -1;
  int k = -1;
};

int cmd_networks(const NetworksArgs& a) {
  OracleOptions o = a.common.oracle();
  if (a.n < 1 || a.k < 0) throw UsageError("--n and --k are required");
  Sink sink(a.common.output);
  auto& out = sink.out();
  for_each_layout_network(a.n, a.k, o, [&](const Network& g) {
    write_edge_list(out, g);
    out << "\n";
  });
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts, series, asymptotics and oracle checks for general phylogenetic networks"};
  app.require_subcommand(1);
  const std::vector<std::string> all_formats = {"text", "json", "csv"};

  CountArgs ca;
  auto* count = app.add_subcommand("count", "print one exact count");
  add_common(count, ca.common, all_formats);
  count->add_option("--k", ca.k, "reticulation vertices")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--n", ca.n, "vertices (vertex labeling)")->check(CLI::NonNegativeNumber);
  count->add_option("--leaves", ca.leaves, "leaves (leaf labeling)")->check(CLI::NonNegativeNumber);
  count->add_option("--labeling", ca.labeling)->check(CLI::IsMember({"vertex", "leaf"}));
  count->add_option("--stratum", ca.stratum)->check(CLI::IsMember({"all", "no-mult", "mult"}));
  count->add_option("--method", ca.method)->check(CLI::IsMember({"series", "closed", "oracle"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "compare series against the oracle at every odd n <= max-n");
  add_common(verify, va.common, all_formats);
  verify->add_option("--max-n", va.max_n)->check(CLI::NonNegativeNumber);

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "coefficients of an assembled generating function");
  add_common(series, sa.common, all_formats);
  series->add_option("--k", sa.k)->required();
  series->add_option("--max-n", sa.max_n);
  series->add_option("--stratum", sa.stratum)->check(CLI::IsMember({"all", "no-mult", "mult"}));

  AsymArgs aa;
  auto* asym = app.add_subcommand("asym", "asymptotic estimates against exact counts");
  add_common(asym, aa.common, all_formats);
  asym->add_option("--k", aa.k)->required();
  asym->add_option("--n", aa.n);
  asym->add_option("--n-list", aa.n_list)->delimiter(',');
  asym->add_option("--leaves", aa.leaves);
  asym->add_option("--order", aa.order);

  ReportArgs ra;
  auto* report = app.add_subcommand("report", "reports");
  report->require_subcommand(1);
  auto* consistency = report->add_subcommand("consistency", "every printed formula against series and oracle");
  add_common(consistency, ra.common, all_formats);
  consistency->add_option("--k", ra.k);
  consistency->add_option("--max-n", ra.max_n);
  consistency->add_option("--oracle-max-n", ra.oracle_max_n);
  consistency->add_flag("--no-oracle", ra.no_oracle);

  NetworksArgs na;
  auto* networks = app.add_subcommand("networks", "emit block-layout networks as edge lists");
  add_common(networks, na.common, all_formats);
  networks->add_option("--n", na.n)->required();
  networks->add_option("--k", na.k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(ca);
    if (*verify) return cmd_verify(va);
    if (*series) return cmd_series(sa);
    if (*asym) return cmd_asym(aa);
    if (*consistency) return cmd_report(ra);
    if (*networks) return cmd_networks(na);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
