#include "cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/render.hpp"
#include "naples/naples.hpp"

namespace naples::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, std::string_view what) {
  std::vector<int> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::ParseError,
                  "malformed " + std::string(what) + " token '" + std::string(token) + "'");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return values;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }
const char* pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string render_intervals(const std::vector<Interval>& intervals) {
  if (intervals.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (i) s += ' ';
    s += to_string(intervals[i]);
  }
  return s;
}

// Writes to the named file, or to `out` when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::InvalidArgument, "cannot open output file " + path);
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

struct ParkArgs {
  std::string preference;
  std::string k = "0";
  bool trace = false;
  bool json = false;
};

int cmd_park(const ParkArgs& a, std::ostream& out) {
  const auto alpha = ParkingPreference::parse(a.preference);
  const auto ks = parse_int_list(a.k, "backward window");
  const bool uniform = ks.size() == 1;
  const auto windows = uniform ? BackwardWindows::uniform(alpha.length(), ks.front())
                               : BackwardWindows(ks);
  const auto result = park(alpha, windows, a.trace ? TraceMode::On : TraceMode::Off);

  if (a.json) {
    json j = to_json(result.outcome);
    j["preference"] = alpha.values();
    j["k"] = uniform ? json(ks.front()) : json(ks);
    if (result.trace) j["trace"] = to_json(*result.trace);
    out << j.dump(2) << '\n';
    return kSuccess;
  }

  out << "preference: " << alpha << '\n';
  out << "k: " << join(ks) << '\n';
  out << "outcome: " << render_outcome(result.outcome.spot_of) << '\n';
  out << "all_parked: " << yes_no(result.outcome.all_parked) << '\n';
  if (result.trace) {
    for (const auto& ev : *result.trace) {
      out << "car " << ev.car << ": pref=" << ev.preferred
          << " backward=" << (ev.backward_checks.empty() ? "-" : join(ev.backward_checks))
          << " forward=" << (ev.forward_checks.empty() ? "-" : join(ev.forward_checks))
          << " result=" << (ev.result == kUnparked ? "X" : std::to_string(ev.result)) << '\n';
    }
  }
  return kSuccess;
}

struct ClassifyArgs {
  std::string preference;
  int k = 1;
  bool json = false;
  std::string expect;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const auto alpha = ParkingPreference::parse(a.preference);
  if (a.k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  const auto u = excess(alpha);

  const bool pf = is_parking_function(alpha);
  const bool naples = is_k_naples(alpha, a.k);
  const bool complete = is_complete_or_false(alpha);
  const bool perm = is_permutation_invariant(alpha, a.k);
  const int min_k = minimal_naples_k(alpha);

  if (a.json) {
    json intervals = json::array();
    for (const auto& iv : u.critical_intervals()) intervals.push_back(to_json(iv));
    out << json{{"preference", alpha.values()},
                {"k", a.k},
                {"parking_function", pf},
                {"k_naples", naples},
                {"complete", complete},
                {"perm_invariant", perm},
                {"excess", u.values()},
                {"critical_intervals", intervals},
                {"max_excess", u.max()},
                {"minimal_k", min_k}}
               .dump(2)
        << '\n';
  } else {
    out << "preference: " << alpha << '\n';
    out << "k: " << a.k << '\n';
    out << "parking_function: " << yes_no(pf) << '\n';
    out << "k_naples: " << yes_no(naples) << '\n';
    out << "complete: " << yes_no(complete) << '\n';
    out << "perm_invariant: " << yes_no(perm) << '\n';
    out << "excess: " << join(u.values()) << '\n';
    out << "critical_intervals: " << render_intervals(u.critical_intervals()) << '\n';
    out << "max_excess: " << u.max() << '\n';
    out << "minimal_k: " << min_k << '\n';
  }

  if (!a.expect.empty()) {
    return evaluate(parse_predicate(a.expect), alpha, a.k) ? kSuccess : kPredicateFalse;
  }
  return kSuccess;
}

struct WitnessArgs {
  std::string preference;
  int k = 1;
  bool all = false;
  bool json = false;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  const auto alpha = ParkingPreference::parse(a.preference);
  const bool naples = is_k_naples(alpha, a.k);
  const bool theorem = verify_main_theorem(alpha, a.k);
  const auto intervals = excess(alpha).critical_intervals();

  json j_intervals = json::array();
  std::ostringstream text;
  for (const auto& iv : intervals) {
    const auto cert = find_witness(alpha, a.k, iv);
    std::vector<WitnessCertificate> every;
    if (a.all) every = all_witnesses(alpha, a.k, iv, 2);

    json entry = {{"interval", to_json(iv)}, {"witness", nullptr}};
    text << "interval: " << to_string(iv) << '\n';
    if (cert) {
      const auto check = check_certificate(alpha, a.k, *cert);
      entry["witness"] = to_json(*cert);
      entry["checks"] = to_json(check);
      text << "  J: " << to_string(cert->cars) << '\n'
           << "  restriction: " << cert->shifted_restriction << '\n'
           << "  range: " << pass_fail(check.in_range) << '\n'
           << "  complete: " << pass_fail(check.complete) << '\n'
           << "  k_naples: " << pass_fail(check.k_naples) << '\n'
           << "  size_bound: " << pass_fail(check.size_bound) << '\n';
    } else {
      text << "  J: none\n  witness: FAIL\n";
    }
    if (a.all) {
      json list = json::array();
      text << "  witnesses: " << every.size() << '\n';
      for (const auto& w : every) {
        list.push_back(to_json(w));
        text << "  J: " << to_string(w.cars) << " restriction: " << w.shifted_restriction
             << '\n';
      }
      entry["all_witnesses"] = list;
    }
    j_intervals.push_back(entry);
  }

  if (a.json) {
    out << json{{"preference", alpha.values()},
                {"k", a.k},
                {"k_naples", naples},
                {"theorem_holds", theorem == naples},
                {"intervals", j_intervals}}
               .dump(2)
        << '\n';
  } else {
    out << "preference: " << alpha << '\n' << "k: " << a.k << '\n';
    if (intervals.empty()) out << "critical_intervals: none\n";
    out << text.str();
    out << "k_naples: " << yes_no(naples) << '\n';
    out << "theorem: " << pass_fail(theorem == naples) << '\n';
  }
  return kSuccess;
}

struct DecomposeArgs {
  std::string preference;
  int j = 1;
  std::optional<int> k;
  bool json = false;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
  const auto alpha = ParkingPreference::parse(a.preference);
  const auto d = decompose_at(alpha, a.j);
  std::optional<DecompositionCheck> check;
  if (a.k && is_k_naples(alpha, *a.k)) check = verify_decomposition_lemma(alpha, *a.k, a.j);

  if (a.json) {
    json j = {{"preference", alpha.values()},
              {"j", a.j},
              {"upper_cars", d.upper_cars.values()},
              {"lower", d.lower ? json(d.lower->values()) : json::array()},
              {"upper", d.upper.values()}};
    if (a.k) {
      j["k"] = *a.k;
      j["k_naples"] = is_k_naples(alpha, *a.k);
      j["upper_k_naples"] = is_k_naples(d.upper, *a.k);
      j["lower_k_naples"] = d.lower ? json(is_k_naples(*d.lower, *a.k)) : json(nullptr);
      if (check) j["upper_cars_parked_below"] = check->upper_cars_parked_below;
    }
    out << j.dump(2) << '\n';
    return kSuccess;
  }

  out << "preference: " << alpha << '\n';
  out << "j: " << a.j << '\n';
  out << "upper_cars: " << to_string(d.upper_cars) << '\n';
  out << "lower: " << (d.lower ? to_string(*d.lower) : std::string("(empty)")) << '\n';
  out << "upper: " << d.upper << '\n';
  if (a.k) {
    out << "k: " << *a.k << '\n';
    out << "k_naples: " << yes_no(is_k_naples(alpha, *a.k)) << '\n';
    out << "upper_k_naples: " << yes_no(is_k_naples(d.upper, *a.k)) << '\n';
    if (d.lower) out << "lower_k_naples: " << yes_no(is_k_naples(*d.lower, *a.k)) << '\n';
    if (check) {
      out << "upper_cars_parked_below: "
          << (check->upper_cars_parked_below.empty() ? std::string("none")
                                                     : join(check->upper_cars_parked_below))
          << '\n';
    }
  }
  return kSuccess;
}

struct TableArgs {
  int n = 0;
  std::optional<int> k;
  std::optional<int> k_max;
  std::vector<std::string> predicates;
  unsigned shards = 1;
  std::string format = "csv";
  std::string output;
  bool allow_large = false;
  bool classes = false;
};

SweepOptions sweep_options(const TableArgs& a) {
  SweepOptions options;
  if (!a.predicates.empty()) {
    options.predicates.clear();
    for (const auto& p : a.predicates) options.predicates.push_back(parse_predicate(p));
  }
  options.shards = a.shards;
  options.size_limit = a.allow_large ? kExtendedSizeLimit : kDefaultSizeLimit;
  return options;
}

std::vector<int> k_values(const TableArgs& a, int n) {
  if (a.k) return *a.k <= n ? std::vector<int>{*a.k} : std::vector<int>{};
  const int top = std::min(a.k_max.value_or(n), n);
  std::vector<int> ks;
  for (int k = 0; k <= top; ++k) ks.push_back(k);
  return ks;
}

void emit_table(const TableArgs& a, int n_min, int n_max, std::ostream& out) {
  const auto options = sweep_options(a);
  // Fail before anything is written.
  if (n_max < 1 || n_max > options.size_limit) {
    throw Error(ErrorCode::SizeLimitExceeded, "sweep size n=" + std::to_string(n_max) +
                                                  " outside [1," +
                                                  std::to_string(options.size_limit) + "]");
  }
  if (a.k && (*a.k < 0 || *a.k > n_max)) {
    throw Error(ErrorCode::InvalidArgument, "k=" + std::to_string(*a.k) + " outside [0,n]");
  }
  Sink sink(a.output, out);
  auto& os = sink.stream();
  json rows = json::array();
  if (a.format == "csv") write_csv_header(os);
  for (int n = n_min; n <= n_max; ++n) {
    for (int k : k_values(a, n)) {
      const auto report = sweep(n, k, options);
      std::optional<PermInvariantCount> fast;
      if (a.classes) fast = count_perm_invariant_fast(n, k);
      if (a.format == "csv") {
        write_csv_rows(os, report);
        if (fast) {
          os << n << ',' << k << ",perm_invariant_classes," << fast->classes << ','
             << report.total << ',' << report.elapsed.count() << '\n';
        }
      } else {
        json j = to_json(report);
        if (fast) j["perm_invariant_classes"] = fast->classes;
        rows.push_back(j);
      }
    }
  }
  if (a.format == "json") os << rows.dump(2) << '\n';
}

int cmd_count(const TableArgs& a, std::ostream& out) {
  emit_table(a, a.n, a.n, out);
  return kSuccess;
}

struct SweepArgs {
  TableArgs table;
  bool verify = false;
  std::vector<std::string> properties;
  bool list_properties = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.list_properties) {
    for (const auto& p : registered_properties()) {
      out << p.name << (p.expected_to_hold ? "" : " (expected to fail)") << ": " << p.summary
          << '\n';
    }
    return kSuccess;
  }
  if (!a.verify) {
    emit_table(a.table, 1, a.table.n, out);
    return kSuccess;
  }

  auto options = sweep_options(a.table);
  options.verify = true;
  options.properties = a.properties;
  for (const auto& name : a.properties) find_property(name);

  std::uint64_t checked = 0;
  for (int n = 1; n <= a.table.n; ++n) {
    for (int k : k_values(a.table, n)) {
      const auto report = sweep(n, k, options);
      if (report.violation) {
        out << "n=" << n << " k=" << k << ": COUNTEREXAMPLE\n";
        out << "property: " << report.violation->property << '\n';
        out << "k: " << report.violation->k << '\n';
        out << "preference: " << report.violation->preference << '\n';
        return kCounterexample;
      }
      checked += report.total;
      out << "n=" << n << " k=" << k << ": " << report.total << " preferences OK ("
          << report.elapsed.count() << " ms)\n";
    }
  }
  out << "verified " << checked << " (preference, k) pairs, no counterexample\n";
  return kSuccess;
}

void add_table_options(CLI::App* cmd, TableArgs& t) {
  cmd->add_option("-k,--k", t.k, "Single backward window k");
  cmd->add_option("--k-max", t.k_max, "Sweep k = 0..k-max (default n)");
  cmd->add_option("--predicates", t.predicates, "Predicates to count")
      ->delimiter(',')
      ->check(CLI::IsMember({"parking_function", "k_naples", "complete", "complete_k_naples",
                             "perm_invariant"}));
  cmd->add_option("--shards", t.shards, "Worker threads (0 = hardware concurrency)");
  cmd->add_option("--format", t.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("-o,--output", t.output, "Write the table to a file");
  cmd->add_flag("--allow-large", t.allow_large, "Permit n = 9");
  cmd->add_flag("--classes", t.classes, "Also report permutation-invariant multiset classes");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"naples: k-Naples parking functions and the excess-function calculus"};
  app.name("naples");
  app.require_subcommand(1);

  ParkArgs park_args;
  auto* park_cmd = app.add_subcommand("park", "Run the parking process");
  park_cmd->add_option("-p,--preference", park_args.preference, "e.g. 3,4,4,4,3")->required();
  park_cmd->add_option("-k,--k", park_args.k, "Backward window, or one per car: 1,0,2,...");
  park_cmd->add_flag("--trace", park_args.trace, "Print every probe");
  park_cmd->add_flag("--json", park_args.json, "JSON output");

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Evaluate every predicate");
  classify_cmd->add_option("-p,--preference", classify_args.preference)->required();
  classify_cmd->add_option("-k,--k", classify_args.k, "Backward window")->required();
  classify_cmd->add_flag("--json", classify_args.json, "JSON output");
  classify_cmd->add_option("--expect", classify_args.expect, "Exit 1 unless this predicate holds")
      ->check(CLI::IsMember({"parking_function", "k_naples", "complete", "complete_k_naples",
                             "perm_invariant"}));

  WitnessArgs witness_args;
  auto* witness_cmd = app.add_subcommand("witness", "Witness sets for each critical interval");
  witness_cmd->add_option("-p,--preference", witness_args.preference)->required();
  witness_cmd->add_option("-k,--k", witness_args.k, "Backward window (>= 1)")->required();
  witness_cmd->add_flag("--all", witness_args.all, "Enumerate every witness (n <= 12)");
  witness_cmd->add_flag("--json", witness_args.json, "JSON output");

  DecomposeArgs decompose_args;
  auto* decompose_cmd = app.add_subcommand("decompose", "Split at a zero of the excess function");
  decompose_cmd->add_option("-p,--preference", decompose_args.preference)->required();
  decompose_cmd->add_option("-j,--spot", decompose_args.j, "Spot with u(j) = 0")->required();
  decompose_cmd->add_option("-k,--k", decompose_args.k, "Also report k-Naples membership");
  decompose_cmd->add_flag("--json", decompose_args.json, "JSON output");

  TableArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "Count predicates over all n^n preferences");
  count_cmd->add_option("-n,--n", count_args.n, "Preference length")->required();
  add_table_options(count_cmd, count_args);

  SweepArgs sweep_args;
  sweep_args.table.n = 6;
  auto* sweep_cmd = app.add_subcommand("sweep", "Counts or invariant checks for n = 1..N");
  sweep_cmd->add_option("-n,--n", sweep_args.table.n, "Largest preference length");
  add_table_options(sweep_cmd, sweep_args.table);
  sweep_cmd->add_flag("--verify", sweep_args.verify, "Check every registered property");
  sweep_cmd->add_option("--property", sweep_args.properties, "Restrict --verify to properties");
  sweep_cmd->add_flag("--list-properties", sweep_args.list_properties, "List properties and exit");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*park_cmd) return cmd_park(park_args, out);
    if (*classify_cmd) return cmd_classify(classify_args, out);
    if (*witness_cmd) return cmd_witness(witness_args, out);
    if (*decompose_cmd) return cmd_decompose(decompose_args, out);
    if (*count_cmd) return cmd_count(count_args, out);
    if (*sweep_cmd) return cmd_sweep(sweep_args, out);
  } catch (const InvariantViolation& e) {
    err << "counterexample: " << e.what() << '\n';
    return kCounterexample;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace naples::cli
