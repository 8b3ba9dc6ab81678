// alttam: command-line front end for the alt-Tamari library.
//
// Exit codes: 0 success, 1 usage error, 2 a check or comparison failed.

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "alttam/alt_tamari.hpp"
#include "alttam/bijections.hpp"
#include "alttam/binary_tree.hpp"
#include "alttam/census.hpp"
#include "alttam/error.hpp"
#include "alttam/series.hpp"
#include "alttam/verify.hpp"

namespace {

using namespace alttam;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

enum class Format { Table, Json, Csv, Dot };

struct Formats {
  bool json = false;
  bool csv = false;
  bool dot = false;

  void add_to(CLI::App* cmd, bool with_csv, bool with_dot) {
    cmd->add_flag("--json", json, "JSON output");
    if (with_csv) cmd->add_flag("--csv", csv, "CSV output");
    if (with_dot) cmd->add_flag("--dot", dot, "Graphviz DOT output");
  }
  Format pick(Format fallback) const {
    if (json + csv + dot > 1) throw Error(ErrorKind::InvalidArgument, "pick at most one output format");
    if (json) return Format::Json;
    if (csv) return Format::Csv;
    if (dot) return Format::Dot;
    return fallback;
  }
};

int default_jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

// Usage-type errors map to exit 1; anything else raised by a check is a failure.
int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotLinear:
    case ErrorKind::NotACovering:
    case ErrorKind::NotLeft:
    case ErrorKind::NotRight:
      return kFailed;
    default:
      return kUsage;
  }
}

std::vector<int> sizes(int n, int n_max) {
  if (n > 0 && n_max > 0) throw Error(ErrorKind::InvalidArgument, "give either --n or --n-max");
  if (n_max > 0) {
    std::vector<int> out;
    for (int m = 1; m <= n_max; ++m) out.push_back(m);
    return out;
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be at least 1");
  return {n};
}

// Bitstrings only apply at their own length; named aliases apply everywhere.
std::vector<IncrementFunction> deltas_for(const std::vector<std::string>& specs, int n, bool lenient) {
  std::vector<IncrementFunction> out;
  for (const std::string& spec : specs) {
    if (lenient && spec != "tamari" && spec != "dyck" && static_cast<int>(spec.size()) != n) continue;
    out.push_back(parse_delta(spec, n));
  }
  return out;
}

int cmd_count(int n, int n_max, std::vector<std::string> delta_specs, const Formats& formats, int jobs) {
  const Format format = formats.pick(Format::Table);
  if (delta_specs.empty()) delta_specs.push_back("tamari");
  const std::vector<int> ns = sizes(n, n_max);
  std::vector<CountsTable> tables;
  for (int m : ns) {
    const std::vector<IncrementFunction> deltas = deltas_for(delta_specs, m, ns.size() > 1);
    for (const IncrementFunction& delta : deltas) tables.push_back(census(delta, jobs));
  }
  if (tables.empty()) throw Error(ErrorKind::InvalidArgument, "no increment function matches the requested sizes");
  bool all_match = true;
  for (const CountsTable& t : tables) all_match = all_match && matches_closed_form(t);

  if (format == Format::Json) {
    std::cout << to_json(tables) << '\n';
  } else if (format == Format::Csv) {
    std::cout << to_csv(tables);
  } else {
    std::cout << std::left << std::setw(4) << "n" << std::setw(12) << "delta" << std::setw(8) << "height"
              << std::setw(14) << "count" << std::setw(14) << "closed_form" << "match\n";
    for (const CountsTable& t : tables) {
      for (const TableRow& r : table_rows(t)) {
        std::cout << std::setw(4) << t.n << std::setw(12) << t.delta.to_string() << std::setw(8) << r.height
                  << std::setw(14) << r.count.str() << std::setw(14) << r.expected.str() << (r.match ? "yes" : "NO")
                  << '\n';
      }
      std::cout << std::setw(4) << t.n << std::setw(12) << t.delta.to_string() << std::setw(8) << "total"
                << std::setw(14) << t.total().str() << std::setw(14) << total_closed_form(t.n).str()
                << (t.total() == total_closed_form(t.n) ? "yes" : "NO") << '\n';
    }
  }
  return all_match ? kOk : kFailed;
}

int cmd_verify(const VerifyOptions& options) {
  const std::vector<PropertyReport> reports = run_verify(options);
  bool ok = true;
  for (const PropertyReport& r : reports) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.name << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok ? kOk : kFailed;
}

int cmd_hasse(int n, const std::string& delta_spec, const Formats& formats) {
  const Format format = formats.pick(Format::Dot);
  if (format == Format::Csv) throw Error(ErrorKind::InvalidArgument, "hasse supports --dot and --json");
  if (n > hasse_cap()) {
    throw Error(ErrorKind::SizeTooLarge, "hasse diagrams are capped at n=" + std::to_string(hasse_cap()) +
                                             " (raise with ALT_TAMARI_MAX_N)");
  }
  const AltTamariPoset alt = AltTamariPoset::build(parse_delta(delta_spec, n), std::max(n, poset_cap()));
  std::cout << (format == Format::Json ? to_json(alt.poset()) + "\n" : to_dot(alt.poset()));
  return kOk;
}

int cmd_series(int k, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "--order must be non-negative");
  const TruncatedSeries s = k < 0 ? solve_tree_series(order) : s_series(k, order);
  for (int i = 0; i <= order; ++i) std::cout << s[i] << '\n';
  return kOk;
}

void print_interval(const Interval& iv, bool json) {
  if (json) {
    std::cout << nlohmann::json{{"bottom", iv.bottom.word()}, {"top", iv.top.word()}}.dump() << '\n';
  } else {
    std::cout << "bottom " << iv.bottom.word() << "\ntop    " << iv.top.word() << '\n';
  }
}

int cmd_decompose(const std::string& delta_spec, const std::string& bottom, const std::string& top) {
  const DyckPath p = parse_dyck(bottom);
  const DyckPath q = parse_dyck(top);
  std::cout << to_json(decompose(parse_delta(delta_spec, p.size()), p, q)) << '\n';
  return kOk;
}

int cmd_compose(const std::string& delta_spec, const std::string& marked, const std::vector<std::string>& parts,
                bool json) {
  Decomposition d;
  d.marked = parse_marked(marked);
  for (const std::string& part : parts) d.parts.push_back(parse_dyck(part));
  print_interval(compose(parse_delta(delta_spec, d.interval_size()), d), json);
  return kOk;
}

int cmd_transport(const std::string& from, const std::string& to, const std::string& bottom, const std::string& top,
                  bool json) {
  const DyckPath p = parse_dyck(bottom);
  const DyckPath q = parse_dyck(top);
  print_interval(transport(parse_delta(from, p.size()), parse_delta(to, p.size()), p, q), json);
  return kOk;
}

int cmd_refine(int n, const std::string& from, const std::string& to, bool json) {
  const IncrementFunction finer = parse_delta(from, n);
  const IncrementFunction coarser = parse_delta(to, n);
  const bool pointwise = finer.pointwise_leq(coarser);
  const bool refined = refines(finer, coarser, n);
  if (json) {
    std::cout << nlohmann::json{{"n", n}, {"from", finer.to_string()}, {"to", coarser.to_string()},
                                {"pointwise_leq", pointwise}, {"refines", refined}}
                     .dump()
              << '\n';
  } else {
    std::cout << "Tam^" << finer.to_string() << (refined ? " refines " : " does not refine ") << "Tam^"
              << coarser.to_string() << " (pointwise " << (pointwise ? "<=" : "not <=") << ")\n";
  }
  // pointwise order must imply refinement
  return pointwise && !refined ? kFailed : kOk;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
  return out;
}

int cmd_paths(int n, const std::string& delta_spec, bool json) {
  const std::vector<DyckPath> paths = enumerate_paths(n);
  const bool with_stats = !delta_spec.empty();
  const IncrementFunction delta = with_stats ? parse_delta(delta_spec, n) : IncrementFunction{};
  nlohmann::json rows = nlohmann::json::array();
  for (const DyckPath& p : paths) {
    if (!with_stats) {
      if (json) {
        rows.push_back(p.word());
      } else {
        std::cout << p.word() << '\n';
      }
      continue;
    }
    const StepStats s = step_stats(delta, p);
    if (json) {
      rows.push_back({{"path", p.word()}, {"h", s.h}, {"ell", s.ell}});
    } else {
      std::cout << p.word() << "  h=" << join(s.h) << "  ell=" << join(s.ell) << '\n';
    }
  }
  if (json) std::cout << rows.dump() << '\n';
  return kOk;
}

int cmd_trees(int n, bool json) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BinaryTree& t : enumerate_trees(n)) {
    if (json) {
      rows.push_back({{"tree", t.to_parens()}, {"path", tree_to_path(t).word()}});
    } else {
      std::cout << std::left << std::setw(2 * n + 2) << t.to_parens() << tree_to_path(t).word() << '\n';
    }
  }
  if (json) std::cout << rows.dump() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alt-Tamari posets on Dyck paths: construction, linear-interval census, bijections and series"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = default_jobs();
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--jobs", jobs, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for random increment functions");

  int n = 0;
  int n_max = 0;
  std::vector<std::string> deltas;
  Formats formats;

  CLI::App* count = app.add_subcommand("count", "census of linear intervals against the closed forms");
  count->add_option("--n", n, "path size");
  count->add_option("--n-max", n_max, "run sizes 1..n-max");
  count->add_option("--delta", deltas, "increment function: bitstring, tamari or dyck (repeatable)");
  formats.add_to(count, true, false);

  VerifyOptions verify_options;
  std::vector<std::string> only;
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--n-max", verify_options.n_max, "largest size checked")->capture_default_str();
  verify->add_option("--only", only, "restrict to these properties (repeatable, comma separated)")
      ->delimiter(',');

  std::string delta;
  CLI::App* hasse = app.add_subcommand("hasse", "Hasse diagram of Tam^delta_n");
  hasse->add_option("--n", n, "path size")->required();
  hasse->add_option("--delta", delta, "increment function")->required();
  formats.add_to(hasse, false, true);

  int k = -1;
  int order = kDefaultSeriesOrder;
  CLI::App* series = app.add_subcommand("series", "coefficients of S_k (or of A without --k), one per line");
  series->add_option("--k", k, "height k >= 0");
  series->add_option("--order", order, "highest degree printed")->capture_default_str();

  std::string bottom;
  std::string top;
  std::string from;
  std::string to;
  std::string marked;
  std::vector<std::string> parts;
  bool json = false;

  CLI::App* biject = app.add_subcommand("biject", "decompose, compose or transport linear intervals");
  biject->require_subcommand(1);
  CLI::App* decompose_cmd = biject->add_subcommand("decompose", "interval -> marked path and parts (JSON)");
  decompose_cmd->add_option("--delta", delta)->required();
  decompose_cmd->add_option("--bottom", bottom)->required();
  decompose_cmd->add_option("--top", top)->required();
  CLI::App* compose_cmd = biject->add_subcommand("compose", "marked path and parts -> interval");
  compose_cmd->add_option("--delta", delta)->required();
  compose_cmd->add_option("--marked", marked, "e.g. \"u u d* d\"")->required();
  compose_cmd->add_option("--part", parts, "part P_j, in order (repeatable; \"\" for empty)")->required();
  compose_cmd->add_flag("--json", json);

  auto add_transport = [&](CLI::App* cmd) {
    cmd->add_option("--from", from)->required();
    cmd->add_option("--to", to)->required();
    cmd->add_option("--bottom", bottom)->required();
    cmd->add_option("--top", top)->required();
    cmd->add_flag("--json", json);
  };
  CLI::App* biject_transport = biject->add_subcommand("transport", "move an interval between two posets");
  add_transport(biject_transport);
  CLI::App* transport_cmd = app.add_subcommand("transport", "move a linear interval from Tam^from to Tam^to");
  add_transport(transport_cmd);

  CLI::App* refine = app.add_subcommand("refine", "does Tam^from refine Tam^to");
  refine->add_option("--n", n)->required();
  refine->add_option("--from", from)->required();
  refine->add_option("--to", to)->required();
  refine->add_flag("--json", json);

  CLI::App* paths = app.add_subcommand("paths", "list Dyck paths (with h and ell under --delta)");
  paths->add_option("--n", n)->required();
  paths->add_option("--delta", delta);
  paths->add_flag("--json", json);

  CLI::App* trees = app.add_subcommand("trees", "list binary trees and their paths");
  trees->add_option("--n", n)->required();
  trees->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return cmd_count(n, n_max, deltas, formats, jobs);
    if (*verify) {
      verify_options.only = only;
      verify_options.seed = seed;
      verify_options.jobs = jobs;
      return cmd_verify(verify_options);
    }
    if (*hasse) return cmd_hasse(n, delta, formats);
    if (*series) return cmd_series(k, order);
    if (*decompose_cmd) return cmd_decompose(delta, bottom, top);
    if (*compose_cmd) return cmd_compose(delta, marked, parts, json);
    if (*biject_transport || *transport_cmd) return cmd_transport(from, to, bottom, top, json);
    if (*refine) return cmd_refine(n, from, to, json);
    if (*paths) return cmd_paths(n, delta, json);
    if (*trees) return cmd_trees(n, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_for(e);
  }
  return kUsage;
}
