#include "perfmat/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "perfmat/bounds.hpp"
#include "perfmat/counting.hpp"
#include "perfmat/errors.hpp"
#include "perfmat/harness.hpp"
#include "perfmat/report.hpp"

namespace perfmat::cli {

namespace {

constexpr int kForcedExhaustiveLimit = 11;
constexpr std::size_t kBatchSize = 4096;

struct Options {
  std::string format;  // "", "text" or "jsonl"
  bool force = false;
  std::string input_format;  // "", "g6" or "el"
};

bool text_mode(const Options& opt, const Streams& io) {
  if (opt.format.empty()) return io.out_is_terminal;
  return opt.format == "text";
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<Graph> parse_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

// A source is "-" (standard input), a path to an existing file, or a
// literal graph6 string.
std::vector<Graph> read_graphs(const std::string& source, const Options& opt,
                               std::istream& in) {
  std::string format = opt.input_format;
  auto parse_stream = [&](std::istream& s) {
    if (format == "el") {
      std::stringstream buf;
      buf << s.rdbuf();
      return std::vector<Graph>{parse_edge_list(buf.str())};
    }
    return parse_graph6_lines(s);
  };
  if (source == "-") return parse_stream(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    if (format.empty()) {
      format = std::filesystem::path(source).extension() == ".el" ? "el" : "g6";
    }
    std::ifstream file(source);
    if (!file) throw InputError("cannot open " + source);
    return parse_stream(file);
  }
  if (format == "el") throw InputError("no such edge-list file: " + source);
  return {parse_graph6(source)};
}

DegreeSequence parse_degrees(const std::string& text) {
  DegreeSequence d;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw InputError("bad degree '" + tok + "'");
    }
    if (used != tok.size() || value < 0) {
      throw InputError("bad degree '" + tok + "'");
    }
    d.degrees.push_back(value);
  }
  if (d.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InputError("more than " + std::to_string(kMaxVertices) + " degrees");
  }
  return d;
}

void guard(bool exceeded, const Options& opt, std::ostream& err,
           const std::string& what) {
  if (!exceeded) return;
  if (!opt.force) throw GuardError(what + " (use --force to override)");
  err << "warning: " << what << "; continuing because of --force\n";
}

void check_permanent_guard(const Graph& g, const Options& opt,
                           std::ostream& err) {
  guard(g.n() > kPermanentGuard, opt, err,
        "permanent limited to n <= " + std::to_string(kPermanentGuard) +
            ", got " + std::to_string(g.n()));
}

int cmd_count(const std::string& source, const Options& opt, Streams& io) {
  const bool text = text_mode(opt, io);
  for (const Graph& g : read_graphs(source, opt, io.in)) {
    check_permanent_guard(g, opt, io.err);
    const Count perfmat = count_perfect_matchings(g);
    const Count perm = permanent_adjacency(g);
    const Ordering gibson = compare_counts(perfmat * perfmat, perm);
    if (text) {
      io.out << to_graph6(g) << " n=" << g.n() << " perfmat=" << perfmat
             << " perm=" << perm << " gibson=" << to_string(gibson) << '\n';
    } else {
      nlohmann::ordered_json j;
      j["graph6"] = to_graph6(g);
      j["n"] = g.n();
      j["perfmat"] = perfmat.str();
      j["perm"] = perm.str();
      j["gibson"] = to_string(gibson);
      io.out << j.dump() << '\n';
    }
  }
  return kSuccess;
}

nlohmann::ordered_json describe_bounds(const DegreeSequence& d) {
  nlohmann::ordered_json j;
  j["degrees"] = d.degrees;
  const FactorialProductBound squared = matching_bound(d);
  j["matching_bound_squared"] = to_json(squared);
  // B itself is an integer exactly when B^2 is a perfect square integer.
  if (squared.integral()) {
    const Count b2 = squared.materialize();
    const Count root = boost::multiprecision::sqrt(b2);
    j["matching_bound"] = root * root == b2 ? nlohmann::ordered_json(root.str())
                                            : nlohmann::ordered_json(nullptr);
  } else {
    j["matching_bound"] = nullptr;
  }
  j["log_matching_bound"] = squared.zero ? nlohmann::ordered_json("-inf")
                                         : nlohmann::ordered_json(log_value(squared) / 2);
  j["bm_bound"] = to_json(bregman_minc_bound(d.degrees));
  j["equality_feasible"] = equality_feasible_degrees(d);
  return j;
}

void print_bound_text(const nlohmann::ordered_json& j, std::ostream& out) {
  out << "degrees:";
  for (int d : j["degrees"]) out << ' ' << d;
  out << '\n';
  auto print_one = [&](const char* label, const nlohmann::ordered_json& b) {
    out << label << ": ";
    if (b["zero"].get<bool>()) {
      out << "0 (zero entry)\n";
      return;
    }
    out << "prod";
    for (const auto& t : b["exponents"]) {
      out << ' ' << t[0].get<std::string>() << '^' << t[1].get<std::string>();
      if (t[2].get<std::string>() != "1") out << '/' << t[2].get<std::string>();
    }
    if (b.contains("value")) out << " = " << b["value"].get<std::string>();
    out << "  (ln = " << std::setprecision(10) << b["log_value"].get<double>()
        << ")\n";
  };
  print_one("B^2", j["matching_bound_squared"]);
  if (!j["matching_bound"].is_null()) {
    out << "B = " << j["matching_bound"].get<std::string>() << " exactly\n";
  }
  print_one("bregman-minc", j["bm_bound"]);
  out << "equality_feasible: " << (j["equality_feasible"].get<bool>() ? "yes" : "no")
      << '\n';
  if (j.contains("matching_cmp")) {
    out << "perfmat=" << j["perfmat"].get<std::string>()
        << " perm=" << j["perm"].get<std::string>()
        << " matching_cmp=" << j["matching_cmp"].get<std::string>()
        << " bm_cmp=" << j["bm_cmp"].get<std::string>() << '\n';
  }
}

int cmd_bound(const std::optional<std::string>& source,
              const std::optional<std::string>& degrees, const Options& opt,
              Streams& io) {
  if (source.has_value() == degrees.has_value()) {
    throw InputError("bound: give exactly one of a graph source or --degrees");
  }
  std::vector<nlohmann::ordered_json> reports;
  int code = kSuccess;
  if (degrees) {
    reports.push_back(describe_bounds(parse_degrees(*degrees)));
  } else {
    for (const Graph& g : read_graphs(*source, opt, io.in)) {
      check_permanent_guard(g, opt, io.err);
      const DegreeSequence d = degree_sequence(g);
      nlohmann::ordered_json j = describe_bounds(d);
      const Count perfmat = count_perfect_matchings(g);
      const Count perm = permanent_adjacency(g);
      const Ordering mcmp = compare_count_with_bound(perfmat, matching_bound(d), 2);
      const Ordering bcmp =
          compare_count_with_bound(perm, bregman_minc_bound(d.degrees), 1);
      if (mcmp == Ordering::Greater || bcmp == Ordering::Greater) code = kViolation;
      j["graph6"] = to_graph6(g);
      j["perfmat"] = perfmat.str();
      j["perm"] = perm.str();
      j["matching_cmp"] = to_string(mcmp);
      j["bm_cmp"] = to_string(bcmp);
      reports.push_back(std::move(j));
    }
  }
  for (const auto& j : reports) {
    if (text_mode(opt, io)) {
      print_bound_text(j, io.out);
    } else {
      io.out << j.dump() << '\n';
    }
  }
  return code;
}

void print_record_text(const VerificationRecord& r, std::ostream& out) {
  out << std::left << std::setw(12) << r.graph6 << " n=" << std::setw(3) << r.n
      << " perfmat=" << std::setw(8) << r.perfmat.str()
      << " perm=" << std::setw(10) << r.perm.str()
      << " gibson=" << std::setw(7) << to_string(r.gibson)
      << " matching=" << std::setw(7) << to_string(r.matching_cmp)
      << " bm=" << std::setw(7) << to_string(r.bm_cmp)
      << " structure=" << (r.structure ? "yes" : "no ")
      << (r.pass ? " pass" : " FAIL") << std::right << '\n';
}

struct VerifySource {
  std::optional<int> exhaustive;
  std::optional<long> random_count;
  int random_n = 8;
  double random_p = 0.5;
  std::uint64_t seed = 0;
  bool use_stdin = false;
  std::optional<std::string> input;
};

int cmd_verify(const VerifySource& src, int oracle_limit, int jobs,
               const Options& opt, Streams& io) {
  const int chosen = src.exhaustive.has_value() + src.random_count.has_value() +
                     src.use_stdin + src.input.has_value();
  if (chosen != 1) {
    throw InputError(
        "verify: choose exactly one of --exhaustive, --random, --stdin, --input");
  }
  if (jobs < 1) throw InputError("--jobs must be at least 1");
  if (oracle_limit < 0) throw InputError("--oracle-limit must be nonnegative");
  guard(oracle_limit > kCycleCoverLimit, opt, io.err,
        "oracle limited to n <= " + std::to_string(kCycleCoverLimit));
  const int oracle_cap = opt.force ? kMaxVertices : kCycleCoverLimit;
  const int effective_oracle = std::min(oracle_limit, oracle_cap);

  const bool text = text_mode(opt, io);
  RunSummary summary;
  std::vector<Graph> batch;
  batch.reserve(kBatchSize);
  auto flush = [&] {
    for (const Graph& g : batch) check_permanent_guard(g, opt, io.err);
    for (const auto& r : verify_graphs(batch, effective_oracle, jobs)) {
      summary.add(r);
      if (text) {
        print_record_text(r, io.out);
      } else {
        io.out << to_json(r).dump() << '\n';
      }
    }
    batch.clear();
  };
  auto push = [&](const Graph& g) {
    batch.push_back(g);
    if (batch.size() == kBatchSize) flush();
  };

  if (src.exhaustive) {
    const int n = *src.exhaustive;
    guard(n > kExhaustiveLimit, opt, io.err,
          "exhaustive enumeration limited to n <= " +
              std::to_string(kExhaustiveLimit) + ", got " + std::to_string(n));
    exhaustive_labeled_graphs(n, push,
                              opt.force ? kForcedExhaustiveLimit : kExhaustiveLimit);
  } else if (src.random_count) {
    if (*src.random_count < 0) throw InputError("--random must be nonnegative");
    if (src.random_n < 0 || src.random_n > kMaxVertices) {
      throw InputError("--n outside 0.." + std::to_string(kMaxVertices));
    }
    for (long i = 0; i < *src.random_count; ++i) {
      push(random_graph(src.random_n, src.random_p,
                        src.seed + static_cast<std::uint64_t>(i)));
    }
  } else {
    const std::string source = src.use_stdin ? "-" : *src.input;
    for (const Graph& g : read_graphs(source, opt, io.in)) push(g);
  }
  flush();

  if (text) {
    io.out << "graphs_processed: " << summary.graphs_processed << '\n'
           << "violations: " << summary.violations.size() << '\n'
           << "equality_cases: " << summary.equality_cases << '\n'
           << "gibson_equality_cases: " << summary.gibson_equality_cases << '\n'
           << "max_ratio_seen: " << std::setprecision(12) << summary.max_ratio_seen
           << '\n';
    if (src.random_count) io.out << "generator: " << kRandomGeneratorName << '\n';
  } else {
    nlohmann::ordered_json j = to_json(summary);
    if (src.random_count) j["generator"] = kRandomGeneratorName;
    io.out << nlohmann::ordered_json{{"summary", j}}.dump() << '\n';
  }
  return summary.violations.empty() ? kSuccess : kViolation;
}

int cmd_oracle(const std::string& source, const Options& opt, Streams& io) {
  const bool text = text_mode(opt, io);
  int code = kSuccess;
  for (const Graph& g : read_graphs(source, opt, io.in)) {
    guard(g.n() > kCycleCoverLimit, opt, io.err,
          "cycle-cover oracle limited to n <= " + std::to_string(kCycleCoverLimit) +
              ", got " + std::to_string(g.n()));
    const int limit = opt.force ? kMaxVertices : kCycleCoverLimit;
    const Count even = weighted_cycle_cover_count(g, CycleMode::even_only, limit).total;
    const Count all = weighted_cycle_cover_count(g, CycleMode::all_cycles, limit).total;
    const Count perfmat = count_perfect_matchings(g);
    const Count perm = permanent_adjacency(g);
    const Count squared = perfmat * perfmat;
    const bool pass = even == squared && all == perm;
    if (!pass) code = kViolation;
    if (text) {
      io.out << to_graph6(g) << " even=" << even << " perfmat^2=" << squared
             << " all=" << all << " perm=" << perm << (pass ? " pass" : " FAIL")
             << '\n';
    } else {
      nlohmann::ordered_json j;
      j["graph6"] = to_graph6(g);
      j["n"] = g.n();
      j["even"] = even.str();
      j["perfmat_squared"] = squared.str();
      j["all"] = all.str();
      j["perm"] = perm.str();
      j["pass"] = pass;
      io.out << j.dump() << '\n';
    }
  }
  return code;
}

int cmd_search(const std::string& degrees, const Options& opt, Streams& io) {
  const DegreeSequence d = parse_degrees(degrees);
  if (!erdos_gallai_realizable(d)) {
    throw InputError("degree sequence is not graphic");
  }
  guard(static_cast<int>(d.size()) > kRealizationLimit, opt, io.err,
        "realization search limited to n <= " + std::to_string(kRealizationLimit) +
            ", got " + std::to_string(d.size()));
  const ExtremalReport report =
      extremal_search(d, opt.force ? kMaxVertices : kRealizationLimit);
  if (text_mode(opt, io)) {
    io.out << "realizations: " << report.realizations << '\n'
           << "max perfmat: " << report.max_perfmat << '\n'
           << "witness: " << report.best_graph6 << '\n'
           << "matching_cmp: " << to_string(report.matching_cmp) << '\n'
           << "witness is union of K_{k,k}: "
           << (report.witness_structure ? "yes" : "no") << '\n'
           << "equality feasible: " << (report.equality_feasible ? "yes" : "no")
           << '\n';
  } else {
    io.out << to_json(report).dump() << '\n';
  }
  const bool bad = report.matching_cmp == Ordering::Greater ||
                   (report.equality_attained && !report.witness_structure &&
                    *std::ranges::min_element(d.degrees) >= 1);
  return bad ? kViolation : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Exact perfect-matching counts, permanents and degree bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "jsonl"}));
  app.add_flag("--force", opt.force, "Run past the default size guards");
  app.add_option("--input-format", opt.input_format, "Graph file format")
      ->check(CLI::IsMember({"g6", "el"}));

  std::string source;
  auto* count = app.add_subcommand("count", "Print perfmat, perm and the Gibson comparison");
  count->add_option("input", source, "graph6 string, file (.g6/.el) or -")->required();

  std::optional<std::string> bound_source;
  std::optional<std::string> bound_degrees;
  auto* bound = app.add_subcommand("bound", "Evaluate the degree and Bregman-Minc bounds");
  bound->add_option("input", bound_source, "graph6 string, file (.g6/.el) or -");
  bound->add_option("--degrees", bound_degrees, "Comma-separated degree list");

  VerifySource vsrc;
  int oracle_limit = kDefaultOracleLimit;
  int jobs = 1;
  auto* verify = app.add_subcommand("verify", "Run the full check chain over a graph family");
  verify->add_option("--exhaustive", vsrc.exhaustive, "All labeled graphs on n vertices");
  verify->add_option("--random", vsrc.random_count, "Number of random graphs");
  verify->add_option("--n", vsrc.random_n, "Vertex count for --random");
  verify->add_option("--p", vsrc.random_p, "Edge probability for --random");
  verify->add_option("--seed", vsrc.seed, "Seed for --random");
  verify->add_flag("--stdin", vsrc.use_stdin, "Read graph6 lines from standard input");
  verify->add_option("--input", vsrc.input, "Read graphs from a file");
  verify->add_option("--oracle-limit", oracle_limit, "Run cycle-cover oracles up to this n");
  verify->add_option("--jobs", jobs, "Worker threads");

  auto* oracle = app.add_subcommand("oracle", "Check the cycle-cover identities");
  oracle->add_option("input", source, "graph6 string, file (.g6/.el) or -")->required();

  std::string search_degrees;
  auto* search = app.add_subcommand("search", "Maximise perfmat over realizations of a degree sequence");
  search->add_option("--degrees", search_degrees, "Comma-separated degree list")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, io.out, io.err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (count->parsed()) return cmd_count(source, opt, io);
    if (bound->parsed()) return cmd_bound(bound_source, bound_degrees, opt, io);
    if (verify->parsed()) return cmd_verify(vsrc, oracle_limit, jobs, opt, io);
    if (oracle->parsed()) return cmd_oracle(source, opt, io);
    if (search->parsed()) return cmd_search(search_degrees, opt, io);
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GuardError& e) {
    io.err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  }
  return kUsageError;
}

}  // namespace perfmat::cli
