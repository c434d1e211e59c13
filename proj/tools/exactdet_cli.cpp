// exactdet: exact determinants by Dodgson condensation, binomial determinant
// identities, and a cross-strategy benchmark harness.

#include "exactdet/determinant.hpp"
#include "exactdet/macmahon.hpp"
#include "exactdet/random_matrix.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace exactdet;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStrictSingular = 3;

std::string fnv1a_digest(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (const char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string iso_timestamp() {
  const std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

double to_ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

const std::map<std::string, Strategy> kStrategyNames = {
    {"condensation-strict", Strategy::CondensationStrict},
    {"condensation-fallback", Strategy::CondensationWithBareissFallback},
    {"bareiss", Strategy::Bareiss},
    {"laplace", Strategy::Laplace},
};

struct OutputSink {
  std::string format = "table";
  std::string out_path;

  void emit(const std::string &table, const json &doc) const {
    const std::string text = format == "structured" ? doc.dump(2) + "\n" : table;
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << text;
    }
  }
};

json record(const std::string &command, const std::string &digest, json result) {
  return json{{"tool", "exactdet"},
              {"command", command},
              {"input_digest", digest},
              {"timestamp", iso_timestamp()},
              {"result", std::move(result)}};
}

json fallback_events_json(const DetResult &r) {
  json evs = json::array();
  for (const auto &e : r.fallback_events)
    evs.push_back({{"layer", e.order}, {"row", e.row}, {"col", e.col}});
  return evs;
}

json report_json(const std::string &kind, const VerificationReport &rep) {
  json j{{"kind", kind},
         {"grid", rep.grid},
         {"cases_checked", rep.cases_checked},
         {"ok", rep.ok()},
         {"elapsed_ms", to_ms(rep.elapsed)}};
  if (rep.counterexample) {
    const auto &c = *rep.counterexample;
    j["counterexample"] = {{"n", c.params.n}, {"a", c.params.a}, {"b", c.params.b},
                           {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}};
  }
  return j;
}

std::string report_table(const VerificationReport &rep) {
  std::ostringstream t;
  t << "grid:          " << rep.grid << "\n"
    << "cases checked: " << rep.cases_checked << "\n"
    << "verdict:       " << (rep.ok() ? "ok" : "COUNTEREXAMPLE") << "\n"
    << "elapsed_ms:    " << to_ms(rep.elapsed) << "\n";
  if (rep.counterexample) {
    const auto &c = *rep.counterexample;
    t << "counterexample: n=" << c.params.n << " a=" << c.params.a
      << " b=" << c.params.b << " lhs=" << c.lhs << " rhs=" << c.rhs << "\n";
  }
  return t.str();
}

int run_det(const std::string &input, Strategy strategy, int threads,
            const OutputSink &sink) {
  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(input);
    if (!f) {
      std::cerr << "error: cannot open '" << input << "'\n";
      return kExitUsage;
    }
    text.assign(std::istreambuf_iterator<char>(f), {});
  }

  RationalMatrix m;
  try {
    m = parse_matrix(text);
  } catch (const MatrixFormatError &e) {
    std::cerr << "error: bad matrix input: " << e.what() << "\n";
    return kExitUsage;
  }

  DetResult r;
  try {
    r = det(m, strategy, threads);
  } catch (const ZeroInteriorPivot &z) {
    std::cerr << "error: " << z.what() << " (strict condensation refuses to continue)\n";
    return kExitStrictSingular;
  } catch (const std::length_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream table;
  table << "value:      " << r.value << "\n"
        << "algorithm:  " << to_string(r.algorithm) << "\n"
        << "fallbacks:  " << r.fallback_events.size();
  for (const auto &e : r.fallback_events)
    table << " [layer r=" << e.order << " at (" << e.row << "," << e.col << ")]";
  table << "\nelapsed_ms: " << to_ms(r.elapsed) << "\n";

  sink.emit(table.str(),
            record("det", fnv1a_digest(text),
                   json{{"value", r.value.str()},
                        {"algorithm", to_string(r.algorithm)},
                        {"fallback_events", fallback_events_json(r)},
                        {"elapsed_ms", to_ms(r.elapsed)}}));
  return kExitOk;
}

int run_macmahon(long long n, long long a, long long b, const OutputSink &sink) {
  const MacMahonParams p{n, a, b};
  try {
    p.validate();
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const Rational closed = macmahon_closed_form(p);
  const Rational direct = determinant_evaluator(p);
  const bool equal = closed == direct;

  std::ostringstream table;
  table << "closed form: " << closed << "\n"
        << "determinant: " << direct << "\n"
        << "verdict:     " << (equal ? "equal" : "UNEQUAL") << "\n";

  const std::string key =
      "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
  sink.emit(table.str(),
            record("macmahon", fnv1a_digest(key),
                   json{{"params", {{"n", n}, {"a", a}, {"b", b}}},
                        {"closed_form", closed.str()},
                        {"determinant", direct.str()},
                        {"equal", equal}}));
  return equal ? kExitOk : kExitCounterexample;
}

int run_verify(const std::string &kind, long long n_max, long long a_max,
               long long b_max, const OutputSink &sink) {
  VerificationReport rep;
  try {
    if (kind == "identity")
      rep = verify_identity(n_max, a_max, b_max);
    else if (kind == "recurrence-L")
      rep = verify_recurrence(n_max, a_max, RecurrenceSide::Determinant, b_max);
    else if (kind == "recurrence-R")
      rep = verify_recurrence(n_max, a_max, RecurrenceSide::ClosedForm, b_max);
    else if (kind == "bhp")
      rep = verify_bhp(n_max);
    else {
      std::cerr << "error: unknown verification kind '" << kind << "'\n";
      return kExitUsage;
    }
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string key = kind + " n_max=" + std::to_string(n_max) +
                          " a_max=" + std::to_string(a_max) +
                          " b_max=" + std::to_string(b_max);
  sink.emit(report_table(rep), record("verify", fnv1a_digest(key), report_json(kind, rep)));
  return rep.ok() ? kExitOk : kExitCounterexample;
}

int run_bench(const std::vector<long long> &sizes, long long entry_min,
              long long entry_max, std::uint64_t seed,
              const std::vector<std::string> &strategy_names, int repetitions,
              int threads, const OutputSink &sink) {
  if (repetitions < 1) {
    std::cerr << "error: repetitions must be >= 1\n";
    return kExitUsage;
  }
  if (sizes.empty()) {
    std::cerr << "error: at least one size is required\n";
    return kExitUsage;
  }
  if (entry_max < entry_min) {
    std::cerr << "error: empty entry range\n";
    return kExitUsage;
  }
  std::vector<Strategy> strategies;
  for (const auto &name : strategy_names) {
    const auto it = kStrategyNames.find(name);
    if (it == kStrategyNames.end()) {
      std::cerr << "error: unknown strategy '" << name << "'\n";
      return kExitUsage;
    }
    strategies.push_back(it->second);
  }

  json rows = json::array();
  json values = json::array();
  std::ostringstream table;
  table << "size strategy reps median_ms fallbacks\n";
  bool agreement = true;

  for (const long long n : sizes) {
    // One matrix stream per size: adding sizes never perturbs earlier ones.
    RandomMatrixSource src(seed ^ static_cast<std::uint64_t>(n));
    std::vector<RationalMatrix> instances;
    for (int rep = 0; rep < repetitions; ++rep)
      instances.push_back(src.next(static_cast<Index>(n), entry_min, entry_max));

    std::vector<Rational> reference(repetitions);
    for (std::size_t si = 0; si < strategies.size(); ++si) {
      const Strategy strat = strategies[si];
      std::vector<double> times;
      std::size_t fallbacks = 0;
      for (int rep = 0; rep < repetitions; ++rep) {
        const auto r = det(instances[rep], strat, threads);
        times.push_back(to_ms(r.elapsed));
        fallbacks += r.fallback_events.size();
        if (si == 0) {
          reference[rep] = r.value;
          values.push_back({{"size", n}, {"rep", rep}, {"value", r.value.str()}});
          table << "# value size=" << n << " rep=" << rep << " " << r.value << "\n";
        } else if (!(r.value == reference[rep])) {
          agreement = false;
          std::cerr << "error: strategy disagreement at size " << n << " rep " << rep
                    << ": " << to_string(strat) << " gave " << r.value << ", "
                    << to_string(strategies[0]) << " gave " << reference[rep] << "\n";
        }
      }
      std::sort(times.begin(), times.end());
      const double median = times[times.size() / 2];
      rows.push_back({{"size", n},
                      {"strategy", to_string(strat)},
                      {"repetitions", repetitions},
                      {"median_ms", median},
                      {"fallback_count", fallbacks}});
      table << n << " " << to_string(strat) << " " << repetitions << " " << median
            << " " << fallbacks << "\n";
    }
  }

  std::ostringstream key;
  key << "seed=" << seed << " range=[" << entry_min << "," << entry_max << "] reps="
      << repetitions;
  for (const long long n : sizes)
    key << " n=" << n;
  json cfg{{"sizes", sizes},
           {"entry_range", {entry_min, entry_max}},
           {"seed", seed},
           {"prng", "mt19937_64, entry = lo + (next() mod span), row-major"},
           {"strategies", strategy_names},
           {"repetitions", repetitions},
           {"threads", threads}};
  sink.emit(table.str(),
            record("bench", fnv1a_digest(key.str()),
                   json{{"config", std::move(cfg)},
                        {"rows", std::move(rows)},
                        {"values", std::move(values)},
                        {"agreement", agreement}}));
  return agreement ? kExitOk : kExitCounterexample;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact determinants: Dodgson condensation, Bareiss and Laplace "
               "oracles, and MacMahon binomial determinant identities"};
  app.require_subcommand(1);
  app.fallthrough();

  OutputSink sink;
  app.add_option("--format", sink.format, "Output format")
      ->check(CLI::IsMember({"table", "structured"}))
      ->capture_default_str();
  app.add_option("--out", sink.out_path, "Also write the output document to this path");
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for condensation layers")
      ->check(CLI::Range(1, 256));

  auto *det_cmd = app.add_subcommand("det", "Determinant of a matrix (file or stdin)");
  std::string det_input;
  std::string det_strategy = "condensation-fallback";
  det_cmd->add_option("input", det_input, "Matrix file path ('-' or omitted: stdin)");
  det_cmd->add_option("--strategy", det_strategy, "Evaluation strategy")
      ->check(CLI::IsMember({"condensation-strict", "condensation-fallback", "bareiss",
                             "laplace"}))
      ->capture_default_str();

  auto *mac_cmd =
      app.add_subcommand("macmahon", "Closed form vs determinant for (n, a, b)");
  long long mn = 0, ma = 0, mb = 0;
  mac_cmd->add_option("n", mn, "Matrix order")->required();
  mac_cmd->add_option("a", ma, "Row shift a")->required();
  mac_cmd->add_option("b", mb, "Column shift b")->required();

  auto *ver_cmd = app.add_subcommand("verify", "Grid verification of the identities");
  std::string kind;
  long long n_max = 4, a_max = 6, b_max = -1;
  ver_cmd->add_option("kind", kind, "identity | recurrence-L | recurrence-R | bhp")
      ->required();
  ver_cmd->add_option("--n-max", n_max, "Largest matrix order")->capture_default_str();
  ver_cmd->add_option("--a-max", a_max, "Largest a")->capture_default_str();
  ver_cmd->add_option("--b-max", b_max, "Cap on b (default: a-max)");

  auto *bench_cmd = app.add_subcommand("bench", "Cross-strategy timing on random matrices");
  std::vector<long long> sizes{20, 40, 80};
  long long entry_min = -9, entry_max = 9;
  std::uint64_t seed = 1;
  std::vector<std::string> strategy_names{"condensation-fallback", "bareiss"};
  int repetitions = 3;
  bench_cmd->add_option("--sizes", sizes, "Matrix orders")->capture_default_str();
  bench_cmd->add_option("--entry-min", entry_min, "Smallest entry")->capture_default_str();
  bench_cmd->add_option("--entry-max", entry_max, "Largest entry")->capture_default_str();
  bench_cmd->add_option("--seed", seed, "PRNG seed (mt19937_64)")->capture_default_str();
  bench_cmd->add_option("--strategies", strategy_names, "Strategies to compare")
      ->capture_default_str();
  bench_cmd->add_option("--reps", repetitions, "Instances per size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (det_cmd->parsed())
      return run_det(det_input, kStrategyNames.at(det_strategy), threads, sink);
    if (mac_cmd->parsed())
      return run_macmahon(mn, ma, mb, sink);
    if (ver_cmd->parsed())
      return run_verify(kind, n_max, a_max, b_max, sink);
    if (bench_cmd->parsed())
      return run_bench(sizes, entry_min, entry_max, seed, strategy_names, repetitions,
                       threads, sink);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
