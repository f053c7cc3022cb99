// pmdineq: least solutions of (a·x mod b) <= c·x and the semigroup
// invariants built on them.
//
// Exit codes: 0 success, 1 oracle/property violation, 2 usage or input error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmd/harness.hpp"
#include "pmd/rational.hpp"
#include "pmd/semigroup.hpp"
#include "pmd/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  bool trace = false;
  bool oracle = false;
  bool json = false;
};

// Prints a value, or a JSON document carrying it and optionally the trace of
// the solve call that produced it.
void emit(const GlobalFlags& flags, const pmd::Integer& value, const pmd::SolveResult* solved,
          bool value_is_solve) {
  if (flags.trace && solved != nullptr) {
    nlohmann::json doc = pmd::trace_to_json(*solved);
    if (!value_is_solve) {
      doc = {{"value", value.get_str()}, {"solve", std::move(doc)}};
    }
    std::cout << doc.dump(2) << '\n';
    return;
  }
  if (flags.json) {
    std::cout << nlohmann::json{{"value", value.get_str()}}.dump() << '\n';
    return;
  }
  std::cout << value.get_str() << '\n';
}

int oracle_mismatch(const std::string& what, const pmd::Integer& fast, const pmd::Integer& naive) {
  std::cerr << "oracle mismatch for " << what << ": formula " << fast.get_str() << ", scan "
            << naive.get_str() << '\n';
  return kExitViolation;
}

int cmd_solve(const GlobalFlags& flags, const std::string& a, const std::string& b, const std::string& c) {
  pmd::Instance inst{pmd::parse_integer(a), pmd::parse_integer(b), pmd::parse_rational(c)};
  pmd::SolveResult result = pmd::solve(inst);
  if (flags.oracle) {
    pmd::Integer naive = pmd::solve_naive(inst);
    if (naive != result.value) {
      return oracle_mismatch(pmd::to_string(inst), result.value, naive);
    }
    if (auto violations = pmd::verify_trace(result); !violations.empty()) {
      for (const auto& v : violations) {
        std::cerr << "trace violation at depth " << v.depth << " [" << v.check << "]: " << v.detail << '\n';
      }
      return kExitViolation;
    }
  }
  emit(flags, result.value, &result, true);
  return kExitOk;
}

int cmd_quotient(const GlobalFlags& flags, const std::string& a1, const std::string& a2, const std::string& d) {
  pmd::QuotientQuery query(pmd::TwoGenSemigroup(pmd::parse_integer(a1), pmd::parse_integer(a2)),
                           pmd::parse_integer(d));
  pmd::SolveResult result = pmd::solve(query.instance());
  if (flags.oracle) {
    pmd::Integer naive = pmd::quotient_multiplicity_naive(query);
    if (naive != result.value) {
      return oracle_mismatch("quotient <" + a1 + "," + a2 + ">/" + d, result.value, naive);
    }
  }
  emit(flags, result.value, &result, true);
  return kExitOk;
}

int cmd_interval(const GlobalFlags& flags, const std::string& p, const std::string& q) {
  pmd::RationalInterval iv(pmd::parse_rational(p), pmd::parse_rational(q));
  pmd::SolveResult result = pmd::solve(iv.instance());
  if (flags.oracle) {
    pmd::Integer naive = pmd::interval_multiplicity_naive(iv);
    if (naive != result.value) {
      return oracle_mismatch("interval [" + p + ", " + q + "]", result.value, naive);
    }
  }
  emit(flags, result.value, &result, true);
  return kExitOk;
}

int cmd_frobenius(const GlobalFlags& flags, const std::string& a_text, const std::string& b_text) {
  pmd::Integer a = pmd::parse_integer(a_text);
  pmd::Integer b = pmd::parse_integer(b_text);
  pmd::SolveResult result = pmd::solve(pmd::frobenius_interval(a, b).instance());
  pmd::Integer value = b - result.value;
  if (flags.oracle) {
    pmd::Integer naive = pmd::frobenius_naive(a, b);
    if (naive != value) {
      return oracle_mismatch("F(" + a_text + "," + b_text + ",1)", value, naive);
    }
  }
  emit(flags, value, &result, false);
  return kExitOk;
}

int cmd_batch(const std::string& input_path, const std::string& output_path) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "cannot read " << input_path << '\n';
    return kExitUsage;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "cannot write " << output_path << '\n';
    return kExitUsage;
  }
  pmd::BatchSummary summary = pmd::run_batch(in, out);
  std::cerr << "rows=" << summary.rows << " ok=" << summary.rows - summary.errors
            << " errors=" << summary.errors << '\n';
  return summary.errors == 0 ? kExitOk : kExitUsage;
}

int cmd_fuzz(const GlobalFlags& flags, const pmd::FuzzConfig& config, bool emit_instances) {
  pmd::validate(config);
  if (emit_instances) {
    pmd::FuzzStream stream(config);
    for (std::uint64_t i = 0; i < config.count; ++i) {
      pmd::Instance inst = stream.next();
      std::cout << inst.a.get_str() << ',' << inst.b.get_str() << ',' << inst.c.to_string() << '\n';
    }
    return kExitOk;
  }
  pmd::FuzzOutcome outcome = pmd::run_fuzz(config);
  if (outcome.failure) {
    const auto& f = *outcome.failure;
    std::cout << "FAIL instance #" << f.index << " " << pmd::to_string(f.instance) << ": " << f.reason << '\n';
    std::cout << "reproduce: pmdineq solve " << f.instance.a.get_str() << ' ' << f.instance.b.get_str() << ' '
              << f.instance.c.to_string() << " --oracle\n";
    return kExitViolation;
  }
  if (flags.json) {
    std::cout << nlohmann::json{{"checked", outcome.checked}, {"seed", config.seed}}.dump() << '\n';
  } else {
    std::cout << outcome.checked << " OK\n";
  }
  return kExitOk;
}

int cmd_bench(int max_exponent, std::size_t per_exponent, std::uint64_t seed) {
  auto rows = pmd::run_bench(max_exponent, per_exponent, seed);
  pmd::write_bench_csv(rows, std::cout);
  for (const auto& row : rows) {
    if (row.depth > row.euclid_chain || (row.naive_match && !*row.naive_match)) {
      std::cerr << "bench invariant violated for " << pmd::to_string(row.instance) << '\n';
      return kExitViolation;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Least solutions of proportionally modular Diophantine inequalities (a*x mod b) <= c*x"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--trace", flags.trace, "Print the JSON recursion trace of the underlying solve");
  app.add_flag("--oracle", flags.oracle, "Cross-check against the brute-force scan; exit 1 on mismatch");
  app.add_flag("--json", flags.json, "Print results as JSON");

  std::string x1;
  std::string x2;
  std::string x3;

  auto* solve = app.add_subcommand("solve", "L(a,b,c) = least x >= 1 with (a*x mod b) <= c*x");
  solve->add_option("a", x1, "factor")->required();
  solve->add_option("b", x2, "modulus")->required();
  solve->add_option("c", x3, "proportion, n or n/d")->required();

  auto* quotient = app.add_subcommand("quotient", "multiplicity of <a1,a2>/d");
  quotient->add_option("a1", x1)->required();
  quotient->add_option("a2", x2)->required();
  quotient->add_option("d", x3)->required();

  auto* interval = app.add_subcommand("interval", "multiplicity of the semigroup generated by [p,q]");
  interval->add_option("p", x1)->required();
  interval->add_option("q", x2)->required();

  auto* frobenius = app.add_subcommand("frobenius", "Frobenius number of S(a,b,1), 2 <= a < b");
  frobenius->add_option("a", x1)->required();
  frobenius->add_option("b", x2)->required();

  auto* batch = app.add_subcommand("batch", "solve every a,b,c line of a CSV file");
  batch->add_option("input", x1)->required();
  batch->add_option("output", x2)->required();

  pmd::FuzzConfig fuzz_config;
  bool emit_instances = false;
  auto* fuzz = app.add_subcommand("fuzz", "seeded differential test of solve against the scan oracle");
  fuzz->add_option("--seed", fuzz_config.seed)->capture_default_str();
  fuzz->add_option("--count", fuzz_config.count)->capture_default_str();
  fuzz->add_option("--max-b", fuzz_config.max_b)->capture_default_str();
  fuzz->add_option("--max-c-num", fuzz_config.max_c_num)->capture_default_str();
  fuzz->add_option("--max-c-den", fuzz_config.max_c_den)->capture_default_str();
  fuzz->add_flag("--emit", emit_instances, "print the instance stream instead of checking it");

  int max_exponent = 18;
  std::size_t per_exponent = 5;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "recursion depth and timing versus the scan, CSV on stdout");
  bench->add_option("--max-exp", max_exponent, "largest k with b near 10^k, in [4, 18]")->capture_default_str();
  bench->add_option("--per-exp", per_exponent)->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(flags, x1, x2, x3);
    if (*quotient) return cmd_quotient(flags, x1, x2, x3);
    if (*interval) return cmd_interval(flags, x1, x2);
    if (*frobenius) return cmd_frobenius(flags, x1, x2);
    if (*batch) return cmd_batch(x1, x2);
    if (*fuzz) return cmd_fuzz(flags, fuzz_config, emit_instances);
    if (*bench) return cmd_bench(max_exponent, per_exponent, bench_seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
