#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pmd/solver.hpp"

namespace pmd {

/// {"value": "<L>", "levels": [{"depth", "a", "b", "c_num", "c_den",
///  "branch", "L", "mu", "R"}]}. Integers are decimal strings; mu and R are
/// null on base-case levels.
nlohmann::json trace_to_json(const SolveResult& result);

/// Parses the document produced by trace_to_json.
SolveResult trace_from_json(const nlohmann::json& doc);

// ---------------------------------------------------------------------------
// Deterministic randomness
//
// The engine is std::mt19937_64 seeded with the 64-bit seed directly; its
// output sequence is fixed by the standard. Ranges are drawn by rejection
// sampling on raw engine output rather than std::uniform_int_distribution,
// whose algorithm differs between standard libraries.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi]; requires lo <= hi.
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Batch

struct BatchRecord {
  std::size_t line_number = 0;
  std::string fields;  // "a,b,c" as echoed in the output row
  std::variant<Integer, std::string> result;  // L or error message
};

struct BatchSummary {
  std::size_t rows = 0;
  std::size_t errors = 0;
};

/// Evaluates one CSV line "a,b,c". Comment and blank lines return nullopt.
std::optional<BatchRecord> evaluate_batch_line(const std::string& line, std::size_t line_number);

/// Reads "a,b,c" lines, writes "a,b,c,L" or "a,b,c,ERROR:<message>" rows in
/// input order.
BatchSummary run_batch(std::istream& in, std::ostream& out);

// ---------------------------------------------------------------------------
// Differential fuzzing

struct FuzzConfig {
  std::uint64_t seed = 42;
  std::uint64_t count = 1000;
  std::uint64_t max_b = 500;
  std::uint64_t max_c_num = 12;
  std::uint64_t max_c_den = 12;
};

/// Throws std::invalid_argument for count = 0, max_b < 2, or zero bounds.
void validate(const FuzzConfig& config);

/// Draws b in [2, max_b], then a in [1, b-1], then n in [1, max_c_num] and
/// d in [1, max_c_den], in that order, giving c = n/d.
class FuzzStream {
 public:
  explicit FuzzStream(const FuzzConfig& config);
  Instance next();

 private:
  FuzzConfig config_;
  Rng rng_;
};

struct FuzzFailure {
  std::uint64_t index;
  Instance instance;
  std::string reason;
};

struct FuzzOutcome {
  std::uint64_t checked = 0;
  std::optional<FuzzFailure> failure;
};

/// Checks solve == solve_naive and an empty verify_trace for each instance;
/// stops at the first failure.
FuzzOutcome run_fuzz(const FuzzConfig& config);

// ---------------------------------------------------------------------------
// Benchmark

struct BenchRow {
  int exponent = 0;
  Instance instance;
  std::size_t depth = 0;
  std::size_t euclid_chain = 0;
  Integer value;
  double solve_us = 0.0;
  std::optional<double> naive_us;  // absent when b exceeds the naive cutoff
  std::optional<bool> naive_match;
};

inline constexpr std::uint64_t kNaiveBenchCutoff = 10'000'000;

/// For each k in [4, max_exponent], `per_exponent` instances with
/// b in [10^k, 10^k + 10^(k-1)], a in [1, b-1] and c = n/d with n, d in [1, 12].
/// Throws std::invalid_argument unless 4 <= max_exponent <= 18.
std::vector<BenchRow> run_bench(int max_exponent, std::size_t per_exponent, std::uint64_t seed);

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace pmd
