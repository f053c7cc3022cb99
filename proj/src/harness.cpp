#include "pmd/harness.hpp"

#include <chrono>
#include <exception>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pmd {

using nlohmann::json;

namespace {

json optional_integer(const std::optional<Integer>& value) {
  if (!value) {
    return nullptr;
  }
  return value->get_str();
}

Integer integer_field(const json& node, const char* key) {
  return parse_integer(node.at(key).get<std::string>());
}

std::optional<Integer> optional_integer_field(const json& node, const char* key) {
  const json& field = node.at(key);
  if (field.is_null()) {
    return std::nullopt;
  }
  return parse_integer(field.get<std::string>());
}

Branch parse_branch(const std::string& name) {
  for (Branch branch : {Branch::CGeA, Branch::ADividesB, Branch::Recurse}) {
    if (to_string(branch) == name) {
      return branch;
    }
  }
  throw std::invalid_argument("unknown branch '" + name + "'");
}

std::string trim(std::string_view text) {
  const char* space = " \t\r\n";
  auto first = text.find_first_not_of(space);
  if (first == std::string_view::npos) {
    return {};
  }
  auto last = text.find_last_not_of(space);
  return std::string(text.substr(first, last - first + 1));
}

std::uint64_t pow10(int exponent) {
  std::uint64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    value *= 10;
  }
  return value;
}

Integer from_u64(std::uint64_t value) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof value, 0, 0, &value);
  return out;
}

}  // namespace

json trace_to_json(const SolveResult& result) {
  json levels = json::array();
  for (const TraceLevel& lv : result.trace) {
    levels.push_back({
        {"depth", lv.depth},
        {"a", lv.a.get_str()},
        {"b", lv.b.get_str()},
        {"c_num", lv.c.num().get_str()},
        {"c_den", lv.c.den().get_str()},
        {"branch", std::string(to_string(lv.branch))},
        {"L", lv.value.get_str()},
        {"mu", optional_integer(lv.mu)},
        {"R", optional_integer(lv.r)},
    });
  }
  return {{"value", result.value.get_str()}, {"levels", std::move(levels)}};
}

SolveResult trace_from_json(const json& doc) {
  SolveResult result;
  result.value = integer_field(doc, "value");
  for (const json& node : doc.at("levels")) {
    TraceLevel lv;
    lv.depth = node.at("depth").get<std::size_t>();
    lv.a = integer_field(node, "a");
    lv.b = integer_field(node, "b");
    lv.c = make_rational(integer_field(node, "c_num"), integer_field(node, "c_den"));
    lv.branch = parse_branch(node.at("branch").get<std::string>());
    lv.value = integer_field(node, "L");
    lv.mu = optional_integer_field(node, "mu");
    lv.r = optional_integer_field(node, "R");
    result.trace.push_back(std::move(lv));
  }
  return result;
}

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) {
    throw std::invalid_argument("empty range");
  }
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) {
    return engine_();
  }
  // Reject the top 2^64 mod span outputs so every residue is equally likely.
  const std::uint64_t excess = (kMax % span + 1) % span;
  for (;;) {
    std::uint64_t x = engine_();
    if (excess == 0 || x <= kMax - excess) {
      return lo + x % span;
    }
  }
}

std::optional<BatchRecord> evaluate_batch_line(const std::string& line, std::size_t line_number) {
  std::string text = trim(line);
  if (text.empty() || text.front() == '#') {
    return std::nullopt;
  }

  BatchRecord record;
  record.line_number = line_number;

  std::vector<std::string> fields;
  std::stringstream ss(text);
  for (std::string field; std::getline(ss, field, ',');) {
    fields.push_back(trim(field));
  }
  if (text.back() == ',') {
    fields.emplace_back();
  }
  if (fields.size() != 3) {
    record.fields = text;
    record.result = std::string("expected three fields a,b,c");
    return record;
  }
  record.fields = fields[0] + "," + fields[1] + "," + fields[2];

  try {
    Instance inst{parse_integer(fields[0]), parse_integer(fields[1]), parse_rational(fields[2])};
    record.result = solve(inst).value;
  } catch (const std::exception& e) {
    record.result = std::string(e.what());
  }
  return record;
}

BatchSummary run_batch(std::istream& in, std::ostream& out) {
  BatchSummary summary;
  std::size_t line_number = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_number;
    auto record = evaluate_batch_line(line, line_number);
    if (!record) {
      continue;
    }
    ++summary.rows;
    out << record->fields << ',';
    if (const auto* value = std::get_if<Integer>(&record->result)) {
      out << value->get_str();
    } else {
      ++summary.errors;
      out << "ERROR:" << std::get<std::string>(record->result);
    }
    out << '\n';
  }
  return summary;
}

void validate(const FuzzConfig& config) {
  if (config.count == 0) {
    throw std::invalid_argument("fuzz count must be positive");
  }
  if (config.max_b < 2) {
    throw std::invalid_argument("fuzz max_b must be at least 2");
  }
  if (config.max_c_num == 0 || config.max_c_den == 0) {
    throw std::invalid_argument("fuzz proportion bounds must be positive");
  }
}

FuzzStream::FuzzStream(const FuzzConfig& config) : config_(config), rng_(config.seed) {
  validate(config_);
}

Instance FuzzStream::next() {
  std::uint64_t b = rng_.uniform(2, config_.max_b);
  std::uint64_t a = rng_.uniform(1, b - 1);
  std::uint64_t n = rng_.uniform(1, config_.max_c_num);
  std::uint64_t d = rng_.uniform(1, config_.max_c_den);
  return {from_u64(a), from_u64(b), make_rational(from_u64(n), from_u64(d))};
}

FuzzOutcome run_fuzz(const FuzzConfig& config) {
  FuzzStream stream(config);
  FuzzOutcome outcome;
  for (std::uint64_t i = 0; i < config.count; ++i) {
    Instance inst = stream.next();
    SolveResult result = solve(inst);
    Integer naive = solve_naive(inst);
    ++outcome.checked;
    if (result.value != naive) {
      outcome.failure = FuzzFailure{i, inst,
                                    "solve returned " + result.value.get_str() + ", scan returned " +
                                        naive.get_str()};
      return outcome;
    }
    auto violations = verify_trace(result);
    if (!violations.empty()) {
      const auto& v = violations.front();
      outcome.failure = FuzzFailure{i, inst,
                                    "trace check '" + v.check + "' failed at depth " +
                                        std::to_string(v.depth) + ": " + v.detail};
      return outcome;
    }
  }
  return outcome;
}

std::vector<BenchRow> run_bench(int max_exponent, std::size_t per_exponent, std::uint64_t seed) {
  if (max_exponent < 4 || max_exponent > 18) {
    throw std::invalid_argument("bench exponent must be in [4, 18]");
  }
  using clock = std::chrono::steady_clock;
  auto micros = [](clock::duration span) {
    return std::chrono::duration<double, std::micro>(span).count();
  };

  Rng rng(seed);
  std::vector<BenchRow> rows;
  for (int k = 4; k <= max_exponent; ++k) {
    const std::uint64_t base = pow10(k);
    for (std::size_t i = 0; i < per_exponent; ++i) {
      std::uint64_t b = rng.uniform(base, base + base / 10);
      std::uint64_t a = rng.uniform(1, b - 1);
      std::uint64_t n = rng.uniform(1, 12);
      std::uint64_t d = rng.uniform(1, 12);

      BenchRow row;
      row.exponent = k;
      row.instance = {from_u64(a), from_u64(b), make_rational(from_u64(n), from_u64(d))};
      row.euclid_chain = euclid_chain_length(row.instance.b, row.instance.a);

      auto start = clock::now();
      SolveResult result = solve(row.instance);
      row.solve_us = micros(clock::now() - start);
      row.depth = result.depth();
      row.value = result.value;

      if (b <= kNaiveBenchCutoff) {
        start = clock::now();
        Integer naive = solve_naive(row.instance);
        row.naive_us = micros(clock::now() - start);
        row.naive_match = naive == result.value;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "exponent,a,b,c,depth,euclid_chain,value,solve_us,naive_us,naive_match\n";
  for (const BenchRow& row : rows) {
    out << row.exponent << ',' << row.instance.a.get_str() << ',' << row.instance.b.get_str() << ','
        << row.instance.c.to_string() << ',' << row.depth << ',' << row.euclid_chain << ','
        << row.value.get_str() << ',' << row.solve_us << ',';
    if (row.naive_us) {
      out << *row.naive_us << ',' << (*row.naive_match ? "true" : "false");
    } else {
      out << "skipped,skipped";
    }
    out << '\n';
  }
}

}  // namespace pmd
