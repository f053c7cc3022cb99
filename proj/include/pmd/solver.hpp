#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pmd/rational.hpp"

namespace pmd {

/// One inequality (a·x mod b) <= c·x with factor a, modulus b and
/// proportion c.
struct Instance {
  Integer a;
  Integer b;
  Rational c;

  friend bool operator==(const Instance&, const Instance&) = default;
};

std::string to_string(const Instance& inst);

/// Throws std::invalid_argument unless a >= 0, b >= 1 and c > 0.
void validate(const Instance& inst);

/// How a recursion level produced its value.
enum class Branch {
  CGeA,        // c >= a (this includes a = 0): L = 1
  ADividesB,   // a | b: L = b / a
  Recurse,     // L = ceil(mu·b / a) with mu derived from the child level
};

std::string_view to_string(Branch branch);

/// Record of one level of the recursion. The instance recorded is the
/// normalized one the branch decision was made on.
struct TraceLevel {
  std::size_t depth = 0;
  Integer a;
  Integer b;
  Rational c;
  Branch branch = Branch::CGeA;
  Integer value;               // L at this level
  std::optional<Integer> mu;   // Recurse only
  std::optional<Integer> r;    // Recurse only; equals the next level's value

  friend bool operator==(const TraceLevel&, const TraceLevel&) = default;
};

struct SolveResult {
  Integer value;
  std::vector<TraceLevel> trace;

  /// Number of Recurse levels.
  std::size_t depth() const noexcept { return trace.empty() ? 0 : trace.size() - 1; }
};

/// (a mod b, b, c).
Instance reduce_factor(const Instance& inst);

/// (a/g, b/g, c/g) with g = gcd(a, b); identity when a = 0.
Instance reduce_gcd(const Instance& inst);

/// The child instance of a Recurse step on a normalized instance with
/// c < a, a ∤ b: (a mod (b mod a), b mod a, c·b / (c·⌊b/a⌋ + b mod a)).
Instance child_instance(const Instance& inst);

/// Least x >= 1 with (a·x mod b) <= c·x, by the Euclidean-style recursion.
SolveResult solve(const Instance& inst);

/// Same value by scanning x = 1, 2, ... Terminates by x = b.
Integer solve_naive(const Instance& inst);

struct TraceViolation {
  std::size_t depth;
  std::string check;
  std::string detail;
};

/// Re-derives the identities that must hold at every level of a trace and
/// reports each one that fails. An empty list means the trace is consistent.
std::vector<TraceViolation> verify_trace(const SolveResult& result);

/// Number of division steps Euclid's algorithm takes on (x, y): repeatedly
/// (x, y) <- (y, x mod y) until y = 0.
std::size_t euclid_chain_length(Integer x, Integer y);

}  // namespace pmd
