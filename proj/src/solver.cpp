#include "pmd/solver.hpp"

#include <stdexcept>
#include <utility>

namespace pmd {

std::string to_string(const Instance& inst) {
  return "(" + inst.a.get_str() + ", " + inst.b.get_str() + ", " + inst.c.to_string() + ")";
}

std::string_view to_string(Branch branch) {
  switch (branch) {
    case Branch::CGeA:
      return "C_GE_A";
    case Branch::ADividesB:
      return "A_DIVIDES_B";
    case Branch::Recurse:
      return "RECURSE";
  }
  return "?";
}

void validate(const Instance& inst) {
  if (sgn(inst.b) <= 0) {
    throw std::invalid_argument("modulus must be positive");
  }
  if (inst.c.sign() <= 0) {
    throw std::invalid_argument("proportion must be positive");
  }
  if (sgn(inst.a) < 0) {
    throw std::invalid_argument("factor must be non-negative");
  }
}

Instance reduce_factor(const Instance& inst) { return {rem(inst.a, inst.b), inst.b, inst.c}; }

Instance reduce_gcd(const Instance& inst) {
  if (inst.a == 0) {
    return inst;
  }
  Integer g = gcd(inst.a, inst.b);
  if (g == 1) {
    return inst;
  }
  return {Integer(inst.a / g), Integer(inst.b / g), Rational(inst.c.num(), inst.c.den() * g)};
}

Instance child_instance(const Instance& inst) {
  const Integer& a = inst.a;
  const Integer& b = inst.b;
  const Integer& n = inst.c.num();
  const Integer& d = inst.c.den();
  Integer q = floor_div(b, a);
  Integer r = rem(b, a);
  return {rem(a, r), r, make_rational(n * b, n * q + d * r)};
}

namespace {

Instance normalize(const Instance& inst) { return reduce_gcd(reduce_factor(inst)); }

// ceil(R·(a − c) / (c·⌊b/a⌋ + [b]_a)) with c = n/d, cleared of denominators.
Integer multiplier_from_child(const Instance& inst, const Integer& child_value) {
  const Integer& a = inst.a;
  const Integer& b = inst.b;
  const Integer& n = inst.c.num();
  const Integer& d = inst.c.den();
  Integer q = floor_div(b, a);
  Integer r = rem(b, a);
  return ceil_div(child_value * (a * d - n), n * q + d * r);
}

}  // namespace

SolveResult solve(const Instance& inst) {
  validate(inst);

  SolveResult result;
  Instance cur = normalize(inst);
  for (std::size_t depth = 0;; ++depth) {
    TraceLevel level;
    level.depth = depth;
    level.a = cur.a;
    level.b = cur.b;
    level.c = cur.c;
    if (cur.a == 0 || cur.c >= Rational(cur.a)) {
      level.branch = Branch::CGeA;
      level.value = 1;
      result.trace.push_back(std::move(level));
      break;
    }
    if (rem(cur.b, cur.a) == 0) {
      level.branch = Branch::ADividesB;
      level.value = cur.b / cur.a;
      result.trace.push_back(std::move(level));
      break;
    }
    level.branch = Branch::Recurse;
    result.trace.push_back(std::move(level));
    cur = normalize(child_instance(cur));
  }

  for (std::size_t i = result.trace.size() - 1; i-- > 0;) {
    TraceLevel& level = result.trace[i];
    const Integer& child_value = result.trace[i + 1].value;
    Instance here{level.a, level.b, level.c};
    Integer mu = multiplier_from_child(here, child_value);
    level.value = ceil_div(mu * level.b, level.a);
    level.mu = std::move(mu);
    level.r = child_value;
  }

  result.value = result.trace.front().value;
  return result;
}

Integer solve_naive(const Instance& inst) {
  validate(inst);
  const Integer& n = inst.c.num();
  const Integer& d = inst.c.den();
  Integer residue = 0;
  Integer step = rem(inst.a, inst.b);
  for (Integer x = 1;; ++x) {
    // residue tracks (a·x) mod b incrementally
    residue += step;
    if (residue >= inst.b) {
      residue -= inst.b;
    }
    if (residue * d <= n * x) {
      return x;
    }
  }
}

std::vector<TraceViolation> verify_trace(const SolveResult& result) {
  std::vector<TraceViolation> out;
  auto fail = [&out](std::size_t depth, std::string check, std::string detail) {
    out.push_back({depth, std::move(check), std::move(detail)});
  };

  const auto& trace = result.trace;
  if (trace.empty()) {
    fail(0, "structure", "empty trace");
    return out;
  }
  if (result.value != trace.front().value) {
    fail(0, "structure", "result value differs from level 0 value");
  }

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const TraceLevel& lv = trace[i];
    const bool last = i + 1 == trace.size();
    if (lv.depth != i) {
      fail(i, "structure", "depth field out of sequence");
    }
    if (sgn(lv.b) <= 0 || sgn(lv.a) < 0 || lv.a >= lv.b || lv.c.sign() <= 0) {
      fail(i, "structure", "level instance is not normalized: " + to_string(Instance{lv.a, lv.b, lv.c}));
      continue;
    }
    if (last != (lv.branch != Branch::Recurse)) {
      fail(i, "structure", "base cases must terminate the trace");
    }

    const Integer& a = lv.a;
    const Integer& b = lv.b;
    const Integer& n = lv.c.num();
    const Integer& d = lv.c.den();
    const Integer& value = lv.value;

    if (lv.branch == Branch::CGeA) {
      if (value != 1) fail(i, "branch-value", "C_GE_A level must have value 1");
      if (a != 0 && lv.c < Rational(a)) fail(i, "branch-condition", "C_GE_A taken with c < a");
      continue;
    }
    if (lv.branch == Branch::ADividesB) {
      if (a == 0 || rem(b, a) != 0) {
        fail(i, "branch-condition", "A_DIVIDES_B taken with a not dividing b");
      } else if (value != b / a) {
        fail(i, "branch-value", "A_DIVIDES_B level must have value b/a");
      }
      continue;
    }

    // Recurse
    if (a == 0 || lv.c >= Rational(a) || rem(b, a) == 0) {
      fail(i, "branch-condition", "RECURSE taken although a base case applies");
      continue;
    }
    if (!lv.mu || !lv.r) {
      fail(i, "structure", "RECURSE level without mu or R");
      continue;
    }
    const Integer& mu = *lv.mu;
    const Integer& r_mu = *lv.r;
    if (sgn(mu) <= 0 || sgn(r_mu) <= 0) {
      fail(i, "structure", "mu and R must be positive");
      continue;
    }
    if (!last && r_mu != trace[i + 1].value) {
      fail(i, "link", "R differs from the next level's value");
    }
    if (!last) {
      Instance expected = reduce_gcd(reduce_factor(child_instance({a, b, lv.c})));
      const TraceLevel& nx = trace[i + 1];
      if (expected != Instance{nx.a, nx.b, nx.c}) {
        fail(i, "child-instance", "next level is not the child of this one");
      }
    }

    Integer q = floor_div(b, a);
    Integer r = rem(b, a);

    if (value != ceil_div(mu * b, a)) {
      fail(i, "ceiling-form", "L != ceil(mu*b/a)");
    }
    // L = mu·⌊b/a⌋ + R
    if (value != mu * q + r_mu) {
      fail(i, "quotient-identity", "L != mu*floor(b/a) + R");
    }
    // (a·L mod b) = R·a − mu·(b mod a), and that value lies in [0, b)
    Integer residue = rem(a * value, b);
    Integer predicted = r_mu * a - mu * r;
    if (residue != predicted || sgn(predicted) < 0 || predicted >= b) {
      fail(i, "residue-identity", "(a*L mod b) != R*a - mu*(b mod a) or out of range");
    }
    // R(a − c)/(c·q + r) <= mu <= R·a/r
    if (r_mu * (a * d - n) > mu * (n * q + d * r) || mu * r > r_mu * a) {
      fail(i, "mu-sandwich", "mu outside [R(a-c)/(cq+r), Ra/r]");
    }
    if (r_mu != ceil_div(mu * r, a)) {
      fail(i, "r-ceiling", "R != ceil(mu*(b mod a)/a)");
    }
    if (residue * d > n * value) {
      fail(i, "minimality", "L does not satisfy the inequality");
    }
    if (value >= 2) {
      Integer prev = value - 1;
      if (rem(a * prev, b) * d <= n * prev) {
        fail(i, "minimality", "L-1 already satisfies the inequality");
      }
    }
  }
  return out;
}

std::size_t euclid_chain_length(Integer x, Integer y) {
  std::size_t steps = 0;
  x = abs(x);
  y = abs(y);
  while (y != 0) {
    Integer next = x % y;
    x = std::move(y);
    y = std::move(next);
    ++steps;
  }
  return steps;
}

}  // namespace pmd
