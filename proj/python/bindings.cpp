#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pmd/harness.hpp"
#include "pmd/rational.hpp"
#include "pmd/semigroup.hpp"
#include "pmd/solver.hpp"

namespace py = pybind11;

// Python int <-> pmd::Integer through the decimal representation, so
// values of any size cross the boundary unchanged.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) {
      return false;
    }
    value = mpz_class(py::str(src).cast<std::string>(), 10);
    return true;
  }

  static handle cast(const mpz_class& src, return_value_policy, handle) {
    return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
  }
};

// Accepts int, fractions.Fraction (anything with integer numerator and
// denominator) or the text form "n" / "n/d"; produces fractions.Fraction.
template <>
struct type_caster<pmd::Rational> {
  PYBIND11_TYPE_CASTER(pmd::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (py::isinstance<py::str>(src)) {
      value = pmd::parse_rational(src.cast<std::string>());
      return true;
    }
    if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator")) {
      return false;
    }
    py::object num = src.attr("numerator");
    py::object den = src.attr("denominator");
    if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr())) {
      return false;
    }
    value = pmd::make_rational(num.cast<mpz_class>(), den.cast<mpz_class>());
    return true;
  }

  static handle cast(const pmd::Rational& src, return_value_policy policy, handle parent) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    py::object num = py::reinterpret_steal<py::object>(type_caster<mpz_class>::cast(src.num(), policy, parent));
    py::object den = py::reinterpret_steal<py::object>(type_caster<mpz_class>::cast(src.den(), policy, parent));
    return fraction(num, den).release();
  }
};

}  // namespace pybind11::detail

namespace {

using Triple = std::tuple<pmd::Integer, pmd::Integer, pmd::Rational>;

Triple as_tuple(const pmd::Instance& inst) { return {inst.a, inst.b, inst.c}; }

pmd::QuotientQuery quotient_query(const pmd::Integer& a1, const pmd::Integer& a2, const pmd::Integer& d) {
  return {pmd::TwoGenSemigroup(a1, a2), d};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Least solutions of (a*x mod b) <= c*x, quotient and interval semigroup multiplicities, "
            "and Frobenius numbers of S(a,b,1).";

  py::register_exception<pmd::NotInvertible>(m, "NotInvertibleError", PyExc_ValueError);

  py::enum_<pmd::Branch>(m, "Branch")
      .value("C_GE_A", pmd::Branch::CGeA)
      .value("A_DIVIDES_B", pmd::Branch::ADividesB)
      .value("RECURSE", pmd::Branch::Recurse);

  py::class_<pmd::TraceLevel>(m, "TraceLevel")
      .def_readonly("depth", &pmd::TraceLevel::depth)
      .def_readonly("a", &pmd::TraceLevel::a)
      .def_readonly("b", &pmd::TraceLevel::b)
      .def_readonly("c", &pmd::TraceLevel::c)
      .def_readonly("branch", &pmd::TraceLevel::branch)
      .def_readonly("L", &pmd::TraceLevel::value)
      .def_readonly("mu", &pmd::TraceLevel::mu)
      .def_readonly("R", &pmd::TraceLevel::r)
      .def("__repr__", [](const pmd::TraceLevel& lv) {
        return "TraceLevel(depth=" + std::to_string(lv.depth) + ", instance=" +
               pmd::to_string(pmd::Instance{lv.a, lv.b, lv.c}) + ", branch=" +
               std::string(pmd::to_string(lv.branch)) + ", L=" + lv.value.get_str() + ")";
      });

  py::class_<pmd::SolveResult>(m, "SolveResult")
      .def_readonly("value", &pmd::SolveResult::value)
      .def_readonly("trace", &pmd::SolveResult::trace)
      .def_property_readonly("depth", &pmd::SolveResult::depth)
      .def("to_json", [](const pmd::SolveResult& r) { return pmd::trace_to_json(r).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return pmd::trace_from_json(nlohmann::json::parse(text));
      });

  m.def("solve", [](const pmd::Integer& a, const pmd::Integer& b, const pmd::Rational& c) {
    return pmd::solve({a, b, c});
  }, py::arg("a"), py::arg("b"), py::arg("c"), "Solve with the full recursion trace.");
  m.def("least_solution", [](const pmd::Integer& a, const pmd::Integer& b, const pmd::Rational& c) {
    return pmd::solve({a, b, c}).value;
  }, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("solve_naive", [](const pmd::Integer& a, const pmd::Integer& b, const pmd::Rational& c) {
    return pmd::solve_naive({a, b, c});
  }, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("verify_trace", [](const pmd::SolveResult& result) {
    std::vector<std::tuple<std::size_t, std::string, std::string>> out;
    for (const auto& v : pmd::verify_trace(result)) {
      out.emplace_back(v.depth, v.check, v.detail);
    }
    return out;
  }, py::arg("result"), "List of (depth, check, detail); empty when the trace is consistent.");
  m.def("reduce_factor", [](const pmd::Integer& a, const pmd::Integer& b, const pmd::Rational& c) {
    return as_tuple(pmd::reduce_factor({a, b, c}));
  });
  m.def("reduce_gcd", [](const pmd::Integer& a, const pmd::Integer& b, const pmd::Rational& c) {
    return as_tuple(pmd::reduce_gcd({a, b, c}));
  });
  m.def("euclid_chain_length", &pmd::euclid_chain_length);

  m.def("mod_inverse", &pmd::mod_inverse, py::arg("x"), py::arg("m"));
  m.def("membership", [](const pmd::Integer& a1, const pmd::Integer& a2, const pmd::Integer& x) {
    return pmd::membership(pmd::TwoGenSemigroup(a1, a2), x);
  }, py::arg("a1"), py::arg("a2"), py::arg("x"));
  m.def("quotient_multiplicity", [](const pmd::Integer& a1, const pmd::Integer& a2, const pmd::Integer& d) {
    return pmd::quotient_multiplicity(quotient_query(a1, a2, d));
  }, py::arg("a1"), py::arg("a2"), py::arg("d"));
  m.def("quotient_multiplicity_naive", [](const pmd::Integer& a1, const pmd::Integer& a2, const pmd::Integer& d) {
    return pmd::quotient_multiplicity_naive(quotient_query(a1, a2, d));
  }, py::arg("a1"), py::arg("a2"), py::arg("d"));
  m.def("interval_multiplicity", [](const pmd::Rational& p, const pmd::Rational& q) {
    return pmd::interval_multiplicity(pmd::RationalInterval(p, q));
  }, py::arg("p"), py::arg("q"));
  m.def("interval_multiplicity_naive", [](const pmd::Rational& p, const pmd::Rational& q) {
    return pmd::interval_multiplicity_naive(pmd::RationalInterval(p, q));
  }, py::arg("p"), py::arg("q"));
  m.def("frobenius_f1", &pmd::frobenius_f1, py::arg("a"), py::arg("b"));
  m.def("frobenius_naive", &pmd::frobenius_naive, py::arg("a"), py::arg("b"));
}
