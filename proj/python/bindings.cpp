#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "landen/ellipse.hpp"
#include "landen/identities.hpp"
#include "landen/transformation.hpp"

namespace py = pybind11;
using namespace landen;

namespace {

py::object big_to_py(const BigInt& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Rational from_py_int(const py::int_& i) {
  return Rational::parse(py::cast<std::string>(py::str(i)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact verification of the Landen series transformation and certified "
            "ellipse perimeters";

  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<PrecisionUnreachableError>(m, "PrecisionUnreachableError",
                                                    PyExc_RuntimeError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const std::string& text) { return Rational::parse(text); }))
      .def(py::init(&from_py_int))
      .def(py::init([](const py::int_& num, const py::int_& den) {
        return from_py_int(num) / from_py_int(den);
      }))
      .def_property_readonly("numerator", [](const Rational& r) { return big_to_py(r.numerator()); })
      .def_property_readonly("denominator",
                             [](const Rational& r) { return big_to_py(r.denominator()); })
      .def("decimal", &Rational::decimal, py::arg("fractional_digits"))
      .def("is_integer", &Rational::is_integer)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__hash__", [](const Rational& r) { return py::hash(py::str(r.str())); })
      .def("__abs__", &Rational::abs)
      .def("__pow__", [](const Rational& r, long e) { return r.pow(e); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self);
  py::implicitly_convertible<py::int_, Rational>();
  py::implicitly_convertible<py::str, Rational>();

  m.def("binom", &binom, py::arg("n"), py::arg("k"));
  m.def("gen_binom", &gen_binom, py::arg("r"), py::arg("k"));

  py::class_<TruncatedSeries>(m, "TruncatedSeries")
      .def("order", &TruncatedSeries::order)
      .def("coeff", &TruncatedSeries::coeff, py::arg("i"))
      .def("__eq__", [](const TruncatedSeries& s, const TruncatedSeries& t) { return s == t; });
  m.def("binomial_series", &binomial_series, py::arg("alpha"), py::arg("order"));
  m.def("series_mul", &mul);
  m.def("series_add", &add);

  py::class_<IdentityCheck>(m, "IdentityCheck")
      .def_readonly("name", &IdentityCheck::name)
      .def_readonly("parameters", &IdentityCheck::parameters)
      .def_readonly("lhs", &IdentityCheck::lhs)
      .def_readonly("rhs", &IdentityCheck::rhs)
      .def_readonly("holds", &IdentityCheck::holds);
  m.def("lemma1_check", &lemma1_check, py::arg("n"), py::arg("k"));
  m.def("lemma2_bruteforce", &lemma2_bruteforce, py::arg("n"));
  m.def("lemma2_closedform", &lemma2_closedform, py::arg("n"));
  m.def("lemma2_twoform", &lemma2_twoform, py::arg("n"));
  m.def("vandermonde", &vandermonde, py::arg("a"), py::arg("b"), py::arg("n"));
  m.def("knuth_identity_a", &knuth_identity_a, py::arg("n"), py::arg("k"));
  m.def("knuth_identity_b", &knuth_identity_b, py::arg("r"), py::arg("k"));
  m.def("absorption", &absorption, py::arg("r"), py::arg("k"));

  py::class_<VerificationReport::Mismatch>(m, "Mismatch")
      .def_readonly("exponent", &VerificationReport::Mismatch::exponent)
      .def_readonly("lhs", &VerificationReport::Mismatch::lhs)
      .def_readonly("rhs", &VerificationReport::Mismatch::rhs);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("claim", &VerificationReport::claim)
      .def_readonly("order_checked", &VerificationReport::order_checked)
      .def_readonly("passed", &VerificationReport::passed)
      .def_readonly("first_mismatch", &VerificationReport::first_mismatch);
  m.def("maclaurin_coeff", &maclaurin_coeff, py::arg("m"));
  m.def("ivory_coeff", &ivory_coeff, py::arg("n"));
  m.def("intermediate_coeff", &intermediate_coeff, py::arg("m"));
  m.def("verify_step1", &verify_step1, py::arg("order"));
  m.def("verify_step1_negative_control", &verify_step1_negative_control, py::arg("order"));
  m.def("verify_step2", &verify_step2, py::arg("order"));
  m.def("verify_step2_negative_control", &verify_step2_negative_control, py::arg("order"));
  m.def("verify_theorem1", &verify_theorem1, py::arg("order"));
  m.def("step2_coefficient_collapse", &step2_coefficient_collapse, py::arg("n"));

  py::class_<EllipseParams>(m, "EllipseParams")
      .def_readonly("a", &EllipseParams::a)
      .def_readonly("b", &EllipseParams::b)
      .def_readonly("e2", &EllipseParams::e2)
      .def_readonly("h", &EllipseParams::h)
      .def_readonly("x", &EllipseParams::x)
      .def_readonly("sqrt_x", &EllipseParams::sqrt_x)
      .def_readonly("degenerate", &EllipseParams::degenerate);
  m.def("params_from_axes", &params_from_axes, py::arg("a"), py::arg("b"));

  py::class_<PiApprox>(m, "PiApprox")
      .def_readonly("value", &PiApprox::value)
      .def_readonly("radius", &PiApprox::radius);
  m.def("pi_approx", &pi_approx, py::arg("digits"));

  py::class_<BoundedDecimal>(m, "BoundedDecimal")
      .def_readonly("decimal", &BoundedDecimal::decimal)
      .def_readonly("value", &BoundedDecimal::value)
      .def_readonly("error_radius", &BoundedDecimal::error_radius)
      .def_readonly("terms", &BoundedDecimal::terms)
      .def("__repr__", [](const BoundedDecimal& b) {
        return "BoundedDecimal(" + b.decimal + " +/- " + b.error_radius.str() + ")";
      });
  m.def("perimeter_maclaurin", &perimeter_maclaurin, py::arg("params"), py::arg("digits"),
        py::arg("max_terms") = kDefaultMaxTerms);
  m.def("perimeter_ivory", &perimeter_ivory, py::arg("params"), py::arg("digits"),
        py::arg("max_terms") = kDefaultMaxTerms);

  py::class_<ConvergenceComparison>(m, "ConvergenceComparison")
      .def_readonly("maclaurin_terms", &ConvergenceComparison::maclaurin_terms)
      .def_readonly("maclaurin_tail", &ConvergenceComparison::maclaurin_tail)
      .def_readonly("ivory_terms", &ConvergenceComparison::ivory_terms)
      .def_readonly("ivory_tail", &ConvergenceComparison::ivory_tail);
  m.def("compare_convergence", &compare_convergence, py::arg("params"), py::arg("tolerance"),
        py::arg("max_terms") = kDefaultMaxTerms);
}
