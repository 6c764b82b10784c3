// Python bindings. Rationals cross the boundary as fractions.Fraction, big integers as int.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torsion/commands.hpp"
#include "torsion/cone.hpp"
#include "torsion/error.hpp"

namespace py = pybind11;
using namespace torsion;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(r));
}

Rational rational_from(const py::handle& obj) {
  return parse_rational(py::str(obj).cast<std::string>());
}

py::object bigint(const BigInt& z) { return py::int_(py::str(to_string(z))); }

py::dict phase_dict(const PhasePolynomial& p) {
  py::dict out;
  for (const auto& [mono, coeff] : p.terms()) {
    py::list coeffs;
    for (const auto& c : coeff.coeffs()) coeffs.append(fraction(c));
    out[py::tuple(py::cast(mono))] = coeffs;
  }
  return out;
}

/// ν-free phase polynomial as {exponents: Fraction}.
py::dict constant_phase_dict(const PhasePolynomial& p) {
  py::dict out;
  for (const auto& [mono, coeff] : p.terms()) out[py::tuple(py::cast(mono))] = fraction(coeff.coeff(0));
  return out;
}

py::dict contribution(const Contribution& c) {
  py::dict out;
  out["value"] = c.value;
  out["exact"] = c.exact ? py::object(py::str(c.exact_string())) : py::object(py::none());
  if (c.exact && c.exact->is_rational())
    out["rational"] = fraction(c.exact->rational_part());
  else
    out["rational"] = py::none();
  out["standin"] = c.standin;
  return out;
}

EvalMode mode_of(bool exact) { return exact ? EvalMode::Exact : EvalMode::Float; }

py::dict report_dict(const PseudoPolyReport& r) {
  py::dict out;
  out["q"] = r.q;
  out["degree_cap"] = r.degree_cap;
  out["residue_degrees"] = r.residue_degrees;
  out["global_degree"] = r.global_degree;
  out["leading"] = r.leading;
  out["leading_exact"] = r.leading_exact;
  out["within_cap"] = r.within_cap();
  return out;
}

}  // namespace

PYBIND11_MODULE(pytorsion, m) {
  m.doc() = "Exact Weyl-group expansions and torsion asymptotics on rays of representations";

  // subclasses are registered later so their translators are tried first
  auto& base_error = py::register_exception<Error>(m, "TorsionError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base_error.ptr());
  py::register_exception<ResourceCapExceeded>(m, "ResourceCapExceeded", base_error.ptr());
  py::register_exception<LemmaViolation>(m, "LemmaViolation", base_error.ptr());
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base_error.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base_error.ptr());

  py::class_<RayConfig>(m, "RayConfig")
      .def(py::init<int, std::vector<std::int64_t>, std::int64_t>(), py::arg("n"), py::arg("tau"),
           py::arg("m") = 0)
      .def_property_readonly("n", &RayConfig::n)
      .def_property_readonly("tau", [](const RayConfig& c) {
        return std::vector<std::int64_t>(c.tau().begin(), c.tau().end());
      })
      .def_property_readonly("m", &RayConfig::m)
      .def("with_m", &RayConfig::with_m)
      .def("highest_weight", &RayConfig::highest_weight)
      .def("lambdas", [](const RayConfig& c) { return lambdas(c); })
      .def("__eq__", [](const RayConfig& a, const RayConfig& b) { return a == b; })
      .def("__repr__", [](const RayConfig& c) {
        std::string s = "RayConfig(n=" + std::to_string(c.n()) + ", tau=[";
        for (std::size_t i = 0; i < c.tau().size(); ++i)
          s += (i ? ", " : "") + std::to_string(c.tau()[i]);
        return s + "], m=" + std::to_string(c.m()) + ")";
      });

  py::class_<Angle>(m, "Angle")
      .def(py::init([](std::int64_t p, std::int64_t q, const std::string& unit) {
             return Angle(p, q, parse_angle_unit(unit));
           }),
           py::arg("p"), py::arg("q"), py::arg("unit") = "two_pi")
      .def_property_readonly("turns", [](const Angle& a) { return fraction(a.turns()); })
      .def_property_readonly("radians", &Angle::radians);

  py::class_<EllipticClass>(m, "EllipticClass")
      .def(py::init([](int d, std::vector<Angle> angles, py::object weight) {
             return EllipticClass{d, std::move(angles), rational_from(weight)};
           }),
           py::arg("d"), py::arg("angles"), py::arg("weight") = 1)
      .def_readonly("d", &EllipticClass::d)
      .def_property_readonly("weight", [](const EllipticClass& c) { return fraction(c.weight); })
      .def_property_readonly("period", &EllipticClass::period)
      .def("validate", &EllipticClass::validate);

  py::class_<OrbifoldData>(m, "OrbifoldData")
      .def(py::init([](int n, py::object volume, std::vector<EllipticClass> classes) {
             OrbifoldData orb;
             orb.n = n;
             orb.volume = rational_from(volume);
             orb.classes = std::move(classes);
             orb.validate();
             return orb;
           }),
           py::arg("n"), py::arg("volume") = 1, py::arg("classes") = std::vector<EllipticClass>{})
      .def_readonly("n", &OrbifoldData::n)
      .def_readonly("classes", &OrbifoldData::classes)
      .def_property_readonly("volume", [](const OrbifoldData& o) { return fraction(o.volume); })
      .def_property_readonly("period", &OrbifoldData::period);

  py::class_<RunConfig>(m, "RunConfig")
      .def_readonly("n", &RunConfig::n)
      .def_readonly("tau", &RunConfig::tau)
      .def_readonly("q", &RunConfig::q)
      .def_readonly("orbifold", &RunConfig::orbifold)
      .def("ray", &RunConfig::ray, py::arg("m") = 0)
      .def("canonical", [](const RunConfig& c) { return canonical_config(c); })
      .def("__eq__", [](const RunConfig& a, const RunConfig& b) { return a == b; });

  m.def("parse_config", [](const std::string& text) { return parse_config_text(text); },
        py::arg("text"), "Validate a JSON configuration; raises ConfigError listing every violation.");
  m.def("load_config", [](const std::string& path) { return parse_config_file(path); }, py::arg("path"));
  m.def("pinned_config", &pinned_config);
  m.def("config_schema", [] { return config_schema().dump(); });

  m.def("weyl_group_order", [](int n) { return WeylGroupD(n).size(); }, py::arg("n"));
  m.def("weyl_dim", [](const RayConfig& c) { return bigint(weyl_dim(c)); });
  m.def("p_gamma", [](const RayConfig& c, int k, int d) { return phase_dict(build_p_gamma(c, k, d).value); },
        py::arg("cfg"), py::arg("k"), py::arg("d"),
        "{phase exponents: [coefficients of nu^0, nu^1, ...]}");
  m.def("alternating_sum", [](const RayConfig& c, int d) { return constant_phase_dict(alternating_sum(c, d)); },
        py::arg("cfg"), py::arg("d"));
  m.def("identity_alternating_sum", [](const RayConfig& c) { return fraction(identity_alternating_sum(c)); });
  m.def("eqfora_check", [](std::vector<std::int64_t> K, std::int64_t kappa) {
    const auto r = eqforA_check(K, kappa);
    py::dict out;
    out["passed"] = r.passed();
    out["value"] = fraction(r.value);
    out["vandermonde"] = fraction(r.vandermonde);
    out["sign"] = r.sign;
    return out;
  });

  m.def("me", [](const RayConfig& c, const OrbifoldData& o, bool exact) {
    return contribution(me(c, o, mode_of(exact)));
  }, py::arg("cfg"), py::arg("orbifold"), py::arg("exact") = true);
  m.def("mi", [](const RayConfig& c, const OrbifoldData& o, bool exact) {
    return contribution(mi(c, o, mode_of(exact)));
  }, py::arg("cfg"), py::arg("orbifold"), py::arg("exact") = true);
  m.def("log_t2", [](const RayConfig& c, const OrbifoldData& o, bool exact) {
    return contribution(log_t2(c, o, mode_of(exact)));
  }, py::arg("cfg"), py::arg("orbifold"), py::arg("exact") = true);
  m.def("log_t", [](const RayConfig& c, const OrbifoldData& o, bool exact) {
    return contribution(log_t_approx(c, o, mode_of(exact)));
  }, py::arg("cfg"), py::arg("orbifold"), py::arg("exact") = true);
  m.def("heat_trace_e", &heat_trace_e, py::arg("cfg"), py::arg("orbifold"), py::arg("t"));
  m.def("heat_trace_i", &heat_trace_i, py::arg("cfg"), py::arg("orbifold"), py::arg("t"));

  m.def("pseudopoly_extract", [](const std::vector<py::object>& values, std::int64_t q, int cap) {
    std::vector<Rational> xs;
    for (const auto& v : values) xs.push_back(rational_from(v));
    return report_dict(pseudopoly_extract(xs, q, cap));
  }, py::arg("values"), py::arg("q"), py::arg("degree_cap"));
  m.def("pseudopoly_extract_float",
        [](const std::vector<std::complex<double>>& values, std::int64_t q, int cap, double tol) {
          return report_dict(pseudopoly_extract(values, q, cap, tol));
        },
        py::arg("values"), py::arg("q"), py::arg("degree_cap"), py::arg("tolerance") = 1e-9);

  m.def("cone_integrand", &cone::integrand, py::arg("u"), py::arg("t"));
  m.def("cone_tail", [](double u, double eps) { return cone::tail_integral(u, eps).value; },
        py::arg("u"), py::arg("eps"));

  m.def("verify", [](const std::string& suite, std::optional<std::string> config_text) {
    std::optional<RunConfig> cfg;
    if (config_text) cfg = parse_config_text(*config_text);
    const auto r = cmd_verify(parse_suite(suite), cfg);
    py::dict out;
    out["passed"] = r.passed();
    out["checks"] = r.checks;
    out["violations"] = r.violations;
    out["notes"] = r.notes;
    return out;
  }, py::arg("suite"), py::arg("config") = py::none());
  m.def("table", [](const std::string& quantity, std::optional<std::string> config_text,
                    std::int64_t m_max, bool exact) {
    RunConfig cfg = config_text ? parse_config_text(*config_text) : pinned_config();
    cfg.options.m_max = m_max;
    cfg.options.mode = mode_of(exact);
    return cmd_table(parse_quantity(quantity), cfg).csv;
  }, py::arg("quantity"), py::arg("config") = py::none(), py::arg("m_max") = 10,
     py::arg("exact") = true);
}
