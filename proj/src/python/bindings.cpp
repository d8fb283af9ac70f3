// Thin pybind11 layer. Descriptors and records cross the boundary as JSON text
// in the same shapes the CLI reads and writes; etaforge/__init__.py converts to dicts.
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "etaforge/errors.hpp"
#include "etaforge/json_io.hpp"

namespace py = pybind11;
using namespace etaforge;
using io::json;

namespace {

struct Setup {
  Geometry g;
  HodgeProvider hp;
};

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed JSON argument: ") + e.what());
  }
}

Setup setup(const std::string& geometry, const std::string& hodge) {
  const json gd = parse(geometry);
  Geometry g = io::geometry_from_json(gd);
  HodgeProvider hp = io::hodge_from_json(parse(hodge), gd, g);
  return {std::move(g), std::move(hp)};
}

ConventionSet conventions(const std::optional<std::string>& text) {
  return text ? io::conventions_from_json(parse(*text)) : default_conventions();
}

std::optional<DolbeaultProvider> dolbeault(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return io::dolbeault_from_json(parse(*text));
}

Rational q(const std::string& s) { return Rational::parse(s); }

ParityVariant variant(int v) {
  if (v < 1 || v > 3) throw UsageError("parity variant must be 1, 2 or 3");
  return static_cast<ParityVariant>(v);
}

std::string out(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "etaforge native core";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnknownHodgeData>(m, "UnknownHodgeData", base.ptr());
  py::register_exception<ProviderConsistencyError>(m, "ProviderConsistencyError", base.ptr());
  py::register_exception<InvalidDolbeaultData>(m, "InvalidDolbeaultData", base.ptr());
  py::register_exception<NoConsistentConvention>(m, "NoConsistentConvention", base.ptr());
  py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

  m.attr("SCHEMA") = io::kSchema;

  m.def("normalize_rational", [](const std::string& s) { return q(s).str(); });

  m.def("default_conventions", [] { return out(io::to_json(default_conventions())); });

  m.def("geometry", [](const std::string& g) { return out(io::to_json(io::geometry_from_json(parse(g)))); });

  m.def("hodge_number", [](const std::string& g, const std::string& h, int p, long k) {
    return setup(g, h).hp.hodge_number(p, k);
  });

  m.def(
      "exact_eta",
      [](const std::string& g, const std::string& h, const std::string& r, const std::string& eps,
         std::optional<std::string> conv, std::optional<std::string> dol) {
        auto s = setup(g, h);
        auto provider = dolbeault(dol);
        return out(io::to_json(exact_eta(s.g, s.hp, q(r), q(eps), conventions(conv), provider ? &*provider : nullptr)));
      },
      py::arg("geometry"), py::arg("hodge"), py::arg("r"), py::arg("eps"), py::arg("conventions") = py::none(),
      py::arg("dolbeault") = py::none());

  m.def(
      "asymptotic_eta",
      [](const std::string& g, const std::string& h, const std::string& r, const std::string& eps,
         std::optional<std::string> conv) {
        auto s = setup(g, h);
        return asymptotic_eta(s.g, s.hp, q(r), q(eps), conventions(conv)).str();
      },
      py::arg("geometry"), py::arg("hodge"), py::arg("r"), py::arg("eps"), py::arg("conventions") = py::none());

  m.def(
      "adiabatic_limit",
      [](const std::string& g, const std::string& h, const std::string& r, std::optional<std::string> conv) {
        auto s = setup(g, h);
        return adiabatic_limit(s.g, s.hp, q(r), conventions(conv)).str();
      },
      py::arg("geometry"), py::arg("hodge"), py::arg("r"), py::arg("conventions") = py::none());

  m.def(
      "aps_difference_check",
      [](const std::string& g, const std::string& h, const std::string& r0, const std::string& r1,
         const std::string& eps, std::optional<std::string> conv, std::optional<std::string> dol) {
        auto s = setup(g, h);
        auto provider = dolbeault(dol);
        return out(io::to_json(
            aps_difference_check(s.g, s.hp, q(r0), q(r1), q(eps), conventions(conv), provider ? &*provider : nullptr)));
      },
      py::arg("geometry"), py::arg("hodge"), py::arg("r0"), py::arg("r1"), py::arg("eps"),
      py::arg("conventions") = py::none(), py::arg("dolbeault") = py::none());

  m.def("calibrate", [] { return out(io::to_json(calibrate(default_calibration_suite()))); });

  m.def(
      "dirac_spectrum",
      [](const std::string& g, const std::string& h, const std::string& r, const std::string& eps, long kMin,
         long kMax, std::optional<std::string> dol) {
        auto s = setup(g, h);
        auto provider = dolbeault(dol);
        json recs = json::array();
        for (const auto& e : dirac_spectrum(s.g, s.hp, q(r), q(eps), KRange{kMin, kMax}, provider ? &*provider : nullptr))
          recs.push_back(io::to_json(e));
        return out(recs);
      },
      py::arg("geometry"), py::arg("hodge"), py::arg("r"), py::arg("eps"), py::arg("k_min"), py::arg("k_max"),
      py::arg("dolbeault") = py::none());

  m.def("flow_in_delta_closed", [](const std::string& g, const std::string& h, const std::string& r,
                                   const std::string& eps) {
    auto s = setup(g, h);
    return flow_in_delta_closed(s.g, s.hp, q(r), q(eps));
  });
  m.def("flow_in_delta_oracle", [](const std::string& g, const std::string& h, const std::string& r,
                                   const std::string& eps) {
    auto s = setup(g, h);
    return out(io::to_json(flow_in_delta_oracle(s.g, s.hp, q(r), q(eps))));
  });
  m.def("flow_in_s_oracle", [](const std::string& g, const std::string& h, const std::string& r0,
                               const std::string& r1, const std::string& eps) {
    auto s = setup(g, h);
    return out(io::to_json(flow_in_s_oracle(s.g, s.hp, q(r0), q(r1), q(eps))));
  });

  m.def("heat_density", [](int n, std::vector<double> lambdas, double t) {
    return heat_density(ModelPoint{n, std::move(lambdas)}, t);
  });
  m.def(
      "limit_measure_apply",
      [](int n, std::vector<double> lambdas, const std::function<double(double)>& phi, double sMax,
         std::vector<double> breakpoints) {
        return limit_measure_apply(ModelPoint{n, std::move(lambdas)}, phi, sMax, breakpoints);
      },
      py::arg("n"), py::arg("lambdas"), py::arg("phi"), py::arg("s_max"),
      py::arg("breakpoints") = std::vector<double>{});
  m.def(
      "laplace_check",
      [](int n, std::vector<double> lambdas, double t, double sMax) {
        return out(io::to_json(laplace_check(ModelPoint{n, std::move(lambdas)}, t, sMax)));
      },
      py::arg("n"), py::arg("lambdas"), py::arg("t"), py::arg("s_max") = 0.0);
  m.def("near_zero_bound", [](int n, std::vector<double> lambdas, double epsSupport) {
    return out(io::to_json(near_zero_bound(ModelPoint{n, std::move(lambdas)}, epsSupport)));
  });

  m.def(
      "identity_suite",
      [](int dim, std::vector<std::string> kappas) {
        std::vector<Rational> ks;
        for (const auto& k : kappas) ks.push_back(q(k));
        return out(io::to_json(identity_suite(KahlerModel{dim}, ks)));
      },
      py::arg("m"), py::arg("kappas") = std::vector<std::string>{"1"});
  m.def("trace_expansion_check", [](int dim, int N, const std::string& delta) {
    return out(io::to_json(trace_expansion_check(KahlerModel{dim, false}, N, q(delta))));
  });
  m.def("parity_count", [](int N, int k, int v) {
    return parity_count(N, k, variant(v));
  });
  m.def("parity_closed_form", [](int N, int k, int v) {
    return parity_closed_form(N, k, variant(v));
  });
}
