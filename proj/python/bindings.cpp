#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "mixedpoly/families.hpp"
#include "mixedpoly/gfdsl.hpp"
#include "mixedpoly/mixed.hpp"
#include "mixedpoly/padic.hpp"

namespace py = pybind11;
using namespace mixedpoly;

namespace {

using Coeffs = std::vector<std::string>;

Coeffs coeffs_of(const XPoly& p) {
    Coeffs out;
    for (const auto& c : p.coeffs()) {
        out.push_back(c.to_string());
    }
    return out;
}

std::vector<Coeffs> rows_of(const std::vector<XPoly>& polys) {
    std::vector<Coeffs> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        out.push_back(coeffs_of(p));
    }
    return out;
}

FamilyKind family_arg(const std::string& name) {
    if (auto k = parse_family(name)) {
        return *k;
    }
    throw py::value_error("unknown family '" + name + "'");
}

MixedKind mixed_arg(const std::string& name) {
    if (auto k = parse_mixed(name)) {
        return *k;
    }
    throw py::value_error("unknown mixed family '" + name + "'");
}

OutputFormat format_arg(const std::string& name) {
    if (auto f = parse_format(name)) {
        return *f;
    }
    throw py::value_error("unknown format '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact generating-function polynomials, identity checks and p-adic approximants";

    py::register_exception<dsl::DslError>(m, "DslError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_ValueError);

    m.def("family_polys",
          [](const std::string& family, int order, std::size_t n_max) {
              return rows_of(family_polys({family_arg(family), order}, n_max));
          },
          py::arg("family"), py::arg("order") = 1, py::arg("n_max"),
          "Coefficient strings, ascending in x, for n = 0..n_max.");

    m.def("family_oracle_polys",
          [](const std::string& family, int order, std::size_t n_max) {
              return rows_of(family_oracle_polys({family_arg(family), order}, n_max));
          },
          py::arg("family"), py::arg("order") = 1, py::arg("n_max"));

    m.def("mixed_polys",
          [](const std::string& kind, int r, int s, std::size_t n_max) {
              const MixedSpec spec{mixed_arg(kind), r, s};
              const TSeries gf = mixed_gf(spec, n_max);
              std::vector<XPoly> polys;
              for (std::size_t n = 0; n <= n_max; ++n) {
                  polys.push_back(nth_poly(gf, n));
              }
              return rows_of(polys);
          },
          py::arg("kind"), py::arg("r"), py::arg("s"), py::arg("n_max"));

    m.def("stirling1", [](long n, long k) { return stirling1(n, k).get_str(); });
    m.def("stirling2", [](long n, long k) { return stirling2(n, k).get_str(); });

    m.def("verify",
          [](const std::string& id, std::size_t n_max, int lo, int hi, const std::string& variant,
             const std::string& format) {
              const auto ident = parse_identity(id);
              if (!ident) {
                  throw py::value_error("unknown identity '" + id + "'");
              }
              const auto var = parse_variant(variant);
              if (!var) {
                  throw py::value_error("unknown variant '" + variant + "'");
              }
              std::vector<IdentityReport> reports;
              {
                  py::gil_scoped_release release;
                  reports = verify_identity(*ident, n_max, {lo, hi}, {lo, hi}, *var);
              }
              return render_report(reports, format_arg(format));
          },
          py::arg("identity"), py::arg("n_max") = 12, py::arg("lo") = 1, py::arg("hi") = 3,
          py::arg("variant") = "corrected", py::arg("format") = "json",
          "Rendered identity report.");

    m.def("padic_trace",
          [](const std::string& kind, std::size_t n, const std::string& target, std::uint64_t p,
             unsigned n_lo, unsigned n_hi, unsigned fold, long x0) {
              const auto k = parse_integral(kind);
              if (!k) {
                  throw py::value_error("unknown integral kind '" + kind + "'");
              }
              const Rat t = Rat::parse(target);
              return trace_json(convergence_trace(*k, Integrand::binomial(n), t, p, n_lo, n_hi, fold, Rat(x0)));
          },
          py::arg("kind"), py::arg("n"), py::arg("target"), py::arg("p") = 3, py::arg("n_lo") = 1,
          py::arg("n_hi") = 4, py::arg("fold") = 1, py::arg("x0") = 0, "Valuation trace as JSON text.");

    m.def("evaluate",
          [](const std::string& src, std::size_t trunc) {
              const TSeries s = dsl::evaluate(src, trunc);
              std::vector<Coeffs> out;
              for (const auto& c : s.coeffs()) {
                  out.push_back(coeffs_of(c));
              }
              return out;
          },
          py::arg("expr"), py::arg("T") = 8, "Series coefficients of t^0..t^T, each ascending in x.");
}
