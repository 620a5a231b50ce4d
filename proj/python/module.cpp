#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bernid/cache_file.hpp"
#include "bernid/identities.hpp"
#include "bernid/special.hpp"

namespace py = pybind11;
using namespace bernid;

namespace {

// Rationals cross the boundary as fractions.Fraction, built from the canonical "a/b" text.
py::object fraction(const Rat& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(r.str());
}

py::list fractions(const std::vector<Rat>& v) {
    py::list out;
    for (const auto& r : v) out.append(fraction(r));
    return out;
}

py::dict report_dict(const VerifyReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["n"] = r.params.n;
    d["p"] = r.params.p;
    d["q"] = r.params.q;
    d["holds"] = r.holds();
    d["skipped"] = r.skipped();
    d["residual"] = to_string(r.residual);
    d["elapsed_ms"] = r.elapsed.count();
    return d;
}

Range to_range(std::pair<long, long> r) { return {r.first, r.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Bernoulli/Euler polynomials and identity verification";

    m.def("bernoulli_number", [](long n) { return fraction(bernoulli_number(n)); }, py::arg("n"));
    m.def("bernoulli_poly", [](long n) { return fractions(bernoulli_poly(n).coeffs()); }, py::arg("n"),
          "Coefficients of B_n(x), constant term first.");
    m.def("euler_poly", [](long n) { return fractions(euler_poly(n).coeffs()); }, py::arg("n"),
          "Coefficients of E_n(x), constant term first.");
    m.def("bernoulli_poly_str", [](long n) { return to_string(bernoulli_poly(n)); }, py::arg("n"));
    m.def("euler_poly_str", [](long n) { return to_string(euler_poly(n)); }, py::arg("n"));
    m.def("harmonic", [](long n) { return fraction(harmonic(n)); }, py::arg("n"));
    m.def("bbar", [](long k) { return fraction(bbar(k)); }, py::arg("k"));
    m.def("euler_at_zero", [](long l) { return fraction(euler_at_zero(l)); }, py::arg("l"));

    m.def("catalog", [] {
        py::list out;
        for (const auto& s : catalog()) {
            py::dict d;
            d["id"] = s.id;
            d["arity"] = std::string(to_string(s.arity));
            d["summary"] = s.summary;
            d["pole"] = s.pole;
            d["domain"] = s.domain.describe();
            d["negative_control"] = s.negative_control;
            out.append(d);
        }
        return out;
    });
    m.def("catalog_ids", &catalog_ids, py::arg("include_negative_controls") = true);

    m.def(
        "verify",
        [](const std::string& id, long n, long p, long q) {
            VerifyReport r;
            {
                py::gil_scoped_release nogil;
                r = verify(id, {n, p, q});
            }
            return report_dict(r);
        },
        py::arg("id"), py::arg("n"), py::arg("p") = 0, py::arg("q") = 0);
    m.def(
        "verify_sweep",
        [](const std::vector<std::string>& ids, std::pair<long, long> n, std::pair<long, long> p,
           std::pair<long, long> q, unsigned threads) {
            std::vector<VerifyReport> reports;
            {
                py::gil_scoped_release nogil;
                reports = verify_sweep(ids, to_range(n), to_range(p), to_range(q), threads);
            }
            py::list out;
            for (const auto& r : reports) out.append(report_dict(r));
            return out;
        },
        py::arg("ids"), py::arg("n"), py::arg("p") = std::pair<long, long>{0, 0},
        py::arg("q") = std::pair<long, long>{0, 0}, py::arg("threads") = 0u,
        "Inclusive (lo, hi) ranges; out-of-domain tuples come back with skipped=True.");

    m.def(
        "beta_hockey_stick_residual",
        [](long n, long l, long p, long q) { return fraction(beta_hockey_stick_residual(n, l, p, q)); },
        py::arg("n"), py::arg("l"), py::arg("p"), py::arg("q"));
    m.def("dunne_schubert_residual", [](long n, long p) { return fraction(dunne_schubert_residual(n, p)); },
          py::arg("n"), py::arg("p"));

    m.def(
        "save_cache",
        [](const std::string& path, long n_max) {
            bernoulli_cache().ensure(n_max);
            save_bernoulli_cache(path, bernoulli_cache());
        },
        py::arg("path"), py::arg("n_max"));
    m.def("load_cache", [](const std::string& path) { return load_bernoulli_cache(path, bernoulli_cache()); },
          py::arg("path"), "Seeds the process cache from a file; returns the number of entries.");
}
