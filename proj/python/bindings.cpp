#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hermcert/bergman.hpp"
#include "hermcert/parse.hpp"
#include "hermcert/report.hpp"

namespace py = pybind11;
using namespace hermcert;

namespace {

py::object scalar_to_py(const Scalar& c) {
    // exact parts as "num/den" strings; lossless and Fraction-friendly
    return py::make_tuple(rational_str(c.re), rational_str(c.im));
}

py::list form_entries(const HermitianForm& P) {
    py::list out;
    for (const auto& [key, c] : P.C)
        out.append(py::make_tuple(key.first, key.second, scalar_to_py(c)));
    return out;
}

py::dict certificate_dict(const CertificateReport& cert) {
    py::dict d;
    d["verdict"] = verdict_str(cert.verdict);
    d["minimal_exponent"] =
        cert.minimal_exponent ? py::object(py::int_(*cert.minimal_exponent)) : py::none();
    d["search_bound"] = cert.search_bound;
    d["min_eigenvalue_trace"] = cert.min_eigenvalue_trace;
    if (cert.witness_divisor) {
        py::list terms;
        for (const auto& [a, c] : cert.witness_divisor->coeffs)
            terms.append(py::make_tuple(a, scalar_to_py(c)));
        d["base_divisor"] = terms;
    }
    if (cert.obstruction) {
        py::dict ob;
        if (cert.obstruction->complex_chart_point) {
            ob["chart_point"] = scalar_to_py(*cert.obstruction->complex_chart_point);
        } else {
            ob["point"] = py::make_tuple(rational_str(cert.obstruction->point.a),
                                         rational_str(cert.obstruction->point.b));
        }
        ob["exact_zero"] = cert.obstruction->exact_zero;
        ob["jet_mu"] = cert.obstruction->jet.mu;
        ob["jet_pass"] = cert.obstruction->jet.pass;
        d["obstruction"] = ob;
    }
    return d;
}

P1Point point_from_str(const std::string& a, const std::string& b) {
    return P1Point{parse_rational(a), parse_rational(b)};
}

}  // namespace

PYBIND11_MODULE(_hermcert, m) {
    m.doc() = "Exact certificates for Hermitian algebraic forms on projective space";

    py::class_<HermitianForm>(m, "Form")
        .def_readonly("n", &HermitianForm::n)
        .def_readonly("d", &HermitianForm::d)
        .def("entries", &form_entries)
        .def("expr", &print_form)
        .def("is_diagonal", &HermitianForm::is_diagonal)
        .def("__eq__", [](const HermitianForm& a, const HermitianForm& b) { return a == b; })
        .def("__add__", [](const HermitianForm& a, const HermitianForm& b) { return a + b; })
        .def("__sub__", [](const HermitianForm& a, const HermitianForm& b) { return a - b; })
        .def("__mul__", [](const HermitianForm& a, const HermitianForm& b) { return product(a, b); })
        .def("__repr__",
             [](const HermitianForm& P) {
                 return "<Form n=" + std::to_string(P.n) + " d=" + std::to_string(P.d) + " " +
                        std::to_string(P.C.size()) + " entries>";
             });

    m.def("parse", [](const std::string& text) { return parse_form(text).form; },
          "Parse a form expression (sq / normK grammar)");
    m.def("from_matrix_json", &form_from_matrix_json);
    m.def("to_matrix_json", &matrix_entries_json);
    m.def("norm_power", &norm_power, py::arg("n"), py::arg("m"));

    m.def("signature", [](const HermitianForm& P) { return signature(P); },
          "Exact (positive, negative) eigenvalue counts");
    m.def("is_psd", &psd_exact, "Exact positive semidefiniteness");
    m.def("eval_diag",
          [](const HermitianForm& P, const std::vector<std::complex<double>>& v) {
              return eval_diag(P, v);
          });
    m.def("eval_diag_exact",
          [](const HermitianForm& P, const std::vector<std::string>& v) {
              std::vector<Scalar> pt;
              for (const auto& s : v) pt.emplace_back(parse_rational(s));
              return eval_diag(P, pt).str();
          },
          "Exact diagonal evaluation at a rational point; result as a string");

    m.def("distinguished_signature",
          [](const HermitianForm& P) {
              DistinguishedBasis b = distinguished_basis(P);
              return py::make_tuple(b.k, b.l);
          },
          "Floating (k, l) from the distinguished-basis eigensplit");

    m.def("quillen_minimal_exponent",
          [](const HermitianForm& P, int m_max) {
              return certificate_dict(quillen_minimal_exponent(P, norm_power(P.n, 1), m_max));
          },
          py::arg("form"), py::arg("m_max"));

    m.def("qsn_decide_p1",
          [](const HermitianForm& P, int m_max, unsigned seed) {
              SamplingPlan plan;
              plan.seed = seed;
              return certificate_dict(qsn_decide_p1(P, m_max, plan));
          },
          py::arg("form"), py::arg("m_max") = 20, py::arg("seed") = 1);

    m.def("pullback",
          [](const HermitianForm& P, const std::vector<std::string>& components) {
              std::vector<HoloSection> comps;
              for (const auto& c : components) comps.push_back(parse_section(c, 1));
              int n_target = (int)comps.size() - 1;
              return pullback(P, RationalCurve(n_target, std::move(comps)));
          },
          py::arg("form"), py::arg("curve"));

    m.def("base_divisor_factor", [](const HermitianForm& P) {
        DivisorP1 div = base_divisor_factor(P);
        py::list terms;
        for (const auto& [a, c] : div.s_D.coeffs) terms.append(py::make_tuple(a, scalar_to_py(c)));
        return py::make_tuple(terms, div.residual);
    });

    m.def("jet_check_p1",
          [](const HermitianForm& P, const std::string& a, const std::string& b) {
              JetResult jet = jet_check(local_expansion(P, point_from_str(a, b)));
              py::dict d;
              d["pass"] = jet.pass;
              d["mu"] = jet.mu;
              py::list block;
              for (const auto& [jk, c] : jet.lowest_block)
                  block.append(py::make_tuple(jk.first, jk.second, scalar_to_py(c)));
              d["lowest_block"] = block;
              return d;
          },
          py::arg("form"), py::arg("a"), py::arg("b") = "1");

    m.def("modulus_ratio_exact_diagonal",
          [](const HermitianForm& P, const std::vector<std::string>& v) {
              std::vector<Scalar> pt;
              for (const auto& s : v) pt.emplace_back(parse_rational(s));
              return modulus_ratio_exact_diagonal(P, pt).str();
          });

    m.def("sgcs_check",
          [](const HermitianForm& R, int samples, unsigned seed) {
              SgcsReport r = sgcs_check(R, samples, seed);
              py::dict d;
              d["s1"] = r.s1_pass;
              d["s2"] = r.s2_pass;
              d["s3"] = r.s3_pass;
              d["pass"] = r.pass();
              return d;
          },
          py::arg("form"), py::arg("samples") = 40, py::arg("seed") = 1);

    m.def("blowup_chain",
          [](const std::string& form_text, const std::string& chain_text) {
              MixedExpression mx = parse_mixed_form(form_text);
              ChainSpec chain = parse_chain(chain_text, mx.vars);
              BlowupTrace trace = blowup_chain(mx.poly, chain.steps);
              py::list steps;
              for (std::size_t i = 0; i < trace.steps.size(); ++i) {
                  py::dict st;
                  st["vars"] = chain.var_names[i];
                  st["gamma"] = trace.steps[i].gamma;
                  st["gamma_cumulative"] = trace.steps[i].gamma_cumulative;
                  py::list prod;
                  for (const auto& [key, c] : trace.step_product(i).coeffs)
                      prod.append(py::make_tuple(key.first, key.second, scalar_to_py(c)));
                  st["product"] = prod;
                  steps.append(st);
              }
              return steps;
          },
          py::arg("form"), py::arg("chain"));

    m.def("bergman_asymptotics",
          [](const HermitianForm& R, const HermitianForm& P, const std::vector<int>& m_list,
             const std::vector<std::complex<double>>& probes) {
              AsymptoticsTable tab = diagonal_asymptotics(R, P, m_list, probes);
              py::dict d;
              py::list rows;
              for (const auto& row : tab.rows) {
                  py::dict r;
                  r["m"] = row.m;
                  r["rho"] = row.rho;
                  rows.append(r);
              }
              d["rows"] = rows;
              d["b1"] = tab.b1;
              d["b1_mean"] = tab.b1_mean;
              return d;
          },
          py::arg("R"), py::arg("P"), py::arg("m_list"), py::arg("probes"));

    m.def("cm_psd_onset", &cm_psd_onset, py::arg("R"), py::arg("P"), py::arg("m_max"));
}
