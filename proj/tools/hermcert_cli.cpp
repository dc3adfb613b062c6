#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hermcert/bergman.hpp"
#include "hermcert/parse.hpp"
#include "hermcert/report.hpp"

using namespace hermcert;

namespace {

struct Opts {
    std::string form;
    std::string matrix;
    std::string weight;
    std::vector<std::string> curves;
    std::string chain;
    std::string json_out;
    int mmax = 10;
    int samples = 512;
    unsigned seed = 1;
    double tol = 1e-9;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --form accepts an inline expression or a path to a file holding one
std::string form_text(const std::string& arg) {
    if (std::filesystem::exists(arg)) return slurp(arg);
    return arg;
}

HermitianForm load_form(const Opts& o, Json& input_echo) {
    if (!o.matrix.empty()) {
        input_echo["matrix"] = o.matrix;
        return form_from_matrix_json(slurp(o.matrix));
    }
    if (o.form.empty()) throw std::runtime_error("--form or --matrix is required");
    std::string text = form_text(o.form);
    input_echo["form"] = text;
    return parse_form(text).form;
}

RationalCurve load_curve(const std::string& spec) {
    std::vector<HoloSection> comps;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t semi = spec.find(';', start);
        std::string part = spec.substr(start, semi == std::string::npos ? semi : semi - start);
        start = (semi == std::string::npos) ? spec.size() + 1 : semi + 1;
        comps.push_back(parse_section(part, 1));
    }
    int n_target = (int)comps.size() - 1;
    return RationalCurve(n_target, std::move(comps));
}

Json json_mixed(const MixedHermPoly& p, const std::vector<std::string>& vars) {
    Json entries = Json::array();
    for (const auto& [key, c] : p.coeffs)
        entries.push_back(Json{{"alpha", json_multiindex(key.first)},
                               {"beta", json_multiindex(key.second)},
                               {"coeff", json_scalar(c)}});
    return Json{{"vars", vars}, {"entries", entries}};
}

Json json_point(const std::vector<std::complex<double>>& v) {
    Json out = Json::array();
    for (const auto& c : v) out.push_back(Json{c.real(), c.imag()});
    return out;
}

int cmd_diagonalize(const Opts& o, Json& rep) {
    HermitianForm P = load_form(o, rep["input_echo"]);
    auto [k, l] = signature(P);
    rep["signature"] = Json{k, l};
    rep["verdict"] = "pass";
    DistinguishedBasis basis = distinguished_basis(P);
    Json f = Json::array(), g = Json::array();
    for (const auto& s : basis.f) f.push_back(json_float_section(s));
    for (const auto& s : basis.g) g.push_back(json_float_section(s));
    add_witness(rep, "distinguished_basis", Json{{"f", f}, {"g", g}});
    return 0;
}

int cmd_certify_quillen(const Opts& o, Json& rep) {
    HermitianForm P = load_form(o, rep["input_echo"]);
    CertificateReport cert = quillen_minimal_exponent(P, norm_power(P.n, 1), o.mmax);
    apply_certificate(rep, cert);
    return 0;
}

int cmd_ratio_estimate(const Opts& o, Json& rep) {
    HermitianForm P = load_form(o, rep["input_echo"]);
    DistinguishedBasis basis = distinguished_basis(P);
    rep["signature"] = Json{basis.k, basis.l};
    SamplingPlan plan;
    plan.sphere_samples = o.samples;
    plan.seed = o.seed;
    RatioEstimate est = modulus_ratio_estimate(P, basis, plan);
    rep["diagnostics"]["sup_ratio"] = est.sup_estimate;
    rep["verdict"] = est.degenerate ? "inconclusive" : "pass";
    if (!est.arg_max.empty()) add_witness(rep, "ratio_arg_max", json_point(est.arg_max));
    return 0;
}

int cmd_qsn_p1(const Opts& o, Json& rep) {
    HermitianForm P = load_form(o, rep["input_echo"]);
    if (P.n != 1) throw std::runtime_error("qsn-p1 expects a form on P^1 (variables z0, z1)");
    SamplingPlan plan;
    plan.sphere_samples = o.samples;
    plan.seed = o.seed;
    CertificateReport cert = qsn_decide_p1(P, o.mmax, plan);
    apply_certificate(rep, cert);
    return 0;
}

int cmd_pullback(const Opts& o, Json& rep) {
    HermitianForm P = load_form(o, rep["input_echo"]);
    if (o.curves.size() != 1) throw std::runtime_error("pullback expects exactly one --curve");
    rep["input_echo"]["curve"] = o.curves[0];
    HermitianForm Q = pullback(P, load_curve(o.curves[0]));
    add_witness(rep, "pullback_form", json_form(Q));
    DivisorP1 div = base_divisor_factor(Q);
    add_witness(rep, "base_divisor", json_section(div.s_D));
    add_witness(rep, "residual_form", json_form(div.residual));
    rep["verdict"] = "pass";
    return 0;
}

int cmd_jet_scan(const Opts& o, Json& rep) {
    HermitianForm P = load_form(o, rep["input_echo"]);
    std::vector<RationalCurve> curves;
    if (o.curves.empty()) {
        if (P.n != 1)
            throw std::runtime_error("jet-scan without --curve expects a form on P^1");
        // identity curve [x : y]
        curves.emplace_back(1, std::vector<HoloSection>{
                                   HoloSection::monomial(1, {1, 0}), HoloSection::monomial(1, {0, 1})});
    } else {
        rep["input_echo"]["curves"] = o.curves;
        for (const auto& c : o.curves) curves.push_back(load_curve(c));
    }
    JppReport scan = jpp_scan(P, curves, {});
    rep["verdict"] = scan.failure_found ? "fail" : "pass";
    Json data{{"centers_checked", scan.centers_checked}};
    if (scan.failure) {
        data["curve_index"] = scan.failure->curve_index;
        data["center"] = Json{json_rational(scan.failure->center.a),
                              json_rational(scan.failure->center.b)};
        data["jet_mu"] = scan.failure->jet.mu;
        Json block = Json::array();
        for (const auto& [jk, c] : scan.failure->jet.lowest_block)
            block.push_back(Json{{"j", jk.first}, {"k", jk.second}, {"coeff", json_scalar(c)}});
        data["jet_lowest_block"] = block;
    }
    add_witness(rep, "jet_scan", data);
    return 0;
}

int cmd_blowup(const Opts& o, Json& rep) {
    if (o.form.empty()) throw std::runtime_error("--form is required");
    if (o.chain.empty()) throw std::runtime_error("--chain is required");
    std::string text = form_text(o.form);
    rep["input_echo"]["form"] = text;
    rep["input_echo"]["chain"] = o.chain;
    MixedExpression mx = parse_mixed_form(text);
    if (!mx.poly.is_real_valued()) throw std::runtime_error("blowup input is not real-valued");
    ChainSpec chain = parse_chain(o.chain, mx.vars);
    BlowupTrace trace = blowup_chain(mx.poly, chain.steps);
    Json steps = Json::array();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const BlowupStep& st = trace.steps[i];
        steps.push_back(Json{{"vars", chain.var_names[i]},
                             {"gamma", json_multiindex(st.gamma)},
                             {"gamma_cumulative", json_multiindex(st.gamma_cumulative)},
                             {"product", json_mixed(trace.step_product(i), chain.var_names[i])}});
    }
    add_witness(rep, "blowup_trace", steps);
    add_witness(rep, "final_reduced", json_mixed(trace.final_reduced, chain.var_names.back()));
    rep["verdict"] = "pass";
    return 0;
}

int cmd_bergman(const Opts& o, Json& rep) {
    HermitianForm R = o.form.empty() ? norm_power(1, 1) : parse_form(form_text(o.form)).form;
    HermitianForm P = o.weight.empty() ? HermitianForm::unit(1) : parse_form(form_text(o.weight)).form;
    rep["input_echo"]["form"] = o.form.empty() ? std::string("normK(1)") : form_text(o.form);
    if (!o.weight.empty()) rep["input_echo"]["weight"] = form_text(o.weight);
    int mmax = std::max(o.mmax, 2);
    rep["input_echo"]["mmax"] = mmax;
    WeightSpec spec = WeightSpec::checked(R, P, mmax, o.seed);

    QuadraturePlan quad;
    KernelData K = gram_matrix(spec, quad);
    rep["diagnostics"]["quadrature_error"] = K.quadrature_error_estimate;
    Json gram = Json::array();
    for (int j = 0; j < K.gram.N; ++j) {
        Json row = Json::array();
        for (int k = 0; k < K.gram.N; ++k)
            row.push_back(Json{K.gram.at(j, k).real(), K.gram.at(j, k).imag()});
        gram.push_back(row);
    }
    add_witness(rep, "gram_matrix", Json{{"m", K.m}, {"basis_dim", K.basis_dim}, {"entries", gram}});

    std::vector<int> m_list;
    for (int m : {mmax / 4, mmax / 2, (3 * mmax) / 4, mmax})
        if (m >= 1 && (m_list.empty() || m > m_list.back())) m_list.push_back(m);
    std::vector<std::complex<double>> probes;
    for (int i = 0; i < 8; ++i) probes.push_back(std::polar(0.2 + 0.08 * i, 0.7 * (i + 1)));
    if (m_list.size() >= 2) {
        AsymptoticsTable tab = diagonal_asymptotics(R, P, m_list, probes, quad);
        Json rows = Json::array();
        for (const auto& row : tab.rows) rows.push_back(Json{{"m", row.m}, {"rho", row.rho}});
        add_witness(rep, "diagonal_asymptotics",
                    Json{{"rows", rows}, {"b1", tab.b1}, {"b1_mean", tab.b1_mean}});
    }
    rep["verdict"] = "pass";
    return 0;
}

int cmd_gcurv(const Opts& o, Json& rep) {
    HermitianForm R = load_form(o, rep["input_echo"]);
    SgcsReport sg = sgcs_check(R, std::max(o.samples, 1), o.seed);
    rep["verdict"] = sg.pass() ? "pass" : "fail";
    add_witness(rep, "sgcs",
                Json{{"s1", sg.s1_pass},
                     {"s2", sg.s2_pass},
                     {"s3", sg.s3_pass},
                     {"worst_diagonal", sg.worst_diagonal},
                     {"worst_offfiber_det", sg.worst_offfiber_det},
                     {"worst_samefiber_det", sg.worst_samefiber_det},
                     {"worst_curvature_eigenvalue", sg.worst_curvature_eigenvalue}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certificates for Hermitian algebraic forms on projective space"};
    app.require_subcommand(1);

    Opts o;
    std::string command;
    std::vector<std::pair<const char*, int (*)(const Opts&, Json&)>> handlers = {
        {"diagonalize", cmd_diagonalize}, {"certify-quillen", cmd_certify_quillen},
        {"ratio-estimate", cmd_ratio_estimate}, {"qsn-p1", cmd_qsn_p1},
        {"pullback", cmd_pullback}, {"jet-scan", cmd_jet_scan},
        {"blowup", cmd_blowup}, {"bergman", cmd_bergman}, {"gcurv", cmd_gcurv}};

    for (auto& [name, fn] : handlers) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--form", o.form, "form expression or file");
        sub->add_option("--matrix", o.matrix, "JSON entry-list file");
        sub->add_option("--weight", o.weight, "weight form expression (bergman)");
        sub->add_option("--curve", o.curves, "curve components h0;h1;...");
        sub->add_option("--chain", o.chain, "blowup chain");
        sub->add_option("--json-out", o.json_out, "also write the report here");
        sub->add_option("--mmax", o.mmax, "exponent search bound");
        sub->add_option("--seed", o.seed, "sampling seed");
        sub->add_option("--samples", o.samples, "sample count");
        sub->add_option("--tol", o.tol, "floating tolerance");
        sub->callback([&command, name = name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << e.what() << "\n";
        return 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    Json rep = report_base(command, Json::object());
    try {
        for (auto& [name, fn] : handlers)
            if (command == name) fn(o, rep);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                  .count();
    return emit_report(std::move(rep), ms, o.json_out);
}
