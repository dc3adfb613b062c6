#include "hermcert/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hermcert {

namespace {

struct GaussLegendre {
    std::vector<double> nodes;    // on (0, 1)
    std::vector<double> weights;
};

GaussLegendre gauss_legendre_unit(int n) {
    GaussLegendre out;
    out.nodes.resize(n);
    out.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        out.nodes[i] = 0.5 * (1.0 - x);  // map [-1,1] -> [0,1], reversed order is fine
        out.weights[i] = 1.0 / ((1.0 - x * x) * pp * pp);
    }
    return out;
}

struct ChartWeight {
    const MixedHermPoly* r;
    const MixedHermPoly* p;
    MixedHermPoly r_t, r_tb, r_ttb;
    int m;

    ChartWeight(const MixedHermPoly& rr, const MixedHermPoly& pp, int mm)
        : r(&rr), p(&pp), m(mm) {
        r_t = rr.derivative(0, true);
        r_tb = rr.derivative(0, false);
        r_ttb = r_t.derivative(0, false);
    }

    // L(t)/(pi r^m p), with L = del delbar log r evaluated from the exact
    // derivative polynomials
    double operator()(std::complex<double> t) const {
        std::vector<std::complex<double>> pt{t};
        double rv = r->eval(pt);
        double pv = p->eval(pt);
        std::complex<double> lap =
            (r_ttb.eval_complex(pt) * rv - r_t.eval_complex(pt) * r_tb.eval_complex(pt)) /
            (rv * rv);
        return lap.real() / (M_PI * std::pow(rv, m) * pv);
    }
};

// integral over the unit disk of t^j conj(t)^k W(t) dA, all (j,k) at once
std::vector<std::vector<std::complex<double>>> disk_moments(const ChartWeight& W, int D, int nr,
                                                            int ntheta) {
    const int N = D + 1;
    std::vector<std::vector<std::complex<double>>> M(N, std::vector<std::complex<double>>(N, 0.0));
    std::vector<std::vector<std::complex<double>>> comp = M;  // Kahan compensation
    GaussLegendre gl = gauss_legendre_unit(nr);
    std::vector<std::complex<double>> pw(N);
    for (int ir = 0; ir < nr; ++ir) {
        double s = gl.nodes[ir];
        double wr = gl.weights[ir] * s * (2.0 * M_PI / ntheta);
        for (int it = 0; it < ntheta; ++it) {
            double ang = 2.0 * M_PI * (it + 0.5) / ntheta;
            std::complex<double> t = std::polar(s, ang);
            double w = W(t) * wr;
            pw[0] = 1.0;
            for (int j = 1; j < N; ++j) pw[j] = pw[j - 1] * t;
            for (int j = 0; j < N; ++j)
                for (int k = 0; k < N; ++k) {
                    std::complex<double> term = w * pw[j] * std::conj(pw[k]);
                    std::complex<double> y = term - comp[j][k];
                    std::complex<double> acc = M[j][k] + y;
                    comp[j][k] = (acc - M[j][k]) - y;
                    M[j][k] = acc;
                }
        }
    }
    return M;
}

double mat_diff(const std::vector<std::vector<std::complex<double>>>& A,
                const std::vector<std::vector<std::complex<double>>>& B) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j) {
            num += std::norm(A[i][j] - B[i][j]);
            den += std::norm(B[i][j]);
        }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-300);
}

// lower-triangular complex Cholesky; throws if not positive definite
HermMatrix cholesky(const HermMatrix& G) {
    const int N = G.N;
    HermMatrix L(N);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j <= i; ++j) {
            std::complex<double> sum = G.at(i, j);
            for (int k = 0; k < j; ++k) sum -= L.at(i, k) * std::conj(L.at(j, k));
            if (i == j) {
                double d = sum.real();
                if (d <= 0) throw std::runtime_error("gram matrix not positive definite");
                L.at(i, i) = std::sqrt(d);
            } else {
                L.at(i, j) = sum / L.at(j, j).real();
            }
        }
    }
    return L;
}

}  // namespace

WeightSpec WeightSpec::unchecked(HermitianForm R, HermitianForm P, int m) {
    if (R.n != 1 || P.n != 1) throw std::invalid_argument("WeightSpec: forms must live on P^1");
    if (m < 1) throw std::invalid_argument("WeightSpec: m >= 1 required");
    return WeightSpec{std::move(R), std::move(P), m};
}

WeightSpec WeightSpec::checked(HermitianForm R, HermitianForm P, int m, unsigned seed) {
    WeightSpec spec = unchecked(std::move(R), std::move(P), m);
    auto sg = sgcs_check(spec.R, 40, seed);
    if (!sg.pass()) throw std::invalid_argument("WeightSpec: R fails the SGCS check");
    MixedHermPoly p_fin = dehomogenize(spec.P, 1), p_inf = dehomogenize(spec.P, 0);
    for (int i = 0; i < 500; ++i) {
        double radius = 2.0 * (i % 25 + 1) / 25.0;
        double ang = 2.0 * M_PI * i / 500.0;
        std::vector<std::complex<double>> t{std::polar(radius, ang)};
        if (p_fin.eval(t) <= 0 || p_inf.eval(t) <= 0)
            throw std::invalid_argument("WeightSpec: P not strictly positive on chart probe");
    }
    return spec;
}

KernelData gram_matrix(const WeightSpec& spec, const QuadraturePlan& quad) {
    KernelData K;
    K.m = spec.m;
    const int e = spec.R.d, d = spec.P.d;
    K.degree = spec.m * e + d;
    K.basis_dim = K.degree + 1;
    K.r_fin = dehomogenize(spec.R, 1);
    K.p_fin = dehomogenize(spec.P, 1);
    K.r_inf = dehomogenize(spec.R, 0);
    K.p_inf = dehomogenize(spec.P, 0);

    ChartWeight w_fin(K.r_fin, K.p_fin, spec.m);
    ChartWeight w_inf(K.r_inf, K.p_inf, spec.m);
    const int D = K.degree;

    int nr = quad.initial_radial, ntheta = quad.initial_angular;
    auto assemble = [&](int r_nodes, int t_nodes) {
        auto fin = disk_moments(w_fin, D, r_nodes, t_nodes);
        auto inf = disk_moments(w_inf, D, r_nodes, t_nodes);
        std::vector<std::vector<std::complex<double>>> G(
            D + 1, std::vector<std::complex<double>>(D + 1));
        for (int j = 0; j <= D; ++j)
            for (int k = 0; k <= D; ++k) G[j][k] = fin[j][k] + inf[D - j][D - k];
        return G;
    };

    auto G = assemble(nr, ntheta);
    double err = 1;
    for (int lvl = 0; lvl < quad.max_doublings; ++lvl) {
        nr *= 2;
        ntheta *= 2;
        auto G2 = assemble(nr, ntheta);
        err = mat_diff(G, G2);
        G = std::move(G2);
        if (err < quad.rel_tol) break;
    }
    K.quadrature_error_estimate = err;
    if (err >= quad.rel_tol)
        throw std::runtime_error("gram_matrix: quadrature did not converge (achieved " +
                                 std::to_string(err) + ")");

    K.gram = HermMatrix(D + 1);
    for (int j = 0; j <= D; ++j)
        for (int k = 0; k <= D; ++k) K.gram.at(j, k) = 0.5 * (G[j][k] + std::conj(G[k][j]));

    // rotational-mode orthogonality: diagonal weights kill j != k entries
    if (spec.R.is_diagonal() && spec.P.is_diagonal()) {
        double scale = K.gram.frobenius();
        for (int j = 0; j <= D; ++j)
            for (int k = 0; k <= D; ++k)
                if (j != k && std::abs(K.gram.at(j, k)) > 1e-10 * scale)
                    throw std::logic_error("gram_matrix: mode-orthogonality violated");
    }

    // orthonormal basis: S = (L^-1)^dagger for G = L L^dagger
    HermMatrix L = cholesky(K.gram);
    HermMatrix Linv(L.N);
    for (int i = 0; i < L.N; ++i) {
        Linv.at(i, i) = 1.0 / L.at(i, i).real();
        for (int j = i - 1; j >= 0; --j) {
            std::complex<double> sum = 0;
            for (int k = j + 1; k <= i; ++k) sum += Linv.at(i, k) * L.at(k, j);
            Linv.at(i, j) = -sum / L.at(j, j).real();
        }
    }
    K.orthonormal_coeffs = HermMatrix(L.N);
    for (int i = 0; i < L.N; ++i)
        for (int j = 0; j < L.N; ++j) K.orthonormal_coeffs.at(i, j) = std::conj(Linv.at(j, i));

    // orthonormality residual check
    double resid = 0;
    for (int a = 0; a < L.N; ++a)
        for (int b = 0; b < L.N; ++b) {
            std::complex<double> acc = 0;
            for (int j = 0; j < L.N; ++j)
                for (int k = 0; k < L.N; ++k)
                    acc += std::conj(K.orthonormal_coeffs.at(j, a)) * K.gram.at(j, k) *
                           K.orthonormal_coeffs.at(k, b);
            acc -= (a == b) ? 1.0 : 0.0;
            resid += std::norm(acc);
        }
    if (std::sqrt(resid) > 1e-8)
        throw std::runtime_error("gram_matrix: orthonormality residual too large");
    return K;
}

std::complex<double> kernel_eval(const KernelData& K, std::complex<double> x,
                                 std::complex<double> y) {
    const int N = K.basis_dim;
    std::vector<std::complex<double>> px(N), py(N);
    px[0] = py[0] = 1.0;
    for (int j = 1; j < N; ++j) {
        px[j] = px[j - 1] * x;
        py[j] = py[j - 1] * y;
    }
    std::complex<double> acc = 0;
    for (int a = 0; a < N; ++a) {
        std::complex<double> sx = 0, sy = 0;
        for (int j = 0; j < N; ++j) {
            sx += K.orthonormal_coeffs.at(j, a) * px[j];
            sy += K.orthonormal_coeffs.at(j, a) * py[j];
        }
        acc += sx * std::conj(sy);
    }
    return acc;
}

double reproducing_error(const KernelData& K, const WeightSpec& spec, const HoloSection& s) {
    if (s.n != 1 || s.d != K.degree)
        throw std::invalid_argument("reproducing_error: section degree mismatch");
    const int N = K.basis_dim, D = K.degree;
    std::vector<std::complex<double>> c(N, 0.0);
    for (const auto& [a, v] : s.coeffs) c[a[0]] = v.to_complex();

    double snorm2 = 0;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) snorm2 += (c[j] * K.gram.at(j, k) * std::conj(c[k])).real();
    double snorm = std::sqrt(std::max(snorm2, 1e-300));

    ChartWeight w_fin(K.r_fin, K.p_fin, K.m);
    ChartWeight w_inf(K.r_inf, K.p_inf, K.m);

    std::vector<std::complex<double>> probes;
    for (int i = 0; i < 8; ++i) probes.push_back(std::polar(0.1 + 0.1 * i, 0.77 * (i + 1)));

    // projection(x) = sum_a s^a(x) (s, s^a), with (s, s^a) integrated afresh
    const int nr = 160, ntheta = 320;
    GaussLegendre gl = gauss_legendre_unit(nr);
    std::vector<std::complex<double>> inner(N, 0.0);  // (s, s^a)
    auto accumulate = [&](const ChartWeight& w, bool infinity_chart) {
        for (int ir = 0; ir < nr; ++ir) {
            double srad = gl.nodes[ir];
            double wr = gl.weights[ir] * srad * (2.0 * M_PI / ntheta);
            for (int it = 0; it < ntheta; ++it) {
                std::complex<double> t = std::polar(srad, 2.0 * M_PI * (it + 0.5) / ntheta);
                double wq = w(t) * wr;
                std::vector<std::complex<double>> pw(N);
                pw[0] = 1.0;
                for (int j = 1; j < N; ++j) pw[j] = pw[j - 1] * t;
                // monomial t^j represents x^j y^(D-j); in the infinity chart its
                // local expression is u^(D-j)
                std::complex<double> sval = 0;
                for (int j = 0; j < N; ++j) sval += c[j] * (infinity_chart ? pw[D - j] : pw[j]);
                for (int a = 0; a < N; ++a) {
                    std::complex<double> sa = 0;
                    for (int j = 0; j < N; ++j)
                        sa += K.orthonormal_coeffs.at(j, a) * (infinity_chart ? pw[D - j] : pw[j]);
                    inner[a] += wq * sval * std::conj(sa);
                }
            }
        }
    };
    accumulate(w_fin, false);
    accumulate(w_inf, true);

    double worst = 0;
    for (const auto& x : probes) {
        std::vector<std::complex<double>> px(N);
        px[0] = 1.0;
        for (int j = 1; j < N; ++j) px[j] = px[j - 1] * x;
        std::complex<double> proj = 0, direct = 0;
        for (int a = 0; a < N; ++a) {
            std::complex<double> sa = 0;
            for (int j = 0; j < N; ++j) sa += K.orthonormal_coeffs.at(j, a) * px[j];
            proj += inner[a] * sa;
        }
        for (int j = 0; j < N; ++j) direct += c[j] * px[j];
        worst = std::max(worst, std::abs(proj - direct) / snorm);
    }
    return worst;
}

AsymptoticsTable diagonal_asymptotics(const HermitianForm& R, const HermitianForm& P,
                                      const std::vector<int>& m_list,
                                      const std::vector<std::complex<double>>& probes,
                                      const QuadraturePlan& quad) {
    if (m_list.size() < 2) throw std::invalid_argument("diagonal_asymptotics: need >= 2 values of m");
    for (std::size_t i = 1; i < m_list.size(); ++i)
        if (m_list[i] <= m_list[i - 1])
            throw std::invalid_argument("diagonal_asymptotics: m_list must increase");
    AsymptoticsTable table;
    for (int m : m_list) {
        WeightSpec spec = WeightSpec::unchecked(R, P, m);
        KernelData K = gram_matrix(spec, quad);
        AsymptoticsRow row;
        row.m = m;
        for (const auto& x : probes) {
            std::vector<std::complex<double>> pt{x};
            double weight = std::pow(K.r_fin.eval(pt), m) * K.p_fin.eval(pt);
            row.rho.push_back(kernel_eval(K, x, x).real() / weight / m);
        }
        table.rows.push_back(std::move(row));
    }
    // least squares of (rho_m - 1) = (-b1) * (1/m) through the origin
    table.b1.assign(probes.size(), 0.0);
    for (std::size_t p = 0; p < probes.size(); ++p) {
        double num = 0, den = 0;
        for (const auto& row : table.rows) {
            double x = 1.0 / row.m;
            num += (row.rho[p] - 1.0) * x;
            den += x * x;
        }
        table.b1[p] = -num / den;
        table.b1_mean += table.b1[p];
    }
    if (!probes.empty()) table.b1_mean /= (double)probes.size();
    return table;
}

namespace {

// floating sparse form product, independent of the exact algebra route
using FloatEntries = std::map<std::pair<MultiIndex, MultiIndex>, std::complex<double>>;

FloatEntries to_entries(const HermitianForm& F) {
    FloatEntries out;
    for (const auto& [key, c] : F.C) out[key] = c.to_complex();
    return out;
}

FloatEntries convolve(const FloatEntries& A, const FloatEntries& B) {
    FloatEntries out;
    for (const auto& [ka, va] : A)
        for (const auto& [kb, vb] : B)
            out[{mi_add(ka.first, kb.first), mi_add(ka.second, kb.second)}] += va * vb;
    return out;
}

}  // namespace

double cm_diagonal_min(const HermitianForm& R, const HermitianForm& P, int m) {
    FloatEntries acc = to_entries(P);
    FloatEntries r = to_entries(R);
    for (int i = 0; i < m; ++i) acc = convolve(acc, r);
    MonomialBasis basis(P.n, P.d + m * R.d);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& a : basis.elements()) {
        auto it = acc.find({a, a});
        best = std::min(best, it == acc.end() ? 0.0 : it->second.real());
    }
    return best;
}

int cm_psd_onset(const HermitianForm& R, const HermitianForm& P, int m_max) {
    for (int m = 0; m <= m_max; ++m)
        if (cm_diagonal_min(R, P, m) >= 0) return m;
    return -1;
}

}  // namespace hermcert
