#include "hermcert/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hermcert {

double HermMatrix::frobenius() const {
    double s = 0;
    for (const auto& z : a) s += std::norm(z);
    return std::sqrt(s);
}

bool HermMatrix::is_hermitian(double rel_tol) const {
    double scale = 0;
    for (const auto& z : a) scale = std::max(scale, std::abs(z));
    if (scale == 0) return true;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j <= i; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > rel_tol * scale) return false;
    return true;
}

HermMatrix to_float(const HermitianForm& P) {
    MonomialBasis basis(P.n, P.d);
    HermMatrix M((int)basis.size());
    for (const auto& [key, c] : P.C) {
        int i = (int)basis.rank(key.first);
        int j = (int)basis.rank(key.second);
        std::complex<double> z = c.to_complex();
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::overflow_error("to_float: rational does not fit in a double");
        M.at(i, j) += z;
    }
    return M;
}

EigenDecomposition jacobi_eigh(const HermMatrix& Min) {
    if (!Min.is_hermitian()) throw std::invalid_argument("jacobi_eigh: matrix not Hermitian");
    const int N = Min.N;
    HermMatrix M = Min;
    HermMatrix U(N);
    for (int i = 0; i < N; ++i) U.at(i, i) = 1.0;

    const double norm = M.frobenius();
    const double stop = 1e-12 * norm;
    auto offdiag = [&]() {
        double s = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (i != j) s += std::norm(M.at(i, j));
        return std::sqrt(s);
    };

    int sweeps = 0;
    while (norm > 0 && offdiag() > stop) {
        if (++sweeps > 100) throw std::runtime_error("jacobi_eigh: no convergence in 100 sweeps");
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                std::complex<double> g = M.at(p, q);
                double r = std::abs(g);
                if (r <= 1e-300) continue;
                std::complex<double> phase = g / r;  // e^{i phi}
                double alpha = M.at(p, p).real(), beta = M.at(q, q).real();
                double tau = (beta - alpha) / (2 * r);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1.0 / std::sqrt(1 + t * t);
                double s = t * c;
                std::complex<double> sp = s * std::conj(phase);
                // columns: V[p][p]=c, V[q][p]=-s*conj(phase), V[p][q]=s, V[q][q]=c*conj(phase)
                for (int i = 0; i < N; ++i) {
                    auto mip = M.at(i, p), miq = M.at(i, q);
                    M.at(i, p) = c * mip - sp * miq;
                    M.at(i, q) = s * mip + c * std::conj(phase) * miq;
                }
                for (int j = 0; j < N; ++j) {
                    auto mpj = M.at(p, j), mqj = M.at(q, j);
                    M.at(p, j) = c * mpj - std::conj(sp) * mqj;
                    M.at(q, j) = s * mpj + c * phase * mqj;
                }
                for (int i = 0; i < N; ++i) {
                    auto uip = U.at(i, p), uiq = U.at(i, q);
                    U.at(i, p) = c * uip - sp * uiq;
                    U.at(i, q) = s * uip + c * std::conj(phase) * uiq;
                }
            }
        }
    }

    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(N);
    for (int i = 0; i < N; ++i) diag[i] = M.at(i, i).real();
    std::sort(order.begin(), order.end(), [&](int i, int j) { return diag[i] > diag[j]; });

    EigenDecomposition out;
    out.eigenvalues.resize(N);
    out.U = HermMatrix(N);
    for (int k = 0; k < N; ++k) {
        out.eigenvalues[k] = diag[order[k]];
        for (int i = 0; i < N; ++i) out.U.at(i, k) = U.at(i, order[k]);
    }
    return out;
}

std::vector<std::vector<Scalar>> exact_matrix(const HermitianForm& P) {
    MonomialBasis basis(P.n, P.d);
    std::vector<std::vector<Scalar>> M(basis.size(), std::vector<Scalar>(basis.size()));
    for (const auto& [key, c] : P.C)
        M[basis.rank(key.first)][basis.rank(key.second)] += c;
    return M;
}

Inertia rational_inertia(std::vector<std::vector<Scalar>> M) {
    const std::size_t N = M.size();
    std::vector<bool> active(N, true);
    Inertia inr;
    std::size_t remaining = N;
    while (remaining > 0) {
        // 1x1 pivot on a nonzero diagonal entry
        std::size_t p = N;
        for (std::size_t i = 0; i < N; ++i)
            if (active[i] && !M[i][i].is_zero()) { p = i; break; }
        if (p < N) {
            const mpq_class d = M[p][p].re;  // diagonal of a Hermitian matrix is real
            if (d > 0) ++inr.positive; else ++inr.negative;
            active[p] = false;
            --remaining;
            const Scalar dp(d);
            for (std::size_t i = 0; i < N; ++i) {
                if (!active[i] || M[i][p].is_zero()) continue;
                const Scalar f = M[i][p] / dp;
                for (std::size_t j = 0; j < N; ++j)
                    if (active[j] && !M[p][j].is_zero()) M[i][j] -= f * M[p][j];
            }
            continue;
        }
        // all remaining diagonals are zero: look for a 2x2 pivot
        std::size_t q = N;
        for (std::size_t i = 0; i < N && p == N; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < N; ++j)
                if (active[j] && !M[i][j].is_zero()) { p = i; q = j; break; }
        }
        if (p == N) {  // remaining block is identically zero
            inr.zero += (int)remaining;
            break;
        }
        // block [[0, a],[conj(a), 0]] has inertia (1, 1)
        ++inr.positive;
        ++inr.negative;
        const Scalar a = M[p][q];
        active[p] = active[q] = false;
        remaining -= 2;
        const Scalar inv_a = Scalar(1) / a;
        const Scalar inv_ac = Scalar(1) / a.conj();
        for (std::size_t i = 0; i < N; ++i) {
            if (!active[i]) continue;
            const Scalar mip = M[i][p], miq = M[i][q];
            if (mip.is_zero() && miq.is_zero()) continue;
            for (std::size_t j = 0; j < N; ++j) {
                if (!active[j]) continue;
                M[i][j] -= mip * inv_ac * M[q][j] + miq * inv_a * M[p][j];
            }
        }
    }
    return inr;
}

bool psd_exact(const HermitianForm& P) {
    return rational_inertia(exact_matrix(P)).negative == 0;
}

std::pair<int, int> signature(const HermitianForm& P) {
    auto inr = rational_inertia(exact_matrix(P));
    return {inr.positive, inr.negative};
}

}  // namespace hermcert
