#include "hermcert/decomp.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hermcert {

std::complex<double> FloatSection::eval(const std::vector<std::complex<double>>& v) const {
    MonomialBasis basis(n, d);
    std::complex<double> r = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        std::complex<double> m = 1;
        const auto& a = basis.unrank(i);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (int e = 0; e < a[j]; ++e) m *= v[j];
        r += coeffs[i] * m;
    }
    return r;
}

std::complex<double> FloatForm::eval_pair(const std::vector<std::complex<double>>& v,
                                          const std::vector<std::complex<double>>& w) const {
    MonomialBasis basis(n, d);
    std::vector<std::complex<double>> mv(basis.size()), mw(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::complex<double> pv = 1, pw = 1;
        const auto& a = basis.unrank(i);
        for (std::size_t j = 0; j < a.size(); ++j)
            for (int e = 0; e < a[j]; ++e) { pv *= v[j]; pw *= w[j]; }
        mv[i] = pv;
        mw[i] = pw;
    }
    std::complex<double> r = 0;
    for (int i = 0; i < C.N; ++i)
        for (int j = 0; j < C.N; ++j)
            if (C.at(i, j) != 0.0) r += C.at(i, j) * mv[i] * std::conj(mw[j]);
    return r;
}

DistinguishedBasis distinguished_basis(const HermitianForm& P) {
    if (P.is_zero()) throw std::invalid_argument("distinguished_basis: zero form");
    HermMatrix M = to_float(P);
    auto eig = jacobi_eigh(M);
    const double cutoff = 1e-10 * M.frobenius();
    DistinguishedBasis basis;
    basis.n = P.n;
    basis.d = P.d;
    const int N = M.N;
    for (int i = 0; i < N; ++i) {
        double lam = eig.eigenvalues[i];
        if (std::abs(lam) <= cutoff) continue;
        FloatSection s;
        s.n = P.n;
        s.d = P.d;
        s.coeffs.resize(N);
        double w = std::sqrt(std::abs(lam));
        for (int r = 0; r < N; ++r) s.coeffs[r] = w * eig.U.at(r, i);
        if (lam > 0)
            basis.f.push_back(std::move(s));
        else
            basis.g.push_back(std::move(s));
    }
    basis.k = (int)basis.f.size();
    basis.l = (int)basis.g.size();
    return basis;
}

HermMatrix reexpand(const DistinguishedBasis& basis) {
    MonomialBasis mb(basis.n, basis.d);
    HermMatrix M((int)mb.size());
    auto accumulate = [&](const FloatSection& s, double sign) {
        for (int i = 0; i < M.N; ++i)
            for (int j = 0; j < M.N; ++j)
                M.at(i, j) += sign * s.coeffs[i] * std::conj(s.coeffs[j]);
    };
    for (const auto& s : basis.f) accumulate(s, 1.0);
    for (const auto& s : basis.g) accumulate(s, -1.0);
    return M;
}

FloatForm modulus(const HermitianForm& P, const DistinguishedBasis& basis) {
    if (basis.n != P.n || basis.d != P.d)
        throw std::invalid_argument("modulus: basis does not match form");
    MonomialBasis mb(basis.n, basis.d);
    // sanity: the basis must re-expand to P's matrix
    HermMatrix re = reexpand(basis);
    HermMatrix pf = to_float(P);
    double err = 0;
    for (std::size_t i = 0; i < re.a.size(); ++i) err += std::norm(re.a[i] - pf.a[i]);
    if (std::sqrt(err) > 1e-7 * (pf.frobenius() + 1e-300) + 1e-12)
        throw std::invalid_argument("modulus: mismatched basis");
    FloatForm out;
    out.n = basis.n;
    out.d = basis.d;
    out.C = HermMatrix((int)mb.size());
    for (const auto& s : basis.f)
        for (int i = 0; i < out.C.N; ++i)
            for (int j = 0; j < out.C.N; ++j)
                out.C.at(i, j) += s.coeffs[i] * std::conj(s.coeffs[j]);
    for (const auto& s : basis.g)
        for (int i = 0; i < out.C.N; ++i)
            for (int j = 0; j < out.C.N; ++j)
                out.C.at(i, j) += s.coeffs[i] * std::conj(s.coeffs[j]);
    return out;
}

std::optional<std::vector<FloatSection>> sos_decomposition(const HermitianForm& P) {
    if (P.is_zero()) return std::vector<FloatSection>{};
    if (!psd_exact(P)) return std::nullopt;
    auto basis = distinguished_basis(P);
    // exact PSD can still leave tiny negative floating eigenvalues; they
    // fall below the zero cutoff, so g is empty here
    return basis.f;
}

DistinguishedBasis rebase_distinguished(const DistinguishedBasis& basis, unsigned seed) {
    DistinguishedBasis out = basis;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
    std::uniform_real_distribution<double> hyp(0.0, 0.75);

    auto mix_unitary = [&](std::vector<FloatSection>& block) {
        if (block.size() < 2) return;
        for (int rep = 0; rep < 3; ++rep) {
            std::size_t i = rng() % block.size();
            std::size_t j = rng() % block.size();
            if (i == j) continue;
            double th = angle(rng), ph = angle(rng);
            double c = std::cos(th), s = std::sin(th);
            std::complex<double> e(std::cos(ph), std::sin(ph));
            for (std::size_t r = 0; r < block[i].coeffs.size(); ++r) {
                auto a = block[i].coeffs[r], b = block[j].coeffs[r];
                block[i].coeffs[r] = c * a + s * e * b;
                block[j].coeffs[r] = -s * std::conj(e) * a + c * b;
            }
        }
    };
    mix_unitary(out.f);
    mix_unitary(out.g);

    // hyperbolic mixing of one f with one g preserves sum|f|^2 - sum|g|^2
    if (!out.f.empty() && !out.g.empty()) {
        for (int rep = 0; rep < 2; ++rep) {
            std::size_t i = rng() % out.f.size();
            std::size_t j = rng() % out.g.size();
            double t = hyp(rng), ph = angle(rng);
            double ch = std::cosh(t), sh = std::sinh(t);
            std::complex<double> e(std::cos(ph), std::sin(ph));
            for (std::size_t r = 0; r < out.f[i].coeffs.size(); ++r) {
                auto a = out.f[i].coeffs[r], b = out.g[j].coeffs[r];
                out.f[i].coeffs[r] = ch * a + sh * e * b;
                out.g[j].coeffs[r] = sh * std::conj(e) * a + ch * b;
            }
        }
    }
    return out;
}

}  // namespace hermcert
