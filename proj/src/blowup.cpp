#include "hermcert/blowup.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermcert {

void MixedHermPoly::add_term(const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c) {
    if ((int)alpha.size() != n_vars || (int)beta.size() != n_vars)
        throw std::invalid_argument("MixedHermPoly: exponent length");
    auto key = std::make_pair(alpha, beta);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        if (!c.is_zero()) coeffs.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

bool MixedHermPoly::is_real_valued() const {
    for (const auto& [key, c] : coeffs) {
        auto it = coeffs.find(std::make_pair(key.second, key.first));
        if (it == coeffs.end() || it->second != c.conj()) return false;
    }
    return true;
}

template <class T>
static T eval_mono(const MultiIndex& a, const std::vector<T>& x) {
    T r(1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int e = 0; e < a[i]; ++e) r *= x[i];
    return r;
}

Scalar MixedHermPoly::eval(const std::vector<Scalar>& x) const {
    if ((int)x.size() != n_vars) throw std::invalid_argument("eval: dimension mismatch");
    Scalar r;
    for (const auto& [key, c] : coeffs) {
        Scalar xb = eval_mono(key.second, x);
        r += c * eval_mono(key.first, x) * xb.conj();
    }
    return r;
}

double MixedHermPoly::eval(const std::vector<std::complex<double>>& x) const {
    return eval_complex(x).real();
}

std::complex<double> MixedHermPoly::eval_complex(const std::vector<std::complex<double>>& x) const {
    if ((int)x.size() != n_vars) throw std::invalid_argument("eval: dimension mismatch");
    std::complex<double> r = 0;
    for (const auto& [key, c] : coeffs)
        r += c.to_complex() * eval_mono(key.first, x) * std::conj(eval_mono(key.second, x));
    return r;
}

MixedHermPoly MixedHermPoly::derivative(int i, bool hol) const {
    MixedHermPoly out(n_vars);
    for (const auto& [key, c] : coeffs) {
        const MultiIndex& src = hol ? key.first : key.second;
        if (src[i] == 0) continue;
        MultiIndex a = key.first, b = key.second;
        (hol ? a : b)[i] -= 1;
        out.add_term(a, b, c * Scalar(src[i]));
    }
    return out;
}

MixedHermPoly dehomogenize(const HermitianForm& P, int chart) {
    if (chart < 0 || chart > P.n) throw std::invalid_argument("dehomogenize: chart index out of range");
    MixedHermPoly out(P.n);
    for (const auto& [key, c] : P.C) {
        MultiIndex a, b;
        for (int i = 0; i <= P.n; ++i) {
            if (i == chart) continue;
            a.push_back(key.first[i]);
            b.push_back(key.second[i]);
        }
        out.add_term(a, b, c);
    }
    return out;
}

MixedHermPoly monomial_substitute(const MixedHermPoly& q, const std::vector<MultiIndex>& map) {
    if ((int)map.size() != q.n_vars)
        throw std::invalid_argument("monomial_substitute: one monomial per variable");
    const int new_vars = map.empty() ? 0 : (int)map[0].size();
    for (const auto& m : map)
        if ((int)m.size() != new_vars)
            throw std::invalid_argument("monomial_substitute: inconsistent target variable count");
    MixedHermPoly out(new_vars);
    for (const auto& [key, c] : q.coeffs) {
        MultiIndex a(new_vars, 0), b(new_vars, 0);
        for (int i = 0; i < q.n_vars; ++i)
            for (int j = 0; j < new_vars; ++j) {
                a[j] += key.first[i] * map[i][j];
                b[j] += key.second[i] * map[i][j];
            }
        out.add_term(a, b, c);
    }
    return out;
}

std::pair<MultiIndex, MixedHermPoly> factor_monomial_square(const MixedHermPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("factor_monomial_square: zero polynomial");
    MultiIndex gamma(q.n_vars, -1);
    for (const auto& [key, c] : q.coeffs)
        for (int i = 0; i < q.n_vars; ++i) {
            int m = std::min(key.first[i], key.second[i]);
            if (gamma[i] < 0 || m < gamma[i]) gamma[i] = m;
        }
    MixedHermPoly reduced(q.n_vars);
    for (const auto& [key, c] : q.coeffs) {
        MultiIndex a = key.first, b = key.second;
        for (int i = 0; i < q.n_vars; ++i) { a[i] -= gamma[i]; b[i] -= gamma[i]; }
        reduced.coeffs.emplace(std::make_pair(a, b), c);
    }
    return {gamma, reduced};
}

MixedHermPoly BlowupTrace::step_product(std::size_t i) const {
    const BlowupStep& st = steps.at(i);
    MixedHermPoly out = st.reduced;
    MixedHermPoly shifted(out.n_vars);
    for (const auto& [key, c] : out.coeffs)
        shifted.coeffs.emplace(
            std::make_pair(mi_add(key.first, st.gamma_cumulative),
                           mi_add(key.second, st.gamma_cumulative)),
            c);
    return shifted;
}

BlowupTrace blowup_chain(const MixedHermPoly& q, const std::vector<std::vector<MultiIndex>>& steps,
                         const std::vector<std::vector<Scalar>>& probes) {
    BlowupTrace trace;
    MixedHermPoly cur = q;
    MultiIndex gamma_cum;  // empty until the first step fixes the variable count
    for (const auto& sub : steps) {
        cur = monomial_substitute(cur, sub);
        // carry the accumulated factor through the substitution
        if (gamma_cum.empty()) {
            gamma_cum.assign(cur.n_vars, 0);
        } else {
            MultiIndex carried(cur.n_vars, 0);
            for (std::size_t i = 0; i < sub.size(); ++i)
                for (int j = 0; j < cur.n_vars; ++j) carried[j] += gamma_cum[i] * sub[i][j];
            gamma_cum = carried;
        }
        auto [gamma, reduced] = factor_monomial_square(cur);
        for (int j = 0; j < cur.n_vars; ++j) gamma_cum[j] += gamma[j];
        cur = reduced;
        trace.steps.push_back(BlowupStep{sub, gamma, gamma_cum, cur});
    }
    trace.final_reduced = cur;
    for (const auto& pt : probes)
        trace.probe_values.emplace_back(pt, cur.eval(pt));
    return trace;
}

}  // namespace hermcert
