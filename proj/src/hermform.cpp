#include "hermcert/hermform.hpp"

#include <stdexcept>

namespace hermcert {

HoloSection HoloSection::monomial(int n, const MultiIndex& alpha, const Scalar& c) {
    if ((int)alpha.size() != n + 1) throw std::invalid_argument("monomial: exponent length");
    HoloSection s(n, degree(alpha));
    s.add_term(alpha, c);
    return s;
}

void HoloSection::add_term(const MultiIndex& alpha, const Scalar& c) {
    if ((int)alpha.size() != n + 1) throw std::invalid_argument("add_term: exponent length");
    if (degree(alpha) != d) throw std::invalid_argument("add_term: inhomogeneous term");
    auto it = coeffs.find(alpha);
    if (it == coeffs.end()) {
        if (!c.is_zero()) coeffs.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

HoloSection HoloSection::operator+(const HoloSection& o) const {
    if (n != o.n || d != o.d) throw std::invalid_argument("section sum: mismatched (n,d)");
    HoloSection r = *this;
    for (const auto& [a, c] : o.coeffs) r.add_term(a, c);
    return r;
}

HoloSection HoloSection::operator-(const HoloSection& o) const {
    if (n != o.n || d != o.d) throw std::invalid_argument("section diff: mismatched (n,d)");
    HoloSection r = *this;
    for (const auto& [a, c] : o.coeffs) r.add_term(a, -c);
    return r;
}

HoloSection HoloSection::operator*(const HoloSection& o) const {
    if (n != o.n) throw std::invalid_argument("section product: variable count");
    HoloSection r(n, d + o.d);
    for (const auto& [a, ca] : coeffs)
        for (const auto& [b, cb] : o.coeffs) r.add_term(mi_add(a, b), ca * cb);
    return r;
}

HoloSection HoloSection::scaled(const Scalar& c) const {
    HoloSection r(n, d);
    if (c.is_zero()) return r;
    for (const auto& [a, ca] : coeffs) r.coeffs.emplace(a, ca * c);
    return r;
}

HoloSection HoloSection::pow(int k) const {
    if (k < 0) throw std::invalid_argument("pow: negative exponent");
    HoloSection r(n, 0);
    r.add_term(MultiIndex(n + 1, 0), Scalar(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

template <class T>
static T eval_monomial(const MultiIndex& a, const std::vector<T>& v) {
    T r(1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (int e = 0; e < a[i]; ++e) r *= v[i];
    return r;
}

Scalar HoloSection::eval(const std::vector<Scalar>& v) const {
    if ((int)v.size() != n + 1) throw std::invalid_argument("eval: dimension mismatch");
    Scalar r;
    for (const auto& [a, c] : coeffs) r += c * eval_monomial(a, v);
    return r;
}

std::complex<double> HoloSection::eval(const std::vector<std::complex<double>>& v) const {
    if ((int)v.size() != n + 1) throw std::invalid_argument("eval: dimension mismatch");
    std::complex<double> r = 0;
    for (const auto& [a, c] : coeffs) r += c.to_complex() * eval_monomial(a, v);
    return r;
}

HermitianForm HermitianForm::unit(int n) {
    HermitianForm u(n, 0);
    MultiIndex zero(n + 1, 0);
    u.C.emplace(std::make_pair(zero, zero), Scalar(1));
    return u;
}

void HermitianForm::add_entry(const MultiIndex& alpha, const MultiIndex& beta, const Scalar& c) {
    if ((int)alpha.size() != n + 1 || (int)beta.size() != n + 1)
        throw std::invalid_argument("add_entry: exponent length");
    if (degree(alpha) != d || degree(beta) != d)
        throw std::invalid_argument("add_entry: wrong degree");
    auto key = std::make_pair(alpha, beta);
    auto it = C.find(key);
    if (it == C.end()) {
        if (!c.is_zero()) C.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) C.erase(it);
    }
}

Scalar HermitianForm::entry(const MultiIndex& alpha, const MultiIndex& beta) const {
    auto it = C.find(std::make_pair(alpha, beta));
    return it == C.end() ? Scalar() : it->second;
}

bool HermitianForm::is_hermitian() const {
    for (const auto& [key, c] : C)
        if (entry(key.second, key.first) != c.conj()) return false;
    return true;
}

bool HermitianForm::is_diagonal() const {
    for (const auto& [key, c] : C)
        if (key.first != key.second) return false;
    return true;
}

HermitianForm HermitianForm::operator+(const HermitianForm& o) const {
    if (n != o.n || d != o.d) throw std::invalid_argument("form sum: mismatched (n,d)");
    HermitianForm r = *this;
    for (const auto& [key, c] : o.C) r.add_entry(key.first, key.second, c);
    return r;
}

HermitianForm HermitianForm::operator-(const HermitianForm& o) const {
    if (n != o.n || d != o.d) throw std::invalid_argument("form diff: mismatched (n,d)");
    HermitianForm r = *this;
    for (const auto& [key, c] : o.C) r.add_entry(key.first, key.second, -c);
    return r;
}

HermitianForm HermitianForm::scaled(const mpq_class& c) const {
    HermitianForm r(n, d);
    if (c == 0) return r;
    for (const auto& [key, v] : C) r.C.emplace(key, v * Scalar(c));
    return r;
}

HermitianForm from_squares(const std::vector<std::pair<int, HoloSection>>& terms) {
    if (terms.empty()) throw std::invalid_argument("from_squares: no terms");
    int n = terms.front().second.n;
    int d = terms.front().second.d;
    HermitianForm P(n, d);
    for (const auto& [sign, s] : terms) {
        if (s.n != n || s.d != d)
            throw std::invalid_argument("from_squares: mixed degrees or variable counts");
        if (sign != 1 && sign != -1) throw std::invalid_argument("from_squares: sign must be +-1");
        for (const auto& [a, ca] : s.coeffs)
            for (const auto& [b, cb] : s.coeffs)
                P.add_entry(a, b, Scalar(sign) * ca * cb.conj());
    }
    return P;
}

template <class T>
static T eval_pair_impl(const HermitianForm& P, const std::vector<T>& v, const std::vector<T>& w,
                        T (*cv)(const Scalar&)) {
    if ((int)v.size() != P.n + 1 || (int)w.size() != P.n + 1)
        throw std::invalid_argument("eval_pair: dimension mismatch");
    T r{};
    for (const auto& [key, c] : P.C) {
        T t = cv(c) * eval_monomial(key.first, v);
        // conj(w)^beta
        T wb(1);
        for (std::size_t i = 0; i < key.second.size(); ++i)
            for (int e = 0; e < key.second[i]; ++e) wb *= w[i];
        if constexpr (std::is_same_v<T, Scalar>)
            r += t * wb.conj();
        else
            r += t * std::conj(wb);
    }
    return r;
}

Scalar eval_pair(const HermitianForm& P, const std::vector<Scalar>& v,
                 const std::vector<Scalar>& w) {
    return eval_pair_impl<Scalar>(P, v, w, +[](const Scalar& s) { return s; });
}

std::complex<double> eval_pair(const HermitianForm& P,
                               const std::vector<std::complex<double>>& v,
                               const std::vector<std::complex<double>>& w) {
    return eval_pair_impl<std::complex<double>>(
        P, v, w, +[](const Scalar& s) { return s.to_complex(); });
}

HermitianForm product(const HermitianForm& P, const HermitianForm& Q) {
    if (P.n != Q.n) throw std::invalid_argument("product: variable-count mismatch");
    HermitianForm R(P.n, P.d + Q.d);
    for (const auto& [kp, cp] : P.C)
        for (const auto& [kq, cq] : Q.C)
            R.add_entry(mi_add(kp.first, kq.first), mi_add(kp.second, kq.second), cp * cq);
    return R;
}

HermitianForm norm_power(int n, int m) {
    if (n < 0) throw std::invalid_argument("norm_power: negative n");
    if (m <= 0) throw std::invalid_argument("norm_power: m must be >= 1");
    MonomialBasis basis(n, m);
    HermitianForm R(n, m);
    for (const auto& a : basis.elements()) {
        mpz_class coef;
        mpz_fac_ui(coef.get_mpz_t(), m);
        for (int e : a) {
            mpz_class fe;
            mpz_fac_ui(fe.get_mpz_t(), e);
            coef /= fe;
        }
        R.C.emplace(std::make_pair(a, a), Scalar(mpq_class(coef)));
    }
    return R;
}

// Row reduction over Gaussian rationals; returns indices of a maximal
// independent subset of the input row vectors.
static std::vector<std::size_t> independent_rows(std::vector<std::vector<Scalar>> rows) {
    std::vector<std::size_t> keep;
    std::vector<std::vector<Scalar>> pivots;   // reduced rows
    std::vector<std::size_t> pivot_cols;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto v = rows[r];
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            const Scalar& lead = v[pivot_cols[p]];
            if (!lead.is_zero()) {
                Scalar factor = lead / pivots[p][pivot_cols[p]];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * pivots[p][j];
            }
        }
        std::size_t col = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) { col = j; break; }
        if (col == v.size()) continue;  // dependent
        keep.push_back(r);
        pivots.push_back(std::move(v));
        pivot_cols.push_back(col);
    }
    return keep;
}

std::vector<HoloSection> support_space_basis(const HermitianForm& P) {
    if (P.is_zero()) throw std::invalid_argument("support_space_basis: zero form");
    MonomialBasis basis(P.n, P.d);
    // column sections u_beta = sum_alpha C(alpha,beta) z^alpha
    std::map<MultiIndex, std::vector<Scalar>> columns;
    for (const auto& [key, c] : P.C) {
        auto& col = columns[key.second];
        if (col.empty()) col.assign(basis.size(), Scalar());
        col[basis.rank(key.first)] += c;
    }
    std::vector<MultiIndex> betas;
    std::vector<std::vector<Scalar>> rows;
    for (auto& [beta, col] : columns) {
        bool nonzero = false;
        for (const auto& c : col) nonzero |= !c.is_zero();
        if (!nonzero) continue;
        betas.push_back(beta);
        rows.push_back(col);
    }
    auto keep = independent_rows(rows);
    std::vector<HoloSection> out;
    for (std::size_t r : keep) {
        HoloSection s(P.n, P.d);
        for (std::size_t j = 0; j < rows[r].size(); ++j)
            if (!rows[r][j].is_zero()) s.coeffs.emplace(basis.unrank(j), rows[r][j]);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::vector<Scalar>> gcurvature(const HermitianForm& P,
                                            const std::vector<std::vector<Scalar>>& points) {
    if (points.empty()) throw std::invalid_argument("gcurvature: empty tuple");
    std::size_t N = points.size();
    std::vector<std::vector<Scalar>> M(N, std::vector<Scalar>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) M[i][j] = eval_pair(P, points[i], points[j]);
    return M;
}

std::vector<std::vector<std::complex<double>>> gcurvature(
    const HermitianForm& P, const std::vector<std::vector<std::complex<double>>>& points) {
    if (points.empty()) throw std::invalid_argument("gcurvature: empty tuple");
    std::size_t N = points.size();
    std::vector<std::vector<std::complex<double>>> M(N, std::vector<std::complex<double>>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) M[i][j] = eval_pair(P, points[i], points[j]);
    return M;
}

}  // namespace hermcert
