#include "hermcert/curves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hermcert {

bool operator==(const P1Point& x, const P1Point& y) {
    if (x.at_infinity() || y.at_infinity()) return x.at_infinity() == y.at_infinity();
    return x.a * y.b == y.a * x.b;
}

RationalCurve::RationalCurve(int n_target_, std::vector<HoloSection> comps)
    : n_target(n_target_), components(std::move(comps)) {
    if ((int)components.size() != n_target + 1)
        throw std::invalid_argument("RationalCurve: need n_target+1 components");
    bool any = false;
    int deg = -1;
    for (const auto& c : components) {
        if (c.n != 1) throw std::invalid_argument("RationalCurve: components must be binary forms");
        if (!c.is_zero()) {
            any = true;
            if (deg < 0) deg = c.d;
        }
        if (deg >= 0 && c.d != deg && !c.is_zero())
            throw std::invalid_argument("RationalCurve: mixed component degrees");
    }
    if (!any) throw std::invalid_argument("RationalCurve: all components zero");
    e = deg;
}

HermitianForm pullback(const HermitianForm& P, const RationalCurve& gamma) {
    if (gamma.n_target != P.n) throw std::invalid_argument("pullback: dimension mismatch");
    std::map<MultiIndex, HoloSection> cache;
    auto substituted = [&](const MultiIndex& a) -> const HoloSection& {
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
        HoloSection s(1, 0);
        s.add_term({0, 0}, Scalar(1));
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > 0) s = s * gamma.components[i].pow(a[i]);
        return cache.emplace(a, std::move(s)).first->second;
    };
    HermitianForm R(1, P.d * gamma.e);
    for (const auto& [key, c] : P.C) {
        const HoloSection& ga = substituted(key.first);
        const HoloSection& gb = substituted(key.second);
        for (const auto& [mu, ca] : ga.coeffs)
            for (const auto& [nu, cb] : gb.coeffs) R.add_entry(mu, nu, c * ca * cb.conj());
    }
    return R;
}

static mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BidegreeExpansion local_expansion(const HermitianForm& P, const P1Point& center) {
    if (P.n != 1) throw std::invalid_argument("local_expansion: form must live on P^1");
    BidegreeExpansion out;
    out.center = center;
    auto add = [&](int j, int k, const Scalar& c) {
        auto key = std::make_pair(j, k);
        auto it = out.coeffs.find(key);
        if (it == out.coeffs.end()) {
            if (!c.is_zero()) out.coeffs.emplace(key, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.coeffs.erase(it);
        }
    };
    if (center.at_infinity()) {
        // (x, y) = (1, t)
        for (const auto& [key, c] : P.C) add(key.first[1], key.second[1], c);
        return out;
    }
    // (x, y) = (q + t, 1) with q = a/b
    mpq_class q = center.a / center.b;
    for (const auto& [key, c] : P.C) {
        int a0 = key.first[0], b0 = key.second[0];
        for (int j = 0; j <= a0; ++j) {
            mpq_class qa = mpq_class(binom(a0, j));
            for (int e = 0; e < a0 - j; ++e) qa *= q;
            for (int k = 0; k <= b0; ++k) {
                mpq_class qb = mpq_class(binom(b0, k));
                for (int e = 0; e < b0 - k; ++e) qb *= q;
                add(j, k, c * Scalar(qa) * Scalar(qb).conj());
            }
        }
    }
    return out;
}

JetResult jet_check(const BidegreeExpansion& exp) {
    if (exp.coeffs.empty()) throw std::invalid_argument("jet_check: identically zero expansion");
    int mu = -1;
    for (const auto& [jk, c] : exp.coeffs) {
        int tot = jk.first + jk.second;
        if (mu < 0 || tot < mu) mu = tot;
    }
    JetResult res;
    res.mu = mu;
    for (const auto& [jk, c] : exp.coeffs)
        if (jk.first + jk.second == mu) res.lowest_block.emplace(jk, c);
    if (mu % 2 == 0 && res.lowest_block.size() == 1) {
        auto it = res.lowest_block.begin();
        if (it->first == std::make_pair(mu / 2, mu / 2) && it->second.is_real() &&
            it->second.re > 0)
            res.pass = true;
    }
    return res;
}

// --- binary form helpers (univariate over Q(i) after dehomogenizing y=1) ---

namespace {

struct Dehom {
    std::vector<Scalar> u;  // u[j] = coefficient of x^j
    int y_mult = 0;         // multiplicity of y, i.e. d - deg(u)
};

Dehom dehomogenize(const HoloSection& s) {
    if (s.n != 1) throw std::invalid_argument("binary form expected");
    Dehom out;
    out.u.assign(s.d + 1, Scalar());
    for (const auto& [a, c] : s.coeffs) out.u[a[0]] = c;
    int deg = 0;
    for (int j = s.d; j >= 0; --j)
        if (!out.u[j].is_zero()) { deg = j; break; }
    out.u.resize(deg + 1);
    out.y_mult = s.d - deg;
    return out;
}

HoloSection homogenize(const std::vector<Scalar>& u, int total_degree) {
    HoloSection s(1, total_degree);
    for (int j = 0; j < (int)u.size(); ++j)
        if (!u[j].is_zero()) s.coeffs.emplace(MultiIndex{j, total_degree - j}, u[j]);
    return s;
}

int poly_deg(const std::vector<Scalar>& p) {
    for (int j = (int)p.size() - 1; j >= 0; --j)
        if (!p[j].is_zero()) return j;
    return -1;
}

// division with remainder over Q(i)
void poly_divmod(const std::vector<Scalar>& num, const std::vector<Scalar>& den,
                 std::vector<Scalar>& quot, std::vector<Scalar>& rem) {
    int dd = poly_deg(den);
    if (dd < 0) throw std::invalid_argument("polynomial division by zero");
    rem = num;
    int dn = poly_deg(rem);
    quot.assign(std::max(0, dn - dd + 1), Scalar());
    while (dn >= dd) {
        Scalar f = rem[dn] / den[dd];
        quot[dn - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[dn - dd + j] -= f * den[j];
        dn = poly_deg(rem);
    }
    rem.resize(std::max(0, poly_deg(rem) + 1));
}

std::vector<Scalar> poly_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
    while (poly_deg(b) >= 0) {
        std::vector<Scalar> q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    int da = poly_deg(a);
    if (da < 0) return a;
    Scalar lead = a[da];
    for (auto& c : a) c /= lead;  // monic
    a.resize(da + 1);
    return a;
}

}  // namespace

HoloSection binary_gcd(const std::vector<HoloSection>& sections) {
    std::vector<Scalar> g;
    int y_mult = -1;
    for (const auto& s : sections) {
        if (s.is_zero()) continue;
        Dehom dh = dehomogenize(s);
        y_mult = (y_mult < 0) ? dh.y_mult : std::min(y_mult, dh.y_mult);
        g = g.empty() ? dh.u : poly_gcd(g, dh.u);
        if (g.size() == 1) g = {Scalar(1)};  // constant gcd short-circuits
    }
    if (y_mult < 0) throw std::invalid_argument("binary_gcd: all sections zero");
    int dg = poly_deg(g);
    Scalar lead = g[dg];
    for (auto& c : g) c /= lead;
    return homogenize(g, dg + y_mult);
}

HoloSection binary_divide(const HoloSection& num, const HoloSection& den) {
    if (num.n != 1 || den.n != 1) throw std::invalid_argument("binary_divide: binary forms only");
    if (num.is_zero()) return HoloSection(1, num.d - den.d);
    Dehom dn = dehomogenize(num), dd = dehomogenize(den);
    if (dd.y_mult > dn.y_mult) throw std::invalid_argument("binary_divide: not divisible (y power)");
    std::vector<Scalar> q, r;
    poly_divmod(dn.u, dd.u, q, r);
    if (poly_deg(r) >= 0) throw std::invalid_argument("binary_divide: not divisible");
    return homogenize(q, num.d - den.d);
}

DivisorP1 base_divisor_factor(const HermitianForm& P) {
    if (P.n != 1) throw std::invalid_argument("base_divisor_factor: form must live on P^1");
    if (P.is_zero()) throw std::invalid_argument("base_divisor_factor: zero form");
    auto sections = support_space_basis(P);
    HoloSection s_D = binary_gcd(sections);
    DivisorP1 out;
    out.s_D = s_D;
    const int dr = P.d - s_D.d;
    // divide every column by s_D, then every row by conj(s_D)
    std::map<MultiIndex, HoloSection> columns;
    for (const auto& [key, c] : P.C) {
        auto it = columns.find(key.second);
        if (it == columns.end()) it = columns.emplace(key.second, HoloSection(1, P.d)).first;
        it->second.add_term(key.first, c);
    }
    // intermediate: T[alpha'][beta] after holomorphic division
    std::map<MultiIndex, HoloSection> rows;  // keyed by alpha', holds conj coefficients over beta
    for (const auto& [beta, col] : columns) {
        HoloSection q = binary_divide(col, s_D);
        for (const auto& [ap, c] : q.coeffs) {
            auto it = rows.find(ap);
            if (it == rows.end()) it = rows.emplace(ap, HoloSection(1, P.d)).first;
            it->second.add_term(beta, c.conj());
        }
    }
    HermitianForm residual(1, dr);
    for (const auto& [ap, row] : rows) {
        HoloSection q = binary_divide(row, s_D);
        for (const auto& [bp, c] : q.coeffs) residual.add_entry(ap, bp, c.conj());
    }
    if (!(product(from_squares({{1, s_D}}), residual) == P))
        throw std::logic_error("base_divisor_factor: factorization check failed");
    out.residual = std::move(residual);
    return out;
}

std::optional<mpq_class> snap_to_rational(double x, long max_den, double tol) {
    double v = x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int i = 0; i < 40; ++i) {
        double fl = std::floor(v);
        if (fl > 1e17 || fl < -1e17) break;
        long a = (long)fl;
        long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double approx = (double)p1 / (double)q1;
        if (std::abs(approx - x) <= tol * std::max(1.0, std::abs(x))) {
            mpq_class r(p1, q1);
            r.canonicalize();
            return r;
        }
        double frac = v - fl;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    return std::nullopt;
}

std::vector<P1Point> rational_roots(const HoloSection& s) {
    std::vector<P1Point> roots;
    if (s.is_zero()) return roots;
    Dehom dh = dehomogenize(s);
    if (dh.y_mult > 0) roots.push_back(P1Point::infinity());
    int deg = poly_deg(dh.u);
    if (deg <= 0) return roots;

    // Durand-Kerner to locate all complex roots, then snap near-real ones to
    // rationals and verify exactly.
    std::vector<std::complex<double>> c(deg + 1);
    for (int j = 0; j <= deg; ++j) c[j] = dh.u[j].to_complex();
    std::vector<std::complex<double>> z(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1, 0);
    for (int i = 0; i < deg; ++i) { acc *= seed; z[i] = acc; }
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> num = 0;
            for (int j = deg; j >= 0; --j) num = num * z[i] + c[j];
            std::complex<double> denom = c[deg];
            for (int k = 0; k < deg; ++k)
                if (k != i) denom *= (z[i] - z[k]);
            if (std::abs(denom) < 1e-300) continue;
            std::complex<double> dz = num / denom;
            z[i] -= dz;
            shift = std::max(shift, std::abs(dz));
        }
        if (shift < 1e-14) break;
    }

    std::vector<mpq_class> found;
    for (const auto& zi : z) {
        if (std::abs(zi.imag()) > 1e-8 * std::max(1.0, std::abs(zi))) continue;
        auto cand = snap_to_rational(zi.real(), 1000000L, 1e-10);
        if (!cand) continue;
        Scalar val;
        Scalar x(*cand);
        for (int j = deg; j >= 0; --j) val = val * x + dh.u[j];
        if (!val.is_zero()) continue;
        bool dup = false;
        for (const auto& f : found) dup |= (f == *cand);
        if (!dup) found.push_back(*cand);
    }
    for (const auto& r : found) roots.push_back(P1Point::finite(r));
    return roots;
}

JppReport jpp_scan(const HermitianForm& P, const std::vector<RationalCurve>& curves,
                   const std::vector<P1Point>& centers) {
    if (curves.empty()) throw std::invalid_argument("jpp_scan: empty curve list");
    JppReport report;
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        HermitianForm Q = pullback(P, curves[ci]);
        DivisorP1 div = base_divisor_factor(Q);
        std::vector<P1Point> all = centers;
        all.push_back(P1Point::finite(0));
        all.push_back(P1Point::infinity());
        for (const auto& r : rational_roots(div.s_D)) all.push_back(r);
        for (const auto& center : all) {
            bool seen = false;
            // skip duplicate centers
            for (const auto& prior : all)
                if (&prior == &center) break;
                else if (prior == center) { seen = true; break; }
            if (seen) continue;
            ++report.centers_checked;
            auto exp = local_expansion(div.residual, center);
            if (exp.coeffs.empty()) continue;  // residual identically zero never happens for nonzero P
            auto jet = jet_check(exp);
            if (!jet.pass) {
                report.failure_found = true;
                report.failure = JppFailure{ci, center, jet};
                return report;
            }
        }
    }
    return report;
}

}  // namespace hermcert
