#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace hermcert {

/// Gaussian rational a + b*i with arbitrary-precision rational parts.
/// All form algebra in this library is exact; conversion to floating
/// point happens only at the linear-algebra and quadrature boundaries.
struct Scalar {
    mpq_class re;
    mpq_class im;

    Scalar() : re(0), im(0) {}
    Scalar(long r) : re(r), im(0) {}
    Scalar(const mpq_class& r) : re(r), im(0) {}
    Scalar(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }
    Scalar(long num, long den) : re(num, den), im(0) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        re.canonicalize();
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    /// |z|^2, a nonnegative rational.
    mpq_class norm2() const { return re * re + im * im; }

    std::complex<double> to_complex() const {
        return {re.get_d(), im.get_d()};
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re + b.re, a.im + b.im);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re - b.re, a.im - b.im);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re, -a.im); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        mpq_class n = b.norm2();
        if (n == 0) throw std::invalid_argument("division by zero");
        return Scalar((a.re * b.re + a.im * b.im) / n,
                      (a.im * b.re - a.re * b.im) / n);
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "num/den" or "num/den+num/den*i" style string, exact.
    std::string str() const {
        std::string s = re.get_str();
        if (im != 0) {
            s += (im > 0 ? "+" : "") + im.get_str() + "i";
        }
        return s;
    }
};

inline Scalar conj(const Scalar& s) { return s.conj(); }

/// Parses "p/q" (or "p") into an exact rational.
inline mpq_class parse_rational(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

}  // namespace hermcert
