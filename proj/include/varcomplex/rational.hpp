#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

namespace varcomplex {

using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number with rational real and imaginary parts.
/// The coefficient field of every expression in the engine; no floating
/// point is used anywhere.
struct CRat {
    Rational re{0};
    Rational im{0};

    CRat() = default;
    CRat(long n) : re(n) {}                                   // NOLINT(google-explicit-constructor)
    CRat(Rational r) : re(std::move(r)) {}                    // NOLINT(google-explicit-constructor)
    CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static CRat i() { return CRat(Rational(0), Rational(1)); }
    static CRat frac(long num, long den) { return CRat(Rational(num, den)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_minus_one() const { return re == -1 && im == 0; }
    bool is_real() const { return im == 0; }

    CRat conj() const { return CRat(re, -im); }

    CRat operator-() const { return CRat(-re, -im); }
    CRat& operator+=(const CRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRat& operator-=(const CRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    CRat& operator*=(const CRat& o) {
        Rational r = re * o.re - im * o.im;
        Rational i2 = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
    friend bool operator<(const CRat& a, const CRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace varcomplex
