#pragma once

#include <complex>
#include <string>

#include "residua/rational.hpp"

namespace residua {

// Element of Q(i).  Components are always canonical reduced fractions
// (mpq keeps them that way), so equality is exact componentwise.
struct Gaussian {
    Rational re{0};
    Rational im{0};

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_rational() const { return im == 0; }

    Gaussian conj() const { return {re, Rational(-im)}; }
    Rational norm() const { return re * re + im * im; }  // |z|^2, exact

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    friend Gaussian operator+(const Gaussian& a, const Gaussian& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Gaussian operator-(const Gaussian& a, const Gaussian& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        Rational n = b.norm();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
    Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
    Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
    Gaussian& operator/=(const Gaussian& b) { return *this = *this / b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
    // total order for use as map keys; not a numeric order
    friend bool operator<(const Gaussian& a, const Gaussian& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    Gaussian inv() const {
        Rational n = norm();
        return {re / n, -im / n};
    }
};

// "a", "a/b", "a+b*i" style; full expression parsing lives in the scalar parser
std::string gaussian_str(const Gaussian& g);

}  // namespace residua
