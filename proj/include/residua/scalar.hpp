#pragma once

#include <limits>
#include <string>

#include "residua/errors.hpp"
#include "residua/gaussian.hpp"
#include "residua/poly.hpp"

namespace residua {

using TPoly = Poly<Gaussian>;  // polynomial in t over Q(i)

// Element of K = Q(i)(t) in the canonical form  t^v * num/den  with
// num(0) != 0, den(0) = 1, gcd(num, den) = 1.  Zero is num == 0, v == 0.
// The factored t-power makes val() an O(1) field lookup.
class FieldScalar {
  public:
    FieldScalar() : v_(0), num_(), den_(TPoly::constant(Gaussian(1l))) {}
    FieldScalar(long n) : FieldScalar(Gaussian(n)) {}
    explicit FieldScalar(const Gaussian& g)
        : v_(0), num_(TPoly::constant(g)), den_(TPoly::constant(Gaussian(1l))) {}
    FieldScalar(int v, TPoly num, TPoly den) : v_(v), num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static FieldScalar t_power(int k) {
        return FieldScalar(k, TPoly::constant(Gaussian(1l)), TPoly::constant(Gaussian(1l)));
    }
    static FieldScalar t() { return t_power(1); }
    static FieldScalar i() { return FieldScalar(Gaussian(Rational(0), Rational(1))); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return v_ == 0 && num_.degree() == 0 && den_.degree() == 0 && num_.c[0].is_one(); }

    static constexpr long val_infinity = std::numeric_limits<long>::max();
    long val() const { return is_zero() ? val_infinity : v_; }

    // evaluation at t = 0; requires val >= 0
    Gaussian reduce_at_zero() const {
        if (is_zero()) return Gaussian(0l);
        if (v_ < 0) throw NegativeValuation("reduce_at_zero: val = " + std::to_string(v_));
        if (v_ > 0) return Gaussian(0l);
        return num_.c[0];  // den(0) == 1
    }

    int tpow() const { return v_; }
    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int v = std::min(a.v_, b.v_);
        TPoly na = a.num_.shift_up(a.v_ - v) * b.den_;
        TPoly nb = b.num_.shift_up(b.v_ - v) * a.den_;
        return FieldScalar(v, na + nb, a.den_ * b.den_);
    }
    friend FieldScalar operator-(const FieldScalar& a) {
        FieldScalar r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) { return a + (-b); }
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        if (a.is_zero() || b.is_zero()) return FieldScalar();
        return FieldScalar(a.v_ + b.v_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
        return a * b.inv();
    }
    FieldScalar inv() const {
        if (is_zero()) throw std::domain_error("division by zero scalar");
        return FieldScalar(-v_, den_, num_);
    }
    FieldScalar pow(int e) const {
        if (e < 0) return inv().pow(-e);
        FieldScalar r(1l), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return a.v_ == b.v_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    // numeric specialization at a complex parameter value
    std::complex<double> eval_at(std::complex<double> t0) const;

    std::string str() const;

  private:
    void canonicalize();

    int v_;
    TPoly num_, den_;
};

FieldScalar parse_scalar(const std::string& text);

}  // namespace residua
