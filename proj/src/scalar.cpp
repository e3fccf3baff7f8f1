#include "residua/scalar.hpp"

#include <cctype>
#include <sstream>

namespace residua {

namespace {

int t_order(const TPoly& p) {
    for (size_t k = 0; k < p.c.size(); ++k)
        if (!p.c[k].is_zero()) return static_cast<int>(k);
    return -1;
}

TPoly shift_down(const TPoly& p, int k) {
    TPoly r;
    r.c.assign(p.c.begin() + k, p.c.end());
    return r;
}

}  // namespace

void FieldScalar::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
    if (num_.is_zero()) {
        v_ = 0;
        den_ = TPoly::constant(Gaussian(1l));
        return;
    }
    int on = t_order(num_), od = t_order(den_);
    if (on > 0) { num_ = shift_down(num_, on); v_ += on; }
    if (od > 0) { den_ = shift_down(den_, od); v_ -= od; }
    TPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = poly_div_exact(num_, g);
        den_ = poly_div_exact(den_, g);
    }
    Gaussian c0 = den_.c[0];
    if (!c0.is_one()) {
        Gaussian inv = c0.inv();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

std::complex<double> FieldScalar::eval_at(std::complex<double> t0) const {
    if (is_zero()) return {0.0, 0.0};
    auto horner = [&](const TPoly& p) {
        std::complex<double> acc{0.0, 0.0};
        for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * t0 + it->to_complex();
        return acc;
    };
    return std::pow(t0, v_) * horner(num_) / horner(den_);
}

// ---------------------------------------------------------------------------
// printing

std::string gaussian_str(const Gaussian& g) {
    if (g.is_zero()) return "0";
    std::string s;
    if (g.re != 0) s += rat_str(g.re);
    if (g.im != 0) {
        Rational a = rat_abs(g.im);
        std::string part = (a == 1) ? "i" : rat_str(a) + "*i";
        if (s.empty())
            s += (g.im < 0 ? "-" : "") + part;
        else
            s += (g.im < 0 ? "-" : "+") + part;
    }
    return s;
}

namespace {

bool coeff_is_simple(const Gaussian& g) { return g.im == 0 && g.re > 0; }

std::string tpoly_str(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= p.degree(); ++k) {
        const Gaussian& c = p.c[k];
        if (c.is_zero()) continue;
        std::string cs = gaussian_str(c);
        bool wrapped = !coeff_is_simple(c);
        std::string term;
        if (k == 0) {
            term = wrapped ? "(" + cs + ")" : cs;
        } else {
            std::string tp = (k == 1) ? "t" : "t^" + std::to_string(k);
            if (c.is_one())
                term = tp;
            else
                term = (wrapped ? "(" + cs + ")" : cs) + "*" + tp;
        }
        if (!s.empty()) s += "+";
        s += term;
    }
    return s;
}

}  // namespace

std::string FieldScalar::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool num_const = num_.degree() == 0;
    std::string ns = tpoly_str(num_);
    if (v_ != 0) {
        std::string tp = "t^" + std::to_string(v_);
        if (num_const && num_.c[0].is_one())
            s = tp;
        else
            s = (num_const && coeff_is_simple(num_.c[0]) ? ns : "(" + ns + ")") + "*" + tp;
    } else {
        s = num_const ? (coeff_is_simple(num_.c[0]) ? ns : "(" + ns + ")") : "(" + ns + ")";
    }
    if (den_.degree() > 0) s += "/(" + tpoly_str(den_) + ")";
    return s;
}

// ---------------------------------------------------------------------------
// parsing: rational expressions in t and i with + - * / ^ and parentheses

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool peek(char c) {
        skip();
        return p < s.size() && s[p] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++p; return true; }
        return false;
    }

    FieldScalar expr() {
        FieldScalar r = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) r = r + term();
            else if (eat('-')) r = r - term();
            else return r;
        }
    }
    FieldScalar term() {
        FieldScalar r = factor();
        for (;;) {
            if (eat('*')) r = r * factor();
            else if (eat('/')) r = r / factor();
            else return r;
        }
    }
    FieldScalar factor() {
        FieldScalar b = base();
        if (eat('^')) {
            bool neg = eat('-');
            long e = integer();
            b = b.pow(static_cast<int>(neg ? -e : e));
        }
        return b;
    }
    FieldScalar base() {
        skip();
        if (eat('(')) {
            FieldScalar r = expr();
            if (!eat(')')) throw ParseError("expected ')' in scalar at offset " + std::to_string(p));
            return r;
        }
        if (p < s.size() && (s[p] == 'i' || s[p] == 'I')) { ++p; return FieldScalar::i(); }
        if (p < s.size() && s[p] == 't') { ++p; return FieldScalar::t(); }
        if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
            return FieldScalar(Gaussian(Rational(Int(digits()))));
        }
        throw ParseError("unexpected character in scalar: '" +
                         std::string(1, p < s.size() ? s[p] : '?') + "' at offset " + std::to_string(p));
    }
    std::string digits() {
        skip();
        size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (start == p) throw ParseError("expected integer at offset " + std::to_string(p));
        return s.substr(start, p - start);
    }
    long integer() { return std::stol(digits()); }
};

}  // namespace

FieldScalar parse_scalar(const std::string& text) {
    Parser parser(text);
    FieldScalar r = parser.expr();
    parser.skip();
    if (parser.p != text.size())
        throw ParseError("trailing input in scalar: \"" + text.substr(parser.p) + "\"");
    return r;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace residua
