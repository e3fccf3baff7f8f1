#pragma once

#include <cassert>
#include <utility>
#include <vector>

namespace residua {

// Dense univariate polynomial over a field F.  F needs +,-,*,/, is_zero(),
// default construction to 0 and construction from long.  Zero polynomial is
// the empty coefficient vector; otherwise the leading coefficient is nonzero.
template <class F>
class Poly {
  public:
    std::vector<F> c;  // c[k] multiplies x^k

    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(F v) {
        Poly p;
        if (!v.is_zero()) p.c.push_back(std::move(v));
        return p;
    }
    static Poly x() { return Poly(std::vector<F>{F(0l), F(1l)}); }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for 0
    const F& lead() const { return c.back(); }
    F coeff(int k) const { return k >= 0 && k < (int)c.size() ? c[k] : F(0l); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    F eval(const F& x0) const {
        F acc(0l);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x0 + *it;
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F(0l));
        for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = r.c[k] + b.c[k];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), F(0l));
        for (size_t k = 0; k < a.c.size(); ++k) r.c[k] = a.c[k];
        for (size_t k = 0; k < b.c.size(); ++k) r.c[k] = r.c[k] - b.c[k];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, F(0l));
        for (size_t k = 0; k < a.c.size(); ++k) {
            if (a.c[k].is_zero()) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[k + j] = r.c[k + j] + a.c[k] * b.c[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const F& s) {
        Poly r = a;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t k = 0; k < a.c.size(); ++k)
            if (!(a.c[k] == b.c[k])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const {
        Poly r;
        for (size_t k = 1; k < c.size(); ++k) r.c.push_back(c[k] * F(static_cast<long>(k)));
        r.trim();
        return r;
    }

    Poly monic() const {
        assert(!is_zero());
        Poly r = *this;
        F inv = F(1l) / lead();
        for (auto& x : r.c) x = x * inv;
        return r;
    }

    // x^k * this
    Poly shift_up(int k) const {
        if (is_zero()) return {};
        Poly r;
        r.c.assign(c.size() + k, F(0l));
        for (size_t j = 0; j < c.size(); ++j) r.c[j + k] = c[j];
        return r;
    }

    // this(x + a)
    Poly taylor_shift(const F& a) const {
        Poly r;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            r = r * Poly(std::vector<F>{a, F(1l)}) + Poly::constant(*it);
        }
        return r;
    }

    // substitution this(g(x))
    Poly compose(const Poly& g) const {
        Poly r;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            r = r * g + Poly::constant(*it);
        return r;
    }

    // reversed coefficients: x^deg * this(1/x)
    Poly reverse() const {
        Poly r = *this;
        std::reverse(r.c.begin(), r.c.end());
        r.trim();
        return r;
    }
};

template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    assert(!b.is_zero());
    Poly<F> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(a.degree() - b.degree() + 1, F(0l));
    F linv = F(1l) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        F f = r.lead() * linv;
        q.c[k] = f;
        for (int j = 0; j <= b.degree(); ++j) r.c[k + j] = r.c[k + j] - f * b.c[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(a, b).second;
}

template <class F>
Poly<F> poly_div_exact(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = poly_divmod(a, b);
    assert(r.is_zero());
    return q;
}

// monic gcd via Euclid
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        a = poly_mod(a, b.monic());
        std::swap(a, b);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

// extended Euclid: returns (g, u, v) monic with u*a + v*b = g
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> poly_ext_gcd(const Poly<F>& a, const Poly<F>& b) {
    Poly<F> r0 = a, r1 = b;
    Poly<F> u0 = Poly<F>::constant(F(1l)), u1;
    Poly<F> v0, v1 = Poly<F>::constant(F(1l));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = r1; r1 = r;
        Poly<F> u2 = u0 - q * u1, v2 = v0 - q * v1;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};
    F inv = F(1l) / r0.lead();
    return {r0 * inv, u0 * inv, v0 * inv};
}

// squarefree decomposition (Yun): returns {(g1,1),(g2,2),...} with
// input = lc * prod gi^i and the gi monic squarefree pairwise coprime.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& f) {
    std::vector<std::pair<Poly<F>, int>> out;
    if (f.degree() <= 0) return out;
    Poly<F> p = f.monic();
    Poly<F> d = p.derivative();
    Poly<F> a = poly_gcd(p, d);
    Poly<F> b = poly_div_exact(p, a);
    Poly<F> c = poly_div_exact(d, a) - b.derivative();
    int i = 1;
    while (!(b.degree() == 0)) {
        Poly<F> g = poly_gcd(b, c);
        if (g.degree() > 0) out.push_back({g, i});
        b = poly_div_exact(b, g);
        c = poly_div_exact(c, g) - b.derivative();
        ++i;
    }
    return out;
}

// resultant via the Euclidean algorithm (field coefficients)
template <class F>
F poly_resultant(Poly<F> a, Poly<F> b) {
    if (a.is_zero() || b.is_zero()) return F(0l);
    F res(1l);
    while (b.degree() > 0) {
        auto r = poly_mod(a, b);
        if (r.is_zero()) return F(0l);
        // res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b, r)
        F lc = b.lead();
        F factor(1l);
        for (int k = 0; k < a.degree() - r.degree(); ++k) factor = factor * lc;
        if ((a.degree() & 1) && (b.degree() & 1)) factor = -factor;
        res = res * factor;
        a = b;
        b = r;
    }
    // b is a nonzero constant: res(a, const) = const^(deg a)
    F lc = b.c[0];
    for (int k = 0; k < a.degree(); ++k) res = res * lc;
    return res;
}

}  // namespace residua
