#include "residua/series.hpp"

#include <sstream>

namespace residua {

SeriesTrunc SeriesTrunc::constant(const Gaussian& g, int order) {
    if (g.is_zero()) return zero(order);
    return {0, {g}, order};
}

SeriesTrunc SeriesTrunc::from_scalar(const FieldScalar& x, int order) {
    if (x.is_zero()) return zero(order);
    // x = t^v * num/den with den(0) = 1: expand den^{-1} by the division recurrence
    int v = x.tpow();
    int len = order - v + 1;
    if (len <= 0) return zero(order);
    const auto& num = x.num().c;
    const auto& den = x.den().c;
    std::vector<Gaussian> q(len, Gaussian(0l));
    for (int k = 0; k < len; ++k) {
        Gaussian acc = k < (int)num.size() ? num[k] : Gaussian(0l);
        for (int j = 1; j <= k && j < (int)den.size(); ++j) acc -= den[j] * q[k - j];
        q[k] = acc;  // den[0] == 1
    }
    SeriesTrunc r{v, std::move(q), order};
    r.normalize();
    return r;
}

Gaussian SeriesTrunc::coeff(int k) const {
    int idx = k - offset;
    if (idx < 0 || idx >= (int)a.size()) return Gaussian(0l);
    return a[idx];
}

void SeriesTrunc::normalize() {
    // clamp to order
    if (offset + (int)a.size() - 1 > order) a.resize(std::max(0, order - offset + 1));
    size_t lead = 0;
    while (lead < a.size() && a[lead].is_zero()) ++lead;
    if (lead > 0) {
        a.erase(a.begin(), a.begin() + lead);
        offset += static_cast<int>(lead);
    }
    while (!a.empty() && a.back().is_zero()) a.pop_back();
    if (a.empty()) offset = 0;
}

SeriesTrunc SeriesTrunc::truncated(int new_order) const {
    SeriesTrunc r = *this;
    r.order = new_order;
    r.normalize();
    return r;
}

Gaussian SeriesTrunc::reduce_at_zero() const {
    if (is_zero()) return Gaussian(0l);
    if (offset < 0) throw NegativeValuation("series has a pole at t=0");
    return coeff(0);
}

SeriesTrunc operator+(const SeriesTrunc& x, const SeriesTrunc& y) {
    int order = std::min(x.order, y.order);
    if (x.is_zero()) return y.truncated(order);
    if (y.is_zero()) return x.truncated(order);
    int off = std::min(x.offset, y.offset);
    int hi = std::min(order, std::max(x.offset + (int)x.a.size(), y.offset + (int)y.a.size()) - 1);
    SeriesTrunc r{off, std::vector<Gaussian>(std::max(0, hi - off + 1), Gaussian(0l)), order};
    for (int k = off; k <= hi; ++k) r.a[k - off] = x.coeff(k) + y.coeff(k);
    r.normalize();
    return r;
}

SeriesTrunc operator-(const SeriesTrunc& x) {
    SeriesTrunc r = x;
    for (auto& g : r.a) g = -g;
    return r;
}

SeriesTrunc operator-(const SeriesTrunc& x, const SeriesTrunc& y) { return x + (-y); }

SeriesTrunc operator*(const SeriesTrunc& x, const SeriesTrunc& y) {
    int order = std::min(x.order, y.order);
    if (x.is_zero() || y.is_zero()) return SeriesTrunc::zero(order);
    int off = x.offset + y.offset;
    int len = std::min<long>((long)x.a.size() + (long)y.a.size() - 1, (long)order - off + 1);
    if (len <= 0) return SeriesTrunc::zero(order);
    SeriesTrunc r{off, std::vector<Gaussian>(len, Gaussian(0l)), order};
    for (size_t ix = 0; ix < x.a.size(); ++ix) {
        if (x.a[ix].is_zero()) continue;
        for (size_t iy = 0; iy < y.a.size() && (int)(ix + iy) < len; ++iy)
            r.a[ix + iy] += x.a[ix] * y.a[iy];
    }
    r.normalize();
    return r;
}

SeriesTrunc SeriesTrunc::inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero series");
    int len = order + offset >= 0 ? order - (-offset) + 1 : 0;
    len = std::max(len, 1);
    std::vector<Gaussian> b(len, Gaussian(0l));
    Gaussian lead_inv = a[0].inv();
    b[0] = lead_inv;
    for (int k = 1; k < len; ++k) {
        Gaussian acc(0l);
        for (int j = 1; j <= k && j < (int)a.size(); ++j) acc += a[j] * b[k - j];
        b[k] = -(acc * lead_inv);
    }
    SeriesTrunc r{-offset, std::move(b), order};
    r.normalize();
    return r;
}

SeriesTrunc eval_poly_at_series(const Poly<FieldScalar>& f, const SeriesTrunc& z, int order) {
    SeriesTrunc acc = SeriesTrunc::zero(order);
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it)
        acc = acc * z + SeriesTrunc::from_scalar(*it, order);
    return acc;
}

std::optional<SeriesTrunc> newton_lift(const Poly<FieldScalar>& F, const Gaussian& seed, int order) {
    Poly<FieldScalar> dF = F.derivative();
    SeriesTrunc z = SeriesTrunc::constant(seed, order);
    for (int iter = 0; iter < 2 * order + 8; ++iter) {
        SeriesTrunc r = eval_poly_at_series(F, z, order);
        if (r.val() > order) return z;
        SeriesTrunc d = eval_poly_at_series(dF, z, order);
        if (d.is_zero()) return std::nullopt;
        // Hensel: progress needs val(F(z)) > 2 val(F'(z))
        if (r.val() <= 2 * d.val()) return std::nullopt;
        z = z - r * d.inv();
    }
    return std::nullopt;
}

std::string SeriesTrunc::str() const {
    if (is_zero()) return "0 + O(t^" + std::to_string(order + 1) + ")";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_zero()) continue;
        int e = offset + (int)k;
        if (!first) os << " + ";
        first = false;
        os << "(" << gaussian_str(a[k]) << ")";
        if (e != 0) os << "*t^" << e;
    }
    os << " + O(t^" << order + 1 << ")";
    return os.str();
}

}  // namespace residua
