#pragma once

#include <optional>
#include <vector>

#include "residua/scalar.hpp"

namespace residua {

// Truncated Laurent series in t over Q(i): sum_{k>=offset} a[k-offset] t^k,
// known for exponents <= order.  Zero is the empty coefficient vector.
struct SeriesTrunc {
    int offset = 0;
    std::vector<Gaussian> a;
    int order = 0;

    static SeriesTrunc zero(int order) { return {0, {}, order}; }
    static SeriesTrunc constant(const Gaussian& g, int order);
    static SeriesTrunc from_scalar(const FieldScalar& x, int order);

    bool is_zero() const { return a.empty(); }
    long val() const { return is_zero() ? FieldScalar::val_infinity : offset; }
    Gaussian coeff(int k) const;  // coefficient of t^k
    void normalize();             // strip leading/trailing zeros, clamp to order

    SeriesTrunc truncated(int new_order) const;
    Gaussian reduce_at_zero() const;  // value at t=0 (requires val >= 0)

    friend SeriesTrunc operator+(const SeriesTrunc& x, const SeriesTrunc& y);
    friend SeriesTrunc operator-(const SeriesTrunc& x);
    friend SeriesTrunc operator-(const SeriesTrunc& x, const SeriesTrunc& y);
    friend SeriesTrunc operator*(const SeriesTrunc& x, const SeriesTrunc& y);
    SeriesTrunc inv() const;  // requires nonzero

    friend bool operator==(const SeriesTrunc& x, const SeriesTrunc& y) {
        return x.offset == y.offset && x.a == y.a;
    }

    std::string str() const;
};

// Evaluate a K-coefficient polynomial at a series argument.
SeriesTrunc eval_poly_at_series(const Poly<FieldScalar>& f, const SeriesTrunc& z, int order);

// Newton lifting of a root of F from its value at t=0.  Returns nullopt
// ("NoLift") when the Hensel criterion fails or the iteration stalls.
// On success the residual F(result) has valuation > order.
std::optional<SeriesTrunc> newton_lift(const Poly<FieldScalar>& F, const Gaussian& seed, int order);

}  // namespace residua
