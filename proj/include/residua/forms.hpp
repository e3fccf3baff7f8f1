#pragma once

#include <array>
#include <vector>

#include "residua/scalar.hpp"

namespace residua {

// Binary form of fixed degree over Q(i).  Entry i is the coefficient of
// z^{deg-i} w^i.  The all-zero vector is the legal zero form.
struct BinForm {
    int deg = 0;
    std::vector<Gaussian> a;  // size deg+1

    BinForm() : a(1, Gaussian(0l)) {}
    BinForm(int d, std::vector<Gaussian> coeffs) : deg(d), a(std::move(coeffs)) {}
    static BinForm zero(int d) { return {d, std::vector<Gaussian>(d + 1, Gaussian(0l))}; }
    static BinForm one() { return {0, {Gaussian(1l)}}; }

    bool is_zero() const {
        for (const auto& g : a)
            if (!g.is_zero()) return false;
        return true;
    }

    // order of vanishing at (1:0), i.e. the power of w dividing the form
    int ord_infinity() const;
    // order of vanishing at (0:1), i.e. the power of z dividing the form
    int ord_zero() const;

    Poly<Gaussian> affine() const;  // f(z, 1)
    static BinForm from_affine(const Poly<Gaussian>& p, int deg);

    Gaussian eval(const Gaussian& z0, const Gaussian& w0) const;
    BinForm dz() const;  // partial derivative in z
    BinForm dw() const;

    // scale so the first nonzero coefficient (z-power descending) is 1
    BinForm normalized() const;

    friend BinForm operator*(const BinForm& f, const BinForm& g);
    friend bool operator==(const BinForm& f, const BinForm& g) {
        return f.deg == g.deg && f.a == g.a;
    }
};

BinForm form_gcd(const BinForm& f, const BinForm& g);       // normalized
BinForm form_div_exact(const BinForm& f, const BinForm& g);

// gcd-plus-reduction split of a pair of equal-degree forms: the stored
// multiplicity data of the degenerate limit.  phi_num/phi_den are coprime
// forms of common degree deg_phi; a vanished side gives the constant map.
struct ReducedMap {
    BinForm H;
    BinForm phi_num, phi_den;
    int deg_phi = 0;

    bool phi_constant() const { return deg_phi == 0; }
};

// Pair of degree-D homogeneous forms over K defining a rational map of the
// Berkovich line.  Entry i of P,Q is the coefficient of z^{D-i} w^i.
struct HomPair {
    int deg = 0;
    std::vector<FieldScalar> P, Q;

    HomPair() = default;
    HomPair(int d, std::vector<FieldScalar> p, std::vector<FieldScalar> q)
        : deg(d), P(std::move(p)), Q(std::move(q)) {}

    long min_coeff_val() const;
    bool is_zero_pair() const;
};

struct MobiusK {
    std::array<std::array<FieldScalar, 2>, 2> m;

    static MobiusK identity();
    static MobiusK diag(const FieldScalar& a, const FieldScalar& d);
    FieldScalar det() const;
    MobiusK adjugate() const;          // projective inverse
    friend MobiusK operator*(const MobiusK& A, const MobiusK& B);
};

// lift-level substitution: outer(P_inner, Q_inner)
HomPair compose(const HomPair& outer, const HomPair& inner);

// divide by t^m, m the minimal coefficient valuation; min val becomes 0
HomPair normalize_pair(const HomPair& f);

// reduce a normalized pair mod t and split off the gcd
ReducedMap split_reduction(const HomPair& f);

// resultant of (P, Q) as degree-D forms (Sylvester determinant over K)
FieldScalar resultant(const HomPair& f);

HomPair mobius_compose(const MobiusK& A, const HomPair& f);       // A . f
HomPair mobius_precompose(const HomPair& f, const MobiusK& M);    // f . M

// Rivera-Letelier reduction of a Mobius map: either it fixes the Gauss
// point, or it contracts toward one residue direction.
struct VertexClass {
    bool gauss_fixed = false;
    Gaussian dir_num, dir_den;  // projective image (a:b) when rank drops
};
VertexClass classify_vertex(const MobiusK& B);

}  // namespace residua
