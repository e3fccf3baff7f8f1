#include "residua/forms.hpp"

#include "residua/errors.hpp"

namespace residua {

int BinForm::ord_infinity() const {
    for (int i = 0; i <= deg; ++i)
        if (!a[i].is_zero()) return i;
    return deg + 1;  // zero form
}

int BinForm::ord_zero() const {
    for (int i = deg; i >= 0; --i)
        if (!a[i].is_zero()) return deg - i;
    return deg + 1;
}

Poly<Gaussian> BinForm::affine() const {
    std::vector<Gaussian> c(deg + 1, Gaussian(0l));
    for (int i = 0; i <= deg; ++i) c[deg - i] = a[i];
    return Poly<Gaussian>(std::move(c));
}

BinForm BinForm::from_affine(const Poly<Gaussian>& p, int deg) {
    BinForm f = BinForm::zero(deg);
    for (int k = 0; k <= p.degree(); ++k) f.a[deg - k] = p.c[k];
    return f;
}

Gaussian BinForm::eval(const Gaussian& z0, const Gaussian& w0) const {
    // Horner in z with w-powers
    Gaussian acc(0l);
    for (int i = 0; i <= deg; ++i) acc = acc * z0 + a[i] * wpow(w0, i);
    return acc;
}

Gaussian BinForm::wpow(const Gaussian& w0, int k) {
    Gaussian r(1l);
    for (int j = 0; j < k; ++j) r *= w0;
    return r;
}

BinForm BinForm::dz() const {
    if (deg == 0) return BinForm::zero(0);
    BinForm r = BinForm::zero(deg - 1);
    for (int i = 0; i <= deg - 1; ++i) r.a[i] = a[i] * Gaussian(static_cast<long>(deg - i));
    return r;
}

BinForm BinForm::dw() const {
    if (deg == 0) return BinForm::zero(0);
    BinForm r = BinForm::zero(deg - 1);
    for (int i = 0; i <= deg - 1; ++i) r.a[i] = a[i + 1] * Gaussian(static_cast<long>(i + 1));
    return r;
}

BinForm BinForm::normalized() const {
    for (int i = 0; i <= deg; ++i) {
        if (!a[i].is_zero()) {
            Gaussian inv = a[i].inv();
            BinForm r = *this;
            for (auto& g : r.a) g *= inv;
            return r;
        }
    }
    return *this;
}

BinForm operator*(const BinForm& f, const BinForm& g) {
    BinForm r = BinForm::zero(f.deg + g.deg);
    for (int i = 0; i <= f.deg; ++i) {
        if (f.a[i].is_zero()) continue;
        for (int j = 0; j <= g.deg; ++j) r.a[i + j] += f.a[i] * g.a[j];
    }
    return r;
}

BinForm form_gcd(const BinForm& f, const BinForm& g) {
    if (f.is_zero()) return g.normalized();
    if (g.is_zero()) return f.normalized();
    int wf = f.ord_infinity(), wg = g.ord_infinity();
    int zf = f.ord_zero(), zg = g.ord_zero();
    Poly<Gaussian> gc = poly_gcd(f.affine(), g.affine());
    // the common z-power is invisible affinely only through ord at 0, which
    // poly_gcd already sees; the common w-power must be added back
    int wcommon = std::min(wf, wg);
    (void)zf; (void)zg;
    int d = gc.degree() + wcommon;
    BinForm h = BinForm::from_affine(gc, d);  // pads with w^wcommon
    return h.normalized();
}

BinForm form_div_exact(const BinForm& f, const BinForm& g) {
    // f = g * q exactly; q has degree f.deg - g.deg
    int wq = f.ord_infinity() - g.ord_infinity();
    Poly<Gaussian> qa = poly_div_exact(f.affine(), g.affine());
    int dq = f.deg - g.deg;
    BinForm q = BinForm::zero(dq);
    for (int k = 0; k <= qa.degree(); ++k) q.a[dq - k] = qa.c[k];
    (void)wq;
    return q;
}

long HomPair::min_coeff_val() const {
    long m = FieldScalar::val_infinity;
    for (const auto& c : P) m = std::min(m, c.val());
    for (const auto& c : Q) m = std::min(m, c.val());
    return m;
}

bool HomPair::is_zero_pair() const { return min_coeff_val() == FieldScalar::val_infinity; }

MobiusK MobiusK::identity() {
    MobiusK A;
    A.m[0][0] = FieldScalar(1l); A.m[0][1] = FieldScalar(0l);
    A.m[1][0] = FieldScalar(0l); A.m[1][1] = FieldScalar(1l);
    return A;
}

MobiusK MobiusK::diag(const FieldScalar& a, const FieldScalar& d) {
    MobiusK A = identity();
    A.m[0][0] = a;
    A.m[1][1] = d;
    return A;
}

FieldScalar MobiusK::det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

MobiusK MobiusK::adjugate() const {
    MobiusK A;
    A.m[0][0] = m[1][1];  A.m[0][1] = -m[0][1];
    A.m[1][0] = -m[1][0]; A.m[1][1] = m[0][0];
    return A;
}

MobiusK operator*(const MobiusK& A, const MobiusK& B) {
    MobiusK C;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            C.m[r][c] = A.m[r][0] * B.m[0][c] + A.m[r][1] * B.m[1][c];
    return C;
}

HomPair compose(const HomPair& outer, const HomPair& inner) {
    int e = outer.deg, D = inner.deg;
    // powers of the inner forms as coefficient vectors of degree k*D forms
    std::vector<std::vector<FieldScalar>> Ppow(e + 1), Qpow(e + 1);
    Ppow[0] = {FieldScalar(1l)};
    Qpow[0] = {FieldScalar(1l)};
    auto mul = [](const std::vector<FieldScalar>& x, const std::vector<FieldScalar>& y) {
        std::vector<FieldScalar> r(x.size() + y.size() - 1, FieldScalar());
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
        }
        return r;
    };
    for (int k = 1; k <= e; ++k) {
        Ppow[k] = mul(Ppow[k - 1], inner.P);
        Qpow[k] = mul(Qpow[k - 1], inner.Q);
    }
    HomPair out;
    out.deg = e * D;
    out.P.assign(out.deg + 1, FieldScalar());
    out.Q.assign(out.deg + 1, FieldScalar());
    for (int i = 0; i <= e; ++i) {
        // monomial z^{e-i} w^i of the outer pair becomes P_in^{e-i} Q_in^i
        std::vector<FieldScalar> mono = mul(Ppow[e - i], Qpow[i]);
        for (size_t j = 0; j < mono.size(); ++j) {
            if (mono[j].is_zero()) continue;
            if (!outer.P[i].is_zero()) out.P[j] = out.P[j] + outer.P[i] * mono[j];
            if (!outer.Q[i].is_zero()) out.Q[j] = out.Q[j] + outer.Q[i] * mono[j];
        }
    }
    return out;
}

HomPair normalize_pair(const HomPair& f) {
    long m = f.min_coeff_val();
    if (m == FieldScalar::val_infinity || m == 0) return f;
    FieldScalar scale = FieldScalar::t_power(static_cast<int>(-m));
    HomPair g = f;
    for (auto& c : g.P) c = c * scale;
    for (auto& c : g.Q) c = c * scale;
    return g;
}

ReducedMap split_reduction(const HomPair& f) {
    BinForm Pr = BinForm::zero(f.deg), Qr = BinForm::zero(f.deg);
    for (int i = 0; i <= f.deg; ++i) {
        Pr.a[i] = f.P[i].reduce_at_zero();
        Qr.a[i] = f.Q[i].reduce_at_zero();
    }
    ReducedMap rm;
    if (Pr.is_zero() && Qr.is_zero())
        throw ConstantReduction("split_reduction: pair not normalized (reduces to (0,0))");
    if (Pr.is_zero()) {
        rm.H = Qr.normalized();
        rm.phi_num = BinForm::zero(0);
        rm.phi_den = BinForm::one();
        rm.deg_phi = 0;
        return rm;
    }
    if (Qr.is_zero()) {
        rm.H = Pr.normalized();
        rm.phi_num = BinForm::one();
        rm.phi_den = BinForm::zero(0);
        rm.deg_phi = 0;
        return rm;
    }
    rm.H = form_gcd(Pr, Qr);
    rm.phi_num = form_div_exact(Pr, rm.H);
    rm.phi_den = form_div_exact(Qr, rm.H);
    rm.deg_phi = f.deg - rm.H.deg;
    return rm;
}

FieldScalar resultant(const HomPair& f) {
    int D = f.deg;
    int n = 2 * D;
    // Sylvester matrix rows: D shifts of P's coefficients, then D shifts of Q's
    std::vector<std::vector<FieldScalar>> M(n, std::vector<FieldScalar>(n, FieldScalar()));
    for (int r = 0; r < D; ++r)
        for (int i = 0; i <= D; ++i) M[r][r + i] = f.P[i];
    for (int r = 0; r < D; ++r)
        for (int i = 0; i <= D; ++i) M[D + r][r + i] = f.Q[i];
    FieldScalar det(1l);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!M[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) return FieldScalar();
        if (piv != col) { std::swap(M[piv], M[col]); sign = -sign; }
        det = det * M[col][col];
        FieldScalar inv = M[col][col].inv();
        for (int r = col + 1; r < n; ++r) {
            if (M[r][col].is_zero()) continue;
            FieldScalar factor = M[r][col] * inv;
            for (int c2 = col; c2 < n; ++c2) M[r][c2] = M[r][c2] - factor * M[col][c2];
        }
    }
    return sign < 0 ? -det : det;
}

HomPair mobius_compose(const MobiusK& A, const HomPair& f) {
    HomPair g;
    g.deg = f.deg;
    g.P.assign(f.deg + 1, FieldScalar());
    g.Q.assign(f.deg + 1, FieldScalar());
    for (int i = 0; i <= f.deg; ++i) {
        g.P[i] = A.m[0][0] * f.P[i] + A.m[0][1] * f.Q[i];
        g.Q[i] = A.m[1][0] * f.P[i] + A.m[1][1] * f.Q[i];
    }
    return g;
}

HomPair mobius_precompose(const HomPair& f, const MobiusK& M) {
    // substitute (z, w) <- (M00 z + M01 w, M10 z + M11 w)
    int D = f.deg;
    std::vector<std::vector<FieldScalar>> upow(D + 1), vpow(D + 1);
    upow[0] = {FieldScalar(1l)};
    vpow[0] = {FieldScalar(1l)};
    std::vector<FieldScalar> u = {M.m[0][0], M.m[0][1]};
    std::vector<FieldScalar> v = {M.m[1][0], M.m[1][1]};
    auto mul = [](const std::vector<FieldScalar>& x, const std::vector<FieldScalar>& y) {
        std::vector<FieldScalar> r(x.size() + y.size() - 1, FieldScalar());
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
        return r;
    };
    for (int k = 1; k <= D; ++k) {
        upow[k] = mul(upow[k - 1], u);
        vpow[k] = mul(vpow[k - 1], v);
    }
    HomPair g;
    g.deg = D;
    g.P.assign(D + 1, FieldScalar());
    g.Q.assign(D + 1, FieldScalar());
    for (int i = 0; i <= D; ++i) {
        std::vector<FieldScalar> mono = mul(upow[D - i], vpow[i]);
        for (size_t j = 0; j < mono.size(); ++j) {
            if (mono[j].is_zero()) continue;
            if (!f.P[i].is_zero()) g.P[j] = g.P[j] + f.P[i] * mono[j];
            if (!f.Q[i].is_zero()) g.Q[j] = g.Q[j] + f.Q[i] * mono[j];
        }
    }
    return g;
}

VertexClass classify_vertex(const MobiusK& B) {
    long mv = FieldScalar::val_infinity;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) mv = std::min(mv, B.m[r][c].val());
    FieldScalar scale = FieldScalar::t_power(static_cast<int>(-mv));
    Gaussian red[2][2];
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) red[r][c] = (B.m[r][c] * scale).reduce_at_zero();
    Gaussian det = red[0][0] * red[1][1] - red[0][1] * red[1][0];
    VertexClass out;
    if (!det.is_zero()) {
        out.gauss_fixed = true;
        return out;
    }
    // rank 1: the image is spanned by any nonzero column
    if (!red[0][0].is_zero() || !red[1][0].is_zero()) {
        out.dir_num = red[0][0];
        out.dir_den = red[1][0];
    } else {
        out.dir_num = red[0][1];
        out.dir_den = red[1][1];
    }
    return out;
}

}  // namespace residua
