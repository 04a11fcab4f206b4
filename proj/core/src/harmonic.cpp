#include "hopfd2/harmonic.hpp"

namespace hopfd2 {

namespace {

const char* kConv = "conva/convb: convolution products with units coev_L∘ev_R and coev_R∘ev_L";
const char* kFourier = "fri: Fourier transforms exchange composition and convolution";
const char* kFourierInv = "Fourier transforms are bijections with the displayed inverses";
const char* kMuNu = "munu: ring anti-isomorphisms L → R";
const char* kTransport = "convmod/convmodd: Fourier transforms intertwine the bimodule structures";
const char* kAntipode = "s: antipodes are ring anti-automorphisms";
const char* kTwisted = "antipode is a twisted bimodule map";

Matrix require_inverse(const Matrix& m, const char* what) {
    auto inv = inverse(m);
    if (!inv) throw ConsistencyError(std::string(what) + " is not invertible");
    return *inv;
}

Algebra with_table(const EndoRing& r, Matrix table, SVec unit) {
    Algebra a;
    a.field = r.alg.field;
    a.dim = r.dim();
    a.mul = std::move(table);
    a.unit = std::move(unit);
    return a;
}

}  // namespace

Matrix map_matrix(const EndoRing& src, const EndoRing& tgt, const std::function<Cell(const Cell&)>& fn) {
    Matrix out(tgt.dim(), src.dim());
    for (int k = 0; k < src.dim(); ++k) {
        Cell c = fn(src.cell(sv::unit(k)));
        if (!same_expr(c.src, tgt.word) || !same_expr(c.tgt, tgt.word))
            throw InputError("map_matrix: result is not an endomorphism of " + tgt.word->key);
        out.col_mut(k) = tgt.coords(c.m);
    }
    return out;
}

Matrix sandwich_table(const Bicat& b, const EndoRing& r, const Cell& pre, const Cell& post) {
    ExprP ww = b.h(r.word, r.word);
    if (!same_expr(pre.src, r.word) || !same_expr(pre.tgt, ww) || !same_expr(post.src, ww) ||
        !same_expr(post.tgt, r.word))
        throw InputError("sandwich_table: ill-typed pre or post");
    const Quotient& q = b.realize(ww).q;
    Matrix lift = q.section * pre.m;
    Matrix down = post.m * q.projection;
    int d = r.dim();
    int n = r.space_dim;
    Matrix idn = Matrix::identity(n);
    Matrix table(d, d * d);
    for (int j = 0; j < d; ++j) {
        Matrix right = tensor_times(idn, r.basis[j], lift);
        for (int i = 0; i < d; ++i) table.col_mut(i * d + j) = r.coords(down * tensor_times(r.basis[i], idn, right));
    }
    return table;
}

Harmonic build_harmonic(const FrobeniusDatum& f) {
    const Bicat& b = f.b();
    ExprP I = f.i, J = f.j, IJ = f.ij(), JI = f.ji();
    auto id = [&](const ExprP& e) { return b.id(e); };
    auto hc = [&](const Cell& x, const Cell& y) { return b.hcomp(x, y); };
    auto sandwich = [&](const Cell& post, const Cell& mid, const Cell& pre) { return chain(b, {post, mid, pre}); };

    Harmonic h{f};
    h.A = endo_ring(b, IJ);
    h.B = endo_ring(b, JI);
    h.L = endo_ring(b, I);
    h.R = endo_ring(b, J);

    Cell preA = chain(b, {b.assoc(IJ, I, J), hc(b.assoc_inv(I, J, I), id(J)), hc(hc(id(I), f.coev_R), id(J)),
                          hc(b.runit_inv(I), id(J))});
    Cell postA = chain(b, {hc(b.runit(I), id(J)), hc(hc(id(I), f.ev_L), id(J)), hc(b.assoc(I, J, I), id(J)),
                           b.assoc_inv(IJ, I, J)});
    Cell preB = chain(b, {b.assoc_inv(J, I, JI), hc(id(J), b.assoc(I, J, I)), hc(id(J), hc(f.coev_L, id(I))),
                          hc(id(J), b.lunit_inv(I))});
    Cell postB = chain(b, {hc(id(J), b.lunit(I)), hc(id(J), hc(f.ev_R, id(I))), hc(id(J), b.assoc_inv(I, J, I)),
                           b.assoc(J, I, JI)});
    h.convA = with_table(h.A, sandwich_table(b, h.A, preA, postA), h.A.coords(b.compose(f.coev_L, f.ev_R).m));
    h.convB = with_table(h.B, sandwich_table(b, h.B, preB, postB), h.B.coords(b.compose(f.coev_R, f.ev_L).m));

    {
        Cell pre = chain(b, {hc(b.assoc(J, I, J), id(I)), b.assoc_inv(JI, J, I), hc(f.coev_R, id(JI)),
                             b.lunit_inv(JI)});
        Cell post = chain(b, {b.runit(JI), hc(id(JI), f.ev_L), b.assoc(JI, J, I), hc(b.assoc_inv(J, I, J), id(I))});
        h.F = map_matrix(h.A, h.B, [&](const Cell& a) { return sandwich(post, hc(hc(id(J), a), id(I)), pre); });
    }
    {
        Cell pre = chain(b, {hc(id(J), b.assoc_inv(I, J, I)), b.assoc(J, I, JI), hc(id(JI), f.coev_R),
                             b.runit_inv(JI)});
        Cell post = chain(b, {b.lunit(JI), hc(f.ev_L, id(JI)), b.assoc_inv(J, I, JI), hc(id(J), b.assoc(I, J, I))});
        h.Fd = map_matrix(h.A, h.B, [&](const Cell& a) { return sandwich(post, hc(id(J), hc(a, id(I))), pre); });
    }
    {
        Cell pre = chain(b, {hc(id(I), b.assoc_inv(J, I, J)), b.assoc(I, J, IJ), hc(id(IJ), f.coev_L),
                             b.runit_inv(IJ)});
        Cell post = chain(b, {b.lunit(IJ), hc(f.ev_R, id(IJ)), b.assoc_inv(I, J, IJ), hc(id(I), b.assoc(J, I, J))});
        h.Finv = map_matrix(h.B, h.A, [&](const Cell& x) { return sandwich(post, hc(id(I), hc(x, id(J))), pre); });
    }
    {
        Cell pre = chain(b, {hc(b.assoc(I, J, I), id(J)), b.assoc_inv(IJ, I, J), hc(f.coev_L, id(IJ)),
                             b.lunit_inv(IJ)});
        Cell post = chain(b, {b.runit(IJ), hc(id(IJ), f.ev_R), b.assoc(IJ, I, J), hc(b.assoc_inv(I, J, I), id(J))});
        h.Fdinv = map_matrix(h.B, h.A, [&](const Cell& x) { return sandwich(post, hc(hc(id(I), x), id(J)), pre); });
    }
    require_inverse(h.F, "F");
    require_inverse(h.Fd, "Ḟ");
    h.S_A = h.Fdinv * h.F;
    h.S_B = h.F * h.Fdinv;
    h.S_A_inv = require_inverse(h.S_A, "S_A");
    h.S_B_inv = require_inverse(h.S_B, "S_B");

    {
        Cell pre = chain(b, {b.assoc_inv(J, I, J), hc(id(J), f.coev_L), b.runit_inv(J)});
        Cell post = chain(b, {b.lunit(J), hc(f.ev_L, id(J))});
        h.mu = map_matrix(h.L, h.R, [&](const Cell& l) { return sandwich(post, hc(hc(id(J), l), id(J)), pre); });
    }
    {
        Cell pre = chain(b, {b.assoc(J, I, J), hc(f.coev_R, id(J)), b.lunit_inv(J)});
        Cell post = chain(b, {b.runit(J), hc(id(J), f.ev_R)});
        h.nu = map_matrix(h.L, h.R, [&](const Cell& l) { return sandwich(post, hc(id(J), hc(l, id(J))), pre); });
    }
    h.mu_inv = require_inverse(h.mu, "μ");
    h.nu_inv = require_inverse(h.nu, "ν");
    {
        Cell pre = chain(b, {b.assoc_inv(I, J, I), hc(id(I), f.coev_R), b.runit_inv(I)});
        Cell post = chain(b, {b.runit(I), hc(id(I), f.ev_L), b.assoc(I, J, I)});
        h.phi_L = Matrix(h.L.dim(), h.A.dim());
        for (int k = 0; k < h.A.dim(); ++k)
            h.phi_L.col_mut(k) = h.L.coords(sandwich(post, hc(h.A.cell(sv::unit(k)), id(I)), pre).m);
    }

    auto right_of = [&](const EndoRing& src, const EndoRing& tgt, const ExprP& w, const Matrix& pre) {
        Matrix m = map_matrix(src, tgt, [&](const Cell& x) { return hc(id(w), x); });
        return m * pre;
    };
    auto left_of = [&](const EndoRing& src, const EndoRing& tgt, const ExprP& w, const Matrix& pre) {
        Matrix m = map_matrix(src, tgt, [&](const Cell& x) { return hc(x, id(w)); });
        return m * pre;
    };
    h.s_L = left_of(h.L, h.A, J, Matrix::identity(h.L.dim()));
    h.t_L = right_of(h.R, h.A, I, h.mu);
    h.s_R = right_of(h.R, h.A, I, Matrix::identity(h.R.dim()));
    h.t_R = left_of(h.L, h.A, J, h.nu_inv);
    h.sB_L = left_of(h.R, h.B, I, Matrix::identity(h.R.dim()));
    h.tB_L = right_of(h.L, h.B, J, h.nu_inv);
    h.sB_R = right_of(h.L, h.B, J, Matrix::identity(h.L.dim()));
    h.tB_R = left_of(h.R, h.B, I, h.mu);
    return h;
}

Report verify_convolution(const Harmonic& h) {
    Report rep;
    rep.title = "convolution";
    auto ring = [&](const std::string& name, const Algebra& a) {
        auto err = a.validate();
        rep.add(bool_item(name, kConv, !err, err.value_or("")));
    };
    ring("conv.A.ring", h.convA);
    ring("conv.B.ring", h.convB);
    ring("comp.A.ring", h.A.alg);
    ring("comp.B.ring", h.B.alg);
    return rep;
}

Report verify_fourier(const Harmonic& h) {
    Report rep;
    rep.title = "fourier";
    int dA = h.A.dim(), dB = h.B.dim();
    rep.add(bool_item("dims.A=B", kFourierInv, dA == dB, std::to_string(dA) + " vs " + std::to_string(dB)));
    if (dA != dB) return rep;
    Matrix IA = Matrix::identity(dA), IB = Matrix::identity(dB);
    rep.add(residual_item("F.inv.left", kFourierInv, h.Finv * h.F - IA));
    rep.add(residual_item("F.inv.right", kFourierInv, h.F * h.Finv - IB));
    rep.add(residual_item("Fd.inv.left", kFourierInv, h.Fdinv * h.Fd - IA));
    rep.add(residual_item("Fd.inv.right", kFourierInv, h.Fd * h.Fdinv - IB));
    Residuals r1(dB), r2(dB), r3(dB), r4(dB);
    for (int i = 0; i < dA; ++i)
        for (int j = 0; j < dA; ++j) {
            SVec ai = sv::unit(i), aj = sv::unit(j);
            SVec comp = h.A.alg.product(ai, aj), conv = h.convA.product(ai, aj);
            r1.add(h.F.apply(comp), h.convB.product(h.F.col(j), h.F.col(i)));
            r2.add(h.Fd.apply(comp), h.convB.product(h.Fd.col(i), h.Fd.col(j)));
            r3.add(h.F.apply(conv), h.B.alg.product(h.F.col(i), h.F.col(j)));
            r4.add(h.Fd.apply(conv), h.B.alg.product(h.Fd.col(j), h.Fd.col(i)));
        }
    rep.add(r1.item("fri.F.comp", kFourier));
    rep.add(r2.item("fri.Fd.comp", kFourier));
    rep.add(r3.item("fri.F.conv", kFourier));
    rep.add(r4.item("fri.Fd.conv", kFourier));
    return rep;
}

Report verify_transport(const Harmonic& h) {
    Report rep;
    rep.title = "transport";
    const Algebra& A = h.A.alg;
    const Algebra& B = h.B.alg;
    const Algebra& L = h.L.alg;
    const Algebra& R = h.R.alg;
    int dB = h.B.dim();

    auto anti = [&](const std::string& name, const Matrix& m) {
        Residuals res(R.dim);
        for (int x = 0; x < L.dim; ++x)
            for (int y = 0; y < L.dim; ++y)
                res.add(m.apply(L.product(sv::unit(x), sv::unit(y))), R.product(m.col(y), m.col(x)));
        res.add(m.apply(L.unit), R.unit);
        rep.add(res.item(name, kMuNu));
    };
    anti("mu.anti", h.mu);
    anti("nu.anti", h.nu);

    Residuals f1(dB), f2(dB), f3(dB), f4(dB), d1(dB), d2(dB), d3(dB), d4(dB);
    for (int k = 0; k < h.A.dim(); ++k) {
        SVec a = sv::unit(k);
        SVec Fa = h.F.col(k), Fda = h.Fd.col(k);
        for (int x = 0; x < L.dim; ++x) {
            SVec la = A.product(h.s_L.col(x), a);
            SVec al = A.product(h.t_L.col(x), a);
            f1.add(h.F.apply(la), B.product(h.sB_R.col(x), Fa));
            f2.add(h.F.apply(al), B.product(Fa, h.sB_R.col(x)));
            d1.add(h.Fd.apply(la), B.product(Fda, h.tB_R.col(x)));
            d2.add(h.Fd.apply(al), B.product(h.tB_R.col(x), Fda));
        }
        for (int y = 0; y < R.dim; ++y) {
            SVec ar = A.product(a, h.s_R.col(y));
            SVec ra = A.product(a, h.t_R.col(y));
            f3.add(h.F.apply(ar), B.product(Fa, h.sB_L.col(y)));
            f4.add(h.F.apply(ra), B.product(h.sB_L.col(y), Fa));
            d3.add(h.Fd.apply(ar), B.product(h.tB_L.col(y), Fda));
            d4.add(h.Fd.apply(ra), B.product(Fda, h.tB_L.col(y)));
        }
    }
    rep.add(f1.item("convmod.F.l.a", kTransport));
    rep.add(f2.item("convmod.F.a.l", kTransport));
    rep.add(f3.item("convmod.F.a.r", kTransport));
    rep.add(f4.item("convmod.F.r.a", kTransport));
    rep.add(d1.item("convmodd.Fd.l.a", kTransport));
    rep.add(d2.item("convmodd.Fd.a.l", kTransport));
    rep.add(d3.item("convmodd.Fd.a.r", kTransport));
    rep.add(d4.item("convmodd.Fd.r.a", kTransport));
    return rep;
}

Report verify_antipodes(const Harmonic& h) {
    Report rep;
    rep.title = "antipodes";
    auto anti = [&](const std::string& name, const Algebra& a, const Matrix& s, const Matrix& s_inv) {
        Residuals res(a.dim);
        for (int x = 0; x < a.dim; ++x)
            for (int y = 0; y < a.dim; ++y)
                res.add(s.apply(a.product(sv::unit(x), sv::unit(y))), a.product(s.col(y), s.col(x)));
        res.add(s.apply(a.unit), a.unit);
        rep.add(res.item(name, kAntipode));
        rep.add(residual_item(name + ".bijective", kAntipode, s * s_inv - Matrix::identity(a.dim)));
    };
    anti("S_A.anti", h.A.alg, h.S_A, h.S_A_inv);
    anti("S_B.anti", h.B.alg, h.S_B, h.S_B_inv);
    {
        Residuals res(h.A.dim());
        res.add(h.S_A.apply(h.iA()), h.iA());
        rep.add(res.item("S_A.i_A", "the integral i_A is invariant under S_A"));
    }
    const Algebra& A = h.A.alg;
    Residuals tl(A.dim), tr(A.dim);
    for (int k = 0; k < A.dim; ++k) {
        SVec a = sv::unit(k);
        SVec Sa = h.S_A.col(k);
        for (int x = 0; x < h.L.dim(); ++x) {
            // S_A(l·a) = S_A(a)·ν(l) and S_A(a·l) = ν(l)·S_A(a)
            SVec nu_l = h.nu.col(x);
            tl.add(h.S_A.apply(A.product(h.s_L.col(x), a)), A.product(Sa, h.s_R.apply(nu_l)));
            tl.add(h.S_A.apply(A.product(h.t_L.col(x), a)), A.product(Sa, h.t_R.apply(nu_l)));
        }
        for (int y = 0; y < h.R.dim(); ++y) {
            // S_A(r·a) = S_A(a)·μ⁻¹(r) and S_A(a·r) = μ⁻¹(r)·S_A(a)
            SVec mi_r = h.mu_inv.col(y);
            tr.add(h.S_A.apply(A.product(a, h.t_R.col(y))), A.product(h.t_L.apply(mi_r), Sa));
            tr.add(h.S_A.apply(A.product(a, h.s_R.col(y))), A.product(h.s_L.apply(mi_r), Sa));
        }
    }
    rep.add(tl.item("S_A.twisted.L", kTwisted));
    rep.add(tr.item("S_A.twisted.R", kTwisted));
    return rep;
}

Report verify_harmonic(const Harmonic& h) {
    Report rep;
    rep.title = "harmonic";
    rep.append(verify_convolution(h));
    rep.append(verify_fourier(h));
    rep.append(verify_transport(h));
    rep.append(verify_antipodes(h));
    return rep;
}

}  // namespace hopfd2
