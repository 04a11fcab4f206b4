#include "hopfd2/inverse.hpp"

#include <tuple>

namespace hopfd2 {

namespace {

const char* kConvh = "convh/convun: h∗k = _Li(_Li⁻¹(h)_Li⁻¹(k)) with unit η(r) = i s_R(r) = i t_R(r)";
const char* kConvform = "convform: h∗k = t_L∘_*ρ(h₍₂₎S(k))h₍₁₎ = s_L∘_*ρ(hS(k₍₁₎))k₍₂₎";
const char* kFrobH = "(H_H, ∗, η, γ_R, π_R) is a Frobenius algebra in M_H";
const char* kGammaL = "γ_L(h∗k) = h₍₁₎⊗h₍₂₎∗k = h∗k₍₁₎⊗k₍₂₎";
const char* kRemark = "a non-degenerate right integral is a left integral iff it is S-invariant";
const char* kCoh = "coh: explicit forms of the coherence isomorphisms";
const char* kXX = "X⊗_Q X̄ is the U-U bimodule (H_H, l_H, r_H)";
const char* kCoeq = "tensoring in M_H preserves the coequalizers defining ⊗_Q and ⊗_U";
const char* kLambda = "Lambda: Λ(h)k = hk is a ring isomorphism H → A";
const char* kD2H = "the quasi-basis Λ(S(i₍₁₎))⊗Λ(i₍₂₎) satisfies the D2 condition";
const char* kIso = "the Hopf algebroid A is isomorphic to H via (Λ, Λ∘s_L) when S(i) = i";

SVec e(int k) { return sv::unit(k); }

void require_right_integral(const HopfAlgebroid& H, const SVec& i) {
    if (!is_right_integral(H, i)) throw InputError("the element is not a right integral of " + H.name);
}

RightWitness require_nondegenerate(const HopfAlgebroid& H, const SVec& i) {
    auto w = right_nondegeneracy(H, i);
    if (!w) throw InputError("the right integral of " + H.name + " is degenerate");
    return *w;
}

// t_L∘_*ρ(h₍₂₎S(k))h₍₁₎
SVec convform_left(const ConvFrobenius& c, const Matrix& rho, const SVec& h, const SVec& k) {
    const HopfAlgebroid& H = c.H;
    const Algebra& A = H.A();
    SVec Sk = H.S.apply(k);
    return contract(H.left.gamma.apply(h), A.dim, [&](int p, int q) {
        return A.product(H.left.t.apply(rho.apply(A.product(e(q), Sk))), e(p));
    });
}

// s_L∘_*ρ(hS(k₍₁₎))k₍₂₎
SVec convform_right(const ConvFrobenius& c, const Matrix& rho, const SVec& h, const SVec& k) {
    const HopfAlgebroid& H = c.H;
    const Algebra& A = H.A();
    return contract(H.left.gamma.apply(k), A.dim, [&](int p, int q) {
        return A.product(H.left.s.apply(rho.apply(A.product(h, H.S.col(p)))), e(q));
    });
}

// Plain Kronecker presentation of a realized 1-cell: projection from the
// plain product of its generator carriers.
Matrix plain_projection(const Bicat& b, const ExprP& x) {
    if (x->kind != Expr::Kind::Node) return Matrix::identity(b.dim(x));
    const Realized& r = b.realize(x);
    return r.q.projection * tensor(plain_projection(b, x->l), plain_projection(b, x->r));
}

}  // namespace

ConvFrobenius conv_on_H(const HopfAlgebroid& H, const SVec& i) {
    if (auto err = validate_structure(H)) throw InputError("invalid Hopf algebroid " + H.name + ": " + *err);
    require_right_integral(H, i);
    if (!sv::equal(H.S.apply(i), i))
        throw InputError("the right integral of " + H.name + " is not invariant under the antipode");
    ConvFrobenius c{H, i, require_nondegenerate(H, i), {}, {}};
    const Algebra& A = H.A();
    const Algebra& ring = c.witness.lower_left.ring;
    int d = A.dim;
    c.conv.field = A.field;
    c.conv.dim = d;
    c.conv.mul = Matrix(d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            c.conv.mul.col_mut(a * d + b) =
                c.witness.L_ups.apply(ring.product(c.witness.L_ups_inv.col(a), c.witness.L_ups_inv.col(b)));
    c.conv.unit = c.witness.L_ups.apply(ring.unit);
    int nr = H.right.R.dim;
    c.eta = Matrix(d, nr);
    for (int r = 0; r < nr; ++r) c.eta.col_mut(r) = A.product(i, H.right.s.col(r));
    return c;
}

Report verify_conv_frobenius(const ConvFrobenius& c) {
    const HopfAlgebroid& H = c.H;
    const Algebra& A = H.A();
    const Algebra& C = c.conv;
    int d = A.dim, nr = H.right.R.dim;
    Report rep;
    rep.title = "convolution Frobenius algebra";
    Matrix rho = c.witness.lower_left.map(c.witness.rho);

    Residuals f1(d), f2(d), assoc(d), lin(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            SVec hk = C.mul.col(a * d + b);
            f1.add(convform_left(c, rho, e(a), e(b)), hk);
            f2.add(convform_right(c, rho, e(a), e(b)), hk);
            for (int x = 0; x < d; ++x) {
                assoc.add(C.product(hk, e(x)), C.product(e(a), C.mul.col(b * d + x)));
                // (k h⁽¹⁾)∗(k′h⁽²⁾) = (k∗k′)h with k = a, k′ = b, h = x
                SVec lhs = contract(H.right.gamma.col(x), d, [&](int p, int q) {
                    return C.product(A.product(e(a), e(p)), A.product(e(b), e(q)));
                });
                lin.add(lhs, A.product(hk, e(x)));
            }
        }
    rep.add(f1.item("conv.convform.left", kConvform));
    rep.add(f2.item("conv.convform.right", kConvform));
    rep.add(assoc.item("conv.assoc", kFrobH));
    rep.add(lin.item("conv.mul.H_linear", kFrobH));
    rep.add(bool_item("conv.unit.i", kConvh, sv::equal(C.unit, c.i)));
    rep.add(bool_item("conv.ring", kConvh, !C.validate().has_value(), C.validate().value_or("")));

    Residuals st(d), eta_lin(d), ul(d), ur(d);
    for (int r = 0; r < nr; ++r) {
        st.add(c.eta.col(r), A.product(c.i, H.right.t.col(r)));
        for (int x = 0; x < d; ++x) {
            SVec act = H.right.pi.apply(A.product(H.right.s.col(r), e(x)));
            eta_lin.add(c.eta.apply(act), A.product(c.eta.col(r), e(x)));
            ur.add(C.product(e(x), c.eta.col(r)), A.product(e(x), H.right.s.col(r)));
            ul.add(C.product(c.eta.col(r), e(x)), A.product(e(x), H.right.t.col(r)));
        }
    }
    rep.add(st.item("conv.eta.s=t", kConvh));
    rep.add(eta_lin.item("conv.eta.H_linear", kFrobH));
    rep.add(ul.item("conv.unit.left", kFrobH));
    rep.add(ur.item("conv.unit.right", kFrobH));

    Quotient qr = right_tensor(H.right);
    Quotient ql = left_tensor(H.left);
    Residuals gr1(qr.dim), gr2(qr.dim), gl1(ql.dim), gl2(ql.dim);
    Matrix id = Matrix::identity(d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            SVec hk = C.mul.col(a * d + b);
            Matrix on_right = C.right_mult(e(b)), on_left = C.left_mult(e(a));
            SVec r0 = qr.projection.apply(H.right.gamma.apply(hk));
            gr1.add(r0, qr.projection.apply(tensor_apply(id, on_right, H.right.gamma.col(a))));
            gr2.add(r0, qr.projection.apply(tensor_apply(on_left, id, H.right.gamma.col(b))));
            SVec l0 = ql.projection.apply(H.left.gamma.apply(hk));
            gl1.add(l0, ql.projection.apply(tensor_apply(id, on_right, H.left.gamma.col(a))));
            gl2.add(l0, ql.projection.apply(tensor_apply(on_left, id, H.left.gamma.col(b))));
        }
    rep.add(gr1.item("conv.gamma_R.left_leg", kFrobH));
    rep.add(gr2.item("conv.gamma_R.right_leg", kFrobH));
    rep.add(gl1.item("conv.gamma_L.left_leg", kGammaL));
    rep.add(gl2.item("conv.gamma_L.right_leg", kGammaL));
    return rep;
}

Report s_invariance_remark(const HopfAlgebroid& H, const SVec& i) {
    require_right_integral(H, i);
    RightWitness w = require_nondegenerate(H, i);
    const Algebra& A = H.A();
    Report rep;
    rep.title = "S-invariance of the integral";
    bool left = is_left_integral(H, i);
    bool invariant = sv::equal(H.S.apply(i), i);
    rep.add(bool_item("remark.iff", kRemark, left == invariant,
                      std::string("left integral: ") + (left ? "yes" : "no") +
                          ", S-invariant: " + (invariant ? "yes" : "no")));
    Matrix rho = w.lower_left.map(w.rho);
    Matrix i_rho = restrict_left(A, rho, i);  // b ↦ _*ρ(bi)
    SVec chain = act_lower_left(H, i_rho, i);
    rep.add(residual_item("remark.chain.first", kRemark, Matrix::column(sv::sub(chain, H.S_inv.apply(i)), A.dim)));
    // the chain ends at i exactly when i is also a left integral
    rep.add(bool_item("remark.chain.end", kRemark, sv::equal(chain, i) == left));
    return rep;
}

FrobeniusDatum build_X(const ConvFrobenius& c) {
    const HopfAlgebroid& H = c.H;
    const Algebra& A = H.A();
    int d = A.dim, nr = H.right.R.dim;
    auto data = std::make_shared<const RightBialgebroidData>(H.right.data());
    auto bicat = std::make_shared<Bicat>(MonoidalInstance::modh(data));
    const MonoidalInstance& inst = bicat->instance();

    auto U = std::make_shared<Monoid>();
    U->name = "U";
    U->obj = inst.unit();
    U->mul = inst.lunit_block(U->obj);
    U->unit = Matrix::identity(nr);
    Obj HH{d, {}};
    for (int a = 0; a < d; ++a) HH.act.push_back(A.right_mult(e(a)));
    auto Q = std::make_shared<Monoid>();
    Q->name = "Q";
    Q->obj = HH;
    Q->mul = c.conv.mul;
    Q->unit = c.eta;
    int u = bicat->add_object(U);
    int q = bicat->add_object(Q);

    Bimodule X{bicat->object(u), bicat->object(q), HH, {}, {}};
    Bimodule Xb{bicat->object(q), bicat->object(u), HH, {}, {}};
    for (int r = 0; r < nr; ++r) {
        X.lops.push_back(A.right_mult(H.right.t.col(r)));
        Xb.rops.push_back(A.right_mult(H.right.s.col(r)));
    }
    for (int k = 0; k < d; ++k) {
        X.rops.push_back(c.conv.right_mult(e(k)));
        Xb.lops.push_back(c.conv.left_mult(e(k)));
    }
    int gx = bicat->add_generator("X", std::move(X), u, q);
    int gxb = bicat->add_generator("Xb", std::move(Xb), q, u);
    const Bicat& b = *bicat;
    ExprP I = b.g(gx), J = b.g(gxb);
    ExprP IJ = b.h(I, J), JI = b.h(J, I);
    const Quotient& qij = b.realize(IJ).q;
    const Quotient& qji = b.realize(JI).q;

    Matrix t = descend(c.conv.mul, qij, "t");
    Cell ev_R{IJ, b.u(u), H.right.pi * t};
    Cell coev_R{b.u(q), JI, qji.projection * H.right.gamma};
    Cell ev_L{JI, b.u(q), descend(c.conv.mul, qji, "ev_L")};
    Matrix coevl(qij.dim, nr);
    for (int r = 0; r < nr; ++r) coevl.col_mut(r) = qij.projection.apply(sv::kron(c.eta.col(r), c.i, d));
    Cell coev_L{b.u(u), IJ, coevl};
    return make_datum(bicat, I, J, ev_R, coev_R, ev_L, coev_L);
}

Matrix conv_identification(const ConvFrobenius& c, const FrobeniusDatum& f) {
    return descend(c.conv.mul, f.b().realize(f.ij()).q, "t");
}

Report verify_coherence_forms(const ConvFrobenius& c, const FrobeniusDatum& f) {
    const HopfAlgebroid& H = c.H;
    const Algebra& A = H.A();
    const Bicat& b = f.b();
    const MonoidalInstance& inst = b.instance();
    int d = A.dim, nr = H.right.R.dim;
    ExprP I = f.i, J = f.j;
    Report rep;
    rep.title = "coherence forms";

    // plain maps on the Kronecker products
    Matrix l_X(d, nr * d), r_Xb(d, d * nr);
    for (int r = 0; r < nr; ++r)
        for (int x = 0; x < d; ++x) {
            l_X.col_mut(r * d + x) = A.product(e(x), H.right.t.col(r));
            r_Xb.col_mut(x * nr + r) = A.product(e(x), H.right.s.col(r));
        }
    auto form = [&](const std::string& name, const Cell& cell, const Matrix& plain) {
        rep.add(residual_item(name, kCoh, cell.m * plain_projection(b, cell.src) - plain));
    };
    form("coh.l_X", b.lunit(I), l_X);
    form("coh.l_Xb", b.lunit(J), c.conv.mul);
    form("coh.r_X", b.runit(I), c.conv.mul);
    form("coh.r_Xb", b.runit(J), r_Xb);
    for (auto [x, y, z, name] : {std::tuple{I, J, I, "coh.a_XXbX"}, std::tuple{J, I, J, "coh.a_XbXXb"}}) {
        Cell a = b.assoc(x, y, z);
        rep.add(residual_item(name, kCoh, a.m * plain_projection(b, a.src) - plain_projection(b, a.tgt)));
    }

    const Bimodule& P = b.realize(f.ij()).bim;
    Matrix t = conv_identification(c, f);
    auto tinv = inverse(t);
    bool ok = tinv.has_value();
    for (int r = 0; ok && r < nr; ++r)
        ok = t * P.lops[r] == A.right_mult(H.right.t.col(r)) * t && t * P.rops[r] == A.right_mult(H.right.s.col(r)) * t;
    for (int a = 0; ok && a < d; ++a) ok = t * P.obj.act[a] == A.right_mult(e(a)) * t;
    rep.add(bool_item("coh.XQXb", kXX, ok, tinv ? "" : "t is not invertible"));

    bool coeq = true;
    std::string where;
    Obj unit = inst.unit();
    const Bimodule& X = b.generator(I->index);
    const Bimodule& Xb = b.generator(J->index);
    for (auto [m, n, label] : {std::tuple{&X, &Xb, "X,Xb"}, std::tuple{&Xb, &X, "Xb,X"}})
        for (const Obj* z : std::initializer_list<const Obj*>{&X.obj, &unit})
            if (!preserves_coequalizer(inst, *m, *n, *z)) {
                coeq = false;
                where = label;
            }
    rep.add(bool_item("coh.coequalizer", kCoeq, coeq, where));
    return rep;
}

LambdaData lambda_and_quasibasis(const ConvFrobenius& c, const FrobeniusDatum& f, const EndoRing& E) {
    const HopfAlgebroid& H = c.H;
    const Algebra& A = H.A();
    int d = A.dim;
    LambdaData l;
    l.t = conv_identification(c, f);
    auto tinv = inverse(l.t);
    if (!tinv) throw ConsistencyError("X⊗_Q X̄ is not identified with H");
    l.Lambda = Matrix(E.dim(), d);
    for (int k = 0; k < d; ++k) {
        auto co = E.try_coords(*tinv * A.left_mult(e(k)) * l.t);
        if (!co) throw ConsistencyError("left multiplication is not a 2-cell of BIM(M_H)");
        l.Lambda.col_mut(k) = *co;
    }
    for (auto& [pq, x] : H.left.gamma.apply(c.i)) {
        int p = pq / d, q = pq % d;
        l.qb.terms.emplace_back(sv::scale(l.Lambda.apply(H.S.col(p)), x), l.Lambda.col(q));
    }
    return l;
}

Report verify_lambda(const ConvFrobenius& c, const EndoRing& E, const LambdaData& l) {
    const Algebra& A = c.H.A();
    int d = A.dim;
    Report rep;
    rep.title = "left multiplication map";
    rep.add(bool_item("lambda.bijective", kLambda, rank(l.Lambda) == d && E.dim() == d,
                      "rank " + std::to_string(rank(l.Lambda)) + ", dim A " + std::to_string(E.dim())));
    Residuals mult(E.dim());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            mult.add(E.alg.product(l.Lambda.col(a), l.Lambda.col(b)), l.Lambda.apply(A.mul.col(a * d + b)));
    rep.add(mult.item("lambda.multiplicative", kLambda));
    rep.add(bool_item("lambda.unit", kLambda, sv::equal(l.Lambda.apply(A.unit), E.alg.unit)));
    return rep;
}

Report verify_roundtrip_iso(const RoundTrip& rt) {
    const HopfAlgebroid& H = rt.conv.H;
    const HopfAlgebroid& A = rt.A;
    const Harmonic& h = rt.h;
    const Matrix& Lam = rt.lambda.Lambda;
    const Algebra& HA = H.A();
    int d = HA.dim;
    Report rep;
    rep.title = "round trip isomorphism";
    rep.append(check_morphism(H, A, Lam, rt.base, true), "iso.");
    rep.add(residual_item("iso.proof.S", kIso, h.S_A * Lam - Lam * H.S));
    Residuals conv(A.dim());
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            conv.add(h.convA.product(Lam.col(a), Lam.col(b)), Lam.apply(rt.conv.conv.mul.col(a * d + b)));
    rep.add(conv.item("iso.proof.conv", kIso));
    Quotient ql = left_tensor(A.left);
    rep.add(residual_item("iso.proof.gamma", kIso,
                          ql.projection * A.left.gamma * Lam - ql.projection * tensor(Lam, Lam) * H.left.gamma));
    rep.add(residual_item("iso.proof.s", kIso, A.left.s * rt.base - Lam * H.left.s));
    rep.add(residual_item("iso.proof.t", kIso, A.left.t * rt.base - Lam * H.left.t));
    // μ_A(Λs_L(l)) acts on H by left multiplication with t_L(l)
    rep.add(residual_item("iso.proof.mu", kIso, h.s_R * h.mu * rt.base - Lam * H.left.t));
    rep.add(residual_item("iso.proof.pi", kIso, A.left.s * A.left.pi * Lam - Lam * H.left.s * H.left.pi));
    return rep;
}

RoundTrip roundtrip(const HopfAlgebroid& H, const SVec& i) {
    RoundTrip rt{conv_on_H(H, i), {}, {}, {}, {}, {}, {}};
    Report& rep = rt.report;
    rep.title = "round trip " + H.name;
    rep.append(verify(H), "input.");
    rep.append(verify_conv_frobenius(rt.conv));
    rep.append(s_invariance_remark(H, i));
    rt.f = build_X(rt.conv);
    rep.append(verify_rigidity(rt.f), "rigidity.");
    rep.append(verify_coherence_forms(rt.conv, rt.f));
    rt.h = build_harmonic(rt.f);
    rt.lambda = lambda_and_quasibasis(rt.conv, rt.f, rt.h.A);
    rep.append(verify_lambda(rt.conv, rt.h.A, rt.lambda));
    Report d2 = verify_d2(rt.f, rt.h.A, rt.lambda.qb);
    rep.append(d2, "d2.");
    rep.add(bool_item("d2.quasibasis", kD2H, d2.pass(), std::to_string(rt.lambda.qb.size()) + " terms"));
    if (!d2.pass()) return rt;
    rt.A = build_hopf_A(rt.h, rt.lambda.qb);
    rep.append(verify(rt.A), "assembly.");
    auto base = solve_many(rt.A.left.s, rt.lambda.Lambda * H.left.s);
    if (!base) {
        rep.add(bool_item("iso.base", kIso, false, "Λ∘s_L does not land in s_L(L^A)"));
        return rt;
    }
    rt.base = *base;
    rep.append(verify_roundtrip_iso(rt));
    return rt;
}

}  // namespace hopfd2
