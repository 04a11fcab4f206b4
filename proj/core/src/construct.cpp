#include "hopfd2/construct.hpp"

namespace hopfd2 {

namespace {

const char* kBgd = "bgd: γ_L(a) = a∗S_A⁻¹(yᵢ)⊗xᵢ = S_A⁻¹(yᵢ)⊗xᵢ∗a, γ_R(a) = a∗S_A(xᵢ)⊗yᵢ = S_A(xᵢ)⊗yᵢ∗a";
const char* kBlr = "bl/br: γ_L^B(b) = b∗F(xᵢ)⊗F(yᵢ), γ_R^B(b) = b∗Ḟ(yᵢ)⊗Ḟ(xᵢ)";
const char* kPil = "pil: π_L(a) = ρ∘(ι×ev_L)∘α∘((a∘coev_L)×ι)∘λ⁻¹";
const char* kPir = "pir: π_R(a) = ρ∘(ῑ×ev_R)∘(ῑ×a)∘α∘(coev_R×ῑ)∘λ⁻¹";
const char* kLem327 = "lem327: s_Lφ_L(a∘i_A)∘i_A = a∘i_A = t_Lφ_L(a∘i_A)∘i_A";
const char* kPiform = "piform: (a∘i_A)∗1 = s_Lπ_L(a), 1∗(a∘i_A) = t_Lπ_L(a), 1∗(i_A∘a) = s_Rπ_R(a), (i_A∘a)∗1 = t_Rπ_R(a)";
const char* kSAnu = "(S_A, ν) is a left bialgebroid isomorphism A_L → (A_R)^op_cop";
const char* kAl = "al*: α*, *α, _*α, α_* are ring isomorphisms B → A*, *A, _*A, A_*";
const char* kInt = "int: i_A = coev_L∘ev_R is a two sided non-degenerate integral";
const char* kAls = "als: (i_A)_R = F⁻¹∘α*⁻¹ and _R(i_A) = Ḟ⁻¹∘*α⁻¹";
const char* kRem = "convolution via the integral: a₁∗a₂ = (i_A)_R((i_A)_R⁻¹(a₁)(i_A)_R⁻¹(a₂)) and its three companions";
const char* kStrictDual = "the Hopf algebroid (A*)_{i_A} is strictly isomorphic to B via (α*, id_R)";

SVec e(int k) { return sv::unit(k); }

// Σ_i u_i⊗v_i with the algebra element a multiplied onto the left or right leg.
Matrix coproduct(const Algebra& conv, const std::vector<std::pair<SVec, SVec>>& terms, bool on_left) {
    int d = conv.dim;
    Matrix g(d * d, d);
    for (int k = 0; k < d; ++k) {
        SVec col;
        for (auto& [u, v] : terms)
            col = on_left ? sv::add(col, sv::kron(conv.product(e(k), u), v, d))
                          : sv::add(col, sv::kron(u, conv.product(v, e(k)), d));
        g.col_mut(k) = col;
    }
    return g;
}

std::vector<std::pair<SVec, SVec>> legs(const D2QuasiBasis& qb, const Matrix& on_y, const Matrix& on_x, bool swap) {
    std::vector<std::pair<SVec, SVec>> t;
    for (auto& [y, x] : qb.terms) {
        if (swap) t.emplace_back(on_x.apply(x), on_y.apply(y));
        else t.emplace_back(on_y.apply(y), on_x.apply(x));
    }
    return t;
}

using Terms = std::vector<std::pair<SVec, SVec>>;

Terms terms_AL(const Harmonic& h, const D2QuasiBasis& qb) {
    return legs(qb, h.S_A_inv, Matrix::identity(h.A.dim()), false);
}
Terms terms_AR(const Harmonic& h, const D2QuasiBasis& qb) { return legs(qb, Matrix::identity(h.A.dim()), h.S_A, true); }
Terms terms_BL(const Harmonic& h, const D2QuasiBasis& qb) { return legs(qb, h.F, h.F, true); }
Terms terms_BR(const Harmonic& h, const D2QuasiBasis& qb) { return legs(qb, h.Fd, h.Fd, false); }

CheckItem forms_agree(const std::string& name, const char* anchor, const Quotient& q, const Matrix& g1,
                      const Matrix& g2) {
    return residual_item(name, anchor, q.projection * g1 - q.projection * g2);
}

}  // namespace

HopfAlgebroid build_hopf_A(const Harmonic& h, const D2QuasiBasis& qb) {
    const Algebra& A = h.A.alg;
    SVec i = h.iA();
    HopfAlgebroid out;
    out.name = "A";
    Matrix piL = h.phi_L * A.right_mult(i);
    out.left = {A, h.L.alg, h.s_L, h.t_L, coproduct(h.convA, terms_AL(h, qb), true), piL};
    out.right = {A, h.R.alg, h.s_R, h.t_R, coproduct(h.convA, terms_AR(h, qb), true), h.nu * piL * h.S_A_inv};
    out.S = h.S_A;
    out.S_inv = h.S_A_inv;
    return out;
}

HopfAlgebroid build_hopf_B(const Harmonic& h, const D2QuasiBasis& qb) {
    HopfAlgebroid out;
    out.name = "B";
    out.left = {h.B.alg, h.R.alg, h.sB_L, h.tB_L, coproduct(h.convB, terms_BL(h, qb), true), h.nu * h.phi_L * h.Finv};
    out.right = {h.B.alg, h.L.alg, h.sB_R, h.tB_R, coproduct(h.convB, terms_BR(h, qb), true), h.phi_L * h.Fdinv};
    out.S = h.S_B;
    out.S_inv = h.S_B_inv;
    return out;
}

Report verify_structure_forms(const Harmonic& h, const D2QuasiBasis& qb, const HopfAlgebroid& A,
                              const HopfAlgebroid& B) {
    Report rep;
    rep.title = "structure maps";
    const Bicat& b = h.f.b();
    const FrobeniusDatum& f = h.f;
    ExprP I = f.i, J = f.j;
    const Algebra& alg = h.A.alg;
    const Algebra& C = h.convA;
    int d = alg.dim;
    SVec i = h.iA();

    rep.add(forms_agree("gamma.A.L.forms", kBgd, left_tensor(A.left), A.left.gamma,
                        coproduct(C, terms_AL(h, qb), false)));
    rep.add(forms_agree("gamma.A.R.forms", kBgd, right_tensor(A.right), A.right.gamma,
                        coproduct(C, terms_AR(h, qb), false)));
    rep.add(forms_agree("gamma.B.L.forms", kBlr, left_tensor(B.left), B.left.gamma,
                        coproduct(h.convB, terms_BL(h, qb), false)));
    rep.add(forms_agree("gamma.B.R.forms", kBlr, right_tensor(B.right), B.right.gamma,
                        coproduct(h.convB, terms_BR(h, qb), false)));

    Matrix pil(h.L.dim(), d), pir(h.R.dim(), d);
    for (int k = 0; k < d; ++k) {
        Cell a = h.A.cell(e(k));
        Cell l = chain(b, {b.runit(I), b.hcomp(b.id(I), f.ev_L), b.assoc(I, J, I),
                           b.hcomp(chain(b, {a, f.coev_L}), b.id(I)), b.lunit_inv(I)});
        pil.col_mut(k) = h.L.coords(l.m);
        Cell r = chain(b, {b.runit(J), b.hcomp(b.id(J), f.ev_R), b.hcomp(b.id(J), a), b.assoc(J, I, J),
                           b.hcomp(f.coev_R, b.id(J)), b.lunit_inv(J)});
        pir.col_mut(k) = h.R.coords(r.m);
    }
    rep.add(residual_item("pi.L.closed", kPil, pil - A.left.pi));
    rep.add(residual_item("pi.R.closed", kPir, pir - A.right.pi));

    Residuals l1(d), l2(d);
    for (int k = 0; k < d; ++k) {
        SVec ai = alg.product(e(k), i);
        SVec p = h.phi_L.apply(ai);
        l1.add(alg.product(h.s_L.apply(p), i), ai);
        l2.add(alg.product(h.t_L.apply(p), i), ai);
    }
    rep.add(l1.item("lem327.s", kLem327));
    rep.add(l2.item("lem327.t", kLem327));

    Residuals p1(d), p2(d), p3(d), p4(d);
    const SVec& one = alg.unit;
    for (int k = 0; k < d; ++k) {
        SVec ai = alg.product(e(k), i), ia = alg.product(i, e(k));
        p1.add(C.product(ai, one), h.s_L.apply(A.left.pi.col(k)));
        p2.add(C.product(one, ai), h.t_L.apply(A.left.pi.col(k)));
        p3.add(C.product(one, ia), h.s_R.apply(A.right.pi.col(k)));
        p4.add(C.product(ia, one), h.t_R.apply(A.right.pi.col(k)));
    }
    rep.add(p1.item("piform.i", kPiform));
    rep.add(p2.item("piform.ii", kPiform));
    rep.add(p3.item("piform.iii", kPiform));
    rep.add(p4.item("piform.iv", kPiform));

    Report iso = check_left_morphism(A.left, op_cop(A.right), h.S_A, h.nu, true, "SA_nu.");
    for (auto& it : iso.items) {
        CheckItem c = it;
        c.anchor = kSAnu;
        rep.add(c);
    }
    rep.add(residual_item("SA_nu.base", "π_R∘s_L = ν", A.right.pi * A.left.s - h.nu));
    return rep;
}

DualityIsos duality_isos(const Harmonic& h, const D2QuasiBasis& qb, const HopfAlgebroid& A) {
    DualityIsos out;
    const Algebra& alg = h.A.alg;
    int dB = h.B.dim();
    for (auto kind : {DualKind::UpperRight, DualKind::UpperLeft, DualKind::LowerRight, DualKind::LowerLeft}) {
        int k = static_cast<int>(kind);
        out.ring[k] = dual_ring(A, kind);
        const DualRing& D = out.ring[k];
        Matrix al(D.dim(), dB);
        for (int c = 0; c < dB; ++c) {
            Matrix m;
            switch (kind) {
                case DualKind::UpperRight: m = h.nu * h.phi_L * alg.right_mult(h.Finv.col(c)) * h.S_A_inv; break;
                case DualKind::UpperLeft: m = h.nu * h.phi_L * alg.left_mult(h.Finv.col(c)); break;
                case DualKind::LowerLeft: m = h.phi_L * alg.right_mult(h.Fdinv.col(c)); break;
                case DualKind::LowerRight: m = h.phi_L * alg.left_mult(h.Fdinv.col(c)) * h.S_A; break;
            }
            al.col_mut(c) = D.coords(m);
        }
        Matrix inv(dB, D.dim());
        for (int c = 0; c < D.dim(); ++c) {
            const Matrix& phi = D.basis[c];
            SVec sum;
            for (auto& [y, x] : qb.terms) {
                SVec t;
                switch (kind) {
                    case DualKind::UpperRight: t = alg.product(y, h.t_R.apply(phi.apply(h.S_A.apply(x)))); break;
                    case DualKind::UpperLeft: t = alg.product(h.t_R.apply(phi.apply(y)), x); break;
                    case DualKind::LowerLeft: t = alg.product(y, h.s_L.apply(phi.apply(x))); break;
                    case DualKind::LowerRight: t = alg.product(h.s_L.apply(phi.apply(h.S_A_inv.apply(y))), x); break;
                }
                sum = sv::add(sum, t);
            }
            bool upper = kind == DualKind::UpperRight || kind == DualKind::UpperLeft;
            inv.col_mut(c) = upper ? h.F.apply(sum) : h.Fd.apply(sum);
        }
        out.alpha[k] = al;
        out.alpha_inv[k] = inv;
    }
    return out;
}

Report verify_duality_isos(const Harmonic& h, const DualityIsos& d) {
    Report rep;
    rep.title = "duality isomorphisms";
    const Algebra& B = h.B.alg;
    static const char* names[] = {"alpha.A*", "alpha.*A", "alpha.A_*", "alpha._*A"};
    for (int k = 0; k < 4; ++k) {
        const DualRing& D = d.ring[k];
        const Matrix& al = d.alpha[k];
        std::string P = names[k];
        rep.add(bool_item(P + ".dims", kAl, D.dim() == B.dim,
                          std::to_string(D.dim()) + " vs " + std::to_string(B.dim)));
        if (D.dim() != B.dim) continue;
        Residuals hom(D.dim());
        for (int x = 0; x < B.dim; ++x)
            for (int y = 0; y < B.dim; ++y)
                hom.add(al.apply(B.product(e(x), e(y))), D.ring.product(al.col(x), al.col(y)));
        hom.add(al.apply(B.unit), D.ring.unit);
        rep.add(hom.item(P + ".hom", kAl));
        rep.add(residual_item(P + ".inv.left", kAl, d.alpha_inv[k] * al - Matrix::identity(B.dim)));
        rep.add(residual_item(P + ".inv.right", kAl, al * d.alpha_inv[k] - Matrix::identity(D.dim())));
    }
    return rep;
}

Report verify_integral(const Harmonic& h, const HopfAlgebroid& A, const DualityIsos& d) {
    Report rep;
    rep.title = "integral i_A";
    SVec i = h.iA();
    int n = A.dim();
    rep.add(bool_item("int.left", kInt, is_left_integral(A, i)));
    rep.add(bool_item("int.right", kInt, is_right_integral(A, i)));
    rep.add(bool_item("int.S_invariant", kInt, sv::equal(A.S.apply(i), i)));
    auto lw = left_nondegeneracy(A, i);
    auto rw = right_nondegeneracy(A, i);
    rep.add(bool_item("int.nondegenerate.left", kInt, lw.has_value()));
    rep.add(bool_item("int.nondegenerate.right", kInt, rw.has_value()));
    if (!lw || !rw) return rep;
    rep.append(verify_left_witness(A, *lw));
    rep.append(verify_right_witness(A, *rw));
    rep.add(residual_item("als.R", kAls, lw->ell_R - h.Finv * d.inv(DualKind::UpperRight)));
    rep.add(residual_item("als.R_left", kAls, lw->R_ell - h.Fdinv * d.inv(DualKind::UpperLeft)));

    const Algebra& C = h.convA;
    const DualRing& ur = lw->upper_right;
    const DualRing& ul = lw->upper_left;
    const DualRing& lr = rw->lower_right;
    const DualRing& ll = rw->lower_left;
    Residuals f1(n), f2(n), f3(n), f4(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            SVec c = C.product(e(x), e(y));
            f1.add(lw->ell_R.apply(ur.ring.product(lw->ell_R_inv.col(x), lw->ell_R_inv.col(y))), c);
            f2.add(lw->R_ell.apply(ul.ring.product(lw->R_ell_inv.col(y), lw->R_ell_inv.col(x))), c);
            f3.add(rw->ups_L.apply(lr.ring.product(rw->ups_L_inv.col(y), rw->ups_L_inv.col(x))), c);
            f4.add(rw->L_ups.apply(ll.ring.product(rw->L_ups_inv.col(x), rw->L_ups_inv.col(y))), c);
        }
    rep.add(f1.item("conv.integral.R", kRem));
    rep.add(f2.item("conv.integral.R_left", kRem));
    rep.add(f3.item("conv.integral.L", kRem));
    rep.add(f4.item("conv.integral.L_left", kRem));
    return rep;
}

Report verify_strict_duality(const Harmonic& h, const HopfAlgebroid& A, const HopfAlgebroid& B,
                             const DualityIsos& d) {
    Report rep;
    rep.title = "strict duality";
    DualHopf dual = dualize(A, h.iA());
    const HopfAlgebroid& Ad = dual.hopf;
    const Matrix& al = d.map(DualKind::UpperRight);
    const Matrix& ali = d.inv(DualKind::UpperRight);
    rep.add(residual_item("duality.s", kStrictDual, ali * Ad.left.s - B.left.s));
    rep.add(residual_item("duality.t", kStrictDual, ali * Ad.left.t - B.left.t));
    Quotient q = left_tensor(B.left);
    Matrix lhs = q.projection * tensor(ali, ali) * Ad.left.gamma * al;
    rep.add(residual_item("duality.gamma", kStrictDual, lhs - q.projection * B.left.gamma));
    rep.add(residual_item("duality.pi", kStrictDual, Ad.left.pi * al - B.left.pi));
    rep.add(residual_item("duality.S", kStrictDual, ali * Ad.S * al - B.S));
    Report m = check_morphism(B, Ad, al, Matrix::identity(h.R.dim()), true);
    for (auto& it : m.items) {
        CheckItem c = it;
        c.name = "duality." + c.name;
        rep.add(c);
    }
    rep.append(verify(Ad), "dual.");
    return rep;
}

std::vector<Matrix> quasibasis_leg_spaces(const Harmonic& h) { return {h.s_L, h.t_L, h.s_R, h.t_R}; }

Construction construct(const FrobeniusDatum& f, int max_terms) {
    Construction c;
    c.h = build_harmonic(f);
    auto qb = find_d2_quasibasis(f, c.h.A, max_terms, quasibasis_leg_spaces(c.h));
    if (!qb) throw InputError("no D2 quasi-basis with at most " + std::to_string(max_terms) + " terms found");
    c.qb = *qb;
    c.qbB = dual_quasibasis(c.h, c.qb);
    c.A = build_hopf_A(c.h, c.qb);
    c.B = build_hopf_B(c.h, c.qb);
    return c;
}

HopfAlgebroid assemble_hopf(const FrobeniusDatum& f, const D2QuasiBasis& qb) {
    Harmonic h = build_harmonic(f);
    HopfAlgebroid A = build_hopf_A(h, qb);
    Report rep = verify(A);
    for (auto& it : rep.items)
        if (!it.pass) throw ConsistencyError("construction failed at " + it.name + " (" + it.anchor + ")");
    return A;
}

}  // namespace hopfd2
