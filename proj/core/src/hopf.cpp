#include "hopfd2/hopf.hpp"

namespace hopfd2 {

namespace {

const char* kLeftDef = "left bialgebroid axioms";
const char* kRightDef = "right bialgebroid axioms";
const char* kCros = "cros: Takeuchi condition a₍₁₎t_L(l)⊗a₍₂₎ = a₍₁₎⊗a₍₂₎s_L(l)";
const char* kGmp = "gmp: γ(ab) = γ(a)γ(b) in the Takeuchi product";
const char* kSchi = "schi: s_L(L) = t_R(R) and t_L(L) = s_R(R)";
const char* kSchii = "schii: mixed coassociativity of γ_L and γ_R";
const char* kDefiii = "defiii: S(t_L(l)a t_L(l′)) = s_L(l′)S(a)s_L(l), S(t_R(r′)a t_R(r)) = s_R(r)S(a)s_R(r′)";
const char* kDefiv = "defiv: S(a₍₁₎)a₍₂₎ = s_Rπ_R(a) and a⁽¹⁾S(a⁽²⁾) = s_Lπ_L(a)";
const char* kMorph = "bialgebroid homomorphism: s′φ = Φs, t′φ = Φt, π′Φ = φπ, γ′Φ = (Φ⊗Φ)γ";
const char* kStrict = "strict homomorphism: Φ∘S = S′∘Φ";
const char* kIntegral = "integrals: aℓ = s_Lπ_L(a)ℓ and Υa = Υs_Rπ_R(a)";
const char* kLemInt = "characterizations of right/left integrals";
const char* kNondeg = "non-degenerate integral: ℓ_R, _Rℓ, _LΥ, Υ_L bijective with the stated inverses";
const char* kDual = "ldual/rdual: dual rings and their actions on A";

SVec e(int k) { return sv::unit(k); }

// Checks of the ring-map kind shared by both bialgebroids.
void ring_map_items(Report& rep, const std::string& prefix, const std::string& name, const Algebra& src,
                    const Algebra& tgt, const Matrix& m, bool anti, const char* anchor) {
    Residuals res(tgt.dim);
    for (int x = 0; x < src.dim; ++x)
        for (int y = 0; y < src.dim; ++y) {
            SVec lhs = m.apply(src.product(e(x), e(y)));
            res.add(lhs, anti ? tgt.product(m.col(y), m.col(x)) : tgt.product(m.col(x), m.col(y)));
        }
    res.add(m.apply(src.unit), tgt.unit);
    rep.add(res.item(prefix + name + (anti ? ".antihom" : ".hom"), anchor));
}

bool shape(const Matrix& m, int r, int c) { return m.rows() == r && m.cols() == c; }

}  // namespace

std::optional<std::string> validate_structure(const HopfAlgebroid& h) {
    const LeftBialgebroid& l = h.left;
    const RightBialgebroid& r = h.right;
    if (auto err = l.A.validate()) return "total algebra: " + *err;
    if (auto err = l.L.validate()) return "left base algebra: " + *err;
    if (auto err = r.R.validate()) return "right base algebra: " + *err;
    if (l.A.dim != r.A.dim || !(l.A.mul == r.A.mul) || !sv::equal(l.A.unit, r.A.unit))
        return "left and right bialgebroids have different total algebras";
    int d = l.A.dim, dl = l.L.dim, dr = r.R.dim;
    if (!shape(l.s, d, dl) || !shape(l.t, d, dl) || !shape(l.gamma, d * d, d) || !shape(l.pi, dl, d))
        return "left bialgebroid maps have wrong shapes";
    if (!shape(r.s, d, dr) || !shape(r.t, d, dr) || !shape(r.gamma, d * d, d) || !shape(r.pi, dr, d))
        return "right bialgebroid maps have wrong shapes";
    if (!shape(h.S, d, d) || !shape(h.S_inv, d, d)) return "antipode has wrong shape";
    return std::nullopt;
}

Quotient left_tensor(const LeftBialgebroid& b) {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (int l = 0; l < b.L.dim; ++l) pairs.emplace_back(b.A.left_mult(b.t.col(l)), b.A.left_mult(b.s.col(l)));
    return balanced_quotient(b.A.dim, b.A.dim, pairs);
}

Quotient right_tensor(const RightBialgebroid& b) {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (int r = 0; r < b.R.dim; ++r) pairs.emplace_back(b.A.right_mult(b.s.col(r)), b.A.right_mult(b.t.col(r)));
    return balanced_quotient(b.A.dim, b.A.dim, pairs);
}

SVec Tensor3::project(const SVec& plain) const {
    return q3.projection.apply(tensor_apply(q2.projection, Matrix::identity(d), plain));
}

Tensor3 tensor3(const Quotient& q2, int d, const std::vector<std::pair<Matrix, Matrix>>& ops) {
    Tensor3 t;
    t.d = d;
    t.q2 = q2;
    std::vector<std::pair<Matrix, Matrix>> pairs;
    Matrix id = Matrix::identity(d);
    for (auto& [p, q] : ops) {
        Matrix lifted = q2.projection * tensor(id, p);
        pairs.emplace_back(descend(lifted, q2, "second-leg operator"), q);
    }
    t.q3 = balanced_quotient(q2.dim, d, pairs);
    return t;
}

SVec contract(const SVec& tensor, int d, const std::function<SVec(int, int)>& f) {
    SVec out;
    for (auto& [k, c] : tensor) out = sv::axpy(out, c, f(k / d, k % d));
    return out;
}

SVec tensor_mul(const Algebra& A, const SVec& u, const SVec& v) {
    int d = A.dim;
    SVec out;
    for (auto& [k1, c1] : u)
        for (auto& [k2, c2] : v) {
            SVec x = A.product(e(k1 / d), e(k2 / d));
            SVec y = A.product(e(k1 % d), e(k2 % d));
            out = sv::axpy(out, c1 * c2, sv::kron(x, y, d));
        }
    return out;
}

Report verify_left(const LeftBialgebroid& b, const std::string& P) {
    Report rep;
    rep.title = "left bialgebroid";
    const Algebra& A = b.A;
    const Algebra& L = b.L;
    int d = A.dim;
    {
        auto ea = A.validate(), el = L.validate();
        rep.add(bool_item(P + "rings", kLeftDef, !ea && !el, ea.value_or(el.value_or(""))));
    }
    ring_map_items(rep, P, "s", L, A, b.s, false, kLeftDef);
    ring_map_items(rep, P, "t", L, A, b.t, true, kLeftDef);
    {
        Residuals res(d);
        for (int x = 0; x < L.dim; ++x)
            for (int y = 0; y < L.dim; ++y) res.add(A.product(b.s.col(x), b.t.col(y)), A.product(b.t.col(y), b.s.col(x)));
        rep.add(res.item(P + "st.commute", kLeftDef));
    }
    Quotient q = left_tensor(b);
    auto proj = [&](const SVec& v) { return q.projection.apply(v); };
    Matrix id = Matrix::identity(d);
    {
        Residuals res(q.dim);
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < L.dim; ++l) {
                res.add(proj(b.gamma.apply(A.product(b.s.col(l), e(k)))),
                        proj(tensor_apply(A.left_mult(b.s.col(l)), id, b.gamma.col(k))));
                res.add(proj(b.gamma.apply(A.product(b.t.col(l), e(k)))),
                        proj(tensor_apply(id, A.left_mult(b.t.col(l)), b.gamma.col(k))));
            }
        rep.add(res.item(P + "gamma.bimodule", "γ_L is an L-L bimodule map"));
    }
    {
        Residuals res(q.dim);
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < L.dim; ++l)
                res.add(proj(tensor_apply(A.right_mult(b.t.col(l)), id, b.gamma.col(k))),
                        proj(tensor_apply(id, A.right_mult(b.s.col(l)), b.gamma.col(k))));
        rep.add(res.item(P + "cros", kCros));
    }
    {
        Residuals res(q.dim);
        res.add(proj(b.gamma.apply(A.unit)), proj(sv::kron(A.unit, A.unit, d)));
        rep.add(res.item(P + "gamma.unit", kLeftDef));
    }
    {
        Residuals own(q.dim), sec(q.dim);
        std::vector<SVec> lifts;
        for (int k = 0; k < d; ++k) lifts.push_back(q.section.apply(proj(b.gamma.col(k))));
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                SVec target = proj(b.gamma.apply(A.product(e(x), e(y))));
                own.add(proj(tensor_mul(A, b.gamma.col(x), b.gamma.col(y))), target);
                sec.add(proj(tensor_mul(A, lifts[x], lifts[y])), target);
            }
        rep.add(own.item(P + "gmp.lifts", kGmp));
        rep.add(sec.item(P + "gmp.sections", kGmp));
    }
    try {
        std::vector<std::pair<Matrix, Matrix>> ops;
        for (int l = 0; l < L.dim; ++l) ops.emplace_back(A.left_mult(b.t.col(l)), A.left_mult(b.s.col(l)));
        Tensor3 t3 = tensor3(q, d, ops);
        Residuals res(t3.q3.dim);
        for (int k = 0; k < d; ++k)
            res.add(t3.project(tensor_apply(b.gamma, id, b.gamma.col(k))),
                    t3.project(tensor_apply(id, b.gamma, b.gamma.col(k))));
        rep.add(res.item(P + "coassoc", "γ_L is coassociative in A_L⊗_L A_L⊗_L A"));
    } catch (const ConsistencyError& ex) {
        rep.add(bool_item(P + "coassoc", "γ_L is coassociative in A_L⊗_L A_L⊗_L A", false, ex.what()));
    }
    {
        Residuals c1(d), c2(d);
        for (int k = 0; k < d; ++k) {
            c1.add(contract(b.gamma.col(k), d, [&](int p, int q) { return A.product(b.s.apply(b.pi.col(p)), e(q)); }),
                   e(k));
            c2.add(contract(b.gamma.col(k), d, [&](int p, int q) { return A.product(b.t.apply(b.pi.col(q)), e(p)); }),
                   e(k));
        }
        rep.add(c1.item(P + "counit.left", "(π_L⊗id)∘γ_L = id"));
        rep.add(c2.item(P + "counit.right", "(id⊗π_L)∘γ_L = id"));
    }
    {
        Residuals res(L.dim);
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < L.dim; ++l) {
                res.add(b.pi.apply(A.product(b.s.col(l), e(k))), L.product(e(l), b.pi.col(k)));
                res.add(b.pi.apply(A.product(b.t.col(l), e(k))), L.product(b.pi.col(k), e(l)));
            }
        rep.add(res.item(P + "pi.bimodule", "π_L is an L-L bimodule map"));
    }
    {
        Residuals res(L.dim);
        res.add(b.pi.apply(A.unit), L.unit);
        rep.add(res.item(P + "pi.unit", kLeftDef));
    }
    {
        Residuals res(L.dim);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                SVec ab = b.pi.apply(A.product(e(x), e(y)));
                SVec pb = b.pi.col(y);
                res.add(b.pi.apply(A.product(e(x), b.s.apply(pb))), ab);
                res.add(b.pi.apply(A.product(e(x), b.t.apply(pb))), ab);
            }
        rep.add(res.item(P + "pi.mult", "π_L(a s_Lπ_L(b)) = π_L(ab) = π_L(a t_Lπ_L(b))"));
    }
    return rep;
}

Report verify_right(const RightBialgebroid& b, const std::string& P) {
    Report rep;
    rep.title = "right bialgebroid";
    const Algebra& A = b.A;
    const Algebra& R = b.R;
    int d = A.dim;
    {
        auto ea = A.validate(), er = R.validate();
        rep.add(bool_item(P + "rings", kRightDef, !ea && !er, ea.value_or(er.value_or(""))));
    }
    ring_map_items(rep, P, "s", R, A, b.s, false, kRightDef);
    ring_map_items(rep, P, "t", R, A, b.t, true, kRightDef);
    {
        Residuals res(d);
        for (int x = 0; x < R.dim; ++x)
            for (int y = 0; y < R.dim; ++y) res.add(A.product(b.s.col(x), b.t.col(y)), A.product(b.t.col(y), b.s.col(x)));
        rep.add(res.item(P + "st.commute", kRightDef));
    }
    Quotient q = right_tensor(b);
    auto proj = [&](const SVec& v) { return q.projection.apply(v); };
    Matrix id = Matrix::identity(d);
    {
        Residuals res(q.dim);
        for (int k = 0; k < d; ++k)
            for (int r = 0; r < R.dim; ++r) {
                res.add(proj(b.gamma.apply(A.product(e(k), b.s.col(r)))),
                        proj(tensor_apply(id, A.right_mult(b.s.col(r)), b.gamma.col(k))));
                res.add(proj(b.gamma.apply(A.product(e(k), b.t.col(r)))),
                        proj(tensor_apply(A.right_mult(b.t.col(r)), id, b.gamma.col(k))));
            }
        rep.add(res.item(P + "gamma.bimodule", "γ_R is an R-R bimodule map"));
    }
    {
        Residuals res(q.dim);
        for (int k = 0; k < d; ++k)
            for (int r = 0; r < R.dim; ++r)
                res.add(proj(tensor_apply(A.left_mult(b.s.col(r)), id, b.gamma.col(k))),
                        proj(tensor_apply(id, A.left_mult(b.t.col(r)), b.gamma.col(k))));
        rep.add(res.item(P + "cros", "s_R(r)a⁽¹⁾⊗a⁽²⁾ = a⁽¹⁾⊗t_R(r)a⁽²⁾"));
    }
    {
        Residuals res(q.dim);
        res.add(proj(b.gamma.apply(A.unit)), proj(sv::kron(A.unit, A.unit, d)));
        rep.add(res.item(P + "gamma.unit", kRightDef));
    }
    {
        Residuals own(q.dim), sec(q.dim);
        std::vector<SVec> lifts;
        for (int k = 0; k < d; ++k) lifts.push_back(q.section.apply(proj(b.gamma.col(k))));
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                SVec target = proj(b.gamma.apply(A.product(e(x), e(y))));
                own.add(proj(tensor_mul(A, b.gamma.col(x), b.gamma.col(y))), target);
                sec.add(proj(tensor_mul(A, lifts[x], lifts[y])), target);
            }
        rep.add(own.item(P + "gmp.lifts", kGmp));
        rep.add(sec.item(P + "gmp.sections", kGmp));
    }
    try {
        std::vector<std::pair<Matrix, Matrix>> ops;
        for (int r = 0; r < R.dim; ++r) ops.emplace_back(A.right_mult(b.s.col(r)), A.right_mult(b.t.col(r)));
        Tensor3 t3 = tensor3(q, d, ops);
        Residuals res(t3.q3.dim);
        for (int k = 0; k < d; ++k)
            res.add(t3.project(tensor_apply(b.gamma, id, b.gamma.col(k))),
                    t3.project(tensor_apply(id, b.gamma, b.gamma.col(k))));
        rep.add(res.item(P + "coassoc", "γ_R is coassociative in A^R⊗^R A^R⊗^R A"));
    } catch (const ConsistencyError& ex) {
        rep.add(bool_item(P + "coassoc", "γ_R is coassociative in A^R⊗^R A^R⊗^R A", false, ex.what()));
    }
    {
        Residuals c1(d), c2(d);
        for (int k = 0; k < d; ++k) {
            c1.add(contract(b.gamma.col(k), d, [&](int p, int q) { return A.product(e(q), b.t.apply(b.pi.col(p))); }),
                   e(k));
            c2.add(contract(b.gamma.col(k), d, [&](int p, int q) { return A.product(e(p), b.s.apply(b.pi.col(q))); }),
                   e(k));
        }
        rep.add(c1.item(P + "counit.left", "(π_R⊗id)∘γ_R = id"));
        rep.add(c2.item(P + "counit.right", "(id⊗π_R)∘γ_R = id"));
    }
    {
        Residuals res(R.dim);
        for (int k = 0; k < d; ++k)
            for (int r = 0; r < R.dim; ++r) {
                res.add(b.pi.apply(A.product(e(k), b.s.col(r))), R.product(b.pi.col(k), e(r)));
                res.add(b.pi.apply(A.product(e(k), b.t.col(r))), R.product(e(r), b.pi.col(k)));
            }
        rep.add(res.item(P + "pi.bimodule", "π_R is an R-R bimodule map"));
    }
    {
        Residuals res(R.dim);
        res.add(b.pi.apply(A.unit), R.unit);
        rep.add(res.item(P + "pi.unit", kRightDef));
    }
    {
        Residuals res(R.dim);
        for (int x = 0; x < d; ++x)
            for (int y = 0; y < d; ++y) {
                SVec ab = b.pi.apply(A.product(e(x), e(y)));
                SVec pa = b.pi.col(x);
                res.add(b.pi.apply(A.product(b.s.apply(pa), e(y))), ab);
                res.add(b.pi.apply(A.product(b.t.apply(pa), e(y))), ab);
            }
        rep.add(res.item(P + "pi.mult", "π_R(s_Rπ_R(a)b) = π_R(ab) = π_R(t_Rπ_R(a)b)"));
    }
    return rep;
}

Report verify_hopf_axioms(const HopfAlgebroid& h) {
    Report rep;
    rep.title = "hopf axioms";
    const LeftBialgebroid& bl = h.left;
    const RightBialgebroid& br = h.right;
    const Algebra& A = bl.A;
    int d = A.dim;
    Matrix id = Matrix::identity(d);

    rep.add(bool_item("H.i.sL=tR", kSchi, same_span(bl.s, br.t)));
    rep.add(bool_item("H.i.tL=sR", kSchi, same_span(bl.t, br.s)));

    Quotient ql = left_tensor(bl);
    Quotient qr = right_tensor(br);
    try {
        std::vector<std::pair<Matrix, Matrix>> ops;
        for (int r = 0; r < br.R.dim; ++r) ops.emplace_back(A.right_mult(br.s.col(r)), A.right_mult(br.t.col(r)));
        Tensor3 t3 = tensor3(ql, d, ops);
        Residuals res(t3.q3.dim);
        for (int k = 0; k < d; ++k)
            res.add(t3.project(tensor_apply(bl.gamma, id, br.gamma.col(k))),
                    t3.project(tensor_apply(id, br.gamma, bl.gamma.col(k))));
        rep.add(res.item("H.ii.LR", kSchii));
    } catch (const ConsistencyError& ex) {
        rep.add(bool_item("H.ii.LR", kSchii, false, ex.what()));
    }
    try {
        std::vector<std::pair<Matrix, Matrix>> ops;
        for (int l = 0; l < bl.L.dim; ++l) ops.emplace_back(A.left_mult(bl.t.col(l)), A.left_mult(bl.s.col(l)));
        Tensor3 t3 = tensor3(qr, d, ops);
        Residuals res(t3.q3.dim);
        for (int k = 0; k < d; ++k)
            res.add(t3.project(tensor_apply(br.gamma, id, bl.gamma.col(k))),
                    t3.project(tensor_apply(id, bl.gamma, br.gamma.col(k))));
        rep.add(res.item("H.ii.RL", kSchii));
    } catch (const ConsistencyError& ex) {
        rep.add(bool_item("H.ii.RL", kSchii, false, ex.what()));
    }

    {
        Residuals bij(d);
        bij.add(h.S * h.S_inv, id);
        bij.add(h.S_inv * h.S, id);
        rep.add(bij.item("H.S.bijective", "S is a bijection"));
    }
    {
        Residuals rl(d), rr(d);
        for (int k = 0; k < d; ++k) {
            SVec Sa = h.S.col(k);
            for (int x = 0; x < bl.L.dim; ++x)
                for (int y = 0; y < bl.L.dim; ++y) {
                    SVec in = A.product(A.product(bl.t.col(x), e(k)), bl.t.col(y));
                    rl.add(h.S.apply(in), A.product(A.product(bl.s.col(y), Sa), bl.s.col(x)));
                }
            for (int x = 0; x < br.R.dim; ++x)
                for (int y = 0; y < br.R.dim; ++y) {
                    SVec in = A.product(A.product(br.t.col(y), e(k)), br.t.col(x));
                    rr.add(h.S.apply(in), A.product(A.product(br.s.col(x), Sa), br.s.col(y)));
                }
        }
        rep.add(rl.item("H.iii.L", kDefiii));
        rep.add(rr.item("H.iii.R", kDefiii));
    }
    {
        Matrix mS(d, d * d), Sm(d, d * d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                mS.col_mut(p * d + q) = A.product(h.S.col(p), e(q));
                Sm.col_mut(p * d + q) = A.product(e(p), h.S.col(q));
            }
        bool well = true;
        std::string why;
        try {
            descend(mS, ql, "S(a₍₁₎)a₍₂₎");
            descend(Sm, qr, "a⁽¹⁾S(a⁽²⁾)");
        } catch (const ConsistencyError& ex) {
            well = false;
            why = ex.what();
        }
        rep.add(bool_item("H.iv.defined", kDefiv, well, why));
        Residuals r1(d), r2(d);
        for (int k = 0; k < d; ++k) {
            r1.add(mS.apply(bl.gamma.col(k)), br.s.apply(br.pi.col(k)));
            r2.add(Sm.apply(br.gamma.col(k)), bl.s.apply(bl.pi.col(k)));
        }
        rep.add(r1.item("H.iv.L", kDefiv));
        rep.add(r2.item("H.iv.R", kDefiv));
    }
    return rep;
}

Report verify(const HopfAlgebroid& h) {
    Report rep;
    rep.title = "hopf algebroid " + h.name;
    if (auto err = validate_structure(h)) {
        rep.add(bool_item("structure", "Hopf algebroid data", false, *err));
        return rep;
    }
    rep.append(verify_left(h.left));
    rep.append(verify_right(h.right));
    rep.append(verify_hopf_axioms(h));
    return rep;
}

LeftBialgebroid op_cop(const RightBialgebroid& b) {
    LeftBialgebroid l;
    l.A = b.A.opposite();
    l.L = b.R.opposite();
    l.s = b.s;
    l.t = b.t;
    int d = b.A.dim;
    l.gamma = Matrix(d * d, d);
    for (int k = 0; k < d; ++k) {
        std::vector<std::pair<int, Scalar>> flip;
        for (auto& [i, c] : b.gamma.col(k)) flip.emplace_back((i % d) * d + i / d, c);
        l.gamma.col_mut(k) = sv::collect(std::move(flip));
    }
    l.pi = b.pi;
    return l;
}

Report check_left_morphism(const LeftBialgebroid& src, const LeftBialgebroid& dst, const Matrix& Phi,
                           const Matrix& phi, bool iso, const std::string& P) {
    Report rep;
    rep.title = "left bialgebroid morphism";
    if (!shape(Phi, dst.A.dim, src.A.dim) || !shape(phi, dst.L.dim, src.L.dim)) {
        rep.add(bool_item(P + "shape", kMorph, false, "maps have wrong shapes"));
        return rep;
    }
    ring_map_items(rep, P, "Phi", src.A, dst.A, Phi, false, kMorph);
    ring_map_items(rep, P, "phi", src.L, dst.L, phi, false, kMorph);
    rep.add(residual_item(P + "s", kMorph, dst.s * phi - Phi * src.s));
    rep.add(residual_item(P + "t", kMorph, dst.t * phi - Phi * src.t));
    rep.add(residual_item(P + "pi", kMorph, dst.pi * Phi - phi * src.pi));
    Quotient q = left_tensor(dst);
    Residuals g(q.dim);
    for (int k = 0; k < src.A.dim; ++k)
        g.add(q.projection.apply(dst.gamma.apply(Phi.col(k))), q.projection.apply(tensor_apply(Phi, Phi, src.gamma.col(k))));
    rep.add(g.item(P + "gamma", kMorph));
    if (iso) {
        bool ok = Phi.rows() == Phi.cols() && rank(Phi) == Phi.cols() && phi.rows() == phi.cols() &&
                  rank(phi) == phi.cols();
        rep.add(bool_item(P + "bijective", "isomorphism: Φ and φ bijective", ok));
    }
    return rep;
}

Report check_morphism(const HopfAlgebroid& src, const HopfAlgebroid& dst, const Matrix& Phi, const Matrix& phi,
                      bool strict, bool iso) {
    Report rep = check_left_morphism(src.left, dst.left, Phi, phi, iso, "morphism.");
    rep.title = "hopf algebroid morphism";
    if (strict && shape(Phi, dst.dim(), src.dim()))
        rep.add(residual_item("morphism.strict", kStrict, Phi * src.S - dst.S * Phi));
    return rep;
}

// ---------------------------------------------------------------- integrals

bool is_left_integral(const HopfAlgebroid& h, const SVec& x) {
    const Algebra& A = h.A();
    for (int k = 0; k < A.dim; ++k)
        if (!sv::equal(A.product(e(k), x), A.product(h.left.s.apply(h.left.pi.col(k)), x))) return false;
    return true;
}

bool is_right_integral(const HopfAlgebroid& h, const SVec& x) {
    const Algebra& A = h.A();
    for (int k = 0; k < A.dim; ++k)
        if (!sv::equal(A.product(x, e(k)), A.product(x, h.right.s.apply(h.right.pi.col(k))))) return false;
    return true;
}

Integrals find_integrals(const HopfAlgebroid& h) {
    const Algebra& A = h.A();
    int d = A.dim;
    Matrix left(d * d, d), right(d * d, d);
    for (int x = 0; x < d; ++x) {
        SVec lc, rc;
        for (int k = 0; k < d; ++k) {
            SVec l = sv::sub(A.product(e(k), e(x)), A.product(h.left.s.apply(h.left.pi.col(k)), e(x)));
            SVec r = sv::sub(A.product(e(x), e(k)), A.product(e(x), h.right.s.apply(h.right.pi.col(k))));
            for (auto& [i, c] : l) lc.emplace_back(k * d + i, c);
            for (auto& [i, c] : r) rc.emplace_back(k * d + i, c);
        }
        left.col_mut(x) = lc;
        right.col_mut(x) = rc;
    }
    return {kernel(left), kernel(right)};
}

Report lemma_equivalences(const HopfAlgebroid& h, const SVec& x, Side side) {
    Report rep;
    rep.title = "integral characterizations";
    const Algebra& A = h.A();
    int d = A.dim;
    Matrix id = Matrix::identity(d);
    if (side == Side::Right) {
        rep.add(bool_item("int.right.i", kIntegral, is_right_integral(h, x)));
        Residuals r2(d);
        for (int k = 0; k < d; ++k) r2.add(A.product(x, e(k)), A.product(x, h.right.t.apply(h.right.pi.col(k))));
        rep.add(r2.item("int.right.ii", kLemInt));
        rep.add(bool_item("int.right.iii", kLemInt, is_left_integral(h, h.S.apply(x))));
        rep.add(bool_item("int.right.iv", kLemInt, is_left_integral(h, h.S_inv.apply(x))));
        Quotient q = left_tensor(h.left);
        SVec g = h.left.gamma.apply(x);
        Residuals r5(q.dim);
        for (int k = 0; k < d; ++k)
            r5.add(q.projection.apply(tensor_apply(A.right_mult(e(k)), id, g)),
                   q.projection.apply(tensor_apply(id, A.right_mult(h.S.col(k)), g)));
        rep.add(r5.item("int.right.v", kLemInt));
    } else {
        rep.add(bool_item("int.left.i", kIntegral, is_left_integral(h, x)));
        Residuals r2(d);
        for (int k = 0; k < d; ++k) r2.add(A.product(e(k), x), A.product(h.left.t.apply(h.left.pi.col(k)), x));
        rep.add(r2.item("int.left.ii", kLemInt));
        rep.add(bool_item("int.left.iii", kLemInt, is_right_integral(h, h.S.apply(x))));
        rep.add(bool_item("int.left.iv", kLemInt, is_right_integral(h, h.S_inv.apply(x))));
        Quotient q = right_tensor(h.right);
        SVec g = h.right.gamma.apply(x);
        Residuals r5(q.dim);
        for (int k = 0; k < d; ++k)
            r5.add(q.projection.apply(tensor_apply(id, A.left_mult(e(k)), g)),
                   q.projection.apply(tensor_apply(A.left_mult(h.S.col(k)), id, g)));
        rep.add(r5.item("int.left.v", kLemInt));
    }
    return rep;
}

// ---------------------------------------------------------------- dual rings

std::string dual_name(DualKind k) {
    switch (k) {
        case DualKind::UpperRight: return "A*";
        case DualKind::UpperLeft: return "*A";
        case DualKind::LowerRight: return "A_*";
        case DualKind::LowerLeft: return "_*A";
    }
    return "?";
}

Matrix DualRing::map(const SVec& c) const { return unflatten(coordinates.combine(c), base_dim, total_dim); }
SVec DualRing::coords(const Matrix& phi) const { return coordinates.coords(flatten(phi)); }
std::optional<SVec> DualRing::try_coords(const Matrix& phi) const { return coordinates.try_coords(flatten(phi)); }

Matrix restrict_right(const Algebra& A, const Matrix& phi, const SVec& a) { return phi * A.left_mult(a); }
Matrix restrict_left(const Algebra& A, const Matrix& phi, const SVec& a) { return phi * A.right_mult(a); }

SVec act_upper_right(const HopfAlgebroid& h, const Matrix& phi, const SVec& a) {
    const RightBialgebroid& b = h.right;
    int d = b.A.dim;
    return contract(b.gamma.apply(a), d, [&](int p, int q) { return b.A.product(e(q), b.t.apply(phi.col(p))); });
}

SVec act_upper_left(const HopfAlgebroid& h, const Matrix& phi, const SVec& a) {
    const RightBialgebroid& b = h.right;
    int d = b.A.dim;
    return contract(b.gamma.apply(a), d, [&](int p, int q) { return b.A.product(e(p), b.s.apply(phi.col(q))); });
}

SVec act_lower_right(const HopfAlgebroid& h, const Matrix& phi, const SVec& a) {
    const LeftBialgebroid& b = h.left;
    int d = b.A.dim;
    return contract(b.gamma.apply(a), d, [&](int p, int q) { return b.A.product(b.s.apply(phi.col(p)), e(q)); });
}

SVec act_lower_left(const HopfAlgebroid& h, const Matrix& phi, const SVec& a) {
    const LeftBialgebroid& b = h.left;
    int d = b.A.dim;
    return contract(b.gamma.apply(a), d, [&](int p, int q) { return b.A.product(b.t.apply(phi.col(q)), e(p)); });
}

DualRing dual_ring(const HopfAlgebroid& h, DualKind kind) {
    const Algebra& A = h.A();
    bool upper = kind == DualKind::UpperRight || kind == DualKind::UpperLeft;
    const Algebra& B = upper ? h.right.R : h.left.L;
    int d = A.dim, db = B.dim;
    // Linear conditions φ(x_{k,r}) = M_r φ(e_k) on the flattened φ.
    auto condition = [&](int k, int r) -> std::pair<SVec, Matrix> {
        switch (kind) {
            case DualKind::UpperRight: return {A.product(e(k), h.right.s.col(r)), B.right_mult(e(r))};
            case DualKind::UpperLeft: return {A.product(e(k), h.right.t.col(r)), B.left_mult(e(r))};
            case DualKind::LowerRight: return {A.product(h.left.t.col(r), e(k)), B.right_mult(e(r))};
            case DualKind::LowerLeft: return {A.product(h.left.s.col(r), e(k)), B.left_mult(e(r))};
        }
        throw InputError("dual_ring: bad kind");
    };
    std::vector<std::vector<std::pair<SVec, Matrix>>> conds(d);
    for (int k = 0; k < d; ++k)
        for (int r = 0; r < db; ++r) conds[k].push_back(condition(k, r));
    int blocks = d * db;
    Matrix C(blocks * db, d * db);
    for (int j = 0; j < d; ++j)
        for (int b = 0; b < db; ++b) {
            std::vector<std::pair<int, Scalar>> col;
            for (int k = 0; k < d; ++k)
                for (int r = 0; r < db; ++r) {
                    int off = (k * db + r) * db;
                    auto& [x, M] = conds[k][r];
                    Scalar xj = sv::get(x, j);
                    if (!xj.is_zero()) col.emplace_back(off + b, xj);
                    if (k == j)
                        for (auto& [i, c] : M.col(b)) col.emplace_back(off + i, -c);
                }
            C.col_mut(j * db + b) = sv::collect(std::move(col));
        }
    Subspace ker = kernel(C);
    DualRing D;
    D.kind = kind;
    D.base_dim = db;
    D.total_dim = d;
    D.coordinates = Coordinates(d * db, ker.basis);
    for (auto& v : ker.basis) D.basis.push_back(unflatten(v, db, d));
    int n = static_cast<int>(D.basis.size());

    auto product = [&](const Matrix& phi, const Matrix& psi) {
        Matrix out(db, d);
        for (int k = 0; k < d; ++k) {
            SVec v;
            switch (kind) {
                case DualKind::UpperRight:
                    v = contract(h.right.gamma.col(k), d, [&](int p, int q) {
                        return phi.apply(A.product(e(q), h.right.t.apply(psi.col(p))));
                    });
                    break;
                case DualKind::UpperLeft:
                    v = contract(h.right.gamma.col(k), d, [&](int p, int q) {
                        return phi.apply(A.product(e(p), h.right.s.apply(psi.col(q))));
                    });
                    break;
                case DualKind::LowerRight:
                    v = contract(h.left.gamma.col(k), d, [&](int p, int q) {
                        return psi.apply(A.product(h.left.s.apply(phi.col(p)), e(q)));
                    });
                    break;
                case DualKind::LowerLeft:
                    v = contract(h.left.gamma.col(k), d, [&](int p, int q) {
                        return psi.apply(A.product(h.left.t.apply(phi.col(q)), e(p)));
                    });
                    break;
            }
            out.col_mut(k) = v;
        }
        return out;
    };
    D.ring.field = A.field;
    D.ring.dim = n;
    D.ring.mul = Matrix(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) D.ring.mul.col_mut(i * n + j) = D.coords(product(D.basis[i], D.basis[j]));
    D.ring.unit = D.coords(upper ? h.right.pi : h.left.pi);
    return D;
}

Report verify_dual_ring(const HopfAlgebroid& h, const DualRing& D) {
    Report rep;
    rep.title = "dual ring " + dual_name(D.kind);
    std::string P = "dual." + dual_name(D.kind) + ".";
    auto err = D.ring.validate();
    rep.add(bool_item(P + "ring", kDual, !err, err.value_or("")));
    const Algebra& A = h.A();
    int d = A.dim, n = D.dim();
    auto act = [&](const Matrix& phi, const SVec& a) {
        switch (D.kind) {
            case DualKind::UpperRight: return act_upper_right(h, phi, a);
            case DualKind::UpperLeft: return act_upper_left(h, phi, a);
            case DualKind::LowerRight: return act_lower_right(h, phi, a);
            case DualKind::LowerLeft: return act_lower_left(h, phi, a);
        }
        return SVec{};
    };
    bool left_action = D.kind == DualKind::UpperRight || D.kind == DualKind::UpperLeft;
    Residuals res(d);
    for (int k = 0; k < d; ++k) {
        res.add(act(D.map(D.ring.unit), e(k)), e(k));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                SVec prod = act(D.map(D.ring.product(e(i), e(j))), e(k));
                SVec iter = left_action ? act(D.basis[i], act(D.basis[j], e(k))) : act(D.basis[j], act(D.basis[i], e(k)));
                res.add(prod, iter);
            }
    }
    rep.add(res.item(P + "action", kDual));
    Residuals closed(1);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k) {
            bool upper = D.kind == DualKind::UpperRight || D.kind == DualKind::UpperLeft;
            Matrix m = upper ? restrict_right(A, D.basis[i], e(k)) : restrict_left(A, D.basis[i], e(k));
            if (!D.try_coords(m)) closed.add(sv::unit(0));
        }
    rep.add(closed.item(P + "regular.action", "the transpose of the regular action preserves the dual"));
    return rep;
}

// ---------------------------------------------------------------- non-degeneracy

std::optional<LeftWitness> left_nondegeneracy(const HopfAlgebroid& h, const SVec& ell) {
    LeftWitness w;
    w.ell = ell;
    w.upper_right = dual_ring(h, DualKind::UpperRight);
    w.upper_left = dual_ring(h, DualKind::UpperLeft);
    int d = h.dim();
    w.ell_R = Matrix(d, w.upper_right.dim());
    for (int k = 0; k < w.upper_right.dim(); ++k) w.ell_R.col_mut(k) = act_upper_right(h, w.upper_right.basis[k], ell);
    w.R_ell = Matrix(d, w.upper_left.dim());
    for (int k = 0; k < w.upper_left.dim(); ++k) w.R_ell.col_mut(k) = act_upper_left(h, w.upper_left.basis[k], ell);
    auto i1 = inverse(w.ell_R);
    auto i2 = inverse(w.R_ell);
    if (!i1 || !i2) return std::nullopt;
    w.ell_R_inv = *i1;
    w.R_ell_inv = *i2;
    w.lambda = w.ell_R_inv.apply(h.A().unit);
    return w;
}

Report verify_left_witness(const HopfAlgebroid& h, const LeftWitness& w) {
    Report rep;
    rep.title = "left integral non-degeneracy";
    const Algebra& A = h.A();
    Matrix lam = w.upper_right.map(w.lambda);
    Matrix lamS = lam * h.S;
    Residuals r1(w.upper_right.dim()), r2(w.upper_left.dim());
    bool inside = true;
    for (int k = 0; k < A.dim; ++k) {
        r1.add(w.upper_right.coords(restrict_right(A, lam, h.S.col(k))), w.ell_R_inv.col(k));
        auto c = w.upper_left.try_coords(restrict_right(A, lamS, h.S_inv.col(k)));
        if (!c) inside = false;
        else r2.add(*c, w.R_ell_inv.col(k));
    }
    rep.add(bool_item("nondeg.left.bijective", kNondeg, true));
    rep.add(r1.item("nondeg.left.ell_R.inverse", kNondeg));
    CheckItem it = r2.item("nondeg.left.R_ell.inverse", kNondeg);
    if (!inside) {
        it.pass = false;
        it.detail = "λ*∘S↽S⁻¹(a) is not in *A";
    }
    rep.add(it);
    return rep;
}

std::optional<RightWitness> right_nondegeneracy(const HopfAlgebroid& h, const SVec& ups) {
    RightWitness w;
    w.upsilon = ups;
    w.lower_left = dual_ring(h, DualKind::LowerLeft);
    w.lower_right = dual_ring(h, DualKind::LowerRight);
    int d = h.dim();
    w.L_ups = Matrix(d, w.lower_left.dim());
    for (int k = 0; k < w.lower_left.dim(); ++k) w.L_ups.col_mut(k) = act_lower_left(h, w.lower_left.basis[k], ups);
    w.ups_L = Matrix(d, w.lower_right.dim());
    for (int k = 0; k < w.lower_right.dim(); ++k) w.ups_L.col_mut(k) = act_lower_right(h, w.lower_right.basis[k], ups);
    auto i1 = inverse(w.L_ups);
    auto i2 = inverse(w.ups_L);
    if (!i1 || !i2) return std::nullopt;
    w.L_ups_inv = *i1;
    w.ups_L_inv = *i2;
    w.rho = w.L_ups_inv.apply(h.A().unit);
    return w;
}

Report verify_right_witness(const HopfAlgebroid& h, const RightWitness& w) {
    Report rep;
    rep.title = "right integral non-degeneracy";
    const Algebra& A = h.A();
    Matrix rho = w.lower_left.map(w.rho);
    Matrix rhoS = rho * h.S;
    Residuals r1(w.lower_left.dim()), r2(w.lower_right.dim());
    bool inside = true;
    for (int k = 0; k < A.dim; ++k) {
        r1.add(w.lower_left.coords(restrict_left(A, rho, h.S.col(k))), w.L_ups_inv.col(k));
        auto c = w.lower_right.try_coords(restrict_left(A, rhoS, h.S_inv.col(k)));
        if (!c) inside = false;
        else r2.add(*c, w.ups_L_inv.col(k));
    }
    rep.add(bool_item("nondeg.right.bijective", kNondeg, true));
    rep.add(r1.item("nondeg.right.L_ups.inverse", kNondeg));
    CheckItem it = r2.item("nondeg.right.ups_L.inverse", kNondeg);
    if (!inside) {
        it.pass = false;
        it.detail = "S⁻¹(a)⇀(_*ρ∘S) is not in A_*";
    }
    rep.add(it);
    return rep;
}

// ---------------------------------------------------------------- dual Hopf algebroid

DualHopf dualize(const HopfAlgebroid& h, const SVec& i) {
    if (!is_left_integral(h, i) || !is_right_integral(h, i)) throw InputError("dualize: integral is not two sided");
    auto w = left_nondegeneracy(h, i);
    if (!w) throw InputError("dualize: integral is degenerate");
    DualHopf out;
    out.witness = *w;
    out.i_R = w->ell_R;
    out.i_R_inv = w->ell_R_inv;
    const DualRing& D = w->upper_right;
    const Algebra& A = h.A();
    const Algebra& L = h.left.L;
    const Algebra& R = h.right.R;
    int n = D.dim();
    Matrix lam = D.map(w->lambda);
    SVec gi = h.right.gamma.apply(i);
    int d = A.dim;

    LeftBialgebroid& bl = out.hopf.left;
    bl.A = D.ring;
    bl.L = R;
    bl.s = Matrix(n, R.dim);
    bl.t = Matrix(n, R.dim);
    for (int r = 0; r < R.dim; ++r) {
        bl.s.col_mut(r) = D.coords(R.left_mult(e(r)) * h.right.pi);
        bl.t.col_mut(r) = D.coords(h.right.pi * A.left_mult(h.right.s.col(r)));
    }
    bl.gamma = Matrix(n * n, n);
    bl.pi = Matrix(R.dim, n);
    RightBialgebroid& br = out.hopf.right;
    br.A = D.ring;
    br.R = L;
    br.s = Matrix(n, L.dim);
    br.t = Matrix(n, L.dim);
    for (int l = 0; l < L.dim; ++l) {
        br.s.col_mut(l) = D.coords(h.right.pi * A.left_mult(h.left.s.col(l)));
        SVec it = A.product(i, h.left.t.col(l));
        br.t.col_mut(l) = D.coords(lam * A.left_mult(h.S.apply(it)));
    }
    br.gamma = Matrix(n * n, n);
    br.pi = Matrix(L.dim, n);
    Matrix S2 = h.S * h.S;
    std::vector<SVec> inv_cols(d);
    for (int p = 0; p < d; ++p) inv_cols[p] = out.i_R_inv.col(p);
    for (int k = 0; k < n; ++k) {
        const Matrix& phi = D.basis[k];
        bl.gamma.col_mut(k) = contract(gi, d, [&](int p, int q) {
            return sv::kron(D.coords(restrict_right(A, phi, e(p))), inv_cols[q], n);
        });
        br.gamma.col_mut(k) = contract(gi, d, [&](int p, int q) {
            return sv::kron(D.coords(restrict_right(A, phi, S2.col(q))), inv_cols[p], n);
        });
        bl.pi.col_mut(k) = phi.apply(A.unit);
        Matrix lphi = D.map(D.ring.product(w->lambda, e(k)));
        br.pi.col_mut(k) = h.left.pi.apply(h.right.s.apply(lphi.apply(i)));
    }
    out.hopf.name = h.name + "*";
    out.hopf.S = out.i_R_inv * h.S * out.i_R;
    out.hopf.S_inv = out.i_R_inv * h.S_inv * out.i_R;
    return out;
}

SecondDual second_dual(const HopfAlgebroid& h, const SVec& i) {
    SecondDual sd;
    sd.first = dualize(h, i);
    sd.second = dualize(sd.first.hopf, sd.first.witness.lambda);
    const DualRing& D1 = sd.first.witness.upper_right;
    const DualRing& D2 = sd.second.witness.upper_right;
    const HopfAlgebroid& h2 = sd.second.hopf;
    const Algebra& A = h.A();
    int d = A.dim;
    auto attempt = [&](const Matrix& Psi, const std::string& choice) {
        auto psi = solve_many(h2.left.s, Psi * h.left.s);
        if (!psi) return false;
        Report rep = check_morphism(h, h2, Psi, *psi, true);
        if (!rep.pass()) return false;
        sd.Psi = Psi;
        sd.psi = *psi;
        sd.choice = choice;
        sd.report = rep;
        return true;
    };
    struct Sigma {
        const char* name;
        Matrix m;
    };
    std::vector<Sigma> sigmas = {{"S", h.S},
                                 {"S⁻¹", h.S_inv},
                                 {"id", Matrix::identity(d)},
                                 {"S²", h.S * h.S},
                                 {"S⁻²", h.S_inv * h.S_inv}};
    // The two witness bijections A** → A* → A, inverted.
    if (auto back = inverse(sd.first.i_R * sd.second.i_R))
        for (auto& sg : sigmas)
            if (attempt(*back * sg.m, std::string("Ψ = (i_R∘λ*_R)⁻¹∘") + sg.name)) return sd;
    std::vector<Sigma> thetas = {{"π_L∘s_R", h.left.pi * h.right.s}, {"π_L∘t_R", h.left.pi * h.right.t}};
    for (auto& th : thetas)
        for (auto& sg : sigmas) {
            Matrix Psi(D2.dim(), d);
            bool ok = true;
            for (int a = 0; a < d && ok; ++a) {
                SVec sa = sg.m.col(a);
                Matrix psi_a(h.left.L.dim, D1.dim());
                for (int k = 0; k < D1.dim(); ++k) psi_a.col_mut(k) = th.m.apply(D1.basis[k].apply(sa));
                auto c = D2.try_coords(psi_a);
                if (!c) ok = false;
                else Psi.col_mut(a) = *c;
            }
            if (ok && attempt(Psi, std::string("Ψ_a(φ) = ") + th.name + "(φ(" + sg.name + "(a)))")) return sd;
        }
    sd.report.title = "second dual";
    sd.report.add(bool_item("second.dual.iso", "second dual Hopf algebroid is strictly isomorphic", false,
                            "no candidate Ψ is a strict isomorphism"));
    return sd;
}

}  // namespace hopfd2
