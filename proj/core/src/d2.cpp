#include "hopfd2/d2.hpp"

namespace hopfd2 {

namespace {

const char* kD2 = "d2: Σ (yᵢ×ι)∘α⁻¹∘(ι×coev_R)∘(ι×ev_L)∘α∘(xᵢ×ι) = id";
const char* kFrob = "sl/phil: s_L is a Frobenius extension with Frobenius map φ_L and quasi-basis yᵢ, xᵢ";
const char* kSep = "sep: a∘yᵢ⊗xᵢ = yᵢ⊗xᵢ∘a in A^L⊗_L A";
const char* kLem326 = "lem326: yᵢ⊗xᵢ∗a = yᵢ∗S_A(a)⊗xᵢ in A^L⊗_L A";
const char* kComp = "comp: a₁∗(a₂∘a₃) = [(a₁∘yᵢ)∗a₂]∘(xᵢ∗a₃)";

std::vector<Matrix> leg_maps(const FrobeniusDatum& f, const EndoRing& A) {
    const Bicat& b = f.b();
    std::vector<Matrix> e;
    for (int p = 0; p < A.dim(); ++p) e.push_back(b.hcomp(A.cell(sv::unit(p)), b.id(f.i)).m);
    return e;
}

}  // namespace

Cell d2_kernel(const FrobeniusDatum& f) {
    const Bicat& b = f.b();
    ExprP I = f.i, J = f.j;
    return chain(b, {b.assoc_inv(I, J, I), b.hcomp(b.id(I), f.coev_R), b.hcomp(b.id(I), f.ev_L), b.assoc(I, J, I)});
}

Report verify_d2(const FrobeniusDatum& f, const EndoRing& A, const D2QuasiBasis& qb) {
    Report rep;
    rep.title = "d2";
    Stopwatch sw;
    Cell K = d2_kernel(f);
    int n = K.m.rows();
    Matrix sum(n, n);
    for (auto& [y, x] : qb.terms) {
        Matrix ey = f.b().hcomp(A.cell(y), f.b().id(f.i)).m;
        Matrix ex = f.b().hcomp(A.cell(x), f.b().id(f.i)).m;
        sum = sum + ey * K.m * ex;
    }
    CheckItem it = residual_item("d2.identity", kD2, sum - Matrix::identity(n));
    it.detail = std::to_string(qb.size()) + " terms";
    it.seconds = sw.seconds();
    rep.add(it);
    return rep;
}

namespace {

// T = Σ_p e_p ⊗ rows[p], factorized through the reduced row echelon form.
D2QuasiBasis factorize(const std::vector<SVec>& rows, int d) {
    Echelon ech(d);
    for (auto& r : rows) ech.insert(r);
    ech.finalize();
    D2QuasiBasis qb;
    for (int i = 0; i < ech.rank(); ++i) {
        int c = ech.pivots()[i];
        SVec y;
        for (int p = 0; p < static_cast<int>(rows.size()); ++p) {
            Scalar v = sv::get(rows[p], c);
            if (!v.is_zero()) y.emplace_back(p, v);
        }
        qb.terms.emplace_back(std::move(y), ech.rows()[i]);
    }
    return qb;
}

bool reaches(const Matrix& sys, const std::vector<int>& legs, int d, const SVec& target) {
    Echelon ech(sys.rows());
    for (int p : legs)
        for (int q = 0; q < d; ++q) ech.insert(sys.col(p * d + q));
    return ech.reduce(target).empty();
}

}  // namespace

std::optional<D2QuasiBasis> find_d2_quasibasis(const FrobeniusDatum& f, const EndoRing& A, int max_terms,
                                               const std::vector<Matrix>& leg_spaces) {
    Cell K = d2_kernel(f);
    int n = K.m.rows();
    int d = A.dim();
    auto e = leg_maps(f, A);
    std::vector<Matrix> eK;
    for (auto& m : e) eK.push_back(m * K.m);
    Matrix sys(n * n, d * d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) sys.col_mut(p * d + q) = flatten(eK[p] * e[q]);
    SVec target = flatten(Matrix::identity(n));
    auto sol = solve(sys, target);
    if (!sol) return std::nullopt;
    std::vector<SVec> rows(d);
    for (auto& [k, c] : *sol) rows[k / d].emplace_back(k % d, c);
    D2QuasiBasis best = factorize(rows, d);

    auto consider = [&](const std::vector<SVec>& legs) {
        std::vector<SVec> cols;
        for (auto& y : legs)
            for (int q = 0; q < d; ++q) {
                SVec c;
                for (auto& [p, v] : y) c = sv::axpy(c, v, sys.col(p * d + q));
                cols.push_back(std::move(c));
            }
        auto part = solve(Matrix::from_columns(n * n, cols), target);
        if (!part) return;
        std::vector<SVec> r2(d);
        for (auto& [k, c] : *part)
            for (auto& [p, v] : legs[k / d]) r2[p] = sv::axpy(r2[p], v * c, sv::unit(k % d));
        D2QuasiBasis g = factorize(r2, d);
        if (g.size() < best.size()) best = std::move(g);
    };

    // y-legs from basis elements: grow by span, then prune.
    std::vector<int> legs;
    Echelon span(n * n);
    for (int p = 0; p < d && !span.reduce(target).empty(); ++p) {
        bool grew = false;
        for (int q = 0; q < d; ++q) grew = span.insert(sys.col(p * d + q)) || grew;
        if (grew) legs.push_back(p);
    }
    for (int k = static_cast<int>(legs.size()) - 1; k >= 0; --k) {
        std::vector<int> fewer = legs;
        fewer.erase(fewer.begin() + k);
        if (reaches(sys, fewer, d, target)) legs = fewer;
    }
    std::vector<SVec> basis_legs;
    for (int p : legs) basis_legs.push_back(sv::unit(p));
    consider(basis_legs);
    // y-legs confined to a supplied subspace of A.
    for (auto& space : leg_spaces) {
        Subspace s = column_space(space);
        consider(s.basis);
    }
    if (best.size() > max_terms) return std::nullopt;
    return best;
}

D2QuasiBasis dual_quasibasis(const Harmonic& h, const D2QuasiBasis& qb) {
    D2QuasiBasis out;
    Matrix FFdF = h.F * h.Fdinv * h.F;
    for (auto& [y, x] : qb.terms) out.terms.emplace_back(FFdF.apply(x), h.F.apply(y));
    return out;
}

Quotient tensor_sL_sL(const Harmonic& h) {
    const Algebra& A = h.A.alg;
    std::vector<std::pair<Matrix, Matrix>> pairs;
    for (int l = 0; l < h.L.dim(); ++l) pairs.emplace_back(A.right_mult(h.s_L.col(l)), A.left_mult(h.s_L.col(l)));
    return balanced_quotient(A.dim, A.dim, pairs);
}

SVec qb_tensor(const D2QuasiBasis& qb, int dim, const Quotient& q) {
    SVec s;
    for (auto& [y, x] : qb.terms) s = sv::add(s, sv::kron(y, x, dim));
    return q.projection.apply(s);
}

Report quasibasis_identities(const Harmonic& h, const D2QuasiBasis& qb) {
    Report rep;
    rep.title = "quasi-basis identities";
    const Algebra& A = h.A.alg;
    const Algebra& C = h.convA;
    int d = A.dim;

    Residuals fr(d), fl(d);
    for (int k = 0; k < d; ++k) {
        SVec a = sv::unit(k), lhs, rhs;
        for (auto& [y, x] : qb.terms) {
            lhs = sv::add(lhs, A.product(h.s_L.apply(h.phi_L.apply(A.product(a, y))), x));
            rhs = sv::add(rhs, A.product(y, h.s_L.apply(h.phi_L.apply(A.product(x, a)))));
        }
        fr.add(lhs, a);
        fl.add(rhs, a);
    }
    rep.add(fr.item("frobenius.system.1", kFrob));
    rep.add(fl.item("frobenius.system.2", kFrob));

    Quotient q = tensor_sL_sL(h);
    Residuals sep(q.dim), lem(q.dim);
    for (int k = 0; k < d; ++k) {
        SVec a = sv::unit(k), s1, s2, s3, s4;
        SVec Sa = h.S_A.col(k);
        for (auto& [y, x] : qb.terms) {
            s1 = sv::add(s1, sv::kron(A.product(a, y), x, d));
            s2 = sv::add(s2, sv::kron(y, A.product(x, a), d));
            s3 = sv::add(s3, sv::kron(y, C.product(x, a), d));
            s4 = sv::add(s4, sv::kron(C.product(y, Sa), x, d));
        }
        sep.add(q.projection.apply(s1), q.projection.apply(s2));
        lem.add(q.projection.apply(s3), q.projection.apply(s4));
    }
    rep.add(sep.item("sep", kSep));
    rep.add(lem.item("lem326", kLem326));

    Residuals comp(d);
    for (int i = 0; i < d; ++i) {
        SVec a1 = sv::unit(i);
        std::vector<SVec> left;
        for (auto& [y, x] : qb.terms) left.push_back(A.product(a1, y));
        for (int j = 0; j < d; ++j) {
            SVec a2 = sv::unit(j);
            std::vector<SVec> l2;
            for (auto& v : left) l2.push_back(C.product(v, a2));
            for (int k = 0; k < d; ++k) {
                SVec a3 = sv::unit(k), rhs;
                for (int t = 0; t < qb.size(); ++t) rhs = sv::add(rhs, A.product(l2[t], C.product(qb.terms[t].second, a3)));
                comp.add(C.product(a1, A.product(a2, a3)), rhs);
            }
        }
    }
    rep.add(comp.item("comp", kComp));
    return rep;
}

}  // namespace hopfd2
