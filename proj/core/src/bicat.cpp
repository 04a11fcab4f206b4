#include "hopfd2/bicat.hpp"

namespace hopfd2 {

namespace {

Matrix right_block(const Bimodule& m) {
    int ds = static_cast<int>(m.rops.size());
    Matrix k(m.dim(), m.dim() * ds);
    for (int j = 0; j < m.dim(); ++j)
        for (int s = 0; s < ds; ++s) k.col_mut(j * ds + s) = m.rops[s].col(j);
    return k;
}

Matrix combine_ops(const std::vector<Matrix>& ops, const SVec& v, int dim) {
    Matrix m(dim, dim);
    for (auto& [k, c] : v) m = m + ops.at(k).scaled(c);
    return m;
}

}  // namespace

MonoidP monoid_from_algebra(const Algebra& a, const std::string& name) {
    auto m = std::make_shared<Monoid>();
    m->name = name;
    m->obj = Obj{a.dim, {}};
    m->mul = a.mul;
    m->unit = Matrix::column(a.unit, a.dim);
    return m;
}

Bimodule regular_bimodule(const MonoidP& s) {
    Bimodule b;
    b.left = s;
    b.right = s;
    b.obj = s->obj;
    int d = s->dim();
    for (int k = 0; k < d; ++k) {
        b.lops.push_back(s->mul.col_block(k * d, d));
        Matrix r(d, d);
        for (int j = 0; j < d; ++j) r.col_mut(j) = s->mul.col(j * d + k);
        b.rops.push_back(std::move(r));
    }
    return b;
}

Bimodule algebra_bimodule(const Algebra& m, const MonoidP& left, const Matrix& left_incl,
                          const MonoidP& right, const Matrix& right_incl) {
    Bimodule b;
    b.left = left;
    b.right = right;
    b.obj = Obj{m.dim, {}};
    for (int k = 0; k < left_incl.cols(); ++k) b.lops.push_back(m.left_mult(left_incl.col(k)));
    for (int k = 0; k < right_incl.cols(); ++k) b.rops.push_back(m.right_mult(right_incl.col(k)));
    return b;
}

std::optional<std::string> validate_monoid(const MonoidalInstance& inst, const Monoid& m) {
    int d = m.dim();
    int du = inst.unit().dim;
    if (m.mul.rows() != d || m.mul.cols() != d * d) return "monoid multiplication has wrong shape";
    if (m.unit.rows() != d || m.unit.cols() != du) return "monoid unit has wrong shape";
    if (!inst.is_object(m.obj)) return "monoid carrier is not an object";
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            SVec ij = m.mul.col(i * d + j);
            for (int k = 0; k < d; ++k) {
                SVec lhs = m.mul.apply(sv::kron(ij, sv::unit(k), d));
                SVec rhs = m.mul.apply(sv::kron(sv::unit(i), m.mul.col(j * d + k), d));
                if (!sv::equal(lhs, rhs)) return "associativity fails for monoid " + m.name;
            }
        }
    Matrix id = Matrix::identity(d);
    if (m.mul * tensor(m.unit, id) != inst.lunit_block(m.obj)) return "left unit law fails for monoid " + m.name;
    if (m.mul * tensor(id, m.unit) != inst.runit_block(m.obj)) return "right unit law fails for monoid " + m.name;
    if (inst.kind() == MonoidalInstance::Kind::ModH) {
        try {
            TensorObj t = inst.tensor(m.obj, m.obj);
            Matrix mul = descend(m.mul, t.q, "monoid multiplication");
            if (!inst.is_morphism(t.obj, m.obj, mul)) return "monoid multiplication is not H-linear";
            if (!inst.is_morphism(inst.unit(), m.obj, m.unit)) return "monoid unit is not H-linear";
        } catch (const ConsistencyError& e) {
            return std::string(e.what());
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_bimodule(const MonoidalInstance& inst, const Bimodule& b) {
    if (!b.left || !b.right) return "bimodule without monoids";
    int d = b.dim();
    int dl = b.left->dim(), dr = b.right->dim();
    if (static_cast<int>(b.lops.size()) != dl || static_cast<int>(b.rops.size()) != dr)
        return "action count does not match monoid dimension";
    for (auto* ops : {&b.lops, &b.rops})
        for (auto& m : *ops)
            if (m.rows() != d || m.cols() != d) return "action matrix has wrong shape";
    if (!inst.is_object(b.obj)) return "bimodule carrier is not an object";
    for (int i = 0; i < dl; ++i)
        for (int j = 0; j < dl; ++j)
            if (combine_ops(b.lops, b.left->mul.col(i * dl + j), d) != b.lops[i] * b.lops[j])
                return "left action is not associative";
    for (int i = 0; i < dr; ++i)
        for (int j = 0; j < dr; ++j)
            if (combine_ops(b.rops, b.right->mul.col(i * dr + j), d) != b.rops[j] * b.rops[i])
                return "right action is not associative";
    Matrix id = Matrix::identity(d);
    Matrix lblock = Matrix::hstack(b.lops);
    Matrix rblock = right_block(b);
    if (lblock * tensor(b.left->unit, id) != inst.lunit_block(b.obj)) return "left action is not unital";
    if (rblock * tensor(id, b.right->unit) != inst.runit_block(b.obj)) return "right action is not unital";
    for (int i = 0; i < dl; ++i)
        for (int j = 0; j < dr; ++j)
            if (b.lops[i] * b.rops[j] != b.rops[j] * b.lops[i]) return "left and right actions do not commute";
    if (inst.kind() == MonoidalInstance::Kind::ModH) {
        try {
            TensorObj tl = inst.tensor(b.left->obj, b.obj);
            if (!inst.is_morphism(tl.obj, b.obj, descend(lblock, tl.q, "left action")))
                return "left action is not H-linear";
            TensorObj tr = inst.tensor(b.obj, b.right->obj);
            if (!inst.is_morphism(tr.obj, b.obj, descend(rblock, tr.q, "right action")))
                return "right action is not H-linear";
        } catch (const ConsistencyError& e) {
            return std::string(e.what());
        }
    }
    return std::nullopt;
}

TensorOver tensor_over(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n) {
    if (m.right != n.left) throw InputError("tensor_over: monoids do not match");
    auto pairs = inst.balance_pairs(m.obj, n.obj);
    for (std::size_t k = 0; k < m.rops.size(); ++k) pairs.emplace_back(m.rops[k], n.lops[k]);
    TensorOver t;
    t.q = balanced_quotient(m.dim(), n.dim(), pairs);
    t.P.left = m.left;
    t.P.right = n.right;
    t.P.obj.dim = t.q.dim;
    t.P.obj.act = inst.diagonal_action(m.obj, n.obj, t.q);
    Matrix im = Matrix::identity(m.dim()), in = Matrix::identity(n.dim());
    for (auto& l : m.lops) t.P.lops.push_back(descend_tensor(l, in, t.q, t.q, "induced left action"));
    for (auto& r : n.rops) t.P.rops.push_back(descend_tensor(im, r, t.q, t.q, "induced right action"));
    return t;
}

Matrix induced_map(const TensorOver& src, const TensorOver& tgt, const Matrix& p, const Matrix& q) {
    return descend_tensor(p, q, src.q, tgt.q, "induced map");
}

bool is_bimodule_map(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n, const Matrix& f) {
    if (m.left != n.left || m.right != n.right) return false;
    if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
    for (std::size_t k = 0; k < m.lops.size(); ++k)
        if (f * m.lops[k] != n.lops[k] * f) return false;
    for (std::size_t k = 0; k < m.rops.size(); ++k)
        if (f * m.rops[k] != n.rops[k] * f) return false;
    return inst.is_morphism(m.obj, n.obj, f);
}

std::vector<Matrix> hom_bimodule(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n) {
    if (m.left != n.left || m.right != n.right) throw InputError("hom_bimodule: monoid mismatch");
    int dm = m.dim(), dn = n.dim();
    // Unknown f is dn x dm, entry (i, c) at index i*dm + c.
    Echelon e(dn * dm);
    auto add = [&](const Matrix& x, const Matrix& y) {
        // f x - y f = 0
        auto yrows = y.rows_sparse();
        for (int i = 0; i < dn; ++i)
            for (int j = 0; j < dm; ++j) {
                std::vector<std::pair<int, Scalar>> t;
                for (auto& [c, v] : x.col(j)) t.emplace_back(i * dm + c, v);
                for (auto& [c, v] : yrows[i]) t.emplace_back(c * dm + j, -v);
                SVec row = sv::collect(std::move(t));
                if (!row.empty()) e.insert(std::move(row));
            }
    };
    for (std::size_t k = 0; k < m.lops.size(); ++k) add(m.lops[k], n.lops[k]);
    for (std::size_t k = 0; k < m.rops.size(); ++k) add(m.rops[k], n.rops[k]);
    if (inst.kind() == MonoidalInstance::Kind::ModH)
        for (std::size_t a = 0; a < m.obj.act.size(); ++a) add(m.obj.act[a], n.obj.act[a]);
    Subspace k = nullspace(std::move(e));
    std::vector<Matrix> out;
    for (auto& v : k.basis) {
        Matrix f(dn, dm);
        std::vector<std::vector<std::pair<int, Scalar>>> cols(dm);
        for (auto& [idx, x] : v) cols[idx % dm].emplace_back(idx / dm, x);
        for (int c = 0; c < dm; ++c) f.col_mut(c) = sv::collect(std::move(cols[c]));
        out.push_back(std::move(f));
    }
    return out;
}

Matrix underline_lunit(const Bimodule& n, const TensorOver& sn) {
    return descend(Matrix::hstack(n.lops), sn.q, "left unit coherence");
}

Matrix underline_runit(const Bimodule& m, const TensorOver& ms) {
    return descend(right_block(m), ms.q, "right unit coherence");
}

namespace {

// dim of the quotient of (plain x) (x) z presenting (x/rel) (x)_R z, with
// rel the relations of p and p_r the R-only presentation of the same plain space.
int presented_dim_right(const MonoidalInstance& inst, const Quotient& full, const TensorObj& p_r,
                        const Obj& z) {
    int dv = full.ambient_dim, dz = z.dim;
    std::vector<SVec> rel;
    for (auto& r : full.relations.basis)
        for (int c = 0; c < dz; ++c) rel.push_back(sv::kron(r, sv::unit(c), dz));
    for (auto& [x, y] : inst.balance_pairs(p_r.obj, z))
        for (int p = 0; p < p_r.q.dim; ++p)
            for (int c = 0; c < dz; ++c) {
                SVec a = sv::kron(p_r.q.section.apply(x.col(p)), sv::unit(c), dz);
                SVec b = sv::kron(p_r.q.section.col(p), y.col(c), dz);
                SVec d = sv::sub(a, b);
                if (!d.empty()) rel.push_back(std::move(d));
            }
    return quotient_by_span(dv * dz, rel).dim;
}

int presented_dim_left(const MonoidalInstance& inst, const Quotient& full, const TensorObj& p_r,
                       const Obj& z) {
    int dv = full.ambient_dim, dz = z.dim;
    std::vector<SVec> rel;
    for (int c = 0; c < dz; ++c)
        for (auto& r : full.relations.basis) rel.push_back(sv::kron(sv::unit(c), r, dv));
    for (auto& [x, y] : inst.balance_pairs(z, p_r.obj))
        for (int c = 0; c < dz; ++c)
            for (int p = 0; p < p_r.q.dim; ++p) {
                SVec a = sv::kron(x.col(c), p_r.q.section.col(p), dv);
                SVec b = sv::kron(sv::unit(c), p_r.q.section.apply(y.col(p)), dv);
                SVec d = sv::sub(a, b);
                if (!d.empty()) rel.push_back(std::move(d));
            }
    return quotient_by_span(dz * dv, rel).dim;
}

}  // namespace

bool preserves_coequalizer(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n, const Obj& z) {
    TensorOver t = tensor_over(inst, m, n);
    TensorObj p_r = inst.tensor(m.obj, n.obj);
    int right = inst.tensor(t.P.obj, z).q.dim;
    int left = inst.tensor(z, t.P.obj).q.dim;
    return right == presented_dim_right(inst, t.q, p_r, z) && left == presented_dim_left(inst, t.q, p_r, z);
}

// ---------------------------------------------------------------- Bicat

bool same_expr(const ExprP& a, const ExprP& b) { return a->key == b->key; }

int Bicat::add_object(MonoidP m) {
    if (auto err = validate_monoid(inst_, *m)) throw InputError("invalid monoid " + m->name + ": " + *err);
    objs_.push_back(std::move(m));
    return static_cast<int>(objs_.size()) - 1;
}

int Bicat::add_generator(const std::string& name, Bimodule b, int t0, int s0) {
    if (b.left != objs_.at(t0) || b.right != objs_.at(s0)) throw InputError("generator " + name + " is ill-typed");
    if (auto err = validate_bimodule(inst_, b)) throw InputError("invalid bimodule " + name + ": " + *err);
    gens_.push_back(Gen{name, std::move(b), t0, s0});
    return static_cast<int>(gens_.size()) - 1;
}

ExprP Bicat::g(int i) const {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Gen;
    e->index = i;
    e->t0 = gens_.at(i).t0;
    e->s0 = gens_.at(i).s0;
    e->key = gens_.at(i).name;
    return e;
}

ExprP Bicat::u(int obj) const {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Unit;
    e->index = obj;
    e->t0 = e->s0 = obj;
    e->key = "1_" + objs_.at(obj)->name;
    return e;
}

ExprP Bicat::h(const ExprP& a, const ExprP& b) const {
    if (a->s0 != b->t0) throw InputError("ill-typed composite " + a->key + " x " + b->key);
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Node;
    e->l = a;
    e->r = b;
    e->t0 = a->t0;
    e->s0 = b->s0;
    e->key = "(" + a->key + "." + b->key + ")";
    return e;
}

std::vector<int> Bicat::word(const ExprP& e) const {
    switch (e->kind) {
        case Expr::Kind::Gen: return {e->index};
        case Expr::Kind::Unit: return {};
        case Expr::Kind::Node: {
            auto w = word(e->l);
            auto w2 = word(e->r);
            w.insert(w.end(), w2.begin(), w2.end());
            return w;
        }
    }
    return {};
}

const Realized& Bicat::realize(const ExprP& e) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(e->key);
        if (it != memo_.end()) return *it->second;
    }
    auto r = std::make_shared<Realized>();
    switch (e->kind) {
        case Expr::Kind::Gen: r->bim = gens_.at(e->index).bim; break;
        case Expr::Kind::Unit: r->bim = regular_bimodule(objs_.at(e->index)); break;
        case Expr::Kind::Node: {
            TensorOver t = tensor_over(inst_, realize(e->l).bim, realize(e->r).bim);
            r->bim = std::move(t.P);
            r->q = std::move(t.q);
            break;
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = memo_.emplace(e->key, r);
    return *it->second;
}

void Bicat::require_same(const ExprP& a, const ExprP& b, const char* what) const {
    if (!same_expr(a, b)) throw InputError(std::string(what) + ": " + a->key + " vs " + b->key);
}

Cell Bicat::id(const ExprP& e) const { return Cell{e, e, Matrix::identity(dim(e))}; }

Cell Bicat::cell(const ExprP& src, const ExprP& tgt, Matrix m) const {
    if (m.rows() != dim(tgt) || m.cols() != dim(src)) throw InputError("2-cell has wrong shape");
    return Cell{src, tgt, std::move(m)};
}

Cell Bicat::compose(const Cell& g, const Cell& f) const {
    require_same(f.tgt, g.src, "vertical composition");
    return Cell{f.src, g.tgt, g.m * f.m};
}

Cell Bicat::hcomp(const Cell& x, const Cell& y) const {
    ExprP src = h(x.src, y.src), tgt = h(x.tgt, y.tgt);
    const Realized& rs = realize(src);
    const Realized& rt = realize(tgt);
    return Cell{src, tgt, descend_tensor(x.m, y.m, rs.q, rt.q, "horizontal composition")};
}

namespace {

struct Bracketings {
    const Quotient* ab;
    const Quotient* ab_c;
    const Quotient* bc;
    const Quotient* a_bc;
    int da, db, dc;
};

// Plain triple product -> (ab)c
SVec to_left(const Bracketings& b, const SVec& v) {
    return b.ab_c->projection.apply(tensor_apply(b.ab->projection, Matrix::identity(b.dc), v));
}

SVec to_right(const Bracketings& b, const SVec& v) {
    return b.a_bc->projection.apply(tensor_apply(Matrix::identity(b.da), b.bc->projection, v));
}

}  // namespace

Cell Bicat::assoc(const ExprP& a, const ExprP& b, const ExprP& c) const {
    ExprP ab = h(a, b), bc = h(b, c);
    ExprP src = h(ab, c), tgt = h(a, bc);
    Bracketings br{&realize(ab).q, &realize(src).q, &realize(bc).q, &realize(tgt).q, dim(a), dim(b), dim(c)};
    Matrix ic = Matrix::identity(br.dc);
    // kernel of the left presentation: relations of ab tensored with c, and
    // lifted relations of (ab)c
    for (auto& r : br.ab->relations.basis)
        for (int k = 0; k < br.dc; ++k)
            if (!to_right(br, sv::kron(r, sv::unit(k), br.dc)).empty())
                throw ConsistencyError("associator is not well defined");
    for (auto& r : br.ab_c->relations.basis)
        if (!to_right(br, tensor_apply(br.ab->section, ic, r)).empty())
            throw ConsistencyError("associator is not well defined");
    Matrix m(br.a_bc->dim, br.ab_c->dim);
    for (int j = 0; j < br.ab_c->dim; ++j)
        m.col_mut(j) = to_right(br, tensor_apply(br.ab->section, ic, br.ab_c->section.col(j)));
    return Cell{src, tgt, std::move(m)};
}

Cell Bicat::assoc_inv(const ExprP& a, const ExprP& b, const ExprP& c) const {
    ExprP ab = h(a, b), bc = h(b, c);
    ExprP src = h(a, bc), tgt = h(ab, c);
    Bracketings br{&realize(ab).q, &realize(tgt).q, &realize(bc).q, &realize(src).q, dim(a), dim(b), dim(c)};
    Matrix ia = Matrix::identity(br.da);
    for (int k = 0; k < br.da; ++k)
        for (auto& r : br.bc->relations.basis)
            if (!to_left(br, sv::kron(sv::unit(k), r, br.bc->ambient_dim)).empty())
                throw ConsistencyError("inverse associator is not well defined");
    for (auto& r : br.a_bc->relations.basis)
        if (!to_left(br, tensor_apply(ia, br.bc->section, r)).empty())
            throw ConsistencyError("inverse associator is not well defined");
    Matrix m(br.ab_c->dim, br.a_bc->dim);
    for (int j = 0; j < br.a_bc->dim; ++j)
        m.col_mut(j) = to_left(br, tensor_apply(ia, br.bc->section, br.a_bc->section.col(j)));
    return Cell{src, tgt, std::move(m)};
}

Cell Bicat::lunit(const ExprP& a) const {
    ExprP src = h(u(a->t0), a);
    const Realized& rs = realize(src);
    return Cell{src, a, descend(Matrix::hstack(realize(a).bim.lops), rs.q, "left unit coherence")};
}

Cell Bicat::lunit_inv(const ExprP& a) const {
    Cell c = lunit(a);
    auto inv = inverse(c.m);
    if (!inv) throw ConsistencyError("left unit coherence is not invertible");
    return Cell{c.tgt, c.src, *inv};
}

Cell Bicat::runit(const ExprP& a) const {
    ExprP src = h(a, u(a->s0));
    const Realized& rs = realize(src);
    return Cell{src, a, descend(right_block(realize(a).bim), rs.q, "right unit coherence")};
}

Cell Bicat::runit_inv(const ExprP& a) const {
    Cell c = runit(a);
    auto inv = inverse(c.m);
    if (!inv) throw ConsistencyError("right unit coherence is not invertible");
    return Cell{c.tgt, c.src, *inv};
}

Cell Bicat::merge(const ExprP& a, const ExprP& b) const {
    if (a->kind == Expr::Kind::Unit) return lunit(b);
    if (b->kind == Expr::Kind::Unit) return runit(a);
    if (a->kind == Expr::Kind::Gen) return id(h(a, b));
    Cell first = assoc(a->l, a->r, b);
    Cell rest = hcomp(id(a->l), merge(a->r, b));
    return compose(rest, first);
}

std::optional<Cell> Bicat::rewrite_step(const ExprP& e) const {
    if (e->kind != Expr::Kind::Node) return std::nullopt;
    if (e->l->kind == Expr::Kind::Unit) return lunit(e->r);
    if (e->r->kind == Expr::Kind::Unit) return runit(e->l);
    if (e->l->kind == Expr::Kind::Node) return assoc(e->l->l, e->l->r, e->r);
    if (auto c = rewrite_step(e->r)) return hcomp(id(e->l), *c);
    return std::nullopt;
}

Cell Bicat::normalize(const ExprP& e, Strategy s) const {
    if (s == Strategy::Rewriting) {
        Cell acc = id(e);
        while (auto step = rewrite_step(acc.tgt)) acc = compose(*step, acc);
        return acc;
    }
    if (e->kind != Expr::Kind::Node) return id(e);
    Cell l = normalize(e->l, s), r = normalize(e->r, s);
    Cell both = hcomp(l, r);
    return compose(merge(l.tgt, r.tgt), both);
}

Cell Bicat::coherence_iso(const ExprP& e1, const ExprP& e2, Strategy s) const {
    if (word(e1) != word(e2) || e1->t0 != e2->t0 || e1->s0 != e2->s0)
        throw InputError("coherence_iso: different words " + e1->key + " and " + e2->key);
    if (same_expr(e1, e2)) return id(e1);
    Cell n1 = normalize(e1, s), n2 = normalize(e2, s);
    require_same(n1.tgt, n2.tgt, "coherence_iso normal forms");
    auto inv = inverse(n2.m);
    if (!inv) throw ConsistencyError("coherence map is not invertible");
    return Cell{e1, e2, *inv * n1.m};
}

std::vector<Cell> Bicat::hom(const ExprP& a, const ExprP& b) const {
    std::vector<Cell> out;
    for (auto& m : hom_bimodule(inst_, realize(a).bim, realize(b).bim)) out.push_back(Cell{a, b, std::move(m)});
    return out;
}

bool Bicat::is_cell(const Cell& c) const {
    return is_bimodule_map(inst_, realize(c.src).bim, realize(c.tgt).bim, c.m);
}

bool Bicat::pentagon(const ExprP& a, const ExprP& b, const ExprP& c, const ExprP& d) const {
    Cell p1 = compose(assoc(a, b, h(c, d)), assoc(h(a, b), c, d));
    Cell p2 = compose(hcomp(id(a), assoc(b, c, d)),
                      compose(assoc(a, h(b, c), d), hcomp(assoc(a, b, c), id(d))));
    return same_expr(p1.tgt, p2.tgt) && p1.m == p2.m;
}

bool Bicat::triangle(const ExprP& a, const ExprP& b) const {
    Cell lhs = compose(hcomp(id(a), lunit(b)), assoc(a, u(a->s0), b));
    Cell rhs = hcomp(runit(a), id(b));
    return lhs.m == rhs.m;
}

bool Bicat::naturality_assoc(const Cell& x, const Cell& y, const Cell& z) const {
    Cell lhs = compose(assoc(x.tgt, y.tgt, z.tgt), hcomp(hcomp(x, y), z));
    Cell rhs = compose(hcomp(x, hcomp(y, z)), assoc(x.src, y.src, z.src));
    return lhs.m == rhs.m;
}

}  // namespace hopfd2
