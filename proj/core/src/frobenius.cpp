#include "hopfd2/frobenius.hpp"

namespace hopfd2 {

namespace {

void require_type(const Cell& c, const ExprP& src, const ExprP& tgt, const char* what) {
    if (!same_expr(c.src, src) || !same_expr(c.tgt, tgt))
        throw InputError(std::string(what) + " has type " + c.src->key + " -> " + c.tgt->key + ", expected " +
                         src->key + " -> " + tgt->key);
}

}  // namespace

FrobeniusDatum make_datum(std::shared_ptr<const Bicat> b, ExprP i, ExprP j, Cell ev_R, Cell coev_R, Cell ev_L,
                          Cell coev_L) {
    FrobeniusDatum f{std::move(b), std::move(i), std::move(j), std::move(ev_R), std::move(coev_R),
                     std::move(ev_L), std::move(coev_L)};
    if (f.i->t0 != f.j->s0 || f.i->s0 != f.j->t0) throw InputError("the dual 1-cell has the wrong ends");
    require_type(f.ev_R, f.ij(), f.ut(), "ev_R");
    require_type(f.coev_R, f.us(), f.ji(), "coev_R");
    require_type(f.ev_L, f.ji(), f.us(), "ev_L");
    require_type(f.coev_L, f.ut(), f.ij(), "coev_L");
    for (const Cell* c : {&f.ev_R, &f.coev_R, &f.ev_L, &f.coev_L})
        if (c->m.rows() != f.b().dim(c->tgt) || c->m.cols() != f.b().dim(c->src))
            throw InputError("2-cell has the wrong shape");
    return f;
}

FrobeniusDatum swapped(const FrobeniusDatum& f) {
    return make_datum(f.bicat, f.j, f.i, f.ev_L, f.coev_L, f.ev_R, f.coev_R);
}

std::optional<std::string> FrobeniusExtension::validate() const {
    if (auto e = N.validate()) return "N: " + *e;
    if (auto e = M.validate()) return "M: " + *e;
    if (incl.rows() != M.dim || incl.cols() != N.dim) return "inclusion has the wrong shape";
    if (phi.rows() != N.dim || phi.cols() != M.dim) return "Frobenius map has the wrong shape";
    if (!sv::equal(incl.apply(N.unit), M.unit)) return "inclusion is not unital";
    for (int a = 0; a < N.dim; ++a)
        for (int b = 0; b < N.dim; ++b)
            if (!sv::equal(incl.apply(N.mul.col(a * N.dim + b)), M.product(incl.col(a), incl.col(b))))
                return "inclusion is not multiplicative";
    for (int n = 0; n < N.dim; ++n)
        for (int m = 0; m < M.dim; ++m) {
            SVec nm = M.product(incl.col(n), sv::unit(m));
            SVec mn = M.product(sv::unit(m), incl.col(n));
            if (!sv::equal(phi.apply(nm), N.product(sv::unit(n), phi.col(m))))
                return "Frobenius map is not left N-linear";
            if (!sv::equal(phi.apply(mn), N.product(phi.col(m), sv::unit(n))))
                return "Frobenius map is not right N-linear";
        }
    for (auto& [x, y] : dual_basis)
        for (const SVec* v : {&x, &y})
            for (auto& [k, c] : *v)
                if (k < 0 || k >= M.dim) return "dual basis element out of range";
    return std::nullopt;
}

FrobeniusDatum extension_datum(const FrobeniusExtension& e) {
    if (auto err = e.validate()) throw InputError("invalid extension " + e.name + ": " + *err);
    auto bicat = std::make_shared<Bicat>(MonoidalInstance::vec(e.M.field));
    int n = bicat->add_object(monoid_from_algebra(e.N, "N"));
    int m = bicat->add_object(monoid_from_algebra(e.M, "M"));
    Matrix idm = Matrix::identity(e.M.dim);
    int gi = bicat->add_generator("i", algebra_bimodule(e.M, bicat->object(n), e.incl, bicat->object(m), idm), n, m);
    int gj = bicat->add_generator("j", algebra_bimodule(e.M, bicat->object(m), idm, bicat->object(n), e.incl), m, n);
    const Bicat& b = *bicat;
    ExprP I = b.g(gi), J = b.g(gj);
    ExprP IJ = b.h(I, J), JI = b.h(J, I);
    int d = e.M.dim;

    Matrix evr_lift(e.N.dim, d * d);
    for (int k = 0; k < d * d; ++k) evr_lift.col_mut(k) = e.phi.apply(e.M.mul.col(k));
    Cell ev_R{IJ, b.u(n), descend(evr_lift, b.realize(IJ).q, "ev_R")};

    const Quotient& qji = b.realize(JI).q;
    Matrix coevr(qji.dim, d);
    for (int k = 0; k < d; ++k) {
        SVec s;
        for (auto& [x, y] : e.dual_basis) s = sv::add(s, sv::kron(e.M.product(sv::unit(k), x), y, d));
        coevr.col_mut(k) = qji.projection.apply(s);
    }
    Cell coev_R{b.u(m), JI, coevr};

    Cell ev_L{JI, b.u(m), descend(e.M.mul, qji, "ev_L")};

    const Quotient& qij = b.realize(IJ).q;
    Matrix coevl(qij.dim, e.N.dim);
    for (int k = 0; k < e.N.dim; ++k) coevl.col_mut(k) = qij.projection.apply(sv::kron(e.incl.col(k), e.M.unit, d));
    Cell coev_L{b.u(n), IJ, coevl};

    return make_datum(bicat, I, J, ev_R, coev_R, ev_L, coev_L);
}

Cell chain(const Bicat& b, std::initializer_list<Cell> cells) {
    if (cells.size() == 0) throw InputError("chain: no cells");
    auto it = std::rbegin(cells);
    Cell acc = *it++;
    for (; it != std::rend(cells); ++it) acc = b.compose(*it, acc);
    return acc;
}

Report verify_rigidity(const FrobeniusDatum& f) {
    const Bicat& b = f.b();
    ExprP I = f.i, J = f.j;
    Report rep;
    rep.title = "rigidity";
    auto relation = [&](const std::string& name, const ExprP& e, auto&& build) {
        Stopwatch sw;
        CheckItem item;
        try {
            Cell c = build();
            item = residual_item(name, "rigrel: zig-zag relations of the Frobenius 1-morphism",
                                 c.m - Matrix::identity(b.dim(e)));
        } catch (const ConsistencyError& ex) {
            item = bool_item(name, "rigrel: zig-zag relations of the Frobenius 1-morphism", false, ex.what());
        }
        item.seconds = sw.seconds();
        rep.add(item);
    };
    relation("rigrel.1", I, [&] {
        return chain(b, {b.runit(I), b.hcomp(b.id(I), f.ev_L), b.assoc(I, J, I), b.hcomp(f.coev_L, b.id(I)),
                         b.lunit_inv(I)});
    });
    relation("rigrel.2", J, [&] {
        return chain(b, {b.lunit(J), b.hcomp(f.ev_L, b.id(J)), b.assoc_inv(J, I, J), b.hcomp(b.id(J), f.coev_L),
                         b.runit_inv(J)});
    });
    relation("rigrel.3", I, [&] {
        return chain(b, {b.lunit(I), b.hcomp(f.ev_R, b.id(I)), b.assoc_inv(I, J, I), b.hcomp(b.id(I), f.coev_R),
                         b.runit_inv(I)});
    });
    relation("rigrel.4", J, [&] {
        return chain(b, {b.runit(J), b.hcomp(b.id(J), f.ev_R), b.assoc(J, I, J), b.hcomp(f.coev_R, b.id(J)),
                         b.lunit_inv(J)});
    });
    const char* names[] = {"ev_R", "coev_R", "ev_L", "coev_L"};
    const Cell* cells[] = {&f.ev_R, &f.coev_R, &f.ev_L, &f.coev_L};
    for (int k = 0; k < 4; ++k)
        rep.add(bool_item(std::string("cell.") + names[k], "rigint: the four 2-morphisms are bimodule maps",
                          b.is_cell(*cells[k])));
    return rep;
}

Matrix EndoRing::element(const SVec& c) const {
    return unflatten(coordinates.combine(c), space_dim, space_dim);
}

SVec EndoRing::coords(const Matrix& m) const { return coordinates.coords(flatten(m)); }

std::optional<SVec> EndoRing::try_coords(const Matrix& m) const { return coordinates.try_coords(flatten(m)); }

EndoRing endo_ring(const Bicat& b, const ExprP& w) {
    EndoRing r;
    r.word = w;
    r.space_dim = b.dim(w);
    for (auto& c : b.hom(w, w)) r.basis.push_back(std::move(c.m));
    std::vector<SVec> flat;
    for (auto& m : r.basis) flat.push_back(flatten(m));
    int n = r.space_dim;
    r.coordinates = Coordinates(n * n, flat);
    int d = static_cast<int>(r.basis.size());
    r.alg.field = b.instance().field();
    r.alg.dim = d;
    r.alg.mul = Matrix(d, d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r.alg.mul.col_mut(i * d + j) = r.coords(r.basis[i] * r.basis[j]);
    r.alg.unit = r.coords(Matrix::identity(n));
    return r;
}

}  // namespace hopfd2
