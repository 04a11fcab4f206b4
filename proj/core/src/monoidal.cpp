#include "hopfd2/monoidal.hpp"

namespace hopfd2 {

Quotient balanced_quotient(int dim_v, int dim_w, const std::vector<std::pair<Matrix, Matrix>>& pairs) {
    std::vector<SVec> rel;
    for (auto& [p, q] : pairs) {
        if (p.rows() != dim_v || p.cols() != dim_v || q.rows() != dim_w || q.cols() != dim_w)
            throw InputError("balanced_quotient: operator has wrong shape");
        for (int i = 0; i < dim_v; ++i) {
            const SVec& pv = p.col(i);
            for (int j = 0; j < dim_w; ++j) {
                std::vector<std::pair<int, Scalar>> t;
                for (auto& [k, x] : pv) t.emplace_back(k * dim_w + j, x);
                for (auto& [k, x] : q.col(j)) t.emplace_back(i * dim_w + k, -x);
                SVec r = sv::collect(std::move(t));
                if (!r.empty()) rel.push_back(std::move(r));
            }
        }
    }
    return quotient_by_span(dim_v * dim_w, rel);
}

Matrix descend(const Matrix& k, const Quotient& src, const char* what) {
    if (k.cols() != src.ambient_dim) throw InputError(std::string(what) + ": dimension mismatch");
    for (auto& r : src.relations.basis)
        if (!k.apply(r).empty())
            throw ConsistencyError(std::string(what) + ": map does not descend to the quotient");
    return k * src.section;
}

Matrix descend_tensor(const Matrix& p, const Matrix& q, const Quotient& src, const Quotient& tgt,
                      const char* what) {
    if (p.cols() * q.cols() != src.ambient_dim || p.rows() * q.rows() != tgt.ambient_dim)
        throw InputError(std::string(what) + ": dimension mismatch");
    for (auto& r : src.relations.basis)
        if (!tgt.projection.apply(tensor_apply(p, q, r)).empty())
            throw ConsistencyError(std::string(what) + ": map does not descend to the quotient");
    return tgt.projection * tensor_times(p, q, src.section);
}

MonoidalInstance MonoidalInstance::vec(const Field& f) {
    MonoidalInstance m;
    m.kind_ = Kind::Vec;
    m.field_ = f;
    return m;
}

MonoidalInstance MonoidalInstance::modh(std::shared_ptr<const RightBialgebroidData> data) {
    MonoidalInstance m;
    m.kind_ = Kind::ModH;
    m.field_ = data->H.field;
    m.data_ = std::move(data);
    return m;
}

Obj MonoidalInstance::unit() const {
    if (kind_ == Kind::Vec) return Obj{1, {}};
    const auto& d = *data_;
    Obj u;
    u.dim = d.R.dim;
    for (int a = 0; a < d.H.dim; ++a) {
        Matrix m(d.R.dim, d.R.dim);
        for (int r = 0; r < d.R.dim; ++r)
            m.col_mut(r) = d.pi_R.apply(d.H.product(d.s_R.col(r), sv::unit(a)));
        u.act.push_back(std::move(m));
    }
    return u;
}

Obj MonoidalInstance::plain(int n) const {
    if (kind_ != Kind::Vec) throw InputError("plain objects exist only in VEC");
    return Obj{n, {}};
}

Matrix MonoidalInstance::act(const Obj& x, const SVec& a) const {
    if (kind_ == Kind::Vec) throw InputError("VEC objects carry no action");
    Matrix m(x.dim, x.dim);
    for (auto& [k, c] : a) m = m + x.act.at(k).scaled(c);
    return m;
}

bool MonoidalInstance::is_object(const Obj& x) const {
    if (kind_ == Kind::Vec) return x.act.empty();
    const auto& h = data_->H;
    if (static_cast<int>(x.act.size()) != h.dim) return false;
    for (auto& m : x.act)
        if (m.rows() != x.dim || m.cols() != x.dim) return false;
    // right action: (x.a).b = x.(ab)
    for (int a = 0; a < h.dim; ++a)
        for (int b = 0; b < h.dim; ++b)
            if (x.act[b] * x.act[a] != act(x, h.mul.col(a * h.dim + b))) return false;
    return act(x, h.unit) == Matrix::identity(x.dim);
}

bool MonoidalInstance::is_morphism(const Obj& x, const Obj& y, const Matrix& f) const {
    if (f.rows() != y.dim || f.cols() != x.dim) return false;
    if (kind_ == Kind::Vec) return true;
    for (std::size_t a = 0; a < x.act.size(); ++a)
        if (f * x.act[a] != y.act[a] * f) return false;
    return true;
}

std::vector<std::pair<Matrix, Matrix>> MonoidalInstance::balance_pairs(const Obj& x, const Obj& y) const {
    std::vector<std::pair<Matrix, Matrix>> pairs;
    if (kind_ == Kind::Vec) return pairs;
    const auto& d = *data_;
    for (int r = 0; r < d.R.dim; ++r) pairs.emplace_back(act(x, d.s_R.col(r)), act(y, d.t_R.col(r)));
    return pairs;
}

std::vector<Matrix> MonoidalInstance::diagonal_action(const Obj& x, const Obj& y, const Quotient& q) const {
    std::vector<Matrix> out;
    if (kind_ == Kind::Vec) return out;
    const auto& d = *data_;
    int n = d.H.dim;
    for (int a = 0; a < n; ++a) {
        // Individual Sweedler terms need not descend; only their sum does.
        auto apply = [&](const SVec& v) {
            std::vector<std::pair<int, Scalar>> t;
            for (auto& [uv, c] : d.gamma_R.col(a))
                for (auto& e : tensor_apply(x.act[uv / n], y.act[uv % n], v)) t.emplace_back(e.first, c * e.second);
            return q.projection.apply(sv::collect(std::move(t)));
        };
        for (auto& r : q.relations.basis)
            if (!apply(r).empty()) throw ConsistencyError("diagonal action does not descend to the quotient");
        Matrix m(q.dim, q.dim);
        for (int j = 0; j < q.dim; ++j) m.col_mut(j) = apply(q.section.col(j));
        out.push_back(std::move(m));
    }
    return out;
}

TensorObj MonoidalInstance::tensor(const Obj& x, const Obj& y) const {
    TensorObj t;
    t.q = balanced_quotient(x.dim, y.dim, balance_pairs(x, y));
    t.obj.dim = t.q.dim;
    t.obj.act = diagonal_action(x, y, t.q);
    return t;
}

Matrix MonoidalInstance::tensor_maps(const TensorObj& src, const TensorObj& tgt, const Matrix& f,
                                     const Matrix& g) const {
    return descend_tensor(f, g, src.q, tgt.q, "tensor of morphisms");
}

Matrix MonoidalInstance::lunit_block(const Obj& x) const {
    if (kind_ == Kind::Vec) return Matrix::identity(x.dim);
    const auto& d = *data_;
    std::vector<Matrix> blocks;
    for (int r = 0; r < d.R.dim; ++r) blocks.push_back(act(x, d.t_R.col(r)));
    return Matrix::hstack(blocks);
}

Matrix MonoidalInstance::runit_block(const Obj& x) const {
    if (kind_ == Kind::Vec) return Matrix::identity(x.dim);
    const auto& d = *data_;
    int nr = d.R.dim;
    Matrix k(x.dim, x.dim * nr);
    std::vector<Matrix> acts;
    for (int r = 0; r < nr; ++r) acts.push_back(act(x, d.s_R.col(r)));
    for (int j = 0; j < x.dim; ++j)
        for (int r = 0; r < nr; ++r) k.col_mut(j * nr + r) = acts[r].col(j);
    return k;
}

Matrix MonoidalInstance::lunit(const Obj& x) const {
    return descend(lunit_block(x), tensor(unit(), x).q, "left unitor");
}

Matrix MonoidalInstance::runit(const Obj& x) const {
    return descend(runit_block(x), tensor(x, unit()).q, "right unitor");
}

Matrix MonoidalInstance::assoc(const Obj& x, const Obj& y, const Obj& z) const {
    TensorObj xy = tensor(x, y);
    TensorObj xy_z = tensor(xy.obj, z);
    TensorObj yz = tensor(y, z);
    TensorObj x_yz = tensor(x, yz.obj);
    // Both bracketings are quotients of the same plain triple product.
    Matrix lhs = xy_z.q.projection * hopfd2::tensor(xy.q.projection, Matrix::identity(z.dim));
    Matrix rhs = x_yz.q.projection * hopfd2::tensor(Matrix::identity(x.dim), yz.q.projection);
    Matrix sec = hopfd2::tensor(xy.q.section, Matrix::identity(z.dim)) * xy_z.q.section;
    Matrix a = rhs * sec;
    if (a * lhs != rhs) throw ConsistencyError("associator is not well defined");
    return a;
}

bool MonoidalInstance::pentagon(const Obj& w, const Obj& x, const Obj& y, const Obj& z) const {
    TensorObj wx = tensor(w, x), xy = tensor(x, y), yz = tensor(y, z);
    TensorObj wx_y = tensor(wx.obj, y), w_xy = tensor(w, xy.obj), xy_z = tensor(xy.obj, z);
    TensorObj x_yz = tensor(x, yz.obj);
    TensorObj wxy_z = tensor(wx_y.obj, z);      // ((wx)y)z
    TensorObj wx_yz = tensor(wx.obj, yz.obj);   // (wx)(yz)
    TensorObj w_x_yz = tensor(w, x_yz.obj);     // w(x(yz))
    TensorObj w_xy_z = tensor(w_xy.obj, z);     // (w(xy))z
    TensorObj w__xy_z = tensor(w, xy_z.obj);    // w((xy)z)
    Matrix path1 = assoc(w, x, yz.obj) * assoc(wx.obj, y, z);
    Matrix step1 = tensor_maps(wxy_z, w_xy_z, assoc(w, x, y), Matrix::identity(z.dim));
    Matrix step3 = tensor_maps(w__xy_z, w_x_yz, Matrix::identity(w.dim), assoc(x, y, z));
    Matrix path2 = step3 * assoc(w, xy.obj, z) * step1;
    return path1 == path2;
}

bool MonoidalInstance::triangle(const Obj& x, const Obj& y) const {
    Obj u = unit();
    TensorObj xu = tensor(x, u), uy = tensor(u, y);
    TensorObj xu_y = tensor(xu.obj, y), x_uy = tensor(x, uy.obj), xy = tensor(x, y);
    Matrix lhs = tensor_maps(x_uy, xy, Matrix::identity(x.dim), lunit(y)) * assoc(x, u, y);
    Matrix rhs = tensor_maps(xu_y, xy, runit(x), Matrix::identity(y.dim));
    return lhs == rhs;
}

}  // namespace hopfd2
