#include "hopfd2/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace hopfd2 {

namespace sv {

SVec unit(int i, const Scalar& one) { return SVec{{i, one}}; }

SVec from_dense(const std::vector<Scalar>& d) {
    SVec r;
    for (int i = 0; i < static_cast<int>(d.size()); ++i)
        if (!d[i].is_zero()) r.emplace_back(i, d[i]);
    return r;
}

std::vector<Scalar> to_dense(const SVec& v, int n) {
    std::vector<Scalar> d(n);
    for (auto& [i, x] : v) d.at(i) = x;
    return d;
}

SVec axpy(const SVec& y, const Scalar& s, const SVec& x) {
    if (s.is_zero() || x.empty()) return y;
    SVec r;
    r.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            r.push_back(y[i++]);
        } else if (i == y.size() || x[j].first < y[i].first) {
            r.emplace_back(x[j].first, s * x[j].second);
            ++j;
        } else {
            Scalar v = y[i].second + s * x[j].second;
            if (!v.is_zero()) r.emplace_back(y[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return r;
}

SVec add(const SVec& a, const SVec& b) { return axpy(a, Scalar(1), b); }
SVec sub(const SVec& a, const SVec& b) { return axpy(a, Scalar(-1), b); }

SVec scale(const SVec& a, const Scalar& s) {
    if (s.is_zero()) return {};
    SVec r;
    r.reserve(a.size());
    for (auto& [i, x] : a) {
        Scalar v = x * s;
        if (!v.is_zero()) r.emplace_back(i, std::move(v));
    }
    return r;
}

SVec collect(std::vector<std::pair<int, Scalar>> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec r;
    r.reserve(terms.size());
    for (auto& t : terms) {
        if (!r.empty() && r.back().first == t.first) r.back().second += t.second;
        else {
            if (!r.empty() && r.back().second.is_zero()) r.pop_back();
            r.push_back(std::move(t));
        }
    }
    if (!r.empty() && r.back().second.is_zero()) r.pop_back();
    return r;
}

Scalar get(const SVec& v, int i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != v.end() && it->first == i) return it->second;
    return Scalar(0);
}

bool equal(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
    return true;
}

SVec kron(const SVec& a, const SVec& b, int dim_b) {
    SVec r;
    r.reserve(a.size() * b.size());
    for (auto& [i, x] : a)
        for (auto& [j, y] : b) r.emplace_back(i * dim_b + j, x * y);
    return r;
}

}  // namespace sv

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.col_[i] = sv::unit(i);
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c) throw InputError("ragged matrix");
        for (int j = 0; j < c; ++j)
            if (!rows[i][j].is_zero()) m.col_[j].emplace_back(i, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_columns(int rows, std::vector<SVec> cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (auto& c : cols)
        for (auto& e : c)
            if (e.first < 0 || e.first >= rows) throw InputError("column entry out of range");
    m.col_ = std::move(cols);
    return m;
}

Matrix Matrix::column(const SVec& v, int rows) { return from_columns(rows, {v}); }

void Matrix::set(int i, int j, const Scalar& v) {
    SVec& c = col_.at(j);
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const auto& p, int k) { return p.first < k; });
    if (it != c.end() && it->first == i) {
        if (v.is_zero()) c.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        c.insert(it, {i, v});
    }
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (auto& c : col_) n += c.size();
    return n;
}

bool Matrix::is_zero() const {
    for (auto& c : col_)
        if (!c.empty()) return false;
    return true;
}

SVec Matrix::apply(const SVec& x) const {
    if (x.size() == 1) return sv::scale(col_.at(x[0].first), x[0].second);
    std::vector<std::pair<int, Scalar>> terms;
    for (auto& [j, v] : x) {
        if (j >= cols_) throw InputError("apply: vector longer than domain");
        for (auto& [i, a] : col_[j]) terms.emplace_back(i, a * v);
    }
    return sv::collect(std::move(terms));
}

Matrix Matrix::operator*(const Matrix& b) const {
    if (cols_ != b.rows_)
        throw InputError("composition dimension mismatch: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " * " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
    Matrix r(rows_, b.cols_);
    for (int j = 0; j < b.cols_; ++j) r.col_[j] = apply(b.col_[j]);
    return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("sum dimension mismatch");
    Matrix r(rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.col_[j] = sv::add(col_[j], b.col_[j]);
    return r;
}

Matrix Matrix::operator-(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("difference dimension mismatch");
    Matrix r(rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.col_[j] = sv::sub(col_[j], b.col_[j]);
    return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix r(rows_, cols_);
    for (int j = 0; j < cols_; ++j) r.col_[j] = sv::scale(col_[j], s);
    return r;
}

std::vector<SVec> Matrix::rows_sparse() const {
    std::vector<SVec> rs(rows_);
    for (int j = 0; j < cols_; ++j)
        for (auto& [i, v] : col_[j]) rs[i].emplace_back(j, v);
    return rs;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    t.col_ = rows_sparse();
    return t;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
    std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_));
    for (int j = 0; j < cols_; ++j)
        for (auto& [i, v] : col_[j]) d[i][j] = v;
    return d;
}

Matrix Matrix::col_block(int j0, int n) const {
    Matrix r(rows_, n);
    for (int j = 0; j < n; ++j) r.col_[j] = col_.at(j0 + j);
    return r;
}

Matrix Matrix::hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return Matrix();
    int rows = blocks[0].rows();
    std::vector<SVec> cols;
    for (auto& b : blocks) {
        if (b.rows() != rows) throw InputError("hstack row mismatch");
        for (auto& c : b.columns()) cols.push_back(c);
    }
    return from_columns(rows, std::move(cols));
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int j = 0; j < a.cols_; ++j)
        if (!sv::equal(a.col_[j], b.col_[j])) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream os;
    auto d = to_dense();
    for (auto& row : d) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].str();
        os << "]\n";
    }
    return os.str();
}

Matrix tensor(const Matrix& a, const Matrix& b) {
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int j1 = 0; j1 < a.cols(); ++j1)
        for (int j2 = 0; j2 < b.cols(); ++j2)
            r.col_mut(j1 * b.cols() + j2) = sv::kron(a.col(j1), b.col(j2), b.rows());
    return r;
}

SVec tensor_apply(const Matrix& a, const Matrix& b, const SVec& x) {
    std::vector<std::pair<int, Scalar>> terms;
    int bc = b.cols();
    for (auto& [j, v] : x) {
        int j1 = j / bc, j2 = j % bc;
        if (j1 >= a.cols()) throw InputError("tensor_apply: index out of range");
        for (auto& [i1, x1] : a.col(j1)) {
            Scalar s = x1 * v;
            for (auto& [i2, x2] : b.col(j2)) terms.emplace_back(i1 * b.rows() + i2, s * x2);
        }
    }
    return sv::collect(std::move(terms));
}

Matrix tensor_times(const Matrix& a, const Matrix& b, const Matrix& x) {
    if (x.rows() != a.cols() * b.cols()) throw InputError("tensor_times dimension mismatch");
    Matrix r(a.rows() * b.rows(), x.cols());
    for (int j = 0; j < x.cols(); ++j) r.col_mut(j) = tensor_apply(a, b, x.col(j));
    return r;
}

// ---------------------------------------------------------------- Echelon

SVec Echelon::reduce(SVec v) const {
    std::size_t i = 0;
    while (i < v.size()) {
        int c = v[i].first;
        int r = pivot_row_[c];
        if (r < 0) {
            ++i;
            continue;
        }
        Scalar coef = v[i].second;
        v = sv::axpy(v, -coef, rows_[r]);
    }
    return v;
}

bool Echelon::insert(SVec v) {
    for (auto& e : v)
        if (e.first < 0 || e.first >= width_) throw InputError("echelon: index out of range");
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Scalar lead = v[0].second;
    if (!lead.is_one()) v = sv::scale(v, lead.inverse());
    int p = v[0].first;
    pivot_row_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    finalized_ = false;
    return true;
}

void Echelon::finalize() {
    if (finalized_) return;
    std::vector<int> order(rows_.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pivots_[a] > pivots_[b]; });
    for (int r : order) {
        SVec& row = rows_[r];
        std::vector<std::pair<int, Scalar>> hits;
        for (std::size_t k = 1; k < row.size(); ++k)
            if (pivot_row_[row[k].first] >= 0) hits.push_back(row[k]);
        for (auto& [c, v] : hits) row = sv::axpy(row, -v, rows_[pivot_row_[c]]);
    }
    finalized_ = true;
}

std::vector<int> Echelon::free_columns() const {
    std::vector<int> f;
    for (int c = 0; c < width_; ++c)
        if (pivot_row_[c] < 0) f.push_back(c);
    return f;
}

// ---------------------------------------------------------------- solvers

int rank(const Matrix& a) {
    Echelon e(a.cols());
    for (auto& r : a.rows_sparse()) e.insert(r);
    return e.rank();
}

Subspace nullspace(Echelon e) {
    e.finalize();
    int w = e.width();
    std::vector<int> freec = e.free_columns();
    std::vector<int> idx(w, -1);
    for (std::size_t k = 0; k < freec.size(); ++k) idx[freec[k]] = static_cast<int>(k);
    std::vector<std::vector<std::pair<int, Scalar>>> terms(freec.size());
    for (std::size_t k = 0; k < freec.size(); ++k) terms[k].emplace_back(freec[k], Scalar(1));
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
        int p = e.pivots()[r];
        for (auto& [c, v] : e.rows()[r])
            if (c != p) terms[idx[c]].emplace_back(p, -v);
    }
    Subspace s;
    s.ambient_dim = w;
    for (auto& t : terms) s.basis.push_back(sv::collect(std::move(t)));
    return s;
}

Subspace kernel(const Matrix& a) {
    Echelon e(a.cols());
    for (auto& r : a.rows_sparse()) e.insert(r);
    return nullspace(std::move(e));
}

Subspace column_space(const Matrix& a) {
    Echelon e(a.rows());
    for (auto& c : a.columns()) e.insert(c);
    e.finalize();
    Subspace s;
    s.ambient_dim = a.rows();
    s.basis = e.rows();
    return s;
}

std::optional<Matrix> solve_many(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InputError("solve: right-hand side has wrong length");
    int n = a.cols();
    Echelon e(n + b.cols());
    auto ar = a.rows_sparse();
    auto br = b.rows_sparse();
    for (int i = 0; i < a.rows(); ++i) {
        SVec row = ar[i];
        for (auto& [j, v] : br[i]) row.emplace_back(n + j, v);
        e.insert(std::move(row));
    }
    for (int p : e.pivots())
        if (p >= n) return std::nullopt;
    e.finalize();
    Matrix x(n, b.cols());
    std::vector<std::vector<std::pair<int, Scalar>>> cols(b.cols());
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
        int p = e.pivots()[r];
        for (auto& [c, v] : e.rows()[r])
            if (c >= n) cols[c - n].emplace_back(p, v);
    }
    for (int j = 0; j < b.cols(); ++j) x.col_mut(j) = sv::collect(std::move(cols[j]));
    return x;
}

std::optional<SVec> solve(const Matrix& a, const SVec& b) {
    auto x = solve_many(a, Matrix::column(b, a.rows()));
    if (!x) return std::nullopt;
    return x->col(0);
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    if (rank(a) != a.rows()) return std::nullopt;
    return solve_many(a, Matrix::identity(a.rows()));
}

Matrix right_inverse(const Matrix& a) {
    auto x = solve_many(a, Matrix::identity(a.rows()));
    if (!x) throw ConsistencyError("right_inverse: map is not surjective");
    return *x;
}

Quotient quotient_by_span(int ambient_dim, const std::vector<SVec>& gens) {
    Echelon e(ambient_dim);
    for (auto& g : gens) e.insert(g);
    e.finalize();
    Quotient q;
    q.ambient_dim = ambient_dim;
    std::vector<int> freec = e.free_columns();
    q.dim = static_cast<int>(freec.size());
    std::vector<int> idx(ambient_dim, -1);
    for (std::size_t k = 0; k < freec.size(); ++k) idx[freec[k]] = static_cast<int>(k);
    q.projection = Matrix(q.dim, ambient_dim);
    q.section = Matrix(ambient_dim, q.dim);
    for (std::size_t k = 0; k < freec.size(); ++k) {
        q.projection.col_mut(freec[k]) = sv::unit(static_cast<int>(k));
        q.section.col_mut(static_cast<int>(k)) = sv::unit(freec[k]);
    }
    for (std::size_t r = 0; r < e.rows().size(); ++r) {
        int p = e.pivots()[r];
        std::vector<std::pair<int, Scalar>> t;
        for (auto& [c, v] : e.rows()[r])
            if (c != p) t.emplace_back(idx[c], -v);
        q.projection.col_mut(p) = sv::collect(std::move(t));
    }
    q.relations.ambient_dim = ambient_dim;
    q.relations.basis = e.rows();
    return q;
}

Quotient quotient_by(int ambient_dim, const Subspace& s) {
    if (s.ambient_dim != ambient_dim) throw InputError("quotient_by: ambient dimension mismatch");
    return quotient_by_span(ambient_dim, s.basis);
}

bool subspace_contains(const Subspace& s, const SVec& v) {
    Echelon e(s.ambient_dim);
    for (auto& b : s.basis) e.insert(b);
    return e.reduce(v).empty();
}

bool same_span(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return false;
    Echelon ea(a.rows()), eb(b.rows());
    for (auto& c : a.columns()) ea.insert(c);
    for (auto& c : b.columns()) eb.insert(c);
    if (ea.rank() != eb.rank()) return false;
    for (auto& c : b.columns())
        if (!ea.reduce(c).empty()) return false;
    return true;
}

// ---------------------------------------------------------------- coordinates

Coordinates::Coordinates(int ambient_dim, std::vector<SVec> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)) {
    Echelon e(ambient_);
    for (auto& b : basis_)
        if (!e.insert(b)) throw ConsistencyError("Coordinates: family is linearly dependent");
    pivot_rows_ = e.pivots();
    std::sort(pivot_rows_.begin(), pivot_rows_.end());
    int k = dim();
    Matrix sub(k, k);
    std::vector<int> pos(ambient_, -1);
    for (int r = 0; r < k; ++r) pos[pivot_rows_[r]] = r;
    for (int c = 0; c < k; ++c) {
        std::vector<std::pair<int, Scalar>> t;
        for (auto& [i, v] : basis_[c])
            if (pos[i] >= 0) t.emplace_back(pos[i], v);
        sub.col_mut(c) = sv::collect(std::move(t));
    }
    auto inv = inverse(sub);
    if (!inv) throw ConsistencyError("Coordinates: singular pivot block");
    inv_ = *inv;
}

std::optional<SVec> Coordinates::try_coords(const SVec& v) const {
    SVec restricted;
    std::size_t k = 0;
    for (auto& [i, x] : v) {
        while (k < pivot_rows_.size() && pivot_rows_[k] < i) ++k;
        if (k < pivot_rows_.size() && pivot_rows_[k] == i) restricted.emplace_back(static_cast<int>(k), x);
    }
    SVec c = inv_.apply(restricted);
    if (!sv::equal(combine(c), v)) return std::nullopt;
    return c;
}

SVec Coordinates::coords(const SVec& v, bool check) const {
    if (!check) {
        SVec restricted;
        std::size_t k = 0;
        for (auto& [i, x] : v) {
            while (k < pivot_rows_.size() && pivot_rows_[k] < i) ++k;
            if (k < pivot_rows_.size() && pivot_rows_[k] == i)
                restricted.emplace_back(static_cast<int>(k), x);
        }
        return inv_.apply(restricted);
    }
    auto c = try_coords(v);
    if (!c) throw ConsistencyError("vector outside the coordinate span");
    return *c;
}

SVec Coordinates::combine(const SVec& c) const {
    std::vector<std::pair<int, Scalar>> t;
    for (auto& [j, a] : c)
        for (auto& [i, v] : basis_.at(j)) t.emplace_back(i, a * v);
    return sv::collect(std::move(t));
}

SVec flatten(const Matrix& m) {
    SVec v;
    int r = m.rows();
    for (int c = 0; c < m.cols(); ++c)
        for (auto& [i, x] : m.col(c)) v.emplace_back(c * r + i, x);
    return v;
}

Matrix unflatten(const SVec& v, int rows, int cols) {
    Matrix m(rows, cols);
    for (auto& [k, x] : v) m.col_mut(k / rows).emplace_back(k % rows, x);
    return m;
}

}  // namespace hopfd2
