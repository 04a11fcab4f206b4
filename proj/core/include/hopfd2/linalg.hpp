#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hopfd2/scalar.hpp"

namespace hopfd2 {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sparse vector: strictly increasing indices, no stored zeros.
using SVec = std::vector<std::pair<int, Scalar>>;

namespace sv {
SVec unit(int i, const Scalar& one = Scalar(1));
SVec from_dense(const std::vector<Scalar>& d);
std::vector<Scalar> to_dense(const SVec& v, int n);
SVec add(const SVec& a, const SVec& b);
SVec sub(const SVec& a, const SVec& b);
SVec scale(const SVec& a, const Scalar& s);
/// y + s*x
SVec axpy(const SVec& y, const Scalar& s, const SVec& x);
/// Sum of (index, value) pairs, combining duplicates.
SVec collect(std::vector<std::pair<int, Scalar>> terms);
Scalar get(const SVec& v, int i);
bool equal(const SVec& a, const SVec& b);
/// Kronecker product with the row-major index i*dim_b + j.
SVec kron(const SVec& a, const SVec& b, int dim_b);
}  // namespace sv

/// Column-compressed exact matrix. A LinearMap from dim cols() to dim rows().
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix identity(int n);
    static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows);
    static Matrix from_columns(int rows, std::vector<SVec> cols);
    static Matrix column(const SVec& v, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const SVec& col(int j) const { return col_.at(j); }
    SVec& col_mut(int j) { return col_.at(j); }
    const std::vector<SVec>& columns() const { return col_; }

    Scalar at(int i, int j) const { return sv::get(col_.at(j), i); }
    void set(int i, int j, const Scalar& v);
    std::size_t nnz() const;
    bool is_zero() const;

    SVec apply(const SVec& x) const;
    Matrix operator*(const Matrix& b) const;
    Matrix operator+(const Matrix& b) const;
    Matrix operator-(const Matrix& b) const;
    Matrix scaled(const Scalar& s) const;
    Matrix transpose() const;
    /// Row-major view of the nonzeros.
    std::vector<SVec> rows_sparse() const;
    std::vector<std::vector<Scalar>> to_dense() const;

    /// Columns [j0, j0+n)
    Matrix col_block(int j0, int n) const;
    static Matrix hstack(const std::vector<Matrix>& blocks);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<SVec> col_;
};

/// Kronecker product: index of v_i (x) w_j is i*dim_W + j.
Matrix tensor(const Matrix& a, const Matrix& b);
/// tensor(a, b) * x without materializing the product.
Matrix tensor_times(const Matrix& a, const Matrix& b, const Matrix& x);
SVec tensor_apply(const Matrix& a, const Matrix& b, const SVec& x);

/// Incremental row echelon form over sparse rows of a fixed width.
class Echelon {
public:
    explicit Echelon(int width) : width_(width), pivot_row_(width, -1) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    /// Reduce v against the stored rows.
    SVec reduce(SVec v) const;
    /// Insert a vector; returns true when it enlarged the span.
    bool insert(SVec v);
    /// Bring the stored rows into reduced row echelon form.
    void finalize();
    bool finalized() const { return finalized_; }

    const std::vector<SVec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    int pivot_row(int col) const { return pivot_row_[col]; }
    std::vector<int> free_columns() const;

private:
    int width_;
    std::vector<SVec> rows_;
    std::vector<int> pivots_;
    std::vector<int> pivot_row_;
    bool finalized_ = true;
};

struct Subspace {
    int ambient_dim = 0;
    std::vector<SVec> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    Matrix as_matrix() const { return Matrix::from_columns(ambient_dim, basis); }
};

struct Quotient {
    int ambient_dim = 0;
    int dim = 0;
    Matrix projection;  // dim x ambient_dim
    Matrix section;     // ambient_dim x dim
    Subspace relations; // reduced basis of the kernel of projection
};

/// Column-major flattening, entry (r, c) at c*rows + r.
SVec flatten(const Matrix& m);
Matrix unflatten(const SVec& v, int rows, int cols);

int rank(const Matrix& a);
Subspace kernel(const Matrix& a);
/// Solutions of the homogeneous system whose rows were inserted into e.
Subspace nullspace(Echelon e);
Subspace column_space(const Matrix& a);
std::optional<SVec> solve(const Matrix& a, const SVec& b);
/// X with a*X = b, if it exists.
std::optional<Matrix> solve_many(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
/// Some X with a*X = id (a must be surjective).
Matrix right_inverse(const Matrix& a);
Quotient quotient_by(int ambient_dim, const Subspace& s);
/// Quotient by the span of arbitrary (possibly dependent) vectors.
Quotient quotient_by_span(int ambient_dim, const std::vector<SVec>& gens);
bool subspace_contains(const Subspace& s, const SVec& v);
bool same_span(const Matrix& a, const Matrix& b);

/// Coordinates with respect to a fixed linearly independent family.
class Coordinates {
public:
    Coordinates() = default;
    Coordinates(int ambient_dim, std::vector<SVec> basis);

    int dim() const { return static_cast<int>(basis_.size()); }
    int ambient_dim() const { return ambient_; }
    const std::vector<SVec>& basis() const { return basis_; }
    /// Coordinates of v; throws ConsistencyError when v is outside the span
    /// and check is set.
    SVec coords(const SVec& v, bool check = true) const;
    std::optional<SVec> try_coords(const SVec& v) const;
    SVec combine(const SVec& c) const;

private:
    int ambient_ = 0;
    std::vector<SVec> basis_;
    std::vector<int> pivot_rows_;
    Matrix inv_;  // k x k, maps restricted coordinates to family coefficients
};

}  // namespace hopfd2
