#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hopfd2/algebra.hpp"
#include "hopfd2/linalg.hpp"

namespace hopfd2 {

/// Object of a concrete monoidal category: an underlying space plus, for
/// module categories, the right action of each basis element of H.
struct Obj {
    int dim = 0;
    std::vector<Matrix> act;
};

/// The data of a right bialgebroid needed to make right H-modules monoidal.
struct RightBialgebroidData {
    Algebra H;
    Algebra R;
    Matrix s_R;      // dimH x dimR
    Matrix t_R;      // dimH x dimR, anti-multiplicative
    Matrix gamma_R;  // dimH^2 x dimH, lifts of a^(1) (x) a^(2)
    Matrix pi_R;     // dimR x dimH
};

/// X (x) Y realized as a quotient of the Kronecker product.
struct TensorObj {
    Obj obj;
    Quotient q;
};

/// Relations v (x) w ~ P v (x) w - v (x) Q w for each operator pair (P, Q).
Quotient balanced_quotient(int dim_v, int dim_w, const std::vector<std::pair<Matrix, Matrix>>& pairs);

/// K∘section after checking that K kills the relations of src.
Matrix descend(const Matrix& k, const Quotient& src, const char* what);
/// π_tgt∘(p (x) q)∘section_src with the same well-definedness check.
Matrix descend_tensor(const Matrix& p, const Matrix& q, const Quotient& src, const Quotient& tgt,
                      const char* what);

class MonoidalInstance {
public:
    enum class Kind { Vec, ModH };

    static MonoidalInstance vec(const Field& f);
    static MonoidalInstance modh(std::shared_ptr<const RightBialgebroidData> data);

    Kind kind() const { return kind_; }
    const Field& field() const { return field_; }
    std::string name() const { return kind_ == Kind::Vec ? "VEC" : "MODH"; }
    const RightBialgebroidData& data() const { return *data_; }

    Obj unit() const;
    /// Plain space of dimension n (trivial action; Vec only).
    Obj plain(int n) const;
    Matrix act(const Obj& x, const SVec& a) const;
    bool is_object(const Obj& x) const;
    bool is_morphism(const Obj& x, const Obj& y, const Matrix& f) const;

    std::vector<std::pair<Matrix, Matrix>> balance_pairs(const Obj& x, const Obj& y) const;
    /// Diagonal action on a quotient of the Kronecker product of x and y.
    std::vector<Matrix> diagonal_action(const Obj& x, const Obj& y, const Quotient& q) const;
    TensorObj tensor(const Obj& x, const Obj& y) const;
    Matrix tensor_maps(const TensorObj& src, const TensorObj& tgt, const Matrix& f, const Matrix& g) const;

    /// u (x) x |-> u.x on the Kronecker product U (x) X.
    Matrix lunit_block(const Obj& x) const;
    /// x (x) u |-> x.u on the Kronecker product X (x) U.
    Matrix runit_block(const Obj& x) const;
    /// U (x) X -> X on the quotient.
    Matrix lunit(const Obj& x) const;
    /// X (x) U -> X on the quotient.
    Matrix runit(const Obj& x) const;
    /// (X (x) Y) (x) Z -> X (x) (Y (x) Z).
    Matrix assoc(const Obj& x, const Obj& y, const Obj& z) const;

    bool pentagon(const Obj& w, const Obj& x, const Obj& y, const Obj& z) const;
    bool triangle(const Obj& x, const Obj& y) const;

private:
    Kind kind_ = Kind::Vec;
    Field field_;
    std::shared_ptr<const RightBialgebroidData> data_;
};

}  // namespace hopfd2
