#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hopfd2/algebra.hpp"
#include "hopfd2/monoidal.hpp"

namespace hopfd2 {

/// Monoid object: multiplication on the plain Kronecker square, unit from
/// the monoidal unit.
struct Monoid {
    std::string name;
    Obj obj;
    Matrix mul;   // dim x dim^2
    Matrix unit;  // dim x dim(U)

    int dim() const { return obj.dim; }
};
using MonoidP = std::shared_ptr<const Monoid>;

/// Internal bimodule. lops[k] is the action of the k-th basis element of the
/// left monoid, rops[k] of the right one.
struct Bimodule {
    MonoidP left;
    MonoidP right;
    Obj obj;
    std::vector<Matrix> lops;
    std::vector<Matrix> rops;

    int dim() const { return obj.dim; }
};

struct TensorOver {
    Bimodule P;
    Quotient q;  // from the Kronecker product of the factors
};

MonoidP monoid_from_algebra(const Algebra& a, const std::string& name);
Bimodule regular_bimodule(const MonoidP& s);
/// Algebra m as a bimodule over left and right algebras mapped into it (VEC).
Bimodule algebra_bimodule(const Algebra& m, const MonoidP& left, const Matrix& left_incl,
                          const MonoidP& right, const Matrix& right_incl);

std::optional<std::string> validate_monoid(const MonoidalInstance& inst, const Monoid& m);
std::optional<std::string> validate_bimodule(const MonoidalInstance& inst, const Bimodule& b);

TensorOver tensor_over(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n);
/// p (x)_S q between two tensor_over results.
Matrix induced_map(const TensorOver& src, const TensorOver& tgt, const Matrix& p, const Matrix& q);
bool is_bimodule_map(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n, const Matrix& f);
/// Basis of the bimodule maps m -> n.
std::vector<Matrix> hom_bimodule(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n);

/// S (x)_S N -> N
Matrix underline_lunit(const Bimodule& n, const TensorOver& sn);
/// M (x)_S S -> M
Matrix underline_runit(const Bimodule& m, const TensorOver& ms);

/// (M (x)_S N) (x)_T Q and M (x)_S (N (x)_T Q) both present a coequalizer of
/// M (x) N (x) Q; checks that tensoring the coequalizer of M, N with Q in the
/// monoidal category gives the same quotient, on both sides.
bool preserves_coequalizer(const MonoidalInstance& inst, const Bimodule& m, const Bimodule& n,
                           const Obj& q);

// ---------------------------------------------------------------- 1-cell expressions

struct Expr;
using ExprP = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Gen, Unit, Node };
    Kind kind = Kind::Gen;
    int index = 0;  // generator or object index
    ExprP l, r;
    int t0 = 0;  // target 0-cell (left monoid)
    int s0 = 0;  // source 0-cell (right monoid)
    std::string key;
};

struct Cell {
    ExprP src;
    ExprP tgt;
    Matrix m;
};

struct Realized {
    Bimodule bim;
    Quotient q;  // nodes only
};

class Bicat {
public:
    explicit Bicat(MonoidalInstance inst) : inst_(std::move(inst)) {}

    const MonoidalInstance& instance() const { return inst_; }
    int add_object(MonoidP m);
    /// Generator 1-cell with left monoid t0 and right monoid s0.
    int add_generator(const std::string& name, Bimodule b, int t0, int s0);
    const MonoidP& object(int i) const { return objs_.at(i); }
    const Bimodule& generator(int i) const { return gens_.at(i).bim; }
    int num_generators() const { return static_cast<int>(gens_.size()); }

    ExprP g(int i) const;
    ExprP u(int obj) const;
    ExprP h(const ExprP& a, const ExprP& b) const;
    std::vector<int> word(const ExprP& e) const;

    const Realized& realize(const ExprP& e) const;
    int dim(const ExprP& e) const { return realize(e).bim.dim(); }

    Cell id(const ExprP& e) const;
    Cell cell(const ExprP& src, const ExprP& tgt, Matrix m) const;
    Cell compose(const Cell& g, const Cell& f) const;
    Cell hcomp(const Cell& x, const Cell& y) const;
    Cell assoc(const ExprP& a, const ExprP& b, const ExprP& c) const;
    Cell assoc_inv(const ExprP& a, const ExprP& b, const ExprP& c) const;
    Cell lunit(const ExprP& a) const;
    Cell lunit_inv(const ExprP& a) const;
    Cell runit(const ExprP& a) const;
    Cell runit_inv(const ExprP& a) const;

    enum class Strategy { ChildrenFirst, Rewriting };
    /// Canonical iso from e to its unit-free right-bracketed normal form.
    Cell normalize(const ExprP& e, Strategy s = Strategy::ChildrenFirst) const;
    Cell coherence_iso(const ExprP& e1, const ExprP& e2, Strategy s = Strategy::ChildrenFirst) const;

    std::vector<Cell> hom(const ExprP& a, const ExprP& b) const;
    bool is_cell(const Cell& c) const;

    bool pentagon(const ExprP& a, const ExprP& b, const ExprP& c, const ExprP& d) const;
    bool triangle(const ExprP& a, const ExprP& b) const;
    bool naturality_assoc(const Cell& x, const Cell& y, const Cell& z) const;

private:
    struct Gen {
        std::string name;
        Bimodule bim;
        int t0, s0;
    };
    Cell merge(const ExprP& a, const ExprP& b) const;
    std::optional<Cell> rewrite_step(const ExprP& e) const;
    void require_same(const ExprP& a, const ExprP& b, const char* what) const;

    MonoidalInstance inst_;
    std::vector<MonoidP> objs_;
    std::vector<Gen> gens_;
    mutable std::map<std::string, std::shared_ptr<Realized>> memo_;
    mutable std::mutex mu_;
};

bool same_expr(const ExprP& a, const ExprP& b);

}  // namespace hopfd2
