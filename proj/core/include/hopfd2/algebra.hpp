#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfd2/linalg.hpp"

namespace hopfd2 {

/// Finite-dimensional associative unital algebra given by structure constants.
/// mul is dim x dim^2: column i*dim+j holds e_i e_j.
struct Algebra {
    Field field;
    int dim = 0;
    Matrix mul;
    SVec unit;

    SVec product(const SVec& a, const SVec& b) const;
    SVec basis(int i) const { return sv::unit(i); }
    /// x -> a x
    Matrix left_mult(const SVec& a) const;
    /// x -> x a
    Matrix right_mult(const SVec& a) const;
    Algebra opposite() const;

    /// First violated axiom (associativity or unit law), if any.
    std::optional<std::string> validate() const;
    bool is_commutative() const;

    static Algebra from_constants(const Field& f, int dim,
                                  const std::vector<std::vector<SVec>>& c, const SVec& unit);
    static Algebra ground(const Field& f);
    /// mul_table[g][h] = index of gh.
    static Algebra group(const Field& f, const std::vector<std::vector<int>>& mul_table);
    static Algebra cyclic_group(const Field& f, int n);
    /// Symmetric group S_3 with elements listed in a fixed order (identity first).
    static Algebra s3(const Field& f);
    /// Full matrix algebra M_n with matrix units e_{ab} at index a*n+b.
    static Algebra matrices(const Field& f, int n);
    /// Functions on a finite set of size n with pointwise product.
    static Algebra functions(const Field& f, int n);
};

/// Multiplication table of S_3 used by Algebra::s3 (element 0 is the identity).
std::vector<std::vector<int>> s3_table();
std::vector<int> group_inverses(const std::vector<std::vector<int>>& table);

}  // namespace hopfd2
