#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfd2/bicat.hpp"
#include "hopfd2/report.hpp"

namespace hopfd2 {

/// A 1-cell ι with dual ῑ and the four (co)evaluations
///   ev_R: ι×ῑ → t0(ι)    coev_R: s0(ι) → ῑ×ι
///   ev_L: ῑ×ι → s0(ι)    coev_L: t0(ι) → ι×ῑ
struct FrobeniusDatum {
    std::shared_ptr<const Bicat> bicat;
    ExprP i;
    ExprP j;
    Cell ev_R, coev_R, ev_L, coev_L;

    const Bicat& b() const { return *bicat; }
    ExprP ij() const { return bicat->h(i, j); }
    ExprP ji() const { return bicat->h(j, i); }
    /// t0(ι) and s0(ι) as identity 1-cells.
    ExprP ut() const { return bicat->u(i->t0); }
    ExprP us() const { return bicat->u(i->s0); }
};

/// Checks the typing of the four cells and builds the datum.
FrobeniusDatum make_datum(std::shared_ptr<const Bicat> b, ExprP i, ExprP j, Cell ev_R, Cell coev_R, Cell ev_L,
                          Cell coev_L);

/// The datum with the roles of ι and ῑ exchanged.
FrobeniusDatum swapped(const FrobeniusDatum& f);

/// Ring extension N → M with Frobenius map Φ: M → N and dual basis
/// Σ Φ(m x_j) y_j = m = Σ x_j Φ(y_j m).
struct FrobeniusExtension {
    std::string name;
    Algebra N;
    Algebra M;
    Matrix incl;  // M.dim x N.dim
    Matrix phi;   // N.dim x M.dim
    std::vector<std::pair<SVec, SVec>> dual_basis;  // (x_j, y_j)

    /// Algebra axioms, unital multiplicative inclusion, Φ an N-N bimodule map.
    std::optional<std::string> validate() const;
};

/// ι = _N M_M and ῑ = _M M_N in the bicategory of bimodules over VEC.
FrobeniusDatum extension_datum(const FrobeniusExtension& e);

/// c_1∘c_2∘...∘c_n
Cell chain(const Bicat& b, std::initializer_list<Cell> cells);

/// The four relations, each as its own item.
Report verify_rigidity(const FrobeniusDatum& f);

/// Ring of 2-endomorphisms of a 1-cell with composition as product.
struct EndoRing {
    ExprP word;
    int space_dim = 0;
    std::vector<Matrix> basis;
    Coordinates coordinates;  // of flattened maps
    Algebra alg;

    int dim() const { return alg.dim; }
    Matrix element(const SVec& c) const;
    SVec coords(const Matrix& m) const;
    std::optional<SVec> try_coords(const Matrix& m) const;
    Cell cell(const SVec& c) const { return Cell{word, word, element(c)}; }
};

EndoRing endo_ring(const Bicat& b, const ExprP& w);

}  // namespace hopfd2
