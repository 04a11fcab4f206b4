#pragma once

#include <functional>

#include "hopfd2/frobenius.hpp"

namespace hopfd2 {

/// The two rings of 2-endomorphisms of ι×ῑ and ῑ×ι with both products, the
/// Fourier transforms between them, antipodes and the base rings L, R.
/// All maps act on coordinate vectors w.r.t. the EndoRing bases.
struct Harmonic {
    FrobeniusDatum f;
    EndoRing A, B, L, R;
    Algebra convA, convB;  // (A, ∗) and (B, ∗)

    Matrix F, Fd, Finv, Fdinv;  // F, Ḟ: A → B and the inverse composites B → A
    Matrix S_A, S_A_inv, S_B, S_B_inv;
    Matrix mu, nu, mu_inv, nu_inv;  // L → R and back
    Matrix phi_L;                   // A → L

    Matrix s_L, t_L, s_R, t_R;      // into A, from L, L, R, R
    Matrix sB_L, tB_L, sB_R, tB_R;  // into B, from R, R, L, L

    SVec iA() const { return convA.unit; }
    SVec iB() const { return convB.unit; }
};

/// Builds every map from its defining composite of 2-cells. The inverse
/// transforms and μ, ν are computed from their own composites; μ⁻¹, ν⁻¹ and
/// S⁻¹ are matrix inverses. Throws ConsistencyError when F or Ḟ, μ or ν is
/// singular.
Harmonic build_harmonic(const FrobeniusDatum& f);

/// Coordinates-to-coordinates matrix of a map between EndoRings given on cells.
Matrix map_matrix(const EndoRing& src, const EndoRing& tgt, const std::function<Cell(const Cell&)>& fn);

/// Product table of x,y ↦ post∘(x×y)∘pre on a ring of endomorphisms of w,
/// with pre: w → w×w and post: w×w → w.
Matrix sandwich_table(const Bicat& b, const EndoRing& r, const Cell& pre, const Cell& post);

/// Checks: ∗ associative with units i_A, i_B; F, Ḟ bijections with the
/// composite inverses; the four exchange laws; μ, ν ring anti-isomorphisms;
/// the eight transport laws; S_A, S_B anti-automorphisms with S_A(i_A) = i_A;
/// the twisted bimodule law of S_A.
Report verify_harmonic(const Harmonic& h);

/// Individual groups of the battery above.
Report verify_convolution(const Harmonic& h);
Report verify_fourier(const Harmonic& h);
Report verify_transport(const Harmonic& h);
Report verify_antipodes(const Harmonic& h);

}  // namespace hopfd2
