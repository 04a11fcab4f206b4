#pragma once

#include <array>

#include "hopfd2/d2.hpp"
#include "hopfd2/hopf.hpp"

namespace hopfd2 {

/// A = End(ι×ῑ) with s_L, t_L, γ_L(a) = a∗S_A⁻¹(yᵢ)⊗xᵢ, π_L(a) = φ_L(a∘i_A) and
/// s_R, t_R, γ_R(a) = a∗S_A(xᵢ)⊗yᵢ, π_R(a) = νφ_L(S_A⁻¹(a)∘i_A), antipode S_A.
HopfAlgebroid build_hopf_A(const Harmonic& h, const D2QuasiBasis& qb);
/// B = End(ῑ×ι) over R (left) and L (right), antipode S_B.
HopfAlgebroid build_hopf_B(const Harmonic& h, const D2QuasiBasis& qb);

/// The two written forms of each coproduct agree in their quotients;
/// π_L, π_R agree with their closed diagram forms; the identities for i_A and
/// the four counit identities; (S_A, ν) is a left bialgebroid isomorphism
/// A_L → (A_R)^op_cop.
Report verify_structure_forms(const Harmonic& h, const D2QuasiBasis& qb, const HopfAlgebroid& A,
                              const HopfAlgebroid& B);

/// α*: B → A*, *α: B → *A, _*α: B → _*A, α_*: B → A_* with the inverses
/// given by their closed forms, as coordinate matrices.
struct DualityIsos {
    std::array<DualRing, 4> ring;  // indexed by DualKind
    std::array<Matrix, 4> alpha;
    std::array<Matrix, 4> alpha_inv;

    const DualRing& of(DualKind k) const { return ring[static_cast<int>(k)]; }
    const Matrix& map(DualKind k) const { return alpha[static_cast<int>(k)]; }
    const Matrix& inv(DualKind k) const { return alpha_inv[static_cast<int>(k)]; }
};
DualityIsos duality_isos(const Harmonic& h, const D2QuasiBasis& qb, const HopfAlgebroid& A);
/// Ring isomorphism and both inverse identities for each of the four maps.
Report verify_duality_isos(const Harmonic& h, const DualityIsos& d);

/// i_A is a two sided S_A-invariant non-degenerate integral with
/// (i_A)_R = F⁻¹∘α*⁻¹, _R(i_A) = Ḟ⁻¹∘*α⁻¹, and the four integral forms of ∗.
Report verify_integral(const Harmonic& h, const HopfAlgebroid& A, const DualityIsos& d);

/// (α*, id_R): B → (A*)_{i_A} is a strict isomorphism, with the five
/// identities of its proof checked separately.
Report verify_strict_duality(const Harmonic& h, const HopfAlgebroid& A, const HopfAlgebroid& B,
                             const DualityIsos& d);

/// The whole forward pipeline with its reports.
struct Construction {
    Harmonic h;
    D2QuasiBasis qb, qbB;
    HopfAlgebroid A, B;
};
/// Throws InputError when no quasi-basis with at most max_terms terms is found.
Construction construct(const FrobeniusDatum& f, int max_terms = 16);

/// Builds A and checks it with the full verifier; throws ConsistencyError
/// naming the first failing identity.
HopfAlgebroid assemble_hopf(const FrobeniusDatum& f, const D2QuasiBasis& qb);

/// Leg spaces tried by the quasi-basis search.
std::vector<Matrix> quasibasis_leg_spaces(const Harmonic& h);

}  // namespace hopfd2
