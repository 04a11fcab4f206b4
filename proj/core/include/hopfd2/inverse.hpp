#pragma once

#include "hopfd2/construct.hpp"

namespace hopfd2 {

/// (H_H, ∗, η, γ_R, π_R) for a non-degenerate S-invariant right integral i:
/// h∗k = _Li(_Li⁻¹(h)·_Li⁻¹(k)) with _Li: _*A → H, φ ↦ i↽φ, and η(r) = i s_R(r).
struct ConvFrobenius {
    HopfAlgebroid H;
    SVec i;
    RightWitness witness;
    Algebra conv;  // (H, ∗), unit i
    Matrix eta;    // dimH x dimR
};

/// Throws InputError when i is not a right integral, S(i) ≠ i or i is degenerate.
ConvFrobenius conv_on_H(const HopfAlgebroid& H, const SVec& i);

/// Both closed forms of ∗, the unit, the Frobenius algebra laws in M_H and
/// γ_L-compatibility.
Report verify_conv_frobenius(const ConvFrobenius& c);

/// For any non-degenerate right integral: left integral ⇔ S(i) = i, and the
/// chain S⁻¹(i) = i↽(i⇁_*ρ) = t_L(_*ρ(i₍₂₎i))i₍₁₎, which equals i when i is
/// also a left integral. Throws InputError when i is not a non-degenerate
/// right integral.
Report s_invariance_remark(const HopfAlgebroid& H, const SVec& i);

/// Monoids U = (R_H, l_R, R) and Q = (H_H, ∗, η) and the 1-cells
/// X = (H_H, l_H, ∗): U → Q, X̄ = (H_H, ∗, r_H): Q → U in BIM(M_H) with
/// ev_L = ∗, coev_L = t⁻¹∘η, ev_R = π_R∘t, coev_R = γ_R where t: X⊗_Q X̄ → H,
/// h⊗k ↦ h∗k.
FrobeniusDatum build_X(const ConvFrobenius& c);

/// t: X⊗_Q X̄ → H on the realized quotient.
Matrix conv_identification(const ConvFrobenius& c, const FrobeniusDatum& f);

/// The coherence isomorphisms of BIM(M_H) in their explicit forms, X⊗_Q X̄ as
/// (H_H, l_H, r_H) and coequalizer preservation for the tensors involved.
Report verify_coherence_forms(const ConvFrobenius& c, const FrobeniusDatum& f);

/// Λ(h)k = hk as a matrix H → A and the quasi-basis Λ(S(i₍₁₎))⊗Λ(i₍₂₎).
struct LambdaData {
    Matrix t;       // X⊗_Q X̄ → H
    Matrix Lambda;  // dimA x dimH
    D2QuasiBasis qb;
};
LambdaData lambda_and_quasibasis(const ConvFrobenius& c, const FrobeniusDatum& f, const EndoRing& A);

/// Λ is a ring isomorphism onto A.
Report verify_lambda(const ConvFrobenius& c, const EndoRing& A, const LambdaData& l);

/// The whole inverse pipeline. Stages are prefixed input., conv., remark.,
/// rigidity., coherence., lambda., d2., assembly. and iso.
struct RoundTrip {
    ConvFrobenius conv;
    FrobeniusDatum f;
    Harmonic h;
    LambdaData lambda;
    HopfAlgebroid A;
    Matrix base;  // L_H → L^A, the coordinates of Λ∘s_L
    Report report;
};
/// Throws InputError on the preconditions of conv_on_H.
RoundTrip roundtrip(const HopfAlgebroid& H, const SVec& i);

/// (Λ, Λ∘s_L) strict isomorphism H → A and the five identities of its proof.
Report verify_roundtrip_iso(const RoundTrip& rt);

}  // namespace hopfd2
