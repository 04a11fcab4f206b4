#pragma once

#include <optional>

#include "hopfd2/harmonic.hpp"

namespace hopfd2 {

/// Σ yᵢ⊗xᵢ as coordinate vectors in A = End(ι×ῑ).
struct D2QuasiBasis {
    std::vector<std::pair<SVec, SVec>> terms;  // (yᵢ, xᵢ)

    int size() const { return static_cast<int>(terms.size()); }
};

/// α⁻¹∘(ι×coev_R)∘(ι×ev_L)∘α on (ι×ῑ)×ι.
Cell d2_kernel(const FrobeniusDatum& f);

/// Σ (yᵢ×ι)∘K∘(xᵢ×ι) = id; the residual rank is reported on failure.
Report verify_d2(const FrobeniusDatum& f, const EndoRing& A, const D2QuasiBasis& qb);

/// Solves the D2 equation for an element of A⊗A and rank-factorizes the
/// particular solution with free variables set to zero. Shorter solutions are
/// then sought with the y-legs restricted to a pruned set of basis elements
/// and to each of leg_spaces (columns spanning a subspace of A). nullopt when
/// there is no solution or the shortest found exceeds max_terms.
std::optional<D2QuasiBasis> find_d2_quasibasis(const FrobeniusDatum& f, const EndoRing& A, int max_terms,
                                               const std::vector<Matrix>& leg_spaces = {});

/// yᵢ′ = F∘Ḟ⁻¹∘F(xᵢ), xᵢ′ = F(yᵢ) in B, a D2 quasi-basis for ῑ.
D2QuasiBasis dual_quasibasis(const Harmonic& h, const D2QuasiBasis& qb);

/// A^L⊗_L A: a∘s_L(l) ⊗ b ~ a ⊗ s_L(l)∘b.
Quotient tensor_sL_sL(const Harmonic& h);

/// Σ yᵢ⊗xᵢ projected to a quotient of A⊗A.
SVec qb_tensor(const D2QuasiBasis& qb, int dim, const Quotient& q);

/// Frobenius system of φ_L and the identities sep, lem326, comp.
Report quasibasis_identities(const Harmonic& h, const D2QuasiBasis& qb);

}  // namespace hopfd2
