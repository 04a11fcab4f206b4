#pragma once

#include <string>
#include <vector>

#include "hopfd2/frobenius.hpp"
#include "hopfd2/hopf.hpp"

namespace hopfd2 {

/// Group algebra extension kH ⊆ kG. subgroup lists the elements of H in the
/// order used as the basis of N. Φ is the projection onto kH along the other
/// cosets and the dual basis is {(g, g⁻¹)} over left coset representatives.
FrobeniusExtension group_extension(const std::string& name, const Field& f,
                                   const std::vector<std::vector<int>>& table, const std::vector<int>& subgroup);

/// k ⊆ M_n(k) with the trace and the matrix-unit dual basis {(e_ba, e_ab)}.
FrobeniusExtension matrix_extension(const std::string& name, const Field& f, int n);

/// k ⊆ k.
FrobeniusExtension trivial_extension(const Field& f);

/// trivial, qc2, qc2-in-qc4, mat2, qs3
std::vector<std::string> extension_names();
bool is_extension_name(const std::string& name);
/// Throws InputError on unknown names.
FrobeniusExtension catalog_extension(const std::string& name, const Field& f = Field{});

/// A Hopf algebroid with a distinguished non-degenerate right integral.
struct HopfExample {
    HopfAlgebroid hopf;
    SVec integral;
};

/// kG over k: s = t = unit, γ(g) = g⊗g, π = counit, S(g) = g⁻¹, integral Σ g.
HopfExample group_hopf(const std::string& name, const Field& f, const std::vector<std::vector<int>>& table);
/// Functions on G over k: γ(δ_x) = Σ_{yz=x} δ_y⊗δ_z, π(δ_x) = [x = e],
/// S(δ_x) = δ_{x⁻¹}, integral δ_e.
HopfExample function_hopf(const std::string& name, const Field& f, const std::vector<std::vector<int>>& table);
/// The one dimensional Hopf algebroid k over k.
HopfExample trivial_hopf(const Field& f);

/// Sweedler's four dimensional Hopf algebra on 1, g, x, gx with g² = 1,
/// x² = 0, xg = -gx, γ(x) = x⊗1 + g⊗x, S(x) = -gx. The distinguished
/// integral x - gx is a right integral only.
HopfExample sweedler_hopf(const Field& f);

/// hopf-trivial, hopf-qc2, hopf-fnc2, hopf-sweedler
std::vector<std::string> hopf_names();
bool is_hopf_name(const std::string& name);
/// Throws InputError on unknown names.
HopfExample catalog_hopf(const std::string& name, const Field& f = Field{});

}  // namespace hopfd2
