#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hopfd2/monoidal.hpp"
#include "hopfd2/report.hpp"

namespace hopfd2 {

/// (A, L, s, t, γ, π). γ is stored as lifts into the plain A⊗A
/// (index p*dim+q) and is meaningful after projection to A_L⊗_L A.
struct LeftBialgebroid {
    Algebra A;
    Algebra L;
    Matrix s;      // dimA x dimL
    Matrix t;      // dimA x dimL, anti-multiplicative
    Matrix gamma;  // dimA^2 x dimA
    Matrix pi;     // dimL x dimA
};

/// (A, R, s, t, γ, π) with γ valued in A^R⊗^R A.
struct RightBialgebroid {
    Algebra A;
    Algebra R;
    Matrix s;
    Matrix t;
    Matrix gamma;
    Matrix pi;

    RightBialgebroidData data() const { return {A, R, s, t, gamma, pi}; }
};

struct HopfAlgebroid {
    std::string name;
    LeftBialgebroid left;
    RightBialgebroid right;
    Matrix S;
    Matrix S_inv;

    const Algebra& A() const { return left.A; }
    int dim() const { return left.A.dim; }
};

/// Shapes, algebra axioms and matching total algebras; the first violation.
std::optional<std::string> validate_structure(const HopfAlgebroid& h);

/// A_L⊗_L A: t_L(l)a ⊗ b ~ a ⊗ s_L(l)b.
Quotient left_tensor(const LeftBialgebroid& b);
/// A^R⊗^R A: a s_R(r) ⊗ b ~ a ⊗ b t_R(r).
Quotient right_tensor(const RightBialgebroid& b);

/// Threefold quotient of A⊗A⊗A built on a twofold quotient q2 of the first
/// two legs. Each pair (P, Q) adds u⊗Pv⊗w ~ u⊗v⊗Qw where P acts on the
/// second leg and must descend to q2.
struct Tensor3 {
    int d = 0;
    Quotient q2;
    Quotient q3;

    SVec project(const SVec& plain) const;
};
Tensor3 tensor3(const Quotient& q2, int d, const std::vector<std::pair<Matrix, Matrix>>& ops);

/// Σ c_pq f(p, q) over the entries of an element of the plain A⊗A.
SVec contract(const SVec& tensor, int d, const std::function<SVec(int, int)>& f);
/// Componentwise product in A⊗A.
SVec tensor_mul(const Algebra& A, const SVec& u, const SVec& v);

Report verify_left(const LeftBialgebroid& b, const std::string& prefix = "L.");
Report verify_right(const RightBialgebroid& b, const std::string& prefix = "R.");
/// Axioms (i)-(iv) of a Hopf algebroid.
Report verify_hopf_axioms(const HopfAlgebroid& h);
/// Both bialgebroids and the Hopf axioms.
Report verify(const HopfAlgebroid& h);

/// (A_R)^op_cop = (A^op, R^op, s_R, t_R, γ_R^op, π_R) as a left bialgebroid.
LeftBialgebroid op_cop(const RightBialgebroid& b);

/// The four conditions of a left bialgebroid map, ring maps, optionally bijectivity.
Report check_left_morphism(const LeftBialgebroid& src, const LeftBialgebroid& dst, const Matrix& Phi,
                           const Matrix& phi, bool iso, const std::string& prefix = "");
/// Hopf algebroid homomorphism (Φ, φ); strict adds Φ∘S = S′∘Φ.
Report check_morphism(const HopfAlgebroid& src, const HopfAlgebroid& dst, const Matrix& Phi, const Matrix& phi,
                      bool strict, bool iso = true);

// ---------------------------------------------------------------- integrals

enum class Side { Left, Right };

bool is_left_integral(const HopfAlgebroid& h, const SVec& x);
bool is_right_integral(const HopfAlgebroid& h, const SVec& x);

struct Integrals {
    Subspace left;
    Subspace right;
};
Integrals find_integrals(const HopfAlgebroid& h);

/// Items ii)-v) of the characterization of integrals for x on the given side.
Report lemma_equivalences(const HopfAlgebroid& h, const SVec& x, Side side);

// ---------------------------------------------------------------- dual rings

/// A* = {φ: A^R → R^R}, *A = {φ: ^R A → ^R R}, A_* = {φ: A_L → L_L},
/// _*A = {φ: _L A → _L L}.
enum class DualKind { UpperRight, UpperLeft, LowerRight, LowerLeft };
std::string dual_name(DualKind k);

struct DualRing {
    DualKind kind;
    int base_dim = 0;
    int total_dim = 0;
    std::vector<Matrix> basis;  // base_dim x total_dim
    Coordinates coordinates;
    Algebra ring;

    int dim() const { return ring.dim; }
    Matrix map(const SVec& c) const;
    SVec coords(const Matrix& phi) const;
    std::optional<SVec> try_coords(const Matrix& phi) const;
};

DualRing dual_ring(const HopfAlgebroid& h, DualKind kind);
/// Action axioms of ⇀, ⇁, ↼, ↽ and the ring axioms.
Report verify_dual_ring(const HopfAlgebroid& h, const DualRing& d);

/// φ*⇀a = a⁽²⁾ t_R(φ*(a⁽¹⁾))
SVec act_upper_right(const HopfAlgebroid& h, const Matrix& phi, const SVec& a);
/// *φ⇁a = a⁽¹⁾ s_R(*φ(a⁽²⁾))
SVec act_upper_left(const HopfAlgebroid& h, const Matrix& phi, const SVec& a);
/// a↼φ_* = s_L(φ_*(a₍₁₎)) a₍₂₎
SVec act_lower_right(const HopfAlgebroid& h, const Matrix& phi, const SVec& a);
/// a↽_*φ = t_L(_*φ(a₍₂₎)) a₍₁₎
SVec act_lower_left(const HopfAlgebroid& h, const Matrix& phi, const SVec& a);
/// b ↦ φ(ab), the maps φ↼a and φ↽a.
Matrix restrict_right(const Algebra& A, const Matrix& phi, const SVec& a);
/// b ↦ φ(ba), the maps a⇀φ and a⇁φ.
Matrix restrict_left(const Algebra& A, const Matrix& phi, const SVec& a);

// ---------------------------------------------------------------- non-degeneracy

/// For a left integral ℓ: ℓ_R: A* → A and _Rℓ: *A → A, λ* = ℓ_R⁻¹(1).
struct LeftWitness {
    SVec ell;
    DualRing upper_right, upper_left;
    Matrix ell_R, R_ell;          // dimA x dual dims
    Matrix ell_R_inv, R_ell_inv;  // matrix inverses
    SVec lambda;                  // coordinates in A*
};
std::optional<LeftWitness> left_nondegeneracy(const HopfAlgebroid& h, const SVec& ell);
/// ℓ_R⁻¹(a) = λ*↼S(a) and _Rℓ⁻¹(a) = (λ*∘S)↽S⁻¹(a) on a basis.
Report verify_left_witness(const HopfAlgebroid& h, const LeftWitness& w);

/// For a right integral Υ: _LΥ: _*A → A and Υ_L: A_* → A, _*ρ = _LΥ⁻¹(1).
struct RightWitness {
    SVec upsilon;
    DualRing lower_left, lower_right;
    Matrix L_ups, ups_L;
    Matrix L_ups_inv, ups_L_inv;
    SVec rho;  // coordinates in _*A
};
std::optional<RightWitness> right_nondegeneracy(const HopfAlgebroid& h, const SVec& ups);
/// _LΥ⁻¹(a) = S(a)⇁_*ρ and Υ_L⁻¹(a) = S⁻¹(a)⇀(_*ρ∘S) on a basis.
Report verify_right_witness(const HopfAlgebroid& h, const RightWitness& w);

// ---------------------------------------------------------------- dual Hopf algebroid

/// The Hopf algebroid A*_i on the ring A* for a two sided non-degenerate
/// integral i. Its left base is R and its right base is L. Throws InputError
/// when i is not two sided or degenerate.
struct DualHopf {
    HopfAlgebroid hopf;
    LeftWitness witness;  // of i, with λ* = i_R⁻¹(1)
    Matrix i_R;           // A* → A, φ ↦ φ⇀i
    Matrix i_R_inv;
};
DualHopf dualize(const HopfAlgebroid& h, const SVec& i);

/// Searches Ψ: A → A** among (i_R∘λ*_R)⁻¹∘σ, with i_R: A* → A and
/// λ*_R: A** → A* the witness bijections, and among Ψ_a(φ) = θ(φ(σa)) for
/// θ ∈ {π_L s_R, π_L t_R}, σ ∈ {S, S⁻¹, id, S², S⁻²}. Solves for the base map
/// and returns the first pair passing check_morphism as a strict isomorphism.
struct SecondDual {
    DualHopf first, second;
    Matrix Psi, psi;
    std::string choice;
    Report report;
};
SecondDual second_dual(const HopfAlgebroid& h, const SVec& i);

}  // namespace hopfd2
