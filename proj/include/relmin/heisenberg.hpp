#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "relmin/cayley_dickson.hpp"

namespace relmin {

/// Evaluation convention of the pairing w on coordinate vectors:
/// x_then_f sums x_k·f_k, f_then_x sums f_k·x_k. The two agree over
/// commutative scalars; the matrix realization over noncommutative scalars
/// needs f_then_x.
enum class PairingOrder { x_then_f, f_then_x };

/// Descriptor of the inner-product biadditive map w : Fⁿ × Fⁿ → F with
/// F the Cayley-Dickson algebra at scalar_level. Levels are capped at 3
/// because downstream constructions take multiplicative inverses in F.
struct BiadditiveMap {
    BiadditiveMap(int scalar_level, std::size_t dim, PairingOrder order = PairingOrder::x_then_f);

    int scalar_level;
    std::size_t dim;
    PairingOrder order;
};

/// Group element (a, x̄, f̄) of the generalized Heisenberg group
/// H(w) = (A×E)⋊F with A = F, E = F-factor = Fⁿ and the product
/// u₁u₂ = (a₁ + a₂ + w(x₂, f₁), x₁ + x₂, f₁ + f₂).
struct HeisenbergElement {
    CDElement a;
    std::vector<CDElement> x;
    std::vector<CDElement> f;

    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

/// Throws ShapeError unless u matches the descriptor (levels and lengths).
void validate_element(const BiadditiveMap& w, const HeisenbergElement& u);

/// w(x̄, f̄) evaluated in the descriptor's pairing order; biadditive in each
/// slot. Throws ShapeError on length or level mismatch.
CDElement w_eval(const BiadditiveMap& w, std::span<const CDElement> x, std::span<const CDElement> f);

HeisenbergElement h_identity(const BiadditiveMap& w);

HeisenbergElement h_mul(const BiadditiveMap& w, const HeisenbergElement& u1, const HeisenbergElement& u2);

/// (−a + w(x, f), −x, −f); two-sided inverse for the group law.
HeisenbergElement h_inverse(const BiadditiveMap& w, const HeisenbergElement& u);

/// u₁u₂u₁⁻¹u₂⁻¹ computed by the literal product chain. The result is always
/// central: zero x and f parts, scalar w(x₂,f₁) − w(x₁,f₂).
HeisenbergElement h_commutator(const BiadditiveMap& w, const HeisenbergElement& u1, const HeisenbergElement& u2);

/// For nonzero x̄₀, f̄₀ produces (x̄, f̄) with w(x̄₀, f̄) ≠ 0 and w(x̄, f̄₀) ≠ 0:
/// picks i with x0_i ≠ 0 and j with f0_j ≠ 0 and returns (e_j, e_i).
/// Throws PreconditionError when either input vector is zero.
std::pair<std::vector<CDElement>, std::vector<CDElement>>
separatedness_witness(const BiadditiveMap& w, std::span<const CDElement> x0, std::span<const CDElement> f0);

/// The coordinate-subgroup families of H(w). All are subgroups except
/// E_cross_F, which is only a subset: products regrow the scalar slot.
enum class SubgroupFamily { center_A, A_cross_E, A_cross_F, E_only, F_only, E_cross_F };

/// Membership by zero pattern, e.g. center_A ⇔ x = 0̄ ∧ f = 0̄.
bool subgroup_membership(const HeisenbergElement& u, SubgroupFamily family);

}  // namespace relmin
