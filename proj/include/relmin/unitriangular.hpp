#pragma once

#include <cstddef>
#include <vector>

#include "relmin/cayley_dickson.hpp"
#include "relmin/heisenberg.hpp"

namespace relmin {

/// Square upper unitriangular matrix with exact Cayley-Dickson entries:
/// unit diagonal, zero below. Matrix positions in the group-theoretic
/// operations below (corner_elem, tilde_membership, delete_reduction) are
/// 1-based to match the usual a_ij notation; the raw accessors here are
/// 0-based.
class UniTriMatrix {
public:
    static UniTriMatrix identity(std::size_t size, int level);
    /// Row-major entries; validates the unitriangular invariant and that all
    /// entries share one level ≤ 3.
    UniTriMatrix(std::size_t size, int level, std::vector<CDElement> entries);

    std::size_t size() const { return size_; }
    int level() const { return level_; }

    const CDElement& at(std::size_t row, std::size_t col) const;
    /// Assigns a strictly-upper entry; throws ShapeError elsewhere.
    void set_upper(std::size_t row, std::size_t col, CDElement value);

    friend bool operator==(const UniTriMatrix&, const UniTriMatrix&) = default;

private:
    UniTriMatrix(std::size_t size, int level);
    std::size_t size_;
    int level_;
    std::vector<CDElement> entries_;
};

/// Matrix product; entry sums run in ascending k so the result is
/// well-defined at nonassociative scalar levels. Throws ShapeError on size
/// or level mismatch.
UniTriMatrix ut_mul(const UniTriMatrix& m, const UniTriMatrix& n);

/// Inverse by back-substitution. Exact two-sided inverse for associative
/// scalar levels (≤ 2) at any size; for level 3 the result is verified to be
/// two-sided and a PreconditionError is raised when it is not (it always is
/// for matrices of the Heisenberg shape).
UniTriMatrix ut_inverse(const UniTriMatrix& m);

/// The raw (n+2)×(n+2) matrix picture of u = (a, x̄, f̄): first row
/// (1, f_1..f_n, a), last column (a; x_1..x_n; 1), identity in between.
/// No pairing precondition — exists so the homomorphism failure under the
/// wrong pairing can be exhibited.
UniTriMatrix heisenberg_matrix_layout(const BiadditiveMap& w, const HeisenbergElement& u);

/// The group embedding H(w) → U_{n+2}(F). Requires pairing f_then_x when
/// the scalar level is ≥ 2 (noncommutative); under that precondition
/// realization(u₁·u₂) = realization(u₁)·realization(u₂) exactly.
UniTriMatrix heisenberg_realization(const BiadditiveMap& w, const HeisenbergElement& u);

/// I + a·E_ij in U_{n+2}(F), 1-based, i < j, (i,j) ≠ (1, n+2); entries from
/// the base field (level 0). Throws PreconditionError on an index violation
/// including the excluded corner, and ShapeError when a is not level 0.
UniTriMatrix corner_elem(std::size_t n, std::size_t i, std::size_t j, const CDElement& a);

/// Member of Ũ at row index i (1-based, 2 ≤ i ≤ size): all off-diagonal
/// entries in rows 1..i−1 vanish.
bool tilde_membership(const UniTriMatrix& m, std::size_t i);

/// Deletes the first i−1 rows and columns. On Ũ this is a group
/// isomorphism onto the smaller unitriangular group, and it maps the corner
/// subgroup at (i,j) to the one at (1, j+1−i). Throws PreconditionError when
/// m is not in Ũ at i.
UniTriMatrix delete_reduction(const UniTriMatrix& m, std::size_t i);

}  // namespace relmin
