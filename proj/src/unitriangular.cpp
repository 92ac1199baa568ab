#include "relmin/unitriangular.hpp"

#include <string>
#include <utility>

namespace relmin {

namespace {

void check_compatible(const UniTriMatrix& m, const UniTriMatrix& n) {
    if (m.size() != n.size())
        throw ShapeError("matrix size mismatch: " + std::to_string(m.size()) + " vs " +
                         std::to_string(n.size()));
    if (m.level() != n.level())
        throw ShapeError("matrix entry level mismatch");
}

}  // namespace

UniTriMatrix::UniTriMatrix(std::size_t size, int level) : size_(size), level_(level) {
    entries_.reserve(size * size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c)
            entries_.push_back(r == c ? CDElement::scalar(level, Rational(1)) : CDElement(level));
}

UniTriMatrix UniTriMatrix::identity(std::size_t size, int level) {
    if (size < 2) throw ShapeError("unitriangular matrices start at size 2");
    if (level < 0 || level > 3) throw ShapeError("matrix entry level must be in 0..3");
    return UniTriMatrix(size, level);
}

UniTriMatrix::UniTriMatrix(std::size_t size, int level, std::vector<CDElement> entries)
    : size_(size), level_(level), entries_(std::move(entries)) {
    if (size < 2) throw ShapeError("unitriangular matrices start at size 2");
    if (level < 0 || level > 3) throw ShapeError("matrix entry level must be in 0..3");
    if (entries_.size() != size * size)
        throw ShapeError("matrix of size " + std::to_string(size) + " needs " +
                         std::to_string(size * size) + " entries");
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) {
            const CDElement& e = entries_[r * size + c];
            if (e.level() != level) throw ShapeError("matrix entry level mismatch");
            if (r == c && !e.is_one()) throw ShapeError("diagonal entry is not 1");
            if (r > c && !e.is_zero()) throw ShapeError("entry below the diagonal is not 0");
        }
    }
}

const CDElement& UniTriMatrix::at(std::size_t row, std::size_t col) const {
    if (row >= size_ || col >= size_) throw ShapeError("matrix index out of range");
    return entries_[row * size_ + col];
}

void UniTriMatrix::set_upper(std::size_t row, std::size_t col, CDElement value) {
    if (row >= size_ || col >= size_ || row >= col)
        throw ShapeError("only strictly upper entries are assignable");
    if (value.level() != level_) throw ShapeError("matrix entry level mismatch");
    entries_[row * size_ + col] = std::move(value);
}

UniTriMatrix ut_mul(const UniTriMatrix& m, const UniTriMatrix& n) {
    check_compatible(m, n);
    const std::size_t sz = m.size();
    UniTriMatrix out = UniTriMatrix::identity(sz, m.level());
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = i + 1; j < sz; ++j) {
            // (MN)_ij = Σ_{k=i..j} M_ik N_kj, summed in ascending k.
            CDElement sum(m.level());
            for (std::size_t k = i; k <= j; ++k) {
                const CDElement& a = m.at(i, k);
                const CDElement& b = n.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                sum = sum + cd_mul(a, b);
            }
            out.set_upper(i, j, std::move(sum));
        }
    }
    return out;
}

UniTriMatrix ut_inverse(const UniTriMatrix& m) {
    const std::size_t sz = m.size();
    UniTriMatrix inv = UniTriMatrix::identity(sz, m.level());
    // Back-substitution on M·X = I, filling diagonals of increasing offset:
    // X_ij = −Σ_{k=i+1..j} M_ik X_kj.
    for (std::size_t offset = 1; offset < sz; ++offset) {
        for (std::size_t i = 0; i + offset < sz; ++i) {
            const std::size_t j = i + offset;
            CDElement sum(m.level());
            for (std::size_t k = i + 1; k <= j; ++k) {
                const CDElement& a = m.at(i, k);
                const CDElement& b = inv.at(k, j);
                if (a.is_zero() || b.is_zero()) continue;
                sum = sum + cd_mul(a, b);
            }
            inv.set_upper(i, j, -sum);
        }
    }
    if (m.level() >= 3) {
        // Nonassociative scalars: the back-substituted right inverse is only
        // guaranteed two-sided for the matrix shapes the realization makes.
        const UniTriMatrix id = UniTriMatrix::identity(sz, m.level());
        if (!(ut_mul(m, inv) == id) || !(ut_mul(inv, m) == id))
            throw PreconditionError("matrix over nonassociative scalars has no two-sided unitriangular inverse");
    }
    return inv;
}

UniTriMatrix heisenberg_matrix_layout(const BiadditiveMap& w, const HeisenbergElement& u) {
    validate_element(w, u);
    const std::size_t sz = w.dim + 2;
    UniTriMatrix out = UniTriMatrix::identity(sz, w.scalar_level);
    out.set_upper(0, sz - 1, u.a);
    for (std::size_t k = 0; k < w.dim; ++k) {
        out.set_upper(0, k + 1, u.f[k]);       // first row carries f
        out.set_upper(k + 1, sz - 1, u.x[k]);  // last column carries x
    }
    return out;
}

UniTriMatrix heisenberg_realization(const BiadditiveMap& w, const HeisenbergElement& u) {
    if (w.scalar_level >= 2 && w.order != PairingOrder::f_then_x)
        throw PreconditionError(
            "matrix realization over noncommutative scalars requires pairing f_then_x");
    return heisenberg_matrix_layout(w, u);
}

UniTriMatrix corner_elem(std::size_t n, std::size_t i, std::size_t j, const CDElement& a) {
    const std::size_t m = n + 2;
    if (i < 1 || j > m || i >= j)
        throw PreconditionError("corner position needs 1 ≤ i < j ≤ n+2");
    if (i == 1 && j == m)
        throw PreconditionError("the corner (1, n+2) is excluded");
    if (a.level() != 0) throw ShapeError("corner entries come from the base field (level 0)");
    UniTriMatrix out = UniTriMatrix::identity(m, 0);
    out.set_upper(i - 1, j - 1, a);
    return out;
}

bool tilde_membership(const UniTriMatrix& m, std::size_t i) {
    if (i < 2 || i > m.size())
        throw PreconditionError("tilde row index needs 2 ≤ i ≤ size");
    for (std::size_t r = 0; r + 1 < i; ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            if (r != c && !m.at(r, c).is_zero()) return false;
    return true;
}

UniTriMatrix delete_reduction(const UniTriMatrix& m, std::size_t i) {
    if (!tilde_membership(m, i))
        throw PreconditionError("matrix is not in the tilde subgroup at row " + std::to_string(i));
    if (m.size() - (i - 1) < 2)
        throw PreconditionError("reduction would leave a matrix smaller than 2x2");
    const std::size_t cut = i - 1;
    const std::size_t sz = m.size() - cut;
    std::vector<CDElement> entries;
    entries.reserve(sz * sz);
    for (std::size_t r = 0; r < sz; ++r)
        for (std::size_t c = 0; c < sz; ++c)
            entries.push_back(m.at(r + cut, c + cut));
    return UniTriMatrix(sz, m.level(), std::move(entries));
}

}  // namespace relmin
