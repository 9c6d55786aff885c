#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "picalc/rational.hpp"

namespace picalc {

/// Subspace of Q^ambient_dim held as a reduced row echelon basis: every row
/// has leading entry 1 and every pivot column is zero in the other rows.
/// Rows are ordered by pivot column.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, std::span<const RationalVector> vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    const std::vector<RationalVector>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    /// Nonzero column indices of basis row i.
    const std::vector<std::size_t>& support(std::size_t i) const { return support_[i]; }

    /// Reduces v modulo the subspace in place; v becomes zero exactly when
    /// it belonged to the subspace.
    void reduce(RationalVector& v) const;
    bool contains(const RationalVector& v) const;
    bool contains(const Subspace& other) const;

    /// Adds v to the span. Returns false when v was already contained.
    bool insert(RationalVector v);
    /// Inserts a vector already reduced modulo this subspace (nonzero).
    void insert_reduced(RationalVector v);

    /// {x : <row, x> = 0 for every basis row}.
    Subspace annihilator() const;

    /// Coordinates of v (which must lie in the span) against basis().
    RationalVector coordinates(const RationalVector& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
    }

private:
    std::size_t ambient_dim_ = 0;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<std::vector<std::size_t>> support_;

    void rebuild_support(std::size_t i);
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

/// Rank of an arbitrary list of vectors.
std::size_t rank_of(std::span<const RationalVector> vectors);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace picalc
