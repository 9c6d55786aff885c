#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "picalc/linalg.hpp"
#include "picalc/rational.hpp"

namespace picalc {

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Some pairwise product of the spanning matrices leaves their span.
class NotClosedError : public AlgebraError {
public:
    NotClosedError(std::size_t i, std::size_t j);
    std::size_t left, right;  // 0-based basis indices
};

class LinearlyDependentBasisError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class NotAssociativeError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// Coordinates of an element against an algebra basis.
struct AlgebraElement {
    RationalVector coords;

    AlgebraElement() = default;
    explicit AlgebraElement(std::size_t dim) : coords(dim) {}
    explicit AlgebraElement(RationalVector c) : coords(std::move(c)) {}

    static AlgebraElement basis(std::size_t dim, std::size_t i) {
        AlgebraElement e(dim);
        e.coords[i] = 1;
        return e;
    }

    std::size_t size() const { return coords.size(); }
    bool is_zero() const { return picalc::is_zero(coords); }

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a);
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// gamma_{ijk}: b_i b_j = sum_k gamma_{ijk} b_k (0-based indices).
struct StructureConstant {
    std::size_t i, j, k;
    Rational value;
};

/// Finite-dimensional associative algebra over Q given by structure
/// constants. Immutable after construction.
class Algebra {
public:
    struct Term {
        std::size_t index;
        Rational coeff;
    };
    struct IntTerm {
        std::uint32_t index;
        std::int64_t coeff;
    };

    /// Validates associativity on all basis triples and, when given, that the
    /// unit idempotent squares to itself.
    Algebra(std::size_t dim, std::vector<std::string> labels, std::vector<StructureConstant> table,
            std::optional<AlgebraElement> unit_idempotent = std::nullopt, std::string name = {});

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& name() const { return name_; }
    const std::optional<AlgebraElement>& unit_idempotent() const { return unit_; }

    /// Nonzero terms of b_i b_j.
    const std::vector<Term>& basis_product(std::size_t i, std::size_t j) const {
        return products_[i * dim_ + j];
    }
    /// Same terms as integers; only meaningful when integral().
    const std::vector<IntTerm>& basis_product_int(std::size_t i, std::size_t j) const {
        return products_int_[i * dim_ + j];
    }
    /// All structure constants are integers of moderate size.
    bool integral() const { return integral_; }

    /// Structure constants in lexicographic (i, j, k) order.
    std::vector<StructureConstant> table() const;

    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) const;
    AlgebraElement basis(std::size_t i) const { return AlgebraElement::basis(dim_, i); }

    /// Partition of the basis into index blocks such that every nonzero
    /// structure constant has i, j, k in one block; A is the direct sum of
    /// the spans of the blocks.
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

    Algebra renamed(std::string name) const;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Term>> products_;
    std::vector<std::vector<IntTerm>> products_int_;
    bool integral_ = true;
    std::optional<AlgebraElement> unit_;
    std::string name_;
    std::vector<std::vector<std::size_t>> blocks_;

    void check_associative() const;
    void compute_blocks();
};

/// Square matrix over Q, row-major.
struct SquareMatrix {
    std::size_t size = 0;
    RationalVector entries;

    explicit SquareMatrix(std::size_t m = 0) : size(m), entries(m * m) {}
    Rational& at(std::size_t r, std::size_t c) { return entries[r * size + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries[r * size + c]; }
    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
};

/// Algebra whose basis is the given list of matrices. Throws
/// LinearlyDependentBasisError or NotClosedError.
Algebra from_matrix_span(const std::vector<SquareMatrix>& generators, std::vector<std::string> labels,
                         std::optional<AlgebraElement> unit_idempotent = std::nullopt,
                         std::string name = {});

/// Grassmann algebra on 2k generators; basis indexed by subsets (bitmask order).
Algebra grassmann(int k);

Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra tensor_product(const Algebra& a, const Algebra& b);

/// Z(A) as a subspace of coordinate space.
Subspace center(const Algebra& a);

struct NilpotencyResult {
    bool nilpotent;
    int index;  // least k with A^k = 0, or 0
};
NilpotencyResult is_nilpotent(const Algebra& a);

/// Span of all products u*v, u in U, v in V (U, V subspaces of A).
Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& v);
/// Span of all commutators [u, v].
Subspace commutator_span(const Algebra& a, const Subspace& u, const Subspace& v);

/// Definition text (JSON): dim, labels, table [[i,j,k,"p/q"]...] (1-based,
/// lexicographic), optional unit.
std::string to_text(const Algebra& a);
Algebra from_text(const std::string& text, std::string name = {});

}  // namespace picalc
