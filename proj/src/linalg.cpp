#include "picalc/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace picalc {

namespace {

std::size_t leading_index(const RationalVector& v) {
    for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(v[j]) != 0) return j;
    return v.size();
}

}  // namespace

Subspace Subspace::span(std::size_t ambient_dim, std::span<const RationalVector> vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) {
        RationalVector e(ambient_dim);
        e[j] = 1;
        s.rows_.push_back(std::move(e));
        s.pivots_.push_back(j);
        s.support_.push_back({j});
    }
    return s;
}

void Subspace::rebuild_support(std::size_t i) {
    auto& sup = support_[i];
    sup.clear();
    const auto& row = rows_[i];
    for (std::size_t j = 0; j < row.size(); ++j)
        if (sgn(row[j]) != 0) sup.push_back(j);
}

void Subspace::reduce(RationalVector& v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("Subspace::reduce: dimension mismatch");
    Rational c, t;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (sgn(v[p]) == 0) continue;
        c = v[p];
        const auto& row = rows_[i];
        for (std::size_t j : support_[i]) {
            t = c * row[j];
            v[j] -= t;
        }
    }
}

bool Subspace::contains(const RationalVector& v) const {
    RationalVector w = v;
    reduce(w);
    return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) return false;
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool Subspace::insert(RationalVector v) {
    reduce(v);
    if (is_zero(v)) return false;
    insert_reduced(std::move(v));
    return true;
}

void Subspace::insert_reduced(RationalVector v) {
    const std::size_t p = leading_index(v);
    if (p == v.size()) throw std::invalid_argument("Subspace::insert_reduced: zero vector");
    const Rational lead = v[p];
    for (auto& x : v)
        if (sgn(x) != 0) x /= lead;
    std::vector<std::size_t> sup;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(v[j]) != 0) sup.push_back(j);
    Rational c, t;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        auto& row = rows_[i];
        if (sgn(row[p]) == 0) continue;
        c = row[p];
        for (std::size_t j : sup) {
            t = c * v[j];
            row[j] -= t;
        }
        rebuild_support(i);
    }
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    support_.insert(support_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(sup));
}

Subspace Subspace::annihilator() const {
    Subspace out(ambient_dim_);
    std::vector<bool> is_pivot(ambient_dim_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    // Kernel vectors, one per free column; built directly in RREF order
    // would need a re-reduction, so insert them incrementally.
    for (std::size_t f = 0; f < ambient_dim_; ++f) {
        if (is_pivot[f]) continue;
        RationalVector k(ambient_dim_);
        k[f] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (sgn(rows_[i][f]) != 0) k[pivots_[i]] = -rows_[i][f];
        out.insert(std::move(k));
    }
    return out;
}

RationalVector Subspace::coordinates(const RationalVector& v) const {
    RationalVector c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    Subspace s = a;
    for (const auto& row : b.basis()) s.insert(row);
    return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    return sum(a.annihilator(), b.annihilator()).annihilator();
}

std::size_t rank_of(std::span<const RationalVector> vectors) {
    if (vectors.empty()) return 0;
    return Subspace::span(vectors.front().size(), vectors).dim();
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational s = 0, t;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0 || sgn(b[i]) == 0) continue;
        t = a[i] * b[i];
        s += t;
    }
    return s;
}

}  // namespace picalc
