#pragma once

// Reference implementations used only by the tests. They share no code with
// the library's evaluation or elimination routines.

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "picalc/algebra.hpp"

namespace oracle {

using Row = std::vector<mpq_class>;

// Plain Gauss-Jordan elimination; returns the reduced nonzero rows.
inline std::vector<Row> echelon(std::vector<Row> m) {
    if (m.empty()) return m;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        const mpq_class inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c] != 0) {
                const mpq_class f = m[i][c];
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
        ++r;
    }
    m.resize(r);
    return m;
}

inline std::size_t rank(std::vector<Row> m) { return echelon(std::move(m)).size(); }

// All permutations of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<mpq_class> product(const picalc::Algebra& a, const std::vector<std::size_t>& idx) {
    // Left-to-right product of basis elements via the structure constants.
    std::vector<mpq_class> v(a.dim());
    v[idx[0]] = 1;
    for (std::size_t s = 1; s < idx.size(); ++s) {
        std::vector<mpq_class> w(a.dim());
        for (const auto& sc : a.table())
            if (sc.j == idx[s] && v[sc.i] != 0) w[sc.k] += v[sc.i] * sc.value;
        v = std::move(w);
    }
    return v;
}

// Constraint rows of P_n ∩ Id(A) (central = false) or P_n ∩ Id^z(A), from
// every tuple of basis elements with no symmetry reduction.
inline std::vector<Row> constraint_rows(const picalc::Algebra& a, int n, bool central) {
    const auto perms = permutations(n);
    const auto table = a.table();
    std::vector<Row> rows;
    std::vector<std::size_t> t(n, 0);
    auto commutator_with = [&](const std::vector<mpq_class>& v, std::size_t b) {
        std::vector<mpq_class> w(a.dim());
        for (const auto& sc : table) {
            if (sc.j == b && v[sc.i] != 0) w[sc.k] += v[sc.i] * sc.value;
            if (sc.i == b && v[sc.j] != 0) w[sc.k] -= v[sc.j] * sc.value;
        }
        return w;
    };
    while (true) {
        std::vector<std::vector<mpq_class>> values;
        for (const auto& p : perms) {
            std::vector<std::size_t> idx(n);
            for (int i = 0; i < n; ++i) idx[i] = t[p[i]];
            values.push_back(product(a, idx));
        }
        if (!central) {
            for (std::size_t k = 0; k < a.dim(); ++k) {
                Row r(perms.size());
                bool nz = false;
                for (std::size_t m = 0; m < perms.size(); ++m) {
                    r[m] = values[m][k];
                    nz = nz || r[m] != 0;
                }
                if (nz) rows.push_back(std::move(r));
            }
        } else {
            for (std::size_t b = 0; b < a.dim(); ++b) {
                std::vector<std::vector<mpq_class>> cv;
                for (const auto& v : values) cv.push_back(commutator_with(v, b));
                for (std::size_t k = 0; k < a.dim(); ++k) {
                    Row r(perms.size());
                    bool nz = false;
                    for (std::size_t m = 0; m < perms.size(); ++m) {
                        r[m] = cv[m][k];
                        nz = nz || r[m] != 0;
                    }
                    if (nz) rows.push_back(std::move(r));
                }
            }
        }
        if (rows.size() > 4 * perms.size()) rows = echelon(std::move(rows));
        int i = n - 1;
        while (i >= 0 && t[i] + 1 == a.dim()) t[i--] = 0;
        if (i < 0) break;
        ++t[i];
    }
    return echelon(std::move(rows));
}

}  // namespace oracle
