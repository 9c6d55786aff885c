#include "picalc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace picalc {

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation identity_permutation(int n) {
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_permutation(std::span<const int> p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Permutation compose(std::span<const int> p, std::span<const int> q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    Permutation r(p.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
}

Permutation inverse(std::span<const int> p) {
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    return r;
}

int sign(std::span<const int> p) {
    int s = 1;
    for (int len : cycle_type(p))
        if (len % 2 == 0) s = -s;
    return s;
}

std::vector<int> cycle_type(std::span<const int> p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return lens;
}

std::uint64_t lex_rank(std::span<const int> p) {
    const int n = static_cast<int>(p.size());
    std::uint64_t rank = 0;
    std::uint32_t used = 0;
    for (int i = 0; i < n; ++i) {
        const int v = p[static_cast<std::size_t>(i)];
        const int smaller_unused = v - __builtin_popcount(used & ((1u << v) - 1u));
        rank += static_cast<std::uint64_t>(smaller_unused) * factorial(n - 1 - i);
        used |= 1u << v;
    }
    return rank;
}

Permutation lex_unrank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    Permutation p;
    p.reserve(static_cast<std::size_t>(n));
    for (int i = n; i >= 1; --i) {
        const std::uint64_t f = factorial(i - 1);
        const auto idx = static_cast<std::size_t>(rank / f);
        rank %= f;
        p.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    Permutation p = identity_permutation(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Permutation class_representative(std::span<const int> cycle_type) {
    const int n = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
    Permutation p(static_cast<std::size_t>(n));
    int start = 0;
    for (int len : cycle_type) {
        for (int k = 0; k < len; ++k)
            p[static_cast<std::size_t>(start + k)] = start + (k + 1) % len;
        start += len;
    }
    return p;
}

std::string format_permutation(std::span<const int> p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i] + 1;
    os << ']';
    return os.str();
}

std::vector<std::uint32_t> left_action_table(std::span<const int> pi) {
    const int n = static_cast<int>(pi.size());
    const auto total = factorial(n);
    std::vector<std::uint32_t> out(total);
    Permutation sigma = identity_permutation(n);
    std::uint64_t r = 0;
    Permutation image(static_cast<std::size_t>(n));
    do {
        for (int i = 0; i < n; ++i)
            image[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
        out[r++] = static_cast<std::uint32_t>(lex_rank(image));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

}  // namespace picalc
