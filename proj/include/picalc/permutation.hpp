#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace picalc {

/// One-line notation, 0-based: p[i] is the image of i.
using Permutation = std::vector<int>;

std::uint64_t factorial(int n);

Permutation identity_permutation(int n);
bool is_permutation(std::span<const int> p);

/// (p ∘ q)(i) = p(q(i)).
Permutation compose(std::span<const int> p, std::span<const int> q);
Permutation inverse(std::span<const int> p);
int sign(std::span<const int> p);

/// Cycle lengths in weakly decreasing order.
std::vector<int> cycle_type(std::span<const int> p);

/// Position of p in the lexicographic enumeration of S_n.
std::uint64_t lex_rank(std::span<const int> p);
Permutation lex_unrank(int n, std::uint64_t rank);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Canonical representative of a cycle type: cycles on consecutive points,
/// longest first. (3,2) -> (0 1 2)(3 4).
Permutation class_representative(std::span<const int> cycle_type);

/// 1-based one-line notation, e.g. "[2,1,3]".
std::string format_permutation(std::span<const int> p);

/// Dense table of lex ranks for left composition by a fixed permutation:
/// out[r] = lex_rank(pi ∘ lex_unrank(n, r)).
std::vector<std::uint32_t> left_action_table(std::span<const int> pi);

}  // namespace picalc
