#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "picalc/linalg.hpp"
#include "picalc/permutation.hpp"
#include "picalc/rational.hpp"

namespace picalc {

class PolynomialError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Variables are 0-based internally and printed as x1, x2, ...
using Word = std::vector<int>;

/// Homogeneous polynomial in the free associative algebra: all words share
/// one length.
class FreePolynomial {
public:
    FreePolynomial() = default;
    static FreePolynomial monomial(Word w, Rational c = 1);
    static FreePolynomial constant(Rational c);

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Length of the words; -1 for the zero polynomial.
    int degree() const;
    /// 1 + largest variable index occurring.
    int num_vars() const;

    void add_term(const Word& w, const Rational& c);
    FreePolynomial& operator+=(const FreePolynomial& o);
    FreePolynomial& operator-=(const FreePolynomial& o);
    friend FreePolynomial operator+(FreePolynomial a, const FreePolynomial& b) { return a += b; }
    friend FreePolynomial operator-(FreePolynomial a, const FreePolynomial& b) { return a -= b; }
    friend FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b);
    friend FreePolynomial operator*(const Rational& s, FreePolynomial a);
    friend bool operator==(const FreePolynomial&, const FreePolynomial&) = default;

    /// Degree of each variable in each monomial is the same.
    bool is_multihomogeneous() const;
    /// Every monomial is a permutation of x1..xn.
    bool is_multilinear() const;

private:
    std::map<Word, Rational> terms_;
};

/// Element of P_n: monomial x_{p(1)}...x_{p(n)} keyed by the permutation p
/// (0-based one-line notation).
class MultilinearPolynomial {
public:
    explicit MultilinearPolynomial(int n = 0) : n_(n) {}
    static MultilinearPolynomial from_free(const FreePolynomial& f);
    /// Coordinates indexed by lex_rank.
    static MultilinearPolynomial from_vector(int n, const RationalVector& v);

    int degree() const { return n_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& p, const Rational& c);
    Rational coefficient(const Permutation& p) const;
    RationalVector to_vector() const;
    FreePolynomial to_free() const;

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& o);
    MultilinearPolynomial& operator-=(const MultilinearPolynomial& o);
    friend MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a += b; }
    friend MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a -= b; }
    friend MultilinearPolynomial operator*(const Rational& s, MultilinearPolynomial a);
    friend bool operator==(const MultilinearPolynomial&, const MultilinearPolynomial&) = default;

private:
    int n_;
    std::map<Permutation, Rational> terms_;
};

/// Left-normed [x_{a1}, ..., x_{ak}] with 0-based variable indices.
FreePolynomial commutator(const std::vector<int>& vars);
/// [f, g] = fg - gf.
FreePolynomial commutator(const FreePolynomial& f, const FreePolynomial& g);
MultilinearPolynomial standard_polynomial(int t);

/// Right action on positions: the word w becomes w ∘ sigma.
MultilinearPolynomial place_permute(const MultilinearPolynomial& f, const Permutation& sigma);
FreePolynomial place_permute(const FreePolynomial& f, const Permutation& sigma);
/// Left action on variables: x_i becomes x_{pi(i)}.
MultilinearPolynomial rename_variables(const MultilinearPolynomial& f, const Permutation& pi);

/// Replaces variable i by words[i] (variables of the words are new letters).
FreePolynomial substitute(const FreePolynomial& f, const std::vector<Word>& words);

/// Full polarization without normalization. Variable i of degree d_i is
/// replaced, in every monomial, by d_i consecutive new variables in all d_i!
/// orders; new variables are numbered by old variable, then occurrence.
MultilinearPolynomial full_linearization(const FreePolynomial& f);

/// P_n ∩ <generators>_T as a subspace of Q^{n!}.
Subspace tideal_multilinear_component(const std::vector<MultilinearPolynomial>& generators, int n);
/// P_n ∩ (<tspace_gens>^T + <tideal_gens>_T).
Subspace tspace_multilinear_component(const std::vector<MultilinearPolynomial>& tspace_gens,
                                      const std::vector<MultilinearPolynomial>& tideal_gens, int n);

/// Closes a subspace of Q^{n!} under renaming of variables.
Subspace renaming_closure(const Subspace& s, int n);
/// Inserts v into a renaming-closed subspace and restores closure. Returns
/// false when v was already contained.
bool insert_with_orbit(Subspace& s, int n, const RationalVector& v);

/// Text syntax: "3/2 * x1 x3 x2 - x2 x1 x3", with c(a, b, ...) for
/// left-normed commutators of subexpressions, st(k) for St_k(x1..xk) and
/// parentheses.
FreePolynomial parse_polynomial(std::string_view text);
std::string to_string(const FreePolynomial& f);
std::string to_string(const MultilinearPolynomial& f);

}  // namespace picalc
