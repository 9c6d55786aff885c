#include <functional>

#include <doctest.h>

#include "oracles.hpp"
#include "picalc/free_algebra.hpp"
#include "picalc/permutation.hpp"

using namespace picalc;

namespace {

// Consequences of multilinear generators in P_n, enumerated directly: for
// every arrangement of x1..xn cut into prefix, deg(g) nonempty blocks and
// suffix, the polynomial prefix * g(blocks) * suffix.
Subspace brute_force_tideal(const std::vector<MultilinearPolynomial>& gens, int n) {
    std::vector<oracle::Row> rows;
    const auto perms = oracle::permutations(n);
    for (const auto& g : gens) {
        const int d = g.degree();
        if (d > n) continue;
        for (const auto& arrangement : perms) {
            // cut points 0 <= c0 < c1 < ... < cd <= n: prefix [0,c0), blocks, suffix [cd,n)
            std::vector<int> cut(d + 1);
            std::function<void(int, int)> rec = [&](int i, int from) {
                if (i == d + 1) {
                    oracle::Row r(perms.size());
                    for (const auto& [p, c] : g.terms()) {
                        std::vector<int> word(arrangement.begin(), arrangement.begin() + cut[0]);
                        for (int pos = 0; pos < d; ++pos) {
                            const int b = p[pos];
                            word.insert(word.end(), arrangement.begin() + cut[b], arrangement.begin() + cut[b + 1]);
                        }
                        word.insert(word.end(), arrangement.begin() + cut[d], arrangement.end());
                        r[lex_rank(word)] += c;
                    }
                    rows.push_back(std::move(r));
                    return;
                }
                for (int c = from; c <= n; ++c) {
                    if (i > 0 && c == cut[i - 1]) continue;  // blocks are nonempty
                    cut[i] = c;
                    rec(i + 1, c);
                }
            };
            rec(0, 0);
        }
        rows = oracle::echelon(std::move(rows));
    }
    std::vector<RationalVector> basis(rows.begin(), rows.end());
    return Subspace::span(factorial(n), basis);
}

MultilinearPolynomial ml(const std::string& text) { return MultilinearPolynomial::from_free(parse_polynomial(text)); }

}  // namespace

TEST_CASE("parsing and printing") {
    const FreePolynomial f = parse_polynomial("3/2 * x1 x3 x2 - x2 x1 x3");
    CHECK(to_string(f) == "3/2 * x1 x3 x2 - x2 x1 x3");
    CHECK(to_string(parse_polynomial("c(x1,x2)")) == "x1 x2 - x2 x1");
    CHECK(parse_polynomial("c(x1,x2,x3)") == commutator(commutator(std::vector<int>{0, 1}),
                                                        FreePolynomial::monomial({2})));
    CHECK(to_string(parse_polynomial("x1 - x1")) == "0");
    CHECK_THROWS_AS(parse_polynomial("x1 +"), PolynomialError);
    CHECK_THROWS_AS(MultilinearPolynomial::from_free(parse_polynomial("x1 x1")), PolynomialError);
}

TEST_CASE("standard polynomial has signed permutation terms") {
    const auto st = standard_polynomial(3);
    CHECK(st.terms().size() == 6);
    for (const auto& [p, c] : st.terms()) CHECK(c == sign(p));
    CHECK(MultilinearPolynomial::from_free(parse_polynomial("st(2)")) == ml("c(x1,x2)"));
}

TEST_CASE("full linearization") {
    const auto lin = full_linearization(parse_polynomial("x1 x1"));
    CHECK(lin == ml("x1 x2 + x2 x1"));
    // x1^2 x2 linearizes to sum over orders of the two copies of x1.
    CHECK(full_linearization(parse_polynomial("x1 x1 x2")) == ml("x1 x2 x3 + x2 x1 x3"));
}

TEST_CASE("renaming and place permutation") {
    const auto f = ml("x1 x2 x3");
    // rename x1 -> x2, x2 -> x3, x3 -> x1
    CHECK(rename_variables(f, {1, 2, 0}) == ml("x2 x3 x1"));
    CHECK(place_permute(ml("x2 x3 x1"), {2, 0, 1}) == ml("x1 x2 x3"));
    // renaming preserves multilinearity and is a group action
    const auto g = ml("c(x1,x2) x3 x4");
    CHECK(rename_variables(rename_variables(g, {1, 0, 2, 3}), {1, 0, 2, 3}) == g);
}

TEST_CASE("T-ideal components agree with direct enumeration") {
    const std::vector<std::vector<std::string>> sets = {
        {"c(x1,x2)"}, {"c(x1,x2) x3"}, {"x1 c(x2,x3)"}, {"c(x1,x2,x3)"}, {"c(x1,x2) c(x3,x4)"}, {"x1 c(x2,x3) x4"},
        {"c(x1,x2,x3)", "c(x1,x2) c(x3,x4)"}};
    for (const auto& texts : sets) {
        std::vector<MultilinearPolynomial> gens;
        for (const auto& t : texts) gens.push_back(ml(t));
        for (int n = 1; n <= 5; ++n) {
            CAPTURE(texts[0]);
            CAPTURE(n);
            CHECK(tideal_multilinear_component(gens, n) == brute_force_tideal(gens, n));
        }
    }
}

TEST_CASE("known codimensions of generated T-ideals") {
    // <[x1,x2]>: commutative quotient, codimension 1.
    for (int n = 1; n <= 5; ++n) {
        const Subspace s = tideal_multilinear_component({ml("c(x1,x2)")}, n);
        CHECK(factorial(n) - s.dim() == 1);
    }
    // <[x1,x2,x3]>: Grassmann, codimension 2^{n-1}.
    for (int n = 1; n <= 5; ++n) {
        const Subspace s = tideal_multilinear_component({ml("c(x1,x2,x3)")}, n);
        CHECK(factorial(n) - s.dim() == (std::uint64_t{1} << (n - 1)));
    }
}

TEST_CASE("renaming closure is idempotent and contains the input") {
    const auto v = ml("x1 x2 x3 - x3 x1 x2").to_vector();
    const Subspace s = Subspace::span(6, std::vector<RationalVector>{v});
    const Subspace c = renaming_closure(s, 3);
    CHECK(c.contains(v));
    CHECK(renaming_closure(c, 3) == c);
    Subspace incremental(6);
    insert_with_orbit(incremental, 3, v);
    CHECK(incremental == c);
    for (const auto& pi : all_permutations(3)) CHECK(c.contains(rename_variables(ml("x1 x2 x3 - x3 x1 x2"), pi).to_vector()));
}

TEST_CASE("T-space component contains the generators and the T-ideal") {
    const auto ts = tspace_multilinear_component({ml("c(x1,x2)")}, {ml("c(x1,x2,x3)")}, 4);
    CHECK(ts.contains(tideal_multilinear_component({ml("c(x1,x2,x3)")}, 4)));
    CHECK(ts.contains(ml("c(x1,x2) c(x3,x4)").to_vector()));
}
