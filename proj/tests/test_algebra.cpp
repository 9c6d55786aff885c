#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "picalc/algebra.hpp"
#include "picalc/catalog.hpp"
#include "picalc/linalg.hpp"

using namespace picalc;

namespace {

std::vector<RationalVector> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::vector<RationalVector> m(rows, RationalVector(cols));
    for (auto& r : m)
        for (auto& x : r) {
            const int v = static_cast<int>(rng() % 7) - 3;
            x = (rng() % 3 == 0) ? Rational(0) : Rational(v) / (1 + static_cast<int>(rng() % 3));
        }
    return m;
}

}  // namespace

TEST_CASE("subspace rank agrees with reference elimination") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        const auto m = random_matrix(rng, rows, cols);
        const Subspace s = Subspace::span(cols, m);
        CHECK(s.dim() == oracle::rank(m));
        CHECK(rank_of(m) == s.dim());
        for (const auto& v : m) CHECK(s.contains(v));
        // Reduced row echelon: pivot columns are unit vectors across the basis.
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.dim(); ++j) CHECK(s.basis()[j][s.pivots()[i]] == (i == j ? 1 : 0));
    }
}

TEST_CASE("annihilator, sum and intersection dimensions") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 2 + rng() % 6;
        const Subspace a = Subspace::span(d, random_matrix(rng, 1 + rng() % d, d));
        const Subspace b = Subspace::span(d, random_matrix(rng, 1 + rng() % d, d));
        const Subspace ann = a.annihilator();
        CHECK(ann.dim() + a.dim() == d);
        for (const auto& x : ann.basis())
            for (const auto& y : a.basis()) CHECK(dot(x, y) == 0);
        const Subspace s = sum(a, b), i = intersection(a, b);
        CHECK(i.dim() + s.dim() == a.dim() + b.dim());
        CHECK(a.contains(i));
        CHECK(b.contains(i));
        CHECK(s.contains(a));
    }
}

TEST_CASE("insert reports containment and coordinates reconstruct vectors") {
    Subspace s(3);
    CHECK(s.insert({1, 2, 3}));
    CHECK_FALSE(s.insert({2, 4, 6}));
    CHECK(s.insert({0, 1, 1}));
    const RationalVector v{3, 7, 10};
    REQUIRE(s.contains(v));
    const RationalVector c = s.coordinates(v);
    RationalVector back(3);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < 3; ++j) back[j] += c[i] * s.basis()[i][j];
    CHECK(back == v);
}

TEST_CASE("non-associative tables are rejected") {
    // b0 b0 = b1, b0 b1 = 0, b1 b0 = b0: (b0 b0) b0 = b0 but b0 (b0 b0) = 0.
    CHECK_THROWS_AS(Algebra(2, {"a", "b"}, {{0, 0, 1, 1}, {1, 0, 0, 1}}), NotAssociativeError);
}

TEST_CASE("matrix spans detect closure and dependence") {
    const SquareMatrix e12 = matrix_from_label("e12", 2), e21 = matrix_from_label("e21", 2);
    CHECK_THROWS_AS(from_matrix_span({e12, e21}, {"e12", "e21"}), NotClosedError);
    CHECK_THROWS_AS(from_matrix_span({e12, e12}, {"e12", "e12"}), LinearlyDependentBasisError);
    const SquareMatrix m = matrix_from_label("e24-e35", 5);
    CHECK(m.at(1, 3) == 1);
    CHECK(m.at(2, 4) == -1);
}

TEST_CASE("Grassmann generators anticommute and square to zero") {
    const Algebra g = grassmann(2);
    CHECK(g.dim() == 16);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const auto ei = g.basis(std::size_t{1} << i), ej = g.basis(std::size_t{1} << j);
            CHECK((g.multiply(ei, ej) + g.multiply(ej, ei)).is_zero());
        }
    CHECK(center(g).dim() == 8);  // even part
}

TEST_CASE("catalog entries build and carry idempotent units") {
    const std::vector<std::string> names = {"F",   "C1",  "A1",  "A1s", "A2",   "A4",  "A4s", "A5",  "A6",
                                            "A7",  "A8",  "A8s", "A9",  "A9s",  "A10", "A10s", "UT2", "N4",
                                            "G4",  "G4bar", "G4bars"};
    for (const auto& n : names) {
        CAPTURE(n);
        const Algebra a = catalog(n);
        if (a.unit_idempotent()) {
            const auto& u = *a.unit_idempotent();
            CHECK(a.multiply(u, u) == u);
        }
    }
    CHECK(catalog("A10").dim() == 8);
    CHECK(catalog("G4bar").dim() == 32);
    CHECK(catalog("Nm", {5}).dim() == 8);
    CHECK(catalog("UTblock", {1, 2}).dim() == 7);
    CHECK_THROWS_AS(catalog("nope"), UnknownAlgebraError);
    CHECK_THROWS_AS(catalog("G2k", {7}), InvalidParamsError);
}

TEST_CASE("direct sums split into blocks and centers add") {
    const Algebra a = parse_algebra_expression("A2 + A1s");
    CHECK(a.dim() == 6);
    CHECK(a.blocks().size() == 2);
    CHECK(center(a).dim() == center(catalog("A2")).dim() + center(catalog("A1s")).dim());
    const Algebra t = parse_algebra_expression("G4*A1");
    CHECK(t.dim() == 32);
    CHECK(center(catalog("UT2")).dim() == 1);
}

TEST_CASE("definition text round trip") {
    const Algebra a = catalog("A6");
    const Algebra b = from_text(to_text(a), "copy");
    CHECK(to_text(b) == to_text(a));
    CHECK(b.unit_idempotent() == a.unit_idempotent());
}

TEST_CASE("nilpotency index") {
    CHECK(is_nilpotent(catalog("A2")).nilpotent == false);
    const Algebra j = from_matrix_span({matrix_from_label("e12", 3), matrix_from_label("e13", 3),
                                        matrix_from_label("e23", 3)},
                                       {"e12", "e13", "e23"});
    const auto r = is_nilpotent(j);
    CHECK(r.nilpotent);
    CHECK(r.index == 3);
}
