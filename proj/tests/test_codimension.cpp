#include <doctest.h>

#include "oracles.hpp"
#include "picalc/catalog.hpp"
#include "picalc/codimension.hpp"
#include "picalc/permutation.hpp"

using namespace picalc;

namespace {

Subspace oracle_constraints(const Algebra& a, int n, bool central) {
    const auto rows = oracle::constraint_rows(a, n, central);
    std::vector<RationalVector> v(rows.begin(), rows.end());
    return Subspace::span(factorial(n), v);
}

MultilinearPolynomial ml(const std::string& text) { return MultilinearPolynomial::from_free(parse_polynomial(text)); }

const std::vector<std::string> small_algebras = {"F",  "C1", "A1",  "A1s", "A2",      "A4",     "A4s", "A5",
                                                 "A6", "UT2", "A7", "A9",  "A1+A1s", "A2+A1", "A4+A5"};

}  // namespace

TEST_CASE("identity spaces agree with brute-force evaluation") {
    for (const auto& name : small_algebras) {
        const Algebra a = parse_algebra_expression(name);
        const int top = a.dim() <= 4 ? 4 : 3;
        for (int n = 1; n <= top; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            CHECK(identity_space(a, n).constraints == oracle_constraints(a, n, false));
            CHECK(central_identity_space(a, n).constraints == oracle_constraints(a, n, true));
        }
    }
}

TEST_CASE("symmetry and block reductions do not change the space") {
    EngineOptions plain;
    plain.use_symmetry = false;
    plain.use_blocks = false;
    for (const auto& name : {"A5", "A2+A1", "A4+A4s", "UT2", "G4"}) {
        const Algebra a = parse_algebra_expression(name);
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            CHECK(identity_space(a, n).constraints == identity_space(a, n, plain).constraints);
            CHECK(central_identity_space(a, n).constraints == central_identity_space(a, n, plain).constraints);
        }
    }
}

TEST_CASE("tuple counts with and without reductions") {
    EngineOptions plain;
    plain.use_symmetry = false;
    plain.use_blocks = false;
    const Algebra a = catalog("A4");
    CHECK(exhaustive_tuple_count(a, 3, plain) == 64);
    CHECK(exhaustive_tuple_count(a, 3) == 20);  // multisets of size 3 from 4
    const Algebra s = parse_algebra_expression("A1+A1s");
    CHECK(exhaustive_tuple_count(s, 2) == 3 + 3);
}

TEST_CASE("classical codimensions") {
    const Algebra ut2 = catalog("UT2");
    const Algebra g4 = catalog("G4");
    for (int n = 1; n <= 5; ++n) {
        const auto r = codimension_report(ut2, n);
        CHECK(r.c_n == (std::size_t{1} << (n - 1)) * (n - 2) + 2);
        CHECK(r.delta_n == 0);
        CHECK(codimension_report(g4, n).c_n == (std::size_t{1} << (n - 1)));
    }
    CHECK(identity_space(catalog("A1"), 4).codimension() == 4);
}

TEST_CASE("randomized spaces are superspaces and deterministic per seed") {
    const Algebra a = catalog("A7");
    const IdentitySpace exact = identity_space(a, 4);
    EngineOptions r;
    r.mode = EvalMode::randomized;
    r.seed = 7;
    r.samples = 6;
    const IdentitySpace rnd = identity_space(a, 4, r);
    CHECK(exact.constraints.contains(rnd.constraints));  // fewer constraints, larger identity space
    CHECK(rnd.dim() >= exact.dim());
    CHECK(identity_space(a, 4, r).constraints == rnd.constraints);
    CHECK(rnd.certificate.to_string() == "randomized(seed=7,samples=6)");
    r.samples = 0;
    CHECK(identity_space(a, 4, r).constraints == exact.constraints);
}

TEST_CASE("sandwich certification") {
    EngineOptions s;
    s.mode = EvalMode::sandwich;
    s.generators = {"A5", {ml("x1 c(x2,x3) x4")}, {}};
    const Algebra a5 = catalog("A5");
    for (int n = 4; n <= 5; ++n) {
        const IdentitySpace sw = identity_space(a5, n, s);
        CHECK(sw.certificate.to_string() == "sandwich(A5)");
        CHECK(sw.constraints == identity_space(a5, n).constraints);
    }
    // [x1,x2]x3 is not an identity of UT2.
    s.generators = {"bad", {ml("c(x1,x2) x3")}, {}};
    CHECK_THROWS_AS(identity_space(catalog("UT2"), 3, s), SandwichGapError);
    // A proper subset of the generators leaves a gap.
    s.generators = {"half", {ml("c(x1,x2,x3)")}, {}};
    CHECK_THROWS_AS(identity_space(catalog("A2"), 4, s), SandwichGapError);
}

TEST_CASE("resource ceiling") {
    EngineOptions o;
    o.max_tuples = 10;
    CHECK_THROWS_AS(identity_space(catalog("A7"), 4, o), ResourceCeilingError);
}

TEST_CASE("identity tests") {
    CHECK(is_identity(ml("c(x1,x2) x3"), catalog("A1")));
    CHECK_FALSE(is_identity(ml("x1 c(x2,x3)"), catalog("A1")));
    CHECK(is_identity(ml("c(x1,x2) c(x3,x4)"), catalog("UT2")));
    CHECK(is_central(ml("c(x1,x2)"), catalog("G4")));
    CHECK_FALSE(is_central(ml("x1"), catalog("G4")));
    const auto basis = basis_modulo_identities(catalog("A2"), 3);
    CHECK(basis.size() == 4);
}

TEST_CASE("direct sum intersection law") {
    // Id(A + B) = Id(A) ∩ Id(B) on pairs of catalog algebras.
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"A1", "A1s"}, {"A2", "A4"},  {"A5", "A6"},  {"UT2", "A2"}, {"A4s", "A1"},
        {"C1", "A5"},  {"A7", "A1s"}, {"A9", "A2"}, {"A6", "A4s"}, {"F", "A9s"}};
    for (const auto& [x, y] : pairs) {
        const Algebra a = catalog(x), b = catalog(y), s = direct_sum(a, b);
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(x);
            CAPTURE(y);
            CAPTURE(n);
            const Subspace ia = identity_space(a, n).space(), ib = identity_space(b, n).space();
            CHECK(identity_space(s, n).space() == intersection(ia, ib));
        }
    }
}

TEST_CASE("codimension report identity") {
    for (const auto& name : small_algebras) {
        const Algebra a = parse_algebra_expression(name);
        for (int n = 1; n <= 4; ++n) {
            const auto r = codimension_report(a, n);
            CHECK(r.c_n == r.c_n_z + r.delta_n);
            CHECK(r.c_n_z <= r.c_n);
        }
    }
}
