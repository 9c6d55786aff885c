#include <doctest.h>

#include "picalc/catalog.hpp"
#include "picalc/rep_theory.hpp"
#include "picalc/structure.hpp"

using namespace picalc;

namespace {

// Span of the named basis elements of a catalog algebra.
Subspace span_of(const Algebra& a, const std::vector<std::string>& labels) {
    Subspace s(a.dim());
    for (const auto& l : labels) {
        const auto& all = a.labels();
        const auto it = std::find(all.begin(), all.end(), l);
        REQUIRE(it != all.end());
        s.insert(a.basis(static_cast<std::size_t>(it - all.begin())).coords);
    }
    return s;
}

void check_peirce(const std::string& name, const std::vector<std::string>& j11, const std::vector<std::string>& j10,
                  const std::vector<std::string>& j01, const std::vector<std::string>& j00) {
    CAPTURE(name);
    const Algebra a = catalog(name);
    const PeirceDecomposition p = peirce(a);
    CHECK(p.j11 == span_of(a, j11));
    CHECK(p.j10 == span_of(a, j10));
    CHECK(p.j01 == span_of(a, j01));
    CHECK(p.j00 == span_of(a, j00));
}

}  // namespace

TEST_CASE("Jacobson radical") {
    const Algebra a4 = catalog("A4");
    CHECK(jacobson_radical(a4) == span_of(a4, {"e12", "e13", "e23"}));
    CHECK(jacobson_radical(catalog("F")).dim() == 0);
    CHECK(jacobson_radical(catalog("C1")).dim() == 0);
    const Algebra n4 = catalog("Nm", {4});
    CHECK(jacobson_radical(catalog("A7")).dim() == 6);
    CHECK(jacobson_radical(n4).dim() == n4.dim() - 1);
    // A purely nilpotent algebra is its own radical.
    const Algebra j = from_matrix_span({matrix_from_label("e12", 3), matrix_from_label("e13", 3),
                                        matrix_from_label("e23", 3)},
                                       {"e12", "e13", "e23"});
    CHECK(jacobson_radical(j).dim() == 3);
    // Grassmann: the ideal generated by the generators.
    CHECK(jacobson_radical(catalog("G4")).dim() == 15);
}

TEST_CASE("Peirce decompositions of catalog algebras") {
    check_peirce("A2", {"e12", "e13", "e23"}, {}, {}, {});
    check_peirce("A4", {}, {"e12", "e13"}, {}, {"e23"});
    check_peirce("A4s", {}, {}, {"e13", "e23"}, {"e12"});
    check_peirce("A5", {}, {"e23"}, {"e12"}, {"e13"});
    check_peirce("A6", {"e13"}, {"e12"}, {"e23"}, {});
    check_peirce("A9", {}, {"e12", "e13", "e14"}, {}, {"e23+e34", "e24"});
}

TEST_CASE("Peirce invariants on the catalog") {
    for (const auto& name : {"A1", "A1s", "A2", "A4", "A4s", "A5", "A6", "A7", "A8", "A8s", "A9", "A9s", "A10",
                             "A10s", "UT2", "N4", "G4"}) {
        CAPTURE(name);
        const Algebra a = catalog(name);
        const auto p = peirce(a);
        CHECK(p.j11.dim() + p.j10.dim() + p.j01.dim() + p.j00.dim() == p.radical.dim());
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                for (int r = 0; r < 2; ++r)
                    for (int s = 0; s < 2; ++s) {
                        const Subspace prod = product_span(a, p.component(i, k), p.component(r, s));
                        if (k != r) CHECK(prod.dim() == 0);
                        else CHECK(p.component(i, s).contains(prod));
                    }
    }
}

TEST_CASE("Peirce rejects non-idempotents") {
    const Algebra a = catalog("A4");
    CHECK_THROWS_AS(peirce(a, a.basis(1)), NotIdempotentError);
    auto twice = a.basis(0);
    twice = twice + twice;
    CHECK_THROWS_AS(peirce(a, twice), NotIdempotentError);
}

TEST_CASE("radical predicates realize the lemma hypotheses") {
    struct Case {
        std::string algebra, predicate;
    };
    const std::vector<Case> cases = {{"A1", "J10"},         {"A1s", "J01"},        {"A2", "[J11,J11]"},
                                     {"A4", "J10J00"},      {"A4s", "J00J01"},     {"A5", "J01J10"},
                                     {"A6", "J10J01"}};
    for (const auto& c : cases) {
        CAPTURE(c.algebra);
        const Algebra a = catalog(c.algebra);
        const auto preds = radical_predicates(a, peirce(a));
        CHECK(find_predicate(preds, c.predicate).nonzero());
    }
    const Algebra a5 = catalog("A5");
    const auto p5 = radical_predicates(a5, peirce(a5));
    CHECK_FALSE(find_predicate(p5, "J10J00").nonzero());
    CHECK_FALSE(find_predicate(p5, "J00J01").nonzero());
    CHECK(find_predicate(p5, "J01J10").dim == 1);
    const Algebra a2 = catalog("A2");
    CHECK_FALSE(find_predicate(radical_predicates(a2, peirce(a2)), "[J11,J11,J11]").nonzero());
    CHECK_THROWS_AS(find_predicate(p5, "nope"), std::out_of_range);
}

TEST_CASE("variety membership") {
    const auto yes = variety_contains(catalog("UT2"), catalog("A1"), 3);
    CHECK(yes.answer == VarietyAnswer::yes);
    CHECK(yes.degree == 3);

    const auto no = variety_contains(catalog("A1"), catalog("UT2"), 4);
    REQUIRE(no.answer == VarietyAnswer::no);
    CHECK(no.degree == 3);
    REQUIRE(no.witness);
    CHECK(is_identity(*no.witness, catalog("A1")));
    CHECK_FALSE(is_identity(*no.witness, catalog("UT2")));

    const auto self = variety_contains(catalog("A7"), catalog("A7"), 4);
    CHECK(self.answer == VarietyAnswer::yes);
}

TEST_CASE("witnesses persist as the degree bound grows") {
    const auto first = variety_contains(catalog("A4"), catalog("A5"), 4);
    REQUIRE(first.answer == VarietyAnswer::no);
    for (int n = 5; n <= 6; ++n) {
        const auto r = variety_contains(catalog("A4"), catalog("A5"), n);
        CHECK(r.answer == VarietyAnswer::no);
        CHECK(r.degree == first.degree);
    }
}

TEST_CASE("exclusion sets are well formed") {
    const auto& sets = exclusion_sets();
    CHECK(sets.size() == 10);
    for (const auto& [name, members] : sets)
        for (const auto& m : members) CHECK_NOTHROW(parse_algebra_expression(m));
    for (auto t : {ClassificationTarget::colength_le6, ClassificationTarget::central_colength_le2,
                   ClassificationTarget::colength_eq7})
        for (const auto& cls : target_classes(t))
            if (cls != "N") CHECK_NOTHROW(parse_algebra_expression(cls.substr(0, cls.size() - 2)));
    CHECK(parse_classification_target("lz2") == ClassificationTarget::central_colength_le2);
    CHECK_THROWS_AS(parse_classification_target("l9"), std::invalid_argument);
}

TEST_CASE("classification examples") {
    const Algebra b = parse_algebra_expression("A1+A2");
    const auto in = classify(b, ClassificationTarget::colength_le6, 5);
    CHECK(in.verdict == "inside");
    CHECK(std::find(in.matching_classes.begin(), in.matching_classes.end(), "A1+A2+N") != in.matching_classes.end());
    CHECK(colength(b, 5, CocharVariant::plain) == 4);

    const auto out = classify(catalog("A7"), ClassificationTarget::colength_le6, 5);
    CHECK(out.verdict == "outside");
    CHECK(std::find(out.not_excluded.begin(), out.not_excluded.end(), "A7") != out.not_excluded.end());

    const auto seven = classify(catalog("A7"), ClassificationTarget::colength_eq7, 5);
    CHECK(seven.verdict == "inside");
    CHECK(seven.matching_classes == std::vector<std::string>{"A7+N"});

    const auto central = classify(catalog("A2"), ClassificationTarget::central_colength_le2, 4);
    CHECK(central.verdict == "inside");
    CHECK(std::find(central.matching_classes.begin(), central.matching_classes.end(), "A2+N") !=
          central.matching_classes.end());
}
