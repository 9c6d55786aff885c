#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "picalc/algebra.hpp"
#include "picalc/codimension.hpp"
#include "picalc/free_algebra.hpp"
#include "picalc/linalg.hpp"

namespace picalc {

class RadicalNotNilpotentError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class NotIdempotentError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// J(A) as the kernel of (x, y) -> tr L_{xy} on the unitization of A.
/// Throws RadicalNotNilpotentError unless the result is a nilpotent
/// two-sided ideal.
Subspace jacobson_radical(const Algebra& a);

struct PeirceDecomposition {
    AlgebraElement idempotent;
    Subspace radical, j11, j10, j01, j00;

    const Subspace& component(int left, int right) const;
};

/// Components of J(A) by the left and right action of u. Throws
/// NotIdempotentError when u*u != u or u lies in J(A).
PeirceDecomposition peirce(const Algebra& a, const AlgebraElement& u);
/// Same with the algebra's unit idempotent.
PeirceDecomposition peirce(const Algebra& a);

struct PredicateResult {
    std::string name;
    std::size_t dim = 0;  // dimension of the spanned subspace
    bool nonzero() const { return dim != 0; }
};

/// Products of Peirce components, each as the span of products of basis
/// elements: J10, J01, [J11,J11], [J11,J11,J11], J10J00, J00J01, J01J10,
/// J10J01, J10J00^2, J00^2J01, [J11,J11][J11,J11]J10,
/// J01[J11,J11][J11,J11], J10{J00,J00}, {J00,J00}J01, where {b,c} = bc+cb.
std::vector<PredicateResult> radical_predicates(const Algebra& a, const PeirceDecomposition& p);
/// Looks a predicate up by name; throws std::out_of_range when absent.
const PredicateResult& find_predicate(const std::vector<PredicateResult>& preds, const std::string& name);

enum class VarietyAnswer { yes, no, undecided };
std::string to_string(VarietyAnswer v);

struct DegreeCheck {
    int n = 0;
    VarietyAnswer answer = VarietyAnswer::yes;
    Certificate a_certificate;  // how P_n ∩ Id(A) was obtained
    Certificate q_certificate;  // how Q's evaluations were covered
};

/// Degree-bounded evidence for Q ∈ var(A).
struct VarietyResult {
    VarietyAnswer answer = VarietyAnswer::yes;
    /// Witness degree for "no", the bound N otherwise.
    int degree = 0;
    /// For "no": an identity of A in P_degree that fails on Q.
    std::optional<MultilinearPolynomial> witness;
    std::vector<DegreeCheck> checks;
};

/// For n = 1..max_n compares P_n ∩ Id(A) with P_n ∩ Id(Q). Id(A) must be
/// exact (exhaustive, or sandwich with registered generators); Q is
/// evaluated exhaustively within the ceiling and on random tuples beyond
/// it. "no" is unconditional; "yes" means containment held through max_n
/// with Q covered exactly; "undecided" otherwise.
VarietyResult variety_contains(const Algebra& a, const Algebra& q, int max_n, const EngineOptions& options = {});

enum class ClassificationTarget { colength_le6, colength_eq7, central_colength_le2 };
std::string to_string(ClassificationTarget t);
/// Accepts "l6", "l7", "lz2".
ClassificationTarget parse_classification_target(const std::string& text);

struct ExclusionResult {
    std::string algebra;  // catalog expression
    VarietyResult result;
    /// "excluded" (a witness shows Q ∉ var(A)), "contained" or "undecided".
    std::string status() const;
};

struct ClassificationReport {
    ClassificationTarget target = ClassificationTarget::colength_le6;
    int certificate_degree = 0;
    std::vector<ExclusionResult> results;
    /// "inside" or "outside".
    std::string verdict;
    /// Candidate classes of the target when inside.
    std::vector<std::string> candidate_classes;
    /// Candidates whose identity space equals that of A in the top degree.
    std::vector<std::string> matching_classes;
    /// For "outside": the members of the set that were not excluded.
    std::vector<std::string> not_excluded;
};

/// colength_le6 and central_colength_le2: "inside" iff every member of the
/// exclusion set is excluded by a witness up to degree N. colength_eq7:
/// "inside" iff some B in the candidate set lies in var(A) through degree N
/// and P_N ∩ Id(A) = P_N ∩ Id(B). Never claims PI-equivalence.
ClassificationReport classify(const Algebra& a, ClassificationTarget target, int max_n,
                              const EngineOptions& options = {});

/// Named sets of catalog expressions ("I1".."I7", "T1", "R", "B").
const std::map<std::string, std::vector<std::string>>& exclusion_sets();
/// Union of the sets excluded (or, for colength_eq7, searched) by a target,
/// in order of first appearance.
std::vector<std::string> target_set(ClassificationTarget t);
std::vector<std::string> target_classes(ClassificationTarget t);

}  // namespace picalc
