#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picalc/algebra.hpp"
#include "picalc/codimension.hpp"
#include "picalc/free_algebra.hpp"

namespace picalc {

class UnknownLemmaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Generators of Id (and of Id^z where known) for named catalog algebras and
/// sums, used as sandwich lower bounds when exhaustive evaluation is over the
/// ceiling. Looked up by the whitespace-free algebra expression.
std::optional<GeneratorSet> known_generators(const std::string& name);

/// Exhaustive within the ceiling, otherwise sandwich with options.generators
/// or the registered generators; randomized only when options.mode asks for
/// it. Throws ResourceCeilingError when no exact route exists.
IdentitySpace certified_identity_space(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options = {});

struct TableRow {
    std::string lemma;
    std::string algebra;
    std::string quantity;  // c_n, c_n_z, delta_n, l_n, l_n_z, l_n_delta, chi_n, chi_n_z, chi_n_delta, Id
    int n = 0;
    std::string computed;
    std::string claimed;
    std::string status;  // MATCH, MISMATCH, N/A (claim stated only for other n), ERROR
    std::string certificate;
};

struct Table {
    std::string lemma_id;
    std::string description;
    std::vector<TableRow> rows;
};

struct LemmaInfo {
    std::string id;
    std::string description;
};
std::vector<LemmaInfo> lemma_ids();

/// Recomputes every claim of the lemma for n in [n_min, n_max]. Rows whose
/// claim does not apply at n are kept with status N/A. Throws
/// UnknownLemmaError.
Table run_table(const std::string& lemma_id, int n_min, int n_max, const EngineOptions& options = {});

struct TidealVerdict {
    int n = 0;
    bool certified_equal = false;
    std::size_t lower = 0, upper = 0;  // identity-space dimensions of the two bounds
    std::size_t codimension = 0;       // c_n when certified
    std::string detail;
    Certificate certificate;
};

/// Sandwich check of P_n ∩ Id(A) = P_n ∩ <generators>_T for each n.
std::vector<TidealVerdict> verify_tideal(const Algebra& a, const std::vector<MultilinearPolynomial>& generators,
                                         int n_min, int n_max, const EngineOptions& options = {},
                                         const std::string& generators_id = "user");

struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 1;
    std::string mode;
    std::string catalog_version;
    std::uint64_t max_tuples = default_max_tuples;
    /// "# key: value" lines.
    std::string to_comment_lines() const;
};

std::string to_csv(const Table& t);
std::string to_json(const Table& t, const RunManifest& m);

}  // namespace picalc
