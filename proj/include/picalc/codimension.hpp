#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picalc/algebra.hpp"
#include "picalc/free_algebra.hpp"
#include "picalc/linalg.hpp"

namespace picalc {

enum class IdentityKind { plain, central };
enum class EvalMode { exhaustive, randomized, sandwich };

std::string to_string(IdentityKind kind);
std::string to_string(EvalMode mode);
EvalMode parse_eval_mode(const std::string& text);

struct Certificate {
    EvalMode kind = EvalMode::exhaustive;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::string generators_id;

    bool exact() const { return kind != EvalMode::randomized; }
    /// "exhaustive", "randomized(seed=7,samples=480)", "sandwich(A10)".
    std::string to_string() const;
};

/// Generators of a T-ideal (and, for central spaces, of a T-space added to
/// it) used as the lower bound of a sandwich certificate.
struct GeneratorSet {
    std::string id;
    std::vector<MultilinearPolynomial> tideal;
    std::vector<MultilinearPolynomial> tspace;
};

inline constexpr std::uint64_t default_max_tuples = 2'000'000;

struct EngineOptions {
    EvalMode mode = EvalMode::exhaustive;
    std::uint64_t seed = 1;
    /// Random tuples in randomized/sandwich mode; 0 means max(4 n!, 256).
    std::size_t samples = 0;
    /// Ceiling on tuple evaluations in exhaustive mode.
    std::uint64_t max_tuples = default_max_tuples;
    /// Evaluate only sorted tuples and close constraints under renaming.
    bool use_symmetry = true;
    /// Skip tuples that mix direct-sum blocks.
    bool use_blocks = true;
    GeneratorSet generators;
};

class ResourceCeilingError : public std::runtime_error {
public:
    ResourceCeilingError(std::uint64_t tuples, std::uint64_t ceiling);
    std::uint64_t tuples, ceiling;
};

class SandwichGapError : public std::runtime_error {
public:
    SandwichGapError(std::size_t lower, std::size_t upper, const std::string& detail);
    std::size_t lower, upper;  // dimensions of the two bounds
};

/// P_n ∩ Id(A) or P_n ∩ Id^z(A), stored through its annihilator: the span R
/// of all evaluation constraints, so that f lies in the space iff
/// <r, f> = 0 for every r in R, and c_n = dim R.
struct IdentitySpace {
    int n = 0;
    IdentityKind kind = IdentityKind::plain;
    Certificate certificate;
    Subspace constraints;

    std::size_t codimension() const { return constraints.dim(); }
    std::size_t dim() const { return constraints.ambient_dim() - constraints.dim(); }
    bool contains(const RationalVector& f) const;
    bool contains(const MultilinearPolynomial& f) const { return contains(f.to_vector()); }
    /// The identity space itself as a subspace of Q^{n!}.
    Subspace space() const { return constraints.annihilator(); }
};

/// Number of tuple evaluations exhaustive mode would perform.
std::uint64_t exhaustive_tuple_count(const Algebra& a, int n, const EngineOptions& options = {});

/// Streams the distinct nonzero evaluation constraints of A in degree n to
/// `sink`, which returns false to stop early. Exhaustive mode covers every
/// tuple up to renaming of variables (all tuples without symmetry);
/// randomized mode uses options.samples random tuples. Returns the number
/// of tuples evaluated.
std::uint64_t for_each_constraint(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options,
                                  const std::function<bool(const RationalVector&)>& sink);

IdentitySpace identity_space(const Algebra& a, int n, const EngineOptions& options = {});
IdentitySpace central_identity_space(const Algebra& a, int n, const EngineOptions& options = {});
IdentitySpace compute_identity_space(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options = {});

struct CodimensionReport {
    int n = 0;
    std::size_t c_n = 0, c_n_z = 0, delta_n = 0;
    Certificate plain_certificate, central_certificate;
};

/// Plain space in the requested mode; in sandwich mode the central space is
/// sandwich-certified when T-space generators are supplied and computed
/// exhaustively otherwise.
CodimensionReport codimension_report(const Algebra& a, int n, const EngineOptions& options = {});

/// Exhaustive tests (cached per algebra and degree).
bool is_identity(const MultilinearPolynomial& f, const Algebra& a);
bool is_central(const MultilinearPolynomial& f, const Algebra& a);

/// Monomials, chosen greedily in lexicographic order, whose residues form a
/// basis of P_n modulo the identity space.
std::vector<MultilinearPolynomial> basis_modulo_identities(const IdentitySpace& s);
std::vector<MultilinearPolynomial> basis_modulo_identities(const Algebra& a, int n);

/// Exhaustive identity space, memoized on the algebra's definition text.
const IdentitySpace& cached_identity_space(const Algebra& a, int n, IdentityKind kind,
                                           const EngineOptions& options = {});

}  // namespace picalc
