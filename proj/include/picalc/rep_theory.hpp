#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "picalc/algebra.hpp"
#include "picalc/codimension.hpp"
#include "picalc/free_algebra.hpp"

namespace picalc {

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly
    /// decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // n
    int length() const { return static_cast<int>(parts_.size()); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;
    /// h_i: height of column i (the conjugate's parts).
    std::vector<int> column_heights() const { return conjugate().parts(); }
    /// Hook length of each cell, row by row.
    std::vector<std::vector<int>> hook_lengths() const;
    /// dim chi_lambda via the hook length formula.
    std::uint64_t dimension() const;

    /// "3,1,1"
    std::string to_string() const;
    /// Parses "3,1,1" or "(3,1,1)".
    static Partition parse(const std::string& text);

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions(int n);

class YoungTableau {
public:
    /// rows[r][c] is the entry (1-based) in row r, column c.
    YoungTableau(Partition shape, std::vector<std::vector<int>> rows);
    static YoungTableau initial(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool is_standard() const;
    /// sigma (0-based) with sigma(initial(cell) - 1) = T(cell) - 1.
    Permutation sigma() const;

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
};

std::vector<YoungTableau> standard_tableaux(const Partition& shape);

/// chi_lambda on the class of cycle type rho (Murnaghan-Nakayama).
std::int64_t mn_character(const Partition& lambda, const Partition& rho);
/// n! / z_rho.
std::uint64_t class_size(const Partition& rho);

enum class CocharVariant { plain, central, proper };
std::string to_string(CocharVariant v);
CocharVariant parse_cochar_variant(const std::string& text);

class UncertifiedSpaceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonIntegerMultiplicityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Trace of each cycle-type class (keyed by the cycle type) on an S_n-module.
using ModuleCharacter = std::map<Partition, Rational>;

/// Character of P_n / (P_n ∩ space) under renaming of variables, read off
/// the constraint basis of the space.
ModuleCharacter quotient_character(const IdentitySpace& space);

/// plain: P_n/(P_n∩Id), central: P_n/(P_n∩Id^z), proper: (P_n∩Id^z)/(P_n∩Id).
/// Randomized spaces are refused unless allow_uncertified is set.
ModuleCharacter module_character(const Algebra& a, int n, CocharVariant variant, const EngineOptions& options = {},
                                 bool allow_uncertified = false);

struct CocharacterDecomposition {
    int n = 0;
    CocharVariant variant = CocharVariant::plain;
    /// Every partition of n in reverse lexicographic order, zeros included.
    std::vector<std::pair<Partition, std::int64_t>> mults;

    std::int64_t colength() const;
    std::int64_t multiplicity(const Partition& lambda) const;
    /// Sum of m_lambda * dim chi_lambda.
    std::uint64_t degree() const;
    /// "chi(5) + 2 chi(4,1)"
    std::string to_string() const;
};

CocharacterDecomposition decompose(const ModuleCharacter& chi, int n, CocharVariant variant);
CocharacterDecomposition cocharacter(const Algebra& a, int n, CocharVariant variant,
                                     const EngineOptions& options = {});
std::int64_t colength(const Algebra& a, int n, CocharVariant variant, const EngineOptions& options = {});

/// f_T: product of St_{h_i}(x_1..x_{h_i}) over the columns, then the letter
/// at position initial(cell) moves to position T(cell).
FreePolynomial highest_weight_vector(const YoungTableau& t);

/// Rank modulo the identity space of the linearized f_T over all standard
/// tableaux T of shape lambda.
std::int64_t hwv_multiplicity(const IdentitySpace& space, const Partition& lambda);
std::int64_t hwv_multiplicity(const Algebra& a, const Partition& lambda, const EngineOptions& options = {});

}  // namespace picalc
