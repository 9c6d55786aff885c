#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "picalc/algebra.hpp"

namespace picalc {

class UnknownAlgebraError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

class InvalidParamsError : public AlgebraError {
public:
    using AlgebraError::AlgebraError;
};

/// How the identity matrix I_m in N_m is read: the full diagonal, or the
/// literal sum e_11 + ... + e_{m-1,m-1}.
enum class UnitReading { full, truncated };

struct CatalogOptions {
    UnitReading nm_unit = UnitReading::full;
};

inline constexpr std::string_view catalog_version = "1";

/// Named algebra. Parametrized families: Nm, Am1, Am1s, UTm take m; UTblock
/// takes block sizes; G2k takes k. Aliases: F, G4, G6, UT2, N4.
Algebra catalog(std::string_view name, const std::vector<int>& params = {}, const CatalogOptions& options = {});

/// Names accepted by catalog(), with a one-line description each.
std::vector<std::pair<std::string, std::string>> catalog_entries();

/// Algebra expression: terms joined by '+' (direct sum) or '*' (tensor
/// product, binds tighter), with parentheses; each atom is a catalog name
/// with optional parameter list, e.g. "G4+A1s", "Nm(4)", "UTblock(1,2)".
Algebra parse_algebra_expression(std::string_view expr, const CatalogOptions& options = {});

/// An existing file path is read as definition text; anything else is parsed
/// as an algebra expression.
Algebra load_algebra(const std::string& spec, const CatalogOptions& options = {});

/// Builds an m x m matrix from a label such as "e23+e45", "e24-e35" or "I3".
SquareMatrix matrix_from_label(std::string_view label, std::size_t m);

}  // namespace picalc
