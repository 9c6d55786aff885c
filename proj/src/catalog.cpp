#include "picalc/catalog.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace picalc {

namespace {

SquareMatrix unit_matrix(std::size_t m, std::size_t r, std::size_t c) {
    SquareMatrix e(m);
    e.at(r, c) = 1;
    return e;
}

SquareMatrix shift_power(std::size_t m, int power) {
    SquareMatrix e(m);
    for (std::size_t i = 0; i + static_cast<std::size_t>(power) < m; ++i) e.at(i, i + static_cast<std::size_t>(power)) = 1;
    return e;
}

std::string e_label(std::size_t i, std::size_t j) { return "e" + std::to_string(i) + std::to_string(j); }

Algebra span_algebra(std::string name, std::size_t m, const std::vector<std::string>& labels,
                     const std::vector<std::string>& unit_terms) {
    std::vector<SquareMatrix> mats;
    for (const auto& l : labels) mats.push_back(matrix_from_label(l, m));
    RationalVector unit(labels.size());
    for (const auto& u : unit_terms) {
        bool found = false;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == u) {
                unit[i] = 1;
                found = true;
            }
        if (!found) throw AlgebraError("unit term " + u + " not in basis of " + name);
    }
    return from_matrix_span(mats, labels, AlgebraElement(std::move(unit)), std::move(name));
}

void require_params(std::string_view name, const std::vector<int>& params, std::size_t count) {
    if (params.size() != count)
        throw InvalidParamsError(std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
}

Algebra nm_algebra(int m, UnitReading reading) {
    if (m < 3 || m > 9) throw InvalidParamsError("Nm requires 3 <= m <= 9");
    const auto mm = static_cast<std::size_t>(m);
    std::vector<SquareMatrix> mats;
    std::vector<std::string> labels;
    SquareMatrix unit(mm);
    const std::size_t diag = reading == UnitReading::full ? mm : mm - 1;
    for (std::size_t i = 0; i < diag; ++i) unit.at(i, i) = 1;
    mats.push_back(unit);
    labels.push_back(reading == UnitReading::full ? "I" + std::to_string(m) : "I" + std::to_string(m) + "'");
    for (int p = 1; p <= m - 2; ++p) {
        mats.push_back(shift_power(mm, p));
        labels.push_back(p == 1 ? "E" : "E^" + std::to_string(p));
    }
    for (std::size_t j = 2; j <= mm; ++j) {
        mats.push_back(unit_matrix(mm, 0, j - 1));
        labels.push_back(e_label(1, j));
    }
    return from_matrix_span(mats, labels, AlgebraElement::basis(mats.size(), 0), "Nm(" + std::to_string(m) + ")");
}

Algebra am1_algebra(int m, bool starred) {
    if (m < 2 || m > 9) throw InvalidParamsError("Am1 requires 2 <= m <= 9");
    const auto mm = static_cast<std::size_t>(m);
    std::vector<SquareMatrix> mats;
    std::vector<std::string> labels;
    mats.push_back(starred ? unit_matrix(mm, mm - 1, mm - 1) : unit_matrix(mm, 0, 0));
    labels.push_back(starred ? e_label(mm, mm) : e_label(1, 1));
    for (int p = 1; p <= m - 2; ++p) {
        mats.push_back(shift_power(mm, p));
        labels.push_back(p == 1 ? "E" : "E^" + std::to_string(p));
    }
    for (std::size_t j = 2; j <= mm; ++j) {
        if (starred) {
            mats.push_back(unit_matrix(mm, j - 2, mm - 1));
            labels.push_back(e_label(j - 1, mm));
        } else {
            mats.push_back(unit_matrix(mm, 0, j - 1));
            labels.push_back(e_label(1, j));
        }
    }
    std::string name = (starred ? "Am1s(" : "Am1(") + std::to_string(m) + ")";
    return from_matrix_span(mats, labels, AlgebraElement::basis(mats.size(), 0), std::move(name));
}

Algebra block_triangular(const std::vector<int>& blocks, std::string name) {
    if (blocks.empty()) throw InvalidParamsError("UTblock needs at least one block size");
    std::vector<std::size_t> block_of;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b] < 1) throw InvalidParamsError("block sizes must be positive");
        for (int r = 0; r < blocks[b]; ++r) block_of.push_back(b);
    }
    const std::size_t m = block_of.size();
    if (m > 9) throw InvalidParamsError("matrix size must be at most 9");
    std::vector<SquareMatrix> mats;
    std::vector<std::string> labels;
    RationalVector unit;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (block_of[i] > block_of[j]) continue;
            mats.push_back(unit_matrix(m, i, j));
            labels.push_back(e_label(i + 1, j + 1));
            unit.push_back(i == j ? 1 : 0);
        }
    return from_matrix_span(mats, labels, AlgebraElement(std::move(unit)), std::move(name));
}

std::string params_suffix(const std::vector<int>& params) {
    if (params.empty()) return {};
    std::string s = "(";
    for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
}

}  // namespace

SquareMatrix matrix_from_label(std::string_view label, std::size_t m) {
    SquareMatrix out(m);
    std::size_t pos = 0;
    auto fail = [&]() -> void { throw AlgebraError("cannot parse matrix label '" + std::string(label) + "'"); };
    int sign = 1;
    bool expect_term = true;
    while (pos < label.size()) {
        const char c = label[pos];
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            expect_term = true;
            ++pos;
            continue;
        }
        if (!expect_term) fail();
        if (c == 'e' && pos + 2 < label.size() + 0 && std::isdigit(static_cast<unsigned char>(label[pos + 1])) &&
            pos + 2 < label.size() && std::isdigit(static_cast<unsigned char>(label[pos + 2]))) {
            const auto i = static_cast<std::size_t>(label[pos + 1] - '0');
            const auto j = static_cast<std::size_t>(label[pos + 2] - '0');
            if (i < 1 || j < 1 || i > m || j > m) fail();
            out.at(i - 1, j - 1) += sign;
            pos += 3;
        } else if (c == 'I') {
            for (std::size_t i = 0; i < m; ++i) out.at(i, i) += sign;
            ++pos;
            while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) ++pos;
        } else if (c == 'E') {
            ++pos;
            int power = 1;
            if (pos < label.size() && label[pos] == '^') {
                ++pos;
                power = 0;
                if (pos == label.size()) fail();
                while (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos])))
                    power = power * 10 + (label[pos++] - '0');
            }
            const auto s = shift_power(m, power);
            for (std::size_t k = 0; k < s.entries.size(); ++k) out.entries[k] += sign * s.entries[k];
        } else {
            fail();
        }
        sign = 1;
        expect_term = false;
    }
    if (expect_term) fail();
    return out;
}

Algebra catalog(std::string_view name, const std::vector<int>& params, const CatalogOptions& options) {
    const std::string n(name);
    const std::string full_name = n + params_suffix(params);
    auto fixed = [&](std::size_t m, std::vector<std::string> labels, std::vector<std::string> unit) {
        require_params(name, params, 0);
        return span_algebra(full_name, m, labels, unit);
    };
    if (n == "F") return fixed(1, {"e11"}, {"e11"});
    if (n == "C1") return fixed(2, {"e11", "e22"}, {"e11", "e22"});
    if (n == "A1") return fixed(2, {"e11", "e12"}, {"e11"});
    if (n == "A1s") return fixed(2, {"e22", "e12"}, {"e22"});
    if (n == "A2") return fixed(3, {"I3", "e12", "e13", "e23"}, {"I3"});
    if (n == "A4") return fixed(3, {"e11", "e12", "e13", "e23"}, {"e11"});
    if (n == "A4s") return fixed(3, {"e33", "e12", "e13", "e23"}, {"e33"});
    if (n == "A5") return fixed(3, {"e22", "e12", "e13", "e23"}, {"e22"});
    if (n == "A6") return fixed(3, {"e11+e33", "e12", "e13", "e23"}, {"e11+e33"});
    if (n == "A7") return fixed(4, {"I4", "e12", "e13", "e14", "e23", "e24", "e34"}, {"I4"});
    if (n == "A8") return fixed(4, {"e11+e22+e33", "e12", "e13", "e14", "e23", "e24", "e34"}, {"e11+e22+e33"});
    if (n == "A8s") return fixed(4, {"e22+e33+e44", "e12", "e13", "e14", "e23", "e24", "e34"}, {"e22+e33+e44"});
    if (n == "A9") return fixed(4, {"e11", "e23+e34", "e12", "e13", "e14", "e24"}, {"e11"});
    if (n == "A9s") return fixed(4, {"e44", "e12+e23", "e13", "e14", "e24", "e34"}, {"e44"});
    if (n == "A10")
        return fixed(5, {"e11", "e12", "e13", "e14", "e15", "e23+e45", "e24-e35", "e25"}, {"e11"});
    if (n == "A10s")
        return fixed(5, {"e55", "e15", "e25", "e35", "e45", "e12+e34", "e13-e24", "e14"}, {"e55"});
    if (n == "UT2") {
        require_params(name, params, 0);
        return block_triangular({1, 1}, "UT2");
    }
    if (n == "N4") {
        require_params(name, params, 0);
        return nm_algebra(4, options.nm_unit).renamed("N4");
    }
    if (n == "G4" || n == "G6") {
        require_params(name, params, 0);
        return grassmann(n == "G4" ? 2 : 3);
    }
    if (n == "Nm") {
        require_params(name, params, 1);
        return nm_algebra(params[0], options.nm_unit);
    }
    if (n == "Am1" || n == "Am1s") {
        require_params(name, params, 1);
        return am1_algebra(params[0], n == "Am1s");
    }
    if (n == "UTm") {
        require_params(name, params, 1);
        if (params[0] < 1) throw InvalidParamsError("UTm requires m >= 1");
        return block_triangular(std::vector<int>(static_cast<std::size_t>(params[0]), 1), full_name);
    }
    if (n == "UTblock") return block_triangular(params, full_name);
    if (n == "G2k") {
        require_params(name, params, 1);
        if (params[0] < 1 || params[0] > 3) throw InvalidParamsError("G2k requires 1 <= k <= 3");
        return grassmann(params[0]).renamed(full_name);
    }
    if (n == "G4bar" || n == "G4bars") {
        require_params(name, params, 0);
        return tensor_product(grassmann(2), catalog(n == "G4bar" ? "A1" : "A1s")).renamed(n);
    }
    throw UnknownAlgebraError("unknown algebra name: " + n);
}

std::vector<std::pair<std::string, std::string>> catalog_entries() {
    return {
        {"F", "the field, span{e11}"},
        {"C1", "F + F, span{e11, e22}"},
        {"A1", "span{e11, e12}"},
        {"A1s", "span{e22, e12}"},
        {"A2", "N_3 = span{I3, e12, e13, e23}"},
        {"A4", "A_{3,1} = span{e11, e12, e13, e23}"},
        {"A4s", "A_{3,1}^* = span{e33, e12, e13, e23}"},
        {"A5", "span{e22, e12, e13, e23}"},
        {"A6", "span{e11+e33, e12, e13, e23}"},
        {"A7", "span{I4, e12, e13, e14, e23, e24, e34}"},
        {"A8", "span{e11+e22+e33, e12, e13, e14, e23, e24, e34}"},
        {"A8s", "span{e22+e33+e44, e12, e13, e14, e23, e24, e34}"},
        {"A9", "A_{4,1} = span{e11, e23+e34, e12, e13, e14, e24}"},
        {"A9s", "A_{4,1}^* = span{e44, e12+e23, e13, e14, e24, e34}"},
        {"A10", "span{e11, e12, e13, e14, e15, e23+e45, e24-e35, e25}"},
        {"A10s", "span{e55, e15, e25, e35, e45, e12+e34, e13-e24, e14}"},
        {"Nm(m)", "span{I_m, E, ..., E^{m-2}, e12, ..., e1m}"},
        {"Am1(m)", "span{e11, E, ..., E^{m-2}, e12, ..., e1m}"},
        {"Am1s(m)", "span{e_mm, E, ..., E^{m-2}, e1m, ..., e_{m-1,m}}"},
        {"UTm(m)", "upper triangular m x m matrices"},
        {"UTblock(d1,...,dk)", "upper block triangular matrices"},
        {"G2k(k)", "Grassmann algebra on 2k generators"},
        {"G4bar", "G4 (x) A1"},
        {"G4bars", "G4 (x) A1s"},
        {"G4, G6, UT2, N4", "aliases for G2k(2), G2k(3), UTblock(1,1), Nm(4)"},
    };
}

namespace {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, const CatalogOptions& options) : options_(options) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }

    Algebra parse() {
        Algebra a = parse_sum();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return a.renamed(text_);
    }

private:
    std::string text_;
    std::size_t pos_ = 0;
    const CatalogOptions& options_;

    [[noreturn]] void fail(const std::string& what) const {
        throw AlgebraError("algebra expression '" + text_ + "': " + what);
    }

    Algebra parse_sum() {
        Algebra a = parse_product();
        while (pos_ < text_.size() && text_[pos_] == '+') {
            ++pos_;
            a = direct_sum(a, parse_product());
        }
        return a;
    }

    Algebra parse_product() {
        Algebra a = parse_atom();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            a = tensor_product(a, parse_atom());
        }
        return a;
    }

    Algebra parse_atom() {
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            Algebra a = parse_sum();
            if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
            ++pos_;
            return a;
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected algebra name");
        const std::string name = text_.substr(start, pos_ - start);
        std::vector<int> params;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            while (true) {
                const std::size_t s = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (s == pos_) fail("expected integer parameter");
                params.push_back(std::stoi(text_.substr(s, pos_ - s)));
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == ')') {
                    ++pos_;
                    break;
                }
                fail("malformed parameter list");
            }
        }
        return catalog(name, params, options_);
    }
};

}  // namespace

Algebra parse_algebra_expression(std::string_view expr, const CatalogOptions& options) {
    return ExpressionParser(expr, options).parse();
}

Algebra load_algebra(const std::string& spec, const CatalogOptions& options) {
    std::ifstream in(spec);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        return from_text(ss.str(), spec);
    }
    return parse_algebra_expression(spec, options);
}

}  // namespace picalc
