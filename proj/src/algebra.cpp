#include "picalc/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace picalc {

NotClosedError::NotClosedError(std::size_t i, std::size_t j)
    : AlgebraError("span not closed under multiplication: product of basis elements " +
                   std::to_string(i + 1) + " and " + std::to_string(j + 1) + " leaves the span"),
      left(i),
      right(j) {}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (o.size() != size()) throw std::invalid_argument("element dimension mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (o.size() != size()) throw std::invalid_argument("element dimension mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

AlgebraElement operator*(const Rational& s, AlgebraElement a) {
    for (auto& c : a.coords) c *= s;
    return a;
}

Algebra::Algebra(std::size_t dim, std::vector<std::string> labels, std::vector<StructureConstant> table,
                 std::optional<AlgebraElement> unit_idempotent, std::string name)
    : dim_(dim), labels_(std::move(labels)), unit_(std::move(unit_idempotent)), name_(std::move(name)) {
    if (dim_ == 0) throw AlgebraError("algebra dimension must be positive");
    if (labels_.empty()) {
        for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i + 1));
    }
    if (labels_.size() != dim_) throw AlgebraError("label count does not match dimension");

    std::vector<std::map<std::size_t, Rational>> acc(dim_ * dim_);
    for (const auto& sc : table) {
        if (sc.i >= dim_ || sc.j >= dim_ || sc.k >= dim_)
            throw AlgebraError("structure constant index out of range");
        acc[sc.i * dim_ + sc.j][sc.k] += sc.value;
    }
    products_.resize(dim_ * dim_);
    products_int_.resize(dim_ * dim_);
    for (std::size_t p = 0; p < acc.size(); ++p) {
        for (auto& [k, v] : acc[p]) {
            if (sgn(v) == 0) continue;
            products_[p].push_back({k, v});
            if (v.get_den() == 1 && mpz_sizeinbase(v.get_num_mpz_t(), 2) <= 20)
                products_int_[p].push_back({static_cast<std::uint32_t>(k), v.get_num().get_si()});
            else
                integral_ = false;
        }
    }
    if (!integral_) products_int_.assign(dim_ * dim_, {});

    if (unit_) {
        if (unit_->size() != dim_) throw AlgebraError("unit idempotent has wrong dimension");
        if (multiply(*unit_, *unit_) != *unit_) throw AlgebraError("unit idempotent is not idempotent");
    }
    check_associative();
    compute_blocks();
}

std::vector<StructureConstant> Algebra::table() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& t : basis_product(i, j)) out.push_back({i, j, t.index, t.coeff});
    return out;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("multiply: dimension mismatch");
    AlgebraElement z(dim_);
    Rational xy, t;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x.coords[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (sgn(y.coords[j]) == 0) continue;
            const auto& terms = basis_product(i, j);
            if (terms.empty()) continue;
            xy = x.coords[i] * y.coords[j];
            for (const auto& term : terms) {
                t = xy * term.coeff;
                z.coords[term.index] += t;
            }
        }
    }
    return z;
}

AlgebraElement Algebra::commutator(const AlgebraElement& x, const AlgebraElement& y) const {
    return multiply(x, y) - multiply(y, x);
}

void Algebra::check_associative() const {
    // (b_i b_j) b_k against b_i (b_j b_k), sparse on both sides.
    std::vector<Rational> lhs(dim_), rhs(dim_);
    Rational t;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const auto& ij = basis_product(i, j);
            for (std::size_t k = 0; k < dim_; ++k) {
                const auto& jk = basis_product(j, k);
                if (ij.empty() && jk.empty()) continue;
                for (auto& v : lhs) v = 0;
                for (auto& v : rhs) v = 0;
                for (const auto& a : ij)
                    for (const auto& b : basis_product(a.index, k)) {
                        t = a.coeff * b.coeff;
                        lhs[b.index] += t;
                    }
                for (const auto& a : jk)
                    for (const auto& b : basis_product(i, a.index)) {
                        t = a.coeff * b.coeff;
                        rhs[b.index] += t;
                    }
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "associativity fails on basis triple (" << i + 1 << ", " << j + 1 << ", " << k + 1
                       << ")";
                    throw NotAssociativeError(os.str());
                }
            }
        }
    }
}

void Algebra::compute_blocks() {
    std::vector<std::size_t> parent(dim_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (const auto& t : basis_product(i, j)) {
                unite(i, j);
                unite(i, t.index);
            }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < dim_; ++i) groups[find(i)].push_back(i);
    blocks_.clear();
    for (auto& [root, members] : groups) blocks_.push_back(std::move(members));
    std::sort(blocks_.begin(), blocks_.end());
}

Algebra Algebra::renamed(std::string name) const {
    Algebra copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.size != b.size) throw std::invalid_argument("matrix size mismatch");
    SquareMatrix c(a.size);
    Rational t;
    for (std::size_t r = 0; r < a.size; ++r)
        for (std::size_t k = 0; k < a.size; ++k) {
            if (sgn(a.at(r, k)) == 0) continue;
            for (std::size_t s = 0; s < a.size; ++s) {
                if (sgn(b.at(k, s)) == 0) continue;
                t = a.at(r, k) * b.at(k, s);
                c.at(r, s) += t;
            }
        }
    return c;
}

Algebra from_matrix_span(const std::vector<SquareMatrix>& generators, std::vector<std::string> labels,
                         std::optional<AlgebraElement> unit_idempotent, std::string name) {
    if (generators.empty()) throw AlgebraError("empty spanning set");
    const std::size_t m = generators.front().size;
    const std::size_t d = generators.size();
    for (const auto& g : generators)
        if (g.size != m) throw AlgebraError("spanning matrices differ in size");

    // Augmented system: columns are the generators flattened; solve
    // sum_k c_k G_k = P by echelon form of [G^T | I].
    const std::size_t mm = m * m;
    Subspace rows(mm + d);
    for (std::size_t k = 0; k < d; ++k) {
        RationalVector v(mm + d);
        std::copy(generators[k].entries.begin(), generators[k].entries.end(), v.begin());
        v[mm + k] = 1;
        RationalVector probe = v;
        rows.reduce(probe);
        bool matrix_part_zero = std::all_of(probe.begin(), probe.begin() + static_cast<std::ptrdiff_t>(mm),
                                            [](const Rational& x) { return sgn(x) == 0; });
        if (matrix_part_zero)
            throw LinearlyDependentBasisError("spanning matrices are linearly dependent (element " +
                                              std::to_string(k + 1) + ")");
        rows.insert_reduced(std::move(probe));
    }
    // Each basis row has pivot inside the matrix block; expressing P in the
    // basis = reading the identity block after reduction.
    auto express = [&](const SquareMatrix& p) -> std::optional<RationalVector> {
        RationalVector v(mm + d);
        std::copy(p.entries.begin(), p.entries.end(), v.begin());
        rows.reduce(v);
        for (std::size_t j = 0; j < mm; ++j)
            if (sgn(v[j]) != 0) return std::nullopt;
        RationalVector coeff(d);
        for (std::size_t k = 0; k < d; ++k) coeff[k] = -v[mm + k];
        return coeff;
    };
    std::vector<StructureConstant> table;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto c = express(generators[i] * generators[j]);
            if (!c) throw NotClosedError(i, j);
            for (std::size_t k = 0; k < d; ++k)
                if (sgn((*c)[k]) != 0) table.push_back({i, j, k, (*c)[k]});
        }
    return Algebra(d, std::move(labels), std::move(table), std::move(unit_idempotent), std::move(name));
}

Algebra grassmann(int k) {
    if (k < 1 || k > 4) throw AlgebraError("grassmann: k must be in 1..4");
    const int gens = 2 * k;
    const std::size_t dim = std::size_t{1} << gens;
    std::vector<std::string> labels;
    for (std::size_t s = 0; s < dim; ++s) {
        if (s == 0) {
            labels.emplace_back("1");
            continue;
        }
        std::string l;
        for (int g = 0; g < gens; ++g)
            if (s & (std::size_t{1} << g)) l += "e" + std::to_string(g + 1);
        labels.push_back(l);
    }
    std::vector<StructureConstant> table;
    for (std::size_t s = 0; s < dim; ++s)
        for (std::size_t t = 0; t < dim; ++t) {
            if (s & t) continue;
            // Inversions of the concatenation (sorted S)(sorted T): pairs
            // a in S, b in T with a > b.
            int inv = 0;
            for (int b = 0; b < gens; ++b)
                if (t & (std::size_t{1} << b)) inv += __builtin_popcountll(s >> (b + 1));
            table.push_back({s, t, s | t, Rational(inv % 2 ? -1 : 1)});
        }
    return Algebra(dim, std::move(labels), std::move(table), AlgebraElement::basis(dim, 0),
                   "G" + std::to_string(gens));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    for (const auto& l : a.labels()) labels.push_back("1:" + l);
    for (const auto& l : b.labels()) labels.push_back("2:" + l);
    std::vector<StructureConstant> table;
    for (const auto& sc : a.table()) table.push_back(sc);
    for (const auto& sc : b.table()) table.push_back({sc.i + da, sc.j + da, sc.k + da, sc.value});
    std::optional<AlgebraElement> unit;
    if (a.unit_idempotent() && b.unit_idempotent()) {
        RationalVector u = a.unit_idempotent()->coords;
        u.insert(u.end(), b.unit_idempotent()->coords.begin(), b.unit_idempotent()->coords.end());
        unit = AlgebraElement(std::move(u));
    }
    std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "+" + b.name();
    return Algebra(da + db, std::move(labels), std::move(table), std::move(unit), std::move(name));
}

Algebra tensor_product(const Algebra& a, const Algebra& b) {
    const std::size_t da = a.dim(), db = b.dim();
    std::vector<std::string> labels;
    for (const auto& la : a.labels())
        for (const auto& lb : b.labels()) labels.push_back(la + "|" + lb);
    std::vector<StructureConstant> table;
    const auto ta = a.table();
    const auto tb = b.table();
    for (const auto& x : ta)
        for (const auto& y : tb)
            table.push_back({x.i * db + y.i, x.j * db + y.j, x.k * db + y.k, x.value * y.value});
    std::optional<AlgebraElement> unit;
    if (a.unit_idempotent() && b.unit_idempotent()) {
        RationalVector u(da * db);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < db; ++j)
                u[i * db + j] = a.unit_idempotent()->coords[i] * b.unit_idempotent()->coords[j];
        unit = AlgebraElement(std::move(u));
    }
    std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "*" + b.name();
    return Algebra(da * db, std::move(labels), std::move(table), std::move(unit), std::move(name));
}

Subspace center(const Algebra& a) {
    const std::size_t d = a.dim();
    // Row (i, k): sum_j z_j (gamma_{jik} - gamma_{ijk}) = 0.
    Subspace constraints(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<RationalVector> rows(d, RationalVector(d));
        for (std::size_t j = 0; j < d; ++j) {
            for (const auto& t : a.basis_product(j, i)) rows[t.index][j] += t.coeff;
            for (const auto& t : a.basis_product(i, j)) rows[t.index][j] -= t.coeff;
        }
        for (auto& r : rows)
            if (!is_zero(r)) constraints.insert(std::move(r));
    }
    return constraints.annihilator();
}

Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& v) {
    Subspace out(a.dim());
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) {
            auto p = a.multiply(AlgebraElement(x), AlgebraElement(y));
            if (!p.is_zero()) out.insert(std::move(p.coords));
        }
    return out;
}

Subspace commutator_span(const Algebra& a, const Subspace& u, const Subspace& v) {
    Subspace out(a.dim());
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) {
            auto p = a.commutator(AlgebraElement(x), AlgebraElement(y));
            if (!p.is_zero()) out.insert(std::move(p.coords));
        }
    return out;
}

NilpotencyResult is_nilpotent(const Algebra& a) {
    const Subspace whole = Subspace::full(a.dim());
    Subspace power = whole;
    for (int k = 1; k <= static_cast<int>(a.dim()) + 1; ++k) {
        if (power.dim() == 0) return {true, k};
        Subspace next = product_span(a, power, whole);
        if (next.dim() == power.dim()) return {false, 0};
        power = std::move(next);
    }
    return {power.dim() == 0, power.dim() == 0 ? static_cast<int>(a.dim()) + 2 : 0};
}

std::string to_text(const Algebra& a) {
    nlohmann::ordered_json doc;
    doc["dim"] = a.dim();
    doc["labels"] = a.labels();
    auto table = nlohmann::ordered_json::array();
    for (const auto& sc : a.table())
        table.push_back(nlohmann::ordered_json::array({sc.i + 1, sc.j + 1, sc.k + 1, to_string(sc.value)}));
    doc["table"] = std::move(table);
    if (a.unit_idempotent()) {
        auto unit = nlohmann::ordered_json::array();
        for (const auto& c : a.unit_idempotent()->coords) unit.push_back(to_string(c));
        doc["unit"] = std::move(unit);
    }
    return doc.dump(1) + "\n";
}

Algebra from_text(const std::string& text, std::string name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(std::string("algebra definition: ") + e.what());
    }
    try {
        const auto dim = doc.at("dim").get<std::size_t>();
        std::vector<std::string> labels;
        if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
        std::vector<StructureConstant> table;
        for (const auto& e : doc.at("table")) {
            if (!e.is_array() || e.size() != 4) throw AlgebraError("table entry must be [i, j, k, \"p/q\"]");
            const auto i = e[0].get<std::size_t>(), j = e[1].get<std::size_t>(), k = e[2].get<std::size_t>();
            if (i < 1 || j < 1 || k < 1) throw AlgebraError("table indices are 1-based");
            Rational v = e[3].is_string() ? parse_rational(e[3].get<std::string>()) : Rational(e[3].get<long>());
            table.push_back({i - 1, j - 1, k - 1, v});
        }
        std::optional<AlgebraElement> unit;
        if (doc.contains("unit")) {
            RationalVector u;
            for (const auto& c : doc.at("unit"))
                u.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>()));
            unit = AlgebraElement(std::move(u));
        }
        return Algebra(dim, std::move(labels), std::move(table), std::move(unit), std::move(name));
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraError(std::string("algebra definition: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw AlgebraError(std::string("algebra definition: ") + e.what());
    }
}

}  // namespace picalc
