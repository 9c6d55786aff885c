#include "picalc/rep_theory.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace picalc {

// Partition -----------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    for (int j = 0; j < parts_.front(); ++j) {
        int h = 0;
        for (int p : parts_)
            if (p > j) ++h;
        c.push_back(h);
    }
    return Partition(std::move(c));
}

std::vector<std::vector<int>> Partition::hook_lengths() const {
    const Partition conj = conjugate();
    std::vector<std::vector<int>> h;
    for (std::size_t r = 0; r < parts_.size(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < parts_[r]; ++c)
            row.push_back(parts_[r] - c - 1 + conj[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1 + 1);
        h.push_back(std::move(row));
    }
    return h;
}

std::uint64_t Partition::dimension() const {
    // n! / prod(hooks), computed with interleaved division to stay exact.
    mpz_class num = 1, den = 1;
    for (int i = 2; i <= size(); ++i) num *= i;
    for (const auto& row : hook_lengths())
        for (int h : row) den *= h;
    mpz_class q = num / den;
    return q.get_ui();
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("malformed partition: " + text);
        parts.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : text) {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') flush();
        else if (c >= '0' && c <= '9') cur.push_back(c);
        else throw std::invalid_argument("malformed partition: " + text);
    }
    flush();
    return Partition(std::move(parts));
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(n, n);
    return out;
}

// Tableaux ------------------------------------------------------------------

YoungTableau::YoungTableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (rows_.size() != shape_.parts().size()) throw std::invalid_argument("tableau rows do not match shape");
    std::vector<int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (static_cast<int>(rows_[r].size()) != shape_.parts()[r])
            throw std::invalid_argument("tableau row length does not match shape");
        for (int x : rows_[r]) seen.push_back(x);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != static_cast<int>(i) + 1) throw std::invalid_argument("tableau filling is not a bijection");
}

YoungTableau YoungTableau::initial(const Partition& shape) {
    std::vector<std::vector<int>> rows;
    for (int p : shape.parts()) rows.emplace_back(static_cast<std::size_t>(p));
    int next = 1;
    const auto heights = shape.column_heights();
    for (std::size_t c = 0; c < heights.size(); ++c)
        for (int r = 0; r < heights[c]; ++r) rows[static_cast<std::size_t>(r)][c] = next++;
    return YoungTableau(shape, std::move(rows));
}

bool YoungTableau::is_standard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) return false;
            if (r > 0 && rows_[r][c] <= rows_[r - 1][c]) return false;
        }
    return true;
}

Permutation YoungTableau::sigma() const {
    const YoungTableau init = initial(shape_);
    Permutation s(static_cast<std::size_t>(shape_.size()));
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c)
            s[static_cast<std::size_t>(init.rows_[r][c] - 1)] = rows_[r][c] - 1;
    return s;
}

std::vector<YoungTableau> standard_tableaux(const Partition& shape) {
    std::vector<YoungTableau> out;
    const int n = shape.size();
    std::vector<std::vector<int>> rows(shape.parts().size());
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.emplace_back(shape, rows);
            return;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto len = rows[r].size();
            if (static_cast<int>(len) >= shape.parts()[r]) continue;
            if (r > 0 && rows[r - 1].size() <= len) continue;
            rows[r].push_back(k);
            rec(k + 1);
            rows[r].pop_back();
        }
    };
    rec(1);
    return out;
}

// Characters ----------------------------------------------------------------

namespace {

// Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves a
// bead from b to b - r; the sign counts beads jumped over.
std::int64_t mn_beta(std::vector<int>& beta, const std::vector<int>& rho, std::size_t next,
                     std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo) {
    if (next == rho.size()) return 1;
    auto key = std::make_pair(beta, next);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = rho[next];
    std::set<int> beads(beta.begin(), beta.end());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i];
        const int t = b - r;
        if (t < 0 || beads.count(t)) continue;
        int jumped = 0;
        for (int x : beta)
            if (x > t && x < b) ++jumped;
        beta[i] = t;
        const std::int64_t sub = mn_beta(beta, rho, next + 1, memo);
        beta[i] = b;
        total += (jumped % 2 ? -1 : 1) * sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

std::int64_t mn_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw std::invalid_argument("partitions of different sizes");
    const std::size_t k = lambda.parts().size();
    std::vector<int> beta(k);
    for (std::size_t i = 0; i < k; ++i) beta[i] = lambda.parts()[i] + static_cast<int>(k - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
    return mn_beta(beta, rho.parts(), 0, memo);
}

std::uint64_t class_size(const Partition& rho) {
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    for (auto [len, m] : mult) {
        for (int i = 0; i < m; ++i) z *= len;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    mpz_class nf = 1;
    for (int i = 2; i <= rho.size(); ++i) nf *= i;
    mpz_class q = nf / z;
    return q.get_ui();
}

std::string to_string(CocharVariant v) {
    switch (v) {
        case CocharVariant::plain: return "plain";
        case CocharVariant::central: return "central";
        case CocharVariant::proper: return "proper";
    }
    return "?";
}

CocharVariant parse_cochar_variant(const std::string& text) {
    if (text == "plain") return CocharVariant::plain;
    if (text == "central") return CocharVariant::central;
    if (text == "proper") return CocharVariant::proper;
    throw std::invalid_argument("unknown variant: " + text);
}

ModuleCharacter quotient_character(const IdentitySpace& space) {
    ModuleCharacter chi;
    const int n = space.n;
    const auto& rows = space.constraints.basis();
    const auto& pivots = space.constraints.pivots();
    std::vector<Permutation> pivot_perms;
    for (auto p : pivots) pivot_perms.push_back(lex_unrank(n, p));
    for (const auto& rho : partitions(n)) {
        const Permutation pi_inv = inverse(class_representative(rho.parts()));
        Rational trace = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) trace += rows[i][lex_rank(compose(pi_inv, pivot_perms[i]))];
        chi.emplace(rho, trace);
    }
    return chi;
}

namespace {

IdentitySpace space_for(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options,
                        bool allow_uncertified) {
    EngineOptions o = options;
    if (kind == IdentityKind::central && o.mode == EvalMode::sandwich && o.generators.tspace.empty())
        o.mode = EvalMode::exhaustive;
    IdentitySpace s = compute_identity_space(a, n, kind, o);
    if (!s.certificate.exact() && !allow_uncertified)
        throw UncertifiedSpaceError("exact traces need an exhaustive or sandwich-certified space");
    return s;
}

}  // namespace

ModuleCharacter module_character(const Algebra& a, int n, CocharVariant variant, const EngineOptions& options,
                                 bool allow_uncertified) {
    if (variant == CocharVariant::plain)
        return quotient_character(space_for(a, n, IdentityKind::plain, options, allow_uncertified));
    ModuleCharacter central = quotient_character(space_for(a, n, IdentityKind::central, options, allow_uncertified));
    if (variant == CocharVariant::central) return central;
    ModuleCharacter plain = quotient_character(space_for(a, n, IdentityKind::plain, options, allow_uncertified));
    for (auto& [rho, t] : plain) t -= central.at(rho);
    return plain;
}

std::int64_t CocharacterDecomposition::colength() const {
    std::int64_t s = 0;
    for (const auto& [l, m] : mults) s += m;
    return s;
}

std::int64_t CocharacterDecomposition::multiplicity(const Partition& lambda) const {
    for (const auto& [l, m] : mults)
        if (l == lambda) return m;
    return 0;
}

std::uint64_t CocharacterDecomposition::degree() const {
    std::uint64_t s = 0;
    for (const auto& [l, m] : mults) s += static_cast<std::uint64_t>(m) * l.dimension();
    return s;
}

std::string CocharacterDecomposition::to_string() const {
    std::string s;
    for (const auto& [l, m] : mults) {
        if (m == 0) continue;
        if (!s.empty()) s += " + ";
        if (m != 1) s += std::to_string(m) + " ";
        s += "chi(" + l.to_string() + ")";
    }
    return s.empty() ? "0" : s;
}

CocharacterDecomposition decompose(const ModuleCharacter& chi, int n, CocharVariant variant) {
    CocharacterDecomposition d;
    d.n = n;
    d.variant = variant;
    const auto classes = partitions(n);
    const Rational nf = static_cast<unsigned long>(factorial(n));
    for (const auto& lambda : classes) {
        Rational m = 0;
        for (const auto& rho : classes)
            m += Rational(static_cast<unsigned long>(class_size(rho))) * chi.at(rho) *
                 Rational(static_cast<long>(mn_character(lambda, rho)));
        m /= nf;
        if (m.get_den() != 1 || sgn(m) < 0)
            throw NonIntegerMultiplicityError("multiplicity of (" + lambda.to_string() + ") is " + m.get_str());
        d.mults.emplace_back(lambda, m.get_num().get_si());
    }
    return d;
}

CocharacterDecomposition cocharacter(const Algebra& a, int n, CocharVariant variant, const EngineOptions& options) {
    return decompose(module_character(a, n, variant, options), n, variant);
}

std::int64_t colength(const Algebra& a, int n, CocharVariant variant, const EngineOptions& options) {
    return cocharacter(a, n, variant, options).colength();
}

// Highest weight vectors ----------------------------------------------------

FreePolynomial highest_weight_vector(const YoungTableau& t) {
    FreePolynomial product = FreePolynomial::constant(1);
    for (int h : t.shape().column_heights()) product = product * standard_polynomial(h).to_free();
    return place_permute(product, inverse(t.sigma()));
}

std::int64_t hwv_multiplicity(const IdentitySpace& space, const Partition& lambda) {
    if (lambda.size() != space.n) throw std::invalid_argument("partition size differs from degree");
    const auto& rows = space.constraints.basis();
    if (rows.empty()) return 0;
    std::vector<RationalVector> images;
    for (const auto& t : standard_tableaux(lambda)) {
        const RationalVector v = full_linearization(highest_weight_vector(t)).to_vector();
        RationalVector img(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) img[i] = dot(rows[i], v);
        images.push_back(std::move(img));
    }
    return static_cast<std::int64_t>(rank_of(images));
}

std::int64_t hwv_multiplicity(const Algebra& a, const Partition& lambda, const EngineOptions& options) {
    return hwv_multiplicity(space_for(a, lambda.size(), IdentityKind::plain, options, false), lambda);
}

}  // namespace picalc
