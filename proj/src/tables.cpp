#include "picalc/tables.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "picalc/catalog.hpp"
#include "picalc/permutation.hpp"
#include "picalc/rep_theory.hpp"

namespace picalc {

namespace {

struct GeneratorText {
    std::vector<std::string> tideal;
    std::vector<std::string> tspace;
};

const std::vector<std::string> a6_generators = {
    // f1 .. f6 with x, y, z, w, t = x1 .. x5
    "c(x1,x2) c(x3,x4) + c(x3,x4) c(x1,x2) + c(x2,x3) c(x1,x4) + c(x1,x4) c(x2,x3)"
    " + c(x3,x1) c(x2,x4) + c(x2,x4) c(x3,x1)",
    "c(x1,x2) c(x3,x4) + c(x3,x4) c(x1,x2) + x1 c(x3,x4) x2 - x2 c(x3,x4) x1",
    "2 x1 x2 c(x4,x3) + x4 x1 c(x3,x2) + x4 x2 c(x3,x1) + x3 x1 c(x2,x4) + x3 x2 c(x1,x4)"
    " + c(x1,x2) c(x3,x4) + c(x1,x3) c(x4,x2) - c(x4,x2) c(x1,x3) + c(x2,x3) c(x4,x1) - c(x4,x1) c(x2,x3)",
    "c(x1,x2) x3 c(x4,x5)",
    "c(c(x1,x2) c(x3,x4), x5)",
    "c(x3 c(x1,x2) x4, x5)",
};

const std::map<std::string, GeneratorText>& generator_texts() {
    static const std::map<std::string, GeneratorText> texts = {
        {"A1", {{"c(x1,x2) x3"}, {}}},
        {"A1s", {{"x1 c(x2,x3)"}, {}}},
        {"A2", {{"c(x1,x2,x3)", "c(x1,x2) c(x3,x4)"}, {}}},
        {"A4", {{"c(x1,x2) x3 x4"}, {}}},
        {"A4s", {{"x1 x2 c(x3,x4)"}, {}}},
        {"A5", {{"x1 c(x2,x3) x4"}, {}}},
        {"A6", {a6_generators, {}}},
        {"A7", {{"c(x1,x2) c(x3,x4)", "c(x1,x2,x3,x4)"}, {}}},
        {"N4", {{"c(x1,x2) c(x3,x4)", "c(x1,x2,x3,x4)"}, {}}},
        {"A8", {{"c(x1,x2) c(x3,x4) x5", "c(x1,x2,x3) x4"}, {}}},
        {"A8s", {{"x5 c(x1,x2) c(x3,x4)", "x4 c(x1,x2,x3)"}, {}}},
        {"A9", {{"c(x1,x2) c(x3,x4)", "c(x1,x2) x3 x4 x5"}, {}}},
        {"A9s", {{"c(x1,x2) c(x3,x4)", "x1 x2 x3 c(x4,x5)"}, {}}},
        {"A10", {{"c(x1,x2) x3 x4 x5"}, {}}},
        {"A10s", {{"x1 x2 x3 c(x4,x5)"}, {}}},
        {"UT2", {{"c(x1,x2) c(x3,x4)"}, {}}},
        {"G4", {{"c(x1,x2,x3)", "c(x1,x2) c(x3,x4) c(x5,x6)"}, {}}},
        {"G6", {{"c(x1,x2,x3)", "c(x1,x2) c(x3,x4) c(x5,x6) c(x7,x8)"}, {"c(x1,x2)"}}},
        {"G4bar", {{"c(x1,x2,x3) x4", "c(x1,x2) c(x3,x4) c(x5,x6) x7"}, {}}},
        {"G4bars", {{"x1 c(x2,x3,x4)", "x1 c(x2,x3) c(x4,x5) c(x6,x7)"}, {}}},
        {"G4+A1", {{"c(x1,x2,x3) x4", "c(x1,x2) c(x3,x4) c(x5,x6)"}, {}}},
        {"G4+A1s", {{"x1 c(x2,x3,x4)", "c(x1,x2) c(x3,x4) c(x5,x6)"}, {}}},
    };
    return texts;
}

std::vector<MultilinearPolynomial> parse_all(const std::vector<std::string>& texts) {
    std::vector<MultilinearPolynomial> out;
    for (const auto& t : texts) out.push_back(MultilinearPolynomial::from_free(parse_polynomial(t)));
    return out;
}

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

std::optional<GeneratorSet> known_generators(const std::string& name) {
    const auto& texts = generator_texts();
    auto it = texts.find(strip_spaces(name));
    if (it == texts.end()) return std::nullopt;
    return GeneratorSet{it->first, parse_all(it->second.tideal), parse_all(it->second.tspace)};
}

IdentitySpace certified_identity_space(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options) {
    if (options.mode == EvalMode::randomized) return compute_identity_space(a, n, kind, options);
    EngineOptions o = options;
    if (options.mode == EvalMode::exhaustive) {
        const std::uint64_t tuples = exhaustive_tuple_count(a, n, options);
        if (tuples <= options.max_tuples) return cached_identity_space(a, n, kind, options);
        if (o.generators.tideal.empty() && o.generators.tspace.empty()) {
            auto known = known_generators(a.name());
            if (!known) throw ResourceCeilingError(tuples, options.max_tuples);
            o.generators = std::move(*known);
        }
        o.mode = EvalMode::sandwich;
    } else if (o.generators.tideal.empty() && o.generators.tspace.empty()) {
        auto known = known_generators(a.name());
        if (!known) throw std::invalid_argument("no generators registered for " + a.name() + "; sandwich mode needs them");
        o.generators = std::move(*known);
    }
    if (kind == IdentityKind::plain) {
        // T-space generators only bound central spaces.
        o.generators.tspace.clear();
        if (o.generators.tideal.empty())
            throw ResourceCeilingError(exhaustive_tuple_count(a, n, options), options.max_tuples);
    }
    if (kind == IdentityKind::central && o.generators.tspace.empty()) {
        // A T-ideal alone bounds only the plain space; fall back to evaluation.
        const std::uint64_t tuples = exhaustive_tuple_count(a, n, options);
        if (tuples > options.max_tuples) throw ResourceCeilingError(tuples, options.max_tuples);
        return cached_identity_space(a, n, kind, options);
    }
    return compute_identity_space(a, n, kind, o);
}

// Claims ----------------------------------------------------------------------

namespace {

using Formula = std::function<std::optional<std::string>(int)>;

struct Claim {
    std::vector<std::string> algebras;
    std::string quantity;
    int min_n = 1, max_n = 1000;
    Formula value;
};

struct Lemma {
    std::string id;
    std::string description;
    std::vector<Claim> claims;
};

std::string chi_term(std::int64_t m, const std::vector<int>& parts) {
    std::string s = m == 1 ? "" : std::to_string(m) + " ";
    s += "chi(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

// Parses a character written in n, e.g. "(n)+2(n-1,1)+(n-2,1^2)". Valid
// shapes are merged and printed in reverse lexicographic order; a term that
// is not a partition of n is printed as written so the comparison fails.
Formula chi_formula(const std::string& text) {
    struct Term {
        std::int64_t mult;
        std::vector<std::pair<int, int>> parts;  // (n coefficient, constant), repeated
    };
    std::vector<Term> terms;
    std::size_t i = 0;
    auto number = [&] {
        int v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
        return v;
    };
    while (i < text.size()) {
        if (text[i] == '+') ++i;
        Term t{1, {}};
        if (std::isdigit(static_cast<unsigned char>(text[i]))) t.mult = number();
        if (text[i++] != '(') throw std::logic_error("bad claim formula " + text);
        while (text[i] != ')') {
            if (text[i] == ',') ++i;
            if (text[i] == 'n') {
                ++i;
                int c = 0;
                if (text[i] == '-') {
                    ++i;
                    c = -number();
                }
                t.parts.push_back({1, c});
            } else {
                int v = number();
                int rep = 1;
                if (text[i] == '^') {
                    ++i;
                    rep = number();
                }
                for (int r = 0; r < rep; ++r) t.parts.push_back({0, v});
            }
        }
        ++i;
        terms.push_back(std::move(t));
    }
    return [terms](int n) -> std::optional<std::string> {
        std::vector<std::pair<std::int64_t, std::vector<int>>> evaluated;
        bool valid = true;
        for (const auto& t : terms) {
            std::vector<int> parts;
            int sum = 0;
            for (auto [k, c] : t.parts) {
                parts.push_back(k * n + c);
                sum += parts.back();
            }
            bool ok = sum == n;
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (parts[j] <= 0 || (j && parts[j] > parts[j - 1])) ok = false;
            valid = valid && ok;
            evaluated.push_back({t.mult, parts});
        }
        if (!valid) {
            std::string s;
            for (const auto& [m, p] : evaluated) s += (s.empty() ? "" : " + ") + chi_term(m, p);
            return s;
        }
        CocharacterDecomposition d;
        d.n = n;
        for (const auto& lambda : partitions(n)) {
            std::int64_t m = 0;
            for (const auto& [mult, p] : evaluated)
                if (p == lambda.parts()) m += mult;
            d.mults.emplace_back(lambda, m);
        }
        return d.to_string();
    };
}

Formula constant(std::int64_t v) {
    return [v](int) { return std::optional<std::string>(std::to_string(v)); };
}

Formula integer(std::function<std::int64_t(std::int64_t)> f) {
    return [f](int n) { return std::optional<std::string>(std::to_string(f(n))); };
}

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Claim claim(std::vector<std::string> algebras, std::string quantity, Formula f, int min_n = 1, int max_n = 1000) {
    return Claim{std::move(algebras), std::move(quantity), min_n, max_n, std::move(f)};
}

Claim tideal_claim(std::vector<std::string> algebras) {
    return claim(std::move(algebras), "Id", [](int) { return std::optional<std::string>("equal"); });
}

const std::vector<Lemma>& lemmas() {
    static const std::vector<Lemma> all = [] {
        std::vector<Lemma> v;
        const auto pow2 = [](int e) { return e < 0 ? std::int64_t{0} : std::int64_t{1} << e; };
        v.push_back({"example-codims",
                     "codimensions of UT2 and the Grassmann algebra (G6 and G4 agree with it in low degree)",
                     {claim({"UT2"}, "c_n", integer([pow2](std::int64_t n) { return pow2(n - 1) * (n - 2) + 2; })),
                      claim({"UT2"}, "c_n_z", integer([pow2](std::int64_t n) { return pow2(n - 1) * (n - 2) + 2; })),
                      claim({"UT2"}, "delta_n", constant(0)),
                      claim({"G6"}, "c_n", integer([pow2](std::int64_t n) { return pow2(n - 1); }), 1, 7),
                      claim({"G6"}, "c_n_z", integer([pow2](std::int64_t n) { return pow2(n - 2); }), 2, 7),
                      claim({"G6"}, "delta_n", integer([pow2](std::int64_t n) { return pow2(n - 2); }), 2, 7),
                      claim({"G4"}, "c_n", integer([pow2](std::int64_t n) { return pow2(n - 1); }), 1, 5),
                      claim({"G4"}, "c_n_z", integer([pow2](std::int64_t n) { return pow2(n - 2); }), 2, 4),
                      claim({"G4"}, "delta_n", integer([pow2](std::int64_t n) { return pow2(n - 2); }), 2, 4)}});
        v.push_back({"colengths1",
                     "Id(A1), Id(A1*) and colengths of A1, A1*, A1+A1*",
                     {tideal_claim({"A1", "A1s"}), claim({"A1", "A1s"}, "l_n", constant(2), 4),
                      claim({"A1+A1s"}, "l_n", constant(3), 4)}});
        v.push_back({"tideala6", "T-ideal generators of A2, A4, A4*, A5, A6",
                     {tideal_claim({"A2", "A4", "A4s", "A5", "A6"})}});
        v.push_back({"N4", "cocharacter of N4",
                     {claim({"N4"}, "chi_n", chi_formula("(n)+2(n-1,1)+2(n-2,1^2)+(n-2,2)+(n-3,2,1)"), 5),
                      claim({"N4"}, "l_n", constant(7), 5)}});
        v.push_back({"A7", "T-ideals and colengths of A7, A8, A8*, A9, A9*",
                     {tideal_claim({"A7", "A8", "A8s", "A9", "A9s"}), claim({"A7"}, "l_n", constant(7), 5),
                      claim({"A8", "A8s"}, "l_n", constant(8), 5), claim({"A9", "A9s"}, "l_n", constant(10), 5)}});
        v.push_back({"A10", "T-ideal and codimensions of A10, A10*",
                     {tideal_claim({"A10", "A10s"}),
                      claim({"A10", "A10s"}, "c_n", integer([](std::int64_t n) { return n * (n - 1) * (n - 2); }), 3)}});
        v.push_back({"G2k", "T-ideal and cocharacter of G_2k",
                     {tideal_claim({"G4", "G6"}),
                      claim({"G4"}, "chi_n", chi_formula("(n)+(n-1,1)+(n-2,1^2)+(n-3,1^3)+(n-4,1^4)"), 5),
                      claim({"G4"}, "l_n", constant(5), 5),
                      claim({"G6"}, "chi_n",
                            chi_formula("(n)+(n-1,1)+(n-2,1^2)+(n-3,1^3)+(n-4,1^4)+(n-5,1^5)+(n-6,1^6)"), 7),
                      claim({"G6"}, "l_n", constant(7), 7)}});
        v.push_back({"g4barra1", "T-ideal, codimensions and a basis modulo identities for G4bar",
                     {tideal_claim({"G4bar", "G4bars"}),
                      claim({"G4bar", "G4bars"}, "c_n",
                            integer([](std::int64_t n) { return n + (n - 2) * binom(n, 2) + (n - 4) * binom(n, 4); })),
                      claim({"G4bar", "G4bars"}, "basis", [](int) { return std::optional<std::string>("basis"); },
                            5)}});
        v.push_back({"idealg4a1", "T-ideals and cocharacters of G4+A1, G4+A1*",
                     {tideal_claim({"G4+A1s", "G4+A1"}),
                      claim({"G4+A1s", "G4+A1"}, "chi_n",
                            chi_formula("(n)+2(n-1,1)+(n-2,1^2)+(n-3,1^3)+(n-4,1^4)"), 5),
                      claim({"G4+A1s", "G4+A1"}, "l_n", constant(6), 5)}});
        v.push_back({"charac", "cocharacters of direct sums",
                     {claim({"A4+A1s", "A4s+A1"}, "chi_n", chi_formula("(n)+3(n-1,1)+(n-2,1^2)+(n-2,2)"), 4),
                      claim({"A4+A1", "A4+A1s"}, "l_n", constant(6), 4),
                      claim({"A4+A2", "A4s+A2", "A5+A2", "A6+A2"}, "chi_n",
                            chi_formula("(n)+3(n-1,1)+2(n-2,1^2)+(n-2,2)"), 4),
                      claim({"A4+A2", "A4s+A2", "A5+A2", "A6+A2"}, "l_n", constant(7), 4),
                      claim({"A4+A4s", "A4+A5", "A4+A6", "A4s+A5", "A4s+A6", "A5+A6"}, "chi_n",
                            chi_formula("(n)+4(n-1,1)+2(n-2,1^2)+2(n-2,2)"), 4),
                      claim({"A4+A4s", "A4+A5", "A4+A6", "A4s+A5", "A4s+A6", "A5+A6"}, "l_n", constant(9), 4),
                      claim({"G4+A1+A1s"}, "chi_n", chi_formula("(n)+3(n-1,1)+(n-2,1^2)+(n-3,1^3)+(n-4,1^4)"), 5),
                      claim({"G4+A1+A1s"}, "l_n", constant(7), 5),
                      claim({"G4+A4", "G4+A4s"}, "chi_n",
                            chi_formula("(n)+3(n-1,1)+2(n-2,1^2)+(n-2,2)+(n-3,1^3)+(n-4,1^4)"), 5),
                      claim({"G4+A4", "G4+A4s"}, "l_n", constant(9), 5)}});
        v.push_back({"remark-central", "algebras with zero center: central cocharacter equals the cocharacter",
                     {claim({"A1", "A1s"}, "chi_n_z", chi_formula("(n)+(n-1,1)"), 2),
                      claim({"A1", "A1s"}, "l_n_z", constant(2), 4), claim({"A1+A1s"}, "l_n_z", constant(3), 4),
                      claim({"A4", "A4s"}, "l_n_z", constant(5), 4),
                      claim({"A1", "A1s", "A1+A1s", "A4", "A4s"}, "l_n_delta", constant(0))}});
        v.push_back({"central1", "central cocharacters of A2, N4, G_2k",
                     {claim({"A2"}, "chi_n", chi_formula("(n)")), claim({"A2"}, "chi_n_z", chi_formula("(n)")),
                      claim({"A2"}, "l_n_z", constant(1), 3), claim({"A2"}, "l_n_delta", constant(2), 3),
                      claim({"N4"}, "chi_n_z", chi_formula("(n)+(n-1,1)+(n-2,1^2)"), 4),
                      claim({"N4"}, "l_n_z", constant(3), 4), claim({"N4"}, "l_n_delta", constant(4), 5),
                      claim({"G4"}, "chi_n_z", chi_formula("(n)+(n-1,1^2)"), 3),
                      claim({"G4"}, "l_n_z", constant(2), 3), claim({"G4"}, "l_n_delta", constant(3), 5),
                      claim({"G6"}, "chi_n_z", chi_formula("(n)+(n-1,1^2)+(n-2,1^4)"), 5),
                      claim({"G6"}, "l_n_z", constant(3), 5), claim({"G6"}, "l_n_delta", constant(4), 7)}});
        v.push_back({"central-a5a6", "central and proper central cocharacters of A5, A6",
                     {claim({"A5", "A6"}, "chi_n_z", chi_formula("(n)+2(n-1,1)"), 4),
                      claim({"A5", "A6"}, "chi_n_delta", chi_formula("(n-2,2)+(n-2,1^2)"), 4),
                      claim({"A5", "A6"}, "l_n_z", constant(3), 4), claim({"A5", "A6"}, "l_n_delta", constant(2), 4)}});
        v.push_back({"centralcolength", "central colengths of A2+A1, A2+A1*, G4+A1, G4+A1*",
                     {claim({"A2+A1", "A2+A1s"}, "chi_n_z", chi_formula("(n)+(n-1,1)"), 3),
                      claim({"G4+A1", "G4+A1s"}, "chi_n_z", chi_formula("(n)+(n-1,1)+(n-1,1^2)"), 4),
                      claim({"A2+A1", "A2+A1s"}, "l_n_z", constant(2), 3),
                      claim({"A2+A1", "A2+A1s"}, "l_n_delta", constant(2), 3),
                      claim({"G4+A1", "G4+A1s"}, "l_n_z", constant(3), 4),
                      claim({"G4+A1", "G4+A1s"}, "l_n_delta", constant(3), 4)}});
        return v;
    }();
    return all;
}

// Basis candidates for G4bar modulo identities: x1..xn; the n-1 words
// x_I [x_n, x_t]; x_I [x_i, x_j] x_k with i < j; x_I [x_l, x_m][x_p, x_q] x_r
// with l < m < p < q, where x_I is the product of the remaining variables in
// increasing order.
std::vector<MultilinearPolynomial> g4bar_basis_candidates(int n) {
    std::vector<MultilinearPolynomial> out;
    auto rest = [n](const std::vector<int>& used) {
        std::vector<int> r;
        for (int v = 0; v < n; ++v)
            if (std::find(used.begin(), used.end(), v) == used.end()) r.push_back(v);
        return r;
    };
    auto word = [](const std::vector<int>& vars) {
        FreePolynomial f = FreePolynomial::constant(1);
        for (int v : vars) f = f * FreePolynomial::monomial({v});
        return f;
    };
    auto com = [](int a, int b) { return commutator(std::vector<int>{a, b}); };
    auto add = [&](const FreePolynomial& f) { out.push_back(MultilinearPolynomial::from_free(f)); };

    add(word(rest({})));
    for (int t = 0; t < n - 1; ++t) add(word(rest({n - 1, t})) * com(n - 1, t));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (k != i && k != j) add(word(rest({i, j, k})) * com(i, j) * FreePolynomial::monomial({k}));
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m)
            for (int p = m + 1; p < n; ++p)
                for (int q = p + 1; q < n; ++q)
                    for (int r = 0; r < n; ++r)
                        if (r != l && r != m && r != p && r != q)
                            add(word(rest({l, m, p, q, r})) * com(l, m) * com(p, q) * FreePolynomial::monomial({r}));
    return out;
}

struct Computed {
    std::string value;
    std::string certificate;
};

class Evaluator {
public:
    explicit Evaluator(const EngineOptions& options) : options_(options) {}

    Computed compute(const std::string& expr, const std::string& quantity, int n) {
        const Algebra a = parse_algebra_expression(expr);
        if (quantity == "Id") return tideal(a, expr, n);
        if (quantity == "basis") return basis(a, n);
        const IdentitySpace& plain = space(a, expr, n, IdentityKind::plain);
        if (quantity == "c_n") return {std::to_string(plain.codimension()), plain.certificate.to_string()};
        const IdentitySpace& central = space(a, expr, n, IdentityKind::central);
        const std::string both = plain.certificate.to_string() + "/" + central.certificate.to_string();
        if (quantity == "c_n_z") return {std::to_string(central.codimension()), central.certificate.to_string()};
        if (quantity == "delta_n") return {std::to_string(plain.codimension() - central.codimension()), both};

        ModuleCharacter chi = quotient_character(plain);
        const ModuleCharacter chi_z = quotient_character(central);
        CocharVariant variant = CocharVariant::plain;
        if (quantity.ends_with("_z")) {
            chi = chi_z;
            variant = CocharVariant::central;
        } else if (quantity.ends_with("_delta")) {
            for (auto& [rho, t] : chi) t -= chi_z.at(rho);
            variant = CocharVariant::proper;
        }
        const CocharacterDecomposition d = decompose(chi, n, variant);
        const std::string cert = variant == CocharVariant::plain ? plain.certificate.to_string() : both;
        if (quantity.starts_with("chi")) return {d.to_string(), cert};
        return {std::to_string(d.colength()), cert};
    }

private:
    EngineOptions options_;
    std::map<std::tuple<std::string, int, IdentityKind>, IdentitySpace> spaces_;

    const IdentitySpace& space(const Algebra& a, const std::string& expr, int n, IdentityKind kind) {
        auto key = std::make_tuple(expr, n, kind);
        auto it = spaces_.find(key);
        if (it == spaces_.end()) it = spaces_.emplace(key, certified_identity_space(a, n, kind, options_)).first;
        return it->second;
    }

    Computed tideal(const Algebra& a, const std::string& expr, int n) {
        auto gens = known_generators(expr);
        if (!gens) throw std::logic_error("no generators registered for " + expr);
        const auto v = verify_tideal(a, gens->tideal, n, n, options_, gens->id);
        const auto& r = v.front();
        if (r.certified_equal) return {"equal", r.certificate.to_string()};
        return {"gap(lower=" + std::to_string(r.lower) + ",upper=" + std::to_string(r.upper) + ")" +
                    (r.detail.empty() ? "" : ": " + r.detail),
                "sandwich(" + gens->id + ")"};
    }

    Computed basis(const Algebra& a, int n) {
        const IdentitySpace& s = space(a, a.name(), n, IdentityKind::plain);
        const auto cands = g4bar_basis_candidates(n);
        std::vector<RationalVector> images;
        for (const auto& f : cands) {
            const RationalVector v = f.to_vector();
            RationalVector img(s.constraints.dim());
            for (std::size_t i = 0; i < img.size(); ++i) img[i] = dot(s.constraints.basis()[i], v);
            images.push_back(std::move(img));
        }
        const std::size_t rank = rank_of(images);
        const bool is_basis = rank == cands.size() && rank == s.codimension();
        return {is_basis ? "basis"
                         : "not a basis (" + std::to_string(cands.size()) + " polynomials, rank " +
                               std::to_string(rank) + ", c_n " + std::to_string(s.codimension()) + ")",
                s.certificate.to_string()};
    }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::vector<LemmaInfo> lemma_ids() {
    std::vector<LemmaInfo> out;
    for (const auto& l : lemmas()) out.push_back({l.id, l.description});
    return out;
}

Table run_table(const std::string& lemma_id, int n_min, int n_max, const EngineOptions& options) {
    const auto& all = lemmas();
    auto it = std::find_if(all.begin(), all.end(), [&](const Lemma& l) { return l.id == lemma_id; });
    if (it == all.end()) throw UnknownLemmaError("unknown lemma '" + lemma_id + "'");
    if (n_min < 1 || n_max < n_min) throw std::invalid_argument("bad degree range");
    Table t{it->id, it->description, {}};
    Evaluator eval(options);
    for (const auto& c : it->claims)
        for (const auto& expr : c.algebras)
            for (int n = n_min; n <= n_max; ++n) {
                TableRow row{it->id, expr, c.quantity, n, "", "", "", ""};
                const bool applies = n >= c.min_n && n <= c.max_n;
                if (applies) row.claimed = c.value(n).value_or("");
                try {
                    const Computed r = eval.compute(expr, c.quantity, n);
                    row.computed = r.value;
                    row.certificate = r.certificate;
                    row.status = !applies ? "N/A" : (row.computed == row.claimed ? "MATCH" : "MISMATCH");
                } catch (const std::exception& e) {
                    row.computed = e.what();
                    row.status = "ERROR";
                }
                t.rows.push_back(std::move(row));
            }
    return t;
}

std::vector<TidealVerdict> verify_tideal(const Algebra& a, const std::vector<MultilinearPolynomial>& generators,
                                         int n_min, int n_max, const EngineOptions& options,
                                         const std::string& generators_id) {
    if (generators.empty()) throw std::invalid_argument("no generators given");
    std::vector<TidealVerdict> out;
    EngineOptions o = options;
    o.mode = EvalMode::sandwich;
    o.generators = GeneratorSet{generators_id, generators, {}};
    for (int n = n_min; n <= n_max; ++n) {
        TidealVerdict v;
        v.n = n;
        try {
            const IdentitySpace s = identity_space(a, n, o);
            v.certified_equal = true;
            v.lower = v.upper = s.dim();
            v.codimension = s.codimension();
            v.certificate = s.certificate;
        } catch (const SandwichGapError& e) {
            v.lower = e.lower;
            v.upper = e.upper;
            v.detail = e.what();
            v.certificate.kind = EvalMode::sandwich;
            v.certificate.generators_id = generators_id;
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::string RunManifest::to_comment_lines() const {
    std::ostringstream os;
    os << "# command: " << command_line << "\n"
       << "# seed: " << seed << "\n"
       << "# mode: " << mode << "\n"
       << "# max_tuples: " << max_tuples << "\n"
       << "# catalog_version: " << catalog_version << "\n";
    return os.str();
}

std::string to_csv(const Table& t) {
    std::string s = "lemma,algebra,quantity,n,computed,claimed,status,certificate\n";
    for (const auto& r : t.rows)
        s += csv_field(r.lemma) + "," + csv_field(r.algebra) + "," + r.quantity + "," + std::to_string(r.n) + "," +
             csv_field(r.computed) + "," + csv_field(r.claimed) + "," + r.status + "," + csv_field(r.certificate) +
             "\n";
    return s;
}

std::string to_json(const Table& t, const RunManifest& m) {
    nlohmann::ordered_json doc;
    doc["manifest"] = {{"command", m.command_line}, {"seed", m.seed}, {"mode", m.mode},
                       {"max_tuples", m.max_tuples}, {"catalog_version", m.catalog_version}};
    doc["lemma"] = t.lemma_id;
    doc["description"] = t.description;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"algebra", r.algebra},
                        {"quantity", r.quantity},
                        {"n", r.n},
                        {"computed", r.computed},
                        {"claimed", r.claimed},
                        {"status", r.status},
                        {"certificate", r.certificate}});
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace picalc
