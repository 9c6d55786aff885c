#include "picalc/structure.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include <json.hpp>

#include "picalc/catalog.hpp"
#include "picalc/exclusion_sets_data.hpp"
#include "picalc/permutation.hpp"
#include "picalc/tables.hpp"

namespace picalc {

namespace {

bool nilpotent_subspace(const Algebra& a, const Subspace& s) {
    Subspace power = s;
    for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
        if (power.dim() == 0) return true;
        Subspace next = product_span(a, power, s);
        if (next.dim() == power.dim() && power.contains(next)) return false;
        power = std::move(next);
    }
    return power.dim() == 0;
}

}  // namespace

Subspace jacobson_radical(const Algebra& a) {
    const std::size_t d = a.dim();
    // t_k = tr L_{b_k}; G_ij = tr L_{b_i b_j} = sum_k gamma_ijk t_k. On the
    // unitization the form also pairs x with 1, which adds the row t.
    RationalVector t(d);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m)
            for (const auto& term : a.basis_product(k, m))
                if (term.index == m) t[k] += term.coeff;
    Subspace rows(d);
    if (!is_zero(t)) rows.insert(t);
    for (std::size_t j = 0; j < d; ++j) {
        RationalVector g(d);
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& term : a.basis_product(i, j)) g[i] += term.coeff * t[term.index];
        if (!is_zero(g)) rows.insert(std::move(g));
    }
    Subspace radical = rows.annihilator();

    const Subspace whole = Subspace::full(d);
    if (!radical.contains(product_span(a, whole, radical)) || !radical.contains(product_span(a, radical, whole)))
        throw RadicalNotNilpotentError("trace-form kernel of " + a.name() + " is not a two-sided ideal");
    if (!nilpotent_subspace(a, radical))
        throw RadicalNotNilpotentError("trace-form kernel of " + a.name() + " is not nilpotent");
    return radical;
}

const Subspace& PeirceDecomposition::component(int left, int right) const {
    if (left == 1) return right == 1 ? j11 : j10;
    return right == 1 ? j01 : j00;
}

PeirceDecomposition peirce(const Algebra& a, const AlgebraElement& u) {
    if (u.size() != a.dim()) throw std::invalid_argument("idempotent has wrong dimension");
    if (a.multiply(u, u) != u) throw NotIdempotentError("element is not idempotent in " + a.name());
    PeirceDecomposition p;
    p.idempotent = u;
    p.radical = jacobson_radical(a);
    if (u.is_zero() || p.radical.contains(u.coords))
        throw NotIdempotentError("idempotent lies in the radical of " + a.name());

    const std::size_t d = a.dim();
    p.j11 = p.j10 = p.j01 = p.j00 = Subspace(d);
    for (const auto& v : p.radical.basis()) {
        const AlgebraElement j(v);
        const AlgebraElement uj = a.multiply(u, j);
        const AlgebraElement ju = a.multiply(j, u);
        const AlgebraElement uju = a.multiply(uj, u);
        const AlgebraElement c11 = uju;
        const AlgebraElement c10 = uj - uju;
        const AlgebraElement c01 = ju - uju;
        const AlgebraElement c00 = j - uj - ju + uju;
        if (!c11.is_zero()) p.j11.insert(c11.coords);
        if (!c10.is_zero()) p.j10.insert(c10.coords);
        if (!c01.is_zero()) p.j01.insert(c01.coords);
        if (!c00.is_zero()) p.j00.insert(c00.coords);
    }

    if (p.j11.dim() + p.j10.dim() + p.j01.dim() + p.j00.dim() != p.radical.dim())
        throw std::logic_error("Peirce components do not form a direct sum");
    for (int l = 0; l <= 1; ++l)
        for (int r = 0; r <= 1; ++r)
            for (const auto& v : p.component(l, r).basis()) {
                const AlgebraElement x(v);
                const AlgebraElement expect_left = l == 1 ? x : AlgebraElement(d);
                const AlgebraElement expect_right = r == 1 ? x : AlgebraElement(d);
                if (a.multiply(u, x) != expect_left || a.multiply(x, u) != expect_right)
                    throw std::logic_error("Peirce membership rule violated");
                if (!p.radical.contains(v)) throw std::logic_error("Peirce component leaves the radical");
            }
    for (int i = 0; i <= 1; ++i)
        for (int k = 0; k <= 1; ++k)
            for (int r = 0; r <= 1; ++r)
                for (int s = 0; s <= 1; ++s) {
                    const Subspace prod = product_span(a, p.component(i, k), p.component(r, s));
                    if (k != r ? prod.dim() != 0 : !p.component(i, s).contains(prod))
                        throw std::logic_error("Peirce product containment violated");
                }
    return p;
}

PeirceDecomposition peirce(const Algebra& a) {
    if (!a.unit_idempotent()) throw NotIdempotentError(a.name() + " has no unit idempotent");
    return peirce(a, *a.unit_idempotent());
}

std::vector<PredicateResult> radical_predicates(const Algebra& a, const PeirceDecomposition& p) {
    auto mul = [&](const Subspace& x, const Subspace& y) { return product_span(a, x, y); };
    auto com = [&](const Subspace& x, const Subspace& y) { return commutator_span(a, x, y); };
    // Span of b c + c b over basis pairs of s.
    auto anti = [&](const Subspace& s) {
        Subspace out(a.dim());
        const auto& b = s.basis();
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i; j < b.size(); ++j) {
                const AlgebraElement x(b[i]), y(b[j]);
                const AlgebraElement v = a.multiply(x, y) + a.multiply(y, x);
                if (!v.is_zero()) out.insert(v.coords);
            }
        return out;
    };
    const Subspace c11 = com(p.j11, p.j11);
    const Subspace c11sq = mul(c11, c11);
    const Subspace j00sq = mul(p.j00, p.j00);
    // Products are bilinear, so spans of products of spans equal spans of
    // products of basis elements.
    std::vector<PredicateResult> out;
    auto add = [&](std::string name, const Subspace& s) { out.push_back({std::move(name), s.dim()}); };
    add("J10", p.j10);
    add("J01", p.j01);
    add("[J11,J11]", c11);
    add("[J11,J11,J11]", com(c11, p.j11));
    add("J10J00", mul(p.j10, p.j00));
    add("J00J01", mul(p.j00, p.j01));
    add("J01J10", mul(p.j01, p.j10));
    add("J10J01", mul(p.j10, p.j01));
    add("J10J00^2", mul(p.j10, j00sq));
    add("J00^2J01", mul(j00sq, p.j01));
    add("[J11,J11][J11,J11]J10", mul(c11sq, p.j10));
    add("J01[J11,J11][J11,J11]", mul(p.j01, c11sq));
    add("J10{J00,J00}", mul(p.j10, anti(p.j00)));
    add("{J00,J00}J01", mul(anti(p.j00), p.j01));
    return out;
}

const PredicateResult& find_predicate(const std::vector<PredicateResult>& preds, const std::string& name) {
    for (const auto& p : preds)
        if (p.name == name) return p;
    throw std::out_of_range("unknown predicate " + name);
}

std::string to_string(VarietyAnswer v) {
    switch (v) {
        case VarietyAnswer::yes: return "yes";
        case VarietyAnswer::no: return "no";
        case VarietyAnswer::undecided: return "undecided";
    }
    return "?";
}

namespace {

// e_j minus the pivot combination that makes it orthogonal to every row of
// the reduced constraint basis.
MultilinearPolynomial witness_from_row(const IdentitySpace& ra, RationalVector q) {
    ra.constraints.reduce(q);
    std::size_t j = 0;
    while (j < q.size() && sgn(q[j]) == 0) ++j;
    if (j == q.size()) throw std::logic_error("witness requested for a contained row");
    RationalVector f(q.size());
    f[j] = 1;
    const auto& rows = ra.constraints.basis();
    const auto& piv = ra.constraints.pivots();
    for (std::size_t i = 0; i < rows.size(); ++i) f[piv[i]] -= rows[i][j];
    return MultilinearPolynomial::from_vector(ra.n, f);
}

}  // namespace

VarietyResult variety_contains(const Algebra& a, const Algebra& q, int max_n, const EngineOptions& options) {
    if (max_n < 1) throw std::invalid_argument("degree bound must be at least 1");
    VarietyResult out;
    out.degree = max_n;
    const bool same = to_text(a) == to_text(q);
    for (int n = 1; n <= max_n; ++n) {
        DegreeCheck check;
        check.n = n;
        if (same) {
            // Reflexivity: Q is A.
            check.answer = VarietyAnswer::yes;
            out.checks.push_back(check);
            continue;
        }
        std::optional<IdentitySpace> owned;
        const IdentitySpace* ra = nullptr;
        EngineOptions exact = options;
        exact.mode = EvalMode::exhaustive;
        exact.generators = {};
        if (exhaustive_tuple_count(a, n, exact) <= options.max_tuples) {
            ra = &cached_identity_space(a, n, IdentityKind::plain, exact);
        } else {
            try {
                owned = certified_identity_space(a, n, IdentityKind::plain, exact);
                ra = &*owned;
            } catch (const ResourceCeilingError&) {
            } catch (const SandwichGapError&) {
            }
        }
        if (!ra) {
            // Without an exact Id(A) a missing row proves nothing.
            check.answer = VarietyAnswer::undecided;
            check.a_certificate.kind = EvalMode::randomized;
            out.checks.push_back(check);
            if (out.answer == VarietyAnswer::yes) out.answer = VarietyAnswer::undecided;
            continue;
        }
        check.a_certificate = ra->certificate;

        std::optional<RationalVector> outside;
        if (exhaustive_tuple_count(q, n, exact) <= options.max_tuples) {
            const IdentitySpace& rq = cached_identity_space(q, n, IdentityKind::plain, exact);
            check.q_certificate = rq.certificate;
            for (const auto& row : rq.constraints.basis())
                if (!ra->constraints.contains(row)) {
                    outside = row;
                    break;
                }
            check.answer = outside ? VarietyAnswer::no : VarietyAnswer::yes;
        } else {
            EngineOptions random = options;
            random.mode = EvalMode::randomized;
            const std::uint64_t used = for_each_constraint(q, n, IdentityKind::plain, random, [&](const RationalVector& r) {
                if (ra->constraints.contains(r)) return true;
                outside = r;
                return false;
            });
            check.q_certificate.kind = EvalMode::randomized;
            check.q_certificate.seed = random.seed;
            check.q_certificate.samples = static_cast<std::size_t>(used);
            check.answer = outside ? VarietyAnswer::no : VarietyAnswer::undecided;
        }
        out.checks.push_back(check);
        if (outside) {
            out.answer = VarietyAnswer::no;
            out.degree = n;
            out.witness = witness_from_row(*ra, std::move(*outside));
            return out;
        }
        if (check.answer == VarietyAnswer::undecided) out.answer = VarietyAnswer::undecided;
    }
    return out;
}

std::string to_string(ClassificationTarget t) {
    switch (t) {
        case ClassificationTarget::colength_le6: return "colength<=6";
        case ClassificationTarget::colength_eq7: return "colength=7";
        case ClassificationTarget::central_colength_le2: return "central-colength<=2";
    }
    return "?";
}

ClassificationTarget parse_classification_target(const std::string& text) {
    if (text == "l6" || text == "colength<=6") return ClassificationTarget::colength_le6;
    if (text == "l7" || text == "colength=7") return ClassificationTarget::colength_eq7;
    if (text == "lz2" || text == "central-colength<=2") return ClassificationTarget::central_colength_le2;
    throw std::invalid_argument("unknown classification target '" + text + "' (expected l6, l7 or lz2)");
}

std::string ExclusionResult::status() const {
    switch (result.answer) {
        case VarietyAnswer::no: return "excluded";
        case VarietyAnswer::yes: return "contained";
        case VarietyAnswer::undecided: return "undecided(" + std::to_string(result.degree) + ")";
    }
    return "?";
}

namespace {

struct ExclusionData {
    std::map<std::string, std::vector<std::string>> sets;
    std::map<std::string, std::vector<std::string>> target_sets;
    std::map<std::string, std::vector<std::string>> classes;
};

const ExclusionData& exclusion_data() {
    static const ExclusionData data = [] {
        ExclusionData d;
        const auto doc = nlohmann::json::parse(detail::exclusion_sets_json);
        for (const auto& [name, members] : doc.at("sets").items())
            d.sets[name] = members.get<std::vector<std::string>>();
        for (const auto& [target, spec] : doc.at("targets").items()) {
            const auto& refs = spec.contains("exclude") ? spec.at("exclude") : spec.at("contain_one_of");
            std::vector<std::string> members;
            for (const auto& ref : refs)
                for (const auto& m : d.sets.at(ref.get<std::string>()))
                    if (std::find(members.begin(), members.end(), m) == members.end()) members.push_back(m);
            d.target_sets[target] = std::move(members);
            d.classes[target] = spec.at("classes").get<std::vector<std::string>>();
        }
        return d;
    }();
    return data;
}

std::string target_key(ClassificationTarget t) {
    switch (t) {
        case ClassificationTarget::colength_le6: return "l6";
        case ClassificationTarget::colength_eq7: return "l7";
        case ClassificationTarget::central_colength_le2: return "lz2";
    }
    return "";
}

const Algebra& materialize(const std::string& expr) {
    static std::mutex mu;
    static std::map<std::string, Algebra> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(expr);
    if (it == cache.end()) it = cache.emplace(expr, parse_algebra_expression(expr)).first;
    return it->second;
}

// P_n ∩ Id(A) through an exact route, or nothing.
std::optional<Subspace> exact_constraints(const Algebra& a, int n, const EngineOptions& options) {
    EngineOptions exact = options;
    exact.mode = EvalMode::exhaustive;
    exact.generators = {};
    try {
        if (exhaustive_tuple_count(a, n, exact) <= options.max_tuples)
            return cached_identity_space(a, n, IdentityKind::plain, exact).constraints;
        return certified_identity_space(a, n, IdentityKind::plain, exact).constraints;
    } catch (const ResourceCeilingError&) {
    } catch (const SandwichGapError&) {
    }
    return std::nullopt;
}

std::string strip_nilpotent(const std::string& cls) {
    if (cls == "N") return "";
    if (cls.size() > 2 && cls.compare(cls.size() - 2, 2, "+N") == 0) return cls.substr(0, cls.size() - 2);
    return cls;
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& exclusion_sets() { return exclusion_data().sets; }

std::vector<std::string> target_set(ClassificationTarget t) { return exclusion_data().target_sets.at(target_key(t)); }

std::vector<std::string> target_classes(ClassificationTarget t) { return exclusion_data().classes.at(target_key(t)); }

ClassificationReport classify(const Algebra& a, ClassificationTarget target, int max_n, const EngineOptions& options) {
    ClassificationReport rep;
    rep.target = target;
    rep.certificate_degree = max_n;
    for (const auto& name : target_set(target))
        rep.results.push_back({name, variety_contains(a, materialize(name), max_n, options)});

    const auto ida = exact_constraints(a, max_n, options);
    auto matches = [&](const std::string& cls) {
        const std::string base = strip_nilpotent(cls);
        if (base.empty()) return is_nilpotent(a).nilpotent;
        if (!ida) return false;
        const auto idb = exact_constraints(materialize(base), max_n, options);
        return idb && *idb == *ida;
    };

    if (target == ClassificationTarget::colength_eq7) {
        for (const auto& r : rep.results) {
            if (r.result.answer != VarietyAnswer::no) rep.not_excluded.push_back(r.algebra);
            if (r.result.answer == VarietyAnswer::yes && matches(r.algebra)) {
                rep.candidate_classes.push_back(r.algebra + "+N");
                rep.matching_classes.push_back(r.algebra + "+N");
            }
        }
        rep.verdict = rep.candidate_classes.empty() ? "outside" : "inside";
        return rep;
    }

    for (const auto& r : rep.results)
        if (r.result.answer != VarietyAnswer::no) rep.not_excluded.push_back(r.algebra);
    if (rep.not_excluded.empty()) {
        rep.verdict = "inside";
        rep.candidate_classes = target_classes(target);
        for (const auto& cls : rep.candidate_classes)
            if (matches(cls)) rep.matching_classes.push_back(cls);
    } else {
        rep.verdict = "outside";
    }
    return rep;
}

}  // namespace picalc
