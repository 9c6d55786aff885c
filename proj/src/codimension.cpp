#include "picalc/codimension.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <unordered_set>

#include "picalc/permutation.hpp"

namespace picalc {

std::string to_string(IdentityKind kind) { return kind == IdentityKind::plain ? "plain" : "central"; }

std::string to_string(EvalMode mode) {
    switch (mode) {
        case EvalMode::exhaustive: return "exhaustive";
        case EvalMode::randomized: return "randomized";
        case EvalMode::sandwich: return "sandwich";
    }
    return "?";
}

EvalMode parse_eval_mode(const std::string& text) {
    if (text == "exhaustive") return EvalMode::exhaustive;
    if (text == "randomized") return EvalMode::randomized;
    if (text == "sandwich") return EvalMode::sandwich;
    throw std::invalid_argument("unknown mode: " + text);
}

std::string Certificate::to_string() const {
    switch (kind) {
        case EvalMode::exhaustive: return "exhaustive";
        case EvalMode::randomized:
            return "randomized(seed=" + std::to_string(seed) + ",samples=" + std::to_string(samples) + ")";
        case EvalMode::sandwich: return "sandwich(" + generators_id + ")";
    }
    return "?";
}

ResourceCeilingError::ResourceCeilingError(std::uint64_t t, std::uint64_t c)
    : std::runtime_error("exhaustive evaluation needs " + std::to_string(t) + " tuples, ceiling is " +
                         std::to_string(c) + "; use --mode randomized|sandwich or raise --max-tuples"),
      tuples(t),
      ceiling(c) {}

SandwichGapError::SandwichGapError(std::size_t lo, std::size_t up, const std::string& detail)
    : std::runtime_error("sandwich gap: lower bound dim " + std::to_string(lo) + ", upper bound dim " +
                         std::to_string(up) + (detail.empty() ? "" : " (" + detail + ")")),
      lower(lo),
      upper(up) {}

bool IdentitySpace::contains(const RationalVector& f) const {
    for (const auto& row : constraints.basis())
        if (sgn(dot(row, f)) != 0) return false;
    return true;
}

namespace {

struct Overflow {};

// Checked arithmetic on the two coefficient types.
inline void mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
    std::int64_t p;
    if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc)) throw Overflow{};
}
inline void mul_add(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void mul_sub(std::int64_t& acc, std::int64_t a, std::int64_t b) {
    std::int64_t p;
    if (__builtin_mul_overflow(a, b, &p) || __builtin_sub_overflow(acc, p, &acc)) throw Overflow{};
}
inline void mul_sub(Rational& acc, const Rational& a, const Rational& b) { acc -= a * b; }
inline bool nonzero(std::int64_t x) { return x != 0; }
inline bool nonzero(const Rational& x) { return sgn(x) != 0; }

template <class T>
struct Entry {
    std::uint32_t index;
    T value;
};

// Right multiplication by a fixed element: row i lists (k, M[i][k]) with
// b_i * a = sum_k M[i][k] b_k.
template <class T>
struct RightOperator {
    std::vector<Entry<T>> coords;
    std::vector<std::vector<Entry<T>>> rows;
};

template <class T>
T convert(const Rational& q);
template <>
std::int64_t convert<std::int64_t>(const Rational& q) {
    return q.get_num().get_si();
}
template <>
Rational convert<Rational>(const Rational& q) {
    return q;
}

template <class T>
RightOperator<T> basis_operator(const Algebra& a, std::size_t j) {
    RightOperator<T> op;
    op.coords.push_back({static_cast<std::uint32_t>(j), T(1)});
    op.rows.resize(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (const auto& t : a.basis_product(i, j))
            op.rows[i].push_back({static_cast<std::uint32_t>(t.index), convert<T>(t.coeff)});
    return op;
}

template <class T>
RightOperator<T> element_operator(const Algebra& a, const std::vector<std::int64_t>& coords) {
    const std::size_t d = a.dim();
    RightOperator<T> op;
    for (std::size_t j = 0; j < d; ++j)
        if (coords[j] != 0) op.coords.push_back({static_cast<std::uint32_t>(j), T(coords[j])});
    op.rows.resize(d);
    std::vector<T> acc(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::fill(acc.begin(), acc.end(), T(0));
        for (const auto& c : op.coords)
            for (const auto& t : a.basis_product(i, c.index)) mul_add(acc[t.index], c.value, convert<T>(t.coeff));
        for (std::size_t k = 0; k < d; ++k)
            if (nonzero(acc[k])) op.rows[i].push_back({static_cast<std::uint32_t>(k), acc[k]});
    }
    return op;
}

// Projection modulo the center: for a vector e, the values
// e_k - sum_p e_p z_p[k] on non-pivot coordinates k.
struct CenterProjection {
    bool active = false;
    bool integral = true;
    std::vector<char> is_pivot;
    // per coordinate p: (k, z_p[k]) over non-pivot k, empty unless p is a pivot
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows;
};

CenterProjection make_projection(const Algebra& a, IdentityKind kind) {
    CenterProjection proj;
    if (kind == IdentityKind::plain) return proj;
    const Subspace z = center(a);
    proj.is_pivot.assign(a.dim(), 0);
    proj.rows.resize(a.dim());
    if (z.dim() == 0) return proj;
    proj.active = true;
    for (std::size_t i = 0; i < z.dim(); ++i) proj.is_pivot[z.pivots()[i]] = 1;
    for (std::size_t i = 0; i < z.dim(); ++i) {
        const std::size_t p = z.pivots()[i];
        for (std::size_t k : z.support(i)) {
            if (proj.is_pivot[k]) continue;
            const Rational& v = z.basis()[i][k];
            if (v.get_den() != 1 || !fits_int64(v)) proj.integral = false;
            proj.rows[p].push_back({static_cast<std::uint32_t>(k), v});
        }
    }
    return proj;
}

// Evaluates all n! monomials on one tuple and collects constraint rows:
// rows[k] lists (lex rank of monomial, coordinate k of its value).
template <class T>
class TupleEvaluator {
public:
    TupleEvaluator(int n, std::size_t d, const CenterProjection& proj)
        : n_(n), d_(d), proj_(proj), values_(static_cast<std::size_t>(n), std::vector<T>(d)),
          nz_(static_cast<std::size_t>(n)), flag_(d, 0), scratch_(d), rows_(d) {
        fact_.resize(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) fact_[static_cast<std::size_t>(i)] = factorial(i);
    }

    std::vector<std::vector<Entry<T>>>& run(const std::vector<const RightOperator<T>*>& ops) {
        for (auto& r : rows_) r.clear();
        for (std::size_t l = 0; l < nz_.size(); ++l) clear_level(l);
        std::fill(flag_.begin(), flag_.end(), 0);
        ops_ = &ops;
        dfs(0, 0, 0);
        return rows_;
    }

private:
    int n_;
    std::size_t d_;
    const CenterProjection& proj_;
    std::vector<std::vector<T>> values_;
    std::vector<std::vector<std::uint32_t>> nz_;
    std::vector<char> flag_;
    std::vector<T> scratch_;
    std::vector<std::uint32_t> scratch_nz_;
    std::vector<std::vector<Entry<T>>> rows_;
    std::vector<std::uint64_t> fact_;
    const std::vector<const RightOperator<T>*>* ops_ = nullptr;

    void clear_level(std::size_t l) {
        for (auto k : nz_[l]) values_[l][k] = T(0);
        nz_[l].clear();
    }

    void dfs(int level, std::uint32_t used, std::uint64_t rank) {
        const auto l = static_cast<std::size_t>(level);
        const std::uint64_t block = fact_[static_cast<std::size_t>(n_ - 1 - level)];
        int skipped = 0;
        for (int v = 0; v < n_; ++v) {
            if (used & (1u << v)) continue;
            const std::uint64_t r = rank + static_cast<std::uint64_t>(skipped++) * block;
            const auto& op = *(*ops_)[static_cast<std::size_t>(v)];
            clear_level(l);
            auto& out = values_[l];
            auto& nz = nz_[l];
            if (level == 0) {
                for (const auto& c : op.coords) {
                    out[c.index] = c.value;
                    nz.push_back(c.index);
                }
            } else {
                const auto& in = values_[l - 1];
                for (auto i : nz_[l - 1])
                    for (const auto& t : op.rows[i]) {
                        if (!flag_[t.index]) {
                            flag_[t.index] = 1;
                            nz.push_back(t.index);
                        }
                        mul_add(out[t.index], in[i], t.value);
                    }
                std::size_t w = 0;
                for (auto k : nz) {
                    flag_[k] = 0;
                    if (nonzero(out[k])) nz[w++] = k;
                }
                nz.resize(w);
            }
            if (nz.empty()) continue;
            if (level == n_ - 1) leaf(static_cast<std::uint32_t>(r), out, nz);
            else dfs(level + 1, used | (1u << v), r);
        }
    }

    void leaf(std::uint32_t rank, const std::vector<T>& e, const std::vector<std::uint32_t>& nz) {
        if (!proj_.active) {
            for (auto k : nz) rows_[k].push_back({rank, e[k]});
            return;
        }
        scratch_nz_.clear();
        auto touch = [&](std::uint32_t k) {
            if (!flag_[k]) {
                flag_[k] = 1;
                scratch_nz_.push_back(k);
                scratch_[k] = T(0);
            }
        };
        for (auto k : nz) {
            if (proj_.is_pivot[k]) continue;
            touch(k);
            scratch_[k] += e[k];
        }
        for (auto p : nz) {
            if (!proj_.is_pivot[p]) continue;
            for (const auto& [k, z] : proj_.rows[p]) {
                touch(k);
                mul_sub(scratch_[k], e[p], convert<T>(z));
            }
        }
        for (auto k : scratch_nz_) {
            flag_[k] = 0;
            if (nonzero(scratch_[k])) rows_[k].push_back({rank, scratch_[k]});
        }
    }
};

// Normalizes a sparse row to a canonical multiple and returns a byte key.
std::string row_key(std::vector<Entry<std::int64_t>>& row) {
    std::int64_t g = 0;
    for (const auto& e : row) g = std::gcd(g, e.value < 0 ? -e.value : e.value);
    const std::int64_t s = row.front().value < 0 ? -g : g;
    std::string key(row.size() * 12, '\0');
    char* p = key.data();
    for (auto& e : row) {
        e.value /= s;
        std::memcpy(p, &e.index, 4);
        std::memcpy(p + 4, &e.value, 8);
        p += 12;
    }
    return key;
}

std::string row_key(std::vector<Entry<Rational>>& row) {
    const Rational lead = row.front().value;
    std::string key;
    for (auto& e : row) {
        e.value /= lead;
        key += std::to_string(e.index) + ':' + e.value.get_str() + ';';
    }
    return key;
}

template <class T>
RationalVector dense_row(const std::vector<Entry<T>>& row, std::size_t size) {
    RationalVector v(size);
    for (const auto& e : row) v[e.index] = Rational(e.value);
    return v;
}

template <>
RationalVector dense_row<std::int64_t>(const std::vector<Entry<std::int64_t>>& row, std::size_t size) {
    RationalVector v(size);
    for (const auto& e : row) v[e.index] = static_cast<long>(e.value);
    return v;
}

class ConstraintStream {
public:
    ConstraintStream(const Algebra& a, int n, IdentityKind kind, const std::function<bool(const RationalVector&)>& sink)
        : a_(a), n_(n), size_(factorial(n)), proj_(make_projection(a, kind)), sink_(sink),
          use_int_(a.integral() && proj_.integral), eval_int_(n, a.dim(), proj_), eval_rat_(n, a.dim(), proj_) {
        if (use_int_)
            for (std::size_t j = 0; j < a.dim(); ++j) basis_int_.push_back(basis_operator<std::int64_t>(a, j));
        for (std::size_t j = 0; j < a.dim(); ++j) basis_rat_.push_back(basis_operator<Rational>(a, j));
    }

    // Returns false once the sink asks to stop.
    bool basis_tuple(const std::vector<std::size_t>& t) {
        if (use_int_) {
            std::vector<const RightOperator<std::int64_t>*> ops;
            for (auto j : t) ops.push_back(&basis_int_[j]);
            try {
                return emit(eval_int_.run(ops));
            } catch (const Overflow&) {
            }
        }
        std::vector<const RightOperator<Rational>*> ops;
        for (auto j : t) ops.push_back(&basis_rat_[j]);
        return emit(eval_rat_.run(ops));
    }

    bool element_tuple(const std::vector<std::vector<std::int64_t>>& elems) {
        if (use_int_) {
            try {
                std::vector<RightOperator<std::int64_t>> store;
                for (const auto& c : elems) store.push_back(element_operator<std::int64_t>(a_, c));
                std::vector<const RightOperator<std::int64_t>*> ops;
                for (const auto& o : store) ops.push_back(&o);
                return emit(eval_int_.run(ops));
            } catch (const Overflow&) {
            }
        }
        std::vector<RightOperator<Rational>> store;
        for (const auto& c : elems) store.push_back(element_operator<Rational>(a_, c));
        std::vector<const RightOperator<Rational>*> ops;
        for (const auto& o : store) ops.push_back(&o);
        return emit(eval_rat_.run(ops));
    }

private:
    const Algebra& a_;
    int n_;
    std::size_t size_;
    CenterProjection proj_;
    const std::function<bool(const RationalVector&)>& sink_;
    bool use_int_;
    TupleEvaluator<std::int64_t> eval_int_;
    TupleEvaluator<Rational> eval_rat_;
    std::vector<RightOperator<std::int64_t>> basis_int_;
    std::vector<RightOperator<Rational>> basis_rat_;
    std::unordered_set<std::string> seen_;

    template <class T>
    bool emit(std::vector<std::vector<Entry<T>>>& rows) {
        for (auto& row : rows) {
            if (row.empty()) continue;
            if (!seen_.insert(row_key(row)).second) continue;
            if (!sink_(dense_row(row, size_))) return false;
        }
        return true;
    }
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max() / 2) return std::numeric_limits<std::uint64_t>::max() / 2;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_pow(std::uint64_t b, int e) {
    unsigned __int128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > std::numeric_limits<std::uint64_t>::max() / 2) return std::numeric_limits<std::uint64_t>::max() / 2;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<std::vector<std::size_t>> index_groups(const Algebra& a, const EngineOptions& options) {
    if (options.use_blocks) return a.blocks();
    std::vector<std::size_t> all(a.dim());
    std::iota(all.begin(), all.end(), 0);
    return {all};
}

std::size_t default_samples(int n) { return std::max<std::size_t>(4 * factorial(n), 256); }

}  // namespace

std::uint64_t exhaustive_tuple_count(const Algebra& a, int n, const EngineOptions& options) {
    std::uint64_t total = 0;
    for (const auto& g : index_groups(a, options)) {
        const std::uint64_t c = options.use_symmetry ? binomial(g.size() + static_cast<std::size_t>(n) - 1,
                                                                static_cast<std::uint64_t>(n))
                                                     : saturating_pow(g.size(), n);
        total += c;
    }
    return total;
}

std::uint64_t for_each_constraint(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options,
                                  const std::function<bool(const RationalVector&)>& sink) {
    if (n < 1 || n > 10) throw std::invalid_argument("degree must lie in 1..10");
    ConstraintStream stream(a, n, kind, sink);
    std::uint64_t count = 0;
    const auto nn = static_cast<std::size_t>(n);

    if (options.mode == EvalMode::exhaustive) {
        for (const auto& group : index_groups(a, options)) {
            const std::size_t m = group.size();
            std::vector<std::size_t> pos(nn, 0), t(nn);
            while (true) {
                for (std::size_t i = 0; i < nn; ++i) t[i] = group[pos[i]];
                ++count;
                if (!stream.basis_tuple(t)) return count;
                // next multiset (nondecreasing) or next tuple
                std::size_t i = nn;
                while (i > 0 && pos[i - 1] + 1 == m) --i;
                if (i == 0) break;
                ++pos[i - 1];
                for (std::size_t j = i; j < nn; ++j) pos[j] = options.use_symmetry ? pos[i - 1] : 0;
            }
        }
        return count;
    }

    std::mt19937_64 rng(options.seed);
    const std::size_t samples = options.samples ? options.samples : default_samples(n);
    std::vector<std::vector<std::int64_t>> elems(nn, std::vector<std::int64_t>(a.dim()));
    for (std::size_t s = 0; s < samples; ++s) {
        for (auto& e : elems)
            for (auto& x : e) x = -10 + static_cast<std::int64_t>(rng() % 21);
        ++count;
        if (!stream.element_tuple(elems)) return count;
    }
    return count;
}

namespace {

IdentitySpace evaluate_space(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options,
                             std::size_t stop_rank) {
    IdentitySpace s;
    s.n = n;
    s.kind = kind;
    s.constraints = Subspace(factorial(n));
    const std::size_t full = factorial(n);
    const bool orbit = options.use_symmetry || options.mode != EvalMode::exhaustive;
    auto sink = [&](const RationalVector& row) {
        if (orbit) insert_with_orbit(s.constraints, n, row);
        else s.constraints.insert(row);
        return s.constraints.dim() < std::min(stop_rank, full);
    };
    const std::uint64_t used = for_each_constraint(a, n, kind, options, sink);
    s.certificate.kind = options.mode == EvalMode::exhaustive ? EvalMode::exhaustive : EvalMode::randomized;
    if (s.certificate.kind == EvalMode::randomized) {
        s.certificate.seed = options.seed;
        s.certificate.samples = static_cast<std::size_t>(used);
    }
    return s;
}

}  // namespace

IdentitySpace compute_identity_space(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options) {
    const std::size_t full = factorial(n);
    if (options.mode == EvalMode::exhaustive) {
        const std::uint64_t tuples = exhaustive_tuple_count(a, n, options);
        if (tuples > options.max_tuples) throw ResourceCeilingError(tuples, options.max_tuples);
        return evaluate_space(a, n, kind, options, full);
    }
    if (options.mode == EvalMode::randomized) return evaluate_space(a, n, kind, options, full);

    // Sandwich: the generated component is a lower bound once every generator
    // is verified exactly; random evaluation gives the upper bound.
    const auto& gens = options.generators;
    if (gens.tideal.empty() && gens.tspace.empty())
        throw std::invalid_argument("sandwich mode needs generators");
    for (const auto& g : gens.tideal)
        if (g.degree() <= n && !is_identity(g, a))
            throw SandwichGapError(0, 0, "generator " + to_string(g) + " is not an identity of " + a.name());
    if (kind == IdentityKind::central) {
        for (const auto& g : gens.tspace)
            if (g.degree() <= n && !is_central(g, a))
                throw SandwichGapError(0, 0, "generator " + to_string(g) + " is not central on " + a.name());
    } else if (!gens.tspace.empty()) {
        throw std::invalid_argument("T-space generators only bound central spaces");
    }
    const Subspace lower = kind == IdentityKind::plain ? tideal_multilinear_component(gens.tideal, n)
                                                       : tspace_multilinear_component(gens.tspace, gens.tideal, n);
    EngineOptions random = options;
    random.mode = EvalMode::randomized;
    IdentitySpace upper = evaluate_space(a, n, kind, random, full - lower.dim());
    if (upper.codimension() != full - lower.dim())
        throw SandwichGapError(lower.dim(), upper.dim(), "");
    for (const auto& v : lower.basis())
        if (!upper.contains(v)) throw SandwichGapError(lower.dim(), upper.dim(), "lower bound not contained");
    upper.certificate.kind = EvalMode::sandwich;
    upper.certificate.generators_id = gens.id;
    return upper;
}

IdentitySpace identity_space(const Algebra& a, int n, const EngineOptions& options) {
    return compute_identity_space(a, n, IdentityKind::plain, options);
}

IdentitySpace central_identity_space(const Algebra& a, int n, const EngineOptions& options) {
    return compute_identity_space(a, n, IdentityKind::central, options);
}

const IdentitySpace& cached_identity_space(const Algebra& a, int n, IdentityKind kind, const EngineOptions& options) {
    static std::mutex mu;
    static std::map<std::tuple<std::string, int, IdentityKind>, IdentitySpace> cache;
    auto key = std::make_tuple(to_text(a), n, kind);
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    EngineOptions exhaustive;
    exhaustive.max_tuples = options.max_tuples;
    IdentitySpace s = compute_identity_space(a, n, kind, exhaustive);
    std::lock_guard lock(mu);
    return cache.emplace(std::move(key), std::move(s)).first->second;
}

CodimensionReport codimension_report(const Algebra& a, int n, const EngineOptions& options) {
    CodimensionReport r;
    r.n = n;
    const IdentitySpace plain = identity_space(a, n, options);
    EngineOptions central_options = options;
    if (options.mode == EvalMode::sandwich && options.generators.tspace.empty())
        central_options.mode = EvalMode::exhaustive;
    const IdentitySpace central = central_identity_space(a, n, central_options);
    for (const auto& row : central.constraints.basis())
        if (!plain.constraints.contains(row))
            throw std::logic_error("identity space not contained in central identity space");
    r.c_n = plain.codimension();
    r.c_n_z = central.codimension();
    r.delta_n = r.c_n - r.c_n_z;
    r.plain_certificate = plain.certificate;
    r.central_certificate = central.certificate;
    if (r.c_n != r.c_n_z + r.delta_n || r.c_n > factorial(n)) throw std::logic_error("codimension invariant violated");
    return r;
}

bool is_identity(const MultilinearPolynomial& f, const Algebra& a) {
    if (f.degree() < 1) return f.is_zero();
    return cached_identity_space(a, f.degree(), IdentityKind::plain).contains(f);
}

bool is_central(const MultilinearPolynomial& f, const Algebra& a) {
    if (f.degree() < 1) return f.is_zero();
    return cached_identity_space(a, f.degree(), IdentityKind::central).contains(f);
}

std::vector<MultilinearPolynomial> basis_modulo_identities(const IdentitySpace& s) {
    // Pivot columns of the reduced constraint matrix are exactly the
    // lexicographically first monomials with independent residues.
    std::vector<MultilinearPolynomial> out;
    for (std::size_t p : s.constraints.pivots()) {
        MultilinearPolynomial m(s.n);
        m.add_term(lex_unrank(s.n, p), 1);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<MultilinearPolynomial> basis_modulo_identities(const Algebra& a, int n) {
    return basis_modulo_identities(cached_identity_space(a, n, IdentityKind::plain));
}

}  // namespace picalc
