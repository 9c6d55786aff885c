#include "picalc/free_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace picalc {

// FreePolynomial ------------------------------------------------------------

FreePolynomial FreePolynomial::monomial(Word w, Rational c) {
    FreePolynomial f;
    f.add_term(w, c);
    return f;
}

FreePolynomial FreePolynomial::constant(Rational c) { return monomial({}, std::move(c)); }

int FreePolynomial::degree() const {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
}

int FreePolynomial::num_vars() const {
    int m = 0;
    for (const auto& [w, c] : terms_)
        for (int v : w) m = std::max(m, v + 1);
    return m;
}

void FreePolynomial::add_term(const Word& w, const Rational& c) {
    if (sgn(c) == 0) return;
    if (!terms_.empty() && terms_.begin()->first.size() != w.size())
        throw PolynomialError("adding monomials of different degrees");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

FreePolynomial& FreePolynomial::operator+=(const FreePolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

FreePolynomial& FreePolynomial::operator-=(const FreePolynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

FreePolynomial operator*(const FreePolynomial& a, const FreePolynomial& b) {
    FreePolynomial out;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, c * d);
        }
    return out;
}

FreePolynomial operator*(const Rational& s, FreePolynomial a) {
    if (sgn(s) == 0) return {};
    for (auto& [w, c] : a.terms_) c *= s;
    return a;
}

bool FreePolynomial::is_multihomogeneous() const {
    std::vector<int> ref;
    bool first = true;
    const int m = num_vars();
    for (const auto& [w, c] : terms_) {
        std::vector<int> deg(static_cast<std::size_t>(m));
        for (int v : w) ++deg[static_cast<std::size_t>(v)];
        if (first) {
            ref = std::move(deg);
            first = false;
        } else if (deg != ref) {
            return false;
        }
    }
    return true;
}

bool FreePolynomial::is_multilinear() const {
    for (const auto& [w, c] : terms_)
        if (!is_permutation(w)) return false;
    return true;
}

// MultilinearPolynomial -----------------------------------------------------

MultilinearPolynomial MultilinearPolynomial::from_free(const FreePolynomial& f) {
    if (!f.is_multilinear()) throw PolynomialError("polynomial is not multilinear: " + to_string(f));
    MultilinearPolynomial out(std::max(f.degree(), 0));
    for (const auto& [w, c] : f.terms()) out.add_term(w, c);
    return out;
}

MultilinearPolynomial MultilinearPolynomial::from_vector(int n, const RationalVector& v) {
    if (v.size() != factorial(n)) throw PolynomialError("coordinate vector has wrong length");
    MultilinearPolynomial out(n);
    for (std::size_t r = 0; r < v.size(); ++r)
        if (sgn(v[r]) != 0) out.terms_.emplace(lex_unrank(n, r), v[r]);
    return out;
}

void MultilinearPolynomial::add_term(const Permutation& p, const Rational& c) {
    if (static_cast<int>(p.size()) != n_ || !is_permutation(p))
        throw PolynomialError("monomial is not a permutation of the degree");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational MultilinearPolynomial::coefficient(const Permutation& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

RationalVector MultilinearPolynomial::to_vector() const {
    RationalVector v(factorial(n_));
    for (const auto& [p, c] : terms_) v[lex_rank(p)] = c;
    return v;
}

FreePolynomial MultilinearPolynomial::to_free() const {
    FreePolynomial f;
    for (const auto& [p, c] : terms_) f.add_term(p, c);
    return f;
}

MultilinearPolynomial& MultilinearPolynomial::operator+=(const MultilinearPolynomial& o) {
    if (o.n_ != n_) throw PolynomialError("degree mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

MultilinearPolynomial& MultilinearPolynomial::operator-=(const MultilinearPolynomial& o) {
    if (o.n_ != n_) throw PolynomialError("degree mismatch");
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

MultilinearPolynomial operator*(const Rational& s, MultilinearPolynomial a) {
    if (sgn(s) == 0) return MultilinearPolynomial(a.n_);
    for (auto& [p, c] : a.terms_) c *= s;
    return a;
}

// Constructions -------------------------------------------------------------

FreePolynomial commutator(const FreePolynomial& f, const FreePolynomial& g) { return f * g - g * f; }

FreePolynomial commutator(const std::vector<int>& vars) {
    if (vars.size() < 2) throw PolynomialError("a commutator needs at least two variables");
    FreePolynomial out = FreePolynomial::monomial({vars[0]});
    for (std::size_t i = 1; i < vars.size(); ++i) out = commutator(out, FreePolynomial::monomial({vars[i]}));
    return out;
}

MultilinearPolynomial standard_polynomial(int t) {
    if (t < 1) throw PolynomialError("standard polynomial needs t >= 1");
    MultilinearPolynomial out(t);
    for (const auto& p : all_permutations(t)) out.add_term(p, sign(p));
    return out;
}

MultilinearPolynomial place_permute(const MultilinearPolynomial& f, const Permutation& sigma) {
    if (static_cast<int>(sigma.size()) != f.degree() || !is_permutation(sigma))
        throw PolynomialError("place permutation size mismatch");
    MultilinearPolynomial out(f.degree());
    for (const auto& [p, c] : f.terms()) out.add_term(compose(p, sigma), c);
    return out;
}

FreePolynomial place_permute(const FreePolynomial& f, const Permutation& sigma) {
    if (!is_permutation(sigma) || (f.degree() >= 0 && static_cast<int>(sigma.size()) != f.degree()))
        throw PolynomialError("place permutation size mismatch");
    FreePolynomial out;
    for (const auto& [w, c] : f.terms()) {
        Word v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[static_cast<std::size_t>(sigma[i])];
        out.add_term(v, c);
    }
    return out;
}

MultilinearPolynomial rename_variables(const MultilinearPolynomial& f, const Permutation& pi) {
    if (static_cast<int>(pi.size()) != f.degree() || !is_permutation(pi))
        throw PolynomialError("renaming size mismatch");
    MultilinearPolynomial out(f.degree());
    for (const auto& [p, c] : f.terms()) out.add_term(compose(pi, p), c);
    return out;
}

FreePolynomial substitute(const FreePolynomial& f, const std::vector<Word>& words) {
    FreePolynomial out;
    for (const auto& [w, c] : f.terms()) {
        Word v;
        for (int x : w) {
            if (x < 0 || static_cast<std::size_t>(x) >= words.size())
                throw PolynomialError("substitution does not cover variable x" + std::to_string(x + 1));
            const auto& r = words[static_cast<std::size_t>(x)];
            v.insert(v.end(), r.begin(), r.end());
        }
        out.add_term(v, c);
    }
    return out;
}

MultilinearPolynomial full_linearization(const FreePolynomial& f) {
    if (f.is_zero()) return MultilinearPolynomial(0);
    if (!f.is_multihomogeneous()) throw PolynomialError("polynomial is not multihomogeneous: " + to_string(f));
    const int m = f.num_vars();
    std::vector<int> deg(static_cast<std::size_t>(m)), offset(static_cast<std::size_t>(m));
    for (int v : f.terms().begin()->first) ++deg[static_cast<std::size_t>(v)];
    std::exclusive_scan(deg.begin(), deg.end(), offset.begin(), 0);
    const int n = f.degree();
    MultilinearPolynomial out(n);

    for (const auto& [w, c] : f.terms()) {
        // positions[v] = positions of variable v in w
        std::vector<std::vector<int>> positions(static_cast<std::size_t>(m));
        for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])].push_back(i);
        std::vector<Permutation> orders(static_cast<std::size_t>(m));
        for (int v = 0; v < m; ++v) orders[static_cast<std::size_t>(v)] = identity_permutation(deg[static_cast<std::size_t>(v)]);
        Permutation word(static_cast<std::size_t>(n));
        while (true) {
            for (int v = 0; v < m; ++v) {
                const auto& pos = positions[static_cast<std::size_t>(v)];
                const auto& ord = orders[static_cast<std::size_t>(v)];
                for (std::size_t t = 0; t < pos.size(); ++t)
                    word[static_cast<std::size_t>(pos[t])] = offset[static_cast<std::size_t>(v)] + ord[t];
            }
            out.add_term(word, c);
            int v = 0;
            for (; v < m; ++v) {
                auto& ord = orders[static_cast<std::size_t>(v)];
                if (std::next_permutation(ord.begin(), ord.end())) break;
            }
            if (v == m) break;
        }
    }
    return out;
}

// T-ideal components --------------------------------------------------------

namespace {

const std::vector<std::vector<std::uint32_t>>& adjacent_transposition_tables(int n) {
    static std::mutex mu;
    static std::unordered_map<int, std::vector<std::vector<std::uint32_t>>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<std::vector<std::uint32_t>> tables;
    for (int i = 0; i + 1 < n; ++i) {
        Permutation s = identity_permutation(n);
        std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
        tables.push_back(left_action_table(s));
    }
    return cache.emplace(n, std::move(tables)).first->second;
}

// All compositions of n into `parts` pieces with the given minimum sizes.
void compositions(int n, const std::vector<int>& min_sizes, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    const std::size_t k = cur.size();
    if (k == min_sizes.size()) {
        if (n == 0) out.push_back(cur);
        return;
    }
    int rest_min = 0;
    for (std::size_t j = k + 1; j < min_sizes.size(); ++j) rest_min += min_sizes[j];
    for (int s = min_sizes[k]; s + rest_min <= n; ++s) {
        cur.push_back(s);
        compositions(n - s, min_sizes, cur, out);
        cur.pop_back();
    }
}

void add_substitution_instances(Subspace& s, const MultilinearPolynomial& g, int n, bool pad) {
    const int k = g.degree();
    if (k < 1 || k > n || g.is_zero()) return;
    if (!pad && k > n) return;
    std::vector<int> mins(static_cast<std::size_t>(k), 1);
    if (pad) {
        mins.insert(mins.begin(), 0);
        mins.push_back(0);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions(n, mins, cur, comps);
    for (const auto& comp : comps) {
        // slices of the identity word 0..n-1
        std::vector<int> start(comp.size());
        std::exclusive_scan(comp.begin(), comp.end(), start.begin(), 0);
        const std::size_t first = pad ? 1 : 0;
        RationalVector v(factorial(n));
        for (const auto& [p, c] : g.terms()) {
            Permutation word;
            word.reserve(static_cast<std::size_t>(n));
            auto append = [&](std::size_t slot) {
                for (int t = 0; t < comp[slot]; ++t) word.push_back(start[slot] + t);
            };
            if (pad) append(0);
            for (int x : p) append(first + static_cast<std::size_t>(x));
            if (pad) append(comp.size() - 1);
            v[lex_rank(word)] += c;
        }
        s.insert(std::move(v));
    }
}

}  // namespace

namespace {

void close_from(Subspace& out, int n, std::deque<RationalVector> queue) {
    const auto& tables = adjacent_transposition_tables(n);
    const std::size_t full = out.ambient_dim();
    while (!queue.empty() && out.dim() < full) {
        RationalVector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& table : tables) {
            RationalVector w(v.size());
            for (std::size_t r = 0; r < v.size(); ++r)
                if (sgn(v[r]) != 0) w[table[r]] = v[r];
            if (out.insert(w)) queue.push_back(std::move(w));
        }
    }
}

}  // namespace

Subspace renaming_closure(const Subspace& s, int n) {
    Subspace out = s;
    close_from(out, n, std::deque<RationalVector>(s.basis().begin(), s.basis().end()));
    return out;
}

bool insert_with_orbit(Subspace& s, int n, const RationalVector& v) {
    if (!s.insert(v)) return false;
    close_from(s, n, std::deque<RationalVector>{v});
    return true;
}

Subspace tideal_multilinear_component(const std::vector<MultilinearPolynomial>& generators, int n) {
    if (n < 1) throw PolynomialError("degree must be positive");
    Subspace s(factorial(n));
    for (const auto& g : generators) add_substitution_instances(s, g, n, true);
    return renaming_closure(s, n);
}

Subspace tspace_multilinear_component(const std::vector<MultilinearPolynomial>& tspace_gens,
                                      const std::vector<MultilinearPolynomial>& tideal_gens, int n) {
    if (n < 1) throw PolynomialError("degree must be positive");
    Subspace s(factorial(n));
    for (const auto& g : tspace_gens) add_substitution_instances(s, g, n, false);
    for (const auto& g : tideal_gens) add_substitution_instances(s, g, n, true);
    return renaming_closure(s, n);
}

// Text syntax ---------------------------------------------------------------

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    FreePolynomial parse() {
        FreePolynomial f = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw PolynomialError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                              what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int parse_int() {
        skip_space();
        const std::size_t s = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (s == pos_) fail("expected integer");
        return std::stoi(std::string(text_.substr(s, pos_ - s)));
    }

    FreePolynomial parse_sum() {
        FreePolynomial total;
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        while (true) {
            FreePolynomial term = parse_product();
            if (negate) total -= term;
            else total += term;
            if (peek('+') || peek('-')) {
                negate = text_[pos_] == '-';
                ++pos_;
            } else {
                return total;
            }
        }
    }

    bool at_item() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'c' || c == 's' || c == '(';
    }

    FreePolynomial parse_product() {
        Rational scale = 1;
        FreePolynomial prod = FreePolynomial::constant(1);
        bool any = false;
        while (true) {
            if (any && peek('*')) ++pos_;
            if (!at_item()) break;
            any = true;
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                const std::size_t s = pos_;
                while (pos_ < text_.size() &&
                       (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
                    ++pos_;
                try {
                    scale *= parse_rational(text_.substr(s, pos_ - s));
                } catch (const std::invalid_argument&) {
                    fail("malformed coefficient");
                }
            } else {
                prod = prod * parse_factor();
            }
        }
        if (!any) fail("expected a term");
        return scale * prod;
    }

    FreePolynomial parse_factor() {
        skip_space();
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FreePolynomial f = parse_sum();
            expect(')');
            return f;
        }
        if (c == 'x') {
            ++pos_;
            const int i = parse_int();
            if (i < 1) fail("variables are numbered from 1");
            return FreePolynomial::monomial({i - 1});
        }
        if (text_.substr(pos_, 3) == "st(") {
            pos_ += 3;
            const int k = parse_int();
            expect(')');
            if (k < 1) fail("st(k) needs k >= 1");
            return standard_polynomial(k).to_free();
        }
        if (text_.substr(pos_, 2) == "c(") {
            pos_ += 2;
            std::vector<FreePolynomial> args{parse_sum()};
            while (peek(',')) {
                ++pos_;
                args.push_back(parse_sum());
            }
            expect(')');
            if (args.size() < 2) fail("c(...) needs at least two arguments");
            FreePolynomial f = args[0];
            for (std::size_t i = 1; i < args.size(); ++i) f = commutator(f, args[i]);
            return f;
        }
        fail("expected x<i>, c(...), st(k) or '('");
    }
};

std::string word_text(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " x" : "x") + std::to_string(w[i] + 1);
    return s;
}

}  // namespace

FreePolynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

std::string to_string(const FreePolynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : f.terms()) {
        const bool neg = sgn(c) < 0;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        const Rational a = abs(c);
        if (w.empty()) {
            out += to_string(a);
            continue;
        }
        if (a != 1) out += to_string(a) + " * ";
        out += word_text(w);
    }
    return out;
}

std::string to_string(const MultilinearPolynomial& f) { return to_string(f.to_free()); }

}  // namespace picalc
