#include "picalc/rational.hpp"

#include <stdexcept>

namespace picalc {

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational");
    const auto slash = s.find('/');
    auto check_int = [&](std::string_view part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw std::invalid_argument("malformed rational: " + s);
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("malformed rational: " + s);
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool fits_int64(const Rational& q) {
    if (q.get_den() != 1) return false;
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 62;
}

}  // namespace picalc
