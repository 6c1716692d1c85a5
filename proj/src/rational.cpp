#include "stabilis/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace stabilis {

std::string Rational::str() const {
    return q_.get_str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    std::string s(text);
    auto slash = s.find('/');
    auto check_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(s)) throw std::invalid_argument("bad rational '" + s + "'");
        return Rational(mpz_class(s));
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    if (!check_int(ns) || !check_int(ds)) throw std::invalid_argument("bad rational '" + s + "'");
    mpz_class den(ds);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(mpz_class(ns), den);
}

std::string to_string(const Rational& r) {
    return r.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

mpz_class rat_floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

mpz_class rat_ceil(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

mpz_class ceil_sqrt(const Rational& r) {
    if (r.sgn() < 0) throw std::invalid_argument("ceil_sqrt of negative value");
    if (r.is_zero()) return 0;
    // sqrt of floor(r) as a first guess, then adjust by exact comparison.
    mpz_class g;
    mpz_sqrt(g.get_mpz_t(), rat_floor(r).get_mpz_t());
    while (Rational(mpz_class(g * g)) < r) ++g;
    while (g > 0 && Rational(mpz_class((g - 1) * (g - 1))) >= r) --g;
    return g;
}

Rational ceil_to_denominator(const Rational& r, unsigned long denom) {
    mpz_class n = rat_ceil(r * Rational(static_cast<long>(denom)));
    return Rational(n, mpz_class(static_cast<long>(denom)));
}

}  // namespace stabilis
