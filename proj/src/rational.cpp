#include "qboson/rational.hpp"

#include <cctype>
#include <ostream>

namespace qboson {

namespace {

bool looks_like_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational::Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(mpz_class(n), mpz_class(d));
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero();
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw DivisionByZero();
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos
                               ? std::string_view("1")
                               : text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den))
        throw ConfigError("malformed rational: \"" + std::string(text) + "\"");
    mpz_class p{std::string(num)};
    mpz_class q{std::string(den)};
    if (q == 0) throw DivisionByZero("malformed rational: zero denominator");
    return Rational(p, q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DivisionByZero("0 raised to a negative power");
        return Rational(0);
    }
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), a);
    return e > 0 ? Rational(num, den) : Rational(den, num);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace qboson
