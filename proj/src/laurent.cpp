#include "qboson/laurent.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace qboson {

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw ConfigError("LaurentPoly needs at least one variable");
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(ExponentVec(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, ExponentVec exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars)
        throw ArityMismatch("monomial exponent vector has wrong length");
    LaurentPoly p(nvars);
    p.add_term(exps, c);
    return p;
}

LaurentPoly LaurentPoly::variable_power(int nvars, int j, int power) {
    if (j < 1 || j > nvars) throw IndexOutOfRange("variable index out of range");
    ExponentVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(j - 1)] = power;
    return monomial(nvars, std::move(e), Rational(1));
}

Rational LaurentPoly::coeff(const ExponentVec& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVec& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw ArityMismatch("term exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::require_same_arity(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw ArityMismatch("operands have different variable counts");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_arity(b);
    LaurentPoly out(a.nvars_);
    ExponentVec e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw ArityMismatch("evaluation point has wrong length");
    for (const auto& x : point)
        if (x.is_zero()) throw ZeroSubstitution("evaluation point has a zero entry");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= point[i].pow(e[i]);
        total += term;
    }
    return total;
}

int LaurentPoly::max_abs_exponent() const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        for (int v : e) m = std::max(m, v < 0 ? -v : v);
    return m;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        const bool has_vars = std::any_of(e.begin(), e.end(), [](int v) { return v != 0; });
        if (!has_vars || !a.is_one()) os << a.str();
        bool needs_star = !has_vars || !a.is_one();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (needs_star) os << "*";
            needs_star = true;
            os << "x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ division

namespace {

// Graded lexicographic order on nonnegative exponent vectors.
struct GlexLess {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        const long da = std::accumulate(a.begin(), a.end(), 0L);
        const long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

// Componentwise min of all exponent vectors of p.
ExponentVec min_exponents(const LaurentPoly& p) {
    ExponentVec m(static_cast<std::size_t>(p.nvars()),
                  std::numeric_limits<int>::max());
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

} // namespace

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.nvars() != q.nvars())
        throw ArityMismatch("operands have different variable counts");
    if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (p.is_zero()) return LaurentPoly(p.nvars());

    const std::size_t n = static_cast<std::size_t>(p.nvars());
    const ExponentVec mp = min_exponents(p);
    const ExponentVec mq = min_exponents(q);

    // Shift both operands so every exponent is nonnegative; the quotient
    // picks up the monomial x^(mp - mq) at the end.
    std::map<ExponentVec, Rational, GlexLess> rem, div;
    for (const auto& [e, c] : p.terms()) {
        ExponentVec s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = e[i] - mp[i];
        rem.emplace(std::move(s), c);
    }
    for (const auto& [e, c] : q.terms()) {
        ExponentVec s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = e[i] - mq[i];
        div.emplace(std::move(s), c);
    }

    const ExponentVec& dlead = div.rbegin()->first;
    const Rational& dcoeff = div.rbegin()->second;

    LaurentPoly quotient(p.nvars());
    ExponentVec shifted(n), mono(n);
    while (!rem.empty()) {
        const auto& [rlead, rcoeff] = *rem.rbegin();
        for (std::size_t i = 0; i < n; ++i) {
            mono[i] = rlead[i] - dlead[i];
            if (mono[i] < 0)
                throw NonDivisible("leading term not divisible: " + p.str() +
                                   " by " + q.str());
        }
        const Rational c = rcoeff / dcoeff;
        for (std::size_t i = 0; i < n; ++i)
            shifted[i] = mono[i] + mp[i] - mq[i];
        quotient.add_term(shifted, c);
        // rem -= c * x^mono * div; the leading term cancels by construction.
        for (const auto& [e, v] : div) {
            ExponentVec target(n);
            for (std::size_t i = 0; i < n; ++i) target[i] = e[i] + mono[i];
            auto [it, inserted] = rem.emplace(std::move(target), -(c * v));
            if (!inserted) {
                it->second -= c * v;
                if (it->second.is_zero()) rem.erase(it);
            }
        }
    }
    return quotient;
}

// ------------------------------------------------------- rational functions

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.nvars() != den_.nvars())
        throw ArityMismatch("numerator and denominator arity differ");
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
}

RationalFunction RationalFunction::from_poly(LaurentPoly p) {
    const int n = p.nvars();
    return RationalFunction(std::move(p), LaurentPoly::constant(n, Rational(1)));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const Rational& c) const {
    return RationalFunction(num_ * c, den_);
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

} // namespace qboson
