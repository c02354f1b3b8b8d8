#pragma once

#include <map>
#include <string>
#include <vector>

#include "qboson/rational.hpp"

namespace qboson {

using ExponentVec = std::vector<int>;

/// Sparse multivariate Laurent polynomial in x_1,...,x_n over Rational,
/// in canonical form: zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.  Exponents may
/// be negative.  Terms iterate in lexicographic exponent-vector order.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVec, Rational>;

    explicit LaurentPoly(int nvars);

    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(int nvars, ExponentVec exps, const Rational& c);
    /// x_j^power with 1-based variable index.
    static LaurentPoly variable_power(int nvars, int j, int power);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given exponent vector (zero when absent).
    Rational coeff(const ExponentVec& exps) const;

    /// Adds c * x^exps, dropping the term if the sum cancels.
    void add_term(const ExponentVec& exps, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { a *= c; return a; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { a *= c; return a; }
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& o) const = default;

    /// Exact substitution at a point of nonzero rationals.
    Rational evaluate(const std::vector<Rational>& point) const;

    /// max_j |e_j| over all stored exponent vectors; 0 for constants/zero.
    int max_abs_exponent() const;

    /// Human-readable rendering for diagnostics, e.g. "2*x1^2*x2^-1 - 1/3".
    std::string str() const;

private:
    void require_same_arity(const LaurentPoly& o) const;

    int nvars_;
    TermMap terms_;
};

/// Exact quotient p/q as a Laurent polynomial.  Negative exponents are
/// cleared by a monomial shift, then the shifted operands are divided by
/// graded-lexicographic leading-term elimination.  Throws NonDivisible
/// when no exact quotient exists and DivisionByZero when q = 0.
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

/// Unreduced quotient of Laurent polynomials.  Pairs are never
/// gcd-reduced; equality is decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction(LaurentPoly num, LaurentPoly den);
    static RationalFunction from_poly(LaurentPoly p);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator*(const Rational& c) const;

    /// a/b == c/d  iff  a*d == c*b.
    bool equals(const RationalFunction& o) const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
};

} // namespace qboson
