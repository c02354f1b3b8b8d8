#pragma once

#include <map>

#include "qboson/partition.hpp"
#include "qboson/rational.hpp"

namespace qboson {

/// Finitely supported function from partitions with n parts to exact
/// rationals; zero values are never stored.  The space the quantum
/// integrals act on.
class LatticeFunction {
public:
    using Support = std::map<Partition, Rational>;

    explicit LatticeFunction(int n);

    /// The indicator of a single partition.
    static LatticeFunction delta(const Partition& mu);

    int n() const { return n_; }
    bool is_zero() const { return support_.empty(); }
    std::size_t support_size() const { return support_.size(); }
    const Support& support() const { return support_; }

    Rational value(const Partition& lambda) const;
    void add(const Partition& lambda, const Rational& c);

    LatticeFunction& operator+=(const LatticeFunction& o);
    LatticeFunction& operator-=(const LatticeFunction& o);
    LatticeFunction& operator*=(const Rational& c);
    friend LatticeFunction operator+(LatticeFunction a, const LatticeFunction& b) { a += b; return a; }
    friend LatticeFunction operator-(LatticeFunction a, const LatticeFunction& b) { a -= b; return a; }
    friend LatticeFunction operator*(const Rational& c, LatticeFunction f) { f *= c; return f; }

    bool operator==(const LatticeFunction&) const = default;

    std::string str() const;

private:
    int n_;
    Support support_;
};

} // namespace qboson
