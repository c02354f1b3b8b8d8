#pragma once

#include <string>

#include "qboson/rational.hpp"

namespace qboson {

/// Coefficient family: the three-parameter boundary interaction
/// (t3 = 0 identically) or the full four-parameter one.
enum class ParamMode { ThreeParam, FourParam };

std::string to_string(ParamMode mode);

/// Exact rational values of the deformation parameter t and the
/// boundary couplings t0..t3, with the derived product tau = t0*t1*t2*t3.
///
/// Construction runs the genericity guard for lattices with up to n
/// parts: t and t0 are nonzero, 1 - t^m != 0 for 1 <= m <= n, and
/// 1 - tau*t^m != 0 for -1 <= m <= 2n+1 (the range covering every
/// tau-exponent printed in the coefficient formulas).  Violations throw
/// ParameterDegeneracy.
class ParamSet {
public:
    ParamSet(ParamMode mode, Rational t, Rational t0, Rational t1,
             Rational t2, Rational t3, int n);

    ParamMode mode() const { return mode_; }
    const Rational& t() const { return t_; }
    const Rational& t0() const { return t0_; }
    const Rational& t1() const { return t1_; }
    const Rational& t2() const { return t2_; }
    const Rational& t3() const { return t3_; }
    const Rational& tau() const { return tau_; }

    /// Largest lattice size the guard was verified for.
    int guard_n() const { return n_; }

    /// Throws ConfigError when used with a lattice larger than the
    /// guard covered.
    void require_scope(int n) const;

    /// t^e (negative exponents allowed).
    Rational t_pow(int e) const { return t_.pow(e); }

    std::string str() const;

private:
    ParamMode mode_;
    Rational t_, t0_, t1_, t2_, t3_, tau_;
    int n_;
};

} // namespace qboson
