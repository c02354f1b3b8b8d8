#include "qboson/params.hpp"

#include <sstream>

namespace qboson {

std::string to_string(ParamMode mode) {
    return mode == ParamMode::ThreeParam ? "three" : "four";
}

ParamSet::ParamSet(ParamMode mode, Rational t, Rational t0, Rational t1,
                   Rational t2, Rational t3, int n)
    : mode_(mode),
      t_(std::move(t)),
      t0_(std::move(t0)),
      t1_(std::move(t1)),
      t2_(std::move(t2)),
      t3_(std::move(t3)),
      n_(n) {
    if (n < 1) throw ConfigError("parameter guard needs a positive lattice size");
    if (mode_ == ParamMode::ThreeParam && !t3_.is_zero())
        throw ConfigError("three-parameter mode requires t3 = 0");
    if (t_.is_zero()) throw ParameterDegeneracy("t must be nonzero");
    if (t0_.is_zero()) throw ParameterDegeneracy("t0 must be nonzero");
    tau_ = t0_ * t1_ * t2_ * t3_;

    const Rational one(1);
    for (int m = 1; m <= n; ++m)
        if (t_.pow(m) == one)
            throw ParameterDegeneracy("degenerate parameters: 1 - t^" +
                                      std::to_string(m) + " = 0");
    if (!tau_.is_zero()) {
        for (int m = -1; m <= 2 * n + 1; ++m)
            if (tau_ * t_.pow(m) == one)
                throw ParameterDegeneracy("degenerate parameters: 1 - tau*t^" +
                                          std::to_string(m) + " = 0");
    }
}

void ParamSet::require_scope(int n) const {
    if (n > n_)
        throw ConfigError("parameter set guarded for n <= " + std::to_string(n_) +
                          " used with n = " + std::to_string(n));
}

std::string ParamSet::str() const {
    std::ostringstream os;
    os << "t=" << t_ << ",t0=" << t0_ << ",t1=" << t1_ << ",t2=" << t2_
       << ",t3=" << t3_;
    return os.str();
}

} // namespace qboson
