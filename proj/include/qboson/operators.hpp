#pragma once

#include <map>
#include <tuple>

#include "qboson/coefficients.hpp"
#include "qboson/lattice_function.hpp"

namespace qboson {

/// Memoized W and U lookups for repeated operator applications with a
/// fixed parameter set and variant (double applications in commutators
/// revisit the same (lambda, pair) keys many times).
class CoefficientCache {
public:
    CoefficientCache(ParamSet params, CoeffVariant variant);

    const ParamSet& params() const { return params_; }
    CoeffVariant variant() const { return variant_; }

    const Rational& w(const Partition& lambda, const ShiftPair& pair);
    const Rational& u(const Partition& lambda, const std::vector<int>& K, int m);

private:
    ParamSet params_;
    CoeffVariant variant_;
    std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>, Rational> w_;
    std::map<std::tuple<std::vector<int>, std::vector<int>, int>, Rational> u_;
};

/// (H_l f)(lambda) = sum over admissible disjoint pairs with
/// |J_+|+|J_-| <= l of U_{K, l-|J_+|-|J_-|}(lambda) W_{J+,J-}(lambda)
/// f(lambda + e_{J+} - e_{J-}), K the complement of J_+ and J_-.
/// Computed exactly on finite support; each application moves support
/// by at most one per coordinate.
LatticeFunction apply_h(int l, const LatticeFunction& f, CoefficientCache& cache);
LatticeFunction apply_h(int l, const LatticeFunction& f, const ParamSet& params,
                        CoeffVariant variant = CoeffVariant::RestrictedInnerSum);

/// The order-1 integral in its explicit second-order form: potential
/// u(lambda) plus nearest-neighbour hops with weights w^+_j, w^-_j.
LatticeFunction apply_h1_explicit(const LatticeFunction& f, const ParamSet& params);

/// Hop and potential coefficients of the explicit form, exposed for
/// cross-checks.  w_plus/w_minus require the shifted partition to stay
/// in the cone only where they are summed; the values themselves are
/// defined for every j.
Rational h1_w_plus(const ParamSet& params, const Partition& lambda, int j);
Rational h1_w_minus(const ParamSet& params, const Partition& lambda, int j);
Rational h1_potential(const ParamSet& params, const Partition& lambda);

/// H_k (H_l f) - H_l (H_k f), exact.
LatticeFunction commutator(int k, int l, const LatticeFunction& f,
                           CoefficientCache& cache);
LatticeFunction commutator(int k, int l, const LatticeFunction& f,
                           const ParamSet& params,
                           CoeffVariant variant = CoeffVariant::RestrictedInnerSum);

} // namespace qboson
