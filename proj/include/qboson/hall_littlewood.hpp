#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "qboson/coefficients.hpp"
#include "qboson/laurent.hpp"
#include "qboson/params.hpp"
#include "qboson/partition.hpp"

namespace qboson {

/// Element of the hyperoctahedral group: x_j -> x_{perm[j]}^{sign[j]}.
/// perm is a 1-based permutation image vector, sign entries are +-1.
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> sign;

    int n() const { return static_cast<int>(perm.size()); }
    static SignedPermutation identity(int n);
    SignedPermutation inverse() const;
};

/// All 2^n n! group elements in a fixed order: permutations
/// lexicographically, sign patterns in binary counting order with the
/// all-plus pattern first (bit j-1 of the counter flips the sign of
/// variable j).
std::vector<SignedPermutation> hyperoctahedral_group(int n);

LaurentPoly apply_signed_permutation(const LaurentPoly& p, const SignedPermutation& w);
RationalFunction apply_signed_permutation(const RationalFunction& f, const SignedPermutation& w);

/// Normalization constant c_lambda of the polynomial family.  Besides
/// the ParamSet guard this requires 1 + t^{n-j} != 0 and
/// 1 - t0 t_r t^{n-j} != 0 where the printed delta-exponents demand it.
Rational c_norm(const Partition& lambda, const ParamSet& params);

/// The unsymmetrized kernel C_lambda as an unreduced rational function
/// in x_1..x_n (x_j standing for e^{i xi_j}).
RationalFunction c_factor(const Partition& lambda, const ParamSet& params);

/// The multiplier polynomial E_l: the sum over l-subsets j_1<...<j_l of
/// products (x_{j_k} + x_{j_k}^-1 - t^{j_k-k} t0 - t^-(j_k-k) t0^-1).
LaurentPoly e_poly(int n, int l, const ParamSet& params);

/// The hyperoctahedral Hall-Littlewood polynomial P_lambda: the orbit
/// sum of C_lambda times the weight monomial, accumulated over a common
/// canonical denominator and resolved by exact division, scaled by
/// c_lambda.  The result is checked to be invariant under the group
/// generators and supported on exponents bounded by lambda_1.
LaurentPoly hall_littlewood(const Partition& lambda, const ParamSet& params);

/// Memoized P_lambda construction for a fixed parameter set; safe to
/// share read-only, not synchronized for concurrent mutation.
class PolynomialCache {
public:
    explicit PolynomialCache(ParamSet params);
    ~PolynomialCache();

    const ParamSet& params() const { return params_; }
    const LaurentPoly& get(const Partition& lambda);

private:
    struct Orbit;
    const Orbit& orbit(int n);

    ParamSet params_;
    std::map<Partition, LaurentPoly> memo_;
    std::map<int, std::unique_ptr<Orbit>> orbits_;
};

/// P_lambda evaluated at the principal specialization point
/// x_j = (t0 t^{n-j})^-1; equals 1 for every lambda.
Rational principal_specialize(const Partition& lambda, const ParamSet& params);
Rational principal_specialize(const Partition& lambda, PolynomialCache& cache);

/// Outcome of one Pieri check: the recurrence residual
///   sum_pairs U_{K, l-|J+|-|J-|}(lambda) V_{J+,J-}(lambda) P_shifted  -  E_l P_lambda
/// as an exact Laurent polynomial, together with the expansion
/// coefficients used.  pass iff the residual is identically zero.
struct PieriReport {
    Partition lambda;
    int l = 0;
    ParamMode mode = ParamMode::ThreeParam;
    CoeffVariant variant = CoeffVariant::RestrictedInnerSum;
    LaurentPoly residual;
    std::vector<std::pair<Partition, Rational>> expansion;
    bool pass = false;
};

PieriReport verify_pieri(const Partition& lambda, int l, const ParamSet& params,
                         CoeffVariant variant = CoeffVariant::RestrictedInnerSum);
PieriReport verify_pieri(const Partition& lambda, int l, CoeffVariant variant,
                         PolynomialCache& cache);

} // namespace qboson
