#include "qboson/hall_littlewood.hpp"

#include <algorithm>
#include <numeric>

namespace qboson {

namespace {

const Rational kOne(1);

// 1 - c * x^exps
LaurentPoly binomial(int nvars, const Rational& c, ExponentVec exps) {
    LaurentPoly p = LaurentPoly::constant(nvars, kOne);
    p.add_term(exps, -c);
    return p;
}

ExponentVec unit_vec(int nvars, int j, int value) {
    ExponentVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(j - 1)] = value;
    return e;
}

ExponentVec pair_vec(int nvars, int a, int ea, int b, int eb) {
    ExponentVec e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(a - 1)] = ea;
    e[static_cast<std::size_t>(b - 1)] = eb;
    return e;
}

} // namespace

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation w;
    w.perm.resize(static_cast<std::size_t>(n));
    std::iota(w.perm.begin(), w.perm.end(), 1);
    w.sign.assign(static_cast<std::size_t>(n), 1);
    return w;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation inv;
    inv.perm.resize(perm.size());
    inv.sign.resize(perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) {
        inv.perm[static_cast<std::size_t>(perm[j] - 1)] = static_cast<int>(j + 1);
        inv.sign[static_cast<std::size_t>(perm[j] - 1)] = sign[j];
    }
    return inv;
}

std::vector<SignedPermutation> hyperoctahedral_group(int n) {
    if (n < 1) throw ConfigError("group rank must be positive");
    std::vector<SignedPermutation> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            SignedPermutation w;
            w.perm = perm;
            w.sign.resize(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j)
                w.sign[static_cast<std::size_t>(j)] = (mask >> j) & 1u ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

LaurentPoly apply_signed_permutation(const LaurentPoly& p, const SignedPermutation& w) {
    if (w.n() != p.nvars()) throw ArityMismatch("permutation rank mismatch");
    LaurentPoly out(p.nvars());
    ExponentVec e(static_cast<std::size_t>(p.nvars()));
    for (const auto& [exps, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t j = 0; j < exps.size(); ++j)
            e[static_cast<std::size_t>(w.perm[j] - 1)] = w.sign[j] * exps[j];
        out.add_term(e, c);
    }
    return out;
}

RationalFunction apply_signed_permutation(const RationalFunction& f, const SignedPermutation& w) {
    return RationalFunction(apply_signed_permutation(f.num(), w),
                            apply_signed_permutation(f.den(), w));
}

Rational c_norm(const Partition& lambda, const ParamSet& P) {
    const int n = lambda.n();
    P.require_scope(n);
    const Rational ts[3] = {P.t1(), P.t2(), P.t3()};
    Rational out(1);
    for (int j = 1; j <= n; ++j) {
        const Rational num =
            P.t0().pow(lambda.part(j)) * P.t_pow((n - j) * lambda.part(j)) * (kOne - P.t());
        Rational den = kOne - P.t_pow(j);
        if (lambda.part(j) == 0) {
            const Rational f = kOne + P.t_pow(n - j);
            if (f.is_zero())
                throw ParameterDegeneracy("vanishing factor 1 + t^" + std::to_string(n - j));
            den *= f;
        } else {
            for (const Rational& tr : ts) {
                const Rational f = kOne - P.t0() * tr * P.t_pow(n - j);
                if (f.is_zero())
                    throw ParameterDegeneracy("vanishing factor 1 - t0*t_r*t^" +
                                              std::to_string(n - j));
                den *= f;
            }
        }
        out *= num / den;
    }
    return out;
}

RationalFunction c_factor(const Partition& lambda, const ParamSet& P) {
    const int n = lambda.n();
    P.require_scope(n);
    LaurentPoly num = LaurentPoly::constant(n, kOne);
    LaurentPoly den = LaurentPoly::constant(n, kOne);
    for (int j = 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
            num *= binomial(n, P.t(), pair_vec(n, j, 1, k, -1));
            num *= binomial(n, P.t(), pair_vec(n, j, 1, k, 1));
            den *= binomial(n, kOne, pair_vec(n, j, 1, k, -1));
            den *= binomial(n, kOne, pair_vec(n, j, 1, k, 1));
        }
    const Rational ts[4] = {P.t0(), P.t1(), P.t2(), P.t3()};
    for (int j = 1; j <= n; ++j) {
        if (lambda.part(j) == 0) continue;
        for (const Rational& tr : ts)
            if (!tr.is_zero()) num *= binomial(n, tr, unit_vec(n, j, 1));
        den *= binomial(n, kOne, unit_vec(n, j, 2));
    }
    return RationalFunction(std::move(num), std::move(den));
}

LaurentPoly e_poly(int n, int l, const ParamSet& P) {
    if (l < 1 || l > n) throw InvalidOrder("multiplier order must satisfy 1 <= l <= n");
    P.require_scope(n);
    LaurentPoly out(n);
    std::vector<int> subset;
    auto emit = [&]() {
        LaurentPoly term = LaurentPoly::constant(n, kOne);
        for (int k = 1; k <= l; ++k) {
            const int j = subset[static_cast<std::size_t>(k - 1)];
            LaurentPoly factor(n);
            factor.add_term(unit_vec(n, j, 1), kOne);
            factor.add_term(unit_vec(n, j, -1), kOne);
            factor.add_term(ExponentVec(static_cast<std::size_t>(n), 0),
                            -(P.t_pow(j - k) * P.t0() + P.t_pow(-(j - k)) * P.t0().inv()));
            term *= factor;
        }
        out += term;
    };
    auto recurse = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int j = next; j <= n - remaining + 1; ++j) {
            subset.push_back(j);
            self(self, j + 1, remaining - 1);
            subset.pop_back();
        }
    };
    recurse(recurse, 1, l);
    return out;
}

// ----------------------------------------------------------- orbit assembly

/// Per-rank data reused by every P_lambda at that rank: the group, the
/// lambda-independent pair parts of each orbit term, and the canonical
/// denominator factors.
struct PolynomialCache::Orbit {
    std::vector<SignedPermutation> group;
    std::vector<LaurentPoly> pair_parts;
    std::vector<LaurentPoly> pair_dens;
    std::vector<LaurentPoly> boundary_dens;
};

const PolynomialCache::Orbit& PolynomialCache::orbit(int n) {
    auto it = orbits_.find(n);
    if (it != orbits_.end()) return *it->second;

    auto orb = std::make_unique<Orbit>();
    orb->group = hyperoctahedral_group(n);

    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            orb->pair_dens.push_back(binomial(n, kOne, pair_vec(n, a, 1, b, -1)));
            orb->pair_dens.push_back(binomial(n, kOne, pair_vec(n, a, 1, b, 1)));
        }
        orb->boundary_dens.push_back(binomial(n, kOne, unit_vec(n, a, 2)));
    }

    // Pair part of the orbit term for w, with y_j = x_{sigma(j)}^{s_j}:
    //   prod_{j<k} (1 - t y_j y_k^{-1})(1 - t y_j y_k)
    // divided by the unit relating the w-image pair denominators to the
    // canonical ones.  Every w consumes each canonical pair denominator
    // exactly once, so no pair cofactor remains.
    orb->pair_parts.reserve(orb->group.size());
    for (const SignedPermutation& w : orb->group) {
        LaurentPoly part = LaurentPoly::constant(n, kOne);
        int unit_sign = 1;
        ExponentVec unit_exp(static_cast<std::size_t>(n), 0);
        for (int j = 1; j <= n; ++j) {
            const int a = w.perm[static_cast<std::size_t>(j - 1)];
            const int sa = w.sign[static_cast<std::size_t>(j - 1)];
            for (int k = j + 1; k <= n; ++k) {
                const int b = w.perm[static_cast<std::size_t>(k - 1)];
                const int sb = w.sign[static_cast<std::size_t>(k - 1)];
                for (const int dir : {-1, 1}) {
                    // numerator (1 - t x_a^{sa} x_b^{dir*sb})
                    part *= binomial(n, params_.t(), pair_vec(n, a, sa, b, dir * sb));
                    // denominator (1 - x_a^{sa} x_b^{dir*sb}), canonical
                    // iff the lower-indexed variable carries exponent +1
                    const int lo = std::min(a, b);
                    const int lo_exp = (lo == a) ? sa : dir * sb;
                    if (lo_exp != 1) {
                        unit_sign = -unit_sign;
                        unit_exp[static_cast<std::size_t>(a - 1)] -= sa;
                        unit_exp[static_cast<std::size_t>(b - 1)] -= dir * sb;
                    }
                }
            }
        }
        part *= LaurentPoly::monomial(n, unit_exp, Rational(unit_sign));
        orb->pair_parts.push_back(std::move(part));
    }

    auto [pos, inserted] = orbits_.emplace(n, std::move(orb));
    return *pos->second;
}

namespace {

// Throws unless p is invariant under the group generators and supported
// on exponents bounded by the largest part.
void check_wellformed(const LaurentPoly& p, const Partition& lambda) {
    if (p.max_abs_exponent() > lambda.max_part())
        throw Error("constructed polynomial violates the support bound at " + lambda.str());
    const int n = lambda.n();
    SignedPermutation flip = SignedPermutation::identity(n);
    flip.sign[0] = -1;
    if (apply_signed_permutation(p, flip) != p)
        throw Error("constructed polynomial is not sign-flip invariant at " + lambda.str());
    for (int i = 1; i < n; ++i) {
        SignedPermutation swap = SignedPermutation::identity(n);
        std::swap(swap.perm[static_cast<std::size_t>(i - 1)], swap.perm[static_cast<std::size_t>(i)]);
        if (apply_signed_permutation(p, swap) != p)
            throw Error("constructed polynomial is not transposition invariant at " +
                        lambda.str());
    }
}

} // namespace

PolynomialCache::PolynomialCache(ParamSet params) : params_(std::move(params)) {}

PolynomialCache::~PolynomialCache() = default;

const LaurentPoly& PolynomialCache::get(const Partition& lambda) {
    auto it = memo_.find(lambda);
    if (it != memo_.end()) return it->second;

    const int n = lambda.n();
    params_.require_scope(n);
    const Orbit& orb = orbit(n);
    const Rational ts[4] = {params_.t0(), params_.t1(), params_.t2(), params_.t3()};
    const bool has_positive = lambda.max_part() > 0;

    LaurentPoly sum(n);
    std::vector<char> used(static_cast<std::size_t>(n));
    for (std::size_t wi = 0; wi < orb.group.size(); ++wi) {
        const SignedPermutation& w = orb.group[wi];
        LaurentPoly term = orb.pair_parts[wi];
        int unit_sign = 1;
        ExponentVec mono(static_cast<std::size_t>(n), 0);
        std::fill(used.begin(), used.end(), 0);

        for (int j = 1; j <= n; ++j) {
            const int a = w.perm[static_cast<std::size_t>(j - 1)];
            const int s = w.sign[static_cast<std::size_t>(j - 1)];
            // weight monomial exponent: -s_j lambda_j on x_{sigma(j)}
            mono[static_cast<std::size_t>(a - 1)] -= s * lambda.part(j);
            if (lambda.part(j) == 0) continue;
            // boundary numerator prod_r (1 - t_r x_a^{s})
            for (const Rational& tr : ts)
                if (!tr.is_zero()) term *= binomial(n, tr, unit_vec(n, a, s));
            // boundary denominator (1 - x_a^{2s})
            used[static_cast<std::size_t>(a - 1)] = 1;
            if (s != 1) {
                unit_sign = -unit_sign;
                mono[static_cast<std::size_t>(a - 1)] += 2;
            }
        }
        if (has_positive)
            for (int a = 1; a <= n; ++a)
                if (!used[static_cast<std::size_t>(a - 1)])
                    term *= orb.boundary_dens[static_cast<std::size_t>(a - 1)];
        term *= LaurentPoly::monomial(n, mono, Rational(unit_sign));
        sum += term;
    }

    for (const LaurentPoly& d : orb.pair_dens) sum = divide_exact(sum, d);
    if (has_positive)
        for (const LaurentPoly& d : orb.boundary_dens) sum = divide_exact(sum, d);
    sum *= c_norm(lambda, params_);

    check_wellformed(sum, lambda);
    return memo_.emplace(lambda, std::move(sum)).first->second;
}

LaurentPoly hall_littlewood(const Partition& lambda, const ParamSet& params) {
    PolynomialCache cache(params);
    return cache.get(lambda);
}

Rational principal_specialize(const Partition& lambda, PolynomialCache& cache) {
    const int n = lambda.n();
    std::vector<Rational> point;
    point.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        point.push_back((cache.params().t0() * cache.params().t_pow(n - j)).inv());
    return cache.get(lambda).evaluate(point);
}

Rational principal_specialize(const Partition& lambda, const ParamSet& params) {
    PolynomialCache cache(params);
    return principal_specialize(lambda, cache);
}

PieriReport verify_pieri(const Partition& lambda, int l, CoeffVariant variant,
                         PolynomialCache& cache) {
    const int n = lambda.n();
    if (l < 1 || l > n) throw InvalidOrder("order must satisfy 1 <= l <= n");
    const ParamSet& P = cache.params();

    LaurentPoly expansion_sum(n);
    std::vector<std::pair<Partition, Rational>> expansion;
    for (const ShiftPair& pair : enumerate_shift_pairs(n, l)) {
        const auto shifted = shift_partition(lambda, pair);
        if (!shifted) continue;
        std::vector<int> K;
        for (int j = 1; j <= n; ++j)
            if (epsilon(j, pair, n) == 0) K.push_back(j);
        const Rational coeff = coeff_u(P, lambda, K, l - pair.order(), variant) *
                               coeff_v(P, lambda, pair);
        expansion_sum += cache.get(*shifted) * coeff;
        expansion.emplace_back(*shifted, coeff);
    }

    LaurentPoly residual = expansion_sum - e_poly(n, l, P) * cache.get(lambda);
    const bool pass = residual.is_zero();
    return PieriReport{lambda, l,    P.mode(),           variant,
                       std::move(residual), std::move(expansion), pass};
}

PieriReport verify_pieri(const Partition& lambda, int l, const ParamSet& params,
                         CoeffVariant variant) {
    PolynomialCache cache(params);
    return verify_pieri(lambda, l, variant, cache);
}

} // namespace qboson
