#include "qboson/operators.hpp"

#include <set>

namespace qboson {

namespace {

const Rational kOne(1);

std::vector<int> complement_of(const ShiftPair& pair, int n) {
    std::vector<int> K;
    K.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        if (epsilon(j, pair, n) == 0) K.push_back(j);
    return K;
}

// (1 - t^{1+d}) / (1 - t^d)
Rational ratio(const ParamSet& P, int d) {
    return (kOne - P.t_pow(1 + d)) / (kOne - P.t_pow(d));
}

// Product over k > j with lambda_k = lambda_j.
Rational right_run(const ParamSet& P, const Partition& lambda, int j) {
    Rational out(1);
    for (int k = j + 1; k <= lambda.n(); ++k)
        if (lambda.part(k) == lambda.part(j)) out *= ratio(P, k - j);
    return out;
}

// Product over k < j with lambda_k = lambda_j.
Rational left_run(const ParamSet& P, const Partition& lambda, int j) {
    Rational out(1);
    for (int k = 1; k < j; ++k)
        if (lambda.part(k) == lambda.part(j)) out *= ratio(P, j - k);
    return out;
}

} // namespace

CoefficientCache::CoefficientCache(ParamSet params, CoeffVariant variant)
    : params_(std::move(params)), variant_(variant) {}

const Rational& CoefficientCache::w(const Partition& lambda, const ShiftPair& pair) {
    auto key = std::make_tuple(lambda.parts(), pair.plus, pair.minus);
    auto it = w_.find(key);
    if (it == w_.end())
        it = w_.emplace(std::move(key), coeff_w(params_, lambda, pair)).first;
    return it->second;
}

const Rational& CoefficientCache::u(const Partition& lambda,
                                    const std::vector<int>& K, int m) {
    auto key = std::make_tuple(lambda.parts(), K, m);
    auto it = u_.find(key);
    if (it == u_.end())
        it = u_.emplace(std::move(key), coeff_u(params_, lambda, K, m, variant_)).first;
    return it->second;
}

LatticeFunction apply_h(int l, const LatticeFunction& f, CoefficientCache& cache) {
    const int n = f.n();
    if (l < 1 || l > n) throw InvalidOrder("operator order must satisfy 1 <= l <= n");
    cache.params().require_scope(n);

    const std::vector<ShiftPair> pairs = enumerate_shift_pairs(n, l);

    // Candidate outputs: lambda with lambda + e_{J+} - e_{J-} in supp(f).
    std::set<Partition> candidates;
    for (const auto& [mu, c] : f.support()) {
        for (const ShiftPair& pair : pairs) {
            std::vector<int> parts = mu.parts();
            for (int j : pair.plus) --parts[static_cast<std::size_t>(j - 1)];
            for (int j : pair.minus) ++parts[static_cast<std::size_t>(j - 1)];
            if (auto lambda = Partition::try_make(std::move(parts)))
                candidates.insert(std::move(*lambda));
        }
    }

    LatticeFunction g(n);
    for (const Partition& lambda : candidates) {
        Rational total(0);
        for (const ShiftPair& pair : pairs) {
            const auto shifted = shift_partition(lambda, pair);
            if (!shifted) continue;
            const Rational fv = f.value(*shifted);
            if (fv.is_zero()) continue;
            const std::vector<int> K = complement_of(pair, n);
            total += cache.u(lambda, K, l - pair.order()) * cache.w(lambda, pair) * fv;
        }
        g.add(lambda, total);
    }
    return g;
}

LatticeFunction apply_h(int l, const LatticeFunction& f, const ParamSet& params,
                        CoeffVariant variant) {
    CoefficientCache cache(params, variant);
    return apply_h(l, f, cache);
}

Rational h1_w_plus(const ParamSet& P, const Partition& lambda, int j) {
    const int n = lambda.n();
    P.require_scope(n);
    Rational out = right_run(P, lambda, j);
    if (P.mode() == ParamMode::ThreeParam) {
        if (lambda.part(j) == 0) {
            const Rational te = P.t_pow(n - j);
            out *= (kOne - P.t0() * P.t1() * te) * (kOne - P.t0() * P.t2() * te) *
                   (kOne - P.t1() * P.t2() * te);
        }
    } else {
        const Rational tau = P.tau();
        const int m0 = multiplicity(lambda, 0);
        const int m1 = multiplicity(lambda, 1);
        if (lambda.part(j) == 0 || lambda.part(j) == 1)
            out *= kOne - tau * P.t_pow(2 * m0 + m1 - 1);
        if (lambda.part(j) == 0) {
            const Rational te = P.t_pow(n - j);
            Rational num = (kOne - tau * P.t_pow(n - j - 1)) *
                           (kOne - P.t0() * P.t1() * te) * (kOne - P.t0() * P.t2() * te) *
                           (kOne - P.t0() * P.t3() * te) * (kOne - P.t1() * P.t2() * te) *
                           (kOne - P.t1() * P.t3() * te) * (kOne - P.t2() * P.t3() * te);
            const Rational d0 = kOne - tau * P.t_pow(2 * (n - j) - 1);
            const Rational d1 = kOne - tau * P.t_pow(2 * (n - j));
            const Rational d2 = kOne - tau * P.t_pow(2 * (n - j) + 1);
            if (d0.is_zero() || d1.is_zero() || d2.is_zero())
                throw ParameterDegeneracy("vanishing tau denominator in w+");
            out *= num / (d0 * d1 * d1 * d2);
        }
    }
    return out;
}

Rational h1_w_minus(const ParamSet& P, const Partition& lambda, int j) {
    P.require_scope(lambda.n());
    return left_run(P, lambda, j);
}

Rational h1_potential(const ParamSet& P, const Partition& lambda) {
    const int n = lambda.n();
    P.require_scope(n);
    const Rational tau = P.tau();
    const int m0 = multiplicity(lambda, 0);
    const int m1 = multiplicity(lambda, 1);

    Rational out(0);
    for (int j = 1; j <= n; ++j) {
        // Raising branch: lambda + e_j must stay in the cone.
        if (j == 1 || lambda.part(j - 1) > lambda.part(j)) {
            Rational term = P.t0().inv() * P.t_pow(-(n - j)) * right_run(P, lambda, j);
            if (P.mode() == ParamMode::ThreeParam) {
                if (lambda.part(j) == 0) {
                    const Rational te = P.t_pow(n - j);
                    term *= (kOne - P.t0() * P.t1() * te) * (kOne - P.t0() * P.t2() * te);
                }
            } else {
                if (lambda.part(j) == 0 || lambda.part(j) == 1)
                    term *= kOne - tau * P.t_pow(2 * m0 + m1 - 1);
                if (lambda.part(j) == 0) {
                    const Rational te = P.t_pow(n - j);
                    const Rational num = (kOne - P.t0() * P.t1() * te) *
                                         (kOne - P.t0() * P.t2() * te) *
                                         (kOne - P.t0() * P.t3() * te);
                    const Rational d1 = kOne - tau * P.t_pow(2 * (n - j));
                    const Rational d2 = kOne - tau * P.t_pow(2 * (n - j) + 1);
                    if (d1.is_zero() || d2.is_zero())
                        throw ParameterDegeneracy("vanishing tau denominator in u");
                    term *= num / (d1 * d2);
                }
            }
            out -= term;
        }
        // Lowering branch: lambda - e_j must stay in the cone.
        if (lambda.part(j) > 0 && (j == n || lambda.part(j) > lambda.part(j + 1))) {
            Rational term = P.t0() * P.t_pow(n - j) * left_run(P, lambda, j);
            if (P.mode() == ParamMode::ThreeParam) {
                if (lambda.part(j) == 1)
                    term *= kOne - P.t1() * P.t2() * P.t_pow(n - j);
            } else {
                if (lambda.part(j) == 1) {
                    const Rational te = P.t_pow(n - j);
                    const Rational num = (kOne - tau * P.t_pow(n - j - 1)) *
                                         (kOne - P.t1() * P.t2() * te) *
                                         (kOne - P.t1() * P.t3() * te) *
                                         (kOne - P.t2() * P.t3() * te);
                    const Rational d1 = kOne - tau * P.t_pow(2 * (n - j) - 1);
                    const Rational d2 = kOne - tau * P.t_pow(2 * (n - j));
                    if (d1.is_zero() || d2.is_zero())
                        throw ParameterDegeneracy("vanishing tau denominator in u");
                    term *= num / (d1 * d2);
                }
            }
            out -= term;
        }
    }
    return out;
}

LatticeFunction apply_h1_explicit(const LatticeFunction& f, const ParamSet& P) {
    const int n = f.n();
    P.require_scope(n);

    std::set<Partition> candidates;
    for (const auto& [mu, c] : f.support()) {
        candidates.insert(mu);
        for (int j = 1; j <= n; ++j) {
            std::vector<int> up = mu.parts(), down = mu.parts();
            ++up[static_cast<std::size_t>(j - 1)];
            --down[static_cast<std::size_t>(j - 1)];
            if (auto p = Partition::try_make(std::move(up))) candidates.insert(std::move(*p));
            if (auto p = Partition::try_make(std::move(down))) candidates.insert(std::move(*p));
        }
    }

    LatticeFunction g(n);
    for (const Partition& lambda : candidates) {
        Rational total = h1_potential(P, lambda) * f.value(lambda);
        for (int j = 1; j <= n; ++j) {
            std::vector<int> up = lambda.parts();
            ++up[static_cast<std::size_t>(j - 1)];
            if (auto raised = Partition::try_make(std::move(up))) {
                const Rational fv = f.value(*raised);
                if (!fv.is_zero()) total += h1_w_plus(P, lambda, j) * fv;
            }
            std::vector<int> down = lambda.parts();
            --down[static_cast<std::size_t>(j - 1)];
            if (auto lowered = Partition::try_make(std::move(down))) {
                const Rational fv = f.value(*lowered);
                if (!fv.is_zero()) total += h1_w_minus(P, lambda, j) * fv;
            }
        }
        g.add(lambda, total);
    }
    return g;
}

LatticeFunction commutator(int k, int l, const LatticeFunction& f,
                           CoefficientCache& cache) {
    LatticeFunction kl = apply_h(k, apply_h(l, f, cache), cache);
    LatticeFunction lk = apply_h(l, apply_h(k, f, cache), cache);
    kl -= lk;
    return kl;
}

LatticeFunction commutator(int k, int l, const LatticeFunction& f,
                           const ParamSet& params, CoeffVariant variant) {
    CoefficientCache cache(params, variant);
    return commutator(k, l, f, cache);
}

} // namespace qboson
