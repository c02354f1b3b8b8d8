#include "qboson/coefficients.hpp"

#include <algorithm>

namespace qboson {

namespace {

const Rational kOne(1);

// (1 - t^{1+d}) / (1 - t^d) for d = k - j != 0.  The numerator vanishes
// exactly at d = -1, which is what silently removes inner configurations
// whose shift would break weak decrease between equal parts.
Rational equal_part_ratio(const ParamSet& P, int d) {
    const Rational den = kOne - P.t_pow(d);
    if (den.is_zero())
        throw ParameterDegeneracy("vanishing denominator 1 - t^" + std::to_string(d));
    return (kOne - P.t_pow(1 + d)) / den;
}

Rational checked_factor(const Rational& value, const char* what) {
    if (value.is_zero()) throw ParameterDegeneracy(std::string("vanishing denominator ") + what);
    return value;
}

// Product over 1 <= r < s <= 3 of (1 - t_r t_s t^e).
Rational pair_coupling_123(const ParamSet& P, int e) {
    const Rational te = P.t_pow(e);
    return (kOne - P.t1() * P.t2() * te) * (kOne - P.t1() * P.t3() * te) *
           (kOne - P.t2() * P.t3() * te);
}

// Product over 1 <= r <= 3 of (1 - t0 t_r t^e).
Rational boundary_coupling_123(const ParamSet& P, int e) {
    const Rational te = P.t_pow(e);
    return (kOne - P.t0() * P.t1() * te) * (kOne - P.t0() * P.t2() * te) *
           (kOne - P.t0() * P.t3() * te);
}

// Product over 0 <= r < s <= 2 of (1 - t_r t_s t^e).
Rational pair_coupling_012(const ParamSet& P, int e) {
    const Rational te = P.t_pow(e);
    return (kOne - P.t0() * P.t1() * te) * (kOne - P.t0() * P.t2() * te) *
           (kOne - P.t1() * P.t2() * te);
}

// Product over 0 <= r < s <= 3 of (1 - t_r t_s t^e).
Rational pair_coupling_0123(const ParamSet& P, int e) {
    return pair_coupling_012(P, e) * (kOne - P.t0() * P.t3() * P.t_pow(e)) *
           (kOne - P.t1() * P.t3() * P.t_pow(e)) *
           (kOne - P.t2() * P.t3() * P.t_pow(e));
}

// The shared tail of W, U and V: ordered pairs of indices carrying
// equal parts with strictly decreasing signs.  W and V range over
// 1 <= j < k <= n only; U ranges over all ordered pairs of K.
Rational equal_part_pair_product(const ParamSet& P, const Partition& lambda,
                                 const SignVector& eps, bool ordered_only) {
    const int n = lambda.n();
    Rational out(1);
    for (int j = 1; j <= n; ++j) {
        for (int k = ordered_only ? j + 1 : 1; k <= n; ++k) {
            if (k == j) continue;
            if (lambda.part(j) == lambda.part(k) && eps.at(j) > eps.at(k))
                out *= equal_part_ratio(P, k - j);
        }
    }
    return out;
}

// lambda_k = 1 when eps_k = -1, lambda_k = 0 when eps_k is 0 or +1.
int delta_shift_target(int eps_k) { return eps_k == -1 ? 1 : 0; }

} // namespace

std::string to_string(CoeffVariant variant) {
    return variant == CoeffVariant::RestrictedInnerSum ? "restricted" : "literal";
}

Rational coeff_w(const ParamSet& P, const Partition& lambda, const ShiftPair& pair) {
    const int n = lambda.n();
    P.require_scope(n);
    pair.validate(n);
    const SignVector eps(pair, n);

    Rational out(1);
    if (P.mode() == ParamMode::ThreeParam) {
        for (int j : pair.plus)
            if (lambda.part(j) == 0) out *= pair_coupling_012(P, n - j);
    } else {
        const Rational tau = P.tau();
        const int m0 = multiplicity(lambda, 0);
        const int m1 = multiplicity(lambda, 1);
        const int m1_plus = multiplicity(lambda, 1, pair.plus);
        for (int j : pair.plus) {
            if (lambda.part(j) == 1) {
                out *= kOne - tau * P.t_pow(n - j + m0);
            } else if (lambda.part(j) == 0) {
                const Rational num = (kOne - tau * P.t_pow(n - j - 1)) *
                                     (kOne - tau * P.t_pow(n - j + m0 + m1 - m1_plus)) *
                                     pair_coupling_0123(P, n - j);
                const Rational d0 = checked_factor(kOne - tau * P.t_pow(2 * (n - j) - 1),
                                                   "1 - tau t^(2(n-j)-1)");
                const Rational d1 = checked_factor(kOne - tau * P.t_pow(2 * (n - j)),
                                                   "1 - tau t^(2(n-j))");
                const Rational d2 = checked_factor(kOne - tau * P.t_pow(2 * (n - j) + 1),
                                                   "1 - tau t^(2(n-j)+1)");
                out *= num / (d0 * d1 * d1 * d2);
            }
        }
    }
    out *= equal_part_pair_product(P, lambda, eps, /*ordered_only=*/true);
    return out;
}

Rational coeff_u_term(const ParamSet& P, const Partition& lambda,
                      const std::vector<int>& K, const ShiftPair& inner) {
    const int n = lambda.n();
    P.require_scope(n);
    inner.validate(n);

    // Signs are defined relative to K only; indices outside K never occur
    // in the products below.
    SignVector eps(inner, n);

    Rational term(1);
    if (P.mode() == ParamMode::ThreeParam) {
        for (int j : inner.plus)
            if (lambda.part(j) == 0)
                term *= (kOne - P.t0() * P.t1() * P.t_pow(n - j)) *
                        (kOne - P.t0() * P.t2() * P.t_pow(n - j));
        for (int j : inner.minus)
            if (lambda.part(j) == 1)
                term *= kOne - P.t1() * P.t2() * P.t_pow(n - j);
    } else {
        const Rational tau = P.tau();
        for (int j : inner.plus) {
            if (lambda.part(j) == 0) {
                const Rational den = checked_factor(kOne - tau * P.t_pow(2 * (n - j)),
                                                    "1 - tau t^(2(n-j))");
                term *= boundary_coupling_123(P, n - j) / den;
            } else if (lambda.part(j) == 1) {
                term *= kOne - tau * P.t_pow(n - j);
            }
        }
        for (int j : inner.minus) {
            if (lambda.part(j) == 1) {
                const Rational den = checked_factor(kOne - tau * P.t_pow(2 * (n - j)),
                                                    "1 - tau t^(2(n-j))");
                term *= pair_coupling_123(P, n - j) / den;
            }
        }
        // First tau pair product: j < k in K with eps_j + eps_k in
        // {-2, 1, 2}, lambda_j = 1 and lambda_k matching the delta
        // condition on eps_k.
        for (std::size_t a = 0; a < K.size(); ++a) {
            for (std::size_t b = a + 1; b < K.size(); ++b) {
                const int j = K[a], k = K[b];
                const int s = eps.at(j) + eps.at(k);
                if (s != -2 && s != 1 && s != 2) continue;
                if (lambda.part(j) != 1) continue;
                if (lambda.part(k) != delta_shift_target(eps.at(k))) continue;
                const Rational den = checked_factor(kOne - tau * P.t_pow(2 * n - j - k),
                                                    "1 - tau t^(2n-j-k)");
                term *= (kOne - tau * P.t_pow(2 * n + 1 - j - k)) / den;
            }
        }
        // Second tau pair product: j in I_+ or I_-, k in K \ I_-, j < k,
        // eps_k - eps_j in {0, 1}, lambda_j matching its delta condition
        // and lambda_k = 0.
        for (int j : K) {
            if (eps.at(j) == 0) continue;
            for (int k : K) {
                if (k <= j || eps.at(k) == -1) continue;
                const int d = eps.at(k) - eps.at(j);
                if (d != 0 && d != 1) continue;
                if (lambda.part(j) != delta_shift_target(eps.at(j))) continue;
                if (lambda.part(k) != 0) continue;
                const Rational den = checked_factor(kOne - tau * P.t_pow(2 * n - j - k),
                                                    "1 - tau t^(2n-j-k)");
                term *= (kOne - tau * P.t_pow(2 * n - 1 - j - k)) / den;
            }
        }
    }

    // Equal-part ratios over all ordered pairs of K (no j < k here; the
    // reversed pairs contribute the vanishing 1 - t^0 factor for
    // order-breaking configurations).
    for (int j : K)
        for (int k : K) {
            if (k == j) continue;
            if (lambda.part(j) == lambda.part(k) && eps.at(j) > eps.at(k))
                term *= equal_part_ratio(P, k - j);
        }
    // Step-down pairs between the lowering and raising sets.
    for (int j : inner.minus)
        for (int k : inner.plus)
            if (lambda.part(j) == lambda.part(k) + 1)
                term *= equal_part_ratio(P, k - j);

    // Monomial tail.
    for (int j : K) term *= P.t0().pow(-eps.at(j));
    for (std::size_t a = 0; a < K.size(); ++a)
        for (std::size_t b = a + 1; b < K.size(); ++b) {
            const int j = K[a], k = K[b];
            if (eps.at(k) == 0 && eps.at(j) != 0) term *= P.t_pow(-eps.at(j));
            if (lambda.part(j) == lambda.part(k) && eps.at(k) - eps.at(j) == 1)
                term *= P.t_pow(-1);
        }
    return term;
}

Rational coeff_u(const ParamSet& P, const Partition& lambda,
                 const std::vector<int>& K, int m, CoeffVariant variant) {
    const int n = lambda.n();
    P.require_scope(n);
    if (m < 0 || m > static_cast<int>(K.size()))
        throw InvalidOrder("inner order m must satisfy 0 <= m <= |K|");
    ShiftPair probe{K, {}};
    probe.validate(n);

    Rational sum(0);
    // Size-m subsets of K carrying all 2^m sign splittings.
    std::vector<int> support;
    auto emit = [&]() {
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            ShiftPair inner;
            for (int i = 0; i < m; ++i) {
                const bool neg = (mask >> (m - 1 - i)) & 1u;
                (neg ? inner.minus : inner.plus).push_back(support[static_cast<std::size_t>(i)]);
            }
            if (variant == CoeffVariant::RestrictedInnerSum) {
                const bool drops_below_zero =
                    std::any_of(inner.minus.begin(), inner.minus.end(),
                                [&](int j) { return lambda.part(j) == 0; });
                if (drops_below_zero) continue;
            }
            sum += coeff_u_term(P, lambda, K, inner);
        }
    };
    auto recurse = [&](auto&& self, std::size_t next, int remaining) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (std::size_t i = next; i + static_cast<std::size_t>(remaining) <= K.size(); ++i) {
            support.push_back(K[i]);
            self(self, i + 1, remaining - 1);
            support.pop_back();
        }
    };
    recurse(recurse, 0, m);
    return (m % 2 == 0) ? sum : -sum;
}

Rational coeff_v(const ParamSet& P, const Partition& lambda, const ShiftPair& pair) {
    const int n = lambda.n();
    P.require_scope(n);
    pair.validate(n);
    const SignVector eps(pair, n);

    Rational out(1);
    if (P.mode() == ParamMode::ThreeParam) {
        for (int j : pair.plus)
            if (lambda.part(j) == 0)
                out *= (kOne - P.t0() * P.t1() * P.t_pow(n - j)) *
                       (kOne - P.t0() * P.t2() * P.t_pow(n - j));
        for (int j : pair.minus)
            if (lambda.part(j) == 1)
                out *= kOne - P.t1() * P.t2() * P.t_pow(n - j);
    } else {
        const Rational tau = P.tau();
        const int m0 = multiplicity(lambda, 0);
        const int m1 = multiplicity(lambda, 1);
        const int m1_plus = multiplicity(lambda, 1, pair.plus);
        for (int j : pair.plus) {
            if (lambda.part(j) == 0) {
                const Rational num = (kOne - tau * P.t_pow(n - j + m0 + m1 - m1_plus)) *
                                     boundary_coupling_123(P, n - j);
                const Rational d1 = checked_factor(kOne - tau * P.t_pow(2 * (n - j)),
                                                   "1 - tau t^(2(n-j))");
                const Rational d2 = checked_factor(kOne - tau * P.t_pow(2 * (n - j) + 1),
                                                   "1 - tau t^(2(n-j)+1)");
                out *= num / (d1 * d2);
            } else if (lambda.part(j) == 1) {
                out *= kOne - tau * P.t_pow(n - j + m0);
            }
        }
        for (int j : pair.minus) {
            if (lambda.part(j) == 1) {
                const Rational num = (kOne - tau * P.t_pow(n - j - 1)) *
                                     pair_coupling_123(P, n - j);
                const Rational d1 = checked_factor(kOne - tau * P.t_pow(2 * (n - j)),
                                                   "1 - tau t^(2(n-j))");
                const Rational d2 = checked_factor(kOne - tau * P.t_pow(2 * (n - j) - 1),
                                                   "1 - tau t^(2(n-j)-1)");
                out *= num / (d1 * d2);
            }
        }
    }
    out *= equal_part_pair_product(P, lambda, eps, /*ordered_only=*/true);
    for (int j = 1; j <= n; ++j)
        out *= P.t0().pow(-eps.at(j)) * P.t_pow(-(n - j) * eps.at(j));
    return out;
}

Rational gauge_h(const ParamSet& P, const Partition& lambda) {
    const int n = lambda.n();
    P.require_scope(n);
    Rational out(1);
    if (P.mode() == ParamMode::ThreeParam) {
        for (int j = 1; j <= n; ++j) {
            if (lambda.part(j) == 0) continue;
            out *= P.t0().pow(lambda.part(j)) * P.t_pow((n - j) * lambda.part(j)) *
                   (kOne - P.t1() * P.t2() * P.t_pow(n - j));
        }
    } else {
        const Rational tau = P.tau();
        const int m0 = multiplicity(lambda, 0);
        for (int j = 1; j <= n; ++j) {
            out *= P.t0().pow(lambda.part(j)) * P.t_pow((n - j) * lambda.part(j));
            if (lambda.part(j) == 0)
                out *= kOne - tau * P.t_pow(n + m0 - j - 1);
            else
                out *= pair_coupling_123(P, n - j);
        }
    }
    return out;
}

bool check_gauge_relation(const ParamSet& P, const Partition& lambda,
                          const ShiftPair& pair) {
    const auto shifted = shift_partition(lambda, pair);
    if (!shifted) throw ConfigError("gauge check needs an admissible shift");
    return coeff_v(P, lambda, pair) * gauge_h(P, *shifted) ==
           coeff_w(P, lambda, pair) * gauge_h(P, lambda);
}

Rational constant_shift(int n, const ParamSet& P) {
    P.require_scope(n);
    Rational out(0);
    for (int j = 1; j <= n; ++j)
        out += P.t0() * P.t_pow(n - j) + P.t0().inv() * P.t_pow(-(n - j));
    return out;
}

} // namespace qboson
