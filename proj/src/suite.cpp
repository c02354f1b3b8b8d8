#include "qboson/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <thread>

#include "qboson/hall_littlewood.hpp"
#include "qboson/operators.hpp"

namespace qboson {

namespace {

constexpr std::size_t kMaxFailuresPerUnit = 25;

const CheckKind kCanonicalOrder[] = {CheckKind::Gauge,     CheckKind::H1,
                                     CheckKind::Commute,   CheckKind::Pieri,
                                     CheckKind::Principal, CheckKind::Degenerate};

// Unbiased uniform draw on [lo, hi]; rejection keeps the sequence
// reproducible across platforms (mt19937_64 output is standardized,
// std::uniform_int_distribution is not).
int draw_int(std::mt19937_64& rng, int lo, int hi) {
    const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = range * (UINT64_MAX / range);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return lo + static_cast<int>(v % range);
}

Rational draw_rational(std::mt19937_64& rng, int bound) {
    int num = 0;
    while (num == 0) num = draw_int(rng, -bound, bound);
    const int den = draw_int(rng, 2, bound);
    return Rational(static_cast<long>(num), static_cast<long>(den));
}

void record_failure(CheckUnitResult& result, Json failure) {
    ++result.failed;
    if (result.failures.size() < kMaxFailuresPerUnit)
        result.failures.push_back(std::move(failure));
    else
        result.truncated = true;
}

ParamSet make_params(ParamMode mode, const RawParams& v, int n) {
    return ParamSet(mode, v.t, v.t0, v.t1, v.t2,
                    mode == ParamMode::ThreeParam ? Rational(0) : v.t3, n);
}

// ---------------------------------------------------------------- checks

void run_gauge_cases(const ParamSet& P, int n, int cutoff, CheckUnitResult& out) {
    const auto pairs = enumerate_shift_pairs(n, n);
    for (const Partition& lambda : enumerate_partitions(n, cutoff)) {
        for (const ShiftPair& pair : pairs) {
            const auto shifted = shift_partition(lambda, pair);
            if (!shifted) continue;
            ++out.cases;
            const Rational lhs = coeff_v(P, lambda, pair) * gauge_h(P, *shifted);
            const Rational rhs = coeff_w(P, lambda, pair) * gauge_h(P, lambda);
            if (lhs != rhs) {
                Json f;
                f["lambda"] = to_json(lambda);
                f["pair"] = to_json(pair);
                f["lhs"] = to_json(lhs);
                f["rhs"] = to_json(rhs);
                record_failure(out, std::move(f));
            }
        }
    }
}

void run_h1_cases(const ParamSet& P, int n, int cutoff, CoeffVariant variant,
                  CheckUnitResult& out) {
    CoefficientCache cache(P, variant);
    for (const Partition& mu : enumerate_partitions(n, cutoff)) {
        ++out.cases;
        const LatticeFunction lhs = apply_h(1, LatticeFunction::delta(mu), cache);
        const LatticeFunction rhs = apply_h1_explicit(LatticeFunction::delta(mu), P);
        if (!(lhs == rhs)) {
            Json f;
            f["mu"] = to_json(mu);
            f["general_form"] = to_json(lhs);
            f["explicit_form"] = to_json(rhs);
            record_failure(out, std::move(f));
        }
    }
}

void run_commute_cases(const ParamSet& P, int n, int cutoff, int lmax,
                       CoeffVariant variant, CheckUnitResult& out) {
    CoefficientCache cache(P, variant);
    for (int k = 1; k <= lmax; ++k) {
        for (int l = k + 1; l <= lmax; ++l) {
            for (const Partition& mu : enumerate_partitions(n, cutoff)) {
                ++out.cases;
                const LatticeFunction c =
                    commutator(k, l, LatticeFunction::delta(mu), cache);
                if (!c.is_zero()) {
                    Json f;
                    f["k"] = k;
                    f["l"] = l;
                    f["mu"] = to_json(mu);
                    f["commutator"] = to_json(c);
                    record_failure(out, std::move(f));
                }
            }
        }
    }
}

void run_pieri_cases(const ParamSet& P, int n, int cutoff, int lmax,
                     CoeffVariant variant, CheckUnitResult& out) {
    PolynomialCache cache(P);
    for (const Partition& lambda : enumerate_partitions(n, cutoff)) {
        for (int l = 1; l <= lmax; ++l) {
            ++out.cases;
            const PieriReport report = verify_pieri(lambda, l, variant, cache);
            if (!report.pass) record_failure(out, to_json(report));
        }
    }
}

void run_principal_cases(const ParamSet& P, int n, int cutoff, CheckUnitResult& out) {
    PolynomialCache cache(P);
    for (const Partition& lambda : enumerate_partitions(n, cutoff)) {
        ++out.cases;
        const Rational value = principal_specialize(lambda, cache);
        if (!(value == Rational(1))) {
            Json f;
            f["lambda"] = to_json(lambda);
            f["value"] = to_json(value);
            record_failure(out, std::move(f));
        }
    }
}

// Four-parameter tuples: every coefficient at t3 = 0 must equal its
// three-parameter counterpart across the whole test lattice.
void run_degenerate_fourparam(const RawParams& values, int n, int cutoff,
                              CoeffVariant variant, CheckUnitResult& out) {
    RawParams at_zero = values;
    at_zero.t3 = Rational(0);
    const ParamSet P4(ParamMode::FourParam, at_zero.t, at_zero.t0, at_zero.t1,
                      at_zero.t2, Rational(0), n);
    const ParamSet P3 = make_params(ParamMode::ThreeParam, at_zero, n);

    auto mismatch = [&](const char* what, const Json& where, const Rational& three,
                        const Rational& four) {
        Json f;
        f["object"] = what;
        f["where"] = where;
        f["three"] = to_json(three);
        f["four_at_t3_zero"] = to_json(four);
        record_failure(out, std::move(f));
    };

    const auto pairs = enumerate_shift_pairs(n, n);
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> K;
        for (int j = 1; j <= n; ++j)
            if (mask >> (j - 1) & 1u) K.push_back(j);
        subsets.push_back(std::move(K));
    }

    for (const Partition& lambda : enumerate_partitions(n, cutoff)) {
        ++out.cases;
        const Rational h3 = gauge_h(P3, lambda), h4 = gauge_h(P4, lambda);
        if (h3 != h4) mismatch("h", to_json(lambda), h3, h4);

        for (const ShiftPair& pair : pairs) {
            if (!shift_partition(lambda, pair)) continue;
            ++out.cases;
            const Rational w3 = coeff_w(P3, lambda, pair), w4 = coeff_w(P4, lambda, pair);
            if (w3 != w4) mismatch("W", to_json(pair), w3, w4);
            ++out.cases;
            const Rational v3 = coeff_v(P3, lambda, pair), v4 = coeff_v(P4, lambda, pair);
            if (v3 != v4) mismatch("V", to_json(pair), v3, v4);
        }
        for (const auto& K : subsets) {
            for (int m = 0; m <= static_cast<int>(K.size()); ++m) {
                ++out.cases;
                const Rational u3 = coeff_u(P3, lambda, K, m, variant);
                const Rational u4 = coeff_u(P4, lambda, K, m, variant);
                if (u3 != u4) {
                    Json where;
                    where["lambda"] = to_json(lambda);
                    where["K"] = K;
                    where["m"] = m;
                    mismatch("U", where, u3, u4);
                }
            }
        }
    }
}

// Three-parameter tuples restated at t2 = 0: the recurrence and gauge
// identities must continue to hold in the degenerated family.
void run_degenerate_threeparam(const RawParams& values, int n, int cutoff, int lmax,
                               CoeffVariant variant, CheckUnitResult& out) {
    RawParams at_zero = values;
    at_zero.t2 = Rational(0);
    at_zero.t3 = Rational(0);
    if (!generic_for_suite(ParamMode::ThreeParam, at_zero, n)) {
        Json f;
        f["error"] = "tuple degenerate after setting t2 = 0";
        ++out.cases;
        record_failure(out, std::move(f));
        return;
    }
    const ParamSet P = make_params(ParamMode::ThreeParam, at_zero, n);
    run_pieri_cases(P, n, cutoff, lmax, variant, out);
    run_gauge_cases(P, n, cutoff, out);
}

int resolve_threads(const SuiteConfig& config, std::size_t units) {
    int threads = config.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("QBOSON_THREADS")) threads = std::atoi(env);
    }
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    return std::min<int>(threads, static_cast<int>(units ? units : 1));
}

} // namespace

std::string to_string(CheckKind check) {
    switch (check) {
        case CheckKind::Gauge: return "gauge";
        case CheckKind::H1: return "h1";
        case CheckKind::Commute: return "commute";
        case CheckKind::Pieri: return "pieri";
        case CheckKind::Principal: return "principal";
        case CheckKind::Degenerate: return "degenerate";
    }
    throw ConfigError("unknown check kind");
}

CheckKind check_from_name(const std::string& name) {
    for (CheckKind c : kCanonicalOrder)
        if (to_string(c) == name) return c;
    throw ConfigError("unknown check: \"" + name + "\"");
}

ParamMode mode_from_name(const std::string& name) {
    if (name == "three") return ParamMode::ThreeParam;
    if (name == "four") return ParamMode::FourParam;
    throw ConfigError("unknown mode: \"" + name + "\" (expected three or four)");
}

CoeffVariant variant_from_name(const std::string& name) {
    if (name == "restricted") return CoeffVariant::RestrictedInnerSum;
    if (name == "literal") return CoeffVariant::LiteralInnerSum;
    throw ConfigError("unknown variant: \"" + name + "\" (expected restricted or literal)");
}

bool generic_for_suite(ParamMode mode, const RawParams& v, int n) {
    try {
        make_params(mode, v, n);
    } catch (const ParameterDegeneracy&) {
        return false;
    }
    // Conditions of the polynomial normalization constant.
    const Rational one(1);
    for (int m = 0; m < n; ++m) {
        if (v.t.pow(m) == Rational(-1)) return false;
        for (const Rational& tr : {v.t1, v.t2, mode == ParamMode::FourParam ? v.t3 : Rational(0)})
            if (v.t0 * tr * v.t.pow(m) == one) return false;
    }
    return true;
}

RawParams draw_tuple(ParamMode mode, std::mt19937_64& rng, int bound, int n,
                     int& redraws) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        RawParams v;
        v.t = draw_rational(rng, bound);
        v.t0 = draw_rational(rng, bound);
        v.t1 = draw_rational(rng, bound);
        v.t2 = draw_rational(rng, bound);
        v.t3 = mode == ParamMode::FourParam ? draw_rational(rng, bound) : Rational(0);
        if (generic_for_suite(mode, v, n)) return v;
        ++redraws;
    }
    throw ConfigError("could not draw a generic parameter tuple");
}

Json SuiteReport::to_json(bool with_timings) const {
    Json out;
    out["config"] = config_echo;
    out["redraws"] = redraws;
    Json checks = Json::array();
    for (const CheckUnitResult& r : results) {
        Json entry;
        entry["check"] = to_string(r.check);
        entry["mode"] = to_string(r.mode);
        entry["tuple"] = r.tuple_index;
        Json params;
        params["t"] = qboson::to_json(r.params.t);
        params["t0"] = qboson::to_json(r.params.t0);
        params["t1"] = qboson::to_json(r.params.t1);
        params["t2"] = qboson::to_json(r.params.t2);
        params["t3"] = qboson::to_json(r.params.t3);
        entry["params"] = std::move(params);
        entry["cases"] = r.cases;
        entry["passed"] = r.cases - r.failed;
        entry["failed"] = r.failed;
        entry["failures"] = r.failures;
        if (r.truncated) entry["failures_truncated"] = true;
        if (with_timings) entry["wall_ms"] = r.wall_ms;
        checks.push_back(std::move(entry));
    }
    out["checks"] = std::move(checks);
    out["pass"] = pass;
    return out;
}

SuiteReport run_suite(const SuiteConfig& config) {
    const int n = config.n;
    if (n < 1) throw ConfigError("suite needs n >= 1");
    if (config.cutoff < 1) throw ConfigError("suite needs cutoff >= 1");
    const int lmax = config.lmax == 0 ? n : config.lmax;
    if (lmax < 1 || lmax > n) throw ConfigError("suite needs 1 <= lmax <= n");
    if (config.modes.empty()) throw ConfigError("suite needs at least one mode");

    std::vector<CheckKind> checks;
    for (CheckKind c : kCanonicalOrder) {
        const bool wanted = config.checks.empty() ||
                            std::find(config.checks.begin(), config.checks.end(), c) !=
                                config.checks.end();
        if (wanted) checks.push_back(c);
    }

    // Materialize parameter tuples per mode, in mode order.  Explicit
    // tuples must pass the guard; random tuples are redrawn until they do.
    SuiteReport report;
    std::map<ParamMode, std::vector<RawParams>> tuples;
    if (!config.explicit_tuples.empty()) {
        for (ParamMode mode : config.modes)
            for (RawParams v : config.explicit_tuples) {
                if (mode == ParamMode::ThreeParam) v.t3 = Rational(0);
                if (!generic_for_suite(mode, v, n))
                    throw ParameterDegeneracy("explicit parameter tuple fails the genericity guard");
                tuples[mode].push_back(v);
            }
    } else {
        std::mt19937_64 rng(config.random.seed);
        for (ParamMode mode : config.modes)
            for (int i = 0; i < config.random.count; ++i)
                tuples[mode].push_back(
                    draw_tuple(mode, rng, config.random.bound, n, report.redraws));
    }

    // Fixed unit order: canonical check order, then config mode order,
    // then tuple index.
    struct Unit {
        CheckKind check;
        ParamMode mode;
        int tuple_index;
        RawParams params;
    };
    std::vector<Unit> units;
    for (CheckKind check : checks)
        for (ParamMode mode : config.modes) {
            const auto& list = tuples[mode];
            for (int i = 0; i < static_cast<int>(list.size()); ++i)
                units.push_back(Unit{check, mode, i, list[static_cast<std::size_t>(i)]});
        }

    std::vector<CheckUnitResult> results(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= units.size()) return;
            const Unit& unit = units[i];
            CheckUnitResult& out = results[i];
            out.check = unit.check;
            out.mode = unit.mode;
            out.tuple_index = unit.tuple_index;
            out.params = unit.params;
            const auto start = std::chrono::steady_clock::now();
            try {
                switch (unit.check) {
                    case CheckKind::Gauge:
                        run_gauge_cases(make_params(unit.mode, unit.params, n), n,
                                        config.cutoff, out);
                        break;
                    case CheckKind::H1:
                        run_h1_cases(make_params(unit.mode, unit.params, n), n,
                                     config.cutoff, config.variant, out);
                        break;
                    case CheckKind::Commute:
                        run_commute_cases(make_params(unit.mode, unit.params, n), n,
                                          config.cutoff, lmax, config.variant, out);
                        break;
                    case CheckKind::Pieri:
                        run_pieri_cases(make_params(unit.mode, unit.params, n), n,
                                        config.cutoff, lmax, config.variant, out);
                        break;
                    case CheckKind::Principal:
                        run_principal_cases(make_params(unit.mode, unit.params, n), n,
                                            config.cutoff, out);
                        break;
                    case CheckKind::Degenerate:
                        if (unit.mode == ParamMode::FourParam)
                            run_degenerate_fourparam(unit.params, n, config.cutoff,
                                                     config.variant, out);
                        else
                            run_degenerate_threeparam(unit.params, n, config.cutoff, lmax,
                                                      config.variant, out);
                        break;
                }
            } catch (const Error& e) {
                Json f;
                f["error"] = e.what();
                ++out.cases;
                record_failure(out, std::move(f));
            }
            out.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        }
    };

    const int thread_count = resolve_threads(config, units.size());
    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(thread_count));
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    report.results = std::move(results);
    report.pass = std::all_of(report.results.begin(), report.results.end(),
                              [](const CheckUnitResult& r) { return r.failed == 0; });

    // Config echo for reproducibility.
    Json echo;
    echo["n"] = n;
    echo["cutoff"] = config.cutoff;
    echo["lmax"] = lmax;
    Json modes = Json::array();
    for (ParamMode m : config.modes) modes.push_back(to_string(m));
    echo["modes"] = std::move(modes);
    echo["variant"] = to_string(config.variant);
    Json checks_echo = Json::array();
    for (CheckKind c : checks) checks_echo.push_back(to_string(c));
    echo["checks"] = std::move(checks_echo);
    if (!config.explicit_tuples.empty()) {
        Json list = Json::array();
        for (const RawParams& v : config.explicit_tuples) {
            Json p;
            p["t"] = to_json(v.t);
            p["t0"] = to_json(v.t0);
            p["t1"] = to_json(v.t1);
            p["t2"] = to_json(v.t2);
            p["t3"] = to_json(v.t3);
            list.push_back(std::move(p));
        }
        echo["tuples"] = std::move(list);
    } else {
        Json rnd;
        rnd["seed"] = config.random.seed;
        rnd["count"] = config.random.count;
        rnd["bound"] = config.random.bound;
        echo["random"] = std::move(rnd);
    }
    report.config_echo = std::move(echo);
    return report;
}

} // namespace qboson
