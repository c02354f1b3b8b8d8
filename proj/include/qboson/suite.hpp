#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qboson/serialize.hpp"

namespace qboson {

/// The machine-verifiable identity families the suite can run.
enum class CheckKind { Gauge, H1, Commute, Pieri, Principal, Degenerate };

std::string to_string(CheckKind check);
CheckKind check_from_name(const std::string& name);
ParamMode mode_from_name(const std::string& name);
CoeffVariant variant_from_name(const std::string& name);

/// Unguarded raw parameter values (guarded on use).
struct RawParams {
    Rational t, t0, t1, t2, t3;
};

/// Seeded random-tuple generation: numerators in [-bound, bound] \ {0},
/// denominators in [2, bound], redrawn until generic.
struct RandomTupleSpec {
    std::uint64_t seed = 1;
    int count = 3;
    int bound = 13;
};

struct SuiteConfig {
    int n = 2;
    int cutoff = 2;
    int lmax = 0;  // 0 means n
    std::vector<ParamMode> modes{ParamMode::ThreeParam, ParamMode::FourParam};
    CoeffVariant variant = CoeffVariant::RestrictedInnerSum;
    std::vector<RawParams> explicit_tuples;  // empty: draw random tuples
    RandomTupleSpec random;
    std::vector<CheckKind> checks;           // empty: all checks
    bool timings = false;
    int threads = 0;  // 0: QBOSON_THREADS env or hardware concurrency
};

/// Outcome of one (check, mode, tuple) unit.
struct CheckUnitResult {
    CheckKind check;
    ParamMode mode;
    int tuple_index = 0;
    RawParams params;
    long cases = 0;
    long failed = 0;
    std::vector<Json> failures;  // capped; truncated flags overflow
    bool truncated = false;
    long long wall_ms = 0;
};

struct SuiteReport {
    Json config_echo;
    int redraws = 0;
    std::vector<CheckUnitResult> results;
    bool pass = false;

    Json to_json(bool with_timings) const;
};

/// Runs the selected checks over the configured lattice for every
/// (mode, tuple) combination.  Deterministic given the seed; unit
/// results are emitted in a fixed order regardless of scheduling.
SuiteReport run_suite(const SuiteConfig& config);

/// True when the values satisfy the full guard needed by every check at
/// lattice size n (operator-level genericity plus the polynomial
/// normalization conditions).
bool generic_for_suite(ParamMode mode, const RawParams& values, int n);

/// Draws one generic tuple for the mode, counting redraws.
RawParams draw_tuple(ParamMode mode, std::mt19937_64& rng, int bound, int n,
                     int& redraws);

} // namespace qboson
