// Command-line front end: coefficient queries, operator applications and
// the full verification suites, all emitting JSON.
//
// Exit codes: 0 success / all checks pass, 1 identity-check failure,
// 2 usage error, 3 parameter degeneracy.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qboson/hall_littlewood.hpp"
#include "qboson/operators.hpp"
#include "qboson/serialize.hpp"
#include "qboson/suite.hpp"

namespace {

using namespace qboson;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegeneracy = 3;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

RawParams parse_params(const std::string& text, ParamMode mode) {
    // Defaults keep parameter-free invocations deterministic.
    RawParams v{Rational::parse("1/3"), Rational::parse("1/5"), Rational::parse("1/7"),
                Rational::parse("1/11"),
                mode == ParamMode::FourParam ? Rational::parse("1/13") : Rational(0)};
    if (text.empty()) return v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected k=v entries in --params, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        const Rational value = Rational::parse(item.substr(eq + 1));
        if (key == "t") v.t = value;
        else if (key == "t0") v.t0 = value;
        else if (key == "t1") v.t1 = value;
        else if (key == "t2") v.t2 = value;
        else if (key == "t3") v.t3 = value;
        else throw ConfigError("unknown parameter \"" + key + "\" in --params");
    }
    return v;
}

void emit(const Json& value, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << value.dump(2) << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw ConfigError("cannot open output file " + out_path);
        os << value.dump(2) << "\n";
    }
}

struct CommonArgs {
    std::string lambda_text;
    std::string plus_text;
    std::string minus_text;
    std::string params_text;
    std::string mode_name = "three";
    std::string variant_name = "restricted";
    std::string out_path;
};

ParamSet make_param_set(const CommonArgs& args, int n) {
    const ParamMode mode = mode_from_name(args.mode_name);
    const RawParams v = parse_params(args.params_text, mode);
    return ParamSet(mode, v.t, v.t0, v.t1, v.t2,
                    mode == ParamMode::ThreeParam ? Rational(0) : v.t3, n);
}

Partition parse_partition(const std::string& text) {
    if (text.empty()) throw ConfigError("--lambda is required");
    return Partition(parse_int_list(text));
}

ShiftPair parse_shift_pair(const CommonArgs& args) {
    return ShiftPair{parse_int_list(args.plus_text), parse_int_list(args.minus_text)};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the semi-infinite q-boson quantum integrals"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string suite_mode_name = "both";
    std::string set_text, delta_text, f_text, checks_text;
    int n = 0, cutoff = 3, lmax = 0, l = 0, k = 0, m = 0, tuples = 3, bound = 13;
    std::uint64_t seed = 1;
    bool timings = false;

    auto add_common = [&](CLI::App* cmd, bool with_pair = false) {
        cmd->add_option("--params", args.params_text,
                        "comma-separated k=v rationals, e.g. t=1/3,t0=1/5,t1=1/7,t2=1/11"
                        " (defaults: that tuple, t3=0 resp. 1/13)");
        cmd->add_option("--mode", args.mode_name, "three|four");
        cmd->add_option("--out", args.out_path, "write JSON to file instead of stdout");
        if (with_pair) {
            cmd->add_option("--plus", args.plus_text, "raising index set, e.g. 1,2");
            cmd->add_option("--minus", args.minus_text, "lowering index set");
        }
    };

    auto* cmd_suite = app.add_subcommand("suite", "run verification suites");
    cmd_suite->add_option("--n", n, "number of particles")->required();
    cmd_suite->add_option("--cutoff", cutoff, "largest part of test partitions");
    cmd_suite->add_option("--lmax", lmax, "largest operator order (default n)");
    cmd_suite->add_option("--mode", suite_mode_name, "three|four|both");
    cmd_suite->add_option("--variant", args.variant_name, "restricted|literal");
    cmd_suite->add_option("--check", checks_text,
                          "subset of gauge,h1,commute,pieri,principal,degenerate");
    cmd_suite->add_option("--params", args.params_text, "explicit tuple (skips random draws)");
    cmd_suite->add_option("--seed", seed, "random tuple seed");
    cmd_suite->add_option("--tuples", tuples, "random tuples per mode");
    cmd_suite->add_option("--bound", bound, "numerator/denominator bound");
    cmd_suite->add_option("--out", args.out_path, "write report to file");
    cmd_suite->add_flag("--timings", timings, "include wall times in the report");

    auto* cmd_w = app.add_subcommand("coeff-w", "hopping coefficient W");
    cmd_w->add_option("--lambda", args.lambda_text)->required();
    add_common(cmd_w, true);

    auto* cmd_v = app.add_subcommand("coeff-v", "Pieri coefficient V");
    cmd_v->add_option("--lambda", args.lambda_text)->required();
    add_common(cmd_v, true);

    auto* cmd_u = app.add_subcommand("coeff-u", "diagonal coefficient U");
    cmd_u->add_option("--lambda", args.lambda_text)->required();
    cmd_u->add_option("--set", set_text, "index set K, e.g. 1,2")->required();
    cmd_u->add_option("--m", m, "inner order")->required();
    cmd_u->add_option("--variant", args.variant_name, "restricted|literal");
    add_common(cmd_u);

    auto* cmd_h = app.add_subcommand("gauge-h", "gauge function h");
    cmd_h->add_option("--lambda", args.lambda_text)->required();
    add_common(cmd_h);

    auto* cmd_apply = app.add_subcommand("apply", "apply H_l to a lattice function");
    cmd_apply->add_option("--l", l, "operator order")->required();
    cmd_apply->add_option("--delta", delta_text, "partition of a delta function");
    cmd_apply->add_option("--f", f_text, "lattice function as JSON [{partition,value}...]");
    cmd_apply->add_option("--n", n, "lattice size (required with --f)");
    cmd_apply->add_option("--variant", args.variant_name, "restricted|literal");
    add_common(cmd_apply);

    auto* cmd_hl = app.add_subcommand("hl", "hyperoctahedral Hall-Littlewood polynomial");
    cmd_hl->add_option("--lambda", args.lambda_text)->required();
    add_common(cmd_hl);

    auto* cmd_e = app.add_subcommand("e-poly", "multiplier polynomial E_l");
    cmd_e->add_option("--n", n)->required();
    cmd_e->add_option("--l", l)->required();
    add_common(cmd_e);

    auto* cmd_pieri = app.add_subcommand("pieri", "verify the Pieri recurrence at one (lambda, l)");
    cmd_pieri->add_option("--lambda", args.lambda_text)->required();
    cmd_pieri->add_option("--l", l)->required();
    cmd_pieri->add_option("--variant", args.variant_name, "restricted|literal");
    add_common(cmd_pieri);

    auto* cmd_principal = app.add_subcommand("principal", "principal specialization of P_lambda");
    cmd_principal->add_option("--lambda", args.lambda_text)->required();
    add_common(cmd_principal);

    auto* cmd_shift = app.add_subcommand("constant-shift", "Hamiltonian constant term");
    cmd_shift->add_option("--n", n)->required();
    add_common(cmd_shift);

    auto* cmd_commute = app.add_subcommand("commute", "commutator of H_k and H_l on a delta");
    cmd_commute->add_option("--k", k)->required();
    cmd_commute->add_option("--l", l)->required();
    cmd_commute->add_option("--delta", delta_text, "partition of the delta function")->required();
    cmd_commute->add_option("--variant", args.variant_name, "restricted|literal");
    add_common(cmd_commute);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_suite->parsed()) {
            SuiteConfig config;
            config.n = n;
            config.cutoff = cutoff;
            config.lmax = lmax;
            if (suite_mode_name == "both")
                config.modes = {ParamMode::ThreeParam, ParamMode::FourParam};
            else
                config.modes = {mode_from_name(suite_mode_name)};
            config.variant = variant_from_name(args.variant_name);
            if (!checks_text.empty()) {
                std::stringstream ss(checks_text);
                std::string item;
                while (std::getline(ss, item, ','))
                    config.checks.push_back(check_from_name(item));
            }
            if (!args.params_text.empty())
                config.explicit_tuples.push_back(
                    parse_params(args.params_text, ParamMode::FourParam));
            config.random = RandomTupleSpec{seed, tuples, bound};
            config.timings = timings;
            const SuiteReport report = run_suite(config);
            emit(report.to_json(timings), args.out_path);
            return report.pass ? 0 : kExitFailure;
        }

        if (cmd_w->parsed() || cmd_v->parsed()) {
            const Partition lambda = parse_partition(args.lambda_text);
            const ParamSet P = make_param_set(args, lambda.n());
            const ShiftPair pair = parse_shift_pair(args);
            if (!shift_partition(lambda, pair))
                throw ConfigError("shift " + pair.str() + " is not admissible at " + lambda.str());
            const Rational value = cmd_w->parsed() ? coeff_w(P, lambda, pair)
                                                   : coeff_v(P, lambda, pair);
            emit(to_json(value), args.out_path);
            return 0;
        }
        if (cmd_u->parsed()) {
            const Partition lambda = parse_partition(args.lambda_text);
            const ParamSet P = make_param_set(args, lambda.n());
            emit(to_json(coeff_u(P, lambda, parse_int_list(set_text), m,
                                 variant_from_name(args.variant_name))),
                 args.out_path);
            return 0;
        }
        if (cmd_h->parsed()) {
            const Partition lambda = parse_partition(args.lambda_text);
            emit(to_json(gauge_h(make_param_set(args, lambda.n()), lambda)), args.out_path);
            return 0;
        }
        if (cmd_apply->parsed() || cmd_commute->parsed()) {
            LatticeFunction f = [&]() {
                if (!f_text.empty()) {
                    if (n < 1) throw ConfigError("--n is required with --f");
                    return lattice_function_from_json(Json::parse(f_text), n);
                }
                if (delta_text.empty())
                    throw ConfigError("either --delta or --f is required");
                return LatticeFunction::delta(Partition(parse_int_list(delta_text)));
            }();
            const ParamSet P = make_param_set(args, f.n());
            const CoeffVariant variant = variant_from_name(args.variant_name);
            if (cmd_apply->parsed()) {
                emit(to_json(apply_h(l, f, P, variant)), args.out_path);
                return 0;
            }
            const LatticeFunction c = commutator(k, l, f, P, variant);
            emit(to_json(c), args.out_path);
            return c.is_zero() ? 0 : kExitFailure;
        }
        if (cmd_hl->parsed()) {
            const Partition lambda = parse_partition(args.lambda_text);
            emit(to_json(hall_littlewood(lambda, make_param_set(args, lambda.n()))),
                 args.out_path);
            return 0;
        }
        if (cmd_e->parsed()) {
            emit(to_json(e_poly(n, l, make_param_set(args, n))), args.out_path);
            return 0;
        }
        if (cmd_pieri->parsed()) {
            const Partition lambda = parse_partition(args.lambda_text);
            const PieriReport report =
                verify_pieri(lambda, l, make_param_set(args, lambda.n()),
                             variant_from_name(args.variant_name));
            emit(to_json(report), args.out_path);
            return report.pass ? 0 : kExitFailure;
        }
        if (cmd_principal->parsed()) {
            const Partition lambda = parse_partition(args.lambda_text);
            emit(to_json(principal_specialize(lambda, make_param_set(args, lambda.n()))),
                 args.out_path);
            return 0;
        }
        if (cmd_shift->parsed()) {
            emit(to_json(constant_shift(n, make_param_set(args, n))), args.out_path);
            return 0;
        }
    } catch (const ParameterDegeneracy& e) {
        std::cerr << "parameter degeneracy: " << e.what() << "\n";
        return kExitDegeneracy;
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
