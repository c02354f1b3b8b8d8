#include "qboson/serialize.hpp"

namespace qboson {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ConfigError("expected a rational as \"p/q\" string or integer");
}

Json to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exponents"] = e;
        term["coeff"] = to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

LaurentPoly laurent_from_json(const Json& j, int nvars) {
    if (!j.is_array()) throw ConfigError("expected a list of polynomial terms");
    LaurentPoly p(nvars);
    for (const auto& term : j) {
        const auto exps = term.at("exponents").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != nvars)
            throw ConfigError("term exponent vector has wrong length");
        p.add_term(exps, rational_from_json(term.at("coeff")));
    }
    return p;
}

Json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw ConfigError("expected a partition as an integer array");
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const ShiftPair& pair) {
    Json out;
    out["plus"] = pair.plus;
    out["minus"] = pair.minus;
    return out;
}

ShiftPair shift_pair_from_json(const Json& j) {
    ShiftPair pair;
    pair.plus = j.at("plus").get<std::vector<int>>();
    pair.minus = j.at("minus").get<std::vector<int>>();
    return pair;
}

Json to_json(const LatticeFunction& f) {
    Json out = Json::array();
    for (const auto& [mu, c] : f.support()) {
        Json entry;
        entry["partition"] = to_json(mu);
        entry["value"] = to_json(c);
        out.push_back(std::move(entry));
    }
    return out;
}

LatticeFunction lattice_function_from_json(const Json& j, int n) {
    if (!j.is_array()) throw ConfigError("expected a list of {partition, value} records");
    LatticeFunction f(n);
    for (const auto& entry : j) {
        Partition mu = partition_from_json(entry.at("partition"));
        if (mu.n() != n) throw ConfigError("partition length mismatch in lattice function");
        f.add(mu, rational_from_json(entry.at("value")));
    }
    return f;
}

Json to_json(const ParamSet& params) {
    Json out;
    out["t"] = to_json(params.t());
    out["t0"] = to_json(params.t0());
    out["t1"] = to_json(params.t1());
    out["t2"] = to_json(params.t2());
    out["t3"] = to_json(params.t3());
    return out;
}

Json to_json(const PieriReport& report) {
    Json out;
    out["lambda"] = to_json(report.lambda);
    out["l"] = report.l;
    out["mode"] = to_string(report.mode);
    out["variant"] = to_string(report.variant);
    out["pass"] = report.pass;
    out["residual"] = to_json(report.residual);
    Json expansion = Json::array();
    for (const auto& [mu, coeff] : report.expansion) {
        Json entry;
        entry["mu"] = to_json(mu);
        entry["coeff"] = to_json(coeff);
        expansion.push_back(std::move(entry));
    }
    out["expansion"] = std::move(expansion);
    return out;
}

} // namespace qboson
