#include "qboson/lattice_function.hpp"

#include <sstream>

namespace qboson {

LatticeFunction::LatticeFunction(int n) : n_(n) {
    if (n < 1) throw ConfigError("lattice functions need a positive size");
}

LatticeFunction LatticeFunction::delta(const Partition& mu) {
    LatticeFunction f(mu.n());
    f.add(mu, Rational(1));
    return f;
}

Rational LatticeFunction::value(const Partition& lambda) const {
    auto it = support_.find(lambda);
    return it == support_.end() ? Rational(0) : it->second;
}

void LatticeFunction::add(const Partition& lambda, const Rational& c) {
    if (lambda.n() != n_) throw ArityMismatch("partition size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = support_.emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) support_.erase(it);
    }
}

LatticeFunction& LatticeFunction::operator+=(const LatticeFunction& o) {
    if (o.n_ != n_) throw ArityMismatch("lattice size mismatch");
    for (const auto& [mu, c] : o.support_) add(mu, c);
    return *this;
}

LatticeFunction& LatticeFunction::operator-=(const LatticeFunction& o) {
    if (o.n_ != n_) throw ArityMismatch("lattice size mismatch");
    for (const auto& [mu, c] : o.support_) add(mu, -c);
    return *this;
}

LatticeFunction& LatticeFunction::operator*=(const Rational& c) {
    if (c.is_zero()) {
        support_.clear();
        return *this;
    }
    for (auto& [mu, v] : support_) v *= c;
    return *this;
}

std::string LatticeFunction::str() const {
    if (support_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : support_) {
        if (!first) os << " + ";
        first = false;
        os << c << "*d" << mu.str();
    }
    return os.str();
}

} // namespace qboson
