#include "qboson/partition.hpp"

#include <algorithm>
#include <sstream>

namespace qboson {

namespace {

bool weakly_decreasing_nonnegative(const std::vector<int>& v) {
    if (v.empty()) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) return false;
        if (i > 0 && v[i - 1] < v[i]) return false;
    }
    return true;
}

std::string index_set_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ",";
        os << s[i];
    }
    os << "}";
    return os.str();
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (!weakly_decreasing_nonnegative(parts_))
        throw ConfigError("not a partition: parts must be weakly decreasing and nonnegative");
}

std::optional<Partition> Partition::try_make(std::vector<int> parts) {
    if (!weakly_decreasing_nonnegative(parts)) return std::nullopt;
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

int Partition::part(int j) const {
    if (j < 1 || j > n()) throw IndexOutOfRange("partition index out of range");
    return parts_[static_cast<std::size_t>(j - 1)];
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (int j = 1; j <= n(); ++j) {
        if (j > 1) os << ",";
        os << part(j);
    }
    os << ")";
    return os.str();
}

void ShiftPair::validate(int n) const {
    auto check = [n](const std::vector<int>& s) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 1 || s[i] > n)
                throw ConfigError("shift-pair index out of range");
            if (i > 0 && s[i - 1] >= s[i])
                throw ConfigError("shift-pair indices must be strictly increasing");
        }
    };
    check(plus);
    check(minus);
    for (int j : plus)
        if (std::binary_search(minus.begin(), minus.end(), j))
            throw ConfigError("shift-pair sets must be disjoint");
}

std::string ShiftPair::str() const {
    return "(+" + index_set_str(plus) + " -" + index_set_str(minus) + ")";
}

int epsilon(int j, const ShiftPair& pair, int n) {
    if (j < 1 || j > n) throw IndexOutOfRange("epsilon index out of range");
    if (std::binary_search(pair.plus.begin(), pair.plus.end(), j)) return 1;
    if (std::binary_search(pair.minus.begin(), pair.minus.end(), j)) return -1;
    return 0;
}

SignVector::SignVector(const ShiftPair& pair, int n) {
    pair.validate(n);
    eps.assign(static_cast<std::size_t>(n), 0);
    for (int j : pair.plus) eps[static_cast<std::size_t>(j - 1)] = 1;
    for (int j : pair.minus) eps[static_cast<std::size_t>(j - 1)] = -1;
}

std::optional<Partition> shift_partition(const Partition& lambda, const ShiftPair& pair) {
    pair.validate(lambda.n());
    std::vector<int> parts = lambda.parts();
    for (int j : pair.plus) ++parts[static_cast<std::size_t>(j - 1)];
    for (int j : pair.minus) --parts[static_cast<std::size_t>(j - 1)];
    return Partition::try_make(std::move(parts));
}

std::vector<ShiftPair> enumerate_shift_pairs(int n, int l) {
    if (l < 1 || l > n) throw InvalidOrder("order must satisfy 1 <= l <= n");
    std::vector<ShiftPair> out;

    // Size-m subsets of {1..n} in lexicographic order.
    std::vector<int> subset;
    auto emit_signs = [&](const std::vector<int>& support) {
        const int m = static_cast<int>(support.size());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            ShiftPair pair;
            for (int i = 0; i < m; ++i) {
                const bool neg = (mask >> (m - 1 - i)) & 1u;
                (neg ? pair.minus : pair.plus).push_back(support[static_cast<std::size_t>(i)]);
            }
            out.push_back(std::move(pair));
        }
    };
    auto recurse = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            emit_signs(subset);
            return;
        }
        for (int j = next; j <= n - remaining + 1; ++j) {
            subset.push_back(j);
            self(self, j + 1, remaining - 1);
            subset.pop_back();
        }
    };
    for (int m = 0; m <= l; ++m) recurse(recurse, 1, m);
    return out;
}

int multiplicity(const Partition& lambda, int level) {
    int count = 0;
    for (int p : lambda.parts())
        if (p == level) ++count;
    return count;
}

int multiplicity(const Partition& lambda, int level, const std::vector<int>& indices) {
    int count = 0;
    for (int j : indices)
        if (lambda.part(j) == level) ++count;
    return count;
}

std::vector<Partition> enumerate_partitions(int n, int cutoff) {
    if (n < 1) throw ConfigError("partition length must be positive");
    if (cutoff < 0) throw ConfigError("cutoff must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> parts;
    auto recurse = [&](auto&& self, int position, int bound) -> void {
        if (position > n) {
            out.push_back(Partition(parts));
            return;
        }
        for (int v = 0; v <= bound; ++v) {
            parts.push_back(v);
            self(self, position + 1, v);
            parts.pop_back();
        }
    };
    recurse(recurse, 1, cutoff);
    return out;
}

} // namespace qboson
