#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qboson/errors.hpp"

namespace qboson {

/// Weakly decreasing vector of n nonnegative integers (trailing zeros
/// explicit).  Indices are 1-based throughout, matching the j,k
/// conventions of the coefficient formulas.
class Partition {
public:
    explicit Partition(std::vector<int> parts);

    /// Returns nullopt instead of throwing when the vector is not a
    /// partition; used by the shift operation.
    static std::optional<Partition> try_make(std::vector<int> parts);

    int n() const { return static_cast<int>(parts_.size()); }
    int part(int j) const;                      // 1-based
    const std::vector<int>& parts() const { return parts_; }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const;                    // "(2,1,0)"

private:
    Partition() = default;
    std::vector<int> parts_;
};

/// Disjoint pair of sorted 1-based index sets (J_+, J_-); the raising
/// and lowering positions of a shift, also reused for the inner pairs
/// (I_+, I_-) of the diagonal coefficient.
struct ShiftPair {
    std::vector<int> plus;
    std::vector<int> minus;

    int order() const { return static_cast<int>(plus.size() + minus.size()); }
    bool operator==(const ShiftPair&) const = default;
    auto operator<=>(const ShiftPair&) const = default;

    /// Throws ConfigError unless both sets are sorted, duplicate-free,
    /// disjoint and contained in 1..n.
    void validate(int n) const;

    std::string str() const;                    // "(+{1,2} -{3})"
};

/// +1 if j is a raising index, -1 if lowering, 0 otherwise.
/// n bounds the admissible index range.
int epsilon(int j, const ShiftPair& pair, int n);

/// The full sign vector (epsilon_1,...,epsilon_n) of a shift pair.
struct SignVector {
    std::vector<int> eps;
    SignVector(const ShiftPair& pair, int n);
    int at(int j) const { return eps[static_cast<std::size_t>(j - 1)]; }
};

/// lambda + e_{J+} - e_{J-} when the result is again a partition,
/// nullopt otherwise.
std::optional<Partition> shift_partition(const Partition& lambda, const ShiftPair& pair);

/// All disjoint pairs with |J_+| + |J_-| <= l, in a fixed deterministic
/// order: by total size m, then by support subset (lexicographic), then
/// by sign pattern in binary order (all-plus first, sign of the i-th
/// smallest support element given by bit m-1-i).  The count is
/// sum_{m<=l} C(n,m) 2^m.
std::vector<ShiftPair> enumerate_shift_pairs(int n, int l);

/// m_level(lambda): number of parts equal to level.
int multiplicity(const Partition& lambda, int level);

/// Restricted multiplicity over a sorted 1-based index set, e.g.
/// m_level^+(lambda) with the raising set of a shift pair.
int multiplicity(const Partition& lambda, int level, const std::vector<int>& indices);

/// All partitions with n parts and largest part <= cutoff, in ascending
/// lexicographic order of the part vectors; the count is C(n+cutoff, n).
std::vector<Partition> enumerate_partitions(int n, int cutoff);

} // namespace qboson
