#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wilf/count.hpp"
#include "wilf/partition.hpp"

namespace wilf {

// The only positive weights with no fixed point.
inline constexpr std::array<std::uint64_t, 5> kExceptionSet{2, 3, 7, 11, 15};

// Weights up to kBaseWeight are covered directly with labels 1..kBaseLabels.
inline constexpr std::uint64_t kBaseWeight = 136;
inline constexpr std::size_t kBaseLabels = 10;

bool is_exception(std::uint64_t n);

/**
 * The sparse label set used to certify that every admissible weight has a
 * fixed point.
 *
 * a_k = k for k <= 10 and b_10 = 136. Past that,
 *   a_k = isqrt(b_{k-1} - 15),   b_k = b_{k-1} + a_k^2.
 * Every weight in [16, b_k] has a fixed point built from labels a_1..a_k.
 * Values are immutable once built; use the static builders to get a set deep
 * enough for a query.
 */
class CoverSet {
public:
    // Throws InvalidArgument if depth < 10.
    static CoverSet build(std::size_t depth);
    // Shallowest set with b_k >= n.
    static CoverSet for_weight(std::uint64_t n);
    // Shallowest set whose largest member exceeds x.
    static CoverSet for_label(std::uint64_t x);

    std::size_t depth() const { return a_.size(); }
    // 1-based, matching the usual a_1, a_2, ... indexing.
    std::uint64_t a(std::size_t k) const;
    // Defined for 10 <= k <= depth().
    Count b(std::size_t k) const;

    std::span<const std::uint64_t> members() const { return a_; }
    std::uint64_t largest_member() const { return a_.back(); }
    Count reach() const { return b_.back(); }

private:
    CoverSet() = default;
    void grow();

    std::vector<std::uint64_t> a_;
    std::vector<Count> b_;  // b_[i] is b_{10+i}
};

// Throws CoverTooShallow unless some member exceeds x.
bool is_cover_member(std::uint64_t x, const CoverSet& cs);

// The t smallest positive integers outside the cover set, ascending.
std::vector<std::uint64_t> smallest_non_members(std::size_t t, const CoverSet& cs);

// One fixed point per coverable weight 1..136, labels all <= 10.
using BaseTable = std::map<std::uint64_t, Partition>;

// Exhaustive search; throws IntegrityError if the domain is not exactly
// {1..136} minus the exception set.
BaseTable build_base_table();
// Built once on first use.
const BaseTable& base_table();

// A fixed point of weight n using labels only from `cs`, or nullopt for the
// exception set. Throws CoverTooShallow if cs.reach() < n.
std::optional<Partition> fixed_point_cover(std::uint64_t n, const CoverSet& cs);

// Whether every part (and so every multiplicity, for a fixed point) of p is a
// member of cs.
bool labels_in_cover(const Partition& p, const CoverSet& cs);

}  // namespace wilf
