#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "wilf/count.hpp"
#include "wilf/partition.hpp"

namespace wilf {

// Feasibility guards. Requests above these throw LimitExceeded.
inline constexpr std::uint64_t kWilfCountLimit = 200;
inline constexpr std::uint64_t kFixedCountLimit = 400;
inline constexpr std::uint64_t kOracleLimit = 45;

inline constexpr std::uint64_t kNoLabelCap = std::numeric_limits<std::uint64_t>::max();

/**
 * Fixed points of the parts/multiplicities swap, in label form.
 *
 * A label c used as a singleton stands for the term (c, c) and weighs c^2.
 * An unordered pair {a, b} with a < b stands for the terms (a, b) and (b, a)
 * and weighs 2ab. All labels across singletons and pairs are distinct; under
 * that condition decode() is always a fixed point and encode() inverts it.
 */
struct FixedPointStructure {
    std::vector<std::uint64_t> singletons;                           // ascending
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;      // first < second, ascending by first

    Count weight() const;
    // Every label, ascending.
    std::vector<std::uint64_t> labels() const;
    Partition decode() const;
    // Throws InvalidArgument if `p` is not a fixed point.
    static FixedPointStructure encode(const Partition& p);

    friend bool operator==(const FixedPointStructure&, const FixedPointStructure&) = default;
};

using PartitionVisitor = std::function<void(const Partition&)>;
using StructureVisitor = std::function<void(const FixedPointStructure&)>;

// Every partition of n, lexicographically decreasing as expanded part lists.
void for_each_partition(std::uint64_t n, const PartitionVisitor& visit);
std::vector<Partition> enumerate_all_partitions(std::uint64_t n);

// Every Wilf partition of n, in the same order as for_each_partition.
void for_each_wilf(std::uint64_t n, const PartitionVisitor& visit);
std::vector<Partition> enumerate_wilf(std::uint64_t n);

// f(n): number of Wilf partitions of n.
Count count_wilf(std::uint64_t n, std::uint64_t limit = kWilfCountLimit);

// Walks every FixedPointStructure of weight n whose labels are <= max_label.
// Labels are decided in increasing order; at each label the branches are
// tried as skip, singleton, then pair with each larger unused label.
void for_each_fixed_structure(std::uint64_t n, const StructureVisitor& visit,
                              std::uint64_t max_label = kNoLabelCap,
                              std::uint64_t limit = kFixedCountLimit);

// The first structure for_each_fixed_structure would visit, if any.
std::optional<FixedPointStructure> first_fixed_structure(std::uint64_t n, std::uint64_t max_label = kNoLabelCap,
                                                         std::uint64_t limit = kFixedCountLimit);

// F(n): number of fixed points of the involution among partitions of n.
Count count_fixed(std::uint64_t n, std::uint64_t limit = kFixedCountLimit);

// F(n) by filtering enumerate_wilf; independent of the structure search.
Count count_fixed_oracle(std::uint64_t n, std::uint64_t limit = kOracleLimit);

std::vector<Partition> enumerate_fixed(std::uint64_t n, std::uint64_t limit = kFixedCountLimit);

// Largest r with r(r+1)(r+2)/6 <= n: the most distinct parts a Wilf
// partition of n can have.
std::uint64_t max_distinct_parts(std::uint64_t n);

}  // namespace wilf
