#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wilf/count.hpp"

namespace wilf {

// `multiplicity` copies of `part`.
struct Term {
    std::uint64_t part = 0;
    std::uint64_t multiplicity = 0;

    friend constexpr bool operator==(const Term&, const Term&) = default;
    friend constexpr auto operator<=>(const Term&, const Term&) = default;
};

/**
 * An integer partition held as (part, multiplicity) terms.
 *
 * The representation is always canonical: parts strictly decreasing, every
 * part and multiplicity positive. The empty partition is the partition of 0.
 */
class Partition {
public:
    Partition() = default;

    // Sorts the terms into canonical order. Throws InvalidPartition on a zero
    // part or multiplicity, or on a repeated part (repeats are never merged).
    static Partition canonicalize(std::vector<Term> raw);
    static Partition canonicalize(std::span<const std::pair<std::uint64_t, std::uint64_t>> raw);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t distinct_part_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Count weight() const;

    // True iff the multiplicities are pairwise distinct.
    bool is_wilf() const;

    // Swaps parts and multiplicities. Throws NotWilf on non-Wilf input.
    Partition involute() const;

    bool is_fixed_point() const;

    // Expanded part list, largest first. Intended for small weights only.
    std::vector<std::uint64_t> expanded() const;

    // "6^1+4^2+3^3" style text; the empty partition is "".
    std::string to_string() const;
    static Partition parse(std::string_view text);

    // [[part, multiplicity], ...] in canonical order.
    std::string to_json() const;
    static Partition parse_json(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.terms_ <=> b.terms_; }

private:
    explicit Partition(std::vector<Term> canonical) : terms_(std::move(canonical)) {}

    std::vector<Term> terms_;
};

// Union of two partitions with disjoint part sets; throws InvalidPartition if
// a part occurs in both.
Partition merge_disjoint(const Partition& a, const Partition& b);

}  // namespace wilf
