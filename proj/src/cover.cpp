#include "wilf/cover.hpp"

#include <algorithm>
#include <string>

#include "wilf/enumerate.hpp"
#include "wilf/errors.hpp"

namespace wilf {

bool is_exception(std::uint64_t n) {
    return std::find(kExceptionSet.begin(), kExceptionSet.end(), n) != kExceptionSet.end();
}

CoverSet CoverSet::build(std::size_t depth) {
    if (depth < kBaseLabels) {
        throw InvalidArgument("cover set depth must be at least " + std::to_string(kBaseLabels));
    }
    CoverSet cs;
    for (std::uint64_t k = 1; k <= kBaseLabels; ++k) cs.a_.push_back(k);
    cs.b_.push_back(Count(kBaseWeight));
    while (cs.depth() < depth) cs.grow();
    return cs;
}

CoverSet CoverSet::for_weight(std::uint64_t n) {
    CoverSet cs = build(kBaseLabels);
    while (cs.reach() < Count(n)) cs.grow();
    return cs;
}

CoverSet CoverSet::for_label(std::uint64_t x) {
    CoverSet cs = build(kBaseLabels);
    while (cs.largest_member() <= x) cs.grow();
    return cs;
}

void CoverSet::grow() {
    const Count prev = b_.back();
    const Count next_a = isqrt(prev - Count(15));
    a_.push_back(next_a.to_u64());
    b_.push_back(prev + next_a * next_a);
}

std::uint64_t CoverSet::a(std::size_t k) const {
    if (k < 1 || k > a_.size()) {
        throw CoverTooShallow("a_" + std::to_string(k) + " requested from a cover set of depth " +
                              std::to_string(a_.size()));
    }
    return a_[k - 1];
}

Count CoverSet::b(std::size_t k) const {
    if (k < kBaseLabels) throw InvalidArgument("b_k is defined for k >= 10");
    if (k > a_.size()) {
        throw CoverTooShallow("b_" + std::to_string(k) + " requested from a cover set of depth " +
                              std::to_string(a_.size()));
    }
    return b_[k - kBaseLabels];
}

bool is_cover_member(std::uint64_t x, const CoverSet& cs) {
    if (cs.largest_member() <= x) {
        throw CoverTooShallow("cover set too shallow to decide membership of " + std::to_string(x) +
                              "; build it deeper");
    }
    const auto members = cs.members();
    return std::binary_search(members.begin(), members.end(), x);
}

std::vector<std::uint64_t> smallest_non_members(std::size_t t, const CoverSet& cs) {
    std::vector<std::uint64_t> out;
    out.reserve(t);
    for (std::uint64_t x = 1; out.size() < t; ++x) {
        if (!is_cover_member(x, cs)) out.push_back(x);
    }
    return out;
}

BaseTable build_base_table() {
    BaseTable table;
    for (std::uint64_t n = 1; n <= kBaseWeight; ++n) {
        if (auto s = first_fixed_structure(n, kBaseLabels)) table.emplace(n, s->decode());
    }
    for (std::uint64_t n = 1; n <= kBaseWeight; ++n) {
        if (table.contains(n) == is_exception(n)) {
            throw IntegrityError("base cover table: weight " + std::to_string(n) +
                                 (is_exception(n) ? " unexpectedly covered" : " has no fixed point with labels <= 10"));
        }
    }
    return table;
}

const BaseTable& base_table() {
    static const BaseTable table = build_base_table();
    return table;
}

std::optional<Partition> fixed_point_cover(std::uint64_t n, const CoverSet& cs) {
    if (n == 0) throw InvalidArgument("fixed_point_cover requires n >= 1");
    if (is_exception(n)) return std::nullopt;
    if (cs.reach() < Count(n)) {
        throw CoverTooShallow("cover set reaches b_k=" + cs.reach().to_string() + " < " + std::to_string(n) +
                              "; build it deeper");
    }
    // Peel off (a_k, a_k) for the minimal k with n <= b_k until the rest fits
    // the base table. The rest always lands in [16, b_{k-1}], and every label
    // peeled later is strictly smaller.
    std::vector<Term> diagonal;
    std::uint64_t rest = n;
    std::size_t k = cs.depth();
    while (rest > kBaseWeight) {
        while (k > kBaseLabels && cs.b(k - 1) >= Count(rest)) --k;
        const std::uint64_t ak = cs.a(k);
        diagonal.push_back({ak, ak});
        rest -= ak * ak;
    }
    const Partition& base = base_table().at(rest);
    return merge_disjoint(base, Partition::canonicalize(std::move(diagonal)));
}

bool labels_in_cover(const Partition& p, const CoverSet& cs) {
    const auto members = cs.members();
    return std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) {
        return std::binary_search(members.begin(), members.end(), t.part) &&
               std::binary_search(members.begin(), members.end(), t.multiplicity);
    });
}

}  // namespace wilf
