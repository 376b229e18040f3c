#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint64_t>;  // non-increasing

// All partitions of n in reverse lexicographic order, by the classical
// "next partition" step: find the rightmost part > 1, decrement it, and
// refill the tail greedily.
inline std::vector<Parts> partitions(std::uint64_t n) {
    std::vector<Parts> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Parts p{n};
    while (true) {
        out.push_back(p);
        std::uint64_t ones = 0;
        while (!p.empty() && p.back() == 1) {
            p.pop_back();
            ++ones;
        }
        if (p.empty()) break;
        const std::uint64_t k = --p.back();
        std::uint64_t rest = ones + 1;
        while (rest > 0) {
            const std::uint64_t take = std::min(k, rest);
            p.push_back(take);
            rest -= take;
        }
    }
    return out;
}

inline std::map<std::uint64_t, std::uint64_t> multiplicities(const Parts& p) {
    std::map<std::uint64_t, std::uint64_t> m;
    for (std::uint64_t x : p) ++m[x];
    return m;
}

inline bool is_wilf(const Parts& p) {
    std::set<std::uint64_t> seen;
    for (const auto& [part, mult] : multiplicities(p)) {
        if (!seen.insert(mult).second) return false;
    }
    return true;
}

inline bool is_fixed_point(const Parts& p) {
    if (!is_wilf(p)) return false;
    const auto m = multiplicities(p);
    std::map<std::uint64_t, std::uint64_t> swapped;
    for (const auto& [part, mult] : m) swapped[mult] = part;
    return swapped == m;
}

inline std::uint64_t count_wilf(std::uint64_t n) {
    std::uint64_t c = 0;
    for (const auto& p : partitions(n)) c += is_wilf(p) ? 1 : 0;
    return c;
}

inline std::uint64_t count_fixed(std::uint64_t n) {
    std::uint64_t c = 0;
    for (const auto& p : partitions(n)) c += is_fixed_point(p) ? 1 : 0;
    return c;
}

// q(k) for every k <= k_max by listing every set of distinct squares whose
// sum stays within k_max.
inline std::vector<std::uint64_t> distinct_square_sums(std::uint64_t k_max) {
    std::vector<std::uint64_t> hist(k_max + 1, 0);
    std::vector<std::uint64_t> squares;
    for (std::uint64_t s = 1; s * s <= k_max; ++s) squares.push_back(s * s);
    auto walk = [&](auto&& self, std::size_t i, std::uint64_t sum) -> void {
        if (i == squares.size()) {
            ++hist[sum];
            return;
        }
        self(self, i + 1, sum);
        if (sum + squares[i] <= k_max) self(self, i + 1, sum + squares[i]);
    };
    walk(walk, 0, 0);
    return hist;
}

inline std::uint64_t divisors(std::uint64_t x) {
    std::uint64_t c = 0;
    for (std::uint64_t d = 1; d <= x; ++d) c += x % d == 0 ? 1 : 0;
    return c;
}

inline std::uint64_t involutions(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t c = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = perm[perm[i]] == i;
        c += ok ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

inline std::uint64_t partitions_with_length(std::uint64_t m, std::uint64_t r) {
    std::uint64_t c = 0;
    for (const auto& p : partitions(m)) c += p.size() == r ? 1 : 0;
    return c;
}

// Expanded part list (non-increasing) from (part, multiplicity) terms.
template <typename Terms>
Parts expand(const Terms& terms) {
    Parts out;
    for (const auto& t : terms) out.insert(out.end(), t.multiplicity, t.part);
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace oracle
