#include "wilf/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "wilf/errors.hpp"

namespace wilf {

namespace {

void check_limit(std::uint64_t n, std::uint64_t limit, const char* what) {
    if (n > limit) {
        throw LimitExceeded(std::string(what) + " for n=" + std::to_string(n) +
                            " exceeds the feasibility limit " + std::to_string(limit));
    }
}

// Builds a canonical Partition from terms already in strictly decreasing part order.
Partition from_ordered(const std::vector<Term>& terms) {
    return Partition::canonicalize(terms);
}

void partitions_rec(std::uint64_t rem, std::uint64_t max_part, std::vector<Term>& terms,
                    const PartitionVisitor& visit) {
    if (rem == 0) {
        visit(from_ordered(terms));
        return;
    }
    for (std::uint64_t q = std::min(max_part, rem); q >= 1; --q) {
        for (std::uint64_t m = rem / q; m >= 1; --m) {
            terms.push_back({q, m});
            partitions_rec(rem - q * m, q - 1, terms, visit);
            terms.pop_back();
        }
    }
}

// Shared state for the Wilf backtracking: which multiplicities are taken.
struct WilfSearch {
    std::vector<char> used;        // used[m] for multiplicities 1..n
    std::uint64_t depth = 0;       // terms placed so far
    std::uint64_t max_terms = 0;   // tetrahedral bound for the target weight

    explicit WilfSearch(std::uint64_t n) : used(n + 2, 0), max_terms(max_distinct_parts(n)) {}
};

// Memoized counting search. A state is (remaining weight, largest allowed
// part, used multiplicities <= remaining weight): multiplicities above the
// remaining weight can never be chosen again, so they are dropped from the key.
class WilfCounter {
public:
    explicit WilfCounter(std::uint64_t n) : n_(n), words_((n + 64) / 64, 0), max_terms_(max_distinct_parts(n)) {}

    Count::value_type count() { return rec(n_, n_, 0); }

private:
    bool used(std::uint64_t m) const { return (words_[m / 64] >> (m % 64)) & 1U; }
    void flip(std::uint64_t m) { words_[m / 64] ^= std::uint64_t{1} << (m % 64); }

    std::string key(std::uint64_t rem, std::uint64_t max_part, std::uint64_t depth) const {
        std::string k;
        const std::uint64_t header[3] = {rem, max_part, depth};
        k.append(reinterpret_cast<const char*>(header), sizeof header);
        const std::uint64_t full = rem / 64;
        k.append(reinterpret_cast<const char*>(words_.data()), full * sizeof(std::uint64_t));
        const std::uint64_t tail_bits = rem % 64 + 1;
        const std::uint64_t tail = words_[full] & (tail_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << tail_bits) - 1));
        k.append(reinterpret_cast<const char*>(&tail), sizeof tail);
        return k;
    }

    std::uint64_t smallest_unused() const {
        std::uint64_t u = 1;
        while (u <= n_ && used(u)) ++u;
        return u;
    }

    // Number of ways to finish `rem` with parts <= max_part and unused
    // multiplicities, given `depth` terms already placed.
    Count::value_type rec(std::uint64_t rem, std::uint64_t max_part, std::uint64_t depth) {
        max_part = std::min(max_part, rem);
        // The tetrahedral bound only matters while it can still cut branches.
        const std::uint64_t depth_key = std::min(depth, max_terms_);
        const std::string k = key(rem, max_part, depth_key);
        if (auto it = memo_.find(k); it != memo_.end()) return it->second;

        Count::value_type total = 0;
        for (std::uint64_t q = max_part; q >= 1; --q) {
            const std::uint64_t max_m = rem / q;
            for (std::uint64_t m = 1; m <= max_m; ++m) {
                if (used(m)) continue;
                const std::uint64_t rest = rem - q * m;
                if (rest == 0) {
                    ++total;
                    continue;
                }
                if (q == 1 || depth + 1 >= max_terms_) continue;
                flip(m);
                if (smallest_unused() <= rest) total += rec(rest, q - 1, depth + 1);
                flip(m);
            }
        }
        memo_.emplace(k, total);
        return total;
    }

    std::uint64_t n_;
    std::vector<std::uint64_t> words_;
    std::uint64_t max_terms_;
    std::unordered_map<std::string, Count::value_type> memo_;
};

void wilf_enum_rec(WilfSearch& s, std::uint64_t rem, std::uint64_t max_part, std::vector<Term>& terms,
                   const PartitionVisitor& visit) {
    if (rem == 0) {
        visit(from_ordered(terms));
        return;
    }
    for (std::uint64_t q = std::min(max_part, rem); q >= 1; --q) {
        for (std::uint64_t m = rem / q; m >= 1; --m) {
            if (s.used[m]) continue;
            const std::uint64_t rest = rem - q * m;
            if (rest != 0 && (q == 1 || s.depth + 1 >= s.max_terms)) continue;
            s.used[m] = 1;
            ++s.depth;
            terms.push_back({q, m});
            wilf_enum_rec(s, rest, q - 1, terms, visit);
            terms.pop_back();
            --s.depth;
            s.used[m] = 0;
        }
    }
}

// Label search behind count_fixed, enumerate_fixed and the cover base table.
class StructureSearch {
public:
    StructureSearch(std::uint64_t n, std::uint64_t max_label)
        : cap_(std::min(max_label, n)), used_(cap_ + 2, 0) {}

    template <typename OnComplete>
    void run(std::uint64_t rem, OnComplete&& done) {
        rec(1, rem, done);
    }

    const FixedPointStructure& current() const { return current_; }

private:
    // `done` returns true to stop the whole search.
    template <typename OnComplete>
    bool rec(std::uint64_t c, std::uint64_t rem, OnComplete& done) {
        if (rem == 0) return done();
        while (c <= cap_ && used_[c]) ++c;
        // Any choice at a label >= c costs at least c^2.
        if (c > cap_ || c * c > rem) return false;

        if (rec(c + 1, rem, done)) return true;

        bool stop = false;
        used_[c] = 1;
        current_.singletons.push_back(c);
        stop = rec(c + 1, rem - c * c, done);
        current_.singletons.pop_back();

        for (std::uint64_t b = c + 1; !stop && b <= cap_ && 2 * c * b <= rem; ++b) {
            if (used_[b]) continue;
            used_[b] = 1;
            current_.pairs.emplace_back(c, b);
            stop = rec(c + 1, rem - 2 * c * b, done);
            current_.pairs.pop_back();
            used_[b] = 0;
        }
        used_[c] = 0;
        return stop;
    }

    std::uint64_t cap_;
    std::vector<char> used_;
    FixedPointStructure current_;
};

}  // namespace

Count FixedPointStructure::weight() const {
    Count total;
    for (std::uint64_t c : singletons) total += Count(c) * Count(c);
    for (const auto& [a, b] : pairs) total += Count(2) * Count(a) * Count(b);
    return total;
}

std::vector<std::uint64_t> FixedPointStructure::labels() const {
    std::vector<std::uint64_t> out(singletons);
    for (const auto& [a, b] : pairs) {
        out.push_back(a);
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Partition FixedPointStructure::decode() const {
    std::vector<Term> terms;
    for (std::uint64_t c : singletons) terms.push_back({c, c});
    for (const auto& [a, b] : pairs) {
        terms.push_back({a, b});
        terms.push_back({b, a});
    }
    return Partition::canonicalize(std::move(terms));
}

FixedPointStructure FixedPointStructure::encode(const Partition& p) {
    if (!p.is_fixed_point()) throw InvalidArgument("not a fixed point: " + p.to_string());
    FixedPointStructure s;
    // Terms are in decreasing part order; walk backwards for ascending labels.
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it->part == it->multiplicity) {
            s.singletons.push_back(it->part);
        } else if (it->part < it->multiplicity) {
            s.pairs.emplace_back(it->part, it->multiplicity);
        }
    }
    return s;
}

void for_each_partition(std::uint64_t n, const PartitionVisitor& visit) {
    std::vector<Term> terms;
    partitions_rec(n, n, terms, visit);
}

std::vector<Partition> enumerate_all_partitions(std::uint64_t n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

void for_each_wilf(std::uint64_t n, const PartitionVisitor& visit) {
    WilfSearch s(n);
    std::vector<Term> terms;
    wilf_enum_rec(s, n, n, terms, visit);
}

std::vector<Partition> enumerate_wilf(std::uint64_t n) {
    std::vector<Partition> out;
    for_each_wilf(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

Count count_wilf(std::uint64_t n, std::uint64_t limit) {
    check_limit(n, limit, "count_wilf");
    if (n == 0) return Count(1);
    WilfCounter counter(n);
    return Count::from_raw(counter.count());
}

void for_each_fixed_structure(std::uint64_t n, const StructureVisitor& visit, std::uint64_t max_label,
                              std::uint64_t limit) {
    check_limit(n, limit, "fixed-point search");
    StructureSearch search(n, max_label);
    search.run(n, [&] {
        visit(search.current());
        return false;
    });
}

Count count_fixed(std::uint64_t n, std::uint64_t limit) {
    check_limit(n, limit, "count_fixed");
    StructureSearch search(n, kNoLabelCap);
    Count total;
    search.run(n, [&] {
        total += Count(1);
        return false;
    });
    return total;
}

std::optional<FixedPointStructure> first_fixed_structure(std::uint64_t n, std::uint64_t max_label,
                                                         std::uint64_t limit) {
    check_limit(n, limit, "fixed-point search");
    StructureSearch search(n, max_label);
    std::optional<FixedPointStructure> found;
    search.run(n, [&] {
        found = search.current();
        return true;
    });
    return found;
}

Count count_fixed_oracle(std::uint64_t n, std::uint64_t limit) {
    check_limit(n, limit, "count_fixed_oracle");
    Count total;
    for_each_wilf(n, [&](const Partition& p) {
        if (p.is_fixed_point()) total += Count(1);
    });
    return total;
}

std::vector<Partition> enumerate_fixed(std::uint64_t n, std::uint64_t limit) {
    std::vector<Partition> out;
    for_each_fixed_structure(n, [&](const FixedPointStructure& s) { out.push_back(s.decode()); },
                             kNoLabelCap, limit);
    return out;
}

std::uint64_t max_distinct_parts(std::uint64_t n) {
    std::uint64_t r = 0;
    while (Count(r + 1) * Count(r + 2) * Count(r + 3) <= Count(6) * Count(n)) ++r;
    return r;
}

}  // namespace wilf
