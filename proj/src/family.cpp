#include "wilf/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wilf/errors.hpp"

namespace wilf {

std::uint64_t compute_R(std::uint64_t n, std::uint64_t K) {
    if (n == 0 || K == 0) throw InvalidArgument("compute_R requires n >= 1 and K >= 1");
    const double k = static_cast<double>(K);
    const double value = std::cbrt(6.0 * static_cast<double>(n) / (1.0 + 3.0 / k)) / (2.0 * k);
    const double rounded = std::round(value);  // halves away from zero
    if (rounded < 1.0) {
        throw InvalidArgument("R rounds to 0 for n=" + std::to_string(n) + ", K=" + std::to_string(K) +
                              "; n is too small for this K");
    }
    return static_cast<std::uint64_t>(rounded);
}

std::uint64_t log_preset_K(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("log_preset_K requires n >= 1");
    const auto k = static_cast<std::uint64_t>(std::floor(std::log(static_cast<double>(n))));
    return std::max<std::uint64_t>(k, 1);
}

FamilyParams make_family_params(std::uint64_t n, std::uint64_t K, std::optional<std::uint64_t> r_override,
                                std::optional<std::vector<std::uint64_t>> xs_override) {
    if (n == 0 || K == 0) throw InvalidArgument("family requires n >= 1 and K >= 1");
    FamilyParams params;
    params.n = n;
    params.K = K;
    if (r_override) {
        if (*r_override == 0) throw InvalidArgument("R override must be positive");
        params.R = *r_override;
    } else {
        params.R = compute_R(n, K);
    }
    const std::size_t needed = 2 * params.R * params.K;
    if (xs_override) {
        const auto& xs = *xs_override;
        if (xs.size() != needed) {
            throw InvalidArgument("xs override needs exactly 2RK = " + std::to_string(needed) + " labels, got " +
                                  std::to_string(xs.size()));
        }
        if (!std::is_sorted(xs.begin(), xs.end()) || std::adjacent_find(xs.begin(), xs.end()) != xs.end() ||
            xs.front() == 0) {
            throw InvalidArgument("xs override must be strictly ascending positive integers");
        }
        const CoverSet cs = CoverSet::for_label(xs.back());
        for (std::uint64_t x : xs) {
            if (is_cover_member(x, cs)) {
                throw InvalidArgument("xs override contains cover-set member " + std::to_string(x));
            }
        }
        params.xs = xs;
    } else {
        // The t-th non-member is below t + (members below it) <= 2t for t >= 10.
        const CoverSet cs = CoverSet::for_label(2 * needed + kBaseLabels);
        params.xs = smallest_non_members(needed, cs);
    }
    return params;
}

std::vector<std::pair<std::size_t, std::size_t>> family_index_pairs(const FamilySpec& spec) {
    const std::size_t K = spec.params.K;
    const std::size_t R = spec.params.R;
    if (spec.sigmas.size() != K) {
        throw InvalidArgument("family needs exactly K = " + std::to_string(K) + " permutations");
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(K * R);
    for (std::size_t i = 1; i <= K; ++i) {
        const Permutation& sigma = spec.sigmas[i - 1];
        Permutation sorted = sigma;
        std::sort(sorted.begin(), sorted.end());
        bool valid = sorted.size() == R;
        for (std::size_t j = 0; valid && j < R; ++j) valid = sorted[j] == j + 1;
        if (!valid) {
            throw InvalidArgument("sigma_" + std::to_string(i) + " is not a permutation of {1.." + std::to_string(R) +
                                  "}");
        }
        for (std::size_t j = 1; j <= R; ++j) {
            out.emplace_back((i - 1) * R + j, (2 * K - i) * R + sigma[j - 1]);
        }
    }
    return out;
}

Count family_mass(const FamilySpec& spec) {
    const auto& xs = spec.params.xs;
    Count total;
    for (const auto& [mi, pi] : family_index_pairs(spec)) total += Count(xs[mi - 1]) * Count(xs[pi - 1]);
    return Count(2) * total;
}

FamilyResult build_family_member(const FamilySpec& spec, const CoverSet& cover) {
    const auto& xs = spec.params.xs;
    std::vector<Term> terms;
    Count mass;
    for (const auto& [mi, pi] : family_index_pairs(spec)) {
        const std::uint64_t mult = xs[mi - 1];
        const std::uint64_t part = xs[pi - 1];
        terms.push_back({part, mult});
        terms.push_back({mult, part});
        mass += Count(2) * Count(part) * Count(mult);
    }
    const Count n(spec.params.n);
    if (mass > n) {
        return Infeasible{mass, "paired labels weigh " + mass.to_string() + " > n = " + n.to_string()};
    }
    const std::uint64_t residual = (n - mass).to_u64();
    Partition paired = Partition::canonicalize(std::move(terms));
    if (residual == 0) return paired;
    auto rest = fixed_point_cover(residual, cover);
    if (!rest) {
        return Infeasible{mass, "residual " + std::to_string(residual) + " is in the exception set {2,3,7,11,15}"};
    }
    return merge_disjoint(paired, *rest);
}

double family_log_size_for(std::uint64_t K, std::uint64_t R) {
    return static_cast<double>(K) * std::lgamma(static_cast<double>(R) + 1.0);
}

double family_log_size(std::uint64_t n, std::uint64_t K) {
    return family_log_size_for(K, compute_R(n, K));
}

bool labels_consistent_with_bound(const FamilyParams& params, const CoverSet& cover) {
    if (params.xs.empty()) return true;
    const std::uint64_t largest = params.xs.back();
    const auto members = cover.members();
    const auto below = static_cast<std::uint64_t>(std::lower_bound(members.begin(), members.end(), largest) - members.begin());
    if (cover.largest_member() <= largest) {
        throw CoverTooShallow("cover set too shallow to count members below " + std::to_string(largest));
    }
    return largest == 2 * params.R * params.K + below;
}

std::uint64_t PermutationSampler::below(std::uint64_t bound) {
    // Rejection sampling on the top of the range keeps the draw unbiased.
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t v = 0;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

Permutation PermutationSampler::next(std::uint32_t R) {
    Permutation sigma(R);
    for (std::uint32_t j = 0; j < R; ++j) sigma[j] = j + 1;
    for (std::uint32_t j = R; j > 1; --j) {
        const auto swap_with = static_cast<std::uint32_t>(below(j));
        std::swap(sigma[j - 1], sigma[swap_with]);
    }
    return sigma;
}

std::vector<Permutation> PermutationSampler::next_tuple(std::uint64_t K, std::uint32_t R) {
    std::vector<Permutation> tuple;
    tuple.reserve(K);
    for (std::uint64_t i = 0; i < K; ++i) tuple.push_back(next(R));
    return tuple;
}

}  // namespace wilf
