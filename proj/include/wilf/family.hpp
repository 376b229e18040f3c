#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wilf/count.hpp"
#include "wilf/cover.hpp"
#include "wilf/partition.hpp"

namespace wilf {

// A permutation of {1..R}, stored as its image list: sigma[j-1] = sigma(j).
using Permutation = std::vector<std::uint32_t>;

// Nearest integer (halves away from zero) to (1/(2K)) * (6n / (1 + 3/K))^(1/3).
// Throws InvalidArgument when that rounds to 0, or on n == 0 / K == 0.
std::uint64_t compute_R(std::uint64_t n, std::uint64_t K);

// floor(ln n), the "K grows with n" preset. At least 1.
std::uint64_t log_preset_K(std::uint64_t n);

// Everything a family member depends on except the permutations.
struct FamilyParams {
    std::uint64_t n = 0;
    std::uint64_t K = 0;
    std::uint64_t R = 0;
    std::vector<std::uint64_t> xs;  // 2RK labels, none in the cover set, ascending
};

// Uses compute_R and smallest_non_members unless overridden. The overrides
// exist for small-weight testing, where the formula choice is never feasible.
// Throws InvalidArgument on an xs override of the wrong length, not strictly
// ascending, or containing a cover-set member.
FamilyParams make_family_params(std::uint64_t n, std::uint64_t K,
                                std::optional<std::uint64_t> r_override = std::nullopt,
                                std::optional<std::vector<std::uint64_t>> xs_override = std::nullopt);

struct FamilySpec {
    FamilyParams params;
    std::vector<Permutation> sigmas;  // K permutations of {1..R}
};

// 1-based (multiplicity index, part index) into xs for every i in 1..K,
// j in 1..R: ((i-1)R + j, (2K-i)R + sigma_i(j)).
std::vector<std::pair<std::size_t, std::size_t>> family_index_pairs(const FamilySpec& spec);

// Total weight 2 * sum x_mult * x_part of the paired labels.
Count family_mass(const FamilySpec& spec);

struct Infeasible {
    Count mass;
    std::string reason;
};

using FamilyResult = std::variant<Partition, Infeasible>;

/**
 * Builds the family member indexed by spec.sigmas.
 *
 * The paired labels contribute `family_mass(spec)`; the rest of the weight is
 * filled by fixed_point_cover, whose labels are disjoint from xs. Returns
 * Infeasible when the mass exceeds n or the residual is in the exception set.
 * Throws InvalidArgument if a sigma is not a permutation of {1..R}.
 */
FamilyResult build_family_member(const FamilySpec& spec, const CoverSet& cover);

// K * ln(R!) with R = compute_R(n, K).
double family_log_size(std::uint64_t n, std::uint64_t K);
// K * ln(R!) for an explicit R.
double family_log_size_for(std::uint64_t K, std::uint64_t R);

// Whether the largest x equals 2RK plus the number of cover-set members below it,
// i.e. xs are exactly the smallest non-members.
bool labels_consistent_with_bound(const FamilyParams& params, const CoverSet& cover);

// Seeded source of uniformly random permutations. Uses its own Fisher-Yates
// and bounded sampling on top of mt19937_64 so the stream is identical on
// every standard library.
class PermutationSampler {
public:
    explicit PermutationSampler(std::uint64_t seed) : engine_(seed) {}

    Permutation next(std::uint32_t R);
    std::vector<Permutation> next_tuple(std::uint64_t K, std::uint32_t R);

private:
    std::uint64_t below(std::uint64_t bound);

    std::mt19937_64 engine_;
};

}  // namespace wilf
