#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wilf/count.hpp"
#include "wilf/enumerate.hpp"

namespace wilf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt to_bigint(const Count& c);

// (1/3)(6n)^(1/3) ln n, the leading term of ln f(n). Throws for n < 2.
double asymptotic_log_f(std::uint64_t n);
// Half of asymptotic_log_f: the leading term of ln F(n).
double asymptotic_log_F(std::uint64_t n);

// Number of ways to write k as a sum of distinct positive squares.
Count q_distinct_squares(std::uint64_t k);
// q_distinct_squares(0..k_max) in one pass.
std::vector<Count> q_distinct_squares_table(std::uint64_t k_max);

double zeta_three_halves();
// 3 (sqrt(pi) zeta(3/2) / 4)^(2/3), the growth constant of ln q(k) / k^(1/3).
double meinardus_constant();
// Same expression with an arbitrary value in place of zeta(3/2).
double meinardus_constant_from_zeta(double zeta_value);

// Number of divisors of x >= 1, by trial division.
Count divisor_count(std::uint64_t x);

// Table of p(m, r), the number of partitions of m into exactly r parts, for
// m <= m_max and r <= r_max. Uses p(m, r) = p(m-1, r-1) + p(m-r, r).
class PartsTable {
public:
    PartsTable(std::uint64_t m_max, std::uint64_t r_max);

    // Zero outside the table's range only when r > m; throws InvalidArgument
    // for indices beyond the table.
    Count operator()(std::uint64_t m, std::uint64_t r) const;

private:
    std::uint64_t m_max_;
    std::uint64_t r_max_;
    std::vector<Count> cells_;
};

Count partitions_into_parts(std::uint64_t m, std::uint64_t r);

// Two upper bounds on p(m, r) for m, r >= 1, exact:
//   binomial = C(m + r(r-1)/2 - 1, r - 1) / r!
//   power    = (m + r^2/2)^(r-1) / (r! (r-1)!)
struct PartitionCountBound {
    Rational binomial;
    Rational power;
};

PartitionCountBound partition_count_bound(std::uint64_t m, std::uint64_t r);

// Number of involutions of an n-element set: I(n) = I(n-1) + (n-1) I(n-2).
Count involution_count(std::uint64_t n);

/**
 * Upper bound on F(n) from splitting a fixed point into its diagonal terms
 * (a partition of some k into distinct squares) and the half of its
 * off-diagonal terms with part > multiplicity (at most r distinct parts with
 * 8r^3 <= 6(n-k), each part x splitting in at most d(x)/2 ways):
 *
 *   sum_{k = n mod 2, step 2}^{n} sum_{r : 8r^3 <= 6(n-k)} q(k) p((n-k)/2, r) (D/2)^r,
 *   D = max_{x <= n} d(x).
 *
 * Evaluated exactly; D/2 may be a half-integer.
 */
Rational upper_bound_F_exact(std::uint64_t n);
double upper_bound_F(std::uint64_t n);

struct ReportRow {
    std::uint64_t n = 0;
    std::optional<Count> f_exact;
    std::optional<Count> F_exact;
    std::optional<double> ln_F;
    std::optional<double> estimate_f;
    std::optional<double> estimate_F;
    std::optional<double> ratio;  // ln_F / estimate_F
};

struct ReportOptions {
    std::uint64_t wilf_limit = kWilfCountLimit;
    std::uint64_t fixed_limit = kFixedCountLimit;
};

// Exact columns are filled only where n is within the limits; estimates need
// n >= 2; the ratio needs F(n) > 0.
ReportRow report_row(std::uint64_t n, const ReportOptions& options = {});
std::vector<ReportRow> report(std::span<const std::uint64_t> n_values, const ReportOptions& options = {});

// Header "n,f_exact,F_exact,ln_F,estimate_f,estimate_F,ratio"; reals with six
// decimals; missing values are empty fields.
std::string report_csv(std::span<const ReportRow> rows);
// Array of objects with the same keys; missing values are null.
std::string report_json(std::span<const ReportRow> rows);

}  // namespace wilf
