#include "wilf/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "wilf/errors.hpp"

namespace wilf {

BigInt to_bigint(const Count& c) {
    const Count::value_type v = c.raw();
    BigInt out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

double asymptotic_log_f(std::uint64_t n) {
    if (n < 2) throw InvalidArgument("asymptotic estimates need n >= 2");
    const double x = static_cast<double>(n);
    return std::cbrt(6.0 * x) * std::log(x) / 3.0;
}

double asymptotic_log_F(std::uint64_t n) {
    return asymptotic_log_f(n) / 2.0;
}

std::vector<Count> q_distinct_squares_table(std::uint64_t k_max) {
    std::vector<Count> ways(k_max + 1);
    ways[0] = Count(1);
    // 0/1 knapsack over squares: each square used at most once.
    for (std::uint64_t s = 1; s * s <= k_max; ++s) {
        const std::uint64_t sq = s * s;
        for (std::uint64_t v = k_max; v >= sq; --v) ways[v] += ways[v - sq];
    }
    return ways;
}

Count q_distinct_squares(std::uint64_t k) {
    return q_distinct_squares_table(k).back();
}

// zeta(3/2) by Euler-Maclaurin summation: the first N-1 terms directly, then
//   N^(1-s)/(s-1) + N^(-s)/2 + sum_{j=1}^{6} B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1).
// For real s the remainder is bounded by the first omitted (j = 7) term,
// which for N = 20 is below 1e-19, far inside the 1e-9 target.
double zeta_three_halves() {
    constexpr long double s = 1.5L;
    constexpr int N = 20;
    constexpr std::array<long double, 6> bernoulli{1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66,
                                                   -691.0L / 2730};
    long double sum = 0;
    for (int k = 1; k < N; ++k) sum += std::pow(static_cast<long double>(k), -s);
    const long double n = N;
    sum += std::pow(n, 1 - s) / (s - 1) + std::pow(n, -s) / 2;
    long double rising = s;      // s (s+1) ... (s+2j-2)
    long double factorial = 2;   // (2j)!
    for (std::size_t j = 1; j <= bernoulli.size(); ++j) {
        sum += bernoulli[j - 1] / factorial * rising * std::pow(n, -s - 2 * static_cast<long double>(j) + 1);
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        factorial *= (2 * j + 1) * (2 * j + 2);
    }
    return static_cast<double>(sum);
}

double meinardus_constant_from_zeta(double zeta_value) {
    return 3.0 * std::pow(std::sqrt(std::numbers::pi) * zeta_value / 4.0, 2.0 / 3.0);
}

double meinardus_constant() {
    return meinardus_constant_from_zeta(zeta_three_halves());
}

Count divisor_count(std::uint64_t x) {
    if (x == 0) throw InvalidArgument("divisor_count requires x >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= x / d; ++d) {
        if (x % d == 0) count += (d == x / d) ? 1 : 2;
    }
    return Count(count);
}

PartsTable::PartsTable(std::uint64_t m_max, std::uint64_t r_max)
    : m_max_(m_max), r_max_(r_max), cells_((m_max + 1) * (r_max + 1)) {
    const auto at = [this](std::uint64_t m, std::uint64_t r) -> Count& { return cells_[m * (r_max_ + 1) + r]; };
    at(0, 0) = Count(1);
    for (std::uint64_t m = 1; m <= m_max_; ++m) {
        for (std::uint64_t r = 1; r <= std::min(m, r_max_); ++r) {
            at(m, r) = at(m - 1, r - 1) + at(m - r, r);
        }
    }
}

Count PartsTable::operator()(std::uint64_t m, std::uint64_t r) const {
    if (r > m) return Count(0);
    if (m > m_max_ || r > r_max_) throw InvalidArgument("p(m, r) requested outside the table");
    return cells_[m * (r_max_ + 1) + r];
}

Count partitions_into_parts(std::uint64_t m, std::uint64_t r) {
    if (r > m) return Count(0);
    return PartsTable(m, r)(m, r);
}

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;
    }
    return out;
}

BigInt factorial(std::uint64_t n) {
    BigInt out = 1;
    for (std::uint64_t i = 2; i <= n; ++i) out *= i;
    return out;
}

}  // namespace

PartitionCountBound partition_count_bound(std::uint64_t m, std::uint64_t r) {
    if (m == 0 || r == 0) throw InvalidArgument("partition_count_bound requires m >= 1 and r >= 1");
    PartitionCountBound out;
    out.binomial = Rational(binomial(m + r * (r - 1) / 2 - 1, r - 1), factorial(r));
    const Rational base(BigInt(2 * m + r * r), BigInt(2));
    Rational power = 1;
    for (std::uint64_t i = 1; i < r; ++i) power *= base;
    out.power = power / Rational(factorial(r) * factorial(r - 1));
    return out;
}

Count involution_count(std::uint64_t n) {
    Count prev(1);  // I(0)
    Count cur(1);   // I(1)
    if (n == 0) return prev;
    for (std::uint64_t k = 2; k <= n; ++k) {
        Count next = cur + Count(k - 1) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational upper_bound_F_exact(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("upper_bound_F requires n >= 1");
    const std::vector<Count> q = q_distinct_squares_table(n);
    std::uint64_t max_divisors = 0;
    for (std::uint64_t x = 1; x <= n; ++x) max_divisors = std::max(max_divisors, divisor_count(x).to_u64());

    // r never exceeds (6n)^(1/3)/2.
    std::uint64_t r_cap = 0;
    while (8 * (r_cap + 1) * (r_cap + 1) * (r_cap + 1) <= 6 * n) ++r_cap;
    const PartsTable parts(n / 2, r_cap);

    Rational total = 0;
    for (std::uint64_t k = n % 2; k <= n; k += 2) {
        if (q[k] == Count(0)) continue;
        const std::uint64_t rest = n - k;
        const std::uint64_t half = rest / 2;
        Rational inner = 0;
        Rational split_ways = 1;  // (D/2)^r
        for (std::uint64_t r = 0; 8 * r * r * r <= 6 * rest; ++r) {
            inner += Rational(to_bigint(parts(half, r))) * split_ways;
            split_ways *= Rational(BigInt(max_divisors), BigInt(2));
        }
        total += Rational(to_bigint(q[k])) * inner;
    }
    return total;
}

double upper_bound_F(std::uint64_t n) {
    return upper_bound_F_exact(n).convert_to<double>();
}

ReportRow report_row(std::uint64_t n, const ReportOptions& options) {
    ReportRow row;
    row.n = n;
    if (n <= options.wilf_limit) row.f_exact = count_wilf(n, options.wilf_limit);
    if (n <= options.fixed_limit) row.F_exact = count_fixed(n, options.fixed_limit);
    if (row.F_exact && *row.F_exact > Count(0)) row.ln_F = std::log(row.F_exact->to_double());
    if (n >= 2) {
        row.estimate_f = asymptotic_log_f(n);
        row.estimate_F = asymptotic_log_F(n);
    }
    if (row.ln_F && row.estimate_F && *row.estimate_F > 0) row.ratio = *row.ln_F / *row.estimate_F;
    return row;
}

std::vector<ReportRow> report(std::span<const std::uint64_t> n_values, const ReportOptions& options) {
    std::vector<ReportRow> rows;
    rows.reserve(n_values.size());
    for (std::uint64_t n : n_values) rows.push_back(report_row(n, options));
    return rows;
}

namespace {

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string field(const std::optional<double>& v) { return v ? fixed6(*v) : std::string(); }
std::string field(const std::optional<Count>& v) { return v ? v->to_string() : std::string(); }

nlohmann::ordered_json json_value(const std::optional<double>& v) {
    if (!v) return nullptr;
    return std::stod(fixed6(*v));
}

nlohmann::ordered_json json_value(const std::optional<Count>& v) {
    if (!v) return nullptr;
    if (v->raw() <= std::numeric_limits<std::uint64_t>::max()) return v->to_u64();
    return v->to_string();
}

}  // namespace

std::string report_csv(std::span<const ReportRow> rows) {
    std::string out = "n,f_exact,F_exact,ln_F,estimate_f,estimate_F,ratio\n";
    for (const ReportRow& row : rows) {
        out += std::to_string(row.n) + ',' + field(row.f_exact) + ',' + field(row.F_exact) + ',' + field(row.ln_F) +
               ',' + field(row.estimate_f) + ',' + field(row.estimate_F) + ',' + field(row.ratio) + '\n';
    }
    return out;
}

std::string report_json(std::span<const ReportRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ReportRow& row : rows) {
        nlohmann::ordered_json obj;
        obj["n"] = row.n;
        obj["f_exact"] = json_value(row.f_exact);
        obj["F_exact"] = json_value(row.F_exact);
        obj["ln_F"] = json_value(row.ln_F);
        obj["estimate_f"] = json_value(row.estimate_f);
        obj["estimate_F"] = json_value(row.estimate_F);
        obj["ratio"] = json_value(row.ratio);
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

}  // namespace wilf
