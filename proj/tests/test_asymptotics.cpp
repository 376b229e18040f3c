#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include <boost/math/special_functions/zeta.hpp>
#include <json.hpp>

#include "oracles.hpp"
#include "wilf/asymptotics.hpp"
#include "wilf/enumerate.hpp"
#include "wilf/errors.hpp"

using wilf::Count;
using wilf::Rational;

TEST_CASE("asymptotic estimates") {
    CHECK(wilf::asymptotic_log_f(1000) == doctest::Approx(41.84).epsilon(1e-3));
    CHECK(wilf::asymptotic_log_f(6) == doctest::Approx(1.975).epsilon(1e-3));
    for (std::uint64_t n : {2, 3, 10, 999, 123456}) {
        CHECK(wilf::asymptotic_log_F(n) == wilf::asymptotic_log_f(n) / 2);
    }
    CHECK_THROWS_AS(wilf::asymptotic_log_f(1), wilf::InvalidArgument);
    CHECK_THROWS_AS(wilf::asymptotic_log_F(0), wilf::InvalidArgument);
}

TEST_CASE("q_distinct_squares") {
    CHECK(wilf::q_distinct_squares(0) == Count(1));
    CHECK(wilf::q_distinct_squares(1) == Count(1));
    CHECK(wilf::q_distinct_squares(2) == Count(0));
    CHECK(wilf::q_distinct_squares(25) == Count(2));
    const auto hist = oracle::distinct_square_sums(500);
    const auto table = wilf::q_distinct_squares_table(500);
    for (std::uint64_t k = 0; k <= 500; ++k) {
        CAPTURE(k);
        CHECK(table[k] == Count(hist[k]));
    }
}

TEST_CASE("Meinardus constant") {
    // 30-digit reference values.
    CHECK(std::abs(wilf::zeta_three_halves() - 2.61237534868548834) < 2.6e-9);
    CHECK(std::abs(wilf::meinardus_constant() / 3.30741178359665199 - 1) < 1e-9);
    CHECK(std::abs(wilf::meinardus_constant() - wilf::meinardus_constant_from_zeta(boost::math::zeta(1.5))) < 1e-6);
    CHECK(wilf::meinardus_constant() > 3.0);
    CHECK(wilf::meinardus_constant() < 3.5);
    CHECK(wilf::meinardus_constant_from_zeta(1.0) == doctest::Approx(1.744).epsilon(1e-3));
}

TEST_CASE("divisor_count") {
    CHECK(wilf::divisor_count(1) == Count(1));
    CHECK(wilf::divisor_count(12) == Count(6));
    CHECK(wilf::divisor_count(16) == Count(5));
    CHECK_THROWS_AS(wilf::divisor_count(0), wilf::InvalidArgument);
    for (std::uint64_t x = 1; x <= 10000; ++x) CHECK(wilf::divisor_count(x) == Count(oracle::divisors(x)));
}

TEST_CASE("property: divisor_count is multiplicative") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> dist(1, 9999);
    int checked = 0;
    while (checked < 50) {
        const std::uint64_t a = dist(rng), b = dist(rng);
        if (std::gcd(a, b) != 1) continue;
        CHECK(wilf::divisor_count(a * b) == wilf::divisor_count(a) * wilf::divisor_count(b));
        ++checked;
    }
}

TEST_CASE("partitions_into_parts") {
    CHECK(wilf::partitions_into_parts(5, 2) == Count(2));
    CHECK(wilf::partitions_into_parts(7, 3) == Count(4));
    CHECK(wilf::partitions_into_parts(0, 0) == Count(1));
    CHECK(wilf::partitions_into_parts(4, 0) == Count(0));
    CHECK(wilf::partitions_into_parts(3, 5) == Count(0));
    for (std::uint64_t m = 1; m <= 60; ++m) CHECK(wilf::partitions_into_parts(m, 1) == Count(1));
    for (std::uint64_t m = 0; m <= 25; ++m) {
        for (std::uint64_t r = 0; r <= m; ++r) {
            CHECK(wilf::partitions_into_parts(m, r) == Count(oracle::partitions_with_length(m, r)));
        }
    }
    const wilf::PartsTable table(10, 3);
    CHECK_THROWS_AS(table(11, 3), wilf::InvalidArgument);
    CHECK(table(2, 9) == Count(0));
}

TEST_CASE("partition_count_bound") {
    const auto b52 = wilf::partition_count_bound(5, 2);
    CHECK(b52.binomial == Rational(5, 2));
    CHECK(b52.power == Rational(7, 2));
    for (std::uint64_t m = 1; m <= 50; ++m) CHECK(wilf::partition_count_bound(m, 1).binomial == 1);
    CHECK_THROWS_AS(wilf::partition_count_bound(0, 1), wilf::InvalidArgument);

    const wilf::PartsTable p(200, 12);
    for (std::uint64_t m = 1; m <= 200; ++m) {
        for (std::uint64_t r = 1; r <= 12; ++r) {
            const auto bound = wilf::partition_count_bound(m, r);
            CHECK(Rational(wilf::to_bigint(p(m, r))) <= bound.binomial);
            CHECK(bound.binomial <= bound.power);
        }
    }
}

TEST_CASE("involution_count") {
    CHECK(wilf::involution_count(0) == Count(1));
    CHECK(wilf::involution_count(1) == Count(1));
    CHECK(wilf::involution_count(2) == Count(2));
    CHECK(wilf::involution_count(4) == Count(10));
    for (std::size_t n = 0; n <= 8; ++n) CHECK(wilf::involution_count(n) == Count(oracle::involutions(n)));
    CHECK_THROWS_AS(wilf::involution_count(200), wilf::ArithmeticOverflow);
}

TEST_CASE("upper_bound_F") {
    // Independent rational evaluation of the same double sum.
    CHECK(wilf::upper_bound_F_exact(1) == Rational(1));
    CHECK(wilf::upper_bound_F_exact(4) == Rational(5, 2));
    CHECK(wilf::upper_bound_F_exact(20) == Rational(97));
    CHECK(wilf::upper_bound_F_exact(50) == Rational(21813));
    CHECK(wilf::upper_bound_F(4) == 2.5);
    CHECK_THROWS_AS(wilf::upper_bound_F(0), wilf::InvalidArgument);
}

TEST_CASE("property: F(n) never exceeds the upper bound for n <= 200") {
    for (std::uint64_t n = 1; n <= 200; ++n) {
        CAPTURE(n);
        CHECK(Rational(wilf::to_bigint(wilf::count_fixed(n))) <= wilf::upper_bound_F_exact(n));
    }
}

TEST_CASE("report rows") {
    const auto row20 = wilf::report_row(20);
    REQUIRE(row20.F_exact.has_value());
    CHECK(*row20.F_exact == Count(6));
    CHECK(*row20.f_exact == Count(172));
    CHECK(*row20.ln_F == doctest::Approx(1.792).epsilon(1e-3));
    CHECK(*row20.estimate_F == doctest::Approx(2.463).epsilon(1e-3));
    CHECK(*row20.ratio == doctest::Approx(0.728).epsilon(1e-3));
    CHECK(*row20.estimate_F == *row20.estimate_f / 2);

    const auto row2 = wilf::report_row(2);
    CHECK(*row2.F_exact == Count(0));
    CHECK_FALSE(row2.ln_F.has_value());
    CHECK_FALSE(row2.ratio.has_value());

    const auto big = wilf::report_row(1000000);
    CHECK_FALSE(big.f_exact.has_value());
    CHECK_FALSE(big.F_exact.has_value());
    CHECK(big.estimate_f.has_value());
    CHECK(big.estimate_F.has_value());
    CHECK_FALSE(big.ratio.has_value());

    const auto one = wilf::report_row(1);
    CHECK_FALSE(one.estimate_f.has_value());
}

TEST_CASE("report emission") {
    const std::vector<std::uint64_t> ns{2, 20, 1000000};
    const auto rows = wilf::report(ns);
    CHECK(wilf::report_csv(rows) ==
          "n,f_exact,F_exact,ln_F,estimate_f,estimate_F,ratio\n"
          "2,2,0,,0.528970,0.264485,\n"
          "20,172,6,1.791759,4.925407,2.462704,0.727558\n"
          "1000000,,,,836.814958,418.407479,\n");
    const auto json = nlohmann::json::parse(wilf::report_json(rows));
    REQUIRE(json.size() == 3);
    CHECK(json[0]["ratio"].is_null());
    CHECK(json[1]["F_exact"] == 6);
    CHECK(json[1]["ratio"].get<double>() == doctest::Approx(0.727558));
    CHECK(json[2]["f_exact"].is_null());
}
