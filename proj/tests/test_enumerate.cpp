#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "wilf/enumerate.hpp"
#include "wilf/errors.hpp"

using wilf::Count;
using wilf::Partition;

namespace {

std::vector<std::string> texts(const std::vector<Partition>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

// F(1..20), the published row.
const std::vector<std::uint64_t> kFixedRow{1, 0, 0, 2, 1, 1, 0, 1, 1, 3, 0, 3, 3, 3, 0, 4, 3, 2, 1, 6};

}  // namespace

TEST_CASE("enumerate_all_partitions") {
    CHECK(texts(wilf::enumerate_all_partitions(0)) == std::vector<std::string>{""});
    CHECK(texts(wilf::enumerate_all_partitions(4)) ==
          std::vector<std::string>{"4^1", "3^1+1^1", "2^2", "2^1+1^2", "1^4"});
    CHECK(wilf::enumerate_all_partitions(10).size() == 42);
}

TEST_CASE("enumeration order matches the reverse-lexicographic oracle") {
    for (std::uint64_t n = 0; n <= 18; ++n) {
        const auto ours = wilf::enumerate_all_partitions(n);
        const auto ref = oracle::partitions(n);
        REQUIRE(ours.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(oracle::expand(ours[i].terms()) == ref[i]);
    }
}

TEST_CASE("enumerate_wilf") {
    CHECK(texts(wilf::enumerate_wilf(3)) == std::vector<std::string>{"3^1", "1^3"});
    CHECK(texts(wilf::enumerate_wilf(0)) == std::vector<std::string>{""});
    CHECK(texts(wilf::enumerate_wilf(5)) ==
          std::vector<std::string>{"5^1", "3^1+1^2", "2^2+1^1", "2^1+1^3", "1^5"});
}

TEST_CASE("enumerate_wilf equals filtered enumeration, in order") {
    for (std::uint64_t n = 0; n <= 25; ++n) {
        std::vector<Partition> filtered;
        wilf::for_each_partition(n, [&](const Partition& p) {
            if (p.is_wilf()) filtered.push_back(p);
        });
        CHECK(wilf::enumerate_wilf(n) == filtered);
    }
}

TEST_CASE("count_wilf") {
    CHECK(wilf::count_wilf(0) == Count(1));
    CHECK(wilf::count_wilf(1) == Count(1));
    CHECK(wilf::count_wilf(2) == Count(2));
    CHECK(wilf::count_wilf(6) == Count(7));
    CHECK_THROWS_AS(wilf::count_wilf(201), wilf::LimitExceeded);
    CHECK(wilf::count_wilf(25, 25) == Count(oracle::count_wilf(25)));
    CHECK_THROWS_AS(wilf::count_wilf(26, 25), wilf::LimitExceeded);
}

TEST_CASE("property: count_wilf against brute force for n <= 35") {
    for (std::uint64_t n = 0; n <= 35; ++n) {
        CAPTURE(n);
        CHECK(wilf::count_wilf(n) == Count(oracle::count_wilf(n)));
        if (n <= 30) CHECK(wilf::count_wilf(n) == Count(wilf::enumerate_wilf(n).size()));
    }
}

TEST_CASE("count_fixed") {
    CHECK(wilf::count_fixed(4) == Count(2));
    CHECK(wilf::count_fixed(7) == Count(0));
    CHECK(wilf::count_fixed(20) == Count(6));
    CHECK(wilf::count_fixed(1) == Count(1));
    CHECK(wilf::count_fixed(0) == Count(1));
    CHECK_THROWS_AS(wilf::count_fixed(401), wilf::LimitExceeded);
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(wilf::count_fixed(n) == Count(kFixedRow[n - 1]));
}

TEST_CASE("count_fixed_oracle") {
    CHECK(wilf::count_fixed_oracle(10) == Count(3));
    CHECK(wilf::count_fixed_oracle(2) == Count(0));
    CHECK(wilf::count_fixed_oracle(15) == Count(0));
    CHECK_THROWS_AS(wilf::count_fixed_oracle(46), wilf::LimitExceeded);
}

TEST_CASE("property: structure count equals filtered count for n <= 45") {
    for (std::uint64_t n = 0; n <= 45; ++n) {
        CAPTURE(n);
        CHECK(wilf::count_fixed(n) == wilf::count_fixed_oracle(n));
        if (n <= 28) CHECK(wilf::count_fixed(n) == Count(oracle::count_fixed(n)));
    }
}

TEST_CASE("enumerate_fixed") {
    CHECK(texts(wilf::enumerate_fixed(4)) == std::vector<std::string>{"2^2", "2^1+1^2"});
    CHECK(wilf::enumerate_fixed(2).empty());
    CHECK(texts(wilf::enumerate_fixed(1)) == std::vector<std::string>{"1^1"});
}

TEST_CASE("property: enumerate_fixed yields distinct fixed points of the right weight") {
    for (std::uint64_t n = 0; n <= 60; ++n) {
        const auto fixed = wilf::enumerate_fixed(n);
        std::set<Partition> seen;
        for (const auto& p : fixed) {
            CHECK(p.is_fixed_point());
            CHECK(p.weight() == Count(n));
            CHECK(seen.insert(p).second);
        }
        CHECK(Count(fixed.size()) == wilf::count_fixed(n));
    }
}

TEST_CASE("FixedPointStructure encode/decode") {
    const auto p = Partition::parse("6^1+4^2+3^3+2^4+1^6");
    const auto s = wilf::FixedPointStructure::encode(p);
    CHECK(s.singletons == std::vector<std::uint64_t>{3});
    CHECK(s.pairs == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 6}, {2, 4}});
    CHECK(s.weight() == Count(37));
    CHECK(s.decode() == p);
    CHECK(s.labels() == std::vector<std::uint64_t>{1, 2, 3, 4, 6});
    CHECK_THROWS_AS(wilf::FixedPointStructure::encode(Partition::parse("5^2+4^1+3^3+1^6")), wilf::InvalidArgument);

    for (std::uint64_t n = 0; n <= 45; ++n) {
        wilf::for_each_fixed_structure(n, [&](const wilf::FixedPointStructure& st) {
            const Partition decoded = st.decode();
            CHECK(decoded.is_fixed_point());
            CHECK(st.weight() == Count(n));
            CHECK(wilf::FixedPointStructure::encode(decoded) == st);
        });
        for (const auto& fp : wilf::enumerate_wilf(n)) {
            if (fp.is_fixed_point()) CHECK(wilf::FixedPointStructure::encode(fp).decode() == fp);
        }
    }
}

TEST_CASE("first_fixed_structure respects the label cap") {
    const auto s = wilf::first_fixed_structure(16, 10);
    REQUIRE(s.has_value());
    CHECK(s->decode().to_string() == "4^4");
    CHECK_FALSE(wilf::first_fixed_structure(7, 10).has_value());
    // 2*1*b = 30 needs b = 15.
    CHECK_FALSE(wilf::first_fixed_structure(2 * 15, 1).has_value());
}

TEST_CASE("max_distinct_parts") {
    CHECK(wilf::max_distinct_parts(0) == 0);
    CHECK(wilf::max_distinct_parts(1) == 1);
    CHECK(wilf::max_distinct_parts(4) == 2);
    CHECK(wilf::max_distinct_parts(9) == 2);
    CHECK(wilf::max_distinct_parts(10) == 3);
}

TEST_CASE("property: distinct parts of Wilf partitions obey the tetrahedral bound") {
    for (std::uint64_t n = 1; n <= 40; ++n) {
        const std::uint64_t bound = wilf::max_distinct_parts(n);
        CHECK(static_cast<double>(bound) <= std::cbrt(6.0 * static_cast<double>(n)));
        std::uint64_t widest = 0;
        wilf::for_each_wilf(n, [&](const Partition& p) {
            widest = std::max<std::uint64_t>(widest, p.distinct_part_count());
        });
        CHECK(widest <= bound);
    }
    // The bound is attained at tetrahedral numbers.
    CHECK(Partition::parse("3^1+2^2+1^3").distinct_part_count() == wilf::max_distinct_parts(10));
}
