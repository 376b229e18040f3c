#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "wilf/enumerate.hpp"
#include "wilf/errors.hpp"
#include "wilf/partition.hpp"

using wilf::Partition;
using wilf::Term;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

}  // namespace

TEST_CASE("canonicalize sorts by decreasing part") {
    const auto p = Partition::canonicalize(std::vector<Term>{{1, 6}, {6, 1}, {3, 3}, {4, 2}, {2, 4}});
    CHECK(p.terms() == std::vector<Term>{{6, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 6}});
    CHECK(Partition::canonicalize(std::vector<Term>{}).empty());
    CHECK(Partition::canonicalize(std::vector<Term>{}).weight() == wilf::Count(0));
}

TEST_CASE("canonicalize rejects duplicates and zeros") {
    CHECK_THROWS_AS(Partition::canonicalize(std::vector<Term>{{2, 1}, {2, 3}}), wilf::InvalidPartition);
    CHECK_THROWS_AS(Partition::canonicalize(std::vector<Term>{{0, 1}}), wilf::InvalidPartition);
    CHECK_THROWS_AS(Partition::canonicalize(std::vector<Term>{{3, 0}}), wilf::InvalidPartition);
}

TEST_CASE("weight") {
    CHECK(P("5^2+4^1+3^3+1^6").weight() == wilf::Count(29));
    CHECK(P("3^3").weight() == wilf::Count(9));
    CHECK(P("6^1+4^2+3^3+2^4+1^6").weight() == wilf::Count(37));
}

TEST_CASE("is_wilf") {
    CHECK(P("5^2+4^1+3^3+1^6").is_wilf());
    CHECK_FALSE(P("4^1+1^1").is_wilf());
    CHECK(Partition().is_wilf());
}

TEST_CASE("involute") {
    CHECK(P("5^2+4^1+3^3+1^6").involute() == P("6^1+3^3+2^5+1^4"));
    CHECK(P("6^1+4^2+3^3+2^4+1^6").involute() == P("6^1+4^2+3^3+2^4+1^6"));
    CHECK(P("5^1").involute() == P("1^5"));
    CHECK_THROWS_AS(P("4^1+1^1").involute(), wilf::NotWilf);
}

TEST_CASE("is_fixed_point") {
    CHECK(P("6^1+4^2+3^3+2^4+1^6").is_fixed_point());
    CHECK_FALSE(P("5^2+4^1+3^3+1^6").is_fixed_point());
    CHECK(P("1^1").is_fixed_point());
    CHECK_FALSE(P("4^1+1^1").is_fixed_point());
}

TEST_CASE("distinct_part_count") {
    CHECK(P("6^1+4^2+3^3+2^4+1^6").distinct_part_count() == 5);
    CHECK(Partition().distinct_part_count() == 0);
    const auto p = P("3^1+2^2+1^3");
    CHECK(p.distinct_part_count() == 3);
    CHECK(p.is_wilf());
    CHECK(p.weight() == wilf::Count(10));
}

TEST_CASE("parse and serialize") {
    CHECK(P("6^1+4^2+3^3+2^4+1^6").terms() == std::vector<Term>{{6, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 6}});
    CHECK(P("").empty());
    CHECK(Partition().to_string() == "");
    CHECK_THROWS_AS(P("3^0+1^2"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P("0^2"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P("3^1+3^2"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P("1^2+3^1"), wilf::InvalidPartition);  // not decreasing
    CHECK_THROWS_AS(P("3"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P("3^1+"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P("3^1++1^1"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P("a^1"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P("3^-1"), wilf::InvalidPartition);
    CHECK_THROWS_AS(P(" 3^1"), wilf::InvalidPartition);
}

TEST_CASE("json form") {
    const auto p = P("6^1+4^2+3^3+2^4+1^6");
    CHECK(p.to_json() == "[[6,1],[4,2],[3,3],[2,4],[1,6]]");
    CHECK(Partition::parse_json(p.to_json()) == p);
    CHECK(Partition().to_json() == "[]");
    CHECK_THROWS_AS(Partition::parse_json("[[1,2],[3,1]]"), wilf::InvalidPartition);
    CHECK_THROWS_AS(Partition::parse_json("[[1,0]]"), wilf::InvalidPartition);
    CHECK_THROWS_AS(Partition::parse_json("[[1]]"), wilf::InvalidPartition);
    CHECK_THROWS_AS(Partition::parse_json("{"), wilf::InvalidPartition);
}

TEST_CASE("merge_disjoint") {
    CHECK(wilf::merge_disjoint(P("13^12+12^13"), P("4^4+2^2")) == P("13^12+12^13+4^4+2^2"));
    CHECK_THROWS_AS(wilf::merge_disjoint(P("4^1"), P("4^4")), wilf::InvalidPartition);
}

TEST_CASE("property: involution on every Wilf partition up to weight 30") {
    for (std::uint64_t n = 0; n <= 30; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            if (!oracle::is_wilf(parts)) continue;
            std::vector<Term> terms;
            for (const auto& [part, mult] : oracle::multiplicities(parts)) terms.push_back({part, mult});
            const Partition p = Partition::canonicalize(terms);
            REQUIRE(p.is_wilf());
            const Partition image = p.involute();
            CHECK(image.involute() == p);
            CHECK(image.weight() == p.weight());
            CHECK(image.is_wilf());
            CHECK(p.is_fixed_point() == oracle::is_fixed_point(parts));
            if (p.is_fixed_point()) {
                for (const Term& t : p.terms()) {
                    const auto& ts = p.terms();
                    CHECK(std::find(ts.begin(), ts.end(), Term{t.multiplicity, t.part}) != ts.end());
                }
            }
        }
    }
}

TEST_CASE("property: parse/serialize round trip on all partitions up to 25") {
    for (std::uint64_t n = 0; n <= 25; ++n) {
        wilf::for_each_partition(n, [](const Partition& p) {
            const std::string text = p.to_string();
            CHECK(Partition::parse(text).to_string() == text);
            CHECK(Partition::parse_json(p.to_json()) == p);
        });
    }
}
