#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "partid/partset.hpp"

using namespace partid;
using Parts = std::vector<std::size_t>;

TEST_CASE("builtin enumeration") {
    CHECK(PartSet::primes().enumerate(10) == Parts{2, 3, 5, 7});
    CHECK(PartSet::squares().enumerate(10) == Parts{1, 4, 9});
    CHECK(PartSet::odds().enumerate(1) == Parts{1});
    CHECK(PartSet::naturals().enumerate(4) == Parts{1, 2, 3, 4});
    CHECK(PartSet::primes().enumerate(1).empty());
    CHECK(PartSet::squares().enumerate(0).empty());
}

TEST_CASE("builtin sets match their defining predicates") {
    auto is_prime = [](std::size_t v) {
        if (v < 2) return false;
        for (std::size_t d = 2; d < v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    auto is_square = [](std::size_t v) {
        for (std::size_t r = 1; r <= v; ++r)
            if (r * r == v) return true;
        return false;
    };
    const std::size_t bound = 500;
    for (const auto& set : builtin_partsets()) {
        const auto parts = set.enumerate(bound);
        Parts expected;
        for (std::size_t v = 1; v <= bound; ++v) {
            bool member = false;
            switch (set.kind()) {
            case PartSet::Kind::naturals: member = true; break;
            case PartSet::Kind::primes: member = is_prime(v); break;
            case PartSet::Kind::squares: member = is_square(v); break;
            case PartSet::Kind::odds: member = v % 2 == 1; break;
            default: break;
            }
            if (member) expected.push_back(v);
            CHECK(set.contains(v) == member);
        }
        CHECK(parts == expected);
        CHECK(set.enumerate(bound) == parts);
    }
}

TEST_CASE("enumeration at large bounds is strictly increasing and bounded") {
    const std::size_t bound = 1'000'000;
    for (const auto& set : builtin_partsets()) {
        const auto parts = set.enumerate(bound);
        REQUIRE(!parts.empty());
        CHECK(parts.front() >= 1);
        CHECK(parts.back() <= bound);
        CHECK(std::adjacent_find(parts.begin(), parts.end(), std::greater_equal<>()) == parts.end());
    }
    CHECK(PartSet::primes().enumerate(bound).size() == 78498);
    CHECK(PartSet::squares().enumerate(bound).size() == 1000);
}

TEST_CASE("parse builtins and lists") {
    CHECK(parse_partset("primes").kind() == PartSet::Kind::primes);
    CHECK(parse_partset("naturals").label() == "naturals");
    const PartSet list = parse_partset("list:2,3,5,7");
    CHECK(list.kind() == PartSet::Kind::explicit_list);
    CHECK(list.is_finite());
    CHECK(list.enumerate(100) == Parts{2, 3, 5, 7});
    CHECK(list.enumerate(4) == Parts{2, 3});
    CHECK(parse_partset("list:").enumerate(10).empty());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_partset("list:3,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partset("list:5,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partset("list:0,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partset("list:1,-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partset("list:1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partset("evens"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partset("file:/nonexistent/parts.txt"), std::invalid_argument);
}

TEST_CASE("file-backed sets") {
    const auto path = std::filesystem::temp_directory_path() / "partid_parts_test.txt";
    {
        std::ofstream out(path);
        out << "1\n4\n\n9\n16\n";
    }
    const PartSet set = parse_partset("file:" + path.string());
    CHECK(set.kind() == PartSet::Kind::file_backed);
    CHECK(set.enumerate(10) == Parts{1, 4, 9});
    CHECK(render(set) == "file:" + path.string());
    {
        std::ofstream out(path);
        out << "4\n1\n";
    }
    CHECK_THROWS_AS(parse_partset("file:" + path.string()), std::invalid_argument);
    std::filesystem::remove(path);
}

TEST_CASE("explicit lists round-trip through render") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        Parts elements;
        for (std::size_t v = 1; v <= 60; ++v) {
            if (rng() % 3 == 0) elements.push_back(v);
        }
        const PartSet set = PartSet::from_list(elements);
        const PartSet again = parse_partset(render(set));
        CHECK(again.label() == set.label());
        CHECK(again.enumerate(60) == elements);
    }
}
