#include <doctest.h>

#include <random>

#include "partid/identities.hpp"

using namespace partid;

TEST_CASE("rhs_forward") {
    const auto primes = count(Statistic::bounded(1), PartSet::primes(), 10);
    CHECK(rhs_forward(5, 1, primes) == 2);
    const auto squares = count(Statistic::bounded(1), PartSet::squares(), 10);
    CHECK(rhs_forward(10, 1, squares) == 4);
    for (unsigned alpha : {1u, 2u, 7u}) {
        CHECK(rhs_forward(0, alpha, count(Statistic::bounded(alpha), PartSet::odds(), 0)) == 1);
    }
    CHECK_THROWS_AS(rhs_forward(11, 1, squares), std::out_of_range);
}

TEST_CASE("expansion terms for p(5) over naturals") {
    const auto d = count(Statistic::bounded(1), PartSet::naturals(), 5);
    const auto terms = expand_terms(enumerate_solutions(5, 2), d);
    // canonical order: (1,0,1) (1,2) (3,1) (5)
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].value == 1);  // d(1) d(1)
    CHECK(terms[1].value == 1);  // d(1) d(2)
    CHECK(terms[2].value == 2);  // d(3) d(1)
    CHECK(terms[3].value == 3);  // d(5)
    CHECK(sum_of_products(enumerate_solutions(5, 2), d) == 7);
}

TEST_CASE("gamma_table") {
    const auto primes_bar = count(Statistic::signed_unrestricted(), PartSet::primes(), 10);
    const auto squares_bar = count(Statistic::signed_unrestricted(), PartSet::squares(), 10);
    const auto gp = gamma_table(1, primes_bar, 10);
    CHECK(gp.at(0) == 1);
    CHECK(gp.at(2) == 0);
    const auto gs = gamma_table(1, squares_bar, 10);
    // pbar(5) + pbar(2)pbar(1) + pbar(1)pbar(1) + pbar(3)pbar(1) with the squares values
    CHECK(gs.at(10) == 0 + (1) * (-1) + (-1) * (-1) + (-1) * (-1));
    for (std::size_t n = 1; n <= 10; n += 2) {
        CHECK(gp.at(n) == 0);
        CHECK(gs.at(n) == 0);
    }
    CHECK_THROWS_AS(gamma_table(1, count(Statistic::signed_unrestricted(), PartSet::primes(), 4), 10),
                    std::out_of_range);
}

TEST_CASE("gamma: definition, table series and generating-function product agree") {
    for (const auto& set : builtin_partsets()) {
        for (unsigned alpha = 1; alpha <= 4; ++alpha) {
            const auto bar = count(Statistic::signed_unrestricted(), set, 90);
            const auto by_rows = gamma_table(alpha, bar, 90);
            const auto by_series = gamma_table_series(alpha, bar, 90);
            CHECK(by_rows.values == by_series.values);
            const Series g = gamma_series(build_gf(Statistic::signed_unrestricted(), set, 90), alpha);
            CHECK(std::equal(by_rows.values.begin(), by_rows.values.end(), g.coeffs().begin()));
        }
    }
}

TEST_CASE("rhs_inverse") {
    const auto primes = PartSet::primes();
    const auto p = count(Statistic::unrestricted(), primes, 10);
    const auto g = gamma_table(1, count(Statistic::signed_unrestricted(), primes, 10), 10);
    CHECK(rhs_inverse(10, 1, p, g) == 2);
    CHECK(rhs_inverse(0, 1, p, g) == 1);

    const auto squares = PartSet::squares();
    const auto ps = count(Statistic::unrestricted(), squares, 10);
    const auto gs = gamma_table(1, count(Statistic::signed_unrestricted(), squares, 10), 10);
    CHECK(rhs_inverse(10, 1, ps, gs) == 1);
}

TEST_CASE("rhs_signed") {
    const auto nat_bar = count(Statistic::signed_unrestricted(), PartSet::naturals(), 10);
    CHECK(rhs_signed(IdentityId::signed_binary, 0, 1, nat_bar) == 1);
    CHECK(rhs_signed(IdentityId::signed_binary, 5, 1, nat_bar) ==
          count(Statistic::signed_bounded(1), PartSet::naturals(), 5).values[5]);

    const auto odds_bar2 = count(Statistic::signed_bounded(2), PartSet::odds(), 6);
    CHECK(rhs_signed(IdentityId::signed_general, 6, 2, odds_bar2) ==
          count(Statistic::signed_unrestricted(), PartSet::odds(), 6).values[6]);

    const auto odd_alpha = count(Statistic::signed_bounded(1), PartSet::odds(), 6);
    CHECK_THROWS_AS(rhs_signed(IdentityId::signed_general, 6, 1, odd_alpha), std::invalid_argument);
    CHECK_NOTHROW(rhs_signed(IdentityId::signed_general, 6, 1, odd_alpha, true));
    CHECK_THROWS_AS(rhs_signed(IdentityId::inverse, 6, 2, odds_bar2), std::invalid_argument);
}

TEST_CASE("verify: worked examples") {
    const auto forward = verify(IdentityId::forward_general, PartSet::primes(), 1, 10);
    CHECK(forward.all_equal);
    CHECK(forward.evaluators_agree);
    REQUIRE(forward.records.size() == 11);
    CHECK(forward.records[10].lhs == 5);
    CHECK(forward.records[10].rhs_enumerative.has_value());
    CHECK(forward.records[10].rhs_convolution.has_value());

    const auto inverse = verify(IdentityId::inverse, PartSet::squares(), 1, 10);
    CHECK(inverse.all_equal);
    CHECK(inverse.records[10].lhs == 1);

    const auto finite = verify(IdentityId::forward_general, parse_partset("list:2,3,5,7"), 3, 40);
    CHECK(finite.all_equal);
    CHECK(finite.evaluators_agree);
}

TEST_CASE("verify: forward_binary is forward_general at alpha 1") {
    const auto a = verify(IdentityId::forward_binary, PartSet::odds(), 1, 50);
    const auto b = verify(IdentityId::forward_general, PartSet::odds(), 1, 50);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].lhs == b.records[i].lhs);
        CHECK(a.records[i].rhs() == b.records[i].rhs());
    }
    CHECK_THROWS_AS(verify(IdentityId::forward_binary, PartSet::odds(), 2, 10), std::invalid_argument);
}

TEST_CASE("verify: modes") {
    VerifyOptions conv;
    conv.mode = EvalMode::convolution;
    const auto c = verify(IdentityId::inverse, PartSet::primes(), 2, 150, conv);
    CHECK(c.all_equal);
    CHECK(c.records.size() == 151);
    CHECK(!c.records[5].rhs_enumerative);

    VerifyOptions both;
    both.enumeration_cap = 20;
    const auto b = verify(IdentityId::signed_general, PartSet::naturals(), 2, 40, both);
    CHECK(b.all_equal);
    CHECK(b.records[20].rhs_enumerative.has_value());
    CHECK(!b.records[21].rhs_enumerative.has_value());

    VerifyOptions en;
    en.mode = EvalMode::enumerative;
    en.enumeration_cap = 30;
    CHECK(verify(IdentityId::signed_binary, PartSet::squares(), 1, 30, en).all_equal);
    CHECK_THROWS_AS(verify(IdentityId::signed_binary, PartSet::squares(), 1, 31, en), std::invalid_argument);
}

TEST_CASE("verify: argument errors") {
    CHECK_THROWS_AS(verify(IdentityId::forward_general, PartSet::primes(), 0, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify(IdentityId::signed_general, PartSet::primes(), 3, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify(IdentityId::signed_binary, PartSet::primes(), 2, 10), std::invalid_argument);
}

TEST_CASE("odd alpha signed_general is an exploration with counterexamples") {
    VerifyOptions explore;
    explore.allow_odd_alpha = true;
    // pbar(2) over naturals is 0 (2 vs 1+1); the base-2 side gives pbar_1(2) + pbar_1(1) = -2.
    const auto r1 = verify(IdentityId::signed_general, PartSet::naturals(), 1, 50, explore);
    CHECK(r1.exploration);
    CHECK(!r1.all_equal);
    CHECK(r1.evaluators_agree);
    REQUIRE(r1.first_mismatch() == std::optional<std::size_t>{2});
    CHECK(r1.records[2].lhs == 0);
    CHECK(r1.records[2].rhs() == -2);
    // pbar(4) = 1, pbar_3(4) + pbar_3(1) = 0 + (-1).
    const auto r3 = verify(IdentityId::signed_general, PartSet::naturals(), 3, 50, explore);
    REQUIRE(r3.first_mismatch() == std::optional<std::size_t>{4});
    CHECK(r3.records[4].lhs == 1);
    CHECK(r3.records[4].rhs() == -1);
    // Even alpha is never an exploration.
    CHECK(!verify(IdentityId::signed_general, PartSet::naturals(), 2, 10, explore).exploration);
}

TEST_CASE("series_checks hold for builtin sets") {
    for (const auto& set : builtin_partsets()) {
        for (unsigned alpha = 1; alpha <= 4; ++alpha) {
            const auto checks = series_checks(set, alpha, 96);
            CHECK(checks.size() == (alpha % 2 == 0 ? 4u : 3u));
            for (const auto& c : checks) {
                INFO(set.label(), " ", c.name);
                CHECK(c.holds);
            }
        }
    }
}

TEST_CASE("identities hold on random finite part sets") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<std::size_t> parts;
        for (std::size_t v = 1; v <= 30; ++v)
            if (rng() % 2) parts.push_back(v);
        const auto set = PartSet::from_list(parts);
        INFO(set.label());
        CHECK(verify(IdentityId::forward_general, set, 1 + trial % 4, 60).all_equal);
        CHECK(verify(IdentityId::inverse, set, 1 + trial % 4, 60).all_equal);
        CHECK(verify(IdentityId::signed_binary, set, 1, 60).all_equal);
        CHECK(verify(IdentityId::signed_general, set, 2 + 2 * (trial % 2), 60).all_equal);
    }
}

TEST_CASE("names") {
    for (auto id : {IdentityId::forward_binary, IdentityId::forward_general, IdentityId::inverse,
                    IdentityId::signed_binary, IdentityId::signed_general}) {
        CHECK(parse_identity(to_string(id)) == id);
    }
    CHECK(to_string(IdentityId::forward_general) == "forward");
    CHECK_THROWS_AS(parse_identity("backward"), std::invalid_argument);
    CHECK(parse_eval_mode("both") == EvalMode::both);
    CHECK_THROWS_AS(parse_eval_mode("fast"), std::invalid_argument);
}
