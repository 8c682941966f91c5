#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <topoidx/factored.hpp>

#include "test_support.hpp"

using namespace topoidx;
using Catch::Matchers::WithinAbs;

namespace {
FactoredNumber fn(FactoredNumber::FactorMap factors) { return FactoredNumber(std::move(factors)); }
} // namespace

TEST_CASE("factor_small produces canonical factorizations") {
    CHECK(factor_small(6) == fn({{2, 1}, {3, 1}}));
    CHECK(factor_small(1) == FactoredNumber::one());
    CHECK(factor_small(36) == fn({{2, 2}, {3, 2}}));
    CHECK(factor_small(2) == fn({{2, 1}}));
    CHECK(factor_small(999983) == fn({{999983, 1}})); // prime
    CHECK(factor_small(720) == fn({{2, 4}, {3, 2}, {5, 1}}));
    CHECK_THROWS_AS(factor_small(0), InvalidInputError);
}

TEST_CASE("constructor canonicalizes and validates") {
    CHECK(fn({{2, 0}, {3, 2}}) == fn({{3, 2}}));
    CHECK(fn({}) == FactoredNumber::one());
    CHECK_THROWS_AS(fn({{4, 2}}), InvalidInputError);
    CHECK_THROWS_AS(fn({{1, 2}}), InvalidInputError);
}

TEST_CASE("multiply merges exponents") {
    CHECK(fn({{2, 1}}) * fn({{3, 1}}) == fn({{2, 1}, {3, 1}}));
    CHECK(fn({{2, 3}}) * fn({{2, -3}}) == FactoredNumber::one());
    // 4^6 * 6^6 expands to 2^18 * 3^6
    const FactoredNumber lhs = pow(factor_small(4), 6) * pow(factor_small(6), 6);
    CHECK(lhs == fn({{2, 18}, {3, 6}}));
}

TEST_CASE("pow scales exponents") {
    CHECK(pow(fn({{2, 1}, {3, 1}}), 0) == FactoredNumber::one());
    CHECK(pow(fn({{3, 2}}), 9) == fn({{3, 18}}));
    CHECK(pow(fn({{2, 2}}), 12) == fn({{2, 24}})); // (2^2)^(6n) at n=2
    CHECK(pow(fn({{2, 1}}), -3) == fn({{2, -3}}));
}

TEST_CASE("equals is canonical equality") {
    const FactoredNumber a = pow(factor_small(4), 6) * pow(factor_small(6), 6);
    const FactoredNumber b = pow(factor_small(2), 18) * pow(factor_small(3), 6);
    CHECK(equals(a, b));
    CHECK_FALSE(equals(fn({{3, 18}}), fn({{3, 17}})));
    CHECK(equals(FactoredNumber::one(), FactoredNumber::one()));
}

TEST_CASE("to_log10 matches decimal-string references") {
    CHECK(to_log10(FactoredNumber::one()) == 0.0);
    // 3^18 = 387420489
    CHECK_THAT(to_log10(fn({{3, 18}})),
               WithinAbs(testing::log10_from_decimal("387420489"), 1e-12));
    // 2^18 * 3^6 = 191102976
    CHECK_THAT(to_log10(fn({{2, 18}, {3, 6}})),
               WithinAbs(testing::log10_from_decimal("191102976"), 1e-12));
    CHECK_THAT(to_log10(fn({{2, 18}, {3, 6}})), WithinAbs(8.2812675, 1e-6));
    CHECK(to_log10(fn({{2, -6}})) < 0.0);
}

TEST_CASE("to_decimal renders exact expansions up to the cap") {
    CHECK(to_decimal(fn({{3, 6}})).text == "729");
    const auto r = to_decimal(fn({{2, 18}, {3, 6}}));
    CHECK(r.text == "191102976");
    CHECK(r.digit_count == 9);
    CHECK(to_decimal(FactoredNumber::one()).text == "1");
    CHECK(to_decimal(FactoredNumber::one()).digit_count == 1);

    SECTION("cap exceeded yields a digit-count marker") {
        const auto capped = to_decimal(fn({{2, 18}, {3, 6}}), 2);
        CHECK_FALSE(capped.text.has_value());
        CHECK(capped.digit_count == 9);
    }
    SECTION("boundary: exact powers of ten") {
        const FactoredNumber thousand = factor_small(1000);
        CHECK(to_decimal(thousand).text == "1000");
        CHECK(to_decimal(thousand).digit_count == 4);
        CHECK(to_decimal(thousand, 4).text == "1000");
        CHECK_FALSE(to_decimal(thousand, 3).text.has_value());
    }
    SECTION("negative exponents are rejected") {
        CHECK_THROWS_AS(to_decimal(fn({{2, -1}})), NegativeExponentError);
    }
}

TEST_CASE("json rendering follows the documented schema") {
    const FactoredNumber x = fn({{2, 18}, {3, 6}});
    const auto j = to_json(x);
    CHECK(j["factors"] == nlohmann::ordered_json({{"2", 18}, {"3", 6}}));
    CHECK(j["digits"] == 9);
    CHECK(j["decimal"] == "191102976");
    CHECK_THAT(j["log10"].get<double>(), WithinAbs(testing::log10_from_decimal("191102976"), 1e-12));

    SECTION("decimal omitted beyond the cap") {
        const auto capped = to_json(x, 2);
        CHECK(capped["digits"] == 9);
        CHECK_FALSE(capped.contains("decimal"));
    }
    SECTION("digits and decimal omitted for negative exponents") {
        const auto neg = to_json(fn({{2, -3}}));
        CHECK_FALSE(neg.contains("digits"));
        CHECK_FALSE(neg.contains("decimal"));
        CHECK(neg["factors"] == nlohmann::ordered_json({{"2", -3}}));
    }
}

TEST_CASE("to_string renders factor products") {
    CHECK(to_string(FactoredNumber::one()) == "1");
    CHECK(to_string(fn({{2, 18}, {3, 6}})) == "2^18 * 3^6");
    CHECK(to_string(fn({{5, -2}})) == "5^-2");
}

TEST_CASE("decimal round trip over a small range") {
    for (std::uint64_t k = 1; k <= 20'000; ++k) {
        const auto r = to_decimal(factor_small(k));
        REQUIRE(r.text == std::to_string(k));
    }
}

TEST_CASE("algebraic laws on random factored values") {
    std::mt19937_64 rng(20250809);
    for (int i = 0; i < 300; ++i) {
        const FactoredNumber x = testing::random_factored(rng);
        const FactoredNumber y = testing::random_factored(rng);
        const FactoredNumber z = testing::random_factored(rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        std::uniform_int_distribution<int> exp_dist(-50, 50);
        const BigInt a = exp_dist(rng);
        const BigInt b = exp_dist(rng);
        CHECK(pow(x, a + b) == pow(x, a) * pow(x, b));
        CHECK(to_log10(x * y) == Catch::Approx(to_log10(x) + to_log10(y)).margin(1e-9));
    }
}

TEST_CASE("canonical form is unique across expression routes") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::uint64_t> k_dist(1, 1'000'000);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t a = k_dist(rng);
        const std::uint64_t b = k_dist(rng);
        REQUIRE(factor_small(a) * factor_small(b) == factor_small(a * b));
    }
}

TEST_CASE("log10 stays within 1e-9 of exact for large exponents") {
    // 2^1000000: exact decimal recovered from the big integer itself.
    const BigInt big_pow2 = BigInt(1) << 1'000'000;
    CHECK_THAT(to_log10(fn({{2, 1'000'000}})),
               WithinAbs(testing::log10_from_bigint(big_pow2), 1e-9));

    const BigInt big_pow3 = boost::multiprecision::pow(BigInt(3), 1'000'000);
    CHECK_THAT(to_log10(fn({{3, 1'000'000}})),
               WithinAbs(testing::log10_from_bigint(big_pow3), 1e-9));

    BigInt mixed = boost::multiprecision::pow(BigInt(2), 12'345);
    mixed *= boost::multiprecision::pow(BigInt(3), 9'876);
    mixed *= boost::multiprecision::pow(BigInt(7), 4'321);
    CHECK_THAT(to_log10(fn({{2, 12'345}, {3, 9'876}, {7, 4'321}})),
               WithinAbs(testing::log10_from_bigint(mixed), 1e-9));
}
