#include <gtest/gtest.h>

#include "expind/expind.hpp"

using namespace expind;

namespace {

// Value scaled to a common denominator 2^64, as a 128-bit integer.
unsigned __int128 at_2_64(std::uint64_t num, std::uint64_t exp) { return static_cast<unsigned __int128>(num) << (64 - exp); }

bool canonical(const Dyadic& d) {
    if (d.exponent() == 0) return true;
    auto s = d.numerator_string();
    return (s.back() - '0') % 2 == 1;
}

}  // namespace

TEST(Dyadic, CanonicalForm) {
    EXPECT_EQ(Dyadic(4, 3).str(), "1/2^1");
    EXPECT_EQ(Dyadic(0, 9).str(), "0/2^0");
    EXPECT_EQ(Dyadic(11, 5).str(), "11/2^5");
    EXPECT_EQ(Dyadic(8, 0).str(), "8/2^0");
    EXPECT_EQ(Dyadic(6, 2), Dyadic(3, 1));
    EXPECT_EQ(Dyadic::pow2(-3), Dyadic(1, 3));
    EXPECT_EQ(Dyadic::pow2(70).numerator_string(), "1180591620717411303424");
}

TEST(Dyadic, FixedSums) {
    // 23/64 + 11/16 + 11/64 = 78/64
    auto s = Dyadic(23, 6) + Dyadic(11, 4) + Dyadic(11, 6);
    EXPECT_EQ(s, Dyadic(39, 5));
    EXPECT_GT(s, dyadic_one());
    EXPECT_EQ(Dyadic(1, 1) + Dyadic(1, 1), dyadic_one());
    EXPECT_LT(Dyadic(255, 8), dyadic_one());
    EXPECT_EQ(Dyadic(3, 2).decimal(3), "0.750");
}

TEST(Dyadic, PowerCounts) {
    // 2 * 2^0 + 1 * 2^-1 + 3 * 2^-2 = 3.25
    EXPECT_EQ(Dyadic::from_power_counts({2, 1, 3}, 0), Dyadic(13, 2));
    EXPECT_EQ(Dyadic::from_power_counts({1}, 5), Dyadic::integer(32));
    EXPECT_EQ(Dyadic::from_power_counts({}, 0), Dyadic());
    std::vector<std::uint64_t> many(300, 0);
    many[299] = 1;
    EXPECT_EQ(Dyadic::from_power_counts(many, 1), Dyadic::pow2(-298));
    EXPECT_TRUE(canonical(Dyadic::from_power_counts(many, 1)));
}

TEST(Dyadic, MatchesIntegerOracle) {
    SplitMix64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        std::uint64_t n1 = rng.below(1u << 30), e1 = rng.below(60), n2 = rng.below(1u << 30), e2 = rng.below(60);
        Dyadic a(n1, e1), b(n2, e2);
        ASSERT_TRUE(canonical(a));
        auto sum = a + b;
        ASSERT_TRUE(canonical(sum));
        auto want = at_2_64(n1, e1) + at_2_64(n2, e2);
        // Convert the sum back to the 2^-64 grid through its string form.
        auto num = sum.numerator_string();
        unsigned __int128 got = 0;
        for (char c : num) got = got * 10 + static_cast<unsigned>(c - '0');
        got <<= (64 - sum.exponent());
        ASSERT_TRUE(got == want) << a << " + " << b << " = " << sum;
        ASSERT_EQ(a < b, at_2_64(n1, e1) < at_2_64(n2, e2));
    }
}

TEST(Dyadic, Associativity) {
    SplitMix64 rng(11);
    for (int i = 0; i < 500; ++i) {
        Dyadic a(rng.next(), rng.below(200)), b(rng.next(), rng.below(200)), c(rng.next(), rng.below(200));
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a.scaled(5).scaled(-5), a);
    }
}
