#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "happy/numerals.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using happy::BigInt;
using happy::Classification;
using happy::Cycle;
using happy::Params;

TEST_CASE("params validate their ranges") {
  CHECK_NOTHROW(Params(1, 2));
  CHECK_THROWS_AS(Params(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(Params(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(Params(2, -3), std::invalid_argument);
}

TEST_CASE("digit expansion of known values") {
  CHECK(happy::to_digits(BigInt(586), 16).digits == std::vector<int>{2, 4, 10});
  CHECK(happy::to_digits(BigInt(17972223), 16).digits ==
        std::vector<int>{1, 1, 2, 3, 11, 15, 15});
  CHECK(happy::to_digits(BigInt(2005), 30).digits == std::vector<int>{2, 6, 25});
  CHECK(happy::to_digits(BigInt(0), 7).digits == std::vector<int>{0});
  CHECK(happy::to_digits(BigInt(1), 2).digits == std::vector<int>{1});

  const happy::Numeral numeral = happy::to_digits(BigInt(797), 30);
  CHECK(numeral.value == 797);
  CHECK(numeral.base == 30);
  CHECK(numeral.digits == std::vector<int>{26, 17});
}

TEST_CASE("digit expansion rejects bad input") {
  CHECK_THROWS_AS(happy::to_digits(BigInt(5), 1), std::invalid_argument);
  CHECK_THROWS_AS(happy::to_digits(BigInt(-1), 10), std::invalid_argument);
  CHECK_THROWS_AS(happy::from_digits({}, 10), std::invalid_argument);
  CHECK_THROWS_AS(happy::from_digits({1, 10}, 10), std::invalid_argument);
  CHECK_THROWS_AS(happy::from_digits({-1}, 10), std::invalid_argument);
}

TEST_CASE("digit expansion round trips") {
  // exhaustive over a dense low range for a few bases, then sparse samples
  for (const int base : {2, 10, 16, 30, 36}) {
    for (std::int64_t n = 0; n <= 200000; ++n) {
      const happy::Numeral numeral = happy::to_digits(BigInt(n), base);
      REQUIRE(happy::from_digits(numeral.digits, base) == n);
      if (n > 0) REQUIRE(numeral.digits.front() != 0);
    }
  }
  for (int base = 2; base <= 36; ++base) {
    for (std::int64_t n = 0; n <= 3000; ++n)
      REQUIRE(happy::from_digits(happy::to_digits(BigInt(n), base).digits, base) == n);
  }
  std::mt19937_64 rng(20240814);
  std::uniform_int_distribution<std::int64_t> wide(0, 999999);
  for (int base = 2; base <= 36; ++base) {
    for (int trial = 0; trial < 2000; ++trial) {
      const std::int64_t n = wide(rng);
      REQUIRE(happy::from_digits(happy::to_digits(BigInt(n), base).digits, base) == n);
    }
  }
  // and a value far beyond 64 bits
  const BigInt huge = happy::int_pow(BigInt(7), 100) + 12345;
  CHECK(happy::from_digits(happy::to_digits(huge, 23).digits, 23) == huge);
}

TEST_CASE("one step of the map on known values") {
  CHECK(happy::happy_step(BigInt(17972223), Params(2, 16)) == 586);
  CHECK(happy::happy_step(BigInt(24046), Params(2, 16)) == 586);
  CHECK(happy::happy_step(BigInt(965), Params(2, 30)) == 30);
  CHECK(happy::happy_step(BigInt(2005), Params(2, 30)) == 665);
  CHECK(happy::happy_step(BigInt(797), Params(2, 30)) == 965);
  CHECK(happy::happy_step(BigInt(1), Params(5, 12)) == 1);
  // thirty decimal digits: three copies of 1..9,0 with square sum 3 * 285
  CHECK(happy::happy_step(BigInt("123456789012345678901234567890"), Params(2, 10)) == 855);
  CHECK_THROWS_AS(happy::happy_step(BigInt(0), Params(2, 10)), std::invalid_argument);
}

TEST_CASE("one step agrees with the digit-sum oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::int64_t> wide(1, 2'000'000'000);
  for (const int e : {1, 2, 3, 5}) {
    for (const int b : {2, 3, 7, 10, 16, 30}) {
      const Params p(e, b);
      for (int trial = 0; trial < 400; ++trial) {
        const std::int64_t n = wide(rng);
        REQUIRE(happy::happy_step(BigInt(n), p) == oracle::step(n, e, b));
      }
    }
  }
}

TEST_CASE("orbit of known happy numbers") {
  const happy::OrbitReport one = happy::orbit(BigInt(1), Params(2, 10));
  CHECK(one.classification == Classification::Happy);
  CHECK(one.height == 0);
  CHECK(one.iterates == std::vector<BigInt>{1});
  CHECK_FALSE(one.cycle.has_value());

  const happy::OrbitReport seven = happy::orbit(BigInt(7), Params(2, 10));
  CHECK(seven.classification == Classification::Happy);
  CHECK(seven.height == 5);
  CHECK(seven.iterates == std::vector<BigInt>{7, 49, 97, 130, 10, 1});

  const happy::OrbitReport tall = happy::orbit(BigInt(2005), Params(2, 30));
  CHECK(tall.classification == Classification::Happy);
  CHECK(tall.height == 61);
  CHECK(tall.iterates.size() == 62);
  CHECK(tall.iterates.front() == 2005);
  CHECK(tall.iterates[1] == 665);
  CHECK(tall.iterates[60] == 30);
  CHECK(tall.iterates.back() == 1);
}

TEST_CASE("orbit of known unhappy numbers") {
  const happy::OrbitReport four = happy::orbit(BigInt(4), Params(2, 10));
  CHECK(four.classification == Classification::Unhappy);
  CHECK(four.height == 0);
  REQUIRE(four.cycle.has_value());
  CHECK(four.cycle->members ==
        std::vector<BigInt>{4, 16, 37, 58, 89, 145, 42, 20});
  CHECK(four.iterates.size() == 9);
  CHECK(four.iterates.back() == 4);

  const happy::OrbitReport nineteen = happy::orbit(BigInt(19), Params(2, 8));
  CHECK(nineteen.classification == Classification::Unhappy);
  CHECK(nineteen.height == 1);
  CHECK(nineteen.cycle->members == std::vector<BigInt>{13, 26});
  CHECK(nineteen.iterates == std::vector<BigInt>{19, 13, 26, 13});

  CHECK_THROWS_AS(happy::orbit(BigInt(0), Params(2, 10)), std::invalid_argument);
}

TEST_CASE("orbits replay, classify and measure height like the oracle") {
  for (const auto& [e, b] : std::vector<std::pair<int, int>>{{2, 10}, {2, 7}, {3, 12}, {2, 30}}) {
    const Params p(e, b);
    for (std::int64_t n = 1; n <= 3000; ++n) {
      const happy::OrbitReport report = happy::orbit(BigInt(n), p);
      // replay the chain
      for (std::size_t i = 0; i + 1 < report.iterates.size(); ++i)
        REQUIRE(happy::happy_step(report.iterates[i], p) == report.iterates[i + 1]);
      REQUIRE((report.classification == Classification::Happy) == oracle::is_happy(n, e, b));
      REQUIRE(report.height == oracle::height_of(n, e, b));
      REQUIRE(happy::height(BigInt(n), p) == report.height);
      if (report.classification == Classification::Happy) {
        REQUIRE(report.iterates.back() == 1);
        REQUIRE(std::count(report.iterates.begin(), report.iterates.end(), BigInt(1)) == 1);
        REQUIRE_FALSE(report.cycle.has_value());
      } else {
        REQUIRE(report.cycle.has_value());
        const auto& members = report.cycle->members;
        REQUIRE_FALSE(members.empty());
        // canonical rotation: smallest member first, links verified
        REQUIRE(*std::min_element(members.begin(), members.end()) == members.front());
        for (std::size_t i = 0; i < members.size(); ++i)
          REQUIRE(happy::happy_step(members[i], p) == members[(i + 1) % members.size()]);
        // the landing point is the first iterate inside the cycle
        const std::set<BigInt> in_cycle(members.begin(), members.end());
        for (std::size_t i = 0; i < report.iterates.size(); ++i) {
          if (i < report.height) REQUIRE_FALSE(in_cycle.count(report.iterates[i]));
          else REQUIRE(in_cycle.count(report.iterates[i]));
        }
      }
    }
  }
}

TEST_CASE("happiness is preserved both ways along the map") {
  for (const auto& [e, b] : std::vector<std::pair<int, int>>{{2, 3}, {2, 7}, {3, 4}}) {
    const Params p(e, b);
    const std::int64_t limit = oracle::pow_int(b, 3);
    for (std::int64_t x = 2; x < limit; ++x) {
      const bool self = happy::orbit(BigInt(x), p).classification == Classification::Happy;
      const bool next = happy::orbit(happy::happy_step(BigInt(x), p), p).classification ==
                        Classification::Happy;
      REQUIRE(self == next);
    }
  }
}

TEST_CASE("contraction threshold and census bound") {
  CHECK(happy::contraction_digit_threshold(Params(2, 10)) == 4);
  CHECK(happy::census_bound(Params(2, 10)) == 1000);
  CHECK(happy::contraction_digit_threshold(Params(2, 30)) == 4);
  CHECK(happy::census_bound(Params(2, 30)) == 27000);
  CHECK(happy::contraction_digit_threshold(Params(2, 2)) == 3);
  CHECK(happy::census_bound(Params(2, 2)) == 4);
  CHECK(happy::contraction_digit_threshold(Params(3, 12)) == 5);
  CHECK(happy::census_bound(Params(3, 12)) == 20736);
  CHECK(happy::contraction_digit_threshold(Params(2, 7)) == 4);
  CHECK(happy::census_bound(Params(2, 7)) == 343);
}

TEST_CASE("census bound is tight and absorbing") {
  for (const int e : {2, 3}) {
    for (int b = 2; b <= 12; ++b) {
      const Params p(e, b);
      const int d0 = happy::contraction_digit_threshold(p);
      const BigInt top = happy::int_pow(BigInt(b - 1), e);
      REQUIRE(d0 >= 2);
      // minimal: d0 satisfies the contraction inequality, d0 - 1 does not
      REQUIRE(happy::int_pow(BigInt(b), d0 - 1) > d0 * top);
      REQUIRE(happy::int_pow(BigInt(b), d0 - 2) <= (d0 - 1) * top);
      const std::int64_t bound = happy::census_bound(p).convert_to<std::int64_t>();
      // the map never leaves [1, bound]
      for (std::int64_t n = 1; n <= bound; ++n)
        REQUIRE(oracle::step(n, e, b) <= bound);
      // and strictly decreases above it
      for (std::int64_t n = bound + 1; n <= bound + 500; ++n)
        REQUIRE(oracle::step(n, e, b) < n);
      const std::int64_t far = oracle::pow_int(b, d0) + 12345;
      REQUIRE(oracle::step(far, e, b) < far);
    }
  }
}

TEST_CASE("cycle census for known bases") {
  const Params base10(2, 10);
  const auto decimal = happy::find_all_cycles(base10);
  REQUIRE(decimal.size() == 2);
  CHECK(decimal[0].members == std::vector<BigInt>{1});
  CHECK(decimal[1].members == std::vector<BigInt>{4, 16, 37, 58, 89, 145, 42, 20});

  const auto binary = happy::find_all_cycles(Params(2, 2));
  REQUIRE(binary.size() == 1);
  CHECK(binary[0].members == std::vector<BigInt>{1});

  const auto base7 = happy::find_all_cycles(Params(2, 7));
  const auto has = [&](const std::vector<BigInt>& members) {
    return std::any_of(base7.begin(), base7.end(),
                       [&](const Cycle& c) { return c.members == members; });
  };
  CHECK(has({1}));
  CHECK(has({10}));
  CHECK(has({25}));
  CHECK(has({32}));
  CHECK(has({2, 4, 16, 8}));

  const auto base8 = happy::find_all_cycles(Params(2, 8));
  CHECK(std::any_of(base8.begin(), base8.end(), [](const Cycle& c) {
    return c.members == std::vector<BigInt>{13, 26};
  }));

  const auto base11 = happy::find_all_cycles(Params(2, 11));
  CHECK(std::any_of(base11.begin(), base11.end(), [](const Cycle& c) {
    return c.members == std::vector<BigInt>{5, 25, 13};
  }));
  CHECK(std::any_of(base11.begin(), base11.end(), [](const Cycle& c) {
    return c.members == std::vector<BigInt>{74, 100, 82};
  }));
}

TEST_CASE("cycle census matches the brute-force oracle") {
  for (const int e : {2, 3}) {
    for (int b = 2; b <= 12; ++b) {
      const Params p(e, b);
      const auto cycles = happy::find_all_cycles(p);
      std::set<std::vector<std::int64_t>> got;
      for (const Cycle& c : cycles) {
        std::vector<std::int64_t> members;
        for (const BigInt& m : c.members) members.push_back(m.convert_to<std::int64_t>());
        got.insert(members);
      }
      REQUIRE(got.size() == cycles.size());
      const auto expected =
          oracle::cycle_census(e, b, happy::census_bound(p).convert_to<std::int64_t>());
      REQUIRE(got == expected);
      // census order: ascending by smallest member, {1} first
      REQUIRE(cycles.front().members == std::vector<BigInt>{1});
      for (std::size_t i = 1; i < cycles.size(); ++i)
        REQUIRE(cycles[i - 1].members.front() < cycles[i].members.front());
      // deterministic
      REQUIRE(happy::find_all_cycles(p) == cycles);
    }
  }
}

TEST_CASE("cycle census guards its preconditions") {
  CHECK_THROWS_AS(happy::find_all_cycles(Params(1, 10)), std::invalid_argument);
  CHECK_THROWS_AS(happy::find_all_cycles(Params(2, 30), 1000), happy::BudgetExceeded);
}
