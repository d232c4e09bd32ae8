#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wheel6/oracle.hpp"
#include "wheel6/sieve.hpp"

using namespace wheel6;

TEST_CASE("primality battery") {
  CHECK(oracle::is_prime(2));
  CHECK(oracle::is_prime(3));
  CHECK(!oracle::is_prime(0));
  CHECK(!oracle::is_prime(1));
  CHECK(!oracle::is_prime(91));  // 7 * 13
  CHECK(oracle::is_prime(97));
  CHECK(oracle::is_prime(999983));
  CHECK(!oracle::is_prime(999997));  // 757 * 1321
  CHECK(oracle::is_prime(1'000'003));
  CHECK(oracle::is_prime((uint64_t{1} << 61) - 1));  // Mersenne
  CHECK(!oracle::is_prime((uint64_t{1} << 61) + 1));
  CHECK(!oracle::in_wheel_primes(3));
  CHECK(oracle::in_wheel_primes(5));
}

TEST_CASE("definitional counts") {
  CHECK(oracle::gap_count(28, 126) == 9);
  CHECK(oracle::sum_count(94) == 5);
  CHECK(oracle::sum_count(96) == 7);
  CHECK(oracle::sum_count(10) == 1);
  CHECK(oracle::twin_count(60) == 6);
  CHECK(oracle::twin_count(6) == 1);
  CHECK(oracle::quad_count(1, 10) == 2);
  CHECK(oracle::twin_sum_count(20) == 3);
  CHECK(oracle::twin_sum_count(16) == 0);
  CHECK(oracle::twin_sum_count(1) == 0);
  auto [a, b] = oracle::class_counts(14);
  CHECK(a == 11);
  CHECK(b == 10);
  CHECK_THROWS_AS(oracle::twin_count(61), std::invalid_argument);
  CHECK_THROWS_AS(oracle::gap_count(2, 100'000'000), std::out_of_range);
}

TEST_CASE("task dispatcher") {
  using Kind = oracle::OracleTask::Kind;
  CHECK(oracle::oracle_count({Kind::GapCount, 28, 126}) == 9.0);
  CHECK(oracle::oracle_count({Kind::SumCount, 94, 0}) == 5.0);
  CHECK(oracle::oracle_count({Kind::TwinCount, 60, 0}) == 6.0);
  CHECK(oracle::oracle_count({Kind::QuadCount, 1, 10}) == 2.0);
  CHECK(oracle::oracle_count({Kind::TwinSumCount, 20, 0}) == 3.0);
  CHECK(oracle::oracle_count({Kind::ClassCounts, 14, 0}) == 21.0);
}

TEST_CASE("oracle and sieve agree on survivor bits") {
  SieveSet s = SieveSet::build(10'000);
  for (uint64_t i = 1; i <= 10'000; ++i) {
    CHECK(s.l.test(i) == oracle::is_prime(6 * i - 1));
    CHECK(s.r.test(i) == oracle::is_prime(6 * i + 1));
    CHECK(s.t.test(i) == (oracle::is_prime(6 * i - 1) && oracle::is_prime(6 * i + 1)));
  }
}

TEST_CASE("class counts at the 1e6 anchor") {
  auto [a, b] = oracle::class_counts(166'666);
  CHECK(a == 39265);
  CHECK(b == 39231);
  CHECK(a + b + 2 == 78498);  // pi(1e6)
}

TEST_CASE("every even 6m in [12, 60000] splits into two wheel primes") {
  for (uint64_t m = 2; m <= 10'000; ++m) {
    uint64_t g = 6 * m;
    bool found = false;
    for (uint64_t p = 5; 2 * p <= g && !found; p += (p % 6 == 5) ? 2 : 4)
      found = oracle::is_prime(p) && oracle::is_prime(g - p);
    CHECK(found);
  }
}
