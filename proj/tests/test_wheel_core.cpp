#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "wheel6/mask.hpp"
#include "wheel6/oracle.hpp"
#include "wheel6/sieve.hpp"
#include "wheel6/wheel.hpp"

using namespace wheel6;

TEST_CASE("class values") {
  CHECK(value(WheelKind::A, 1) == 5);
  CHECK(value(WheelKind::B, 1) == 7);
  CHECK(value(WheelKind::A, 6) == 35);
  CHECK_THROWS_AS(value(WheelKind::A, 0), std::invalid_argument);
}

TEST_CASE("classify inverts value") {
  CHECK(classify(35) == std::pair{WheelKind::A, uint64_t{6}});
  CHECK(classify(37) == std::pair{WheelKind::B, uint64_t{6}});
  CHECK(!classify(36).has_value());
  CHECK_THROWS_AS(classify(4), std::invalid_argument);
  for (uint64_t i = 1; i <= 500; ++i) {
    CHECK(classify(value(WheelKind::A, i)) == std::pair{WheelKind::A, i});
    CHECK(classify(value(WheelKind::B, i)) == std::pair{WheelKind::B, i});
  }
}

TEST_CASE("first window matches the survivor listings") {
  IndexedMask l = sieve_window({1, 17}, MaskKind::L);
  std::vector<uint64_t> l_zero = {6, 11, 13, 16};
  for (uint64_t i = 1; i <= 17; ++i) {
    bool expect_zero = std::find(l_zero.begin(), l_zero.end(), i) != l_zero.end();
    CHECK(l.test(i) == !expect_zero);
  }
  IndexedMask r = sieve_window({1, 17}, MaskKind::R);
  std::vector<uint64_t> r_zero = {4, 8, 9, 14, 15};
  for (uint64_t i = 1; i <= 17; ++i) {
    bool expect_zero = std::find(r_zero.begin(), r_zero.end(), i) != r_zero.end();
    CHECK(r.test(i) == !expect_zero);
  }
  CHECK(sieve_window({1, 10}, MaskKind::L).count() == 9);
  CHECK(sieve_window({1, 10}, MaskKind::R).count() == 7);
}

TEST_CASE("twin mask") {
  IndexedMask l = sieve_window({1, 25}, MaskKind::L);
  IndexedMask r = sieve_window({1, 25}, MaskKind::R);
  IndexedMask t = twin_mask(l, r);
  std::vector<uint64_t> expected = {1, 2, 3, 5, 7, 10, 12, 17, 18, 23, 25};
  for (uint64_t i = 1; i <= 25; ++i) {
    bool in = std::find(expected.begin(), expected.end(), i) != expected.end();
    CHECK(t.test(i) == in);
  }
  CHECK(twin_mask(sieve_window({1, 10}, MaskKind::L), sieve_window({1, 10}, MaskKind::R))
            .count() == 6);

  IndexedMask zero({1, 25}, MaskKind::L);
  for (uint64_t i = 1; i <= 25; ++i) zero.clear(i);
  CHECK(twin_mask(zero, r).count() == 0);

  IndexedMask other(IndexWindow{2, 25}, MaskKind::R);
  CHECK_THROWS_AS(twin_mask(l, other), std::invalid_argument);
}

TEST_CASE("survivors agree with trial primality") {
  IndexedMask l = sieve_window({1, 10'000}, MaskKind::L);
  IndexedMask r = sieve_window({1, 10'000}, MaskKind::R);
  for (uint64_t i = 1; i <= 10'000; ++i) {
    CHECK(l.test(i) == oracle::is_prime(6 * i - 1));
    CHECK(r.test(i) == oracle::is_prime(6 * i + 1));
  }
}

TEST_CASE("segmented windows match the full sieve") {
  IndexedMask full = sieve_window({1, 5000}, MaskKind::L);
  for (uint64_t split : {2ull, 63ull, 64ull, 65ull, 1000ull, 4999ull}) {
    IndexedMask head = sieve_window({1, split - 1}, MaskKind::L);
    IndexedMask tail = sieve_window({split, 5000 - split + 1}, MaskKind::L);
    for (uint64_t i = 1; i < split; ++i) CHECK(full.test(i) == head.test(i));
    for (uint64_t i = split; i <= 5000; ++i) CHECK(full.test(i) == tail.test(i));
  }
}

TEST_CASE("threaded sieve is identical to single-threaded") {
  IndexedMask one = sieve_window({1, 400'000}, MaskKind::R, 1);
  IndexedMask eight = sieve_window({1, 400'000}, MaskKind::R, 8);
  CHECK(one == eight);
}

TEST_CASE("one cleared progression of step p per class") {
  // In a window of length w*p each base prime clears one residue class,
  // i.e. exactly w multiples of p occur among the a-elements (and among
  // the b-elements).
  for (uint64_t p : {5ull, 7ull, 13ull, 23ull}) {
    uint64_t w = 20;
    uint64_t residues_a = 0, count_a = 0, residues_b = 0, count_b = 0;
    std::vector<bool> seen_a(p, false), seen_b(p, false);
    for (uint64_t i = 1; i <= w * p; ++i) {
      if ((6 * i - 1) % p == 0) {
        ++count_a;
        if (!seen_a[i % p]) { seen_a[i % p] = true; ++residues_a; }
      }
      if ((6 * i + 1) % p == 0) {
        ++count_b;
        if (!seen_b[i % p]) { seen_b[i % p] = true; ++residues_b; }
      }
    }
    CHECK(residues_a == 1);
    CHECK(residues_b == 1);
    CHECK(count_a == w);
    CHECK(count_b == w);
  }
}

TEST_CASE("class counts tie to the full prime count") {
  // pi_a(6m) + pi_b(6m) = pi(6m+1) - 2
  IndexedMask l = sieve_window({1, 2000}, MaskKind::L);
  IndexedMask r = sieve_window({1, 2000}, MaskKind::R);
  uint64_t pi = 2;  // 2 and 3
  uint64_t next = 4;
  for (uint64_t m = 1; m <= 2000; ++m) {
    while (next <= 6 * m + 1) {
      if (oracle::is_prime(next)) ++pi;
      ++next;
    }
    CHECK(l.count_through(m) + r.count_through(m) == pi - 2);
  }
}

TEST_CASE("base prime generation is self-contained") {
  auto primes = primes_in_wheel(100);
  std::vector<uint64_t> expected = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                    47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  CHECK(primes == expected);
  CHECK(primes_in_wheel(4).empty());
  CHECK(primes_in_wheel(5) == std::vector<uint64_t>{5});
}

TEST_CASE("windows not starting at 1") {
  IndexedMask m = sieve_window({100, 130}, MaskKind::L);
  for (uint64_t i = 100; i < 230; ++i) CHECK(m.test(i) == oracle::is_prime(6 * i - 1));
  CHECK_THROWS_AS(m.test(99), std::out_of_range);
  CHECK_THROWS_AS(sieve_window({0, 5}, MaskKind::L), std::invalid_argument);
}

TEST_CASE("count helpers") {
  IndexedMask m = sieve_window({1, 200}, MaskKind::L);
  uint64_t manual = 0;
  for (uint64_t i = 1; i <= 130; ++i) manual += m.test(i);
  CHECK(m.count_through(130) == manual);
  CHECK(m.count_range(1, 200) == m.count());
  CHECK(m.count_range(50, 49) == 0);
  CHECK(m.count_through(0) == 0);
}

TEST_CASE("W6SV round trip and header layout") {
  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "wheel6_mask_test.w6sv";
  IndexedMask m = sieve_window({3, 130}, MaskKind::R);
  save_mask(m, path);
  IndexedMask back = load_mask(path);
  CHECK(back == m);

  std::ifstream is(path, std::ios::binary);
  std::string bytes((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  REQUIRE(bytes.size() == 4 + 2 + 1 + 8 + 8 + ((130 + 63) / 64) * 8);
  CHECK(bytes.substr(0, 4) == "W6SV");
  CHECK(static_cast<uint8_t>(bytes[4]) == 1);  // version lo byte
  CHECK(static_cast<uint8_t>(bytes[5]) == 0);
  CHECK(static_cast<uint8_t>(bytes[6]) == 1);  // kind R
  CHECK(static_cast<uint8_t>(bytes[7]) == 3);  // lo, little-endian
  for (int i = 8; i < 15; ++i) CHECK(bytes[i] == 0);
  CHECK(static_cast<uint8_t>(bytes[15]) == 130);
  fs::remove(path);
}

TEST_CASE("window length edge cases around word boundaries") {
  for (uint64_t len : {1ull, 63ull, 64ull, 65ull, 128ull}) {
    IndexedMask m = sieve_window({1, len}, MaskKind::L);
    uint64_t expect = 0;
    for (uint64_t i = 1; i <= len; ++i) expect += oracle::is_prime(6 * i - 1);
    CHECK(m.count() == expect);
  }
}
