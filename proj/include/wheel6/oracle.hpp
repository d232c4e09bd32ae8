#pragma once

#include <cstdint>
#include <utility>

namespace wheel6::oracle {

// Brute-force reference implementations, deliberately disjoint from the
// wheel sieve: agreement between the two paths is evidence, not tautology.
// Enumerations accept parameters up to 1e7.

// Deterministic 64-bit primality (strong-pseudoprime battery).
bool is_prime(uint64_t n);

// Membership in the wheel prime set P \ {2, 3}.
bool in_wheel_primes(uint64_t n);

// #{p <= n : p >= 5, p + g prime}
uint64_t gap_count(uint64_t g, uint64_t n);

// #{(p, q) : p <= q, p + q = g, p, q >= 5 prime}
uint64_t sum_count(uint64_t g);

// #{i <= n/6 : 6i-1 and 6i+1 prime}; requires 6 | n.
uint64_t twin_count(uint64_t n);

// #{i <= m : twin pairs at centers 6i and 6(i+shift)}
uint64_t quad_count(uint64_t shift, uint64_t m);

// #{unordered {i, m-i}, 1 <= i <= m-i : twin pairs at both centers}
uint64_t twin_sum_count(uint64_t m);

// (#{i <= m : 6i-1 prime}, #{i <= m : 6i+1 prime})
std::pair<uint64_t, uint64_t> class_counts(uint64_t m);

struct OracleTask {
  enum class Kind : uint8_t { GapCount, SumCount, TwinCount, QuadCount, TwinSumCount, ClassCounts };
  Kind kind;
  uint64_t x = 0;  // g, shift, or m
  uint64_t y = 0;  // n or m where a second parameter applies
};

// Dispatcher over the task kinds; ClassCounts returns pi_a + pi_b.
double oracle_count(const OracleTask& task);

}  // namespace wheel6::oracle
