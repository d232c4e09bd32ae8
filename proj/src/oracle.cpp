#include "wheel6/oracle.hpp"

#include <stdexcept>

namespace wheel6::oracle {

namespace {

constexpr uint64_t kEnumerationLimit = 10'000'000;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void check_range(uint64_t n) {
  if (n > kEnumerationLimit)
    throw std::out_of_range("oracle enumerations are limited to 1e7");
}

bool twin_center(uint64_t i) { return is_prime(6 * i - 1) && is_prime(6 * i + 1); }

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit inputs with this base set.
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull,
                     1795265022ull}) {
    if (a % n == 0) continue;
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool in_wheel_primes(uint64_t n) { return n >= 5 && is_prime(n); }

uint64_t gap_count(uint64_t g, uint64_t n) {
  check_range(n + g);
  uint64_t count = 0;
  for (uint64_t p = 5; p <= n; p += (p % 6 == 5) ? 2 : 4)
    if (is_prime(p) && is_prime(p + g)) ++count;
  return count;
}

uint64_t sum_count(uint64_t g) {
  check_range(g);
  uint64_t count = 0;
  for (uint64_t p = 5; 2 * p <= g; p += (p % 6 == 5) ? 2 : 4)
    if (is_prime(p) && g - p >= 5 && is_prime(g - p)) ++count;
  return count;
}

uint64_t twin_count(uint64_t n) {
  if (n % 6 != 0) throw std::invalid_argument("twin_count requires n = 6m");
  check_range(n);
  uint64_t count = 0;
  for (uint64_t i = 1; i <= n / 6; ++i)
    if (twin_center(i)) ++count;
  return count;
}

uint64_t quad_count(uint64_t shift, uint64_t m) {
  check_range(6 * (m + shift));
  uint64_t count = 0;
  for (uint64_t i = 1; i <= m; ++i)
    if (twin_center(i) && twin_center(i + shift)) ++count;
  return count;
}

uint64_t twin_sum_count(uint64_t m) {
  check_range(6 * m);
  uint64_t count = 0;
  for (uint64_t i = 1; 2 * i <= m; ++i)
    if (twin_center(i) && twin_center(m - i)) ++count;
  return count;
}

std::pair<uint64_t, uint64_t> class_counts(uint64_t m) {
  check_range(6 * m + 1);
  uint64_t a = 0, b = 0;
  for (uint64_t i = 1; i <= m; ++i) {
    if (is_prime(6 * i - 1)) ++a;
    if (is_prime(6 * i + 1)) ++b;
  }
  return {a, b};
}

double oracle_count(const OracleTask& task) {
  using Kind = OracleTask::Kind;
  switch (task.kind) {
    case Kind::GapCount: return static_cast<double>(gap_count(task.x, task.y));
    case Kind::SumCount: return static_cast<double>(sum_count(task.x));
    case Kind::TwinCount: return static_cast<double>(twin_count(task.x));
    case Kind::QuadCount: return static_cast<double>(quad_count(task.x, task.y));
    case Kind::TwinSumCount: return static_cast<double>(twin_sum_count(task.x));
    case Kind::ClassCounts: {
      auto [a, b] = class_counts(task.x);
      return static_cast<double>(a + b);
    }
  }
  throw std::invalid_argument("unknown oracle task");
}

}  // namespace wheel6::oracle
