#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wheel6/sieve.hpp"

namespace wheel6 {

// Even numbers split into three classes: g1 = 6m-2, g2 = 6m, g3 = 6m+2.
enum class EvenClassKind : uint8_t { G1, G2, G3 };

struct EvenClass {
  uint64_t g = 0;
  EvenClassKind cls = EvenClassKind::G2;
  uint64_t m = 0;

  // Unique decomposition for every even g >= 4; g = 2 maps to (G3, m = 0),
  // under which the gap construction degenerates to the twin construction.
  static EvenClass of(uint64_t g);
};

const char* to_string(EvenClassKind cls);

// pi_a(6m), pi_b(6m): surviving counts of L and R through index m.
std::pair<uint64_t, uint64_t> prime_class_counts(const SieveSet& s, uint64_t m);

// Number of twin pairs (6i-1, 6i+1), i <= m, for n = 6m.
uint64_t pi_twin(const SieveSet& s, uint64_t n);

// Fixed-gap pair count. `construction` is the raw segment-combination count;
// it can exceed the true pair count by 1 for classes G1/G2 (the window's last
// b-element lies just above n). `corrected` removes that overcount.
struct GapCount {
  uint64_t construction = 0;
  uint64_t corrected = 0;
};
GapCount pi_gap(const SieveSet& s, uint64_t g, uint64_t n);

// Exact multiples of 0.5, stored as twice the value.
struct HalfCount {
  uint64_t twice = 0;
  double value() const { return 0.5 * static_cast<double>(twice); }
  friend bool operator==(const HalfCount&, const HalfCount&) = default;
};

// Fixed-sum representation count (unordered p <= q, p + q = g, p, q >= 5).
// The construction halves same-class sums; it is 0.5 short of the true count
// exactly when g = 2p with p prime, which `corrected` adds back.
struct SumCount {
  HalfCount construction;
  HalfCount corrected;
};
SumCount pi_sum(const SieveSet& s, uint64_t g);

// Number of i <= m with twin pairs at both centers 6i and 6(i+shift);
// shift = 1 counts prime quadruplets.
uint64_t pi_quad(const SieveSet& s, uint64_t shift, uint64_t m);

// Number of unordered index pairs {i, m-i}, 1 <= i <= m-i, with twin pairs
// at both centers. One pair = one representation of the whole even triple
// (6m-2, 6m, 6m+2) as sums of two twin-pair members.
uint64_t twin_sum_reps(const SieveSet& s, uint64_t m);

// All m <= m_max with twin_sum_reps(m) == 0, ascending.
std::vector<uint64_t> scan_exceptions(const SieveSet& s, uint64_t m_max,
                                      unsigned threads = 1);

}  // namespace wheel6
