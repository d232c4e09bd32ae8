#pragma once

#include <cstdint>
#include <vector>

#include "wheel6/mask.hpp"

namespace wheel6 {

// All primes 5 <= p <= limit, ascending, produced by recursive application
// of the wheel sieve itself (no external prime source).
std::vector<uint64_t> primes_in_wheel(uint64_t limit);

// Survivor mask over an index window. For each base prime p with
// p^2 <= 6*(lo+len)+1 the two arithmetic progressions of composite indices
// are cleared; elements are never trial-divided. Disjoint windows may be
// sieved concurrently; the result is independent of the thread count.
IndexedMask sieve_window(IndexWindow window, MaskKind kind, unsigned threads = 1);

// The three masks over [1, limit], built together.
struct SieveSet {
  IndexedMask l;
  IndexedMask r;
  IndexedMask t;

  uint64_t limit() const { return l.window().len; }
  static SieveSet build(uint64_t limit, unsigned threads = 1);
};

}  // namespace wheel6
