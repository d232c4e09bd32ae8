#include "wheel6/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace wheel6 {

namespace {

uint64_t isqrt(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Composite-index progression of a base prime inside one class: all indices
// i >= first with i = residue (mod p) hold elements divisible by p.
struct Progression {
  uint64_t p;
  uint64_t residue;
  uint64_t first;
};

Progression progression_for(uint64_t p, MaskKind kind) {
  if (p % 6 == 5) {
    uint64_t j = (p + 1) / 6;  // p = a_j
    if (kind == MaskKind::L) return {p, j % p, j + p};  // i = +j + k*a_j, k >= 1
    return {p, (p - j) % p, p - j};                     // i = -j + j'*a_j, j' >= 1
  }
  uint64_t k = (p - 1) / 6;  // p = b_k
  if (kind == MaskKind::L) return {p, (p - k) % p, p - k};  // i = -k + j*b_k
  return {p, k % p, p + k};                                 // i = +k + k'*b_k
}

// Clears the progression's members within [lo, hi) of a mask whose bit 0 is
// index mask_lo.
void clear_progression(std::span<uint64_t> words, uint64_t mask_lo,
                       const Progression& pr, uint64_t lo, uint64_t hi) {
  uint64_t base = std::max(pr.first, lo);
  if (base >= hi) return;
  uint64_t i = base + (pr.residue + pr.p - base % pr.p) % pr.p;
  for (; i < hi; i += pr.p) {
    uint64_t bit = i - mask_lo;
    words[bit >> 6] &= ~(uint64_t{1} << (bit & 63));
  }
}

void sieve_span(IndexedMask& mask, std::span<const Progression> progressions,
                uint64_t lo, uint64_t hi) {
  for (const auto& pr : progressions)
    clear_progression(mask.words(), mask.window().lo, pr, lo, hi);
}

}  // namespace

std::vector<uint64_t> primes_in_wheel(uint64_t limit) {
  std::vector<uint64_t> primes;
  if (limit < 5) return primes;
  uint64_t m = (limit + 1) / 6;  // a_i <= limit  <=>  i <= (limit+1)/6
  IndexedMask l = sieve_window({1, m}, MaskKind::L);
  IndexedMask r = sieve_window({1, m}, MaskKind::R);
  for (uint64_t i = 1; i <= m; ++i) {
    if (l.test(i)) primes.push_back(6 * i - 1);
    if (r.test(i) && 6 * i + 1 <= limit) primes.push_back(6 * i + 1);
  }
  return primes;
}

IndexedMask sieve_window(IndexWindow window, MaskKind kind, unsigned threads) {
  if (kind == MaskKind::T)
    throw std::invalid_argument("T masks come from twin_mask, not sieving");
  IndexedMask mask(window, kind);
  if (window.len == 0) return mask;

  uint64_t hi = window.end();
  uint64_t top_value = 6 * (hi - 1) + 1;
  std::vector<uint64_t> base = primes_in_wheel(isqrt(top_value));

  std::vector<Progression> progressions;
  progressions.reserve(base.size());
  for (uint64_t p : base) progressions.push_back(progression_for(p, kind));

  constexpr uint64_t kMinChunk = 1 << 16;
  if (threads <= 1 || window.len < 2 * kMinChunk) {
    sieve_span(mask, progressions, window.lo, hi);
    return mask;
  }

  // Word-aligned chunks; each task touches a disjoint word range, so the
  // result does not depend on scheduling.
  uint64_t n_chunks = std::min<uint64_t>(threads, window.len / kMinChunk);
  uint64_t chunk_words = ((window.len + 63) / 64 + n_chunks - 1) / n_chunks;
  std::vector<std::future<void>> tasks;
  for (uint64_t c = 0; c < n_chunks; ++c) {
    uint64_t lo = window.lo + c * chunk_words * 64;
    uint64_t end = std::min(hi, lo + chunk_words * 64);
    if (lo >= end) break;
    tasks.push_back(std::async(std::launch::async, [&mask, &progressions, lo, end] {
      sieve_span(mask, progressions, lo, end);
    }));
  }
  for (auto& t : tasks) t.get();
  return mask;
}

SieveSet SieveSet::build(uint64_t limit, unsigned threads) {
  IndexedMask l = sieve_window({1, limit}, MaskKind::L, threads);
  IndexedMask r = sieve_window({1, limit}, MaskKind::R, threads);
  IndexedMask t = twin_mask(l, r);
  return {std::move(l), std::move(r), std::move(t)};
}

}  // namespace wheel6
