#include "wheel6/counting.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "wheel6/segment.hpp"

namespace wheel6 {

EvenClass EvenClass::of(uint64_t g) {
  if (g < 2 || g % 2 != 0) throw std::invalid_argument("even g >= 2 required");
  switch (g % 6) {
    case 4:
      return {g, EvenClassKind::G1, (g + 2) / 6};
    case 0:
      return {g, EvenClassKind::G2, g / 6};
    default:
      return {g, EvenClassKind::G3, (g - 2) / 6};
  }
}

const char* to_string(EvenClassKind cls) {
  switch (cls) {
    case EvenClassKind::G1: return "g1";
    case EvenClassKind::G2: return "g2";
    default: return "g3";
  }
}

std::pair<uint64_t, uint64_t> prime_class_counts(const SieveSet& s, uint64_t m) {
  if (m < 1 || m > s.limit()) throw std::out_of_range("m outside sieved range");
  return {s.l.count_through(m), s.r.count_through(m)};
}

uint64_t pi_twin(const SieveSet& s, uint64_t n) {
  if (n == 0 || n % 6 != 0) throw std::invalid_argument("pi_twin requires n = 6m");
  uint64_t m = n / 6;
  if (m > s.limit()) throw std::out_of_range("n outside sieved range");
  return s.t.count_through(m);
}

GapCount pi_gap(const SieveSet& s, uint64_t g, uint64_t n) {
  if (n == 0 || n % 6 != 0) throw std::invalid_argument("pi_gap requires n = 6m");
  EvenClass ec = EvenClass::of(g);
  uint64_t m = n / 6;
  uint64_t shift = ec.m;
  if (m + shift > s.limit()) throw std::out_of_range("mask does not cover m + m'");

  GapCount out;
  switch (ec.cls) {
    case EvenClassKind::G1: {
      // g = a_{i+m'} - b_i
      out.construction =
          combine(make_segment(s.l, m, Direction::Direct, shift),
                  make_segment(s.r, m, Direction::Direct, 0)).count_nonzero();
      uint64_t over = s.l.test(m + shift) && s.r.test(m) ? 1 : 0;
      out.corrected = out.construction - over;
      return out;
    }
    case EvenClassKind::G2: {
      // g = (a_{i+m'} - a_i) and (b_{i+m'} - b_i); the two pair sets are
      // disjoint by residue class, so the counts add.
      out.construction =
          combine(make_segment(s.l, m, Direction::Direct, shift),
                  make_segment(s.l, m, Direction::Direct, 0)).count_nonzero() +
          combine(make_segment(s.r, m, Direction::Direct, shift),
                  make_segment(s.r, m, Direction::Direct, 0)).count_nonzero();
      uint64_t over = s.r.test(m + shift) && s.r.test(m) ? 1 : 0;
      out.corrected = out.construction - over;
      return out;
    }
    default: {
      // g = b_{i+m'} - a_i; exact, the smaller prime a_m stays below n.
      out.construction =
          combine(make_segment(s.r, m, Direction::Direct, shift),
                  make_segment(s.l, m, Direction::Direct, 0)).count_nonzero();
      out.corrected = out.construction;
      return out;
    }
  }
}

SumCount pi_sum(const SieveSet& s, uint64_t g) {
  if (g % 2 != 0 || g < 10) throw std::invalid_argument("pi_sum requires even g >= 10");
  EvenClass ec = EvenClass::of(g);
  uint64_t m = ec.m;
  if (m - 1 > s.limit()) throw std::out_of_range("mask does not cover m - 1");

  SumCount out;
  switch (ec.cls) {
    case EvenClassKind::G1: {
      // g = a_i + a_{m-i}; same class, so each unordered pair appears twice
      // and the diagonal i = m - i once.
      out.construction.twice =
          combine(make_segment(s.l, m - 1, Direction::Direct, 0),
                  make_segment(s.l, m - 1, Direction::Reverse, 0)).count_nonzero();
      uint64_t diag = m % 2 == 0 && s.l.test(m / 2) ? 1 : 0;  // g = 2p
      out.corrected.twice = out.construction.twice + diag;
      return out;
    }
    case EvenClassKind::G2: {
      // g = a_i + b_{m-i}; mixed classes, every representation is distinct.
      uint64_t c = combine(make_segment(s.l, m - 1, Direction::Direct, 0),
                           make_segment(s.r, m - 1, Direction::Reverse, 0)).count_nonzero();
      out.construction.twice = 2 * c;
      out.corrected.twice = out.construction.twice;
      return out;
    }
    default: {
      // g = b_i + b_{m-i}
      out.construction.twice =
          combine(make_segment(s.r, m - 1, Direction::Direct, 0),
                  make_segment(s.r, m - 1, Direction::Reverse, 0)).count_nonzero();
      uint64_t diag = m % 2 == 0 && s.r.test(m / 2) ? 1 : 0;
      out.corrected.twice = out.construction.twice + diag;
      return out;
    }
  }
}

uint64_t pi_quad(const SieveSet& s, uint64_t shift, uint64_t m) {
  if (shift == 0) throw std::invalid_argument("pi_quad requires shift >= 1");
  if (m + shift > s.limit()) throw std::out_of_range("mask does not cover m + shift");
  if (m == 0) return 0;
  return combine(make_segment(s.t, m, Direction::Direct, shift),
                 make_segment(s.t, m, Direction::Direct, 0)).count_nonzero();
}

uint64_t twin_sum_reps(const SieveSet& s, uint64_t m) {
  if (m < 1) throw std::invalid_argument("twin_sum_reps requires m >= 1");
  if (m > s.limit() + 1) throw std::out_of_range("mask does not cover m - 1");
  uint64_t reps = 0;
  for (uint64_t i = 1; 2 * i <= m; ++i)
    if (s.t.test(i) && s.t.test(m - i)) ++reps;
  return reps;
}

namespace {

// Indices of twin pairs up to m_max/2, ascending; lets the exception scan
// probe the few candidate pairs per m instead of walking the whole window.
std::vector<uint64_t> twin_indices(const IndexedMask& t, uint64_t m_max) {
  std::vector<uint64_t> out;
  for (uint64_t i = 1; 2 * i <= m_max; ++i)
    if (t.test(i)) out.push_back(i);
  return out;
}

bool has_twin_pair(const IndexedMask& t, std::span<const uint64_t> twins, uint64_t m) {
  for (uint64_t i : twins) {
    if (2 * i > m) break;
    if (t.test(m - i)) return true;
  }
  return false;
}

}  // namespace

std::vector<uint64_t> scan_exceptions(const SieveSet& s, uint64_t m_max,
                                      unsigned threads) {
  if (m_max < 1) throw std::invalid_argument("m_max >= 1 required");
  if (m_max > s.limit()) throw std::out_of_range("m_max outside sieved range");
  std::vector<uint64_t> twins = twin_indices(s.t, m_max);

  auto scan_range = [&](uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> local;
    for (uint64_t m = lo; m < hi; ++m)
      if (!has_twin_pair(s.t, twins, m)) local.push_back(m);
    return local;
  };

  if (threads <= 1 || m_max < 4096) return scan_range(1, m_max + 1);

  // Static partition; chunk results are concatenated in order, so the output
  // is identical for every thread count.
  uint64_t chunk = (m_max + threads - 1) / threads;
  std::vector<std::future<std::vector<uint64_t>>> tasks;
  for (uint64_t lo = 1; lo <= m_max; lo += chunk) {
    uint64_t hi = std::min(m_max + 1, lo + chunk);
    tasks.push_back(std::async(std::launch::async, scan_range, lo, hi));
  }
  std::vector<uint64_t> out;
  for (auto& t : tasks) {
    auto part = t.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace wheel6
