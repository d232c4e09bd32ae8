#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wheel6/mask.hpp"

namespace wheel6 {

enum class Direction : uint8_t { Direct, Reverse };

// A finite view of a mask: positions 1..m map to mask indices
//   Direct:  pos -> pos + shift
//   Reverse: pos -> (m + 1 - pos) + shift
// The shift applies in source index space first, then reversal over the
// m-window. Segments never copy bits.
class Segment {
 public:
  Segment(const IndexedMask& source, uint64_t length, Direction direction,
          uint64_t shift);

  uint64_t length() const { return length_; }
  Direction direction() const { return direction_; }
  uint64_t shift() const { return shift_; }
  const IndexedMask& source() const { return *source_; }

  uint64_t source_index(uint64_t pos) const;
  bool alive(uint64_t pos) const;    // pos in [1, length]
  uint64_t count_nonzero() const;    // direction-invariant

  // Packs alive(pos) into bit pos-1 of out (ceil(length/64) words).
  void pack(std::span<uint64_t> out) const;

 private:
  const IndexedMask* source_;
  uint64_t length_;
  Direction direction_;
  uint64_t shift_;
};

Segment make_segment(const IndexedMask& mask, uint64_t length,
                     Direction direction, uint64_t shift = 0);

// Zero-annihilating combination of two equal-length segments: position i
// survives iff both operands are nonzero there. Identical for segment sums
// and differences; only survivorship is retained.
class CombinedSegment {
 public:
  CombinedSegment(uint64_t length, std::vector<uint64_t> words);

  uint64_t length() const { return length_; }
  bool alive(uint64_t pos) const;
  uint64_t count_nonzero() const;
  std::vector<uint64_t> survivors() const;  // ascending positions

 private:
  uint64_t length_;
  std::vector<uint64_t> words_;
};

CombinedSegment combine(const Segment& s1, const Segment& s2);

uint64_t count_nonzero(const Segment& s);
uint64_t count_nonzero(const CombinedSegment& s);

}  // namespace wheel6
