#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace wheel6 {

enum class MaskKind : uint8_t { L = 0, R = 1, T = 2 };

// Half-open index range [lo, lo + len), lo >= 1.
struct IndexWindow {
  uint64_t lo = 1;
  uint64_t len = 0;

  uint64_t end() const { return lo + len; }  // one past the last index
  bool contains(uint64_t index) const { return index >= lo && index < end(); }
  bool covers(uint64_t first, uint64_t last) const {  // inclusive range
    return first >= lo && last < end() && first <= last;
  }
  friend bool operator==(const IndexWindow&, const IndexWindow&) = default;
};

// Bit-packed survivor mask over an index window. Bit j of word w corresponds
// to index lo + 64*w + j; a set bit means the element at that index survived
// sieving: 6i-1 prime (L), 6i+1 prime (R), both prime (T). Cleared elements
// are represented only by zero bits, never materialized as values.
class IndexedMask {
 public:
  IndexedMask(IndexWindow window, MaskKind kind);  // all bits set

  const IndexWindow& window() const { return window_; }
  MaskKind kind() const { return kind_; }

  bool test(uint64_t index) const;
  void set(uint64_t index);
  void clear(uint64_t index);

  // Number of surviving indices, total / up to `index` / in [first, last].
  uint64_t count() const;
  uint64_t count_through(uint64_t index) const;
  uint64_t count_range(uint64_t first, uint64_t last) const;

  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> words() { return words_; }

  friend bool operator==(const IndexedMask&, const IndexedMask&) = default;

 private:
  IndexWindow window_;
  MaskKind kind_;
  std::vector<uint64_t> words_;  // trailing bits past len are kept zero
};

// Bitwise AND of an L-mask and an R-mask over identical windows.
IndexedMask twin_mask(const IndexedMask& l, const IndexedMask& r);

// W6SV persistence: magic "W6SV", format version (u16 LE), kind (u8),
// lo (u64 LE), len (u64 LE), then ceil(len/64) little-endian 64-bit words,
// bit j of word w = index lo + 64*w + j.
inline constexpr uint16_t kMaskFormatVersion = 1;
void save_mask(const IndexedMask& mask, const std::filesystem::path& path);
IndexedMask load_mask(const std::filesystem::path& path);

}  // namespace wheel6
