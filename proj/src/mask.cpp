#include "wheel6/mask.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace wheel6 {

namespace {

uint64_t word_count(uint64_t len) { return (len + 63) / 64; }

// Bits [0, n) of the final word.
uint64_t tail_mask(uint64_t len) {
  uint64_t rem = len % 64;
  return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}

void validate_window(const IndexWindow& w) {
  if (w.lo == 0) throw std::invalid_argument("index windows start at 1");
  if (w.len > std::numeric_limits<uint64_t>::max() - w.lo)
    throw std::overflow_error("index window overflows the index type");
}

}  // namespace

IndexedMask::IndexedMask(IndexWindow window, MaskKind kind)
    : window_(window), kind_(kind), words_(word_count(window.len), ~uint64_t{0}) {
  validate_window(window_);
  if (!words_.empty()) words_.back() &= tail_mask(window_.len);
}

bool IndexedMask::test(uint64_t index) const {
  if (!window_.contains(index)) throw std::out_of_range("index outside mask window");
  uint64_t bit = index - window_.lo;
  return (words_[bit >> 6] >> (bit & 63)) & 1;
}

void IndexedMask::set(uint64_t index) {
  if (!window_.contains(index)) throw std::out_of_range("index outside mask window");
  uint64_t bit = index - window_.lo;
  words_[bit >> 6] |= uint64_t{1} << (bit & 63);
}

void IndexedMask::clear(uint64_t index) {
  if (!window_.contains(index)) throw std::out_of_range("index outside mask window");
  uint64_t bit = index - window_.lo;
  words_[bit >> 6] &= ~(uint64_t{1} << (bit & 63));
}

uint64_t IndexedMask::count() const {
  uint64_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

uint64_t IndexedMask::count_through(uint64_t index) const {
  if (index < window_.lo) return 0;
  if (index >= window_.end()) index = window_.end() - 1;
  uint64_t bits = index - window_.lo + 1;  // prefix length
  uint64_t full = bits / 64, n = 0;
  for (uint64_t w = 0; w < full; ++w) n += std::popcount(words_[w]);
  if (uint64_t rem = bits % 64; rem != 0)
    n += std::popcount(words_[full] & ((uint64_t{1} << rem) - 1));
  return n;
}

uint64_t IndexedMask::count_range(uint64_t first, uint64_t last) const {
  if (last < first) return 0;
  if (!window_.covers(first, last))
    throw std::out_of_range("count_range outside mask window");
  uint64_t below = first > window_.lo ? count_through(first - 1) : 0;
  return count_through(last) - below;
}

IndexedMask twin_mask(const IndexedMask& l, const IndexedMask& r) {
  if (l.window() != r.window())
    throw std::invalid_argument("twin_mask requires identical windows");
  if (l.kind() != MaskKind::L || r.kind() != MaskKind::R)
    throw std::invalid_argument("twin_mask takes an L-mask and an R-mask");
  IndexedMask t(l.window(), MaskKind::T);
  auto tw = t.words();
  auto lw = l.words();
  auto rw = r.words();
  for (size_t i = 0; i < tw.size(); ++i) tw[i] = lw[i] & rw[i];
  return t;
}

namespace {

void put_u16(std::ostream& os, uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>(v >> 8)};
  os.write(reinterpret_cast<const char*>(b), 2);
}

void put_u64(std::ostream& os, uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

uint16_t get_u16(std::istream& is) {
  unsigned char b[2];
  is.read(reinterpret_cast<char*>(b), 2);
  return static_cast<uint16_t>(b[0] | (uint16_t{b[1]} << 8));
}

uint64_t get_u64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{b[i]} << (8 * i);
  return v;
}

}  // namespace

void save_mask(const IndexedMask& mask, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open mask file for writing: " + path.string());
  os.write("W6SV", 4);
  put_u16(os, kMaskFormatVersion);
  os.put(static_cast<char>(mask.kind()));
  put_u64(os, mask.window().lo);
  put_u64(os, mask.window().len);
  for (uint64_t w : mask.words()) put_u64(os, w);
  if (!os) throw std::runtime_error("failed writing mask file: " + path.string());
}

IndexedMask load_mask(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open mask file: " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, "W6SV", 4) != 0)
    throw std::runtime_error("not a W6SV mask file: " + path.string());
  uint16_t version = get_u16(is);
  if (version != kMaskFormatVersion)
    throw std::runtime_error("unsupported W6SV version");
  int kind_byte = is.get();
  if (kind_byte < 0 || kind_byte > 2) throw std::runtime_error("bad W6SV kind byte");
  uint64_t lo = get_u64(is);
  uint64_t len = get_u64(is);
  IndexedMask mask({lo, len}, static_cast<MaskKind>(kind_byte));
  auto words = mask.words();
  for (auto& w : words) w = get_u64(is);
  if (!is) throw std::runtime_error("truncated W6SV mask file: " + path.string());
  if (!words.empty()) words.back() &= len % 64 ? (uint64_t{1} << (len % 64)) - 1 : ~uint64_t{0};
  return mask;
}

}  // namespace wheel6
