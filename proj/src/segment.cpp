#include "wheel6/segment.hpp"

#include <bit>
#include <stdexcept>

namespace wheel6 {

namespace {

uint64_t word_count(uint64_t len) { return (len + 63) / 64; }

uint64_t tail_mask(uint64_t len) {
  uint64_t rem = len % 64;
  return rem == 0 ? ~uint64_t{0} : (uint64_t{1} << rem) - 1;
}

uint64_t reverse_bits(uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ull) | ((x & 0x5555555555555555ull) << 1);
  x = ((x >> 2) & 0x3333333333333333ull) | ((x & 0x3333333333333333ull) << 2);
  x = ((x >> 4) & 0x0f0f0f0f0f0f0f0full) | ((x & 0x0f0f0f0f0f0f0f0full) << 4);
  return __builtin_bswap64(x);
}

// 64 bits of `words` starting at bit offset `bit`, zero-padded at the end.
uint64_t read_bits(std::span<const uint64_t> words, uint64_t bit) {
  uint64_t w = bit >> 6, s = bit & 63;
  uint64_t lo = w < words.size() ? words[w] >> s : 0;
  uint64_t hi = (s != 0 && w + 1 < words.size()) ? words[w + 1] << (64 - s) : 0;
  return lo | hi;
}

}  // namespace

Segment::Segment(const IndexedMask& source, uint64_t length, Direction direction,
                 uint64_t shift)
    : source_(&source), length_(length), direction_(direction), shift_(shift) {
  if (length == 0) return;
  if (!source.window().covers(1 + shift, length + shift))
    throw std::out_of_range("mask does not cover the segment's index range");
}

uint64_t Segment::source_index(uint64_t pos) const {
  if (pos == 0 || pos > length_) throw std::out_of_range("segment position");
  return direction_ == Direction::Direct ? pos + shift_ : (length_ + 1 - pos) + shift_;
}

bool Segment::alive(uint64_t pos) const { return source_->test(source_index(pos)); }

uint64_t Segment::count_nonzero() const {
  if (length_ == 0) return 0;
  return source_->count_range(1 + shift_, length_ + shift_);
}

void Segment::pack(std::span<uint64_t> out) const {
  uint64_t nwords = word_count(length_);
  if (out.size() < nwords) throw std::invalid_argument("pack output too small");
  if (length_ == 0) return;
  uint64_t first_bit = (1 + shift_) - source_->window().lo;
  auto src = source_->words();
  for (uint64_t w = 0; w < nwords; ++w) out[w] = read_bits(src, first_bit + 64 * w);
  out[nwords - 1] &= tail_mask(length_);
  if (direction_ == Direction::Direct) return;

  // Reverse the m-bit string: reverse every word, swap word order, then
  // realign by the slack in the last word.
  std::vector<uint64_t> rev(nwords);
  for (uint64_t w = 0; w < nwords; ++w) rev[w] = reverse_bits(out[nwords - 1 - w]);
  uint64_t slack = nwords * 64 - length_;
  for (uint64_t w = 0; w < nwords; ++w) {
    uint64_t lo = rev[w] >> slack;
    uint64_t hi = (slack != 0 && w + 1 < nwords) ? rev[w + 1] << (64 - slack) : 0;
    out[w] = lo | hi;
  }
  out[nwords - 1] &= tail_mask(length_);
}

Segment make_segment(const IndexedMask& mask, uint64_t length, Direction direction,
                     uint64_t shift) {
  return Segment(mask, length, direction, shift);
}

CombinedSegment::CombinedSegment(uint64_t length, std::vector<uint64_t> words)
    : length_(length), words_(std::move(words)) {}

bool CombinedSegment::alive(uint64_t pos) const {
  if (pos == 0 || pos > length_) throw std::out_of_range("segment position");
  uint64_t bit = pos - 1;
  return (words_[bit >> 6] >> (bit & 63)) & 1;
}

uint64_t CombinedSegment::count_nonzero() const {
  uint64_t n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

std::vector<uint64_t> CombinedSegment::survivors() const {
  std::vector<uint64_t> out;
  for (uint64_t w = 0; w < words_.size(); ++w) {
    uint64_t word = words_[w];
    while (word != 0) {
      out.push_back(64 * w + std::countr_zero(word) + 1);
      word &= word - 1;
    }
  }
  return out;
}

CombinedSegment combine(const Segment& s1, const Segment& s2) {
  if (s1.length() != s2.length())
    throw std::invalid_argument("combine requires equal segment lengths");
  uint64_t nwords = word_count(s1.length());
  std::vector<uint64_t> a(nwords), b(nwords);
  s1.pack(a);
  s2.pack(b);
  for (uint64_t w = 0; w < nwords; ++w) a[w] &= b[w];
  return CombinedSegment(s1.length(), std::move(a));
}

uint64_t count_nonzero(const Segment& s) { return s.count_nonzero(); }
uint64_t count_nonzero(const CombinedSegment& s) { return s.count_nonzero(); }

}  // namespace wheel6
