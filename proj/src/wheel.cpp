#include "wheel6/wheel.hpp"

#include <stdexcept>

namespace wheel6 {

uint64_t value(WheelKind kind, uint64_t i) {
  if (i == 0) throw std::invalid_argument("wheel index starts at 1");
  return kind == WheelKind::A ? 6 * i - 1 : 6 * i + 1;
}

std::optional<std::pair<WheelKind, uint64_t>> classify(uint64_t n) {
  if (n < 5) throw std::invalid_argument("classify requires n >= 5");
  switch (n % 6) {
    case 5:
      return std::pair{WheelKind::A, (n + 1) / 6};
    case 1:
      return std::pair{WheelKind::B, (n - 1) / 6};
    default:
      return std::nullopt;
  }
}

}  // namespace wheel6
