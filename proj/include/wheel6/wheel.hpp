#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace wheel6 {

// The two residue classes of the mod-6 wheel: a_i = 6i-1 live in A,
// b_i = 6i+1 live in B. Indices start at 1; b_0 = 1 is never a member.
enum class WheelKind : uint8_t { A, B };

// Value of the i-th member of a class. Throws std::invalid_argument for i = 0.
uint64_t value(WheelKind kind, uint64_t i);

// Inverse of value(): (A, i) if n = 6i-1, (B, i) if n = 6i+1, nothing for the
// other residues mod 6. Requires n >= 5.
std::optional<std::pair<WheelKind, uint64_t>> classify(uint64_t n);

}  // namespace wheel6
