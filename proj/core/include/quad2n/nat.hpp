// Nat: arbitrary-size unsigned integer, used for solution counts, coset
// bases, and CLI numerals. Stored as trimmed little-endian 64-bit limbs
// (no trailing zero limbs; zero is the empty vector).
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quad2n/detail/limbops.hpp"

namespace quad2n {

class Nat {
 public:
  Nat() = default;
  Nat(std::uint64_t v) {  // NOLINT: implicit on purpose, Nat(0), Nat(5)...
    if (v != 0) limbs_.push_back(v);
  }

  static Nat from_limbs(std::vector<detail::limb_t> limbs);

  // Accepts decimal or 0x/0X-prefixed hex; rejects anything else.
  static std::optional<Nat> parse(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }
  bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1) != 0; }

  // Position of the highest set bit plus one; 0 for zero.
  std::uint64_t bit_length() const {
    return detail::bit_length(limbs_.data(), limbs_.size());
  }

  bool bit(std::uint64_t i) const {
    const std::size_t w = static_cast<std::size_t>(i / detail::kLimbBits);
    if (w >= limbs_.size()) return false;
    return (limbs_[w] >> (i % detail::kLimbBits)) & 1;
  }

  bool fits_u64() const { return limbs_.size() <= 1; }
  // Throws std::overflow_error when the value needs more than 64 bits.
  std::uint64_t to_u64() const;

  Nat operator+(const Nat& rhs) const;
  Nat operator<<(std::uint64_t shift) const;

  // Value modulo 2^width.
  Nat mod_pow2(std::uint64_t width) const;

  std::strong_ordering operator<=>(const Nat& rhs) const {
    if (limbs_.size() != rhs.limbs_.size()) {
      return limbs_.size() <=> rhs.limbs_.size();
    }
    const int c = detail::cmp_n(limbs_.data(), rhs.limbs_.data(), limbs_.size());
    return c <=> 0;
  }
  bool operator==(const Nat& rhs) const { return limbs_ == rhs.limbs_; }

  std::string to_dec() const;
  std::string to_hex() const;  // 0x-prefixed, lowercase

  const std::vector<detail::limb_t>& limbs() const { return limbs_; }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }
  void mul_add_small(std::uint64_t mul, std::uint64_t add);

  std::vector<detail::limb_t> limbs_;
};

}  // namespace quad2n
