// Residue: an element of Z/2^n for a runtime-chosen width n >= 1.
// Canonical form: exactly limb_count(width) limbs, bits at or above the
// width cleared. All ring ops truncate eagerly back to the width.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quad2n/detail/limbops.hpp"
#include "quad2n/nat.hpp"

namespace quad2n {

using width_t = std::uint32_t;

class Residue {
 public:
  // Value is truncated to the width. Width 0 is a usage error.
  Residue(width_t width, std::uint64_t value = 0);
  static Residue from_nat(width_t width, const Nat& value);
  static Residue from_limbs(width_t width, std::vector<detail::limb_t> limbs);

  width_t width() const { return width_; }
  bool is_zero() const {
    return detail::is_zero_n(limbs_.data(), limbs_.size());
  }
  bool is_odd() const { return (limbs_[0] & 1) != 0; }
  bool bit(width_t i) const;

  // Low min(k, width) bits as a plain word; k <= 64.
  std::uint64_t low_bits(unsigned k) const;
  // Throws std::overflow_error when the value needs more than 64 bits.
  std::uint64_t to_u64() const;
  Nat value() const { return Nat::from_limbs(limbs_); }

  // Same value at a smaller width (truncates) or a larger one (zero-extends).
  Residue truncated(width_t new_width) const;
  Residue zero_extended(width_t new_width) const;

  Residue operator+(const Residue& rhs) const;
  Residue operator-(const Residue& rhs) const;
  Residue operator*(const Residue& rhs) const;
  bool operator==(const Residue& rhs) const {
    return width_ == rhs.width_ && limbs_ == rhs.limbs_;
  }

  const std::vector<detail::limb_t>& limbs() const { return limbs_; }

 private:
  width_t width_;
  std::vector<detail::limb_t> limbs_;
};

// Shifts truncate modulo 2^width; amounts >= width yield 0.
Residue shl(const Residue& x, width_t amount);
Residue shr(const Residue& x, width_t amount);

// 2-adic valuation with the convention val2(0) = width.
width_t val2(const Residue& x);

// x / 2^val2(x); the zero residue has no odd part (std::domain_error).
Residue odd_part(const Residue& x);

// Multiplicative inverse; x must be odd (std::domain_error otherwise).
Residue inv_odd(const Residue& x);

// 1 for even j, 0 for odd j.
int parity_indicator(std::int64_t j);

}  // namespace quad2n
