// Low-level kernels on little-endian 64-bit limb vectors. Everything here
// operates on a fixed window of limbs; callers manage widths and masking.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace quad2n::detail {

using limb_t = std::uint64_t;
using dlimb_t = unsigned __int128;

inline constexpr unsigned kLimbBits = 64;

constexpr std::size_t limb_count(std::uint64_t bits) {
  return static_cast<std::size_t>((bits + kLimbBits - 1) / kLimbBits);
}

// Clears the partial top limb so the window holds a value < 2^width.
// Limbs at index >= limb_count(width) are not touched; callers shrink
// their window instead of zeroing storage.
inline void mask_to_width(limb_t* v, std::uint64_t width) {
  const unsigned rem = static_cast<unsigned>(width % kLimbBits);
  if (rem != 0) {
    v[width / kLimbBits] &= (limb_t{1} << rem) - 1;
  }
}

// r += x over n limbs; returns the carry out of the window.
inline limb_t add_n(limb_t* r, const limb_t* x, std::size_t n) {
  limb_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const dlimb_t t = dlimb_t(r[i]) + x[i] + carry;
    r[i] = static_cast<limb_t>(t);
    carry = static_cast<limb_t>(t >> kLimbBits);
  }
  return carry;
}

// r -= x over n limbs (two's complement wrap); returns the borrow.
inline limb_t sub_n(limb_t* r, const limb_t* x, std::size_t n) {
  limb_t borrow = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const limb_t xi = x[i];
    const limb_t d = r[i] - xi;
    const limb_t b2 = (d > r[i]) ? 1u : 0u;
    const limb_t d2 = d - borrow;
    borrow = b2 + ((d2 > d) ? 1u : 0u);
    r[i] = d2;
  }
  return borrow;
}

inline void shl1_n(limb_t* v, std::size_t n) {
  limb_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const limb_t next = v[i] >> (kLimbBits - 1);
    v[i] = (v[i] << 1) | carry;
    carry = next;
  }
}

inline void shr1_n(limb_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const limb_t hi = (i + 1 < n) ? (v[i + 1] << (kLimbBits - 1)) : 0;
    v[i] = (v[i] >> 1) | hi;
  }
}

// Low n limbs of x*y. r must not alias x or y.
inline void mul_low(limb_t* r, const limb_t* x, const limb_t* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) r[i] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const limb_t xi = x[i];
    if (xi == 0) continue;
    limb_t carry = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      const dlimb_t t = dlimb_t(xi) * y[j] + r[i + j] + carry;
      r[i + j] = static_cast<limb_t>(t);
      carry = static_cast<limb_t>(t >> kLimbBits);
    }
  }
}

// Number of trailing zero bits in the window, n*64 when all limbs are zero.
inline std::uint64_t trailing_zero_bits(const limb_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) {
      return std::uint64_t{i} * kLimbBits +
             static_cast<unsigned>(std::countr_zero(v[i]));
    }
  }
  return std::uint64_t{n} * kLimbBits;
}

inline std::uint64_t bit_length(const limb_t* v, std::size_t n) {
  for (std::size_t i = n; i-- > 0;) {
    if (v[i] != 0) {
      return std::uint64_t{i} * kLimbBits +
             (kLimbBits - static_cast<unsigned>(std::countl_zero(v[i])));
    }
  }
  return 0;
}

inline bool is_zero_n(const limb_t* v, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

// Lexicographic-from-the-top comparison of equal-length windows.
inline int cmp_n(const limb_t* x, const limb_t* y, std::size_t n) {
  for (std::size_t i = n; i-- > 0;) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

// dst = src << shift within a window of n limbs (bits shifted past the
// window are dropped). dst must not alias src.
inline void shl_bits(limb_t* dst, const limb_t* src, std::size_t n,
                     std::uint64_t shift) {
  const std::size_t limb_off = static_cast<std::size_t>(shift / kLimbBits);
  const unsigned bit_off = static_cast<unsigned>(shift % kLimbBits);
  for (std::size_t i = n; i-- > 0;) {
    limb_t lo = 0;
    if (i >= limb_off) {
      lo = src[i - limb_off] << bit_off;
      if (bit_off != 0 && i > limb_off) {
        lo |= src[i - limb_off - 1] >> (kLimbBits - bit_off);
      }
    }
    dst[i] = lo;
  }
}

// dst = src >> shift within a window of n limbs. dst must not alias src.
inline void shr_bits(limb_t* dst, const limb_t* src, std::size_t n,
                     std::uint64_t shift) {
  const std::size_t limb_off = static_cast<std::size_t>(shift / kLimbBits);
  const unsigned bit_off = static_cast<unsigned>(shift % kLimbBits);
  for (std::size_t i = 0; i < n; ++i) {
    limb_t hi = 0;
    if (i + limb_off < n) {
      hi = src[i + limb_off] >> bit_off;
      if (bit_off != 0 && i + limb_off + 1 < n) {
        hi |= src[i + limb_off + 1] << (kLimbBits - bit_off);
      }
    }
    dst[i] = hi;
  }
}

}  // namespace quad2n::detail
