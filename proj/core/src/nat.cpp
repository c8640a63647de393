#include "quad2n/nat.hpp"

#include <cctype>
#include <stdexcept>

namespace quad2n {

using detail::dlimb_t;
using detail::kLimbBits;
using detail::limb_t;

Nat Nat::from_limbs(std::vector<limb_t> limbs) {
  Nat n;
  n.limbs_ = std::move(limbs);
  n.trim();
  return n;
}

std::uint64_t Nat::to_u64() const {
  if (limbs_.size() > 1) throw std::overflow_error("Nat does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

Nat Nat::operator+(const Nat& rhs) const {
  const Nat& big = limbs_.size() >= rhs.limbs_.size() ? *this : rhs;
  const Nat& small = limbs_.size() >= rhs.limbs_.size() ? rhs : *this;
  std::vector<limb_t> out = big.limbs_;
  limb_t carry = detail::add_n(out.data(), small.limbs_.data(), small.limbs_.size());
  for (std::size_t i = small.limbs_.size(); carry != 0 && i < out.size(); ++i) {
    out[i] += carry;
    carry = (out[i] == 0) ? 1u : 0u;
  }
  if (carry != 0) out.push_back(carry);
  return from_limbs(std::move(out));
}

Nat Nat::operator<<(std::uint64_t shift) const {
  if (is_zero() || shift == 0) return shift == 0 ? *this : Nat{};
  const std::size_t n = detail::limb_count(bit_length() + shift);
  std::vector<limb_t> src = limbs_;
  src.resize(n, 0);
  std::vector<limb_t> out(n, 0);
  detail::shl_bits(out.data(), src.data(), n, shift);
  return from_limbs(std::move(out));
}

Nat Nat::mod_pow2(std::uint64_t width) const {
  const std::size_t n = detail::limb_count(width);
  std::vector<limb_t> out = limbs_;
  if (out.size() > n) out.resize(n);
  if (!out.empty() && out.size() == n) detail::mask_to_width(out.data(), width);
  return from_limbs(std::move(out));
}

void Nat::mul_add_small(std::uint64_t mul, std::uint64_t add) {
  limb_t carry = add;
  for (auto& l : limbs_) {
    const dlimb_t t = dlimb_t(l) * mul + carry;
    l = static_cast<limb_t>(t);
    carry = static_cast<limb_t>(t >> kLimbBits);
  }
  if (carry != 0) limbs_.push_back(carry);
  trim();
}

std::optional<Nat> Nat::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  Nat out;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    if (text.empty()) return std::nullopt;
    for (char ch : text) {
      int digit;
      if (ch >= '0' && ch <= '9') digit = ch - '0';
      else if (ch >= 'a' && ch <= 'f') digit = ch - 'a' + 10;
      else if (ch >= 'A' && ch <= 'F') digit = ch - 'A' + 10;
      else return std::nullopt;
      out.mul_add_small(16, static_cast<std::uint64_t>(digit));
    }
  } else {
    for (char ch : text) {
      if (ch < '0' || ch > '9') return std::nullopt;
      out.mul_add_small(10, static_cast<std::uint64_t>(ch - '0'));
    }
  }
  return out;
}

std::string Nat::to_hex() const {
  if (is_zero()) return "0x0";
  std::string out;
  static const char* kDigits = "0123456789abcdef";
  bool leading = true;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const unsigned d = (limbs_[i] >> (nib * 4)) & 0xF;
      if (leading && d == 0) continue;
      leading = false;
      out.push_back(kDigits[d]);
    }
  }
  return "0x" + out;
}

std::string Nat::to_dec() const {
  if (is_zero()) return "0";
  // Peel 19 decimal digits at a time with a single-word division chain.
  constexpr limb_t kChunk = 10'000'000'000'000'000'000ULL;  // 10^19
  std::vector<limb_t> work = limbs_;
  std::string out;
  while (!work.empty()) {
    limb_t rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const dlimb_t cur = (dlimb_t(rem) << kLimbBits) | work[i];
      work[i] = static_cast<limb_t>(cur / kChunk);
      rem = static_cast<limb_t>(cur % kChunk);
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    const bool last = work.empty();
    for (int d = 0; d < 19 && (rem != 0 || !last); ++d) {
      out.push_back(static_cast<char>('0' + rem % 10));
      rem /= 10;
    }
  }
  return {out.rbegin(), out.rend()};
}

}  // namespace quad2n
