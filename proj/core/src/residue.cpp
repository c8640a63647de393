#include "quad2n/residue.hpp"

#include <algorithm>
#include <stdexcept>

namespace quad2n {

using detail::kLimbBits;
using detail::limb_count;
using detail::limb_t;

namespace {

std::size_t limbs_for(width_t width) {
  if (width == 0) throw std::invalid_argument("residue width must be >= 1");
  return limb_count(width);
}

}  // namespace

Residue::Residue(width_t width, std::uint64_t value)
    : width_(width), limbs_(limbs_for(width), 0) {
  limbs_[0] = value;
  detail::mask_to_width(limbs_.data(), width_);
}

Residue Residue::from_nat(width_t width, const Nat& value) {
  Residue r(width, 0);
  const auto& src = value.limbs();
  const std::size_t n = std::min(src.size(), r.limbs_.size());
  std::copy_n(src.begin(), n, r.limbs_.begin());
  detail::mask_to_width(r.limbs_.data(), width);
  return r;
}

Residue Residue::from_limbs(width_t width, std::vector<limb_t> limbs) {
  Residue r(width, 0);
  limbs.resize(r.limbs_.size(), 0);
  r.limbs_ = std::move(limbs);
  detail::mask_to_width(r.limbs_.data(), width);
  return r;
}

bool Residue::bit(width_t i) const {
  if (i >= width_) return false;
  return (limbs_[i / kLimbBits] >> (i % kLimbBits)) & 1;
}

std::uint64_t Residue::low_bits(unsigned k) const {
  const limb_t lo = limbs_[0];
  if (k >= 64) return lo;
  return lo & ((limb_t{1} << k) - 1);
}

std::uint64_t Residue::to_u64() const {
  if (!detail::is_zero_n(limbs_.data() + 1, limbs_.size() - 1)) {
    throw std::overflow_error("residue value does not fit in 64 bits");
  }
  return limbs_[0];
}

Residue Residue::truncated(width_t new_width) const {
  if (new_width > width_) {
    throw std::invalid_argument("truncated() target width exceeds source");
  }
  Residue r(new_width, 0);
  std::copy_n(limbs_.begin(), r.limbs_.size(), r.limbs_.begin());
  detail::mask_to_width(r.limbs_.data(), new_width);
  return r;
}

Residue Residue::zero_extended(width_t new_width) const {
  if (new_width < width_) {
    throw std::invalid_argument("zero_extended() target width below source");
  }
  Residue r(new_width, 0);
  std::copy(limbs_.begin(), limbs_.end(), r.limbs_.begin());
  return r;
}

namespace {

void require_same_width(const Residue& a, const Residue& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("residue width mismatch");
  }
}

}  // namespace

Residue Residue::operator+(const Residue& rhs) const {
  require_same_width(*this, rhs);
  Residue r = *this;
  detail::add_n(r.limbs_.data(), rhs.limbs_.data(), r.limbs_.size());
  detail::mask_to_width(r.limbs_.data(), width_);
  return r;
}

Residue Residue::operator-(const Residue& rhs) const {
  require_same_width(*this, rhs);
  Residue r = *this;
  detail::sub_n(r.limbs_.data(), rhs.limbs_.data(), r.limbs_.size());
  detail::mask_to_width(r.limbs_.data(), width_);
  return r;
}

Residue Residue::operator*(const Residue& rhs) const {
  require_same_width(*this, rhs);
  Residue r(width_, 0);
  detail::mul_low(r.limbs_.data(), limbs_.data(), rhs.limbs_.data(),
                  r.limbs_.size());
  detail::mask_to_width(r.limbs_.data(), width_);
  return r;
}

Residue shl(const Residue& x, width_t amount) {
  Residue r(x.width(), 0);
  if (amount >= x.width()) return r;
  auto limbs = r.limbs();
  detail::shl_bits(limbs.data(), x.limbs().data(), limbs.size(), amount);
  return Residue::from_limbs(x.width(), std::move(limbs));
}

Residue shr(const Residue& x, width_t amount) {
  Residue r(x.width(), 0);
  if (amount >= x.width()) return r;
  auto limbs = r.limbs();
  detail::shr_bits(limbs.data(), x.limbs().data(), limbs.size(), amount);
  return Residue::from_limbs(x.width(), std::move(limbs));
}

width_t val2(const Residue& x) {
  const std::uint64_t tz =
      detail::trailing_zero_bits(x.limbs().data(), x.limbs().size());
  return static_cast<width_t>(std::min<std::uint64_t>(tz, x.width()));
}

Residue odd_part(const Residue& x) {
  if (x.is_zero()) throw std::domain_error("odd_part of zero is undefined");
  return shr(x, val2(x));
}

Residue inv_odd(const Residue& x) {
  if (!x.is_odd()) throw std::domain_error("inv_odd requires an odd operand");
  const width_t w = x.width();
  // Odd numbers are their own inverse mod 8, then Newton doubles the
  // number of correct bits: y <- y*(2 - x*y).
  width_t k = std::min<width_t>(w, 3);
  Residue y = x.truncated(k);
  while (k < w) {
    k = (k > w / 2) ? w : k * 2;
    const Residue xk = x.truncated(k);
    const Residue yk = y.zero_extended(k);
    y = yk * (Residue(k, 2) - xk * yk);
  }
  return y;
}

int parity_indicator(std::int64_t j) { return (j % 2 == 0) ? 1 : 0; }

}  // namespace quad2n
