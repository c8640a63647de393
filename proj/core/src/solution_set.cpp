#include "quad2n/solution_set.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace quad2n {

CosetSolutionSet::CosetSolutionSet(width_t width, width_t base_width,
                                   std::vector<Nat> bases)
    : width_(width), base_width_(base_width), bases_(std::move(bases)) {
  if (width == 0) throw std::invalid_argument("set width must be >= 1");
  if (base_width > width) {
    throw std::invalid_argument("base_width exceeds set width");
  }
  std::sort(bases_.begin(), bases_.end());
  if (std::adjacent_find(bases_.begin(), bases_.end()) != bases_.end()) {
    throw std::invalid_argument("duplicate coset base");
  }
  for (const Nat& b : bases_) {
    if (b.bit_length() > base_width_) {
      throw std::invalid_argument("coset base out of range for base_width");
    }
  }
}

Nat CosetSolutionSet::count() const {
  return Nat(bases_.size()) << (width_ - base_width_);
}

std::optional<std::uint64_t> CosetSolutionSet::count_log2() const {
  if (bases_.empty() || !std::has_single_bit(bases_.size())) {
    return std::nullopt;
  }
  return static_cast<std::uint64_t>(std::countr_zero(bases_.size())) +
         (width_ - base_width_);
}

bool CosetSolutionSet::contains(const Nat& x) const {
  if (x.bit_length() > width_) {
    throw std::invalid_argument("membership query out of range");
  }
  const Nat residue = x.mod_pow2(base_width_);
  return std::binary_search(bases_.begin(), bases_.end(), residue);
}

CosetSolutionSet::Enumerator::Enumerator(const CosetSolutionSet& set)
    : set_(&set),
      offset_(0),
      stride_(Nat(1) << set.base_width_),
      end_(Nat(1) << set.width_) {}

std::optional<Nat> CosetSolutionSet::Enumerator::next() {
  if (set_->bases_.empty() || offset_ >= end_) return std::nullopt;
  Nat out = set_->bases_[index_] + offset_;
  ++index_;
  if (index_ == set_->bases_.size()) {
    index_ = 0;
    offset_ = offset_ + stride_;
  }
  return out;
}

std::vector<Nat> CosetSolutionSet::enumerate(
    std::optional<std::uint64_t> limit) const {
  constexpr std::uint64_t kUnboundedGuard = std::uint64_t{1} << 28;
  std::uint64_t cap;
  if (limit.has_value()) {
    cap = *limit;
  } else {
    const Nat total = count();
    if (total > Nat(kUnboundedGuard)) {
      throw std::length_error("unlimited enumeration of a set this large");
    }
    cap = total.to_u64();
  }
  std::vector<Nat> out;
  Enumerator stream = enumerate_stream();
  while (out.size() < cap) {
    std::optional<Nat> v = stream.next();
    if (!v.has_value()) break;
    out.push_back(std::move(*v));
  }
  return out;
}

CosetSolutionSet CosetSolutionSet::lift(width_t extra) const {
  if (extra > std::numeric_limits<width_t>::max() - width_) {
    throw std::invalid_argument("lift overflows the width type");
  }
  return {width_ + extra, base_width_, bases_};
}

CosetSolutionSet CosetSolutionSet::translate(const Nat& delta) const {
  if (delta.bit_length() > width_) {
    throw std::invalid_argument("translation delta out of range");
  }
  if (base_width_ < width_ && !delta.mod_pow2(base_width_).is_zero()) {
    throw std::invalid_argument(
        "translation delta must be a multiple of the coset stride");
  }
  if (base_width_ == 0) return *this;  // full ring is translation-invariant
  std::vector<Nat> moved;
  moved.reserve(bases_.size());
  const Residue d = Residue::from_nat(base_width_, delta);
  for (const Nat& b : bases_) {
    moved.push_back((Residue::from_nat(base_width_, b) - d).value());
  }
  return {width_, base_width_, std::move(moved)};
}

CosetSolutionSet CosetSolutionSet::normalized() const {
  if (bases_.empty()) return empty_set(width_);
  width_t m = base_width_;
  std::vector<Nat> bs = bases_;  // kept sorted throughout
  while (m > 0 && bs.size() % 2 == 0) {
    const Nat half = Nat(1) << (m - 1);
    const std::size_t lows = bs.size() / 2;
    bool foldable = true;
    for (std::size_t i = 0; i < lows && foldable; ++i) {
      foldable = bs[i] < half && bs[lows + i] == bs[i] + half;
    }
    if (!foldable) break;
    bs.resize(lows);
    --m;
  }
  return {width_, m, std::move(bs)};
}

bool CosetSolutionSet::operator==(const CosetSolutionSet& rhs) const {
  if (width_ != rhs.width_) return false;
  const CosetSolutionSet a = normalized();
  const CosetSolutionSet b = rhs.normalized();
  return a.base_width_ == b.base_width_ && a.bases_ == b.bases_;
}

}  // namespace quad2n
