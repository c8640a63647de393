// CosetSolutionSet: the solution set of a quadratic congruence mod 2^n in
// compact form — a list of bases b < 2^m denoting the disjoint union of
// cosets { b + r*2^m : 0 <= r < 2^(n-m) }. Sets are immutable; lift and
// translate return new sets.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "quad2n/nat.hpp"
#include "quad2n/residue.hpp"

namespace quad2n {

class CosetSolutionSet {
 public:
  // Bases are sorted on construction; duplicates or bases >= 2^base_width
  // are usage errors, as is base_width > width.
  CosetSolutionSet(width_t width, width_t base_width, std::vector<Nat> bases);

  static CosetSolutionSet empty_set(width_t width) {
    return {width, width, {}};
  }
  static CosetSolutionSet full_ring(width_t width) {
    return {width, 0, {Nat(0)}};
  }

  width_t width() const { return width_; }
  width_t base_width() const { return base_width_; }
  const std::vector<Nat>& bases() const { return bases_; }
  bool empty() const { return bases_.empty(); }

  // |bases| * 2^(width - base_width), exactly.
  Nat count() const;
  // log2 of count(); absent when the set is empty (and for hand-built sets
  // whose base count is not a power of two).
  std::optional<std::uint64_t> count_log2() const;

  // Membership of x in [0, 2^width); larger x is a usage error.
  bool contains(const Nat& x) const;

  // Ascending streaming enumeration with O(1) state beyond the set.
  class Enumerator {
   public:
    std::optional<Nat> next();

   private:
    friend class CosetSolutionSet;
    explicit Enumerator(const CosetSolutionSet& set);
    const CosetSolutionSet* set_;
    std::size_t index_ = 0;
    Nat offset_;
    Nat stride_;
    Nat end_;
  };
  Enumerator enumerate_stream() const { return Enumerator(*this); }

  // Convenience vector form of the above; `limit` caps the output.
  // Unlimited enumeration of astronomically large sets is refused
  // (std::length_error) rather than allowed to exhaust memory.
  std::vector<Nat> enumerate(
      std::optional<std::uint64_t> limit = std::nullopt) const;

  // Same set read at width + extra: bases and base_width are unchanged,
  // every solution gains 2^extra lifts.
  CosetSolutionSet lift(width_t extra) const;

  // Pointwise subtraction of delta. Only closed over the coset structure
  // when delta is a multiple of 2^base_width; anything else is a usage
  // error.
  CosetSolutionSet translate(const Nat& delta) const;

  // Canonical form: folds base pairs {x, x + 2^(m-1)} until the stride is
  // minimal. Equality compares normal forms.
  CosetSolutionSet normalized() const;
  bool operator==(const CosetSolutionSet& rhs) const;

 private:
  width_t width_;
  width_t base_width_;
  std::vector<Nat> bases_;
};

}  // namespace quad2n
