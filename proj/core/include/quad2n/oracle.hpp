// Brute-force reference answers for small widths. Deliberately shares no
// logic with the solver: everything here is a plain machine-word scan.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quad2n/quadratic.hpp"

namespace quad2n::oracle {

inline constexpr width_t kMaxExhaustiveWidth = 24;
inline constexpr width_t kMaxHistogramWidth = 20;

// All roots in ascending order; width above kMaxExhaustiveWidth is a
// usage error.
std::vector<std::uint64_t> brute_force_solve(const QuadraticInstance& inst);

// All x with x^2 = a (mod 2^width), ascending; same width guard.
std::vector<std::uint64_t> brute_force_sqrt(const Residue& a);

struct PreimageHistogram {
  width_t width;
  // preimage count -> how many targets have exactly that many preimages
  // under squaring; targets hit by nothing are tallied under 0.
  std::map<std::uint64_t, std::uint64_t> targets_by_count;
};

// Single pass over the ring; width above kMaxHistogramWidth is a usage
// error.
PreimageHistogram preimage_histogram(width_t width);

}  // namespace quad2n::oracle
