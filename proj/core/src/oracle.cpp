#include "quad2n/oracle.hpp"

#include <stdexcept>

namespace quad2n::oracle {

// Evaluation wraps mod 2^64, which is faithful mod 2^n for n <= 24.

std::vector<std::uint64_t> brute_force_solve(const QuadraticInstance& inst) {
  const width_t n = inst.width();
  if (n > kMaxExhaustiveWidth) {
    throw std::invalid_argument("brute force capped at 24-bit widths");
  }
  const std::uint64_t a = inst.a().to_u64();
  const std::uint64_t b = inst.b().to_u64();
  const std::uint64_t c = inst.c().to_u64();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x <= mask; ++x) {
    if ((((a * x + b) * x + c) & mask) == 0) roots.push_back(x);
  }
  return roots;
}

std::vector<std::uint64_t> brute_force_sqrt(const Residue& a) {
  const width_t n = a.width();
  if (n > kMaxExhaustiveWidth) {
    throw std::invalid_argument("brute force capped at 24-bit widths");
  }
  const std::uint64_t target = a.to_u64();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> roots;
  for (std::uint64_t x = 0; x <= mask; ++x) {
    if (((x * x) & mask) == target) roots.push_back(x);
  }
  return roots;
}

PreimageHistogram preimage_histogram(width_t width) {
  if (width > kMaxHistogramWidth) {
    throw std::invalid_argument("histogram capped at 20-bit widths");
  }
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::vector<std::uint32_t> hits(std::size_t{1} << width, 0);
  for (std::uint64_t x = 0; x <= mask; ++x) {
    ++hits[(x * x) & mask];
  }
  PreimageHistogram out{width, {}};
  for (std::uint32_t h : hits) ++out.targets_by_count[h];
  return out;
}

}  // namespace quad2n::oracle
