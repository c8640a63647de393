// QuadraticInstance: the equation a*x^2 + b*x + c = 0 (mod 2^n), plus the
// parity classification that picks the solving strategy.
#pragma once

#include <cstdint>
#include <string>

#include "quad2n/residue.hpp"

namespace quad2n {

class QuadraticInstance {
 public:
  // All three coefficients must share one width (usage error otherwise).
  QuadraticInstance(Residue a, Residue b, Residue c);
  static QuadraticInstance from_u64(width_t width, std::uint64_t a,
                                    std::uint64_t b, std::uint64_t c);

  const Residue& a() const { return a_; }
  const Residue& b() const { return b_; }
  const Residue& c() const { return c_; }
  width_t width() const { return a_.width(); }

 private:
  Residue a_, b_, c_;
};

// One tag per parity triple (a, b, c); the all_even tag carries the
// minimum valuation used by the reduction step. small_width_fallback is
// reserved for reporting: classify() itself never returns it.
enum class CaseKind {
  all_even,
  all_odd,
  even_even_odd,
  even_odd_odd,
  even_odd_even,
  odd_odd_even,
  odd_even_odd,
  odd_even_even,
  small_width_fallback,
};

struct CaseTag {
  CaseKind kind;
  width_t min_val2 = 0;  // meaningful only for all_even
  bool operator==(const CaseTag&) const = default;
};

CaseTag classify(const QuadraticInstance& inst);

// Enumerator name, e.g. "odd_even_odd".
std::string_view case_name(CaseKind kind);

// a*x^2 + b*x + c at the instance width; x must share that width.
Residue substitute(const QuadraticInstance& inst, const Residue& x);

}  // namespace quad2n
