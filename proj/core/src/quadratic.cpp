#include "quad2n/quadratic.hpp"

#include <algorithm>
#include <stdexcept>

namespace quad2n {

QuadraticInstance::QuadraticInstance(Residue a, Residue b, Residue c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.width() != b_.width() || a_.width() != c_.width()) {
    throw std::invalid_argument("instance coefficients must share one width");
  }
}

QuadraticInstance QuadraticInstance::from_u64(width_t width, std::uint64_t a,
                                              std::uint64_t b,
                                              std::uint64_t c) {
  return {Residue(width, a), Residue(width, b), Residue(width, c)};
}

CaseTag classify(const QuadraticInstance& inst) {
  const bool ao = inst.a().is_odd();
  const bool bo = inst.b().is_odd();
  const bool co = inst.c().is_odd();
  if (!ao && !bo && !co) {
    const width_t t =
        std::min({val2(inst.a()), val2(inst.b()), val2(inst.c())});
    return {CaseKind::all_even, t};
  }
  if (ao && bo && co) return {CaseKind::all_odd};
  if (!ao && !bo && co) return {CaseKind::even_even_odd};
  if (!ao && bo && co) return {CaseKind::even_odd_odd};
  if (!ao && bo && !co) return {CaseKind::even_odd_even};
  if (ao && bo && !co) return {CaseKind::odd_odd_even};
  if (ao && !bo && co) return {CaseKind::odd_even_odd};
  return {CaseKind::odd_even_even};
}

std::string_view case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::all_even: return "all_even";
    case CaseKind::all_odd: return "all_odd";
    case CaseKind::even_even_odd: return "even_even_odd";
    case CaseKind::even_odd_odd: return "even_odd_odd";
    case CaseKind::even_odd_even: return "even_odd_even";
    case CaseKind::odd_odd_even: return "odd_odd_even";
    case CaseKind::odd_even_odd: return "odd_even_odd";
    case CaseKind::odd_even_even: return "odd_even_even";
    case CaseKind::small_width_fallback: return "small_width_fallback";
  }
  return "?";
}

Residue substitute(const QuadraticInstance& inst, const Residue& x) {
  if (x.width() != inst.width()) {
    throw std::invalid_argument("substitute: x width mismatch");
  }
  return (inst.a() * x + inst.b()) * x + inst.c();
}

}  // namespace quad2n
