#include "quad2n/solver.hpp"

#include <stdexcept>
#include <vector>

namespace quad2n {

using detail::limb_t;

Residue solve_bitwise_unique(const QuadraticInstance& inst,
                             BitSolveStats* stats) {
  if (inst.a().is_odd() || !inst.b().is_odd()) {
    throw std::invalid_argument(
        "bitwise solver requires an even quadratic and an odd linear "
        "coefficient");
  }
  const width_t n = inst.width();
  std::vector<limb_t> quad = inst.a().limbs();
  std::vector<limb_t> lin = inst.b().limbs();
  std::vector<limb_t> cons = inst.c().limbs();
  std::vector<limb_t> bits(detail::limb_count(n), 0);
  std::uint64_t iterations = 0;

  // One pass per result bit. The working width shrinks by one each step,
  // so the window of live limbs shrinks too; limbs above it go stale and
  // are never read again.
  for (width_t w = n; w >= 1; --w) {
    const std::size_t k = detail::limb_count(w);
    if ((lin[0] & 1) == 0) {
      throw std::logic_error("bit solver invariant broken: linear term even");
    }
    ++iterations;
    if ((cons[0] & 1) == 0) {
      // Bit is 0: x = 2x', giving 2a x'^2 + b x' + c/2 = 0 (mod 2^(w-1)).
      detail::shr1_n(cons.data(), k);
      detail::shl1_n(quad.data(), k);
    } else {
      // Bit is 1: x = 2x' + 1, giving
      // 2a x'^2 + (2a + b) x' + (a + b + c)/2 = 0 (mod 2^(w-1)).
      const width_t i = n - w;
      bits[i / detail::kLimbBits] |= limb_t{1} << (i % detail::kLimbBits);
      detail::add_n(cons.data(), quad.data(), k);
      detail::add_n(cons.data(), lin.data(), k);
      detail::mask_to_width(cons.data(), w);
      detail::shr1_n(cons.data(), k);
      detail::shl1_n(quad.data(), k);
      detail::mask_to_width(quad.data(), w);
      detail::add_n(lin.data(), quad.data(), k);
    }
    if (w > 1) {
      detail::mask_to_width(quad.data(), w - 1);
      detail::mask_to_width(lin.data(), w - 1);
      detail::mask_to_width(cons.data(), w - 1);
    }
  }
  if (stats != nullptr) stats->iterations = iterations;
  return Residue::from_limbs(n, std::move(bits));
}

std::pair<Residue, Residue> solve_two(const QuadraticInstance& inst) {
  if (!inst.a().is_odd() || !inst.b().is_odd() || inst.c().is_odd()) {
    throw std::invalid_argument(
        "two-root solver requires odd a, odd b, even c");
  }
  const width_t n = inst.width();
  if (n == 1) {
    // c is 0 here, so x^2 + x covers both parities.
    return {Residue(1, 0), Residue(1, 1)};
  }
  const width_t m = n - 1;
  const Residue a2 = shl(inst.a(), 1).truncated(m);
  // Even root 2*delta: delta solves 2a y^2 + b y + c/2 = 0 (mod 2^(n-1)).
  const Residue delta = solve_bitwise_unique(
      {a2, inst.b().truncated(m), shr(inst.c(), 1).truncated(m)});
  const Residue even_root = shl(delta.zero_extended(n), 1);
  // Odd root 2*rho + 1: rho solves 2a y^2 + (2a+b) y + (a+b+c)/2 = 0.
  const Residue sum = inst.a() + inst.b() + inst.c();
  const Residue rho = solve_bitwise_unique(
      {a2, a2 + inst.b().truncated(m), shr(sum, 1).truncated(m)});
  const Residue odd_root = shl(rho.zero_extended(n), 1) + Residue(n, 1);
  return {even_root, odd_root};
}

CompletedSquare complete_square(const QuadraticInstance& inst) {
  if (!inst.a().is_odd() || inst.b().is_odd()) {
    throw std::invalid_argument(
        "completing the square requires odd a and even b");
  }
  const width_t n = inst.width();
  const Residue a_inv = inv_odd(inst.a());
  const Residue shift = a_inv * shr(inst.b(), 1);
  const Residue rhs = shift * shift - a_inv * inst.c();
  CompletedSquare out{shift, rhs, val2(rhs), std::nullopt};
  if (!rhs.is_zero()) out.rhs_odd = odd_part(rhs);
  return out;
}

namespace {

// Decides whether x^2 = s (mod 2^n) is solvable, from the valuation and
// the odd part alone. Total over all s, any n >= 1.
bool square_has_root(const Residue& s) {
  if (s.is_zero()) return true;
  const width_t n = s.width();
  const width_t r = val2(s);
  if (r % 2 != 0) return false;
  const Residue t = odd_part(s);
  if (r + 3 <= n) return t.low_bits(3) == 1;
  // r = n-1 or n-2: the odd part survives only partially; a root exists
  // exactly when the surviving bits equal 1.
  return t.low_bits(2) == 1;
}

CosetSolutionSet scan_small_width(const QuadraticInstance& inst) {
  const width_t n = inst.width();
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t a = inst.a().to_u64();
  const std::uint64_t b = inst.b().to_u64();
  const std::uint64_t c = inst.c().to_u64();
  std::vector<Nat> roots;
  for (std::uint64_t x = 0; x <= mask; ++x) {
    if ((((a * x + b) * x + c) & mask) == 0) roots.emplace_back(x);
  }
  return {n, n, std::move(roots)};
}

}  // namespace

bool quick_no_solution(const QuadraticInstance& inst) {
  if (!inst.a().is_odd() || inst.b().is_odd()) {
    throw std::invalid_argument(
        "quick rejection applies to odd a, even b instances only");
  }
  return !square_has_root(complete_square(inst).rhs);
}

CosetSolutionSet sqrt_pow2(const Residue& a) {
  const width_t n = a.width();
  if (n <= kSmallWidth) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t target = a.to_u64();
    std::vector<Nat> roots;
    for (std::uint64_t x = 0; x <= mask; ++x) {
      if (((x * x) & mask) == target) roots.emplace_back(x);
    }
    return {n, n, std::move(roots)};
  }
  if (a.is_zero()) {
    // Everything with the top half of its bits free squares to 0.
    return {n, (n + 1) / 2, {Nat(0)}};
  }
  const width_t r = val2(a);
  if (r % 2 != 0) return CosetSolutionSet::empty_set(n);
  const Residue t = odd_part(a);
  if (r == n - 1) {
    // a = 2^(n-1), n odd.
    return {n, (n + 1) / 2, {Nat(1) << ((n - 1) / 2)}};
  }
  if (r == n - 2) {
    // a = t * 2^(n-2), n even; only t = 1 is a square.
    if (t.low_bits(2) != 1) return CosetSolutionSet::empty_set(n);
    return {n, n / 2, {Nat(1) << ((n - 2) / 2)}};
  }
  if (t.low_bits(3) != 1) return CosetSolutionSet::empty_set(n);

  // a = t * 4^j with t = 1 (mod 8): the odd roots of q^2 = t (mod 2^m)
  // scale by 2^j and keep n-j bits of structure.
  const width_t j = r / 2;
  const width_t m = n - r;  // >= 3
  std::vector<Residue> odd_roots;
  if (m <= kSmallWidth) {
    const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    const std::uint64_t target = t.low_bits(m);
    for (std::uint64_t q = 1; q <= mask; q += 2) {
      if (((q * q) & mask) == target) odd_roots.emplace_back(m, q);
    }
  } else {
    // One root via q = 2y+1, y^2 + y + c2 = 0 (mod 2^(m-2)), y even;
    // the other three are -q and q +- 2^(m-1).
    const Residue tm = t.truncated(m);
    const Residue c2 =
        Residue(m - 2, 0) - shr(tm - Residue(m, 1), 2).truncated(m - 2);
    const Residue delta = solve_bitwise_unique({Residue(m - 3, 2),
                                                Residue(m - 3, 1),
                                                shr(c2, 1).truncated(m - 3)});
    const Residue q1 =
        shl(delta.zero_extended(m), 2) + Residue(m, 1);
    const Residue half = shl(Residue(m, 1), m - 1);
    odd_roots = {q1, Residue(m, 0) - q1, q1 + half, half - q1};
  }
  std::vector<Nat> bases;
  bases.reserve(odd_roots.size());
  for (const Residue& q : odd_roots) bases.push_back(q.value() << j);
  return {n, n - j, std::move(bases)};
}

CosetSolutionSet solve(const QuadraticInstance& inst) {
  const width_t n = inst.width();
  if (n <= kSmallWidth) return scan_small_width(inst);
  const CaseTag tag = classify(inst);
  switch (tag.kind) {
    case CaseKind::all_even: {
      const width_t t = tag.min_val2;
      if (t >= n) return CosetSolutionSet::full_ring(n);
      // Divide through by 2^t and lift the reduced solutions back up.
      const width_t nr = n - t;
      const QuadraticInstance reduced{shr(inst.a(), t).truncated(nr),
                                      shr(inst.b(), t).truncated(nr),
                                      shr(inst.c(), t).truncated(nr)};
      return solve(reduced).lift(t);
    }
    case CaseKind::all_odd:
    case CaseKind::even_even_odd:
      return CosetSolutionSet::empty_set(n);
    case CaseKind::even_odd_odd:
    case CaseKind::even_odd_even:
      return {n, n, {solve_bitwise_unique(inst).value()}};
    case CaseKind::odd_odd_even: {
      const auto [even_root, odd_root] = solve_two(inst);
      return {n, n, {even_root.value(), odd_root.value()}};
    }
    case CaseKind::odd_even_odd:
    case CaseKind::odd_even_even: {
      const CompletedSquare cs = complete_square(inst);
      const CosetSolutionSet squares = sqrt_pow2(cs.rhs);
      if (squares.empty()) return CosetSolutionSet::empty_set(n);
      // x = y - shift; subtracting at the base width moves every coset of
      // square roots onto a coset of solutions.
      const width_t m = squares.base_width();
      const Residue shift_m = cs.shift.truncated(m);
      std::vector<Nat> moved;
      moved.reserve(squares.bases().size());
      for (const Nat& b : squares.bases()) {
        moved.push_back((Residue::from_nat(m, b) - shift_m).value());
      }
      return {n, m, std::move(moved)};
    }
    case CaseKind::small_width_fallback:
      break;  // classify() never emits this
  }
  throw std::logic_error("unhandled case tag");
}

std::optional<std::uint64_t> count_log2(const QuadraticInstance& inst) {
  if (inst.width() > kSmallWidth) {
    const CaseTag tag = classify(inst);
    if (tag.kind == CaseKind::all_odd ||
        tag.kind == CaseKind::even_even_odd) {
      return std::nullopt;
    }
    if ((tag.kind == CaseKind::odd_even_odd ||
         tag.kind == CaseKind::odd_even_even) &&
        quick_no_solution(inst)) {
      return std::nullopt;
    }
  }
  return solve(inst).count_log2();
}

}  // namespace quad2n
