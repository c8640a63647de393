// Exact solvers for a*x^2 + b*x + c = 0 (mod 2^n). The dispatcher routes
// on the parity classification and always returns the complete solution
// set in coset form; the specialized entry points expose the individual
// strategies with their own preconditions.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "quad2n/quadratic.hpp"
#include "quad2n/solution_set.hpp"

namespace quad2n {

// Widths at or below this are solved by direct scan of the ring.
inline constexpr width_t kSmallWidth = 3;

struct BitSolveStats {
  std::uint64_t iterations = 0;  // always equals the instance width
};

// Unique-root solver; pre: a even, b odd (usage error otherwise).
// Runs exactly width() coefficient updates, one per result bit, on
// in-place limb buffers whose working width shrinks by one each step.
Residue solve_bitwise_unique(const QuadraticInstance& inst,
                             BitSolveStats* stats = nullptr);

// Two-root solver; pre: a odd, b odd, c even. Returns (even root, odd
// root), each obtained from a width-(n-1) unique-root subproblem.
std::pair<Residue, Residue> solve_two(const QuadraticInstance& inst);

// Complete solution set of x^2 = a (mod 2^width). Never empty-by-accident:
// the case analysis is total, and solvable targets yield 1, 2, or 4 coset
// bases whose total count is the exact preimage count of a under squaring.
CosetSolutionSet sqrt_pow2(const Residue& a);

struct CompletedSquare {
  Residue shift;                 // x solves iff (x + shift)^2 = rhs
  Residue rhs;                   // shift^2 - a^(-1) * c
  width_t rhs_val2;              // val2(rhs), = width when rhs is zero
  std::optional<Residue> rhs_odd;  // odd part of rhs; absent when rhs == 0
};

// Divides through by a and completes the square; pre: a odd, b even.
CompletedSquare complete_square(const QuadraticInstance& inst);

// Sound fast rejection for the a-odd, b-even rows: true only when the
// completed square is a quadratic non-residue, i.e. only when the
// instance is certainly unsolvable. pre: a odd, b even.
bool quick_no_solution(const QuadraticInstance& inst);

// Full dispatcher: decides solvability and returns the entire solution
// set in O(width) ring operations (plus the small-width scan floor).
CosetSolutionSet solve(const QuadraticInstance& inst);

// log2 of the solution count (counts are always powers of two); absent
// when there are no solutions.
std::optional<std::uint64_t> count_log2(const QuadraticInstance& inst);

}  // namespace quad2n
