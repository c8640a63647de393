#include <stdexcept>

#include "doctest.h"
#include "quad2n/quadratic.hpp"

using quad2n::CaseKind;
using quad2n::CaseTag;
using quad2n::classify;
using quad2n::QuadraticInstance;
using quad2n::Residue;
using quad2n::width_t;

TEST_CASE("classification picks the right parity row") {
  CHECK(classify(QuadraticInstance::from_u64(5, 4, 4, 24)) ==
        CaseTag{CaseKind::all_even, 2});
  CHECK(classify(QuadraticInstance::from_u64(3, 1, 1, 6)).kind ==
        CaseKind::odd_odd_even);
  CHECK(classify(QuadraticInstance::from_u64(4, 1, 1, 1)).kind ==
        CaseKind::all_odd);
  CHECK(classify(QuadraticInstance::from_u64(4, 2, 1, 2)).kind ==
        CaseKind::even_odd_even);
  CHECK(classify(QuadraticInstance::from_u64(4, 2, 1, 7)).kind ==
        CaseKind::even_odd_odd);
  CHECK(classify(QuadraticInstance::from_u64(5, 1, 2, 2)).kind ==
        CaseKind::odd_even_even);
  CHECK(classify(QuadraticInstance::from_u64(4, 1, 2, 1)).kind ==
        CaseKind::odd_even_odd);
  CHECK(classify(QuadraticInstance::from_u64(4, 2, 2, 1)).kind ==
        CaseKind::even_even_odd);
  // the all-even valuation is the minimum across the three coefficients
  CHECK(classify(QuadraticInstance::from_u64(6, 8, 4, 16)).min_val2 == 2);
  CHECK(classify(QuadraticInstance::from_u64(4, 0, 0, 0)) ==
        CaseTag{CaseKind::all_even, 4});
}

TEST_CASE("classification is total and matches raw parities") {
  const width_t n = 4;
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      for (std::uint64_t c = 0; c < 16; ++c) {
        const CaseTag tag = classify(QuadraticInstance::from_u64(n, a, b, c));
        CHECK(tag.kind != CaseKind::small_width_fallback);
        const int key = (a & 1) << 2 | (b & 1) << 1 | (c & 1);
        CaseKind want{};
        switch (key) {
          case 0b000: want = CaseKind::all_even; break;
          case 0b001: want = CaseKind::even_even_odd; break;
          case 0b010: want = CaseKind::even_odd_even; break;
          case 0b011: want = CaseKind::even_odd_odd; break;
          case 0b100: want = CaseKind::odd_even_even; break;
          case 0b101: want = CaseKind::odd_even_odd; break;
          case 0b110: want = CaseKind::odd_odd_even; break;
          case 0b111: want = CaseKind::all_odd; break;
        }
        CHECK(tag.kind == want);
      }
    }
  }
}

TEST_CASE("substitution evaluates the polynomial at the width") {
  const auto example = QuadraticInstance::from_u64(5, 4, 4, 24);
  CHECK(quad2n::substitute(example, Residue(5, 9)).is_zero());
  CHECK(quad2n::substitute(example, Residue(5, 2)) == Residue(5, 16));
  CHECK(quad2n::substitute(QuadraticInstance::from_u64(3, 1, 1, 6),
                           Residue(3, 0)) == Residue(3, 6));
  CHECK(quad2n::substitute(QuadraticInstance::from_u64(4, 2, 1, 2),
                           Residue(4, 6)).is_zero());
  CHECK_THROWS_AS(quad2n::substitute(example, Residue(6, 1)),
                  std::invalid_argument);
}

TEST_CASE("instances require one shared width") {
  CHECK_THROWS_AS(QuadraticInstance(Residue(4, 1), Residue(5, 1),
                                    Residue(4, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuadraticInstance(Residue(4, 1), Residue(4, 1),
                                    Residue(3, 1)),
                  std::invalid_argument);
  CHECK(QuadraticInstance::from_u64(4, 17, 1, 1).a() == Residue(4, 1));
}

TEST_CASE("case names are stable identifiers") {
  CHECK(quad2n::case_name(CaseKind::all_even) == "all_even");
  CHECK(quad2n::case_name(CaseKind::odd_even_odd) == "odd_even_odd");
  CHECK(quad2n::case_name(CaseKind::small_width_fallback) ==
        "small_width_fallback");
}
