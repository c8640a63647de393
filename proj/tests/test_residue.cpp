#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "quad2n/residue.hpp"
#include "test_util.hpp"

using quad2n::Nat;
using quad2n::Residue;
using quad2n::width_t;
using testutil::random_odd;
using testutil::random_residue;

namespace {

// Naive base-2^32 reference arithmetic, independent of the limb kernels.
using Digits = std::vector<std::uint32_t>;

Digits trimmed(Digits d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

Digits to_digits(const Residue& r) {
  Digits d;
  for (std::uint64_t limb : r.limbs()) {
    d.push_back(static_cast<std::uint32_t>(limb));
    d.push_back(static_cast<std::uint32_t>(limb >> 32));
  }
  return trimmed(std::move(d));
}

Digits mod_pow2_ref(Digits d, width_t w) {
  const std::size_t n = (w + 31) / 32;
  if (d.size() > n) d.resize(n);
  if (w % 32 != 0 && d.size() == n) {
    d.back() &= (std::uint32_t{1} << (w % 32)) - 1;
  }
  return trimmed(std::move(d));
}

Digits add_ref(const Digits& x, const Digits& y) {
  Digits out;
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(x.size(), y.size()) || carry != 0;
       ++i) {
    std::uint64_t s = carry;
    if (i < x.size()) s += x[i];
    if (i < y.size()) s += y[i];
    out.push_back(static_cast<std::uint32_t>(s));
    carry = s >> 32;
  }
  return trimmed(std::move(out));
}

Digits sub_mod_ref(const Digits& x, const Digits& y, width_t w) {
  const std::size_t n = (w + 31) / 32;
  Digits out(n, 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d = static_cast<std::int64_t>(i < x.size() ? x[i] : 0) -
                     static_cast<std::int64_t>(i < y.size() ? y[i] : 0) -
                     borrow;
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += std::int64_t{1} << 32;
    out[i] = static_cast<std::uint32_t>(d);
  }
  return mod_pow2_ref(std::move(out), w);
}

Digits mul_ref(const Digits& x, const Digits& y) {
  if (x.empty() || y.empty()) return {};
  Digits out(x.size() + y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < y.size(); ++j) {
      const std::uint64_t t =
          std::uint64_t(x[i]) * y[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(t);
      carry = t >> 32;
    }
    out[i + y.size()] = static_cast<std::uint32_t>(carry);
  }
  return trimmed(std::move(out));
}

Digits shl_ref(const Digits& x, width_t k) {
  Digits out(x.size() + k / 32 + 1, 0);
  const std::size_t off = k / 32;
  const unsigned bo = k % 32;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint64_t v = std::uint64_t(x[i]) << bo;
    out[i + off] |= static_cast<std::uint32_t>(v);
    out[i + off + 1] |= static_cast<std::uint32_t>(v >> 32);
  }
  return trimmed(std::move(out));
}

}  // namespace

TEST_CASE("val2 counts trailing zeros; zero takes the width") {
  CHECK(quad2n::val2(Residue(5, 24)) == 3);
  CHECK(quad2n::val2(Residue(7, 0)) == 7);
  CHECK(quad2n::val2(Residue(64, 1)) == 0);
  CHECK(quad2n::val2(Residue(70, 0)) == 70);
  CHECK(quad2n::val2(Residue::from_nat(65, Nat(1) << 64)) == 64);
}

TEST_CASE("odd_part peels the full power of two") {
  CHECK(quad2n::odd_part(Residue(5, 24)) == Residue(5, 3));
  CHECK(quad2n::odd_part(Residue(8, 1)) == Residue(8, 1));
  CHECK(quad2n::odd_part(Residue(6, 12)) == Residue(6, 3));
  CHECK_THROWS_AS((void)quad2n::odd_part(Residue(4, 0)), std::domain_error);

  std::mt19937_64 rng(101);
  for (int i = 0; i < 200; ++i) {
    const width_t w = 1 + static_cast<width_t>(rng() % 150);
    const Residue x = random_residue(rng, w);
    if (x.is_zero()) continue;
    CHECK(quad2n::shl(quad2n::odd_part(x), quad2n::val2(x)) == x);
    CHECK(quad2n::odd_part(x).is_odd());
  }
}

TEST_CASE("inv_odd inverts units at any width") {
  CHECK(quad2n::inv_odd(Residue(8, 1)) == Residue(8, 1));
  CHECK(quad2n::inv_odd(Residue(5, 3)) == Residue(5, 11));
  for (width_t w : {width_t{4}, width_t{20}, width_t{64}, width_t{100}}) {
    // -1 is its own inverse
    const Residue minus_one = Residue(w, 0) - Residue(w, 1);
    CHECK(quad2n::inv_odd(minus_one) == minus_one);
  }
  CHECK_THROWS_AS((void)quad2n::inv_odd(Residue(6, 4)), std::domain_error);
  CHECK_THROWS_AS((void)quad2n::inv_odd(Residue(3, 0)), std::domain_error);

  std::mt19937_64 rng(202);
  for (width_t w : {1, 2, 3, 5, 31, 64, 65, 127, 128, 200, 517, 1000}) {
    for (int i = 0; i < 8; ++i) {
      const Residue a = random_odd(rng, static_cast<width_t>(w));
      CHECK(a * quad2n::inv_odd(a) == Residue(static_cast<width_t>(w), 1));
    }
  }
}

TEST_CASE("ring ops truncate eagerly to the width") {
  CHECK(Residue(5, 6) * Residue(5, 6) == Residue(5, 4));
  CHECK(Residue(5, 30) + Residue(5, 5) == Residue(5, 3));
  CHECK(Residue(5, 3) - Residue(5, 30) == Residue(5, 5));
  CHECK(quad2n::shl(Residue(4, 1), 4) == Residue(4, 0));  // shifted out
  CHECK(quad2n::shl(Residue(4, 1), 2) == Residue(4, 4));
  CHECK(quad2n::shr(Residue(4, 12), 2) == Residue(4, 3));
  CHECK(quad2n::shr(Residue(4, 12), 9) == Residue(4, 0));
  CHECK_THROWS_AS(Residue(4, 1) + Residue(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(Residue(4, 1) * Residue(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(Residue(4, 1) - Residue(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(Residue(0, 0), std::invalid_argument);
}

TEST_CASE("parity indicator") {
  CHECK(quad2n::parity_indicator(4) == 1);
  CHECK(quad2n::parity_indicator(5) == 0);
  CHECK(quad2n::parity_indicator(0) == 1);
  CHECK(quad2n::parity_indicator(-3) == 0);
  CHECK(quad2n::parity_indicator(-4) == 1);
}

TEST_CASE("ring ops agree with a naive base-2^32 model") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int iter = 0; iter < 400; ++iter) {
    const width_t w = 1 + static_cast<width_t>(rng() % 200);
    const Residue x = random_residue(rng, w);
    const Residue y = random_residue(rng, w);
    CHECK(to_digits(x + y) ==
          mod_pow2_ref(add_ref(to_digits(x), to_digits(y)), w));
    CHECK(to_digits(x - y) == sub_mod_ref(to_digits(x), to_digits(y), w));
    CHECK(to_digits(x * y) ==
          mod_pow2_ref(mul_ref(to_digits(x), to_digits(y)), w));
    const width_t k = static_cast<width_t>(rng() % (w + 8));
    CHECK(to_digits(quad2n::shl(x, k)) ==
          mod_pow2_ref(shl_ref(to_digits(x), k), w));
  }
}

TEST_CASE("squares of odd elements are 1 mod 8") {
  for (width_t w = 3; w <= 8; ++w) {
    for (std::uint64_t a = 1; a < (std::uint64_t{1} << w); a += 2) {
      CHECK((Residue(w, a) * Residue(w, a)).low_bits(3) == 1);
    }
  }
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << 16); a += 2) {
    const Residue r(16, a);
    CHECK((r * r).low_bits(3) == 1);
  }
}

TEST_CASE("narrowing, widening, and word extraction") {
  CHECK(Residue::from_nat(4, Nat(0x1f)) == Residue(4, 0xf));
  CHECK(Residue(4, 9).zero_extended(10) == Residue(10, 9));
  CHECK(Residue(10, 521).truncated(4) == Residue(4, 9));
  CHECK_THROWS_AS(Residue(4, 1).truncated(5), std::invalid_argument);
  CHECK_THROWS_AS(Residue(4, 1).zero_extended(3), std::invalid_argument);
  const Residue big = Residue::from_nat(70, Nat(1) << 69);
  CHECK_THROWS_AS((void)big.to_u64(), std::overflow_error);
  CHECK(big.low_bits(64) == 0);
  CHECK(big.bit(69));
  CHECK(!big.bit(68));
  CHECK(Residue(9, 0x1b5).low_bits(4) == 5);
  CHECK(Residue(64, 77).to_u64() == 77);
  CHECK(Residue(5, 21).value() == Nat(21));
}

TEST_CASE("residues stay exact at a million bits") {
  const width_t w = width_t{1} << 20;
  const Residue hi = quad2n::shl(Residue(w, 1), w - 1);
  CHECK(quad2n::val2(hi) == w - 1);
  CHECK(quad2n::odd_part(hi) == Residue(w, 1));
  CHECK((hi + hi).is_zero());
  CHECK(quad2n::val2(Residue(w, 0)) == w);

  // A full Newton inversion at a quarter-million bits.
  std::mt19937_64 rng(303);
  const width_t wi = width_t{1} << 18;
  const Residue a = random_odd(rng, wi);
  CHECK(a * quad2n::inv_odd(a) == Residue(wi, 1));
}
