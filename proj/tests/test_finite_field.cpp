#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "zdesign/finite_field.hpp"

using namespace zdesign;

namespace {

std::vector<std::int64_t> prime_powers_upto(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; q <= n; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

// Multiplicative order by brute force, independent of the log tables.
std::int64_t order_by_iteration(const FieldTable& f, std::int64_t x) {
  std::int64_t acc = x;
  for (std::int64_t i = 1;; ++i) {
    if (acc == 1) return i;
    acc = f.mul(acc, x);
  }
}

}  // namespace

TEST_CASE("is_prime_power") {
  auto pp = is_prime_power(8);
  REQUIRE(pp);
  CHECK(pp->p == 2);
  CHECK(pp->k == 3);

  CHECK(!is_prime_power(1));
  CHECK(!is_prime_power(0));
  CHECK(!is_prime_power(12));

  pp = is_prime_power(121);
  REQUIRE(pp);
  CHECK(pp->p == 11);
  CHECK(pp->k == 2);
}

TEST_CASE("make_field basics") {
  FieldTable f7(7);
  // Oracle: 2 has order 3 mod 7, 3 has order 6, so 3 is the smallest
  // primitive root.
  CHECK(order_by_iteration(f7, 2) == 3);
  CHECK(order_by_iteration(f7, 3) == 6);
  CHECK(f7.generator() == 3);

  FieldTable f2(2);
  CHECK(f2.generator() == 1);

  CHECK_THROWS_AS(FieldTable(12), NotAPrimePower);
  CHECK_THROWS_AS(FieldTable(0), NotAPrimePower);
  CHECK_THROWS_AS(FieldTable(1 << 12, 1 << 10), CapExceeded);
}

TEST_CASE("GF(4) arithmetic") {
  FieldTable f4(4);
  CHECK(f4.modulus() == std::vector<std::int64_t>{1, 1, 1});  // x^2 + x + 1
  const std::int64_t w = f4.generator();
  const std::int64_t w2 = f4.mul(w, w);
  CHECK(f4.mul(w, w2) == 1);
  CHECK(f4.add(w, w2) == 1);
}

TEST_CASE("GF(3) addition") {
  FieldTable f3(3);
  CHECK(f3.add(2, 2) == 1);
}

TEST_CASE("field axioms exhaustively for q <= 64") {
  for (std::int64_t q : prime_powers_upto(64)) {
    FieldTable f(q);
    bool ok = true;
    for (std::int64_t a = 0; a < q && ok; ++a) {
      ok = ok && f.add(a, 0) == a && f.mul(a, 1) == a &&
           f.add(a, f.neg(a)) == 0 && (a == 0 || f.mul(a, f.inv(a)) == 1);
      for (std::int64_t b = 0; b < q && ok; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        for (std::int64_t c = 0; c < q && ok; ++c) {
          ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) &&
               f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) &&
               f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK_MESSAGE(ok, "field axioms hold in GF(", q, ")");
  }
}

TEST_CASE("generator has full multiplicative order") {
  for (std::int64_t q : {4, 8, 9, 16, 25, 27, 49, 64}) {
    FieldTable f(q);
    CHECK(order_by_iteration(f, f.generator()) == q - 1);
  }
}

TEST_CASE("discrete logs in GF(7)") {
  FieldTable f7(7);
  CHECK(f7.discrete_log(3) == 1);
  CHECK(f7.discrete_log(1) == 0);
  CHECK(f7.discrete_log(2) == 2);  // 3^2 = 9 = 2 mod 7
  CHECK_THROWS_AS(f7.discrete_log(0), DivisionByZero);
  CHECK_THROWS_AS(f7.inv(0), DivisionByZero);
}

TEST_CASE("trace GF(4) -> GF(2)") {
  FieldTable f4(4), f2(2);
  FieldExtension ext(f4, f2);
  const std::int64_t w = f4.generator();
  // Direct power computation: tr(w) = w + w^2.
  CHECK(f4.add(w, f4.mul(w, w)) == f4.trace_raw(2, w));
  CHECK(ext.trace(w) == 1);
  CHECK(ext.trace(0) == 0);
}

TEST_CASE("trace kernel, linearity, surjectivity") {
  // All compatible pairs with extension size <= 4096.
  const std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {
      {2, 4},  {2, 8},  {2, 16}, {4, 16},  {2, 64},  {4, 64}, {8, 64},
      {3, 9},  {3, 27}, {9, 81}, {3, 81},  {5, 25},  {7, 49}, {5, 125},
      {2, 1024}, {4, 1024}, {32, 1024}, {11, 121}, {13, 169}, {16, 4096}};
  for (const auto& [qsub, q] : pairs) {
    FieldTable big(q), base(qsub);
    FieldExtension ext(big, base);
    std::int64_t kernel = 0;
    bool frobenius_ok = true;
    std::set<std::int64_t> image;
    for (std::int64_t x = 0; x < q; ++x) {
      const std::int64_t t = ext.trace(x);
      image.insert(t);
      if (t == 0) ++kernel;
      // Frobenius fixes trace values: tr(x)^qsub = tr(x).
      const std::int64_t traw = big.trace_raw(qsub, x);
      frobenius_ok = frobenius_ok && big.pow(traw, qsub) == traw;
    }
    CHECK(frobenius_ok);
    CHECK(kernel == q / qsub);  // kernel of a surjective linear map
    CHECK(static_cast<std::int64_t>(image.size()) == qsub);
    // GF(q)-linearity over the embedded base field (sampled at full range
    // for small fields).
    if (q <= 81) {
      for (std::int64_t c = 0; c < qsub; ++c) {
        const std::int64_t ce = ext.embed(c);
        for (std::int64_t x = 0; x < q; ++x) {
          const std::int64_t lhs = ext.trace(big.mul(ce, x));
          const std::int64_t rhs = base.mul(c, ext.trace(x));
          CHECK(lhs == rhs);
        }
      }
    }
  }
  // GF(9) -> GF(3) kernel has exactly 3 elements.
  FieldTable f9(9), f3(3);
  FieldExtension e93(f9, f3);
  std::int64_t kernel = 0;
  for (std::int64_t x = 0; x < 9; ++x) {
    if (e93.trace(x) == 0) ++kernel;
  }
  CHECK(kernel == 3);
}

TEST_CASE("subfield embedding is a field homomorphism") {
  FieldTable f16(16), f4(4);
  FieldExtension ext(f16, f4);
  for (std::int64_t a = 0; a < 4; ++a) {
    CHECK(ext.to_base(ext.embed(a)) == a);
    for (std::int64_t b = 0; b < 4; ++b) {
      CHECK(ext.embed(f4.add(a, b)) == f16.add(ext.embed(a), ext.embed(b)));
      CHECK(ext.embed(f4.mul(a, b)) == f16.mul(ext.embed(a), ext.embed(b)));
    }
  }
  CHECK_THROWS_AS(FieldExtension(f16, FieldTable(8)), IncompatibleFields);
  CHECK_THROWS_AS(f16.trace_raw(3, 1), IncompatibleFields);
}

TEST_CASE("encode and decode round-trip") {
  FieldTable f27(27);
  for (std::int64_t x = 0; x < 27; ++x) {
    CHECK(f27.encode(f27.decode(x)) == x);
    CHECK(f27.decode(x).size() == 3);
  }
}

TEST_CASE("prime helpers") {
  CHECK(smallest_prime_geq(10) == 11);
  CHECK(smallest_prime_geq(7) == 7);
  CHECK(smallest_prime_power_geq(6) == 7);
  CHECK(smallest_prime_power_geq(8) == 8);
  CHECK(smallest_odd_prime_power_geq(2) == 3);
  CHECK(smallest_odd_prime_power_geq(8) == 9);
}
