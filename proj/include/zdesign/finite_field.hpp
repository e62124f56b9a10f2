#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zdesign/errors.hpp"

namespace zdesign {

struct PrimePower {
  std::int64_t p{};  // prime
  int k{};           // exponent
  std::int64_t q{};  // p^k
};

bool is_prime(std::int64_t n);
std::optional<PrimePower> is_prime_power(std::int64_t n);
std::int64_t smallest_prime_geq(std::int64_t d);
std::int64_t smallest_prime_power_geq(std::int64_t n);
std::int64_t smallest_odd_prime_power_geq(std::int64_t n);

/// Coefficients of the polynomial representative, constant term first;
/// length equals the extension degree k, entries in [0, p).
using FieldElement = std::vector<std::int64_t>;

/// Exact arithmetic tables for GF(p^k).
///
/// Elements are identified with integers in [0, q) via the base-p encoding
/// c0 + c1*p + ... + c_{k-1}*p^{k-1}.  The modulus is the lexicographically
/// smallest monic irreducible of degree k over Z_p (coefficient vectors
/// compared constant-term first), and the generator is the lexicographically
/// smallest primitive element, so tables are identical across runs.
/// Immutable after construction; safe for concurrent reads.
class FieldTable {
 public:
  static constexpr std::int64_t default_cap = std::int64_t{1} << 20;

  explicit FieldTable(std::int64_t q, std::int64_t cap = default_cap);

  const PrimePower& prime_power() const { return pp_; }
  std::int64_t q() const { return pp_.q; }
  std::int64_t p() const { return pp_.p; }
  int k() const { return pp_.k; }

  /// Monic modulus polynomial, length k+1, constant term first.
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::int64_t generator() const { return generator_; }

  FieldElement decode(std::int64_t x) const;
  std::int64_t encode(const FieldElement& coeffs) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const;
  std::int64_t sub(std::int64_t a, std::int64_t b) const;
  std::int64_t neg(std::int64_t a) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t inv(std::int64_t a) const;  // DivisionByZero for a = 0
  std::int64_t pow(std::int64_t a, std::int64_t e) const;

  /// i in [0, q-1) with generator^i = a.  DivisionByZero for a = 0.
  std::int64_t discrete_log(std::int64_t a) const;
  /// generator^i; i taken mod q-1.
  std::int64_t antilog(std::int64_t i) const;

  /// x + x^s + ... + x^{s^{m-1}} for s = subfield_q with s^m = q.  The result
  /// lies in the order-s subfield but is returned in this field's encoding.
  /// IncompatibleFields unless subfield_q = p^j with j dividing k.
  std::int64_t trace_raw(std::int64_t subfield_q, std::int64_t x) const;

 private:
  PrimePower pp_;
  std::vector<std::int64_t> modulus_;
  std::int64_t generator_{};
  std::vector<std::int32_t> log_;
  std::vector<std::int32_t> antilog_;
};

/// Embedding of a base field into an extension over the same prime.
///
/// The image of the base field's polynomial generator is the lexicographically
/// smallest root of the base modulus in the extension, so the embedding is
/// deterministic.  Both tables must outlive the extension.
class FieldExtension {
 public:
  FieldExtension(const FieldTable& ext, const FieldTable& base);

  const FieldTable& ext() const { return *ext_; }
  const FieldTable& base() const { return *base_; }
  int degree() const { return degree_; }

  std::int64_t embed(std::int64_t base_elem) const;
  /// Inverse of embed; IncompatibleFields if the element is outside the image.
  std::int64_t to_base(std::int64_t ext_elem) const;
  /// Trace down to the base field, returned in the base field's encoding.
  std::int64_t trace(std::int64_t ext_elem) const;

 private:
  const FieldTable* ext_;
  const FieldTable* base_;
  int degree_;
  std::vector<std::int64_t> embed_;
  std::vector<std::int32_t> to_base_;
};

}  // namespace zdesign
