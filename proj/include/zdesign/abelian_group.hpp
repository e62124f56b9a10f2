#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <vector>

#include "zdesign/errors.hpp"
#include "zdesign/finite_field.hpp"

namespace zdesign {

/// Product of cyclic groups Z_{n_1} x ... x Z_{n_r}.
struct AbelianGroup {
  std::vector<std::int64_t> moduli;
  std::int64_t order{1};

  bool operator==(const AbelianGroup&) const = default;
};

AbelianGroup make_group(std::vector<std::int64_t> moduli);

struct GroupElement {
  std::vector<std::int64_t> residues;

  auto operator<=>(const GroupElement&) const = default;
};

/// Exponent vector m; the character value at s is exp(2*pi*i sum_j m_j s_j / n_j).
struct CharacterIndex {
  std::vector<std::int64_t> exponents;

  auto operator<=>(const CharacterIndex&) const = default;
};

GroupElement g_zero(const AbelianGroup& g);
GroupElement g_add(const AbelianGroup& g, const GroupElement& a,
                   const GroupElement& b);
GroupElement g_sub(const AbelianGroup& g, const GroupElement& a,
                   const GroupElement& b);
GroupElement g_neg(const AbelianGroup& g, const GroupElement& a);

/// The phase is reduced mod 1 in exact integer arithmetic over a common
/// denominator before the single transcendental evaluation.
std::complex<double> char_eval(const AbelianGroup& g, const CharacterIndex& m,
                               const GroupElement& s);

constexpr std::int64_t default_group_cap = std::int64_t{1} << 22;

/// All |G| character indices in lexicographic exponent order.
std::vector<CharacterIndex> characters(const AbelianGroup& g,
                                       std::int64_t cap = default_group_cap);

/// Lexicographic enumeration of elements (first coordinate most significant).
std::int64_t element_index(const AbelianGroup& g, const GroupElement& e);
GroupElement element_at(const AbelianGroup& g, std::int64_t index);
std::vector<GroupElement> elements(const AbelianGroup& g,
                                   std::int64_t cap = default_group_cap);

/// (F_q, +) as (Z_p)^k with the coefficient-vector bijection.
struct AdditiveBijection {
  AbelianGroup group;
  const FieldTable* field;

  GroupElement to_group(std::int64_t x) const;
  std::int64_t to_field(const GroupElement& e) const;
};
AdditiveBijection additive_group_of(const FieldTable& field);

/// F_q^x as Z_{q-1} with the discrete-log bijection.
struct MultiplicativeBijection {
  AbelianGroup group;
  const FieldTable* field;

  GroupElement to_group(std::int64_t x) const;
  std::int64_t to_field(const GroupElement& e) const;
};
MultiplicativeBijection mult_group_of(const FieldTable& field);

/// GF(q^m)^x / GF(q)^x as Z_{(q^m-1)/(q-1)}; the class of g^i maps to
/// i mod (q^m-1)/(q-1).
struct QuotientBijection {
  AbelianGroup group;
  const FieldTable* field;
  std::int64_t base_q{};

  GroupElement class_of(std::int64_t x) const;
};
QuotientBijection quotient_mult_group(const FieldTable& ext,
                                      std::int64_t base_q);
QuotientBijection quotient_mult_group(const FieldTable& ext,
                                      const FieldTable& base);

}  // namespace zdesign
