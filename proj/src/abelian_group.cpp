#include "zdesign/abelian_group.hpp"

#include <numeric>
#include <string>

namespace zdesign {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

void check_same_rank(const AbelianGroup& g, size_t len) {
  if (len != g.moduli.size()) {
    throw GroupMismatch("coordinate vector does not match group rank");
  }
}

}  // namespace

AbelianGroup make_group(std::vector<std::int64_t> moduli) {
  AbelianGroup g;
  g.order = 1;
  for (std::int64_t n : moduli) {
    if (n < 1) throw GroupMismatch("cyclic modulus must be >= 1");
    g.order *= n;
  }
  g.moduli = std::move(moduli);
  return g;
}

GroupElement g_zero(const AbelianGroup& g) {
  return GroupElement{std::vector<std::int64_t>(g.moduli.size(), 0)};
}

GroupElement g_add(const AbelianGroup& g, const GroupElement& a,
                   const GroupElement& b) {
  check_same_rank(g, a.residues.size());
  check_same_rank(g, b.residues.size());
  GroupElement r = a;
  for (size_t j = 0; j < g.moduli.size(); ++j) {
    r.residues[j] = (a.residues[j] + b.residues[j]) % g.moduli[j];
  }
  return r;
}

GroupElement g_neg(const AbelianGroup& g, const GroupElement& a) {
  check_same_rank(g, a.residues.size());
  GroupElement r = a;
  for (size_t j = 0; j < g.moduli.size(); ++j) {
    r.residues[j] = (g.moduli[j] - a.residues[j]) % g.moduli[j];
  }
  return r;
}

GroupElement g_sub(const AbelianGroup& g, const GroupElement& a,
                   const GroupElement& b) {
  return g_add(g, a, g_neg(g, b));
}

std::complex<double> char_eval(const AbelianGroup& g, const CharacterIndex& m,
                               const GroupElement& s) {
  check_same_rank(g, m.exponents.size());
  check_same_rank(g, s.residues.size());
  std::int64_t lcm = 1;
  for (std::int64_t n : g.moduli) lcm = std::lcm(lcm, n);
  std::int64_t num = 0;
  for (size_t j = 0; j < g.moduli.size(); ++j) {
    const std::int64_t n = g.moduli[j];
    const std::int64_t t = (m.exponents[j] % n) * (s.residues[j] % n) % n;
    num = (num + t * (lcm / n)) % lcm;
  }
  return std::polar(1.0, two_pi * static_cast<double>(num) /
                             static_cast<double>(lcm));
}

std::vector<CharacterIndex> characters(const AbelianGroup& g,
                                       std::int64_t cap) {
  if (g.order > cap) {
    throw GroupTooLarge("group order " + std::to_string(g.order) +
                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<CharacterIndex> out;
  out.reserve(g.order);
  CharacterIndex m{std::vector<std::int64_t>(g.moduli.size(), 0)};
  for (std::int64_t i = 0; i < g.order; ++i) {
    out.push_back(m);
    // Odometer: last coordinate fastest, so enumeration is lexicographic.
    for (int j = static_cast<int>(g.moduli.size()) - 1; j >= 0; --j) {
      if (++m.exponents[j] < g.moduli[j]) break;
      m.exponents[j] = 0;
    }
  }
  return out;
}

std::int64_t element_index(const AbelianGroup& g, const GroupElement& e) {
  check_same_rank(g, e.residues.size());
  std::int64_t idx = 0;
  for (size_t j = 0; j < g.moduli.size(); ++j) {
    idx = idx * g.moduli[j] + e.residues[j];
  }
  return idx;
}

GroupElement element_at(const AbelianGroup& g, std::int64_t index) {
  GroupElement e = g_zero(g);
  for (int j = static_cast<int>(g.moduli.size()) - 1; j >= 0; --j) {
    e.residues[j] = index % g.moduli[j];
    index /= g.moduli[j];
  }
  return e;
}

std::vector<GroupElement> elements(const AbelianGroup& g, std::int64_t cap) {
  if (g.order > cap) {
    throw GroupTooLarge("group order " + std::to_string(g.order) +
                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<GroupElement> out;
  out.reserve(g.order);
  for (std::int64_t i = 0; i < g.order; ++i) out.push_back(element_at(g, i));
  return out;
}

GroupElement AdditiveBijection::to_group(std::int64_t x) const {
  return GroupElement{field->decode(x)};
}

std::int64_t AdditiveBijection::to_field(const GroupElement& e) const {
  return field->encode(e.residues);
}

AdditiveBijection additive_group_of(const FieldTable& field) {
  std::vector<std::int64_t> moduli(field.k(), field.p());
  return AdditiveBijection{make_group(std::move(moduli)), &field};
}

GroupElement MultiplicativeBijection::to_group(std::int64_t x) const {
  return GroupElement{{field->discrete_log(x)}};
}

std::int64_t MultiplicativeBijection::to_field(const GroupElement& e) const {
  return field->antilog(e.residues.at(0));
}

MultiplicativeBijection mult_group_of(const FieldTable& field) {
  return MultiplicativeBijection{make_group({field.q() - 1}), &field};
}

GroupElement QuotientBijection::class_of(std::int64_t x) const {
  return GroupElement{{field->discrete_log(x) % group.moduli[0]}};
}

QuotientBijection quotient_mult_group(const FieldTable& ext,
                                      std::int64_t base_q) {
  auto sub = is_prime_power(base_q);
  if (!sub || sub->p != ext.p() || ext.k() % sub->k != 0) {
    throw IncompatibleFields("GF(" + std::to_string(base_q) +
                             ") is not a subfield of GF(" +
                             std::to_string(ext.q()) + ")");
  }
  const std::int64_t n = (ext.q() - 1) / (base_q - 1);
  return QuotientBijection{make_group({n}), &ext, base_q};
}

QuotientBijection quotient_mult_group(const FieldTable& ext,
                                      const FieldTable& base) {
  if (base.p() != ext.p()) {
    throw IncompatibleFields("fields have different characteristic");
  }
  return quotient_mult_group(ext, base.q());
}

}  // namespace zdesign
