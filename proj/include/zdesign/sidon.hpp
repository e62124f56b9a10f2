#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zdesign/abelian_group.hpp"
#include "zdesign/errors.hpp"

namespace zdesign {

enum class Family { ErdosTuran, Singer, Bose, Spence, Hughes, Custom };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Tagged subset of an abelian group.  Elements are kept distinct and in
/// ascending lexicographic order of their coordinates; the Sidon property is
/// not an invariant of the type and is checked explicitly via is_sidon.
struct SidonSet {
  AbelianGroup group;
  std::vector<GroupElement> elements;
  Family family = Family::Custom;
  std::int64_t q = 0;  // 0 when no prime power applies
  std::int64_t removed = 0;
};

struct SidonViolation {
  GroupElement a, b, c, d;  // a + b == c + d with {a,b} != {c,d}
};

/// First violating quadruple in enumeration order, or absent if S is Sidon.
std::optional<SidonViolation> find_violation(const SidonSet& s);
bool is_sidon(const SidonSet& s);

/// {(x, x^2) : x in F_q} inside (Z_p)^{2k}; requires odd characteristic.
SidonSet erdos_turan(std::int64_t q,
                     std::int64_t field_cap = FieldTable::default_cap);

/// Discrete-log classes mod q^2+q+1 of the nonzero trace-zero elements of
/// GF(q^3); q+1 points in Z_{q^2+q+1}.
SidonSet singer(std::int64_t q,
                std::int64_t field_cap = FieldTable::default_cap);

/// Discrete logs of the trace-one elements of GF(q^2); q points in Z_{q^2-1}.
/// With literal_trace_zero, builds the trace-zero level set instead (q-1
/// points, a coset of the order-(q-1) subgroup, badly non-Sidon for q > 2);
/// the default variant asserts |S| = q and the Sidon property.
SidonSet bose(std::int64_t q, bool literal_trace_zero = false,
              std::int64_t field_cap = FieldTable::default_cap);

/// {(x, x) : x in F_q^x} inside Z_{q-1} x (Z_p)^k; q-1 points.
SidonSet spence(std::int64_t q,
                std::int64_t field_cap = FieldTable::default_cap);

/// {(x, y) : x, y != 0, x + y = 1} inside Z_{q-1}^2; q-2 points, q >= 3.
SidonSet hughes(std::int64_t q,
                std::int64_t field_cap = FieldTable::default_cap);

/// Drops the last k elements in canonical order; subsets stay Sidon.
SidonSet remove_points(SidonSet s, std::int64_t k);

/// Best group order over the five families for a size-d Sidon set.
struct MKnown {
  std::int64_t group_order{};
  Family family = Family::Custom;
  std::int64_t q = 0;
  std::int64_t removed = 0;
};

MKnown m_known(std::int64_t d);
SidonSet m_known_witness(const MKnown& m, std::int64_t d);
std::string m_known_label(const MKnown& m);

/// True minimum group order, by exhaustive search over all abelian groups of
/// each order and backtracking over subsets.  Cost explodes; capped at small d.
std::int64_t m_exact(std::int64_t d, std::int64_t cap = 6);

void write_sidon(std::ostream& os, const SidonSet& s);
SidonSet read_sidon(std::istream& is);

}  // namespace zdesign
