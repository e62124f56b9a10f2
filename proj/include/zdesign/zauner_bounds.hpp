#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zdesign/sidon.hpp"

namespace zdesign {

/// Dimensions with a published exact SIC.  Shipped as configuration, not
/// ground truth; the table header records the source and a content hash.
struct SicData {
  std::set<std::int64_t> dims;
  std::string source;
  std::uint64_t hash = 0;
};

SicData default_sic_data();
SicData load_sic_data(const std::string& path);

constexpr int default_k_cap = 16;

std::optional<std::int64_t> bound_b(std::int64_t d, int k_cap = default_k_cap);
std::optional<std::int64_t> bound_c(std::int64_t d);
std::optional<std::int64_t> bound_d(std::int64_t d);
std::int64_t bound_e(std::int64_t d);
std::optional<std::int64_t> bound_sic(std::int64_t d, const SicData& data);

struct SidonBound {
  std::int64_t value{};
  MKnown witness;
  std::string label;  // e.g. "Hughes(27)-3"
};

SidonBound bound_sidon(std::int64_t d);

struct BoundRecord {
  std::int64_t d{};
  std::int64_t lower{};  // d^2
  std::optional<std::int64_t> sic, b, c, d_bound;
  std::int64_t e{};
  SidonBound sidon;
  std::int64_t best{};
  std::string best_source;  // tie -> all sources joined with '+'
};

BoundRecord make_record(std::int64_t d, const SicData& data,
                        int k_cap = default_k_cap);
std::vector<BoundRecord> table_records(std::int64_t d_max, const SicData& data,
                                       int k_cap = default_k_cap);

void write_csv(std::ostream& os, const std::vector<BoundRecord>& rows,
               const SicData& data);
void write_markdown(std::ostream& os, const std::vector<BoundRecord>& rows,
                    const SicData& data);

enum class RowCase { SicKnown, Tie, SidonBetter };

/// Per-row classification; throws std::logic_error if the Sidon bound is
/// strictly worse than the previous bounds (which would break the trichotomy).
RowCase classify_row(const BoundRecord& row);

struct AsymptoticReport {
  double max_ratio = 0.0;   // max over d of (m_known(d)+d-d^2)/d^1.525
  std::int64_t argmax = 0;
  bool prime_square_ok = true;  // m_known(d) <= p(d)^2 everywhere
  bool lower_ok = true;         // m_known(d)+d >= d^2+1 everywhere
};

AsymptoticReport asymptotic_check(std::int64_t d_max);

}  // namespace zdesign
