#include "zdesign/zauner_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace zdesign {

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Base list from the September 2017 survey of published exact SICs, plus the
// later published dimensions 23, 52, 67, 103.
constexpr std::int64_t base_sic_dims[] = {
    1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12, 13, 14,  15,  16, 17,
    18, 19, 20, 21, 24, 28, 30, 31, 35, 37, 39, 43, 48, 124, 323};
constexpr std::int64_t added_sic_dims[] = {23, 52, 67, 103};

}  // namespace

SicData default_sic_data() {
  SicData data;
  data.source = "built-in";
  std::string bytes;
  for (std::int64_t d : base_sic_dims) {
    data.dims.insert(d);
  }
  for (std::int64_t d : added_sic_dims) {
    data.dims.insert(d);
  }
  for (std::int64_t d : data.dims) bytes += std::to_string(d) + "\n";
  data.hash = fnv1a(bytes);
  return data;
}

SicData load_sic_data(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open SIC data file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();

  SicData data;
  data.source = path;
  data.hash = fnv1a(content);
  std::istringstream ls(content);
  std::string line;
  std::int64_t lineno = 0;
  while (std::getline(ls, line)) {
    ++lineno;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.resize(hash_pos);
    std::istringstream ts(line);
    std::int64_t d;
    if (ts >> d) {
      if (d < 1) {
        throw ParseError(path + ":" + std::to_string(lineno) +
                         ": dimensions must be positive");
      }
      data.dims.insert(d);
    }
  }
  return data;
}

std::optional<std::int64_t> bound_b(std::int64_t d, int k_cap) {
  for (std::int64_t k = 1; k <= k_cap; ++k) {
    if (is_prime_power(k * d + 1)) return k * d * d + 2 * d;
  }
  return std::nullopt;
}

std::optional<std::int64_t> bound_c(std::int64_t d) {
  if (!is_prime_power(d - 1)) return std::nullopt;
  return d * d + 1;
}

std::optional<std::int64_t> bound_d(std::int64_t d) {
  if (!is_prime_power(d)) return std::nullopt;
  return d * d + d - 1;
}

std::int64_t bound_e(std::int64_t d) {
  const std::int64_t pairs = d * (d + 1) / 2;
  return pairs * pairs;
}

std::optional<std::int64_t> bound_sic(std::int64_t d, const SicData& data) {
  if (!data.dims.count(d)) return std::nullopt;
  return d * d;
}

SidonBound bound_sidon(std::int64_t d) {
  SidonBound sb;
  sb.witness = m_known(d);
  sb.value = sb.witness.group_order + d;
  sb.label = m_known_label(sb.witness);
  return sb;
}

BoundRecord make_record(std::int64_t d, const SicData& data, int k_cap) {
  BoundRecord r;
  r.d = d;
  r.lower = d * d;
  r.sic = bound_sic(d, data);
  r.b = bound_b(d, k_cap);
  r.c = bound_c(d);
  r.d_bound = bound_d(d);
  r.e = bound_e(d);
  r.sidon = bound_sidon(d);

  struct Cand {
    std::int64_t value;
    std::string source;
  };
  std::vector<Cand> cands;
  if (r.sic) cands.push_back({*r.sic, "sic"});
  if (r.b) cands.push_back({*r.b, "b"});
  if (r.c) cands.push_back({*r.c, "c"});
  if (r.d_bound) cands.push_back({*r.d_bound, "d"});
  cands.push_back({r.e, "e"});
  cands.push_back({r.sidon.value, "sidon[" + r.sidon.label + "]"});

  r.best = cands[0].value;
  for (const auto& c : cands) r.best = std::min(r.best, c.value);
  for (const auto& c : cands) {
    if (c.value == r.best) {
      if (!r.best_source.empty()) r.best_source += "+";
      r.best_source += c.source;
    }
  }
  return r;
}

std::vector<BoundRecord> table_records(std::int64_t d_max, const SicData& data,
                                       int k_cap) {
  std::vector<BoundRecord> rows;
  for (std::int64_t d = 2; d <= d_max; ++d) {
    rows.push_back(make_record(d, data, k_cap));
  }
  return rows;
}

namespace {

std::string opt_str(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : std::string();
}

char hex_digit(std::uint64_t v) {
  return "0123456789abcdef"[v & 0xf];
}

std::string hex64(std::uint64_t h) {
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex_digit(h);
    h >>= 4;
  }
  return s;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<BoundRecord>& rows,
               const SicData& data) {
  os << "# sic-data: " << data.source << "\n";
  os << "# sic-data-hash: " << hex64(data.hash) << "\n";
  os << "d,lower,sic,b,c,d_bound,e,sidon,sidon_witness,best,best_source\n";
  for (const auto& r : rows) {
    os << r.d << "," << r.lower << "," << opt_str(r.sic) << "," << opt_str(r.b)
       << "," << opt_str(r.c) << "," << opt_str(r.d_bound) << "," << r.e << ","
       << r.sidon.value << "," << r.sidon.label << "," << r.best << ","
       << r.best_source << "\n";
  }
}

void write_markdown(std::ostream& os, const std::vector<BoundRecord>& rows,
                    const SicData& data) {
  os << "sic-data: " << data.source << " (hash " << hex64(data.hash) << ")\n\n";
  os << "| d | d^2 | previous bound | source | Sidon bound | witness |\n";
  os << "|---|-----|----------------|--------|-------------|--------|\n";
  for (const auto& r : rows) {
    std::int64_t prev = r.e;
    std::string prev_src = "e";
    auto take = [&](const std::optional<std::int64_t>& v, const char* tag) {
      if (v && *v < prev) {
        prev = *v;
        prev_src = tag;
      }
    };
    take(r.sic, "sic");
    take(r.b, "b");
    take(r.c, "c");
    take(r.d_bound, "d");

    const bool sidon_best = r.sidon.value <= prev;
    const bool prev_best = prev <= r.sidon.value;
    const bool tight = r.best == r.lower;

    auto bold = [](std::int64_t v, bool on) {
      const std::string s = std::to_string(v);
      return on ? "**" + s + "**" : s;
    };
    os << "| " << r.d << " | " << bold(r.lower, tight) << " | "
       << bold(prev, prev_best) << " | " << prev_src << " | "
       << bold(r.sidon.value, sidon_best) << " | " << r.sidon.label << " |\n";
  }
}

RowCase classify_row(const BoundRecord& row) {
  if (row.sic) return RowCase::SicKnown;
  std::int64_t prev = row.e;
  if (row.b) prev = std::min(prev, *row.b);
  if (row.c) prev = std::min(prev, *row.c);
  if (row.d_bound) prev = std::min(prev, *row.d_bound);
  if (row.sidon.value < prev) return RowCase::SidonBetter;
  if (row.sidon.value == prev) return RowCase::Tie;
  throw std::logic_error("Sidon bound strictly worse at d = " +
                         std::to_string(row.d));
}

AsymptoticReport asymptotic_check(std::int64_t d_max) {
  AsymptoticReport rep;
  for (std::int64_t d = 2; d <= d_max; ++d) {
    const MKnown m = m_known(d);
    const std::int64_t p = smallest_prime_geq(d);
    if (m.group_order > p * p) rep.prime_square_ok = false;
    if (m.group_order + d < d * d + 1) rep.lower_ok = false;
    const double ratio =
        static_cast<double>(m.group_order + d - d * d) /
        std::pow(static_cast<double>(d), 1.525);
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.argmax = d;
    }
  }
  return rep;
}

}  // namespace zdesign
