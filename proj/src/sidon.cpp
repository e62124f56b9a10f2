#include "zdesign/sidon.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace zdesign {

std::string family_name(Family f) {
  switch (f) {
    case Family::ErdosTuran: return "ErdosTuran";
    case Family::Singer: return "Singer";
    case Family::Bose: return "Bose";
    case Family::Spence: return "Spence";
    case Family::Hughes: return "Hughes";
    case Family::Custom: return "Custom";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "ErdosTuran" || name == "erdos-turan") return Family::ErdosTuran;
  if (name == "Singer" || name == "singer") return Family::Singer;
  if (name == "Bose" || name == "bose") return Family::Bose;
  if (name == "Spence" || name == "spence") return Family::Spence;
  if (name == "Hughes" || name == "hughes") return Family::Hughes;
  if (name == "Custom" || name == "custom") return Family::Custom;
  throw ParseError("unknown family tag: " + name);
}

std::optional<SidonViolation> find_violation(const SidonSet& s) {
  const auto& g = s.group;
  const size_t n = s.elements.size();
  std::unordered_map<std::int64_t, std::pair<size_t, size_t>> sums;
  sums.reserve(n * (n + 1) / 2);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      const std::int64_t key =
          element_index(g, g_add(g, s.elements[i], s.elements[j]));
      auto [it, inserted] = sums.emplace(key, std::make_pair(i, j));
      if (!inserted) {
        const auto [i0, j0] = it->second;
        return SidonViolation{s.elements[i0], s.elements[j0], s.elements[i],
                              s.elements[j]};
      }
    }
  }
  return std::nullopt;
}

bool is_sidon(const SidonSet& s) { return !find_violation(s).has_value(); }

namespace {

void sort_elements(SidonSet& s) {
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()),
                   s.elements.end());
}

std::vector<std::int64_t> concat(std::vector<std::int64_t> a,
                                 const std::vector<std::int64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

SidonSet erdos_turan(std::int64_t q, std::int64_t field_cap) {
  auto pp = is_prime_power(q);
  if (!pp) throw NotAPrimePower("q = " + std::to_string(q));
  if (pp->p == 2) {
    throw EvenCharacteristic("Erdos-Turan requires char(q) > 2");
  }
  FieldTable f(q, field_cap);
  SidonSet s;
  s.group = make_group(std::vector<std::int64_t>(2 * f.k(), f.p()));
  s.family = Family::ErdosTuran;
  s.q = q;
  for (std::int64_t x = 0; x < q; ++x) {
    s.elements.push_back(
        GroupElement{concat(f.decode(x), f.decode(f.mul(x, x)))});
  }
  sort_elements(s);
  return s;
}

SidonSet singer(std::int64_t q, std::int64_t field_cap) {
  auto pp = is_prime_power(q);
  if (!pp) throw NotAPrimePower("q = " + std::to_string(q));
  FieldTable big(q * q * q, field_cap);
  auto quot = quotient_mult_group(big, q);
  SidonSet s;
  s.group = quot.group;
  s.family = Family::Singer;
  s.q = q;
  std::vector<bool> seen(quot.group.order, false);
  for (std::int64_t x = 1; x < big.q(); ++x) {
    if (big.trace_raw(q, x) != 0) continue;
    const GroupElement c = quot.class_of(x);
    if (!seen[c.residues[0]]) {
      seen[c.residues[0]] = true;
      s.elements.push_back(c);
    }
  }
  sort_elements(s);
  if (static_cast<std::int64_t>(s.elements.size()) != q + 1) {
    throw ConstructionSelfCheckFailed("Singer class count != q+1");
  }
  return s;
}

SidonSet bose(std::int64_t q, bool literal_trace_zero, std::int64_t field_cap) {
  auto pp = is_prime_power(q);
  if (!pp) throw NotAPrimePower("q = " + std::to_string(q));
  FieldTable big(q * q, field_cap);
  SidonSet s;
  s.group = make_group({q * q - 1});
  s.family = Family::Bose;
  s.q = q;
  const std::int64_t target = literal_trace_zero ? 0 : 1;
  for (std::int64_t x = 1; x < big.q(); ++x) {
    if (big.trace_raw(q, x) == target) {
      s.elements.push_back(GroupElement{{big.discrete_log(x)}});
    }
  }
  sort_elements(s);
  if (!literal_trace_zero) {
    if (static_cast<std::int64_t>(s.elements.size()) != q || !is_sidon(s)) {
      throw ConstructionSelfCheckFailed("Bose trace-one set failed self check");
    }
  }
  return s;
}

SidonSet spence(std::int64_t q, std::int64_t field_cap) {
  auto pp = is_prime_power(q);
  if (!pp) throw NotAPrimePower("q = " + std::to_string(q));
  FieldTable f(q, field_cap);
  SidonSet s;
  std::vector<std::int64_t> moduli{q - 1};
  for (int i = 0; i < f.k(); ++i) moduli.push_back(f.p());
  s.group = make_group(std::move(moduli));
  s.family = Family::Spence;
  s.q = q;
  for (std::int64_t x = 1; x < q; ++x) {
    s.elements.push_back(GroupElement{concat({f.discrete_log(x)}, f.decode(x))});
  }
  sort_elements(s);
  return s;
}

SidonSet hughes(std::int64_t q, std::int64_t field_cap) {
  auto pp = is_prime_power(q);
  if (!pp) throw NotAPrimePower("q = " + std::to_string(q));
  if (q < 3) throw QTooSmall("Hughes requires q >= 3");
  FieldTable f(q, field_cap);
  SidonSet s;
  s.group = make_group({q - 1, q - 1});
  s.family = Family::Hughes;
  s.q = q;
  for (std::int64_t x = 1; x < q; ++x) {
    const std::int64_t y = f.sub(1, x);
    if (y == 0) continue;
    s.elements.push_back(
        GroupElement{{f.discrete_log(x), f.discrete_log(y)}});
  }
  sort_elements(s);
  return s;
}

SidonSet remove_points(SidonSet s, std::int64_t k) {
  if (k < 0 || k > static_cast<std::int64_t>(s.elements.size())) {
    throw KTooLarge("cannot remove " + std::to_string(k) + " of " +
                    std::to_string(s.elements.size()) + " points");
  }
  s.elements.resize(s.elements.size() - k);
  s.removed += k;
  return s;
}

MKnown m_known(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (d == 1) return MKnown{1, Family::Custom, 0, 0};

  struct Candidate {
    std::int64_t order;
    Family family;
    std::int64_t q;
    std::int64_t size;
  };
  std::vector<Candidate> cands;

  // Tie-break order: Singer, Bose, Spence, Hughes, Erdos-Turan.
  {
    const std::int64_t q = smallest_prime_power_geq(std::max<std::int64_t>(2, d - 1));
    cands.push_back({q * q + q + 1, Family::Singer, q, q + 1});
  }
  {
    const std::int64_t q = smallest_prime_power_geq(d);
    cands.push_back({q * q - 1, Family::Bose, q, q});
  }
  {
    const std::int64_t q = smallest_prime_power_geq(d + 1);
    cands.push_back({q * (q - 1), Family::Spence, q, q - 1});
  }
  {
    const std::int64_t q = smallest_prime_power_geq(std::max<std::int64_t>(3, d + 2));
    cands.push_back({(q - 1) * (q - 1), Family::Hughes, q, q - 2});
  }
  {
    const std::int64_t q = smallest_odd_prime_power_geq(d);
    cands.push_back({q * q, Family::ErdosTuran, q, q});
  }

  const Candidate* best = &cands[0];
  for (const auto& c : cands) {
    if (c.order < best->order) best = &c;
  }
  return MKnown{best->order, best->family, best->q, best->size - d};
}

SidonSet m_known_witness(const MKnown& m, std::int64_t d) {
  if (m.family == Family::Custom) {
    // d = 1: singleton in the trivial group.
    SidonSet s;
    s.group = make_group({1});
    s.elements = {g_zero(s.group)};
    return s;
  }
  SidonSet s;
  switch (m.family) {
    case Family::ErdosTuran: s = erdos_turan(m.q); break;
    case Family::Singer: s = singer(m.q); break;
    case Family::Bose: s = bose(m.q); break;
    case Family::Spence: s = spence(m.q); break;
    case Family::Hughes: s = hughes(m.q); break;
    default: throw std::logic_error("unexpected family");
  }
  const std::int64_t excess = static_cast<std::int64_t>(s.elements.size()) - d;
  return remove_points(std::move(s), excess);
}

std::string m_known_label(const MKnown& m) {
  if (m.family == Family::Custom) return "trivial";
  std::string label = family_name(m.family) + "(" + std::to_string(m.q) + ")";
  if (m.removed > 0) label += "-" + std::to_string(m.removed);
  return label;
}

namespace {

// All multisets of cyclic prime-power factors for groups of order n, one per
// combination of integer partitions of the prime exponents.
std::vector<std::vector<std::int64_t>> abelian_group_shapes(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> factorization;
  std::int64_t m = n;
  for (std::int64_t f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      int e = 0;
      while (m % f == 0) {
        m /= f;
        ++e;
      }
      factorization.emplace_back(f, e);
    }
  }
  if (m > 1) factorization.emplace_back(m, 1);

  // Partitions of e, each in weakly decreasing order.
  auto partitions = [](int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
      if (rem == 0) {
        out.push_back(cur);
        return;
      }
      for (int part = std::min(rem, maxpart); part >= 1; --part) {
        cur.push_back(part);
        self(self, rem - part, part);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    return out;
  };

  std::vector<std::vector<std::int64_t>> shapes{{}};
  if (n == 1) {
    shapes[0].push_back(1);
    return shapes;
  }
  for (const auto& [p, e] : factorization) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& shape : shapes) {
      for (const auto& part : partitions(e)) {
        auto extended = shape;
        for (int a : part) {
          std::int64_t pe = 1;
          for (int i = 0; i < a; ++i) pe *= p;
          extended.push_back(pe);
        }
        next.push_back(std::move(extended));
      }
    }
    shapes = std::move(next);
  }
  return shapes;
}

// Backtracking search for a Sidon subset of size d.  The first element is
// pinned to 0 (the property is translation invariant) and elements are chosen
// with increasing index; used differences are tracked over element indices.
bool group_has_sidon_subset(const AbelianGroup& g, std::int64_t d) {
  const std::int64_t n = g.order;
  if (d * (d - 1) > n - 1) return false;
  std::vector<GroupElement> elems = elements(g);
  std::vector<char> diff_used(n, 0);
  std::vector<std::int64_t> chosen;

  auto rec = [&](auto&& self, std::int64_t from) -> bool {
    if (static_cast<std::int64_t>(chosen.size()) == d) return true;
    for (std::int64_t e = from; e < n; ++e) {
      std::vector<std::int64_t> fresh;
      bool ok = true;
      for (std::int64_t c : chosen) {
        const std::int64_t d1 =
            element_index(g, g_sub(g, elems[e], elems[c]));
        const std::int64_t d2 =
            element_index(g, g_sub(g, elems[c], elems[e]));
        if (diff_used[d1] || diff_used[d2]) {
          ok = false;
          break;
        }
        if (d1 == d2) {
          fresh.push_back(d1);
        } else {
          fresh.push_back(d1);
          fresh.push_back(d2);
        }
        diff_used[d1] = diff_used[d2] = 1;
      }
      if (ok) {
        chosen.push_back(e);
        if (self(self, e + 1)) return true;
        chosen.pop_back();
      }
      for (std::int64_t f : fresh) diff_used[f] = 0;
    }
    return false;
  };

  chosen.push_back(0);
  return rec(rec, 1);
}

}  // namespace

std::int64_t m_exact(std::int64_t d, std::int64_t cap) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (d > cap) {
    throw DTooLarge("m_exact capped at d <= " + std::to_string(cap));
  }
  if (d == 1) return 1;
  for (std::int64_t n = d * d - d + 1;; ++n) {
    for (const auto& shape : abelian_group_shapes(n)) {
      if (group_has_sidon_subset(make_group(shape), d)) return n;
    }
  }
}

void write_sidon(std::ostream& os, const SidonSet& s) {
  os << "group:";
  for (size_t j = 0; j < s.group.moduli.size(); ++j) {
    os << (j ? " x " : " ") << s.group.moduli[j];
  }
  os << "; family: " << family_name(s.family) << "; q: " << s.q
     << "; removed: " << s.removed << "\n";
  for (const auto& e : s.elements) {
    for (size_t j = 0; j < e.residues.size(); ++j) {
      os << (j ? "," : "") << e.residues[j];
    }
    os << "\n";
  }
}

SidonSet read_sidon(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("missing header line");

  auto field_after = [&](const std::string& key) {
    const auto pos = header.find(key);
    if (pos == std::string::npos) throw ParseError("missing '" + key + "'");
    auto end = header.find(';', pos);
    return header.substr(pos + key.size(),
                         end == std::string::npos ? end : end - pos - key.size());
  };

  SidonSet s;
  {
    std::istringstream gs(field_after("group:"));
    std::vector<std::int64_t> moduli;
    std::int64_t n;
    std::string sep;
    while (gs >> n) {
      moduli.push_back(n);
      if (!(gs >> sep)) break;
      if (sep != "x") throw ParseError("malformed group moduli");
    }
    if (moduli.empty()) throw ParseError("empty group moduli");
    s.group = make_group(std::move(moduli));
  }
  {
    std::istringstream fs(field_after("family:"));
    std::string tag;
    fs >> tag;
    s.family = family_from_name(tag);
  }
  s.q = std::stoll(field_after("q:"));
  s.removed = std::stoll(field_after("removed:"));

  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    GroupElement e;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) e.residues.push_back(std::stoll(tok));
    if (e.residues.size() != s.group.moduli.size()) {
      throw ParseError("element has wrong number of coordinates: " + line);
    }
    for (size_t j = 0; j < e.residues.size(); ++j) {
      if (e.residues[j] < 0 || e.residues[j] >= s.group.moduli[j]) {
        throw ParseError("residue out of range: " + line);
      }
    }
    s.elements.push_back(std::move(e));
  }
  return s;
}

}  // namespace zdesign
