#include "zdesign/finite_field.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace zdesign {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<PrimePower> is_prime_power(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = n;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      p = f;
      break;
    }
  }
  int k = 0;
  std::int64_t m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  if (m != 1) return std::nullopt;
  return PrimePower{p, k, n};
}

std::int64_t smallest_prime_geq(std::int64_t d) {
  std::int64_t n = std::max<std::int64_t>(d, 2);
  while (!is_prime(n)) ++n;
  return n;
}

std::int64_t smallest_prime_power_geq(std::int64_t n) {
  std::int64_t m = std::max<std::int64_t>(n, 2);
  while (!is_prime_power(m)) ++m;
  return m;
}

std::int64_t smallest_odd_prime_power_geq(std::int64_t n) {
  std::int64_t m = std::max<std::int64_t>(n, 3);
  for (;; ++m) {
    auto pp = is_prime_power(m);
    if (pp && pp->p != 2) return m;
  }
}

namespace {

// Dense polynomials over Z_p, constant term first.
using Poly = std::vector<std::int64_t>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

// Remainder of f modulo monic g (degree(g) >= 1).
Poly poly_rem(Poly f, const Poly& g, std::int64_t p) {
  const int dg = degree(g);
  for (int i = degree(f); i >= dg; --i) {
    const std::int64_t c = f[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      std::int64_t& r = f[i - dg + j];
      r = (r - c * g[j]) % p;
      if (r < 0) r += p;
    }
  }
  f.resize(dg);
  return f;
}

// Product of a and b (both degree < k) modulo the monic degree-k modulus.
Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& modulus,
                  std::int64_t p) {
  const int k = static_cast<int>(modulus.size()) - 1;
  Poly r(2 * k - 1, 0);
  for (int i = 0; i < k; ++i) {
    if (a.size() <= static_cast<size_t>(i) || a[i] == 0) continue;
    for (int j = 0; j < k; ++j) {
      if (b.size() <= static_cast<size_t>(j) || b[j] == 0) continue;
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
  }
  // Reduce by the monic modulus.
  for (int i = 2 * k - 2; i >= k; --i) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (int j = 0; j < k; ++j) {
      std::int64_t& x = r[i - k + j];
      x = (x - c * modulus[j]) % p;
      if (x < 0) x += p;
    }
    r[i] = 0;
  }
  r.resize(k);
  return r;
}

Poly poly_pow_mod(Poly base, std::int64_t e, const Poly& modulus,
                  std::int64_t p) {
  const int k = static_cast<int>(modulus.size()) - 1;
  Poly r(k, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, base, modulus, p);
    base = poly_mul_mod(base, base, modulus, p);
    e >>= 1;
  }
  return r;
}

bool poly_is_one(const Poly& f) {
  if (f.empty() || f[0] != 1) return false;
  for (size_t i = 1; i < f.size(); ++i) {
    if (f[i] != 0) return false;
  }
  return true;
}

// Enumerates monic degree-d polynomials and tests whether any divides f.
bool has_monic_divisor_of_degree(const Poly& f, int d, std::int64_t p) {
  Poly g(d + 1, 0);
  g[d] = 1;
  std::int64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (std::int64_t t = 0; t < count; ++t) {
    std::int64_t v = t;
    for (int i = 0; i < d; ++i) {
      g[i] = v % p;
      v /= p;
    }
    if (degree(poly_rem(f, g, p)) < 0) return true;
  }
  return false;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> fs;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      fs.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Lexicographically smallest monic irreducible of degree k over Z_p,
// comparing the non-leading coefficient vector constant-term first.
// Irreducibility by trial division against all monic degrees <= k/2.
Poly find_modulus(std::int64_t p, int k) {
  Poly m(k + 1, 0);
  m[k] = 1;
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t t = 0; t < count; ++t) {
    // Lex order: constant coefficient varies slowest.
    std::int64_t v = t;
    for (int i = k - 1; i >= 0; --i) {
      m[i] = v % p;
      v /= p;
    }
    bool reducible = false;
    for (int d = 1; 2 * d <= k && !reducible; ++d) {
      reducible = has_monic_divisor_of_degree(m, d, p);
    }
    if (!reducible) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

FieldTable::FieldTable(std::int64_t q, std::int64_t cap) {
  auto pp = is_prime_power(q);
  if (!pp) {
    throw NotAPrimePower("q = " + std::to_string(q) + " is not a prime power");
  }
  if (q > cap) {
    throw CapExceeded("field size " + std::to_string(q) + " exceeds cap " +
                      std::to_string(cap));
  }
  pp_ = *pp;
  const std::int64_t p = pp_.p;
  const int k = pp_.k;

  modulus_ = (k == 1) ? Poly{0, 1} : find_modulus(p, k);

  // Generator: lexicographically smallest element of multiplicative
  // order q-1, located via the prime factorization of q-1.
  const auto factors = prime_factors(q - 1);
  Poly gen;
  for (std::int64_t t = 1; t < q; ++t) {
    Poly c(k, 0);
    std::int64_t v = t;
    for (int i = k - 1; i >= 0; --i) {
      c[i] = v % p;
      v /= p;
    }
    bool primitive = true;
    for (std::int64_t r : factors) {
      if (poly_is_one(poly_pow_mod(c, (q - 1) / r, modulus_, p))) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = c;
      break;
    }
  }
  assert(!gen.empty());

  log_.assign(q, -1);
  antilog_.assign(q - 1, 0);
  Poly cur(k, 0);
  cur[0] = 1;
  for (std::int64_t i = 0; i < q - 1; ++i) {
    std::int64_t idx = 0;
    for (int j = k - 1; j >= 0; --j) idx = idx * p + cur[j];
    antilog_[i] = static_cast<std::int32_t>(idx);
    log_[idx] = static_cast<std::int32_t>(i);
    cur = poly_mul_mod(cur, gen, modulus_, p);
  }
  generator_ = antilog_[q > 2 ? 1 : 0];
  if (q == 2) generator_ = 1;
}

FieldElement FieldTable::decode(std::int64_t x) const {
  FieldElement c(pp_.k);
  for (int i = 0; i < pp_.k; ++i) {
    c[i] = x % pp_.p;
    x /= pp_.p;
  }
  return c;
}

std::int64_t FieldTable::encode(const FieldElement& coeffs) const {
  if (coeffs.size() != static_cast<size_t>(pp_.k)) {
    throw IncompatibleFields("coefficient vector has wrong length");
  }
  std::int64_t x = 0;
  for (int i = pp_.k - 1; i >= 0; --i) {
    if (coeffs[i] < 0 || coeffs[i] >= pp_.p) {
      throw IncompatibleFields("coefficient out of range");
    }
    x = x * pp_.p + coeffs[i];
  }
  return x;
}

std::int64_t FieldTable::add(std::int64_t a, std::int64_t b) const {
  std::int64_t r = 0, pw = 1;
  for (int i = 0; i < pp_.k; ++i) {
    r += ((a + b) % pp_.p) * pw;
    a /= pp_.p;
    b /= pp_.p;
    pw *= pp_.p;
  }
  return r;
}

std::int64_t FieldTable::neg(std::int64_t a) const {
  std::int64_t r = 0, pw = 1;
  for (int i = 0; i < pp_.k; ++i) {
    r += ((pp_.p - a % pp_.p) % pp_.p) * pw;
    a /= pp_.p;
    pw *= pp_.p;
  }
  return r;
}

std::int64_t FieldTable::sub(std::int64_t a, std::int64_t b) const {
  return add(a, neg(b));
}

std::int64_t FieldTable::mul(std::int64_t a, std::int64_t b) const {
  if (a == 0 || b == 0) return 0;
  return antilog_[(log_[a] + log_[b]) % (pp_.q - 1)];
}

std::int64_t FieldTable::inv(std::int64_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return antilog_[(pp_.q - 1 - log_[a]) % (pp_.q - 1)];
}

std::int64_t FieldTable::pow(std::int64_t a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw DivisionByZero("negative power of zero");
    return 0;
  }
  const std::int64_t n = pp_.q - 1;
  std::int64_t r = (log_[a] * (e % n)) % n;
  if (r < 0) r += n;
  return antilog_[r];
}

std::int64_t FieldTable::discrete_log(std::int64_t a) const {
  if (a == 0) throw DivisionByZero("discrete log of zero");
  return log_[a];
}

std::int64_t FieldTable::antilog(std::int64_t i) const {
  const std::int64_t n = pp_.q - 1;
  return antilog_[((i % n) + n) % n];
}

std::int64_t FieldTable::trace_raw(std::int64_t subfield_q,
                                   std::int64_t x) const {
  auto sub = is_prime_power(subfield_q);
  if (!sub || sub->p != pp_.p || pp_.k % sub->k != 0) {
    throw IncompatibleFields("GF(" + std::to_string(subfield_q) +
                             ") is not a subfield of GF(" +
                             std::to_string(pp_.q) + ")");
  }
  const int m = pp_.k / sub->k;
  std::int64_t acc = 0, y = x;
  for (int i = 0; i < m; ++i) {
    acc = add(acc, y);
    y = pow(y, subfield_q);
  }
  return acc;
}

FieldExtension::FieldExtension(const FieldTable& ext, const FieldTable& base)
    : ext_(&ext), base_(&base) {
  if (ext.p() != base.p() || ext.k() % base.k() != 0) {
    throw IncompatibleFields("GF(" + std::to_string(base.q()) +
                             ") is not a subfield of GF(" +
                             std::to_string(ext.q()) + ")");
  }
  degree_ = ext.k() / base.k();

  // Lexicographically smallest root of the base modulus in the extension.
  const auto& m = base.modulus();
  std::int64_t root = -1;
  const std::int64_t p = ext.p();
  const int ek = ext.k();
  for (std::int64_t t = 0; t < ext.q() && root < 0; ++t) {
    std::int64_t v = t;
    FieldElement c(ek);
    for (int i = ek - 1; i >= 0; --i) {
      c[i] = v % p;
      v /= p;
    }
    const std::int64_t u = ext.encode(c);
    std::int64_t val = 1;  // leading coefficient of the monic modulus
    for (int i = base.k() - 1; i >= 0; --i) {
      val = ext.add(ext.mul(val, u), m[i]);
    }
    if (val == 0) root = u;
  }
  if (root < 0) throw IncompatibleFields("base modulus has no root");

  embed_.assign(base.q(), 0);
  to_base_.assign(ext.q(), -1);
  for (std::int64_t s = 0; s < base.q(); ++s) {
    const FieldElement c = base.decode(s);
    std::int64_t val = 0;
    for (int i = base.k() - 1; i >= 0; --i) {
      val = ext.add(ext.mul(val, root), c[i]);
    }
    embed_[s] = val;
    assert(to_base_[val] == -1);
    to_base_[val] = static_cast<std::int32_t>(s);
  }
}

std::int64_t FieldExtension::embed(std::int64_t base_elem) const {
  return embed_.at(base_elem);
}

std::int64_t FieldExtension::to_base(std::int64_t ext_elem) const {
  const std::int32_t s = to_base_.at(ext_elem);
  if (s < 0) {
    throw IncompatibleFields("element does not lie in the base field");
  }
  return s;
}

std::int64_t FieldExtension::trace(std::int64_t ext_elem) const {
  return to_base(ext_->trace_raw(base_->q(), ext_elem));
}

}  // namespace zdesign
