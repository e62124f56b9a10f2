#include "zdesign/bh_design.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace zdesign {

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw DivisionByZero("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  num = g ? n / g : n;
  den = g ? d / g : d;
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

namespace {

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

std::string join_int64(const std::vector<std::int64_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

WeightedDesign bodmann_haas(const SidonSet& s) {
  const int d = static_cast<int>(s.elements.size());
  if (d == 0) throw EmptySet("Bodmann-Haas construction needs |S| >= 1");
  const auto& g = s.group;

  WeightedDesign out;
  out.dim = d;
  out.source = s;
  const std::int64_t n = g.order + d;
  out.vectors.reserve(n);
  out.weights.reserve(n);
  out.exact_weights.reserve(n);
  out.labels.reserve(n);

  const Rational w_char(static_cast<std::int64_t>(d) * d, 2 * g.order);
  const Rational w_basis(1, 2);
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));

  for (const auto& alpha : characters(g)) {
    Eigen::VectorXcd v(d);
    for (int i = 0; i < d; ++i) {
      v[i] = inv_sqrt_d * char_eval(g, alpha, s.elements[i]);
    }
    out.vectors.push_back(std::move(v));
    out.weights.push_back(w_char.value());
    out.exact_weights.push_back(w_char);
    out.labels.push_back("char " + join_int64(alpha.exponents));
  }
  for (int r = 0; r < d; ++r) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v[r] = 1.0;
    out.vectors.push_back(std::move(v));
    out.weights.push_back(w_basis.value());
    out.exact_weights.push_back(w_basis);
    out.labels.push_back("basis " + join_int64(s.elements[r].residues));
  }
  return out;
}

Eigen::MatrixXd symmetric_projector(int d, int cap) {
  if (d > cap) {
    throw DimensionTooLarge("d = " + std::to_string(d) +
                            " exceeds dense cap " + std::to_string(cap));
  }
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(d * d, d * d);
  for (int s = 0; s < d; ++s) {
    for (int sp = 0; sp < d; ++sp) {
      for (int t = 0; t < d; ++t) {
        for (int tp = 0; tp < d; ++tp) {
          p(s * d + sp, t * d + tp) =
              0.5 * ((s == t && sp == tp ? 1.0 : 0.0) +
                     (s == tp && sp == t ? 1.0 : 0.0));
        }
      }
    }
  }
  return p;
}

Eigen::MatrixXcd design_moment(const WeightedDesign& dsn, int cap) {
  const int d = dsn.dim;
  if (d > cap) {
    throw DimensionTooLarge("d = " + std::to_string(d) +
                            " exceeds dense cap " + std::to_string(cap));
  }
  const auto n = static_cast<Eigen::Index>(dsn.vectors.size());
  Eigen::MatrixXcd v(d * d, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& x = dsn.vectors[k];
    const double sw = std::sqrt(dsn.weights[k]);
    for (int s = 0; s < d; ++s) {
      for (int sp = 0; sp < d; ++sp) {
        v(s * d + sp, k) = sw * x[s] * x[sp];
      }
    }
  }
  return v * v.adjoint();
}

double verify_direct(const WeightedDesign& dsn, int cap) {
  const Eigen::MatrixXcd m = design_moment(dsn, cap);
  const Eigen::MatrixXd p = symmetric_projector(dsn.dim, cap);
  return (m - p.cast<std::complex<double>>()).norm();
}

bool direct_certified(double residual, int dim, double tol_scale) {
  return residual <= tol_scale * dim;
}

namespace {

double trace_of_design(const WeightedDesign& dsn) {
  KahanSum tr;
  for (size_t k = 0; k < dsn.vectors.size(); ++k) {
    const double n2 = dsn.vectors[k].squaredNorm();
    tr.add(dsn.weights[k] * n2 * n2);
  }
  return tr.sum;
}

// tr M^2 for a design produced by bodmann_haas, using the group structure:
// |<x_a, x_b>| depends only on the character b - a, and every character /
// basis-vector inner product has modulus 1/sqrt(|S|).
double potential_from_source(const WeightedDesign& dsn) {
  const SidonSet& s = *dsn.source;
  const auto& g = s.group;
  const double d = static_cast<double>(dsn.dim);
  const double order = static_cast<double>(g.order);
  const double w = d * d / (2.0 * order);

  KahanSum quartic;  // sum over characters gamma of |sum_{s in S} gamma(s)|^4
  for (const auto& gamma : characters(g)) {
    KahanSum re, im;
    for (const auto& e : s.elements) {
      const auto z = char_eval(g, gamma, e);
      re.add(z.real());
      im.add(z.imag());
    }
    const double m2 = re.sum * re.sum + im.sum * im.sum;
    quartic.add(m2 * m2);
  }

  KahanSum total;
  total.add(w * w * order * quartic.sum / (d * d * d * d));  // char-char
  total.add(w * order / d);                                  // char-basis
  total.add(d / 4.0);                                        // basis-basis
  return total.sum;
}

double potential_generic(const WeightedDesign& dsn) {
  const int d = dsn.dim;
  const auto n = static_cast<Eigen::Index>(dsn.vectors.size());
  Eigen::MatrixXcd v(d, n);
  for (Eigen::Index k = 0; k < n; ++k) v.col(k) = dsn.vectors[k];

  constexpr Eigen::Index block = 2048;
  KahanSum total;
  for (Eigen::Index jb = 0; jb < n; jb += block) {
    const Eigen::Index jn = std::min(block, n - jb);
    for (Eigen::Index kb = jb; kb < n; kb += block) {
      const Eigen::Index kn = std::min(block, n - kb);
      const Eigen::MatrixXcd gram =
          v.middleCols(jb, jn).adjoint() * v.middleCols(kb, kn);
      for (Eigen::Index j = 0; j < jn; ++j) {
        const Eigen::Index k0 = (jb == kb) ? j : 0;
        for (Eigen::Index k = k0; k < kn; ++k) {
          const double m2 = std::norm(gram(j, k));
          double term = dsn.weights[jb + j] * dsn.weights[kb + k] * m2 * m2;
          if (jb + j != kb + k) term *= 2.0;  // symmetric off-diagonal
          total.add(term);
        }
      }
    }
  }
  return total.sum;
}

}  // namespace

FramePotentialResult verify_frame_potential(const WeightedDesign& dsn,
                                            FramePotentialOptions opts) {
  FramePotentialResult r;
  r.trace_m = trace_of_design(dsn);
  r.potential = (dsn.source && !opts.force_generic)
                    ? potential_from_source(dsn)
                    : potential_generic(dsn);
  const double d = static_cast<double>(dsn.dim);
  const double target = d * (d + 1.0) / 2.0;
  const double tol = opts.abs_tol >= 0 ? opts.abs_tol : opts.tol_scale * d * d;
  r.certified = std::abs(r.trace_m - target) <= tol &&
                std::abs(r.potential - target) <= tol;
  return r;
}

AgreementResult check_agreement(const WeightedDesign& dsn, int cap) {
  AgreementResult a;
  const Eigen::MatrixXcd m = design_moment(dsn, cap);
  const Eigen::MatrixXd p = symmetric_projector(dsn.dim, cap);
  a.residual = (m - p.cast<std::complex<double>>()).norm();
  a.direct_certified = direct_certified(a.residual, dsn.dim);
  a.fp = verify_frame_potential(dsn);
  a.agree = (a.direct_certified == a.fp.certified);

  // ||M - P||_F^2 = tr M^2 - 2 Re tr(MP) + tr P.
  const double tr_mp = m.cwiseProduct(p.cast<std::complex<double>>()).sum().real();
  const double tr_p = dsn.dim * (dsn.dim + 1.0) / 2.0;
  a.consistency_error =
      std::abs(a.residual * a.residual - (a.fp.potential - 2.0 * tr_mp + tr_p));
  return a;
}

Rational weight_sum_exact(const WeightedDesign& dsn) {
  if (dsn.exact_weights.size() != dsn.weights.size()) {
    throw std::logic_error("exact weights unavailable for this design");
  }
  Rational sum(0, 1);
  for (const auto& w : dsn.exact_weights) sum = sum + w;
  return sum;
}

void write_design(std::ostream& os, const WeightedDesign& dsn) {
  os << "dim: " << dsn.dim << "; count: " << dsn.vectors.size() << "\n";
  char buf[64];
  for (size_t k = 0; k < dsn.vectors.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g", dsn.weights[k]);
    os << buf;
    for (int i = 0; i < dsn.dim; ++i) {
      const auto z = dsn.vectors[k][i];
      std::snprintf(buf, sizeof(buf), "%.17g", z.real());
      os << "; " << buf;
      std::snprintf(buf, sizeof(buf), "%.17g", z.imag());
      os << "," << buf;
    }
    os << "\n";
  }
}

WeightedDesign read_design(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw ParseError("missing design header");
  int dim = 0;
  long long count = 0;
  if (std::sscanf(header.c_str(), "dim: %d; count: %lld", &dim, &count) != 2 ||
      dim < 1 || count < 0) {
    throw ParseError("malformed design header: " + header);
  }
  WeightedDesign dsn;
  dsn.dim = dim;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    if (!std::getline(ls, tok, ';')) throw ParseError("bad design line");
    Eigen::VectorXcd v(dim);
    dsn.weights.push_back(std::stod(tok));
    for (int i = 0; i < dim; ++i) {
      if (!std::getline(ls, tok, ';')) {
        throw ParseError("design line has too few coordinates");
      }
      const auto comma = tok.find(',');
      if (comma == std::string::npos) {
        throw ParseError("coordinate missing imaginary part");
      }
      v[i] = {std::stod(tok.substr(0, comma)), std::stod(tok.substr(comma + 1))};
    }
    dsn.vectors.push_back(std::move(v));
    dsn.labels.emplace_back();
  }
  if (static_cast<long long>(dsn.vectors.size()) != count) {
    throw ParseError("design vector count does not match header");
  }
  return dsn;
}

}  // namespace zdesign
