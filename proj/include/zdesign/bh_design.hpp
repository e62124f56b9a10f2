#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zdesign/errors.hpp"
#include "zdesign/sidon.hpp"

namespace zdesign {

/// Exact nonnegative rational, kept normalized.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);
  Rational operator+(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Sequence of weighted unit vectors in C^d.  When produced by bodmann_haas
/// the source set is retained so the frame-potential test can evaluate
/// character-vector inner products as character sums; designs read from a
/// file have no source and fall back to the generic Gram accumulation.
struct WeightedDesign {
  int dim = 0;
  std::vector<Eigen::VectorXcd> vectors;
  std::vector<double> weights;
  std::vector<Rational> exact_weights;  // empty when loaded from a file
  std::vector<std::string> labels;
  std::optional<SidonSet> source;
};

/// |G| character vectors with weight |S|^2/(2|G|) followed by the |S|
/// standard basis vectors with weight 1/2; coordinates indexed by S in
/// canonical element order, characters in lexicographic order.
WeightedDesign bodmann_haas(const SidonSet& s);

constexpr int default_dense_cap = 48;

/// d^2 x d^2 matrix with entries (1/2)(delta_{s,t}delta_{s',t'} +
/// delta_{s,t'}delta_{s',t}).
Eigen::MatrixXd symmetric_projector(int d, int cap = default_dense_cap);

/// Assembles sum_k w_k (x_k x_k^*)^{tensor 2} densely.
Eigen::MatrixXcd design_moment(const WeightedDesign& d,
                               int cap = default_dense_cap);

/// Frobenius norm of (moment - symmetric projector).
double verify_direct(const WeightedDesign& d, int cap = default_dense_cap);
bool direct_certified(double residual, int dim, double tol_scale = 1e-9);

struct FramePotentialOptions {
  double tol_scale = 1e-8;  // tolerance is tol_scale * d^2
  double abs_tol = -1.0;    // overrides tol_scale when >= 0
  bool force_generic = false;
};

struct FramePotentialResult {
  double trace_m = 0.0;
  double potential = 0.0;
  bool certified = false;
};

/// Certifies via tr M = d(d+1)/2 and tr M^2 = tr M; the design lives on the
/// symmetric subspace, so both together force M to equal the projector.
FramePotentialResult verify_frame_potential(const WeightedDesign& d,
                                            FramePotentialOptions opts = {});

struct AgreementResult {
  double residual = 0.0;
  bool direct_certified = false;
  FramePotentialResult fp;
  bool agree = false;
  double consistency_error = 0.0;  // | r^2 - (trM^2 - 2 tr(MP) + trP) |
};

AgreementResult check_agreement(const WeightedDesign& d,
                                int cap = default_dense_cap);

/// Exact weight sum; throws std::logic_error when exact weights are absent.
Rational weight_sum_exact(const WeightedDesign& d);

void write_design(std::ostream& os, const WeightedDesign& d);
WeightedDesign read_design(std::istream& is);

}  // namespace zdesign
