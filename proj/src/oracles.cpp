// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/oracles.hpp"

#include <string>

#include <Eigen/LU>
#include <Eigen/QR>

#include "wlsq/errors.hpp"

namespace wlsq {

namespace {

using Mat = Eigen::MatrixXcd;

void size_guard(Eigen::Index n, const char* what) {
  if (n > static_cast<Eigen::Index>(kOracleMaxN))
    throw ConfigError(std::string(what) + ": N = " + std::to_string(n) +
                      " exceeds the dense oracle size guard of " + std::to_string(kOracleMaxN));
}

Mat cod_pinv(const Mat& a) {
  Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
  cod.setThreshold(1e-12);
  return cod.pseudoInverse();
}

Mat diag(const Eigen::ArrayXd& d) { return d.matrix().cast<std::complex<double>>().asDiagonal(); }

double re_trace(const Mat& m) { return m.trace().real(); }

}  // namespace

double trace_oracle_clean(const FeatureMatrix& psi, const WeightScheme& w,
                          const CoefficientPrior& prior, std::size_t p) {
  const Eigen::Index N = psi.rows(), P = psi.cols();
  size_guard(N, "trace_oracle_clean");
  if (static_cast<Eigen::Index>(prior.size()) != P)
    throw DimensionError("trace_oracle_clean: prior width differs from feature matrix");
  if (p == 0 || static_cast<Eigen::Index>(p) > P)
    throw DimensionError("trace_oracle_clean: p out of range");

  const auto pi = static_cast<Eigen::Index>(p), pc = P - pi;
  const Eigen::ArrayXd tb = weight_powers(static_cast<std::size_t>(P), w.beta);  // t^{-beta}
  const Eigen::ArrayXd ta = weight_powers(static_cast<std::size_t>(N), w.alpha);
  const Eigen::ArrayXd K = prior.covariance_diagonal();

  const Mat phi_t = diag(ta) * psi.entries.leftCols(pi) * diag(tb.head(pi));
  const Mat phi_t_pinv = cod_pinv(phi_t);
  const Mat proj = phi_t_pinv * phi_t;

  const Mat lt_m2b = diag(tb.head(pi).square());
  const Mat lt_b = diag(tb.head(pi).inverse());
  const Mat kt = diag(K.head(pi));

  const double term_p = re_trace(proj * lt_m2b * proj * lt_b * kt * lt_b) - 2.0 * re_trace(kt * proj);

  double term_q = 0.0;
  if (pc > 0) {
    const Mat phi_c = diag(ta) * psi.entries.rightCols(pc) * diag(tb.tail(pc));
    const Mat lc_b = diag(tb.tail(pc).inverse());
    const Mat kc = diag(K.tail(pc));
    term_q = re_trace(phi_t_pinv.adjoint() * lt_m2b * phi_t_pinv * phi_c * lc_b * kc * lc_b *
                      phi_c.adjoint());
  }
  return K.sum() + term_p + term_q;
}

NoiseTrace trace_oracle_noise(const FeatureMatrix& psi, const WeightScheme& w, std::size_t p,
                              double sigma) {
  const Eigen::Index N = psi.rows(), P = psi.cols();
  size_guard(N, "trace_oracle_noise");
  if (p == 0 || static_cast<Eigen::Index>(p) > P)
    throw DimensionError("trace_oracle_noise: p out of range");
  if (!(sigma >= 0.0)) throw ConfigError("sigma must be >= 0");

  const auto pi = static_cast<Eigen::Index>(p);
  const Eigen::ArrayXd tb = weight_powers(p, w.beta);
  const Eigen::ArrayXd ta = weight_powers(static_cast<std::size_t>(N), w.alpha);

  const Mat phi_t = diag(ta) * psi.entries.leftCols(pi) * diag(tb);
  const Mat pinv = cod_pinv(phi_t);
  const Mat a = diag(ta) * pinv.adjoint() * diag(tb.square()) * pinv * diag(ta);

  const double s2 = sigma * sigma;
  NoiseTrace out;
  out.mean = s2 * re_trace(a);
  out.variance = 2.0 * s2 * s2 * re_trace(a * a);
  const Eigen::MatrixXd ar = a.real();
  out.variance_real_noise = 2.0 * s2 * s2 * (ar * ar).trace();
  return out;
}

Eigen::VectorXd circulant_eigendecomposition(double zeta, const ExperimentConfig& c,
                                             CirculantPart which) {
  c.validate();
  if (c.p % c.N != 0) throw ConfigError("circulant decomposition needs p = nu*N");
  const std::size_t lo = which == CirculantPart::Pi1 ? 0 : c.nu();
  const std::size_t hi = which == CirculantPart::Pi1 ? c.nu() : c.mu();
  Eigen::VectorXd lam(static_cast<Eigen::Index>(c.N));
  for (std::size_t m = 0; m < c.N; ++m)
    lam[static_cast<Eigen::Index>(m)] = static_cast<double>(folded_power_sum(m, c.N, lo, hi, zeta));
  return lam;
}

double circulant_reconstruction_error(double zeta, const ExperimentConfig& c,
                                      CirculantPart which) {
  const Eigen::VectorXd lam = circulant_eigendecomposition(zeta, c, which);
  const FeatureMatrix psi = build_rff_matrix(c);
  const auto N = static_cast<Eigen::Index>(c.N);
  const auto p = static_cast<Eigen::Index>(c.p);
  const Eigen::Index begin = which == CirculantPart::Pi1 ? 0 : p;
  const Eigen::Index count = which == CirculantPart::Pi1 ? p : psi.cols() - p;

  const Eigen::ArrayXd tz = weight_powers(static_cast<std::size_t>(psi.cols()), zeta);
  const Mat block = psi.entries.middleCols(begin, count);
  const Mat dense = block * diag(tz.segment(begin, count)) * block.adjoint();
  const Mat psi_n = psi.entries.leftCols(N);
  const Mat recon = psi_n * diag(lam.array()) * psi_n.adjoint();
  return (dense - recon).norm();
}

double xi_identity_check(const ExperimentConfig& c) {
  c.validate();
  if (c.p >= c.N) throw ConfigError("xi_identity_check: requires p < N");
  size_guard(static_cast<Eigen::Index>(c.N), "xi_identity_check");

  const FeatureMatrix psi = build_rff_matrix(c.N, c.N);
  const auto p = static_cast<Eigen::Index>(c.p);
  const Eigen::Index q = static_cast<Eigen::Index>(c.N) - p;
  const Mat pt = psi.entries.leftCols(p);
  const Mat pc = psi.entries.rightCols(q);
  const Eigen::ArrayXd t_m2a = weight_powers(c.N, 2.0 * c.alpha);
  const Eigen::ArrayXd t_2a = weight_powers(c.N, -2.0 * c.alpha);
  const Eigen::ArrayXd t_4a = weight_powers(c.N, -4.0 * c.alpha);

  const Mat gram_t = pt.adjoint() * diag(t_m2a) * pt;
  const Mat xi = gram_t.fullPivLu().solve(pt.adjoint() * diag(t_m2a) * pc);

  const Mat x = pc.adjoint() * diag(t_2a) * pc;
  Eigen::FullPivLU<Mat> x_lu(x);
  if (!x_lu.isInvertible()) throw NumericalError("xi_identity_check: X is singular");
  const Mat x_inv = x_lu.inverse();
  const Mat rhs = static_cast<double>(c.N) * x_inv.adjoint() * (pc.adjoint() * diag(t_4a) * pc) *
                      x_inv -
                  Mat::Identity(q, q);
  return (xi.adjoint() * xi - rhs).norm();
}

}  // namespace wlsq
