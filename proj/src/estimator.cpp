// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The wlsq authors

#include "wlsq/estimator.hpp"

#include <string>

#include <Eigen/SVD>

#include "wlsq/errors.hpp"

namespace wlsq {

Eigen::MatrixXcd pseudo_inverse(const Eigen::MatrixXcd& a, double rel_tol, std::size_t* rank) {
  if (!a.allFinite()) throw NumericalError("pseudo_inverse: non-finite input");
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) throw NumericalError("pseudo_inverse: SVD did not converge");

  const Eigen::VectorXd& s = svd.singularValues();
  const double cutoff = s.size() ? rel_tol * s[0] : 0.0;
  Eigen::Index r = 0;
  while (r < s.size() && s[r] > cutoff) ++r;
  if (rank) *rank = static_cast<std::size_t>(r);

  const Eigen::VectorXd inv = s.head(r).cwiseInverse();
  return svd.matrixV().leftCols(r) * inv.asDiagonal() * svd.matrixU().leftCols(r).adjoint();
}

WeightedSolver::WeightedSolver(const FeatureMatrix& psi, const WeightScheme& weights,
                               std::size_t p, double rel_tol)
    : p_(p), P_(static_cast<std::size_t>(psi.cols())) {
  if (p == 0 || p > P_)
    throw DimensionError("learned width p = " + std::to_string(p) + " outside [1, " +
                         std::to_string(P_) + "]");
  const auto N = static_cast<std::size_t>(psi.rows());
  const auto pi = static_cast<Eigen::Index>(p);

  data_w_ = weights.data_weights(N);
  const Eigen::ArrayXd param_w = weights.param_weights(p);
  psi_p_ = psi.entries.leftCols(pi);

  const Eigen::MatrixXcd phi = data_w_.matrix().asDiagonal() * psi_p_ * param_w.matrix().asDiagonal();
  const Eigen::MatrixXcd phi_pinv = pseudo_inverse(phi, rel_tol, &rank_);
  gain_ = param_w.matrix().asDiagonal() * phi_pinv * data_w_.matrix().asDiagonal();
  if (!gain_.allFinite()) throw NumericalError("weighted solver: non-finite gain matrix");
}

void WeightedSolver::check_input(const Eigen::VectorXcd& y) const {
  if (y.size() != data_w_.size())
    throw DimensionError("data vector has length " + std::to_string(y.size()) + ", expected N = " +
                         std::to_string(data_w_.size()));
  if (!y.allFinite()) throw NumericalError("data vector has non-finite entries");
}

Eigen::VectorXcd WeightedSolver::solve_learned(const Eigen::VectorXcd& y) const {
  check_input(y);
  return gain_ * y;
}

EstimationResult WeightedSolver::solve(const Eigen::VectorXcd& y) const {
  EstimationResult r;
  const Eigen::VectorXcd learned = solve_learned(y);
  r.theta_hat = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(P_));
  r.theta_hat.head(learned.size()) = learned;
  r.residual_norm = (data_w_.matrix().asDiagonal() * (psi_p_ * learned - y)).norm();
  r.rank_used = rank_;
  return r;
}

EstimationResult weighted_ls_solve(const FeatureMatrix& psi, const WeightScheme& weights,
                                   const Eigen::VectorXcd& y_delta, std::size_t p) {
  return WeightedSolver(psi, weights, p).solve(y_delta);
}

double empirical_sq_error(const Eigen::VectorXcd& theta_hat, const Eigen::VectorXcd& theta) {
  if (theta_hat.size() != theta.size()) throw DimensionError("empirical_sq_error: length mismatch");
  return (theta_hat - theta).squaredNorm();
}

}  // namespace wlsq
