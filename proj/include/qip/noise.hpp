#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qip/errors.hpp"

namespace qip {

/// Bijection C^n -> R^{2n}: real parts stacked above imaginary parts.
Eigen::VectorXd phi(const Eigen::VectorXcd& y);

/// Inverse of phi; the input length must be even.
Eigen::VectorXcd phi_inv(const Eigen::VectorXd& v);

/// Averaged repeated measurements of one complex vector: the sample mean in
/// real embedding plus the estimated covariance of that mean,
///   Sigma_eta = sum_n (phi(y_n) - mean)(phi(y_n) - mean)^T / (N^2 - N).
struct NoiseSummary {
  Eigen::VectorXd mean;       // 2 n_y
  Eigen::MatrixXd sigma_eta;  // 2 n_y x 2 n_y, symmetric PSD
  int n_samples = 0;

  [[nodiscard]] int n_y() const { return static_cast<int>(mean.size()) / 2; }
};

/// Averages N >= 2 repeated measurements. The covariance estimate is the
/// covariance of the mean (sample covariance divided by N), which shrinks as
/// averaging improves the measurement.
NoiseSummary summarize(const std::vector<Eigen::VectorXcd>& samples);

/// Threshold alpha with P(nu > alpha) = delta for nu ~ chi-square with 2 n_y
/// degrees of freedom, found by bisection on the regularized incomplete gamma
/// survival function (absolute tolerance 1e-9 or better).
double chi2_threshold(int n_y, double delta);

/// tr[Sigma_eta (I_2 (x) X_B)] = tr(S11 X_B) + tr(S22 X_B) for the diagonal
/// n_y x n_y blocks S11, S22 of Sigma_eta. Linear in X_B.
double offset_value(const Eigen::MatrixXd& sigma_eta, const Eigen::MatrixXd& Xb);

namespace detail {
/// Regularized lower incomplete gamma P(a, x), series/continued-fraction
/// evaluation. Survival of chi-square with k dof at t is 1 - P(k/2, t/2).
double regularized_gamma_p(double a, double x);
}  // namespace detail

/// Survival function of the chi-square distribution with `dof` degrees of
/// freedom evaluated at t.
double chi2_survival(int dof, double t);

}  // namespace qip
