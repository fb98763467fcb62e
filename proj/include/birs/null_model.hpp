#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>

namespace birs {

enum class Family { gaussian_identity, binomial_logit };

std::string_view to_string(Family family);
Family family_from_string(std::string_view name);

// Thin orthonormal basis of the weighted design plus the weights, enough to
// apply M = W^{1/2} (I - H) to a vector in O(n q), where W is the null
// variance diagonal and H the weighted hat matrix. M M^T is the null
// covariance of the residual vector Y - eta0.
class BootFactor {
 public:
  BootFactor() = default;
  BootFactor(const Eigen::MatrixXd& x, const Eigen::VectorXd& lambda);

  Eigen::Index n() const noexcept { return sqrt_lambda_.size(); }
  Eigen::Index q() const noexcept { return basis_.cols(); }

  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& e) const;
  // Column-wise apply to an n x N block of multipliers.
  Eigen::MatrixXd apply_columns(const Eigen::Ref<const Eigen::MatrixXd>& e) const;

  const Eigen::VectorXd& sqrt_lambda() const noexcept { return sqrt_lambda_; }
  const Eigen::MatrixXd& basis() const noexcept { return basis_; }

 private:
  Eigen::VectorXd sqrt_lambda_;
  Eigen::MatrixXd basis_;
};

// Fitted global null GLM. Immutable once built; safe to share across threads.
struct NullModel {
  Family family = Family::gaussian_identity;
  Eigen::VectorXd gamma_hat;
  Eigen::VectorXd eta0_hat;    // fitted means g^{-1}(X gamma_hat)
  Eigen::VectorXd lambda_hat;  // a_i(phi) v(eta0_i)
  double phi_hat = 1.0;
  Eigen::VectorXd residuals;   // Y - eta0_hat
  BootFactor boot_factor;
  int iterations = 0;

  Eigen::Index n() const noexcept { return residuals.size(); }
};

struct FitOptions {
  int max_iterations = 50;
  double tolerance = 1e-8;
  double separation_eps = 1e-10;
  double separation_fraction = 0.01;
};

NullModel fit_null(const Eigen::VectorXd& y, const Eigen::MatrixXd& x, Family family,
                   const FitOptions& options = {});

// Rebuilds a model from stored pieces (e.g. read back from disk). Recomputes
// the bootstrap factor from x and lambda.
NullModel assemble_null_model(Family family, const Eigen::MatrixXd& x, Eigen::VectorXd gamma_hat,
                              Eigen::VectorXd eta0_hat, Eigen::VectorXd lambda_hat, double phi_hat,
                              Eigen::VectorXd residuals);

Eigen::VectorXd apply_boot_factor(const NullModel& model, const Eigen::VectorXd& e);

}  // namespace birs
