#include "birs/null_model.hpp"

#include <algorithm>
#include <cmath>

#include "birs/errors.hpp"

namespace birs {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::gaussian_identity:
      return "gaussian";
    case Family::binomial_logit:
      return "binomial";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  if (name == "gaussian" || name == "gaussian_identity" || name == "continuous") {
    return Family::gaussian_identity;
  }
  if (name == "binomial" || name == "binomial_logit" || name == "dichotomous") {
    return Family::binomial_logit;
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

namespace {

bool all_equal(const Eigen::VectorXd& v) {
  return v.size() == 0 || (v.array() == v(0)).all();
}

Eigen::MatrixXd thin_q(const Eigen::MatrixXd& a) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < a.cols()) {
    throw SingularDesign("covariate design is rank deficient (rank " + std::to_string(qr.rank()) +
                         " < " + std::to_string(a.cols()) + ")");
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> hh(a);
  return hh.householderQ() * Eigen::MatrixXd::Identity(a.rows(), a.cols());
}

void check_design(const Eigen::VectorXd& y, const Eigen::MatrixXd& x) {
  if (x.rows() != y.size()) {
    throw DimensionMismatch("outcome has " + std::to_string(y.size()) + " rows, covariates have " +
                            std::to_string(x.rows()));
  }
  if (x.cols() < 1 || x.rows() <= x.cols()) {
    throw DimensionMismatch("need n > q >= 1, got n=" + std::to_string(x.rows()) +
                            " q=" + std::to_string(x.cols()));
  }
  if (!(x.col(0).array() == 1.0).all()) {
    throw std::invalid_argument("first covariate column must be the all-ones intercept");
  }
  if (!y.allFinite() || !x.allFinite()) throw std::invalid_argument("missing or non-finite values");
}

Eigen::VectorXd solve_ls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < a.cols()) throw SingularDesign("weighted design is rank deficient");
  return qr.solve(b);
}

Eigen::VectorXd logistic(const Eigen::VectorXd& eta) {
  return eta.unaryExpr([](double t) { return 1.0 / (1.0 + std::exp(-t)); });
}

}  // namespace

BootFactor::BootFactor(const Eigen::MatrixXd& x, const Eigen::VectorXd& lambda)
    : sqrt_lambda_(lambda.cwiseMax(0.0).cwiseSqrt()) {
  if (x.rows() != lambda.size()) throw DimensionMismatch("lambda length differs from design rows");
  // A constant weight leaves the hat matrix unchanged, including weight zero.
  basis_ = all_equal(lambda) ? thin_q(x) : thin_q(sqrt_lambda_.asDiagonal() * x);
}

Eigen::VectorXd BootFactor::apply(const Eigen::Ref<const Eigen::VectorXd>& e) const {
  if (e.size() != n()) {
    throw DimensionMismatch("multiplier length " + std::to_string(e.size()) + " != n " +
                            std::to_string(n()));
  }
  Eigen::VectorXd r = e - basis_ * (basis_.transpose() * e);
  return sqrt_lambda_.cwiseProduct(r);
}

Eigen::MatrixXd BootFactor::apply_columns(const Eigen::Ref<const Eigen::MatrixXd>& e) const {
  if (e.rows() != n()) throw DimensionMismatch("multiplier rows differ from n");
  Eigen::MatrixXd r = e - basis_ * (basis_.transpose() * e);
  return sqrt_lambda_.asDiagonal() * r;
}

NullModel fit_null(const Eigen::VectorXd& y, const Eigen::MatrixXd& x, Family family,
                   const FitOptions& options) {
  check_design(y, x);
  const Eigen::Index n = x.rows();
  const Eigen::Index q = x.cols();

  NullModel model;
  model.family = family;

  if (family == Family::gaussian_identity) {
    model.gamma_hat = solve_ls(x, y);
    model.eta0_hat = x * model.gamma_hat;
    model.residuals = y - model.eta0_hat;
    model.phi_hat = model.residuals.squaredNorm() / static_cast<double>(n - q);
    model.lambda_hat = Eigen::VectorXd::Constant(n, model.phi_hat);
    model.iterations = 1;
  } else {
    if (!((y.array() == 0.0) || (y.array() == 1.0)).all()) {
      throw std::invalid_argument("binomial outcome must be coded 0/1");
    }
    const double ybar = y.mean();
    if (ybar == 0.0 || ybar == 1.0) throw SeparationDetected("outcome is constant");

    const auto separated = [&](const Eigen::VectorXd& mu) {
      const auto extreme = (mu.array() < options.separation_eps) ||
                           (mu.array() > 1.0 - options.separation_eps);
      return static_cast<double>(extreme.count()) >
             options.separation_fraction * static_cast<double>(n);
    };

    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(q);
    gamma(0) = std::log(ybar / (1.0 - ybar));
    bool converged = false;
    int it = 0;
    while (it < options.max_iterations) {
      ++it;
      const Eigen::VectorXd eta = x * gamma;
      const Eigen::VectorXd mu = logistic(eta);
      if (separated(mu)) {
        throw SeparationDetected("fitted probabilities collapse to 0/1 (iteration " +
                                 std::to_string(it) + ")");
      }
      const Eigen::VectorXd w = mu.cwiseProduct((1.0 - mu.array()).matrix());
      const Eigen::VectorXd sw = w.cwiseSqrt();
      const Eigen::VectorXd z = eta + (y - mu).cwiseQuotient(w);
      Eigen::VectorXd next = solve_ls(sw.asDiagonal() * x, sw.cwiseProduct(z));
      const double delta = (next - gamma).cwiseAbs().maxCoeff();
      gamma = std::move(next);
      if (delta < options.tolerance) {
        converged = true;
        break;
      }
    }
    model.gamma_hat = gamma;
    model.eta0_hat = logistic(x * gamma);
    if (separated(model.eta0_hat)) throw SeparationDetected("fitted probabilities collapse to 0/1");
    if (!converged) {
      throw NoConvergence("IRLS did not converge in " + std::to_string(options.max_iterations) +
                          " iterations");
    }
    model.residuals = y - model.eta0_hat;
    model.phi_hat = 1.0;
    model.lambda_hat = model.eta0_hat.cwiseProduct((1.0 - model.eta0_hat.array()).matrix());
    model.iterations = it;
  }

  model.boot_factor = BootFactor(x, model.lambda_hat);
  return model;
}

NullModel assemble_null_model(Family family, const Eigen::MatrixXd& x, Eigen::VectorXd gamma_hat,
                              Eigen::VectorXd eta0_hat, Eigen::VectorXd lambda_hat, double phi_hat,
                              Eigen::VectorXd residuals) {
  const Eigen::Index n = x.rows();
  if (gamma_hat.size() != x.cols() || eta0_hat.size() != n || lambda_hat.size() != n ||
      residuals.size() != n) {
    throw DimensionMismatch("null model fields do not match the covariate matrix");
  }
  NullModel model;
  model.family = family;
  model.gamma_hat = std::move(gamma_hat);
  model.eta0_hat = std::move(eta0_hat);
  model.lambda_hat = std::move(lambda_hat);
  model.phi_hat = phi_hat;
  model.residuals = std::move(residuals);
  model.boot_factor = BootFactor(x, model.lambda_hat);
  return model;
}

Eigen::VectorXd apply_boot_factor(const NullModel& model, const Eigen::VectorXd& e) {
  return model.boot_factor.apply(e);
}

}  // namespace birs
