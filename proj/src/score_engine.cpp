#include "birs/score_engine.hpp"

#include <algorithm>
#include <cmath>

#include "birs/errors.hpp"
#include "birs/rng.hpp"

namespace birs {

namespace {

void check_rows(const GenotypeMatrix& g, const NullModel& model) {
  if (g.n() != model.n()) {
    throw DimensionMismatch("genotype matrix has " + std::to_string(g.n()) +
                            " samples, null model has " + std::to_string(model.n()));
  }
}

void check_region(const Region& region, std::size_t p) {
  if (region.empty()) throw EmptyRegion("empty region");
  if (region.end > p) throw DimensionMismatch("region extends past the score vector");
}

}  // namespace

std::vector<double> column_maf(const Eigen::MatrixXd& dosages) {
  std::vector<double> maf(static_cast<std::size_t>(dosages.cols()), 0.0);
  if (dosages.rows() == 0) return maf;
  for (Eigen::Index j = 0; j < dosages.cols(); ++j) {
    const double f = dosages.col(j).mean() / 2.0;
    maf[static_cast<std::size_t>(j)] = std::min(f, 1.0 - f);
  }
  return maf;
}

ScoreSet ScoreSet::slice(const Region& region) const {
  check_region(region, static_cast<std::size_t>(p()));
  const auto start = static_cast<Eigen::Index>(region.start);
  const auto len = static_cast<Eigen::Index>(region.length());
  return ScoreSet{u.segment(start, len), boot.middleRows(start, len), seed};
}

Eigen::VectorXd compute_scores(const GenotypeMatrix& g, const NullModel& model) {
  check_rows(g, model);
  return g.dosages.transpose() * model.residuals / std::sqrt(static_cast<double>(g.n()));
}

Eigen::MatrixXd draw_multipliers(Eigen::Index n, std::size_t n_boot, std::uint64_t seed) {
  const Philox4x32 gen(seed);
  Eigen::MatrixXd e(n, static_cast<Eigen::Index>(n_boot));
  for (Eigen::Index b = 0; b < e.cols(); ++b) {
    for (Eigen::Index i = 0; i < n; i += 2) {
      const auto z = normal_pair(gen, static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(i / 2));
      e(i, b) = z[0];
      if (i + 1 < n) e(i + 1, b) = z[1];
    }
  }
  return e;
}

Eigen::MatrixXd projected_multipliers(const NullModel& model, std::size_t n_boot,
                                      std::uint64_t seed) {
  if (n_boot < kMinBootstrap) {
    throw std::invalid_argument("n_boot must be at least " + std::to_string(kMinBootstrap));
  }
  return model.boot_factor.apply_columns(draw_multipliers(model.n(), n_boot, seed));
}

Eigen::MatrixXd bootstrap_block(const GenotypeMatrix& g, const Region& columns,
                                const Eigen::MatrixXd& projected) {
  if (projected.rows() != g.n()) throw DimensionMismatch("projected multipliers have wrong n");
  check_region(columns, static_cast<std::size_t>(g.p()));
  const auto block = g.dosages.middleCols(static_cast<Eigen::Index>(columns.start),
                                          static_cast<Eigen::Index>(columns.length()));
  Eigen::MatrixXd out = block.transpose() * projected;
  out /= std::sqrt(static_cast<double>(g.n()));
  return out;
}

Eigen::MatrixXd compute_bootstrap(const GenotypeMatrix& g, const NullModel& model,
                                  std::size_t n_boot, std::uint64_t seed) {
  check_rows(g, model);
  const Eigen::MatrixXd projected = projected_multipliers(model, n_boot, seed);
  return bootstrap_block(g, Region{0, static_cast<std::size_t>(g.p())}, projected);
}

ScoreSet compute_score_set(const GenotypeMatrix& g, const NullModel& model, std::size_t n_boot,
                           std::uint64_t seed) {
  return ScoreSet{compute_scores(g, model), compute_bootstrap(g, model, n_boot, seed), seed};
}

double percentile_threshold(std::span<const double> values, double alpha) {
  if (values.empty()) throw EmptyInput("percentile of an empty set");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  const auto n = values.size();
  // The small offset keeps products like 0.95 * 100 from rounding up a rank.
  const double rank = std::ceil((1.0 - alpha) * static_cast<double>(n) - 1e-9);
  const auto k = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(rank, 1.0)), 1, n);
  std::vector<double> sorted(values.begin(), values.end());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1), sorted.end());
  return sorted[k - 1];
}

double percentile_threshold(const Eigen::VectorXd& values, double alpha) {
  return percentile_threshold(std::span<const double>(values.data(), static_cast<std::size_t>(values.size())),
                              alpha);
}

double max_abs(std::span<const double> scores, const Region& region) {
  check_region(region, scores.size());
  double m = 0.0;
  for (std::size_t j = region.start; j < region.end; ++j) m = std::max(m, std::abs(scores[j]));
  return m;
}

double max_abs(const Eigen::VectorXd& scores, const Region& region) {
  return max_abs(std::span<const double>(scores.data(), static_cast<std::size_t>(scores.size())),
                 region);
}

Eigen::VectorXd replicate_max_abs(const Eigen::MatrixXd& boot, std::span<const Region> regions) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(boot.cols());
  for (const Region& r : regions) check_region(r, static_cast<std::size_t>(boot.rows()));
  for (Eigen::Index b = 0; b < boot.cols(); ++b) {
    const double* col = boot.col(b).data();
    double m = 0.0;
    for (const Region& r : regions) {
      for (std::size_t j = r.start; j < r.end; ++j) m = std::max(m, std::abs(col[j]));
    }
    out(b) = m;
  }
  return out;
}

}  // namespace birs
