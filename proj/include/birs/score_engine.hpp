#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <vector>

#include "birs/null_model.hpp"
#include "birs/region.hpp"

namespace birs {

// n x p dosage matrix with per-variant metadata.
struct GenotypeMatrix {
  Eigen::MatrixXd dosages;               // n x p, entries in [0, 2]
  std::vector<std::int64_t> positions;   // base pairs, non-decreasing
  std::vector<double> maf;               // in [0, 0.5]

  Eigen::Index n() const noexcept { return dosages.rows(); }
  Eigen::Index p() const noexcept { return dosages.cols(); }
};

// Minor allele frequency of every column, recomputed from the dosages.
std::vector<double> column_maf(const Eigen::MatrixXd& dosages);

// Observed scores and multiplier-bootstrap pseudo-scores.
//
// `boot` is stored variant-major: p x N, column b holding U^{e_b}. A region
// of variants is then a contiguous segment of every column, so slicing a
// block is a view.
struct ScoreSet {
  Eigen::VectorXd u;
  Eigen::MatrixXd boot;
  std::uint64_t seed = 0;

  Eigen::Index p() const noexcept { return u.size(); }
  Eigen::Index n_boot() const noexcept { return boot.cols(); }

  // Copy of the rows in `region`, re-indexed from 0.
  ScoreSet slice(const Region& region) const;
};

inline constexpr std::size_t kMinBootstrap = 100;
inline constexpr std::size_t kDefaultBootstrap = 1000;

Eigen::VectorXd compute_scores(const GenotypeMatrix& g, const NullModel& model);

// n x N matrix of standard normal multipliers; column b depends only on
// (seed, b).
Eigen::MatrixXd draw_multipliers(Eigen::Index n, std::size_t n_boot, std::uint64_t seed);

// M e_b for every replicate, n x N. Shared read-only by block workers.
Eigen::MatrixXd projected_multipliers(const NullModel& model, std::size_t n_boot,
                                      std::uint64_t seed);

// Pseudo-scores for the variant columns in `columns` given precomputed
// projected multipliers: G(:, columns)^T (M E) / sqrt(n). Result p_k x N.
Eigen::MatrixXd bootstrap_block(const GenotypeMatrix& g, const Region& columns,
                                const Eigen::MatrixXd& projected);

// Full p x N pseudo-score matrix (see ScoreSet for layout).
Eigen::MatrixXd compute_bootstrap(const GenotypeMatrix& g, const NullModel& model,
                                  std::size_t n_boot, std::uint64_t seed);

ScoreSet compute_score_set(const GenotypeMatrix& g, const NullModel& model, std::size_t n_boot,
                           std::uint64_t seed);

// The ceil((1 - alpha) N)-th smallest value.
double percentile_threshold(std::span<const double> values, double alpha);
double percentile_threshold(const Eigen::VectorXd& values, double alpha);

double max_abs(std::span<const double> scores, const Region& region);
double max_abs(const Eigen::VectorXd& scores, const Region& region);

// Per replicate b: max over the union of `regions` of |boot(j, b)|. Zero for
// an empty region list.
Eigen::VectorXd replicate_max_abs(const Eigen::MatrixXd& boot, std::span<const Region> regions);

}  // namespace birs
