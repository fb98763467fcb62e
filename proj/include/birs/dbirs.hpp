#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "birs/null_model.hpp"
#include "birs/region.hpp"
#include "birs/sbirs.hpp"
#include "birs/score_engine.hpp"

namespace birs {

struct DbirsConfig {
  double alpha = 0.05;
  unsigned truncation_s = 0;
  std::size_t block_size = 4096;
  std::size_t n_boot = kDefaultBootstrap;
  std::uint64_t seed = 0;
  std::size_t workers = 1;

  void validate() const;
  SbirsConfig block_config() const;
};

// Everything a worker ships to the central stage for one block. Region
// coordinates are genome-wide.
struct BlockResult {
  std::size_t block_id = 0;
  Region block_region;
  std::vector<DetectedRegion> detected;
  double block_stat = 0.0;
  Eigen::VectorXd m_vec;  // per replicate max over the block
  Eigen::VectorXd l_vec;  // per replicate max over the detected union
  std::uint64_t seed = 0;

  std::size_t n_boot() const noexcept { return static_cast<std::size_t>(m_vec.size()); }
  friend bool operator==(const BlockResult&, const BlockResult&) = default;
};

struct DbirsResult {
  DetectionResult detection;        // final regions; stat/threshold of the central test
  DetectionResult central;          // block-level search over block maxima
  std::vector<std::size_t> significant_blocks;
  double c_min = 0.0;
  std::vector<BlockResult> blocks;  // sorted by block_id
};

std::vector<Region> split_blocks(std::size_t p, std::size_t block_size);

// `block_scores` holds only this block's rows (local coordinates);
// `block_region` places it in the genome.
BlockResult run_block(const ScoreSet& block_scores, const Region& block_region,
                      std::size_t block_id, const DbirsConfig& config);

DbirsResult central_aggregate(std::vector<BlockResult> blocks, const DbirsConfig& config);

// Summary-statistics route: scores and pseudo-scores already computed.
DbirsResult run_dbirs(const ScoreSet& scores, const DbirsConfig& config);

// Individual-level route: each worker computes only its block's pseudo-scores
// from the shared projected multipliers.
DbirsResult run_dbirs(const GenotypeMatrix& g, const NullModel& model, const DbirsConfig& config);

// Evaluation baselines.
// Per-block sBiRS at alpha / K, union of detections.
DetectionResult run_bonferroni_baseline(const ScoreSet& scores, const DbirsConfig& config);
// Per-block search against the single genome-wide critical value c(alpha).
DetectionResult run_fixed_threshold_baseline(const ScoreSet& scores, const DbirsConfig& config);

}  // namespace birs
