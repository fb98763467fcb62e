#include "birs/dbirs.hpp"

#include <algorithm>
#include <cmath>

#include "birs/errors.hpp"
#include "birs/parallel.hpp"

namespace birs {

void DbirsConfig::validate() const {
  block_config().validate();
  if (block_size == 0) throw std::invalid_argument("block_size must be positive");
  if (block_size < (std::size_t{1} << truncation_s)) {
    throw std::invalid_argument("block_size must be at least 2^truncation_s");
  }
  if (n_boot == 0) throw std::invalid_argument("n_boot must be positive");
}

SbirsConfig DbirsConfig::block_config() const {
  SbirsConfig c;
  c.alpha = alpha;
  c.truncation_s = truncation_s;
  return c;
}

std::vector<Region> split_blocks(std::size_t p, std::size_t block_size) {
  if (block_size == 0) throw std::invalid_argument("block_size must be positive");
  if (p == 0) return {};
  const std::size_t full = p / block_size;
  if (full == 0) return {Region{0, p}};
  std::vector<Region> blocks;
  for (std::size_t k = 0; k < full; ++k) blocks.push_back(Region{k * block_size, (k + 1) * block_size});
  const std::size_t tail = p - full * block_size;
  // A tail of at most half a block joins its predecessor.
  if (2 * tail > block_size) {
    blocks.push_back(Region{full * block_size, p});
  } else {
    blocks.back().end = p;
  }
  return blocks;
}

BlockResult run_block(const ScoreSet& block_scores, const Region& block_region,
                      std::size_t block_id, const DbirsConfig& config) {
  if (static_cast<std::size_t>(block_scores.p()) != block_region.length()) {
    throw DimensionMismatch("block scores do not match the block region length");
  }
  const Region local{0, block_region.length()};
  const DetectionResult local_result = run_sbirs(block_scores, local, config.block_config());

  BlockResult out;
  out.block_id = block_id;
  out.block_region = block_region;
  out.block_stat = max_abs(block_scores.u, local);
  out.m_vec = replicate_max_abs(block_scores.boot, std::span(&local, 1));
  const std::vector<Region> found = local_result.region_list();
  out.l_vec = replicate_max_abs(block_scores.boot, found);
  out.seed = block_scores.seed;
  for (DetectedRegion r : local_result.regions) {
    r.region.start += block_region.start;
    r.region.end += block_region.start;
    out.detected.push_back(r);
  }
  return out;
}

namespace {

void check_blocks(const std::vector<BlockResult>& blocks) {
  if (blocks.empty()) throw InconsistentBlocks("no block results");
  const std::size_t n_boot = blocks.front().n_boot();
  const std::uint64_t seed = blocks.front().seed;
  std::size_t expected_start = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const BlockResult& b = blocks[k];
    if (b.block_id != k) throw InconsistentBlocks("block ids are not 0..K-1");
    if (b.n_boot() != n_boot || b.l_vec.size() != b.m_vec.size() || n_boot == 0) {
      throw InconsistentBlocks("block " + std::to_string(k) + " has a different bootstrap size");
    }
    if (b.seed != seed) {
      throw InconsistentBlocks("block " + std::to_string(k) + " used a different bootstrap seed");
    }
    if (b.block_region.start != expected_start || b.block_region.empty()) {
      throw InconsistentBlocks("blocks do not tile the genome contiguously at block " +
                               std::to_string(k));
    }
    expected_start = b.block_region.end;
    if ((b.l_vec.array() > b.m_vec.array()).any()) {
      throw InconsistentBlocks("block " + std::to_string(k) + " has L exceeding M");
    }
    for (const DetectedRegion& r : b.detected) {
      if (!b.block_region.contains(r.region)) {
        throw InconsistentBlocks("detected region outside its block");
      }
    }
  }
}

}  // namespace

DbirsResult central_aggregate(std::vector<BlockResult> blocks, const DbirsConfig& config) {
  std::sort(blocks.begin(), blocks.end(),
            [](const BlockResult& a, const BlockResult& b) { return a.block_id < b.block_id; });
  check_blocks(blocks);

  const auto k_blocks = static_cast<Eigen::Index>(blocks.size());
  const auto n_boot = static_cast<Eigen::Index>(blocks.front().n_boot());
  ScoreSet central_scores;
  central_scores.u.resize(k_blocks);
  central_scores.boot.resize(k_blocks, n_boot);
  central_scores.seed = blocks.front().seed;
  for (Eigen::Index k = 0; k < k_blocks; ++k) {
    central_scores.u(k) = blocks[static_cast<std::size_t>(k)].block_stat;
    central_scores.boot.row(k) = blocks[static_cast<std::size_t>(k)].m_vec.transpose();
  }

  SbirsConfig central_config;
  central_config.alpha = config.alpha;
  central_config.truncation_s = 0;

  DbirsResult result;
  result.central = run_sbirs(central_scores, central_config);
  result.detection.global_stat = result.central.global_stat;
  result.detection.global_threshold = result.central.global_threshold;
  result.detection.rounds = result.central.rounds;
  result.detection.round_thresholds = result.central.round_thresholds;

  for (const DetectedRegion& r : result.central.regions) {
    for (std::size_t k = r.region.start; k < r.region.end; ++k) result.significant_blocks.push_back(k);
  }

  if (!result.significant_blocks.empty()) {
    Eigen::VectorXd l_tilde = Eigen::VectorXd::Zero(n_boot);
    for (std::size_t k : result.significant_blocks) l_tilde = l_tilde.cwiseMax(blocks[k].l_vec);
    result.c_min = percentile_threshold(l_tilde, config.alpha);
    if (result.c_min > result.central.global_threshold) {
      throw InvariantViolation("c_min exceeds the genome-wide threshold");
    }

    std::vector<DetectedRegion> kept;
    for (std::size_t k : result.significant_blocks) {
      for (const DetectedRegion& r : blocks[k].detected) {
        if (r.max_abs > result.c_min) kept.push_back(DetectedRegion{r.region, r.max_abs, result.c_min});
      }
    }
    result.detection.regions = merge_detected(std::move(kept));
  }
  result.blocks = std::move(blocks);
  return result;
}

DbirsResult run_dbirs(const ScoreSet& scores, const DbirsConfig& config) {
  config.validate();
  if (scores.boot.rows() != scores.p()) throw DimensionMismatch("bootstrap rows differ from p");
  const std::vector<Region> regions = split_blocks(static_cast<std::size_t>(scores.p()), config.block_size);
  std::vector<BlockResult> blocks(regions.size());
  parallel_for(regions.size(), config.workers, [&](std::size_t k) {
    blocks[k] = run_block(scores.slice(regions[k]), regions[k], k, config);
  });
  return central_aggregate(std::move(blocks), config);
}

DbirsResult run_dbirs(const GenotypeMatrix& g, const NullModel& model, const DbirsConfig& config) {
  config.validate();
  if (g.n() != model.n()) throw DimensionMismatch("genotype rows differ from the null model");
  const Eigen::MatrixXd projected = projected_multipliers(model, config.n_boot, config.seed);
  const Eigen::VectorXd u = compute_scores(g, model);
  const std::vector<Region> regions = split_blocks(static_cast<std::size_t>(g.p()), config.block_size);
  std::vector<BlockResult> blocks(regions.size());
  parallel_for(regions.size(), config.workers, [&](std::size_t k) {
    const Region& r = regions[k];
    ScoreSet local{u.segment(static_cast<Eigen::Index>(r.start), static_cast<Eigen::Index>(r.length())),
                   bootstrap_block(g, r, projected), config.seed};
    blocks[k] = run_block(local, r, k, config);
  });
  return central_aggregate(std::move(blocks), config);
}

namespace {

DetectionResult union_of_blocks(const ScoreSet& scores, const DbirsConfig& config,
                                const SbirsConfig& block_config) {
  const std::vector<Region> regions = split_blocks(static_cast<std::size_t>(scores.p()), config.block_size);
  std::vector<std::vector<DetectedRegion>> found(regions.size());
  parallel_for(regions.size(), config.workers, [&](std::size_t k) {
    found[k] = run_sbirs(scores, regions[k], block_config).regions;
  });
  DetectionResult out;
  std::vector<DetectedRegion> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  out.regions = merge_detected(std::move(all));
  out.global_stat = max_abs(scores.u, Region{0, static_cast<std::size_t>(scores.p())});
  return out;
}

}  // namespace

DetectionResult run_bonferroni_baseline(const ScoreSet& scores, const DbirsConfig& config) {
  config.validate();
  const std::size_t k = split_blocks(static_cast<std::size_t>(scores.p()), config.block_size).size();
  SbirsConfig block_config = config.block_config();
  block_config.alpha = config.alpha / static_cast<double>(k);
  DetectionResult out = union_of_blocks(scores, config, block_config);
  return out;
}

DetectionResult run_fixed_threshold_baseline(const ScoreSet& scores, const DbirsConfig& config) {
  config.validate();
  const GlobalTest g = global_test(scores, Region{0, static_cast<std::size_t>(scores.p())}, config.alpha);
  SbirsConfig block_config = config.block_config();
  block_config.fixed_threshold = g.threshold;
  DetectionResult out = union_of_blocks(scores, config, block_config);
  out.global_threshold = g.threshold;
  return out;
}

}  // namespace birs
