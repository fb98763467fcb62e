#include <doctest.h>

#include <random>

#include "birs/dbirs.hpp"
#include "birs/errors.hpp"
#include "birs/null_model.hpp"
#include "birs/simulate.hpp"
#include "support.hpp"

using namespace birs;
using birs::testing::make_scores;
using birs::testing::small_boot;

namespace {

bool contained_in_locals(const DbirsResult& r) {
  std::vector<Region> local;
  for (const BlockResult& b : r.blocks)
    for (const DetectedRegion& d : b.detected) local.push_back(d.region);
  const auto mask = coverage_mask(local, r.blocks.empty() ? 0 : r.blocks.back().block_region.end);
  for (const DetectedRegion& d : r.detection.regions)
    for (std::size_t j = d.region.start; j < d.region.end; ++j)
      if (!mask[j]) return false;
  return true;
}

}  // namespace

TEST_CASE("split_blocks remainder rule") {
  CHECK(split_blocks(10, 4) == std::vector<Region>{{0, 4}, {4, 10}});
  CHECK(split_blocks(8, 4) == std::vector<Region>{{0, 4}, {4, 8}});
  CHECK(split_blocks(3, 10) == std::vector<Region>{{0, 3}});
  CHECK(split_blocks(11, 4) == std::vector<Region>{{0, 4}, {4, 8}, {8, 11}});
  CHECK(split_blocks(0, 4).empty());
  CHECK_THROWS_AS(split_blocks(10, 0), std::invalid_argument);
}

TEST_CASE("run_block on zero scores") {
  const ScoreSet s = make_scores(Eigen::VectorXd::Zero(16), small_boot(16, 100, 1.0, 1), 3);
  const BlockResult b = run_block(s, Region{32, 48}, 2, DbirsConfig{});
  CHECK(b.detected.empty());
  CHECK(b.block_stat == 0.0);
  CHECK(b.l_vec.isZero());
  CHECK(b.m_vec.size() == 100);
  CHECK(b.block_id == 2);
  CHECK(b.seed == 3);
  CHECK_THROWS_AS(run_block(s, Region{0, 15}, 0, DbirsConfig{}), DimensionMismatch);
}

TEST_CASE("run_block with a single spike") {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(16);
  u(9) = -6.0;
  const ScoreSet s = make_scores(u, small_boot(16, 100, 1.0, 2));
  const BlockResult b = run_block(s, Region{100, 116}, 0, DbirsConfig{});
  REQUIRE(b.detected.size() == 1);
  CHECK(b.detected[0].region.contains(109));
  CHECK(b.block_stat == 6.0);
  CHECK((b.l_vec.array() <= b.m_vec.array()).all());
}

TEST_CASE("m_vec dominates l_vec in randomized blocks") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> z;
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::VectorXd u(64);
    for (auto& v : u) v = z(rng);
    u.segment(rep % 50, 6).array() += 5.0;
    const ScoreSet s = make_scores(u, birs::testing::gaussian_matrix(64, 150, rng));
    DbirsConfig cfg;
    cfg.truncation_s = rep % 3;
    const BlockResult b = run_block(s, Region{0, 64}, 0, cfg);
    CHECK((b.l_vec.array() <= b.m_vec.array()).all());
  }
}

TEST_CASE("central stage gates on significant blocks") {
  // Block 0 carries a local detection that the central layer does not
  // confirm because its block maximum is unremarkable.
  BlockResult b0;
  b0.block_id = 0;
  b0.block_region = Region{0, 10};
  b0.block_stat = 1.0;
  b0.m_vec = Eigen::VectorXd::LinSpaced(100, 0.5, 3.0);
  b0.l_vec = b0.m_vec * 0.5;
  b0.detected = {DetectedRegion{{2, 4}, 1.0, 0.9}};
  BlockResult b1 = b0;
  b1.block_id = 1;
  b1.block_region = Region{10, 20};
  b1.detected = {};
  b1.l_vec.setZero();
  const DbirsResult r = central_aggregate({b1, b0}, DbirsConfig{});
  CHECK(r.significant_blocks.empty());
  CHECK(r.detection.regions.empty());
  CHECK(r.blocks[0].block_id == 0);
}

TEST_CASE("K=1 reduces to the block's own test") {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(32);
  u.segment(10, 3).setConstant(4.0);
  const ScoreSet s = make_scores(u, small_boot(32, 200, 1.0, 4), 9);
  DbirsConfig cfg;
  cfg.block_size = 64;
  cfg.truncation_s = 0;
  const DbirsResult r = run_dbirs(s, cfg);
  REQUIRE(r.blocks.size() == 1);
  const GlobalTest t = global_test(s, Region{0, 32}, cfg.alpha);
  CHECK(r.central.global_stat == t.stat);
  CHECK(r.central.global_threshold == t.threshold);
  CHECK(r.significant_blocks == std::vector<std::size_t>{0});
  const DetectionResult direct = run_sbirs(s, cfg.block_config());
  std::vector<Region> expected;
  for (const DetectedRegion& d : direct.regions)
    if (d.max_abs > r.c_min) expected.push_back(d.region);
  CHECK(r.detection.region_list() == expected);
  CHECK(r.detection.region_list() == std::vector<Region>{{10, 13}});
}

TEST_CASE("signal block plus noise block") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> z;
  Eigen::VectorXd u(128);
  for (auto& v : u) v = 0.5 * z(rng);
  u.segment(20, 8).setConstant(7.0);
  const ScoreSet s = make_scores(u, 0.5 * birs::testing::gaussian_matrix(128, 300, rng), 1);
  DbirsConfig cfg;
  cfg.block_size = 64;
  cfg.truncation_s = 3;
  cfg.n_boot = 300;
  const DbirsResult r = run_dbirs(s, cfg);
  CHECK(r.significant_blocks == std::vector<std::size_t>{0});
  std::vector<Region> expected;
  for (const DetectedRegion& d : r.blocks[0].detected)
    if (d.max_abs > r.c_min) expected.push_back(d.region);
  CHECK(r.detection.region_list() == expected);
  REQUIRE_FALSE(expected.empty());
  for (const Region& reg : expected) CHECK(reg.end <= 64);
  CHECK(contained_in_locals(r));
  CHECK(r.c_min <= r.central.global_threshold);
}

TEST_CASE("regions merge across block boundaries") {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(32);
  u.segment(12, 8).setConstant(6.0);
  const ScoreSet s = make_scores(u, small_boot(32, 200, 1.0, 6));
  DbirsConfig cfg;
  cfg.block_size = 16;
  cfg.truncation_s = 2;
  const DbirsResult r = run_dbirs(s, cfg);
  CHECK(r.detection.region_list() == std::vector<Region>{{12, 20}});
}

TEST_CASE("schedule independence") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> z;
  Eigen::VectorXd u(300);
  for (auto& v : u) v = z(rng);
  u.segment(50, 10).array() += 6.0;
  u.segment(210, 5).array() -= 6.0;
  const ScoreSet s = make_scores(u, birs::testing::gaussian_matrix(300, 200, rng));
  DbirsConfig cfg;
  cfg.block_size = 40;
  cfg.truncation_s = 2;
  cfg.workers = 1;
  const DbirsResult a = run_dbirs(s, cfg);
  for (std::size_t w : {2u, 3u, 8u}) {
    cfg.workers = w;
    const DbirsResult b = run_dbirs(s, cfg);
    CHECK(b.detection.regions == a.detection.regions);
    CHECK(b.blocks == a.blocks);
    CHECK(b.c_min == a.c_min);
  }
}

TEST_CASE("individual-level route matches the summary-statistics route") {
  SimConfig c;
  c.n = 300;
  c.p = 256;
  c.n_causal_windows = 1;
  c.window_bp = 20 * 78;
  c.effect_c = 0.6;
  c.maf_low = 0.05;
  c.seed = 11;
  const GenotypeMatrix g = gen_genotypes(c);
  const TruthSet truth = plant_truth(g, c);
  const Phenotype ph = gen_phenotype(g, truth, c);
  const NullModel m = fit_null(ph.y, ph.x, Family::gaussian_identity);
  DbirsConfig cfg;
  cfg.block_size = 64;
  cfg.n_boot = 200;
  cfg.seed = 5;
  cfg.truncation_s = 2;
  cfg.workers = 3;
  const DbirsResult a = run_dbirs(g, m, cfg);
  const DbirsResult b = run_dbirs(compute_score_set(g, m, cfg.n_boot, cfg.seed), cfg);
  CHECK(a.detection.region_list() == b.detection.region_list());
  REQUIRE(a.blocks.size() == b.blocks.size());
  for (std::size_t k = 0; k < a.blocks.size(); ++k) {
    CHECK((a.blocks[k].m_vec - b.blocks[k].m_vec).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("inconsistent block sets are rejected") {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(32);
  u(5) = 5.0;
  const ScoreSet s = make_scores(u, small_boot(32, 100, 1.0, 8), 4);
  DbirsConfig cfg;
  cfg.block_size = 16;
  const auto regions = split_blocks(32, 16);
  const BlockResult b0 = run_block(s.slice(regions[0]), regions[0], 0, cfg);
  const BlockResult b1 = run_block(s.slice(regions[1]), regions[1], 1, cfg);
  CHECK_NOTHROW(central_aggregate({b0, b1}, cfg));

  BlockResult other_seed = b1;
  other_seed.seed = 99;
  CHECK_THROWS_AS(central_aggregate({b0, other_seed}, cfg), InconsistentBlocks);
  BlockResult short_boot = b1;
  short_boot.m_vec.conservativeResize(50);
  short_boot.l_vec.conservativeResize(50);
  CHECK_THROWS_AS(central_aggregate({b0, short_boot}, cfg), InconsistentBlocks);
  CHECK_THROWS_AS(central_aggregate({b1}, cfg), InconsistentBlocks);
  CHECK_THROWS_AS(central_aggregate({b0, b0}, cfg), InconsistentBlocks);
  CHECK_THROWS_AS(central_aggregate({}, cfg), InconsistentBlocks);
}
