#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "birs/region.hpp"
#include "birs/score_engine.hpp"

namespace birs {

struct SbirsConfig {
  double alpha = 0.05;
  unsigned truncation_s = 0;
  // 0 means "p", the largest number of rounds that can each add an index.
  std::size_t max_research_rounds = 0;
  // Baseline only: use this critical value everywhere instead of the dynamic
  // bootstrap thresholds.
  std::optional<double> fixed_threshold;

  void validate() const;
};

struct DetectedRegion {
  Region region;
  double max_abs = 0.0;    // max |u| over the region (caller's scores)
  double threshold = 0.0;  // critical value in force when it was accepted

  friend bool operator==(const DetectedRegion&, const DetectedRegion&) = default;
};

// One segment accepted by the binary search before rearrangement.
struct Emission {
  Region region;
  double stat = 0.0;  // max |u| on the working (possibly zeroed) scores
  double threshold = 0.0;
  std::size_t round = 0;
  std::size_t level = 0;
};

struct SearchResult {
  std::vector<Emission> emitted;
  std::vector<double> level_thresholds;  // c_1 >= c_2 >= ...
};

struct GlobalTest {
  double stat = 0.0;
  double threshold = 0.0;
  bool reject = false;
};

struct DetectionResult {
  std::vector<DetectedRegion> regions;  // sorted, separated
  double global_stat = 0.0;
  double global_threshold = 0.0;
  std::size_t rounds = 0;
  bool stalled = false;

  std::vector<double> round_thresholds;              // c(alpha) before each round
  std::vector<std::vector<double>> level_thresholds; // per round
  std::vector<Emission> emissions;

  std::vector<Region> region_list() const;
};

GlobalTest global_test(const ScoreSet& scores, const Region& domain, double alpha);

// Level-by-level dyadic search over `candidates` (indices into `scores`).
SearchResult binary_search(const ScoreSet& scores, const std::vector<Region>& candidates,
                           const SbirsConfig& config);

// Global test, binary search, re-search on zeroed copies, rearrangement.
// Region indices in the result are in the coordinates of `scores`.
DetectionResult run_sbirs(const ScoreSet& scores, const Region& domain, const SbirsConfig& config);
DetectionResult run_sbirs(const ScoreSet& scores, const SbirsConfig& config);

// True when every recorded threshold sequence in `result` is non-increasing.
bool thresholds_monotone(const DetectionResult& result);

// Number of run_sbirs calls in this process that finished with all threshold
// invariants checked.
std::uint64_t sbirs_runs_checked() noexcept;

}  // namespace birs

namespace birs {

// Merges adjacent/overlapping detections; the merged stat and threshold are
// the maxima over constituents.
std::vector<DetectedRegion> merge_detected(std::vector<DetectedRegion> regions);

}  // namespace birs
