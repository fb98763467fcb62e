#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "birs/region.hpp"
#include "birs/simulate.hpp"

namespace birs {

inline const std::vector<double> kDefaultFdrDistancesKb{25.0, 50.0, 75.0};

double detection_rate(const TruthSet& truth, std::span<const Region> detected);
double true_positive_rate(const TruthSet& truth, std::span<const Region> detected);
// Fraction of detected variants at least h_kb * 1000 bp away from every true
// window. Zero when nothing is detected.
double fdr_at_distance(const TruthSet& truth, std::span<const Region> detected, double h_kb,
                       std::span<const std::int64_t> positions);
double jaccard(std::span<const Region> a, std::span<const Region> b);

struct ReplicateOutcome {
  std::vector<Region> detected;
  TruthSet truth;
  std::vector<std::int64_t> positions;
};

struct MetricsReport {
  std::size_t replicates = 0;
  double fwer = 0.0;
  double dr = 0.0;
  double tpr = 0.0;
  std::map<double, double> fdr_h;
  double sd_dr = 0.0;
  double sd_tpr = 0.0;
  std::map<double, double> sd_fdr_h;
  std::vector<double> selection_prob;
};

// Means and sample SDs (n - 1 divisor) across replicates. DR/TPR/FDR are
// averaged over replicates that carry truth windows; FWER is the fraction of
// replicates with any detection.
MetricsReport aggregate_replicates(std::span<const ReplicateOutcome> outcomes,
                                   const std::vector<double>& h_kb = kDefaultFdrDistancesKb);

}  // namespace birs
