#include "birs/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "birs/errors.hpp"

namespace birs {

namespace {

void require_truth(const TruthSet& truth) {
  if (truth.causal_windows.empty()) throw NoTruth("truth set has no signal windows");
}

std::size_t intersection_count(std::span<const Region> a, std::span<const Region> b) {
  const auto ma = merge_regions({a.begin(), a.end()});
  const auto mb = merge_regions({b.begin(), b.end()});
  std::size_t total = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ma.size() && j < mb.size()) {
    const std::size_t lo = std::max(ma[i].start, mb[j].start);
    const std::size_t hi = std::min(ma[i].end, mb[j].end);
    if (lo < hi) total += hi - lo;
    if (ma[i].end < mb[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

double detection_rate(const TruthSet& truth, std::span<const Region> detected) {
  require_truth(truth);
  const auto found = merge_regions({detected.begin(), detected.end()});
  std::size_t hit = 0;
  for (const Region& w : truth.causal_windows) {
    if (std::any_of(found.begin(), found.end(), [&](const Region& r) { return r.overlaps(w); })) ++hit;
  }
  return static_cast<double>(hit) / static_cast<double>(truth.causal_windows.size());
}

double true_positive_rate(const TruthSet& truth, std::span<const Region> detected) {
  require_truth(truth);
  const std::size_t truth_size = covered_count(truth.causal_windows);
  return static_cast<double>(intersection_count(truth.causal_windows, detected)) /
         static_cast<double>(truth_size);
}

double fdr_at_distance(const TruthSet& truth, std::span<const Region> detected, double h_kb,
                       std::span<const std::int64_t> positions) {
  const auto found = merge_regions({detected.begin(), detected.end()});
  if (found.empty()) return 0.0;
  if (found.back().end > positions.size()) {
    throw DimensionMismatch("detected region beyond the available positions");
  }
  for (const Region& w : truth.causal_windows) {
    if (w.end > positions.size()) throw DimensionMismatch("truth window beyond the available positions");
  }
  const double cutoff = h_kb * 1000.0;
  std::size_t far = 0;
  std::size_t total = 0;
  for (const Region& r : found) {
    for (std::size_t j = r.start; j < r.end; ++j) {
      const auto pos = positions[j];
      double d = std::numeric_limits<double>::infinity();
      for (const Region& w : truth.causal_windows) {
        const auto lo = positions[w.start];
        const auto hi = positions[w.end - 1];
        const std::int64_t gap = pos < lo ? lo - pos : (pos > hi ? pos - hi : 0);
        d = std::min(d, static_cast<double>(gap));
      }
      if (d >= cutoff) ++far;
      ++total;
    }
  }
  return static_cast<double>(far) / static_cast<double>(total);
}

double jaccard(std::span<const Region> a, std::span<const Region> b) {
  const std::size_t inter = intersection_count(a, b);
  const std::size_t uni = covered_count(a) + covered_count(b) - inter;
  if (uni == 0) return 1.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

MetricsReport aggregate_replicates(std::span<const ReplicateOutcome> outcomes,
                                   const std::vector<double>& h_kb) {
  if (outcomes.empty()) throw EmptyInput("no replicates to aggregate");
  MetricsReport report;
  report.replicates = outcomes.size();

  std::size_t p = 0;
  for (const auto& o : outcomes) {
    p = std::max({p, o.positions.size(), o.truth.beta.size()});
    for (const Region& r : o.detected) p = std::max(p, r.end);
  }
  report.selection_prob.assign(p, 0.0);

  std::vector<double> dr;
  std::vector<double> tpr;
  std::map<double, std::vector<double>> fdr;
  std::size_t any = 0;
  for (const auto& o : outcomes) {
    const auto found = merge_regions(o.detected);
    if (!found.empty()) ++any;
    for (const Region& r : found) {
      for (std::size_t j = r.start; j < r.end; ++j) report.selection_prob[j] += 1.0;
    }
    if (o.truth.causal_windows.empty()) continue;
    dr.push_back(detection_rate(o.truth, found));
    tpr.push_back(true_positive_rate(o.truth, found));
    for (double h : h_kb) fdr[h].push_back(fdr_at_distance(o.truth, found, h, o.positions));
  }
  const auto reps = static_cast<double>(outcomes.size());
  for (double& s : report.selection_prob) s /= reps;
  report.fwer = static_cast<double>(any) / reps;
  report.dr = mean(dr);
  report.tpr = mean(tpr);
  report.sd_dr = sample_sd(dr);
  report.sd_tpr = sample_sd(tpr);
  for (double h : h_kb) {
    report.fdr_h[h] = mean(fdr[h]);
    report.sd_fdr_h[h] = sample_sd(fdr[h]);
  }
  return report;
}

}  // namespace birs
