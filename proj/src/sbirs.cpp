#include "birs/sbirs.hpp"

#include <algorithm>
#include <atomic>

#include "birs/errors.hpp"

namespace birs {

void SbirsConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (truncation_s >= 63) throw std::invalid_argument("truncation_s too large");
}

std::vector<Region> DetectionResult::region_list() const {
  std::vector<Region> out;
  out.reserve(regions.size());
  for (const auto& r : regions) out.push_back(r.region);
  return out;
}

namespace {

std::atomic<std::uint64_t> g_runs_checked{0};

void check_domain(const ScoreSet& scores, const Region& domain) {
  if (domain.empty()) throw EmptyRegion("empty search domain");
  if (domain.end > static_cast<std::size_t>(scores.p())) {
    throw DimensionMismatch("domain extends past the score vector");
  }
  if (scores.boot.rows() != scores.p()) {
    throw DimensionMismatch("bootstrap matrix rows differ from the score length");
  }
  if (scores.n_boot() < 1) throw EmptyInput("no bootstrap replicates");
}

double critical_value(const ScoreSet& scores, std::span<const Region> pool,
                      const SbirsConfig& config) {
  if (config.fixed_threshold) return *config.fixed_threshold;
  return percentile_threshold(replicate_max_abs(scores.boot, pool), config.alpha);
}

}  // namespace

GlobalTest global_test(const ScoreSet& scores, const Region& domain, double alpha) {
  check_domain(scores, domain);
  GlobalTest t;
  t.stat = max_abs(scores.u, domain);
  t.threshold = percentile_threshold(replicate_max_abs(scores.boot, std::span(&domain, 1)), alpha);
  t.reject = t.stat > t.threshold;
  return t;
}

SearchResult binary_search(const ScoreSet& scores, const std::vector<Region>& candidates,
                           const SbirsConfig& config) {
  config.validate();
  std::vector<Region> alive;
  for (const Region& r : candidates) {
    if (r.empty()) continue;
    if (r.end > static_cast<std::size_t>(scores.p())) {
      throw DimensionMismatch("candidate region extends past the score vector");
    }
    alive.push_back(r);
  }
  std::sort(alive.begin(), alive.end());
  for (std::size_t i = 1; i < alive.size(); ++i) {
    if (alive[i - 1].end > alive[i].start) throw std::invalid_argument("candidates overlap");
  }

  const std::size_t emit_length = std::size_t{1} << config.truncation_s;
  SearchResult result;
  for (std::size_t level = 1; !alive.empty(); ++level) {
    const double c = critical_value(scores, alive, config);
    result.level_thresholds.push_back(c);
    std::vector<Region> next;
    for (const Region& seg : alive) {
      const double stat = max_abs(scores.u, seg);
      if (!(stat > c)) continue;
      if (seg.length() <= emit_length) {
        result.emitted.push_back(Emission{seg, stat, c, 0, level});
      } else {
        const std::size_t mid = seg.start + seg.length() / 2;
        next.push_back(Region{seg.start, mid});
        next.push_back(Region{mid, seg.end});
      }
    }
    alive = std::move(next);
  }
  return result;
}

DetectionResult run_sbirs(const ScoreSet& scores, const Region& domain, const SbirsConfig& config) {
  config.validate();
  check_domain(scores, domain);

  ScoreSet work = scores.slice(domain);
  const Region local{0, domain.length()};
  const auto current_stat = [&] { return max_abs(work.u, local); };
  const auto current_threshold = [&] { return critical_value(work, std::span(&local, 1), config); };

  DetectionResult result;
  double stat = current_stat();
  double threshold = current_threshold();
  result.global_stat = stat;
  result.global_threshold = threshold;
  result.round_thresholds.push_back(threshold);
  if (!(stat > threshold)) {
    g_runs_checked.fetch_add(1, std::memory_order_relaxed);
    return result;
  }

  const std::size_t cap =
      config.max_research_rounds == 0 ? domain.length() : config.max_research_rounds;
  std::vector<bool> detected(domain.length(), false);

  while (stat > threshold) {
    if (result.rounds == cap) {
      result.stalled = true;
      break;
    }
    ++result.rounds;
    SearchResult search = binary_search(work, {local}, config);

    const auto& levels = search.level_thresholds;
    if (!levels.empty() && levels.front() > threshold) {
      throw InvariantViolation("first level threshold exceeds the global threshold");
    }
    for (std::size_t j = 1; j < levels.size(); ++j) {
      if (levels[j] > levels[j - 1]) {
        throw InvariantViolation("dynamic thresholds increased between levels");
      }
    }
    result.level_thresholds.push_back(levels);

    bool progressed = false;
    for (Emission& e : search.emitted) {
      e.round = result.rounds;
      if (!(e.stat > e.threshold)) throw InvariantViolation("emitted segment below its threshold");
      for (std::size_t j = e.region.start; j < e.region.end; ++j) {
        if (!detected[j]) progressed = true;
        detected[j] = true;
      }
      const auto start = static_cast<Eigen::Index>(e.region.start);
      const auto len = static_cast<Eigen::Index>(e.region.length());
      work.u.segment(start, len).setZero();
      work.boot.middleRows(start, len).setZero();
      result.emissions.push_back(e);
    }
    if (!progressed) {
      result.stalled = true;
      break;
    }

    stat = current_stat();
    const double next_threshold = current_threshold();
    if (next_threshold > threshold) {
      throw InvariantViolation("re-search threshold increased after zeroing");
    }
    threshold = next_threshold;
    result.round_thresholds.push_back(threshold);
  }

  // Rearrange into maximal separated runs; stats come from the caller's scores.
  std::vector<Region> pieces;
  for (const Emission& e : result.emissions) pieces.push_back(e.region);
  for (const Region& merged : merge_regions(std::move(pieces))) {
    double thr = 0.0;
    for (const Emission& e : result.emissions) {
      if (merged.contains(e.region)) thr = std::max(thr, e.threshold);
    }
    const Region global{merged.start + domain.start, merged.end + domain.start};
    result.regions.push_back(DetectedRegion{global, max_abs(scores.u, global), thr});
  }
  for (Emission& e : result.emissions) {
    e.region.start += domain.start;
    e.region.end += domain.start;
  }
  if (!thresholds_monotone(result)) throw InvariantViolation("threshold sequence not monotone");
  g_runs_checked.fetch_add(1, std::memory_order_relaxed);
  return result;
}

DetectionResult run_sbirs(const ScoreSet& scores, const SbirsConfig& config) {
  return run_sbirs(scores, Region{0, static_cast<std::size_t>(scores.p())}, config);
}

std::uint64_t sbirs_runs_checked() noexcept {
  return g_runs_checked.load(std::memory_order_relaxed);
}

bool thresholds_monotone(const DetectionResult& result) {
  for (std::size_t r = 1; r < result.round_thresholds.size(); ++r) {
    if (result.round_thresholds[r] > result.round_thresholds[r - 1]) return false;
  }
  for (std::size_t r = 0; r < result.level_thresholds.size(); ++r) {
    const auto& levels = result.level_thresholds[r];
    if (levels.empty()) continue;
    if (r < result.round_thresholds.size() && levels.front() > result.round_thresholds[r]) return false;
    for (std::size_t j = 1; j < levels.size(); ++j) {
      if (levels[j] > levels[j - 1]) return false;
    }
  }
  return true;
}

}  // namespace birs

namespace birs {

std::vector<DetectedRegion> merge_detected(std::vector<DetectedRegion> regions) {
  std::sort(regions.begin(), regions.end(),
            [](const DetectedRegion& a, const DetectedRegion& b) { return a.region < b.region; });
  std::vector<DetectedRegion> merged;
  for (const DetectedRegion& r : regions) {
    if (!merged.empty() && r.region.start <= merged.back().region.end) {
      auto& last = merged.back();
      last.region.end = std::max(last.region.end, r.region.end);
      last.max_abs = std::max(last.max_abs, r.max_abs);
      last.threshold = std::max(last.threshold, r.threshold);
    } else {
      merged.push_back(r);
    }
  }
  return merged;
}

}  // namespace birs
