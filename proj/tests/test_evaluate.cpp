#include <doctest.h>

#include "birs/errors.hpp"
#include "birs/evaluate.hpp"

using namespace birs;

namespace {

TruthSet four_windows() {
  TruthSet t;
  t.causal_windows = {{10, 20}, {40, 50}, {70, 80}, {100, 110}};
  t.beta.assign(120, 0.0);
  for (const Region& w : t.causal_windows) {
    t.causal_indices.push_back(w.start);
    t.beta[w.start] = 0.1;
  }
  return t;
}

std::vector<std::int64_t> grid(std::size_t p, std::int64_t step) {
  std::vector<std::int64_t> pos(p);
  for (std::size_t j = 0; j < p; ++j) pos[j] = static_cast<std::int64_t>(j) * step;
  return pos;
}

}  // namespace

TEST_CASE("detection rate") {
  const TruthSet t = four_windows();
  CHECK(detection_rate(t, t.causal_windows) == 1.0);
  CHECK(detection_rate(t, std::vector<Region>{}) == 0.0);
  CHECK(detection_rate(t, std::vector<Region>{{15, 16}, {49, 52}, {75, 90}}) == 0.75);
  CHECK_THROWS_AS(detection_rate(TruthSet{}, std::vector<Region>{}), NoTruth);
}

TEST_CASE("true positive rate") {
  const TruthSet t = four_windows();
  CHECK(true_positive_rate(t, std::vector<Region>{{0, 120}}) == 1.0);
  CHECK(true_positive_rate(t, std::vector<Region>{{10, 15}, {40, 45}, {75, 80}, {105, 110}}) == 0.5);
  CHECK(true_positive_rate(t, std::vector<Region>{{20, 40}, {55, 60}}) == 0.0);
}

TEST_CASE("FDR at distance") {
  const TruthSet t = four_windows();
  const auto pos = grid(120, 1000);
  CHECK(fdr_at_distance(t, t.causal_windows, 25, pos) == 0.0);
  CHECK(fdr_at_distance(t, std::vector<Region>{}, 25, pos) == 0.0);

  TruthSet one;
  one.causal_windows = {{0, 2}};
  one.beta.assign(8, 0.0);
  // Variants 0-1 form the window; 2-3 sit 60 kb past it, 4-5 sit 150 kb away.
  const std::vector<std::int64_t> p{0, 1000, 61000, 61000, 151000, 151000, 300000, 300000};
  CHECK(fdr_at_distance(one, std::vector<Region>{{0, 4}}, 50, p) == 0.5);
  CHECK(fdr_at_distance(one, std::vector<Region>{{0, 4}}, 75, p) == 0.0);
  CHECK(fdr_at_distance(one, std::vector<Region>{{4, 6}}, 75, p) == 1.0);
  const std::vector<Region> mixed{{0, 6}};
  CHECK(fdr_at_distance(one, mixed, 25, p) >= fdr_at_distance(one, mixed, 50, p));
  CHECK(fdr_at_distance(one, mixed, 50, p) >= fdr_at_distance(one, mixed, 75, p));
}

TEST_CASE("jaccard") {
  const std::vector<Region> a{{0, 10}};
  const std::vector<Region> b{{5, 15}};
  CHECK(jaccard(a, a) == 1.0);
  CHECK(jaccard(a, std::vector<Region>{{20, 30}}) == 0.0);
  CHECK(jaccard(a, b) == doctest::Approx(1.0 / 3.0));
  CHECK(jaccard(std::vector<Region>{}, std::vector<Region>{}) == 1.0);
}

TEST_CASE("aggregate replicates") {
  const TruthSet t = four_windows();
  const auto pos = grid(120, 1000);
  SUBCASE("single replicate has zero sd") {
    const std::vector<ReplicateOutcome> one{{{{10, 20}}, t, pos}};
    const MetricsReport r = aggregate_replicates(one);
    CHECK(r.dr == 0.25);
    CHECK(r.sd_dr == 0.0);
    CHECK(r.sd_tpr == 0.0);
    for (const auto& [h, sd] : r.sd_fdr_h) CHECK(sd == 0.0);
    CHECK(r.selection_prob[15] == 1.0);
    CHECK(r.selection_prob[25] == 0.0);
  }
  SUBCASE("two replicates with DR 1.0 and 0.5") {
    const std::vector<ReplicateOutcome> two{{t.causal_windows, t, pos}, {{{10, 20}, {40, 50}}, t, pos}};
    const MetricsReport r = aggregate_replicates(two);
    CHECK(r.dr == doctest::Approx(0.75));
    CHECK(r.sd_dr == doctest::Approx(0.3536).epsilon(1e-4));
    CHECK(r.fwer == 1.0);
    CHECK(r.selection_prob[45] == 1.0);
    CHECK(r.selection_prob[75] == 0.5);
    CHECK(r.fdr_h.at(25) >= r.fdr_h.at(50));
    CHECK(r.fdr_h.at(50) >= r.fdr_h.at(75));
  }
  SUBCASE("null replicates without detections") {
    const TruthSet null{{}, {}, std::vector<double>(120, 0.0)};
    const std::vector<ReplicateOutcome> reps(5, ReplicateOutcome{{}, null, pos});
    const MetricsReport r = aggregate_replicates(reps);
    CHECK(r.fwer == 0.0);
    CHECK(r.replicates == 5);
  }
  CHECK_THROWS_AS(aggregate_replicates(std::vector<ReplicateOutcome>{}), EmptyInput);
}
