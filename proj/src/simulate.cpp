#include "birs/simulate.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <random>

#include "birs/errors.hpp"
#include "birs/rng.hpp"

namespace birs {

namespace {

// Independent streams carved out of the one user seed.
enum Stream : std::uint64_t { kMafStream = 1, kLatentStream = 2, kTruthStream = 3, kPhenotypeStream = 4 };

}  // namespace

void SimConfig::validate() const {
  if (n < 2 || p < 1) throw std::invalid_argument("need n >= 2 and p >= 1");
  if (!(ld_rho >= 0.0 && ld_rho < 1.0)) throw std::invalid_argument("ld_rho must lie in [0, 1)");
  if (!(maf_low > 0.0 && maf_low <= maf_high && maf_high <= 0.5)) {
    throw std::invalid_argument("maf range must satisfy 0 < low <= high <= 0.5");
  }
  if (!(causal_fraction > 0.0 && causal_fraction <= 1.0)) {
    throw std::invalid_argument("causal_fraction must lie in (0, 1]");
  }
  if (!(effect_c > 0.0)) throw std::invalid_argument("effect_c must be positive");
  if (!(window_bp > 0.0) || variant_spacing_bp < 1) {
    throw std::invalid_argument("window_bp and variant_spacing_bp must be positive");
  }
}

double effect_size(double maf, double c) { return c * std::abs(std::log10(maf)); }

GenotypeMatrix gen_genotypes(const SimConfig& config) {
  config.validate();
  const auto n = static_cast<Eigen::Index>(config.n);
  const auto p = static_cast<Eigen::Index>(config.p);

  std::mt19937_64 maf_rng(derive_seed(config.seed, kMafStream));
  std::uniform_real_distribution<double> log_maf(std::log(config.maf_low), std::log(config.maf_high));
  const boost::math::normal standard;
  std::vector<double> cut(config.p);
  for (double& c : cut) c = boost::math::quantile(standard, std::exp(log_maf(maf_rng)));

  GenotypeMatrix g;
  g.dosages = Eigen::MatrixXd::Zero(n, p);
  const Philox4x32 latent(derive_seed(config.seed, kLatentStream));
  const double rho = config.ld_rho;
  const double innovation = std::sqrt(1.0 - rho * rho);
  std::vector<double> noise(config.p + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (std::uint64_t hap = 0; hap < 2; ++hap) {
      const std::uint64_t stream = static_cast<std::uint64_t>(i) * 2 + hap;
      for (std::size_t k = 0; k < config.p; k += 2) {
        const auto z = normal_pair(latent, stream, k / 2);
        noise[k] = z[0];
        noise[k + 1] = z[1];
      }
      double z = noise[0];
      for (Eigen::Index j = 0; j < p; ++j) {
        if (j > 0) z = rho * z + innovation * noise[static_cast<std::size_t>(j)];
        if (z < cut[static_cast<std::size_t>(j)]) g.dosages(i, j) += 1.0;
      }
    }
  }

  g.positions.resize(config.p);
  for (std::size_t j = 0; j < config.p; ++j) {
    g.positions[j] = static_cast<std::int64_t>(j + 1) * config.variant_spacing_bp;
  }
  g.maf = column_maf(g.dosages);
  return g;
}

TruthSet null_truth(std::size_t p) {
  TruthSet t;
  t.beta.assign(p, 0.0);
  return t;
}

TruthSet plant_truth(const GenotypeMatrix& g, const SimConfig& config) {
  config.validate();
  const auto p = static_cast<std::size_t>(g.p());
  if (g.positions.size() != p || g.maf.size() != p) {
    throw DimensionMismatch("genotype metadata does not match the dosage matrix");
  }
  TruthSet truth = null_truth(p);
  if (config.n_causal_windows == 0) return truth;

  std::mt19937_64 rng(derive_seed(config.seed, kTruthStream));
  std::uniform_int_distribution<std::size_t> pick_start(0, p - 1);

  const auto window_at = [&](std::size_t s) {
    const double stop = static_cast<double>(g.positions[s]) + config.window_bp;
    auto it = std::lower_bound(g.positions.begin() + static_cast<std::ptrdiff_t>(s), g.positions.end(),
                               stop, [](std::int64_t pos, double v) { return static_cast<double>(pos) < v; });
    return Region{s, static_cast<std::size_t>(it - g.positions.begin())};
  };

  // Greedy placement with full restarts when an early window blocks the rest.
  constexpr std::size_t kRestarts = 200;
  const std::size_t attempts = 1000 * config.n_causal_windows;
  for (std::size_t r = 0; r < kRestarts && truth.causal_windows.size() < config.n_causal_windows; ++r) {
    truth.causal_windows.clear();
    for (std::size_t a = 0; a < attempts && truth.causal_windows.size() < config.n_causal_windows; ++a) {
      const Region w = window_at(pick_start(rng));
      if (w.end >= p) continue;
      bool fits = true;
      for (const Region& other : truth.causal_windows) {
        const std::size_t gap = 2 * std::max(w.length(), other.length());
        if (!(w.start >= other.end + gap || w.end + gap <= other.start)) {
          fits = false;
          break;
        }
      }
      if (fits) truth.causal_windows.push_back(w);
    }
  }
  if (truth.causal_windows.size() < config.n_causal_windows) {
    throw WindowsDontFit("could not place " + std::to_string(config.n_causal_windows) +
                         " separated windows of " + std::to_string(config.window_bp) + " bp in " +
                         std::to_string(p) + " variants");
  }
  std::sort(truth.causal_windows.begin(), truth.causal_windows.end());

  std::bernoulli_distribution coin(0.5);
  for (const Region& w : truth.causal_windows) {
    std::vector<std::size_t> candidates;
    for (std::size_t j = w.start; j < w.end; ++j) {
      if (g.maf[j] > 0.0) candidates.push_back(j);
    }
    const auto wanted = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(config.causal_fraction * static_cast<double>(w.length()))));
    const std::size_t k = std::min(wanted, candidates.size());
    // Partial Fisher-Yates.
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[pick(rng)]);
    }
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t j = candidates[i];
      const double sign = coin(rng) ? 1.0 : -1.0;
      truth.beta[j] = sign * effect_size(g.maf[j], config.effect_c);
      truth.causal_indices.push_back(j);
    }
  }
  std::sort(truth.causal_indices.begin(), truth.causal_indices.end());
  return truth;
}

Phenotype gen_phenotype(const GenotypeMatrix& g, const TruthSet& truth, const SimConfig& config) {
  const auto n = g.n();
  if (truth.beta.size() != static_cast<std::size_t>(g.p())) {
    throw DimensionMismatch("beta length differs from the number of variants");
  }
  std::mt19937_64 rng(derive_seed(config.seed, kPhenotypeStream));
  std::normal_distribution<double> normal(0.0, 1.0);
  std::bernoulli_distribution fair(0.5);

  Phenotype ph;
  ph.x.resize(n, 3);
  ph.x.col(0).setOnes();
  for (Eigen::Index i = 0; i < n; ++i) ph.x(i, 1) = normal(rng);
  for (Eigen::Index i = 0; i < n; ++i) ph.x(i, 2) = fair(rng) ? 1.0 : 0.0;

  Eigen::VectorXd linear = 0.5 * ph.x.col(1) + 0.5 * ph.x.col(2);
  for (std::size_t j : truth.causal_indices) {
    linear += truth.beta[j] * g.dosages.col(static_cast<Eigen::Index>(j));
  }

  ph.y.resize(n);
  if (config.trait == Trait::continuous) {
    for (Eigen::Index i = 0; i < n; ++i) ph.y(i) = linear(i) + normal(rng);
  } else {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (Eigen::Index i = 0; i < n; ++i) {
      const double prob = 1.0 / (1.0 + std::exp(-linear(i)));
      ph.y(i) = unit(rng) < prob ? 1.0 : 0.0;
    }
  }
  return ph;
}

}  // namespace birs
