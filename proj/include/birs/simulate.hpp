#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "birs/region.hpp"
#include "birs/score_engine.hpp"

namespace birs {

enum class Trait { continuous, dichotomous };

struct SimConfig {
  std::size_t n = 1000;
  std::size_t p = 2048;
  double ld_rho = 0.9;          // lag-1 correlation of the latent haplotype process
  double maf_low = 0.001;
  double maf_high = 0.5;
  std::size_t n_causal_windows = 4;
  double window_bp = 5000.0;
  double causal_fraction = 0.1;
  double effect_c = 0.15;
  Trait trait = Trait::continuous;
  std::uint64_t seed = 1;
  std::int64_t variant_spacing_bp = 78;

  void validate() const;
};

struct TruthSet {
  std::vector<Region> causal_windows;
  std::vector<std::size_t> causal_indices;  // sorted
  std::vector<double> beta;                 // length p, zero off the causal set
};

struct Phenotype {
  Eigen::VectorXd y;
  Eigen::MatrixXd x;  // [1, X1, X2]
};

GenotypeMatrix gen_genotypes(const SimConfig& config);
TruthSet plant_truth(const GenotypeMatrix& g, const SimConfig& config);
TruthSet null_truth(std::size_t p);
Phenotype gen_phenotype(const GenotypeMatrix& g, const TruthSet& truth, const SimConfig& config);

// |beta| = c |log10 maf|.
double effect_size(double maf, double c);

}  // namespace birs
