#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "birs/dbirs.hpp"
#include "birs/errors.hpp"
#include "birs/evaluate.hpp"
#include "birs/null_model.hpp"
#include "birs/sbirs.hpp"
#include "birs/score_engine.hpp"
#include "birs/simulate.hpp"

namespace py = pybind11;
using namespace birs;

namespace {

Trait trait_from_string(const std::string& name) {
  if (name == "continuous") return Trait::continuous;
  if (name == "dichotomous") return Trait::dichotomous;
  throw std::invalid_argument("unknown trait: " + name);
}

py::list regions_to_py(const std::vector<DetectedRegion>& regions) {
  py::list out;
  for (const DetectedRegion& r : regions) {
    py::dict d;
    d["start"] = r.region.start;
    d["end"] = r.region.end;
    d["max_abs"] = r.max_abs;
    d["threshold"] = r.threshold;
    out.append(d);
  }
  return out;
}

std::vector<Region> regions_from_py(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<Region> out;
  out.reserve(pairs.size());
  for (const auto& [s, e] : pairs) out.push_back(Region{s, e});
  return out;
}

TruthSet truth_from_py(const py::dict& d) {
  TruthSet t;
  t.causal_windows = regions_from_py(d["causal_windows"].cast<std::vector<std::pair<std::size_t, std::size_t>>>());
  t.causal_indices = d["causal_indices"].cast<std::vector<std::size_t>>();
  t.beta = d["beta"].cast<std::vector<double>>();
  return t;
}

py::dict truth_to_py(const TruthSet& t) {
  py::list windows;
  for (const Region& w : t.causal_windows) windows.append(py::make_tuple(w.start, w.end));
  py::dict d;
  d["causal_windows"] = windows;
  d["causal_indices"] = t.causal_indices;
  d["beta"] = t.beta;
  return d;
}

GenotypeMatrix genotypes_from(const Eigen::MatrixXd& dosages, std::vector<std::int64_t> positions) {
  GenotypeMatrix g;
  g.dosages = dosages;
  if (positions.empty()) {
    positions.resize(static_cast<std::size_t>(dosages.cols()));
    for (std::size_t j = 0; j < positions.size(); ++j) positions[j] = static_cast<std::int64_t>(j);
  }
  g.positions = std::move(positions);
  g.maf = column_maf(dosages);
  return g;
}

}  // namespace

PYBIND11_MODULE(_birs, m) {
  m.doc() = "Bootstrap-based signal region detection";

  auto base = py::register_exception<Error>(m, "BirsError", PyExc_RuntimeError);
  py::register_exception<SeparationDetected>(m, "SeparationDetected", base.ptr());
  py::register_exception<SingularDesign>(m, "SingularDesign", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<InconsistentBlocks>(m, "InconsistentBlocks", base.ptr());
  py::register_exception<WindowsDontFit>(m, "WindowsDontFit", base.ptr());

  py::class_<NullModel>(m, "NullModel")
      .def_property_readonly("family", [](const NullModel& n) { return std::string(to_string(n.family)); })
      .def_readonly("gamma_hat", &NullModel::gamma_hat)
      .def_readonly("eta0_hat", &NullModel::eta0_hat)
      .def_readonly("lambda_hat", &NullModel::lambda_hat)
      .def_readonly("phi_hat", &NullModel::phi_hat)
      .def_readonly("residuals", &NullModel::residuals)
      .def_readonly("iterations", &NullModel::iterations)
      .def("apply_boot_factor", [](const NullModel& n, const Eigen::VectorXd& e) { return apply_boot_factor(n, e); });

  m.def(
      "fit_null",
      [](const Eigen::VectorXd& y, const Eigen::MatrixXd& x, const std::string& family) {
        return fit_null(y, x, family_from_string(family));
      },
      py::arg("y"), py::arg("x"), py::arg("family") = "gaussian");

  m.def(
      "compute_score_set",
      [](const Eigen::MatrixXd& dosages, const NullModel& model, std::size_t n_boot, std::uint64_t seed) {
        const ScoreSet s = compute_score_set(genotypes_from(dosages, {}), model, n_boot, seed);
        return py::make_tuple(s.u, s.boot);
      },
      py::arg("genotypes"), py::arg("model"), py::arg("n_boot") = kDefaultBootstrap, py::arg("seed") = 0,
      "Scores u (length p) and pseudo-scores boot (p x n_boot).");

  m.def(
      "run_sbirs",
      [](const Eigen::VectorXd& u, const Eigen::MatrixXd& boot, double alpha, unsigned truncation_s) {
        SbirsConfig cfg;
        cfg.alpha = alpha;
        cfg.truncation_s = truncation_s;
        return regions_to_py(run_sbirs(ScoreSet{u, boot, 0}, cfg).regions);
      },
      py::arg("u"), py::arg("boot"), py::arg("alpha") = 0.05, py::arg("truncation_s") = 0);

  m.def(
      "run_dbirs",
      [](const Eigen::VectorXd& u, const Eigen::MatrixXd& boot, double alpha, unsigned truncation_s,
         std::size_t block_size, std::size_t workers, const std::string& mode) {
        DbirsConfig cfg;
        cfg.alpha = alpha;
        cfg.truncation_s = truncation_s;
        cfg.block_size = block_size;
        cfg.n_boot = static_cast<std::size_t>(boot.cols());
        cfg.workers = workers;
        const ScoreSet s{u, boot, 0};
        std::vector<DetectedRegion> found;
        {
          py::gil_scoped_release release;
          if (mode == "dbirs") {
            found = run_dbirs(s, cfg).detection.regions;
          } else if (mode == "bonferroni-baseline") {
            found = run_bonferroni_baseline(s, cfg).regions;
          } else if (mode == "fixed-threshold-baseline") {
            found = run_fixed_threshold_baseline(s, cfg).regions;
          } else {
            throw std::invalid_argument("unknown mode: " + mode);
          }
        }
        return regions_to_py(found);
      },
      py::arg("u"), py::arg("boot"), py::arg("alpha") = 0.05, py::arg("truncation_s") = 0,
      py::arg("block_size") = 4096, py::arg("workers") = 1, py::arg("mode") = "dbirs");

  m.def(
      "simulate",
      [](std::size_t n, std::size_t p, const std::string& trait, std::uint64_t seed, double effect_c,
         std::size_t n_causal_windows, double window_bp, double ld_rho, double maf_low, double maf_high,
         std::int64_t variant_spacing_bp) {
        SimConfig c;
        c.n = n;
        c.p = p;
        c.trait = trait_from_string(trait);
        c.seed = seed;
        c.effect_c = effect_c;
        c.n_causal_windows = n_causal_windows;
        c.window_bp = window_bp;
        c.ld_rho = ld_rho;
        c.maf_low = maf_low;
        c.maf_high = maf_high;
        c.variant_spacing_bp = variant_spacing_bp;
        const GenotypeMatrix g = gen_genotypes(c);
        const TruthSet t = plant_truth(g, c);
        const Phenotype ph = gen_phenotype(g, t, c);
        py::dict d;
        d["genotypes"] = g.dosages;
        d["positions"] = g.positions;
        d["maf"] = g.maf;
        d["y"] = ph.y;
        d["x"] = ph.x;
        d["truth"] = truth_to_py(t);
        return d;
      },
      py::arg("n") = 1000, py::arg("p") = 2048, py::arg("trait") = "continuous", py::arg("seed") = 1,
      py::arg("effect_c") = 0.15, py::arg("n_causal_windows") = 4, py::arg("window_bp") = 5000.0,
      py::arg("ld_rho") = 0.9, py::arg("maf_low") = 0.001, py::arg("maf_high") = 0.5,
      py::arg("variant_spacing_bp") = 78);

  m.def(
      "metrics",
      [](const py::dict& truth, const std::vector<std::pair<std::size_t, std::size_t>>& detected,
         const std::vector<std::int64_t>& positions, const std::vector<double>& h_kb) {
        const TruthSet t = truth_from_py(truth);
        const std::vector<Region> found = regions_from_py(detected);
        py::dict d;
        d["dr"] = detection_rate(t, found);
        d["tpr"] = true_positive_rate(t, found);
        py::dict fdr;
        for (double h : h_kb) fdr[py::float_(h)] = fdr_at_distance(t, found, h, positions);
        d["fdr"] = fdr;
        return d;
      },
      py::arg("truth"), py::arg("detected"), py::arg("positions"), py::arg("h_kb") = kDefaultFdrDistancesKb);
}
