#include "birs/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "birs/dbirs.hpp"
#include "birs/errors.hpp"
#include "birs/evaluate.hpp"
#include "birs/io.hpp"
#include "birs/parallel.hpp"
#include "birs/rng.hpp"
#include "birs/sbirs.hpp"
#include "birs/simulate.hpp"

namespace birs {

namespace fs = std::filesystem;
using io::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_file(const fs::path& path) {
  if (!fs::exists(path)) throw Error("input file not found: " + path.string());
}

Eigen::VectorXd single_column(const io::MatrixFile& m, const fs::path& path) {
  if (m.values.cols() != 1) throw DimensionMismatch(path.string() + " must have exactly one column");
  return m.values.col(0);
}

// ---- simulate -------------------------------------------------------------

struct SimulateArgs {
  SimConfig config;
  std::string trait = "continuous";
  bool null_model = false;
  std::size_t replicates = 1;
  fs::path out;
};

json sim_config_json(const SimConfig& c, bool null_model) {
  return json{{"n", c.n},
              {"p", c.p},
              {"ld_rho", c.ld_rho},
              {"maf_low", c.maf_low},
              {"maf_high", c.maf_high},
              {"n_causal_windows", null_model ? 0 : c.n_causal_windows},
              {"window_bp", c.window_bp},
              {"causal_fraction", c.causal_fraction},
              {"effect_c", c.effect_c},
              {"trait", c.trait == Trait::continuous ? "continuous" : "dichotomous"},
              {"seed", c.seed},
              {"variant_spacing_bp", c.variant_spacing_bp}};
}

void write_replicate(const SimConfig& config, bool null_model, const fs::path& dir) {
  const GenotypeMatrix g = gen_genotypes(config);
  const TruthSet truth = null_model ? null_truth(static_cast<std::size_t>(g.p())) : plant_truth(g, config);
  const Phenotype ph = gen_phenotype(g, truth, config);
  const json cfg = sim_config_json(config, null_model);

  io::write_matrix(dir / "genotypes.tsv", io::genotype_file(g, cfg));
  io::MatrixFile y{ph.y, {"y"}, {}, {}, cfg};
  io::write_matrix(dir / "phenotype.tsv", y);
  io::MatrixFile x{ph.x, {"intercept", "x1", "x2"}, {}, {}, cfg};
  io::write_matrix(dir / "covariates.tsv", x);
  json truth_json = io::truth_to_json(truth, g.positions);
  truth_json["config"] = cfg;
  io::write_json(dir / "truth.json", truth_json);
}

int run_simulate(const SimulateArgs& a, std::ostream& out) {
  SimConfig config = a.config;
  config.trait = a.trait == "dichotomous" ? Trait::dichotomous : Trait::continuous;
  if (a.null_model) config.n_causal_windows = 0;
  if (a.replicates <= 1) {
    write_replicate(config, a.null_model, a.out);
    out << "wrote simulation to " << a.out.string() << '\n';
    return kExitOk;
  }
  for (std::size_t r = 0; r < a.replicates; ++r) {
    SimConfig rep = config;
    rep.seed = derive_seed(config.seed, r);
    char name[32];
    std::snprintf(name, sizeof(name), "rep_%04zu", r);
    write_replicate(rep, a.null_model, a.out / name);
  }
  out << "wrote " << a.replicates << " replicates to " << a.out.string() << '\n';
  return kExitOk;
}

// ---- fit-null -------------------------------------------------------------

struct FitArgs {
  fs::path phenotype;
  fs::path covariates;
  std::string family = "gaussian";
  fs::path out;
};

int run_fit(const FitArgs& a, std::ostream& out) {
  require_file(a.phenotype);
  require_file(a.covariates);
  const Eigen::VectorXd y = single_column(io::read_matrix(a.phenotype), a.phenotype);
  const Eigen::MatrixXd x = io::read_matrix(a.covariates).values;
  const NullModel model = fit_null(y, x, family_from_string(a.family));
  json j = io::null_model_to_json(model);
  j["inputs"] = {{"phenotype", a.phenotype.string()}, {"covariates", a.covariates.string()}};
  io::write_json(a.out, j);
  out << "fitted " << to_string(model.family) << " null model in " << model.iterations
      << " iteration(s), phi=" << model.phi_hat << '\n';
  return kExitOk;
}

// ---- shared input loading -------------------------------------------------

struct ModelInputs {
  fs::path genotypes;
  fs::path phenotype;
  fs::path covariates;
  fs::path null_model;
  std::string family = "gaussian";
};

struct Loaded {
  std::optional<GenotypeMatrix> g;
  std::optional<NullModel> model;
  std::optional<ScoreSet> scores;
  std::vector<std::int64_t> positions;
};

NullModel load_model(const ModelInputs& in) {
  if (in.covariates.empty()) throw UsageError("--covariates is required with individual-level input");
  require_file(in.covariates);
  const Eigen::MatrixXd x = io::read_matrix(in.covariates).values;
  if (!in.null_model.empty()) {
    require_file(in.null_model);
    return io::null_model_from_json(io::read_json(in.null_model), x);
  }
  if (in.phenotype.empty()) throw UsageError("--phenotype or --null-model is required");
  require_file(in.phenotype);
  const Eigen::VectorXd y = single_column(io::read_matrix(in.phenotype), in.phenotype);
  return fit_null(y, x, family_from_string(in.family));
}

Loaded load_individual(const ModelInputs& in) {
  if (in.genotypes.empty()) throw UsageError("--genotypes is required");
  require_file(in.genotypes);
  Loaded l;
  l.g = io::to_genotypes(io::read_matrix(in.genotypes));
  l.model = load_model(in);
  if (l.g->n() != l.model->n()) throw DimensionMismatch("genotype and phenotype sample counts differ");
  l.positions = l.g->positions;
  return l;
}

// ---- score ----------------------------------------------------------------

struct ScoreArgs {
  ModelInputs inputs;
  std::size_t n_boot = kDefaultBootstrap;
  std::uint64_t seed = 1;
  std::string out;
};

int run_score(const ScoreArgs& a, std::ostream& out) {
  Loaded l = load_individual(a.inputs);
  const ScoreSet s = compute_score_set(*l.g, *l.model, a.n_boot, a.seed);
  io::Sumstats ss;
  ss.u = s.u;
  ss.positions = l.g->positions;
  ss.maf = l.g->maf;
  ss.seed = a.seed;
  ss.n_boot = a.n_boot;
  ss.model_hash = io::model_hash(*l.model);
  ss.config = {{"family", std::string(to_string(l.model->family))},
               {"genotypes", a.inputs.genotypes.string()},
               {"bootstrap_file", fs::path(a.out + ".boot.bin").filename().string()}};
  io::write_sumstats(fs::path(a.out + ".sumstats.tsv"), ss);
  io::write_bootstrap(fs::path(a.out + ".boot.bin"), s.boot, a.seed);
  out << "wrote " << a.out << ".sumstats.tsv and " << a.out << ".boot.bin (p=" << s.p()
      << ", N=" << s.n_boot() << ")\n";
  return kExitOk;
}

// ---- detect ---------------------------------------------------------------

struct DetectArgs {
  ModelInputs inputs;
  fs::path sumstats;
  fs::path bootstrap;
  std::string mode = "dbirs";
  DbirsConfig config;
  fs::path out;
  fs::path blocks_out;
  fs::path from_blocks;
  std::optional<std::size_t> only_block;
};

Loaded load_for_detect(DetectArgs& a) {
  if (!a.sumstats.empty()) {
    require_file(a.sumstats);
    const io::Sumstats ss = io::read_sumstats(a.sumstats);
    fs::path boot = a.bootstrap;
    if (boot.empty()) {
      boot = a.sumstats.parent_path() / ss.config.value("bootstrap_file", std::string());
    }
    require_file(boot);
    std::uint64_t seed = 0;
    Loaded l;
    l.scores = ScoreSet{ss.u, io::read_bootstrap(boot, &seed), seed};
    if (seed != ss.seed || static_cast<std::size_t>(l.scores->n_boot()) != ss.n_boot ||
        l.scores->boot.rows() != ss.u.size()) {
      throw InconsistentBlocks("bootstrap file does not match the sumstats metadata");
    }
    a.config.seed = ss.seed;
    a.config.n_boot = ss.n_boot;
    l.positions = ss.positions;
    return l;
  }
  return load_individual(a.inputs);
}

const ScoreSet& ensure_scores(Loaded& l, const DbirsConfig& c) {
  if (!l.scores) l.scores = compute_score_set(*l.g, *l.model, c.n_boot, c.seed);
  return *l.scores;
}

std::vector<BlockResult> compute_blocks(const Loaded& l, const DbirsConfig& c,
                                        const std::vector<std::size_t>& which) {
  const std::size_t p = l.scores ? static_cast<std::size_t>(l.scores->p()) : static_cast<std::size_t>(l.g->p());
  const std::vector<Region> regions = split_blocks(p, c.block_size);
  for (std::size_t k : which) {
    if (k >= regions.size()) throw UsageError("block " + std::to_string(k) + " out of range (K=" + std::to_string(regions.size()) + ")");
  }
  std::vector<BlockResult> blocks(which.size());
  if (l.scores) {
    parallel_for(which.size(), c.workers, [&](std::size_t i) {
      const Region& r = regions[which[i]];
      blocks[i] = run_block(l.scores->slice(r), r, which[i], c);
    });
  } else {
    const Eigen::MatrixXd projected = projected_multipliers(*l.model, c.n_boot, c.seed);
    const Eigen::VectorXd u = compute_scores(*l.g, *l.model);
    parallel_for(which.size(), c.workers, [&](std::size_t i) {
      const Region& r = regions[which[i]];
      ScoreSet local{u.segment(static_cast<Eigen::Index>(r.start), static_cast<Eigen::Index>(r.length())),
                     bootstrap_block(*l.g, r, projected), c.seed};
      blocks[i] = run_block(local, r, which[i], c);
    });
  }
  return blocks;
}

fs::path block_path(const fs::path& dir, std::size_t k) {
  char name[32];
  std::snprintf(name, sizeof(name), "block_%06zu.blk", k);
  return dir / name;
}

json detect_config_json(const DetectArgs& a) {
  // Worker count is omitted: it never changes the output.
  json inputs = json::object();
  const auto add = [&](const char* key, const fs::path& p) {
    if (!p.empty()) inputs[key] = p.string();
  };
  add("genotypes", a.inputs.genotypes);
  add("phenotype", a.inputs.phenotype);
  add("covariates", a.inputs.covariates);
  add("null_model", a.inputs.null_model);
  add("sumstats", a.sumstats);
  add("bootstrap", a.bootstrap);
  add("from_blocks", a.from_blocks);
  if (a.sumstats.empty() && a.from_blocks.empty()) inputs["family"] = a.inputs.family;
  return json{{"mode", a.mode},
              {"alpha", a.config.alpha},
              {"truncation_s", a.config.truncation_s},
              {"block_size", a.config.block_size},
              {"n_boot", a.config.n_boot},
              {"seed", a.config.seed},
              {"inputs", inputs}};
}

int run_detect(DetectArgs a, std::ostream& out) {
  if (a.only_block && a.blocks_out.empty()) throw UsageError("--only-block requires --blocks-out");
  if (a.out.empty() && !a.only_block) throw UsageError("--out is required");

  std::vector<DetectedRegion> regions;
  json summary = json::object();
  std::vector<std::int64_t> positions;

  if (!a.from_blocks.empty()) {
    if (!fs::is_directory(a.from_blocks)) throw Error("block directory not found: " + a.from_blocks.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(a.from_blocks)) {
      if (entry.path().extension() == ".blk") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<BlockResult> blocks;
    for (const auto& f : files) blocks.push_back(io::deserialize_block_result(io::read_file(f)));
    if (blocks.empty()) throw InconsistentBlocks("no .blk files in " + a.from_blocks.string());
    a.config.seed = blocks.front().seed;
    a.config.n_boot = blocks.front().n_boot();
    const DbirsResult r = central_aggregate(std::move(blocks), a.config);
    regions = r.detection.regions;
    summary = {{"global_stat", r.detection.global_stat},
               {"global_threshold", r.detection.global_threshold},
               {"c_min", r.c_min},
               {"significant_blocks", r.significant_blocks}};
    if (!a.sumstats.empty()) {
      require_file(a.sumstats);
      positions = io::read_sumstats(a.sumstats).positions;
    } else if (!a.inputs.genotypes.empty()) {
      require_file(a.inputs.genotypes);
      positions = io::to_genotypes(io::read_matrix(a.inputs.genotypes)).positions;
    }
  } else {
    Loaded l = load_for_detect(a);
    positions = l.positions;
    a.config.validate();
    if (a.mode == "sbirs") {
      const DetectionResult r = run_sbirs(ensure_scores(l, a.config), a.config.block_config());
      regions = r.regions;
      summary = {{"global_stat", r.global_stat}, {"global_threshold", r.global_threshold},
                 {"rounds", r.rounds},           {"stalled", r.stalled}};
    } else if (a.mode == "dbirs") {
      const std::size_t p = l.scores ? static_cast<std::size_t>(l.scores->p()) : static_cast<std::size_t>(l.g->p());
      std::vector<std::size_t> which;
      if (a.only_block) {
        which.push_back(*a.only_block);
      } else {
        for (std::size_t k = 0; k < split_blocks(p, a.config.block_size).size(); ++k) which.push_back(k);
      }
      std::vector<BlockResult> blocks = compute_blocks(l, a.config, which);
      if (!a.blocks_out.empty()) {
        fs::create_directories(a.blocks_out);
        for (const auto& b : blocks) io::write_file(block_path(a.blocks_out, b.block_id), io::serialize_block_result(b));
      }
      if (a.only_block) {
        out << "wrote block " << *a.only_block << " to " << a.blocks_out.string() << '\n';
        return kExitOk;
      }
      const DbirsResult r = central_aggregate(std::move(blocks), a.config);
      regions = r.detection.regions;
      summary = {{"global_stat", r.detection.global_stat},
                 {"global_threshold", r.detection.global_threshold},
                 {"c_min", r.c_min},
                 {"significant_blocks", r.significant_blocks}};
    } else if (a.mode == "bonferroni-baseline") {
      regions = run_bonferroni_baseline(ensure_scores(l, a.config), a.config).regions;
    } else if (a.mode == "fixed-threshold-baseline") {
      const DetectionResult r = run_fixed_threshold_baseline(ensure_scores(l, a.config), a.config);
      regions = r.regions;
      summary = {{"global_threshold", r.global_threshold}};
    } else {
      throw UsageError("unknown mode '" + a.mode + "'");
    }
  }

  json config = detect_config_json(a);
  config["result"] = summary;
  io::write_regions(a.out, io::make_region_file(regions, positions, config));
  out << "detected " << regions.size() << " region(s); wrote " << a.out.string() << '\n';
  return kExitOk;
}

// ---- evaluate -------------------------------------------------------------

struct EvaluateArgs {
  fs::path replicates;
  std::string regions_name = "regions.tsv";
  std::vector<std::string> baselines;
  std::vector<double> h_kb = kDefaultFdrDistancesKb;
  fs::path out;
};

fs::path baseline_regions(const fs::path& dir, const std::string& rep, const std::string& regions_name) {
  const fs::path nested = dir / rep / regions_name;
  if (fs::exists(nested)) return nested;
  return dir / (rep + ".tsv");
}

json report_json(const MetricsReport& r) {
  json fdr = json::object();
  json sd_fdr = json::object();
  for (const auto& [h, v] : r.fdr_h) fdr[io::json(h).dump()] = v;
  for (const auto& [h, v] : r.sd_fdr_h) sd_fdr[io::json(h).dump()] = v;
  return json{{"replicates", r.replicates}, {"fwer", r.fwer},   {"dr", r.dr},          {"tpr", r.tpr},
              {"fdr_h", fdr},               {"sd_dr", r.sd_dr}, {"sd_tpr", r.sd_tpr}, {"sd_fdr_h", sd_fdr}};
}

int run_evaluate(const EvaluateArgs& a, std::ostream& out) {
  if (!fs::is_directory(a.replicates)) throw Error("replicate directory not found: " + a.replicates.string());
  std::vector<std::string> reps;
  for (const auto& entry : fs::directory_iterator(a.replicates)) {
    if (entry.is_directory() && fs::exists(entry.path() / "truth.json")) reps.push_back(entry.path().filename().string());
  }
  std::sort(reps.begin(), reps.end());
  if (reps.empty()) throw Error("no replicate directories with truth.json under " + a.replicates.string());

  std::vector<std::pair<std::string, fs::path>> methods{{"birs", a.replicates}};
  for (const auto& spec : a.baselines) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--baseline expects NAME=DIR, got '" + spec + "'");
    methods.emplace_back(spec.substr(0, eq), fs::path(spec.substr(eq + 1)));
  }

  std::vector<std::pair<std::string, MetricsReport>> reports;
  std::vector<std::int64_t> positions;
  for (const auto& [name, dir] : methods) {
    std::vector<ReplicateOutcome> outcomes;
    for (const auto& rep : reps) {
      ReplicateOutcome o;
      o.truth = io::truth_from_json(io::read_json(a.replicates / rep / "truth.json"), &o.positions);
      const fs::path regions = name == "birs" ? dir / rep / a.regions_name : baseline_regions(dir, rep, a.regions_name);
      require_file(regions);
      o.detected = io::read_regions(regions).regions();
      if (positions.empty()) positions = o.positions;
      outcomes.push_back(std::move(o));
    }
    reports.emplace_back(name, aggregate_replicates(outcomes, a.h_kb));
  }

  fs::create_directories(a.out);
  json all = json::object();
  for (const auto& [name, r] : reports) all[name] = report_json(r);
  io::write_json(a.out / "metrics.json", json{{"replicates", reps.size()}, {"h_kb", a.h_kb}, {"methods", all}});

  std::ofstream csv(a.out / "metrics.csv");
  csv << "method,replicates,fwer,dr,tpr";
  for (double h : a.h_kb) csv << ",fdr_" << h;
  csv << ",sd_dr,sd_tpr";
  for (double h : a.h_kb) csv << ",sd_fdr_" << h;
  csv << '\n';
  for (const auto& [name, r] : reports) {
    csv << name << ',' << r.replicates << ',' << r.fwer << ',' << r.dr << ',' << r.tpr;
    for (double h : a.h_kb) csv << ',' << r.fdr_h.at(h);
    csv << ',' << r.sd_dr << ',' << r.sd_tpr;
    for (double h : a.h_kb) csv << ',' << r.sd_fdr_h.at(h);
    csv << '\n';
  }

  std::ofstream sel(a.out / "selection_prob.csv");
  sel << "index,position";
  for (const auto& [name, r] : reports) sel << ',' << name;
  sel << '\n';
  std::size_t p = 0;
  for (const auto& [name, r] : reports) p = std::max(p, r.selection_prob.size());
  for (std::size_t j = 0; j < p; ++j) {
    sel << j << ',' << (j < positions.size() ? positions[j] : 0);
    for (const auto& [name, r] : reports) sel << ',' << (j < r.selection_prob.size() ? r.selection_prob[j] : 0.0);
    sel << '\n';
  }

  for (const auto& [name, r] : reports) {
    out << name << ": DR=" << r.dr << " TPR=" << r.tpr << " FWER=" << r.fwer;
    for (const auto& [h, v] : r.fdr_h) out << " FDR(" << h << ")=" << v;
    out << '\n';
  }
  return kExitOk;
}

void add_model_inputs(CLI::App* cmd, ModelInputs& in) {
  cmd->add_option("--genotypes", in.genotypes, "Genotype matrix (TSV)");
  cmd->add_option("--phenotype", in.phenotype, "Outcome matrix, one column (TSV)");
  cmd->add_option("--covariates", in.covariates, "Covariate matrix with intercept first (TSV)");
  cmd->add_option("--null-model", in.null_model, "Fitted null model (JSON) instead of --phenotype");
  cmd->add_option("--family", in.family, "gaussian | binomial")
      ->check(CLI::IsMember({"gaussian", "binomial", "continuous", "dichotomous"}));
}

}  // namespace

int cli_main(int argc, const char* const* argv) { return cli_main(argc, argv, std::cout, std::cerr); }

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signal region detection with binary search and re-search over marginal scores"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Generate genotypes, phenotypes and planted truth");
  simulate->add_option("--out", sim.out, "Output directory")->required();
  simulate->add_option("--n", sim.config.n, "Samples");
  simulate->add_option("--p", sim.config.p, "Variants");
  simulate->add_option("--ld-rho", sim.config.ld_rho, "Latent AR(1) correlation");
  simulate->add_option("--maf-low", sim.config.maf_low);
  simulate->add_option("--maf-high", sim.config.maf_high);
  simulate->add_option("--windows", sim.config.n_causal_windows, "Number of causal windows");
  simulate->add_option("--window-bp", sim.config.window_bp);
  simulate->add_option("--causal-fraction", sim.config.causal_fraction);
  simulate->add_option("--effect-c", sim.config.effect_c, "Effect scale c in |beta| = c|log10 MAF|");
  simulate->add_option("--spacing-bp", sim.config.variant_spacing_bp);
  simulate->add_option("--trait", sim.trait)->check(CLI::IsMember({"continuous", "dichotomous"}));
  simulate->add_flag("--null", sim.null_model, "No causal variants");
  simulate->add_option("--replicates", sim.replicates, "Write rep_XXXX subdirectories");
  simulate->add_option("--seed", sim.config.seed);

  FitArgs fit;
  auto* fitcmd = app.add_subcommand("fit-null", "Fit the covariate-only null GLM");
  fitcmd->add_option("--phenotype", fit.phenotype)->required();
  fitcmd->add_option("--covariates", fit.covariates)->required();
  fitcmd->add_option("--family", fit.family)
      ->check(CLI::IsMember({"gaussian", "binomial", "continuous", "dichotomous"}));
  fitcmd->add_option("--out", fit.out)->required();

  ScoreArgs score;
  auto* scorecmd = app.add_subcommand("score", "Marginal scores and bootstrap pseudo-scores");
  add_model_inputs(scorecmd, score.inputs);
  scorecmd->add_option("--n-boot", score.n_boot);
  scorecmd->add_option("--seed", score.seed);
  scorecmd->add_option("--out", score.out, "Output prefix")->required();

  DetectArgs det;
  det.config.seed = 1;
  auto* detect = app.add_subcommand("detect", "Detect signal regions");
  add_model_inputs(detect, det.inputs);
  detect->add_option("--sumstats", det.sumstats, "Sumstats file from `score`");
  detect->add_option("--bootstrap", det.bootstrap, "Bootstrap companion file");
  detect->add_option("--mode", det.mode)
      ->check(CLI::IsMember({"sbirs", "dbirs", "bonferroni-baseline", "fixed-threshold-baseline"}));
  detect->add_option("--alpha", det.config.alpha);
  detect->add_option("--truncation-s", det.config.truncation_s);
  detect->add_option("--block-size", det.config.block_size);
  detect->add_option("--n-boot", det.config.n_boot);
  detect->add_option("--seed", det.config.seed);
  detect->add_option("--workers", det.config.workers);
  detect->add_option("--out", det.out, "Region file");
  detect->add_option("--blocks-out", det.blocks_out, "Also write block results here");
  detect->add_option("--only-block", det.only_block, "Run a single worker block (needs --blocks-out)");
  detect->add_option("--from-blocks", det.from_blocks, "Aggregate previously written block results");

  EvaluateArgs ev;
  auto* evaluate = app.add_subcommand("evaluate", "Metrics over replicate detections");
  evaluate->add_option("--replicates", ev.replicates, "Directory of rep_* directories")->required();
  evaluate->add_option("--regions-name", ev.regions_name);
  evaluate->add_option("--baseline", ev.baselines, "NAME=DIR of region files from another tool");
  evaluate->add_option("--h-kb", ev.h_kb, "FDR distances in kb")->delimiter(',');
  evaluate->add_option("--out", ev.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim, out);
    if (fitcmd->parsed()) return run_fit(fit, out);
    if (scorecmd->parsed()) return run_score(score, out);
    if (detect->parsed()) return run_detect(det, out);
    if (evaluate->parsed()) return run_evaluate(ev, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace birs
