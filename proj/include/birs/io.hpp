#pragma once

// File formats. All indices written to disk are 0-based and half-open.
//
//   matrix (TSV)    #birs-matrix v1 / #config <json> / dims n p / ids ... /
//                   [position ...] / [maf ...] / n numeric rows
//   regions (TSV)   #birs-regions v1 / #config <json> / column header / rows
//   sumstats (TSV)  #birs-sumstats v1 / #config <json> / index position maf score
//   bootstrap, block result (binary, little endian) with version tag and CRC32

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "birs/dbirs.hpp"
#include "birs/null_model.hpp"
#include "birs/sbirs.hpp"
#include "birs/score_engine.hpp"
#include "birs/simulate.hpp"

namespace birs::io {

using nlohmann::json;

inline constexpr std::uint32_t kFormatVersion = 1;

struct MatrixFile {
  Eigen::MatrixXd values;
  std::vector<std::string> column_ids;
  std::vector<std::int64_t> positions;  // empty unless variant columns
  std::vector<double> maf;              // empty unless variant columns
  json config = json::object();
};

void write_matrix(std::ostream& out, const MatrixFile& m);
MatrixFile read_matrix(std::istream& in);
void write_matrix(const std::filesystem::path& path, const MatrixFile& m);
MatrixFile read_matrix(const std::filesystem::path& path);

MatrixFile genotype_file(const GenotypeMatrix& g, json config = json::object());
GenotypeMatrix to_genotypes(const MatrixFile& m);

struct RegionRecord {
  std::string chrom = "chr";
  Region region;
  std::int64_t start_bp = 0;
  std::int64_t end_bp = 0;
  double max_abs = 0.0;
  double threshold = 0.0;

  friend bool operator==(const RegionRecord&, const RegionRecord&) = default;
};

struct RegionFile {
  std::vector<RegionRecord> records;
  json config = json::object();

  std::vector<Region> regions() const;
};

RegionFile make_region_file(const std::vector<DetectedRegion>& regions,
                            const std::vector<std::int64_t>& positions, json config);
void write_regions(std::ostream& out, const RegionFile& f);
RegionFile read_regions(std::istream& in);
void write_regions(const std::filesystem::path& path, const RegionFile& f);
RegionFile read_regions(const std::filesystem::path& path);

struct Sumstats {
  Eigen::VectorXd u;
  std::vector<std::int64_t> positions;
  std::vector<double> maf;
  std::uint64_t seed = 0;
  std::size_t n_boot = 0;
  std::string model_hash;
  json config = json::object();
};

void write_sumstats(std::ostream& out, const Sumstats& s);
Sumstats read_sumstats(std::istream& in);
void write_sumstats(const std::filesystem::path& path, const Sumstats& s);
Sumstats read_sumstats(const std::filesystem::path& path);

void write_bootstrap(std::ostream& out, const Eigen::MatrixXd& boot, std::uint64_t seed);
Eigen::MatrixXd read_bootstrap(std::istream& in, std::uint64_t* seed = nullptr);
void write_bootstrap(const std::filesystem::path& path, const Eigen::MatrixXd& boot,
                     std::uint64_t seed);
Eigen::MatrixXd read_bootstrap(const std::filesystem::path& path, std::uint64_t* seed = nullptr);

std::string serialize_block_result(const BlockResult& block);
BlockResult deserialize_block_result(const std::string& bytes);

// Short hex digest identifying a fitted null model (family + fitted values).
std::string model_hash(const NullModel& model);

json null_model_to_json(const NullModel& model);
NullModel null_model_from_json(const json& j, const Eigen::MatrixXd& x);

json truth_to_json(const TruthSet& truth, const std::vector<std::int64_t>& positions);
TruthSet truth_from_json(const json& j, std::vector<std::int64_t>* positions = nullptr);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace birs::io
