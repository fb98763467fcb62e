#include "birs/io.hpp"

#include <zlib.h>

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "birs/errors.hpp"

namespace birs::io {

static_assert(std::endian::native == std::endian::little, "binary formats assume little endian");

namespace {

constexpr std::string_view kMatrixTag = "#birs-matrix";
constexpr std::string_view kRegionsTag = "#birs-regions";
constexpr std::string_view kSumstatsTag = "#birs-sumstats";
constexpr char kBootMagic[8] = {'B', 'I', 'R', 'S', 'B', 'O', 'O', 'T'};
constexpr char kBlockMagic[8] = {'B', 'I', 'R', 'S', 'B', 'L', 'K', '\0'};

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    out.push_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line) {
  T value{};
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    throw ParseError("cannot parse number '" + std::string(field) + "'", line);
  }
  return value;
}

// Line reader that tracks 1-based line numbers and strips '\r'.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  std::string expect(const char* what) {
    std::string line;
    if (!next(line)) throw ParseError(std::string("unexpected end of file, expected ") + what, number_ + 1);
    return line;
  }
  std::size_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

void check_magic(LineReader& reader, std::string_view tag) {
  const std::string line = reader.expect("format header");
  const auto fields = split_tabs(line);
  if (fields.size() != 2 || fields[0] != tag) {
    throw ParseError("missing '" + std::string(tag) + "' header", reader.number());
  }
  if (fields[1] != "v" + std::to_string(kFormatVersion)) {
    throw VersionMismatch("unsupported " + std::string(tag) + " version '" + std::string(fields[1]) + "'");
  }
}

json read_config_line(LineReader& reader) {
  const std::string line = reader.expect("#config line");
  if (line.rfind("#config\t", 0) != 0) throw ParseError("missing #config line", reader.number());
  try {
    return json::parse(line.substr(8));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bad config json: ") + e.what(), reader.number());
  }
}

void write_header(std::ostream& out, std::string_view tag, const json& config) {
  out << tag << "\tv" << kFormatVersion << '\n' << "#config\t" << config.dump() << '\n';
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, mode);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return in;
}

// Little-endian binary buffer helpers.
class Writer {
 public:
  template <typename T>
  void put(T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    bytes_.append(buf, sizeof(T));
  }
  void raw(const void* data, std::size_t n) { bytes_.append(static_cast<const char*>(data), n); }
  void seal() { put<std::uint32_t>(checksum(bytes_.data(), bytes_.size())); }
  std::string& bytes() { return bytes_; }

  static std::uint32_t checksum(const char* data, std::size_t n) {
    return static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(data), static_cast<uInt>(n)));
  }

 private:
  std::string bytes_;
};

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  T get() {
    if (pos_ + sizeof(T) > bytes_.size()) throw CorruptPayload("payload truncated");
    T v;
    std::memcpy(&v, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  void raw(void* out, std::size_t n) {
    if (n > bytes_.size() - pos_) throw CorruptPayload("payload truncated");
    std::memcpy(out, bytes_.data() + pos_, n);
    pos_ += n;
  }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

// Validates magic, version and trailing CRC; returns the payload after the
// version field.
std::string_view open_envelope(std::string_view bytes, const char (&magic)[8], const char* what) {
  constexpr std::size_t kHeader = 8 + sizeof(std::uint32_t);
  if (bytes.size() < kHeader + sizeof(std::uint32_t)) throw CorruptPayload(std::string(what) + " too short");
  if (std::memcmp(bytes.data(), magic, 8) != 0) throw CorruptPayload(std::string(what) + " has a bad magic tag");
  std::uint32_t version;
  std::memcpy(&version, bytes.data() + 8, sizeof(version));
  if (version != kFormatVersion) {
    throw VersionMismatch(std::string(what) + " version " + std::to_string(version) + ", expected " +
                          std::to_string(kFormatVersion));
  }
  const std::size_t body = bytes.size() - sizeof(std::uint32_t);
  std::uint32_t stored;
  std::memcpy(&stored, bytes.data() + body, sizeof(stored));
  if (stored != Writer::checksum(bytes.data(), body)) throw CorruptPayload(std::string(what) + " checksum mismatch");
  return bytes.substr(kHeader, body - kHeader);
}

}  // namespace

// ---- matrix ---------------------------------------------------------------

void write_matrix(std::ostream& out, const MatrixFile& m) {
  const auto rows = m.values.rows();
  const auto cols = m.values.cols();
  if (!m.column_ids.empty() && m.column_ids.size() != static_cast<std::size_t>(cols)) {
    throw DimensionMismatch("column id count differs from matrix columns");
  }
  if ((!m.positions.empty() && m.positions.size() != static_cast<std::size_t>(cols)) ||
      (!m.maf.empty() && m.maf.size() != static_cast<std::size_t>(cols))) {
    throw DimensionMismatch("variant metadata length differs from matrix columns");
  }
  write_header(out, kMatrixTag, m.config);
  out << "dims\t" << rows << '\t' << cols << '\n';
  out << "ids";
  for (Eigen::Index j = 0; j < cols; ++j) {
    out << '\t' << (m.column_ids.empty() ? "v" + std::to_string(j) : m.column_ids[static_cast<std::size_t>(j)]);
  }
  out << '\n';
  if (!m.positions.empty()) {
    out << "position";
    for (auto v : m.positions) out << '\t' << v;
    out << '\n';
  }
  if (!m.maf.empty()) {
    out << "maf";
    for (double v : m.maf) out << '\t' << format_double(v);
    out << '\n';
  }
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (j > 0) out << '\t';
      out << format_double(m.values(i, j));
    }
    out << '\n';
  }
}

MatrixFile read_matrix(std::istream& in) {
  LineReader reader(in);
  check_magic(reader, kMatrixTag);
  MatrixFile m;
  m.config = read_config_line(reader);

  auto fields = split_tabs(reader.expect("dims line"));
  if (fields.size() != 3 || fields[0] != "dims") throw ParseError("expected 'dims<TAB>n<TAB>p'", reader.number());
  const auto rows = parse_number<std::size_t>(fields[1], reader.number());
  const auto cols = parse_number<std::size_t>(fields[2], reader.number());

  const auto expect_row = [&](const std::string& line, std::size_t width_with_label) {
    auto f = split_tabs(line);
    if (f.size() != width_with_label) {
      throw ParseError("expected " + std::to_string(width_with_label - 1) + " values, found " +
                           std::to_string(f.size() - 1),
                       reader.number());
    }
    return f;
  };

  std::string line = reader.expect("ids line");
  fields = expect_row(line, cols + 1);
  if (fields[0] != "ids") throw ParseError("expected ids line", reader.number());
  for (std::size_t j = 1; j < fields.size(); ++j) m.column_ids.emplace_back(fields[j]);

  m.values.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  std::size_t row = 0;
  while (row < rows) {
    line = reader.expect("data row");
    if (row == 0 && line.rfind("position\t", 0) == 0 && m.positions.empty()) {
      fields = expect_row(line, cols + 1);
      for (std::size_t j = 1; j < fields.size(); ++j) m.positions.push_back(parse_number<std::int64_t>(fields[j], reader.number()));
      continue;
    }
    if (row == 0 && line.rfind("maf\t", 0) == 0 && m.maf.empty()) {
      fields = expect_row(line, cols + 1);
      for (std::size_t j = 1; j < fields.size(); ++j) m.maf.push_back(parse_number<double>(fields[j], reader.number()));
      continue;
    }
    fields = split_tabs(line);
    if (cols == 0 && line.empty()) fields.clear();
    if (fields.size() != cols) {
      throw ParseError("expected " + std::to_string(cols) + " values, found " + std::to_string(fields.size()),
                       reader.number());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m.values(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) = parse_number<double>(fields[j], reader.number());
    }
    ++row;
  }
  std::string extra;
  while (reader.next(extra)) {
    if (!extra.empty()) throw ParseError("trailing data after " + std::to_string(rows) + " rows", reader.number());
  }
  return m;
}

void write_matrix(const std::filesystem::path& path, const MatrixFile& m) {
  auto out = open_out(path);
  write_matrix(out, m);
}

MatrixFile read_matrix(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_matrix(in);
}

MatrixFile genotype_file(const GenotypeMatrix& g, json config) {
  MatrixFile m;
  m.values = g.dosages;
  m.positions = g.positions;
  m.maf = g.maf;
  m.config = std::move(config);
  return m;
}

GenotypeMatrix to_genotypes(const MatrixFile& m) {
  GenotypeMatrix g;
  g.dosages = m.values;
  g.positions = m.positions;
  if (g.positions.empty()) {
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) g.positions.push_back(j + 1);
  }
  g.maf = m.maf.empty() ? column_maf(m.values) : m.maf;
  return g;
}

// ---- regions --------------------------------------------------------------

std::vector<Region> RegionFile::regions() const {
  std::vector<Region> out;
  for (const auto& r : records) out.push_back(r.region);
  return out;
}

RegionFile make_region_file(const std::vector<DetectedRegion>& regions,
                            const std::vector<std::int64_t>& positions, json config) {
  RegionFile f;
  f.config = std::move(config);
  for (const auto& d : regions) {
    RegionRecord r;
    r.region = d.region;
    if (d.region.end <= positions.size() && !d.region.empty()) {
      r.start_bp = positions[d.region.start];
      r.end_bp = positions[d.region.end - 1];
    }
    r.max_abs = d.max_abs;
    r.threshold = d.threshold;
    f.records.push_back(r);
  }
  return f;
}

void write_regions(std::ostream& out, const RegionFile& f) {
  write_header(out, kRegionsTag, f.config);
  out << "#chrom\tstart\tend\tstart_bp\tend_bp\tmax_abs\tthreshold\n";
  for (const auto& r : f.records) {
    out << r.chrom << '\t' << r.region.start << '\t' << r.region.end << '\t' << r.start_bp << '\t'
        << r.end_bp << '\t' << format_double(r.max_abs) << '\t' << format_double(r.threshold) << '\n';
  }
}

RegionFile read_regions(std::istream& in) {
  LineReader reader(in);
  check_magic(reader, kRegionsTag);
  RegionFile f;
  f.config = read_config_line(reader);
  std::string line = reader.expect("column header");
  if (line.rfind("#chrom", 0) != 0) throw ParseError("missing column header", reader.number());
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 7) throw ParseError("expected 7 fields, found " + std::to_string(fields.size()), reader.number());
    RegionRecord r;
    r.chrom = std::string(fields[0]);
    r.region.start = parse_number<std::size_t>(fields[1], reader.number());
    r.region.end = parse_number<std::size_t>(fields[2], reader.number());
    r.start_bp = parse_number<std::int64_t>(fields[3], reader.number());
    r.end_bp = parse_number<std::int64_t>(fields[4], reader.number());
    r.max_abs = parse_number<double>(fields[5], reader.number());
    r.threshold = parse_number<double>(fields[6], reader.number());
    if (r.region.empty()) throw ParseError("empty region", reader.number());
    if (!f.records.empty() && f.records.back().region.end >= r.region.start) {
      throw ParseError("regions are not sorted and separated", reader.number());
    }
    f.records.push_back(r);
  }
  return f;
}

void write_regions(const std::filesystem::path& path, const RegionFile& f) {
  auto out = open_out(path);
  write_regions(out, f);
}

RegionFile read_regions(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_regions(in);
}

// ---- sumstats -------------------------------------------------------------

void write_sumstats(std::ostream& out, const Sumstats& s) {
  const auto p = static_cast<std::size_t>(s.u.size());
  if (s.positions.size() != p || s.maf.size() != p) throw DimensionMismatch("sumstats metadata length");
  json config = s.config;
  config["seed"] = s.seed;
  config["n_boot"] = s.n_boot;
  config["model_hash"] = s.model_hash;
  write_header(out, kSumstatsTag, config);
  out << "index\tposition\tmaf\tscore\n";
  for (std::size_t j = 0; j < p; ++j) {
    out << j << '\t' << s.positions[j] << '\t' << format_double(s.maf[j]) << '\t'
        << format_double(s.u(static_cast<Eigen::Index>(j))) << '\n';
  }
}

Sumstats read_sumstats(std::istream& in) {
  LineReader reader(in);
  check_magic(reader, kSumstatsTag);
  Sumstats s;
  s.config = read_config_line(reader);
  const std::size_t config_line = reader.number();
  try {
    s.seed = s.config.at("seed").get<std::uint64_t>();
    s.n_boot = s.config.at("n_boot").get<std::size_t>();
    s.model_hash = s.config.at("model_hash").get<std::string>();
  } catch (const json::exception&) {
    throw ParseError("sumstats config lacks seed / n_boot / model_hash", config_line);
  }
  std::string line = reader.expect("column header");
  if (line != "index\tposition\tmaf\tscore") throw ParseError("unexpected column header", reader.number());
  std::vector<double> scores;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) throw ParseError("expected 4 fields", reader.number());
    if (parse_number<std::size_t>(fields[0], reader.number()) != scores.size()) {
      throw ParseError("variant indices must be 0..p-1 in order", reader.number());
    }
    s.positions.push_back(parse_number<std::int64_t>(fields[1], reader.number()));
    s.maf.push_back(parse_number<double>(fields[2], reader.number()));
    scores.push_back(parse_number<double>(fields[3], reader.number()));
  }
  s.u = Eigen::Map<Eigen::VectorXd>(scores.data(), static_cast<Eigen::Index>(scores.size()));
  return s;
}

void write_sumstats(const std::filesystem::path& path, const Sumstats& s) {
  auto out = open_out(path);
  write_sumstats(out, s);
}

Sumstats read_sumstats(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_sumstats(in);
}

// ---- bootstrap ------------------------------------------------------------

void write_bootstrap(std::ostream& out, const Eigen::MatrixXd& boot, std::uint64_t seed) {
  Writer w;
  w.raw(kBootMagic, 8);
  w.put<std::uint32_t>(kFormatVersion);
  w.put<std::uint64_t>(static_cast<std::uint64_t>(boot.rows()));
  w.put<std::uint64_t>(static_cast<std::uint64_t>(boot.cols()));
  w.put<std::uint64_t>(seed);
  w.raw(boot.data(), sizeof(double) * static_cast<std::size_t>(boot.size()));
  w.seal();
  out.write(w.bytes().data(), static_cast<std::streamsize>(w.bytes().size()));
}

Eigen::MatrixXd read_bootstrap(std::istream& in, std::uint64_t* seed) {
  const std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  Reader r(open_envelope(bytes, kBootMagic, "bootstrap file"));
  const auto rows = r.get<std::uint64_t>();
  const auto cols = r.get<std::uint64_t>();
  const auto stored_seed = r.get<std::uint64_t>();
  if (cols != 0 && rows > r.remaining() / sizeof(double) / cols) throw CorruptPayload("bootstrap dimensions");
  Eigen::MatrixXd boot(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  r.raw(boot.data(), sizeof(double) * rows * cols);
  if (r.remaining() != 0) throw CorruptPayload("trailing bytes in bootstrap file");
  if (seed) *seed = stored_seed;
  return boot;
}

void write_bootstrap(const std::filesystem::path& path, const Eigen::MatrixXd& boot, std::uint64_t seed) {
  auto out = open_out(path, std::ios::binary);
  write_bootstrap(out, boot, seed);
}

Eigen::MatrixXd read_bootstrap(const std::filesystem::path& path, std::uint64_t* seed) {
  auto in = open_in(path, std::ios::binary);
  return read_bootstrap(in, seed);
}

// ---- block results --------------------------------------------------------

std::string serialize_block_result(const BlockResult& block) {
  if (block.l_vec.size() != block.m_vec.size()) throw DimensionMismatch("m_vec and l_vec lengths differ");
  Writer w;
  w.raw(kBlockMagic, 8);
  w.put<std::uint32_t>(kFormatVersion);
  w.put<std::uint64_t>(block.block_id);
  w.put<std::uint64_t>(block.block_region.start);
  w.put<std::uint64_t>(block.block_region.end);
  w.put<double>(block.block_stat);
  w.put<std::uint64_t>(block.seed);
  w.put<std::uint64_t>(block.n_boot());
  w.raw(block.m_vec.data(), sizeof(double) * block.n_boot());
  w.raw(block.l_vec.data(), sizeof(double) * block.n_boot());
  w.put<std::uint64_t>(block.detected.size());
  for (const auto& d : block.detected) {
    w.put<std::uint64_t>(d.region.start);
    w.put<std::uint64_t>(d.region.end);
    w.put<double>(d.max_abs);
    w.put<double>(d.threshold);
  }
  w.seal();
  return std::move(w.bytes());
}

BlockResult deserialize_block_result(const std::string& bytes) {
  Reader r(open_envelope(bytes, kBlockMagic, "block result"));
  BlockResult b;
  b.block_id = r.get<std::uint64_t>();
  b.block_region.start = r.get<std::uint64_t>();
  b.block_region.end = r.get<std::uint64_t>();
  b.block_stat = r.get<double>();
  b.seed = r.get<std::uint64_t>();
  const auto n_boot = r.get<std::uint64_t>();
  if (n_boot > r.remaining() / (2 * sizeof(double))) throw CorruptPayload("block result bootstrap length");
  b.m_vec.resize(static_cast<Eigen::Index>(n_boot));
  b.l_vec.resize(static_cast<Eigen::Index>(n_boot));
  r.raw(b.m_vec.data(), sizeof(double) * n_boot);
  r.raw(b.l_vec.data(), sizeof(double) * n_boot);
  const auto count = r.get<std::uint64_t>();
  if (count > r.remaining() / 32) throw CorruptPayload("block result region count");
  for (std::uint64_t i = 0; i < count; ++i) {
    DetectedRegion d;
    d.region.start = r.get<std::uint64_t>();
    d.region.end = r.get<std::uint64_t>();
    d.max_abs = r.get<double>();
    d.threshold = r.get<double>();
    b.detected.push_back(d);
  }
  if (r.remaining() != 0) throw CorruptPayload("trailing bytes in block result");
  return b;
}

// ---- json documents -------------------------------------------------------

namespace {

std::vector<double> to_vec(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

Eigen::VectorXd from_vec(const json& j) {
  const auto v = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

std::string model_hash(const NullModel& model) {
  Writer w;
  const auto family = to_string(model.family);
  w.raw(family.data(), family.size());
  w.raw(model.gamma_hat.data(), sizeof(double) * static_cast<std::size_t>(model.gamma_hat.size()));
  w.put<double>(model.phi_hat);
  w.raw(model.eta0_hat.data(), sizeof(double) * static_cast<std::size_t>(model.eta0_hat.size()));
  std::ostringstream hex;
  hex << std::hex << std::setw(8) << std::setfill('0') << Writer::checksum(w.bytes().data(), w.bytes().size());
  return hex.str();
}

json null_model_to_json(const NullModel& model) {
  return json{{"format", "birs-null-model"},
              {"version", kFormatVersion},
              {"family", std::string(to_string(model.family))},
              {"gamma_hat", to_vec(model.gamma_hat)},
              {"phi_hat", model.phi_hat},
              {"iterations", model.iterations},
              {"eta0_hat", to_vec(model.eta0_hat)},
              {"lambda_hat", to_vec(model.lambda_hat)},
              {"residuals", to_vec(model.residuals)},
              {"hash", model_hash(model)}};
}

NullModel null_model_from_json(const json& j, const Eigen::MatrixXd& x) {
  try {
    if (j.at("version").get<std::uint32_t>() != kFormatVersion) throw VersionMismatch("null model version");
    NullModel m = assemble_null_model(family_from_string(j.at("family").get<std::string>()), x,
                                      from_vec(j.at("gamma_hat")), from_vec(j.at("eta0_hat")),
                                      from_vec(j.at("lambda_hat")), j.at("phi_hat").get<double>(),
                                      from_vec(j.at("residuals")));
    m.iterations = j.value("iterations", 0);
    return m;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed null model: ") + e.what(), 1);
  }
}

json truth_to_json(const TruthSet& truth, const std::vector<std::int64_t>& positions) {
  json windows = json::array();
  for (const Region& w : truth.causal_windows) windows.push_back({w.start, w.end});
  json effects = json::array();
  for (std::size_t j : truth.causal_indices) effects.push_back({j, truth.beta[j]});
  return json{{"format", "birs-truth"}, {"version", kFormatVersion}, {"p", truth.beta.size()},
              {"windows", windows},      {"effects", effects},         {"positions", positions}};
}

TruthSet truth_from_json(const json& j, std::vector<std::int64_t>* positions) {
  try {
    TruthSet t;
    t.beta.assign(j.at("p").get<std::size_t>(), 0.0);
    for (const auto& w : j.at("windows")) t.causal_windows.push_back(Region{w.at(0).get<std::size_t>(), w.at(1).get<std::size_t>()});
    for (const auto& e : j.at("effects")) {
      const auto idx = e.at(0).get<std::size_t>();
      if (idx >= t.beta.size()) throw ParseError("effect index out of range", 1);
      t.causal_indices.push_back(idx);
      t.beta[idx] = e.at(1).get<double>();
    }
    if (positions) *positions = j.at("positions").get<std::vector<std::int64_t>>();
    return t;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed truth file: ") + e.what(), 1);
  }
}

json read_json(const std::filesystem::path& path) {
  auto in = open_in(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("invalid json in '" + path.string() + "': " + e.what(), 1);
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  auto out = open_out(path);
  out << j.dump(2) << '\n';
}

std::string read_file(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  auto out = open_out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace birs::io
