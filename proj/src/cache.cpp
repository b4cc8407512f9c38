#include "ksg/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ksg/error.hpp"

namespace ksg {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::mutex dir_mutex;
std::optional<std::string> explicit_dir;
bool explicit_set = false;

json matrix_json(const FqMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row_vector(i));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

FqMatrix matrix_from(const json& j, const FieldPtr& f) {
  const std::size_t rows = j.at("rows"), cols = j.at("cols");
  FqMatrix m(f, rows, cols);
  const auto& e = j.at("entries");
  if (e.size() != rows) throw SpecError("cache: matrix row count mismatch");
  for (std::size_t i = 0; i < rows; ++i) {
    if (e[i].size() != cols) throw SpecError("cache: matrix column count mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::uint64_t v = e[i][c];
      if (v >= f->q()) throw SpecError("cache: entry outside the field");
      m.at(i, c) = static_cast<FiniteField::Elem>(v);
    }
  }
  return m;
}

}  // namespace

void set_cache_dir(std::optional<std::string> dir) {
  std::lock_guard<std::mutex> lock(dir_mutex);
  explicit_dir = std::move(dir);
  explicit_set = true;
}

std::optional<std::string> cache_dir() {
  {
    std::lock_guard<std::mutex> lock(dir_mutex);
    if (explicit_set) return explicit_dir;
  }
  if (const char* env = std::getenv("KSG_CACHE_DIR"); env && *env) return std::string(env);
  return std::nullopt;
}

std::string cartan_cache_key(const FiniteGroup& g, const FiniteField& f, std::uint64_t seed) {
  return group_key(g) + "-p" + std::to_string(f.p()) + "-r" + std::to_string(f.r()) + "-s" + std::to_string(seed);
}

std::string serialize_cartan(const CartanData& cd) {
  json j;
  j["schema"] = kCacheSchemaVersion;
  j["key"] = cartan_cache_key(*cd.group, *cd.field, cd.seed);
  j["group_hash"] = cd.group->hash();
  j["group_label"] = cd.group->label();
  j["order"] = cd.group->order();
  j["p"] = cd.field->p();
  j["r"] = cd.field->r();
  j["modulus"] = cd.field->modulus_string();
  j["seed"] = cd.seed;
  json simples = json::array();
  for (const auto& s : cd.simples) {
    json acts = json::array();
    for (const auto& a : s.module.action) acts.push_back(matrix_json(a));
    simples.push_back({{"dim", s.module.dim}, {"endo_degree", s.endo_degree}, {"trivial", s.is_trivial},
                       {"action", acts}});
  }
  j["simples"] = simples;
  j["radical"] = matrix_json(cd.radical);
  j["nilpotency"] = cd.nilpotency;
  j["idempotents"] = cd.idempotents;
  j["idempotent_simple"] = cd.idempotent_simple;
  j["projective_dims"] = cd.projective_dims;
  json cartan = json::array();
  for (std::size_t i = 0; i < cd.cartan.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < cd.cartan.cols(); ++k) row.push_back(cd.cartan.at(i, k).convert_to<long long>());
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  return j.dump(1) + "\n";
}

std::optional<CartanData> deserialize_cartan(const std::string& text, const GroupPtr& g, const FieldPtr& f) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  if (j.value("schema", -1) != kCacheSchemaVersion) return std::nullopt;
  if (j.value("group_hash", std::string()) != g->hash()) return std::nullopt;
  if (j.value("p", 0ull) != f->p() || j.value("r", 0u) != f->r()) return std::nullopt;
  CartanData cd;
  cd.group = g;
  cd.field = f;
  cd.seed = j.at("seed");
  for (const auto& s : j.at("simples")) {
    SimpleModule sm;
    std::vector<FqMatrix> acts;
    for (const auto& a : s.at("action")) acts.push_back(matrix_from(a, f));
    sm.module = GModule(g, f, s.at("dim"), std::move(acts));
    sm.endo_degree = s.at("endo_degree");
    sm.is_trivial = s.at("trivial");
    sm.fingerprint = fingerprint(sm.module);
    sm.id = cd.simples.size();
    cd.simples.push_back(std::move(sm));
  }
  cd.radical = matrix_from(j.at("radical"), f);
  cd.nilpotency = j.at("nilpotency");
  cd.idempotents = j.at("idempotents").get<std::vector<GroupAlgebraElement>>();
  cd.idempotent_simple = j.at("idempotent_simple").get<std::vector<std::size_t>>();
  cd.projective_dims = j.at("projective_dims").get<std::vector<std::size_t>>();
  const std::size_t k = cd.simples.size();
  const auto& rows = j.at("cartan");
  if (rows.size() != k || cd.projective_dims.size() != k || cd.idempotents.size() != cd.idempotent_simple.size())
    return std::nullopt;
  cd.cartan = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    if (rows[i].size() != k) return std::nullopt;
    for (std::size_t c = 0; c < k; ++c) cd.cartan.at(i, c) = rows[i][c].get<long long>();
  }
  // Projectives are respun from the stored idempotents.
  GModule reg = regular_module(g, f, g->order());
  cd.projectives.resize(k);
  std::vector<bool> have(k, false);
  for (std::size_t i = 0; i < cd.idempotents.size(); ++i) {
    const std::size_t s = cd.idempotent_simple[i];
    if (s >= k || cd.idempotents[i].size() != g->order()) return std::nullopt;
    if (have[s]) continue;
    have[s] = true;
    FqMatrix seed_row(f, 0, g->order());
    seed_row.append_row(cd.idempotents[i].data());
    cd.projectives[s] = submodule(reg, spin(reg, seed_row));
    if (cd.projectives[s].dim != cd.projective_dims[s]) return std::nullopt;
  }
  return cd;
}

std::optional<CartanData> load_cartan(const GroupPtr& g, const FieldPtr& f, std::uint64_t seed) {
  auto dir = cache_dir();
  if (!dir) return std::nullopt;
  fs::path path = fs::path(*dir) / (cartan_cache_key(*g, *f, seed) + ".json");
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  auto cd = deserialize_cartan(ss.str(), g, f);
  if (cd && cd->seed != seed) return std::nullopt;
  return cd;
}

void store_cartan(const CartanData& cd) {
  auto dir = cache_dir();
  if (!dir) return;
  static std::atomic<std::uint64_t> counter{0};
  std::error_code ec;
  fs::create_directories(*dir, ec);
  if (ec) return;  // persistence is best effort
  const std::string key = cartan_cache_key(*cd.group, *cd.field, cd.seed);
  fs::path final_path = fs::path(*dir) / (key + ".json");
  std::ostringstream tmp_name;
  tmp_name << key << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
  fs::path tmp = fs::path(*dir) / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << serialize_cartan(cd);
    if (!out) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, final_path, ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace ksg
