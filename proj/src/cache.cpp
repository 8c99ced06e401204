#include "modp/cache.hpp"

#include "modp/errors.hpp"
#include "modp/format.hpp"

#include "json.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace modp {

namespace fs = std::filesystem;

namespace {

constexpr const char* kStatsFile = "stats.json";
constexpr const char* kEntryDir = "intervals";

// FNV-1a, so file names are stable across builds and platforms.
std::string key_digest(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot read " + p.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("corrupt cache file " + p.string() + ": " + e.what());
  }
}

void write_json_atomic(const fs::path& p, const nlohmann::json& j) {
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << j.dump(1) << '\n';
    if (!out) throw IoError("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, p, ec);
  if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

}  // namespace

DiskIntervalStore::DiskIntervalStore(fs::path dir, const AffineWeylGroup& group) : dir_(std::move(dir)), group_(&group) {
  std::error_code ec;
  fs::create_directories(dir_ / kEntryDir, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  if (fs::exists(dir_ / kStatsFile)) {
    const auto j = read_json(dir_ / kStatsFile);
    hits_ = j.value("hits", 0LL);
    misses_ = j.value("misses", 0LL);
  }
}

DiskIntervalStore::~DiskIntervalStore() {
  try {
    flush();
  } catch (const std::exception&) {
  }
}

fs::path DiskIntervalStore::entry_path(const std::string& key) const {
  return dir_ / kEntryDir / (key_digest(key) + ".json");
}

std::optional<std::vector<AffineWeylElement>> DiskIntervalStore::load(const std::string& key) {
  const fs::path p = entry_path(key);
  dirty_ = true;
  if (!fs::exists(p)) {
    ++misses_;
    return std::nullopt;
  }
  const auto j = read_json(p);
  if (j.value("key", std::string()) != key) {
    ++misses_;
    return std::nullopt;
  }
  std::vector<AffineWeylElement> out;
  for (const auto& s : j.at("elements")) out.push_back(parse_element(*group_, s.get<std::string>()));
  ++hits_;
  return out;
}

void DiskIntervalStore::store(const std::string& key, const std::vector<AffineWeylElement>& value) {
  nlohmann::json j;
  j["key"] = key;
  j["elements"] = nlohmann::json::array();
  for (const auto& w : value) j["elements"].push_back(format_element(*group_, w));
  write_json_atomic(entry_path(key), j);
}

std::size_t DiskIntervalStore::entry_count() const {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir_ / kEntryDir))
    if (e.path().extension() == ".json") ++n;
  return n;
}

void DiskIntervalStore::flush() {
  if (!dirty_) return;
  write_json_atomic(dir_ / kStatsFile, nlohmann::json{{"hits", hits_}, {"misses", misses_}});
  dirty_ = false;
}

void DiskIntervalStore::clear() {
  std::error_code ec;
  fs::remove_all(dir_ / kEntryDir, ec);
  if (ec) throw IoError("cannot clear " + dir_.string() + ": " + ec.message());
  fs::create_directories(dir_ / kEntryDir, ec);
  if (ec) throw IoError("cannot recreate " + dir_.string() + ": " + ec.message());
  hits_ = 0;
  misses_ = 0;
  dirty_ = true;
  flush();
}

}  // namespace modp
