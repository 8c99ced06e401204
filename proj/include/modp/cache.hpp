#pragma once

#include "modp/hecke.hpp"

#include <filesystem>
#include <string>

namespace modp {

/// Lower intervals on disk, one JSON file per key, plus hit/miss counters
/// in stats.json. Entries are written to a temporary file and renamed.
class DiskIntervalStore : public IntervalStore {
 public:
  DiskIntervalStore(std::filesystem::path dir, const AffineWeylGroup& group);
  ~DiskIntervalStore() override;

  std::optional<std::vector<AffineWeylElement>> load(const std::string& key) override;
  void store(const std::string& key, const std::vector<AffineWeylElement>& value) override;

  std::size_t entry_count() const;
  long long hits() const { return hits_; }
  long long misses() const { return misses_; }
  /// Writes the counters accumulated so far to stats.json.
  void flush();
  /// Removes every entry and resets the counters.
  void clear();

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path entry_path(const std::string& key) const;

  std::filesystem::path dir_;
  const AffineWeylGroup* group_;
  long long hits_ = 0;
  long long misses_ = 0;
  bool dirty_ = false;
};

}  // namespace modp
