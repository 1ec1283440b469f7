#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace eulersum {

inline constexpr int kCacheSchemaVersion = 1;

/// One JSON line: {"expr","digits","cutoff","extrapolate","quad_level","value","err","version"}.
struct CacheRecord {
  std::string expr;  ///< canonical expression text
  int digits = 0;
  long cutoff = 0;
  bool extrapolate = true;
  int quad_level = 0;
  std::string value;
  std::string err;
  int version = kCacheSchemaVersion;
};

/// Append-only JSON-lines store. The file is scanned once on open; lines that
/// fail to parse are skipped and reported through warnings().
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  std::optional<CacheRecord> lookup(const std::string& expr, int digits, long cutoff, bool extrapolate,
                                    int quad_level) const;
  /// Appends one line and flushes it; throws std::runtime_error if the file cannot be written.
  void store(const CacheRecord& record);

  const std::vector<std::string>& warnings() const { return warnings_; }
  size_t size() const;

 private:
  using Key = std::tuple<std::string, int, long, bool, int>;

  std::filesystem::path path_;
  std::map<Key, CacheRecord> entries_;
  std::vector<std::string> warnings_;
  mutable std::mutex mutex_;
};

}  // namespace eulersum
