#include "eulersum/cache.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace eulersum {

namespace {

nlohmann::json record_to_json(const CacheRecord& r) {
  return nlohmann::json{{"expr", r.expr},         {"digits", r.digits},         {"cutoff", r.cutoff},
                        {"extrapolate", r.extrapolate}, {"quad_level", r.quad_level}, {"value", r.value},
                        {"err", r.err},           {"version", r.version}};
}

CacheRecord record_from_json(const nlohmann::json& j) {
  CacheRecord r;
  r.expr = j.at("expr").get<std::string>();
  r.digits = j.at("digits").get<int>();
  r.cutoff = j.at("cutoff").get<long>();
  r.extrapolate = j.at("extrapolate").get<bool>();
  r.quad_level = j.at("quad_level").get<int>();
  r.value = j.at("value").get<std::string>();
  r.err = j.at("err").get<std::string>();
  r.version = j.at("version").get<int>();
  return r;
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      CacheRecord r = record_from_json(nlohmann::json::parse(line));
      if (r.version != kCacheSchemaVersion) continue;
      Key key{r.expr, r.digits, r.cutoff, r.extrapolate, r.quad_level};
      entries_.insert_or_assign(std::move(key), std::move(r));
    } catch (const std::exception& e) {
      warnings_.push_back(path_.string() + ":" + std::to_string(line_no) + ": skipped corrupt cache line");
    }
  }
}

std::optional<CacheRecord> ResultCache::lookup(const std::string& expr, int digits, long cutoff, bool extrapolate,
                                               int quad_level) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(Key{expr, digits, cutoff, extrapolate, quad_level});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const CacheRecord& record) {
  std::lock_guard lock(mutex_);
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot write cache file " + path_.string());
  out << record_to_json(record).dump() << '\n';
  out.flush();
  entries_.insert_or_assign(Key{record.expr, record.digits, record.cutoff, record.extrapolate, record.quad_level},
                            record);
}

size_t ResultCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

}  // namespace eulersum
