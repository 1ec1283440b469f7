#pragma once

#include <map>
#include <mutex>
#include <optional>

namespace eulersum::detail {

// Process-wide memo for pure evaluations. Values are copied out under the lock.
template <typename Key, typename Value>
class Memo {
 public:
  std::optional<Value> find(const Key& key) const {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(const Key& key, const Value& value) {
    std::lock_guard lock(mutex_);
    map_.emplace(key, value);
  }

  void clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, Value> map_;
};

}  // namespace eulersum::detail
