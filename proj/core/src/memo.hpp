#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace nestfock::detail {

// Write-once map: the first stored value for a key wins. Concurrent callers
// may compute the same value twice; both results are equal by construction.
template <class K, class V>
class WriteOnceMap {
 public:
  std::optional<V> find(const K& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  V insert(const K& key, V value) {
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

  template <class F>
  V get_or_compute(const K& key, F&& compute) {
    if (auto hit = find(key)) return *hit;
    return insert(key, compute());
  }

  void clear() {
    std::unique_lock lock(mu_);
    map_.clear();
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<K, V> map_;
};

}  // namespace nestfock::detail
