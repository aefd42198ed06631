#pragma once

#include <atomic>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "plucker/graph.hpp"
#include "plucker/rational.hpp"

namespace plucker {

using Expansion = std::vector<std::pair<GraphKey, Q>>;

// Memo table for straightening: canonical graph -> non-crossing expansion.
class StraightenCache {
 public:
  static constexpr int kVersion = 1;
  static StraightenCache& global();

  std::shared_ptr<const Expansion> find(int n, const GraphKey& key);
  void insert(int n, const GraphKey& key, std::shared_ptr<const Expansion> value);
  void clear();
  void set_enabled(bool on) { enabled_ = on; }
  bool enabled() const { return enabled_; }

  std::size_t size() const;
  long long hits() const { return hits_; }
  long long misses() const { return misses_; }

  // One JSON file per (n, degree). Returns number of files written / read.
  int save(const std::string& dir) const;
  // Corrupt or version-mismatched files are skipped with a warning on stderr.
  int load(const std::string& dir, std::vector<std::string>* warnings = nullptr);

 private:
  struct Key {
    int n;
    GraphKey g;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return GraphKeyHash{}(k.g) * 31u + k.n; }
  };
  mutable std::shared_mutex mu_;
  std::unordered_map<Key, std::shared_ptr<const Expansion>, KeyHash> map_;
  std::atomic<bool> enabled_{true};
  mutable std::atomic<long long> hits_{0}, misses_{0};
};

}  // namespace plucker
