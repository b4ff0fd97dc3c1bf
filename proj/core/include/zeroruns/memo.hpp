#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "zeroruns/count.hpp"

namespace zeroruns {

/// Packs a small integer triple into one key. Each component must lie in
/// [-2^20, 2^20); callers guarantee this after their feasibility checks.
constexpr std::uint64_t pack_key(long a, long b, long c) {
  constexpr std::uint64_t mask = (std::uint64_t{1} << 21) - 1;
  return ((static_cast<std::uint64_t>(a) & mask) << 42) |
         ((static_cast<std::uint64_t>(b) & mask) << 21) |
         (static_cast<std::uint64_t>(c) & mask);
}

/// Memo table shared by concurrent callers. Readers take a shared lock;
/// values are computed outside any lock and inserted afterwards, so two
/// threads may compute the same entry but always store the same value.
class MemoTable {
 public:
  std::optional<Count> find(std::uint64_t key) const {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    return std::nullopt;
  }

  void store(std::uint64_t key, const Count& value) {
    std::unique_lock lock(mutex_);
    if (limit_ && table_.size() >= *limit_) return;
    table_.try_emplace(key, value);
  }

  /// Entry cap; std::nullopt (the default) means unbounded. Once full the
  /// table stops growing but stays correct.
  void set_limit(std::optional<std::size_t> limit) {
    std::unique_lock lock(mutex_);
    limit_ = limit;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Count> table_;
  std::optional<std::size_t> limit_;
};

}  // namespace zeroruns
