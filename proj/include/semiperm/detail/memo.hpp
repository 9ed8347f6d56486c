#pragma once

#include <atomic>         // for atomic
#include <memory>         // for shared_ptr
#include <mutex>          // for mutex, lock_guard
#include <string>         // for string
#include <unordered_map>  // for unordered_map

namespace semiperm {

  // Global switch for per-group memoization of derived structures (Sylow
  // systems, subgroup lattices, predicate results). Results never depend on
  // it; it exists so tests can compare cached against uncached evaluation.
  inline std::atomic<bool>& memoization_flag() {
    static std::atomic<bool> flag{true};
    return flag;
  }

  inline void set_memoization(bool on) { memoization_flag().store(on); }
  inline bool memoization_enabled() { return memoization_flag().load(); }

  namespace detail {

    class Memo {
     public:
      template <typename T, typename F>
      std::shared_ptr<T const> get(std::string const& key, F&& compute) {
        if (!memoization_enabled()) {
          return std::make_shared<T const>(compute());
        }
        {
          std::lock_guard<std::mutex> lock(mutex_);
          auto it = map_.find(key);
          if (it != map_.end()) {
            return std::static_pointer_cast<T const>(it->second);
          }
        }
        // Computed unlocked: compute() may itself consult this memo.
        auto value = std::make_shared<T const>(compute());
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, fresh] = map_.emplace(key, value);
        return std::static_pointer_cast<T const>(it->second);
      }

      // Default-constructed T shared under `key` (for internally
      // synchronized caches).
      template <typename T>
      std::shared_ptr<T const> get_default(std::string const& key) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) {
          it = map_.emplace(key, std::make_shared<T const>()).first;
        }
        return std::static_pointer_cast<T const>(it->second);
      }

     private:
      std::mutex mutex_;
      std::unordered_map<std::string, std::shared_ptr<void const>> map_;
    };

  }  // namespace detail
}  // namespace semiperm
