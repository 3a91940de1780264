#pragma once

#include <mutex>
#include <optional>
#include <utility>

namespace gcodes {

/// Single-write lazily computed value, safely publishable to concurrent
/// readers. Copying copies the cached value (if any), not the mutex.
template <typename T>
class CachedValue {
 public:
  CachedValue() = default;
  CachedValue(const CachedValue& other) {
    std::lock_guard lock(other.mutex_);
    value_ = other.value_;
  }
  CachedValue& operator=(const CachedValue& other) {
    if (this != &other) {
      std::optional<T> copy;
      {
        std::lock_guard lock(other.mutex_);
        copy = other.value_;
      }
      std::lock_guard lock(mutex_);
      value_ = std::move(copy);
    }
    return *this;
  }

  template <typename Fn>
  const T& get_or_compute(Fn&& compute) const {
    std::lock_guard lock(mutex_);
    if (!value_) value_ = compute();
    return *value_;
  }

  std::optional<T> peek() const {
    std::lock_guard lock(mutex_);
    return value_;
  }

 private:
  mutable std::mutex mutex_;
  mutable std::optional<T> value_;
};

}  // namespace gcodes
