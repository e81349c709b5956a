#pragma once
/// @file errors.hpp
/// @brief Exception types shared across the library.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palaps {

/// Thrown when an exhaustive enumeration would exceed its configured cap.
class enumeration_overflow : public std::runtime_error {
 public:
  explicit enumeration_overflow(std::size_t cap)
      : std::runtime_error("enumeration would exceed cap of " +
                           std::to_string(cap) + " strings"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Thrown when the level pipeline exceeds its representation budget.
class resource_limit_error : public std::runtime_error {
 public:
  resource_limit_error(std::size_t level, std::size_t count, std::size_t cap)
      : std::runtime_error("level " + std::to_string(level) + " holds " +
                           std::to_string(count) +
                           " representations, exceeding cap " +
                           std::to_string(cap)),
        level_(level),
        count_(count),
        cap_(cap) {}
  std::size_t level() const noexcept { return level_; }
  std::size_t count() const noexcept { return count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t level_;
  std::size_t count_;
  std::size_t cap_;
};

/// Thrown when a structural transform is applied where its precondition fails.
class transform_error : public std::logic_error {
 public:
  explicit transform_error(const std::string& what)
      : std::logic_error(what) {}
};

/// Thrown when decoding structured input (JSON, profiles) fails.
class decode_error : public std::runtime_error {
 public:
  explicit decode_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace palaps
