#pragma once

#include <concepts>
#include <string>

#include "nilchain/errors.hpp"

namespace nilchain {

/// lhs += rhs, throwing OverflowError instead of wrapping.
template <std::integral T>
inline void checked_add(T& lhs, T rhs, const char* what = "accumulator") {
  T result;
  if (__builtin_add_overflow(lhs, rhs, &result)) {
    throw OverflowError(std::string("integer overflow in ") + what);
  }
  lhs = result;
}

/// Saturating addition for counters used as budget guards.
template <std::unsigned_integral T>
inline T saturating_add(T lhs, T rhs) noexcept {
  T result;
  if (__builtin_add_overflow(lhs, rhs, &result)) {
    return static_cast<T>(~T{0});
  }
  return result;
}

}  // namespace nilchain
