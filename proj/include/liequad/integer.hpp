#ifndef LIEQUAD_INTEGER_HPP
#define LIEQUAD_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>

#include "liequad/error.hpp"

namespace liequad {

/// Arbitrary precision integer used for elimination, minors and dimensions.
using Integer = mpz_class;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform required");

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace liequad

#endif  // LIEQUAD_INTEGER_HPP
