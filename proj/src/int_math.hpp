#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "cset/error.hpp"

namespace cset::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "sum " + std::to_string(a) + " + " +
                                         std::to_string(b) + " overflows 64 bits");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "product " + std::to_string(a) + " * " +
                                         std::to_string(b) + " overflows 64 bits");
  }
  return r;
}

inline std::uint64_t abs_u64(std::int64_t x) noexcept {
  return x < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(x)
               : static_cast<std::uint64_t>(x);
}

/// |b - a| without overflow.
inline std::uint64_t distance(std::int64_t a, std::int64_t b) noexcept {
  return a <= b ? static_cast<std::uint64_t>(b) - static_cast<std::uint64_t>(a)
                : static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b);
}

/// Euclidean remainder in [0, m), m >= 1.
inline std::uint64_t euclid_mod(std::int64_t x, std::uint64_t m) noexcept {
  std::uint64_t r = abs_u64(x) % m;
  return (x < 0 && r != 0) ? m - r : r;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                             std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline mpz_class to_mpz(std::int64_t x) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), x);
  return z;
}

inline mpz_class to_mpz_u(std::uint64_t x) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, -1, sizeof x, 0, 0, &x);
  return z;
}

}  // namespace cset::detail
