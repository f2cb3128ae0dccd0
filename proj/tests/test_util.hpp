#pragma once

#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "cset/core.hpp"
#include "cset/error.hpp"

namespace cset::testing {

inline std::vector<std::int64_t> elems(const IntSet& a) { return {a.begin(), a.end()}; }

template <typename Fn>
ErrorKind error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no cset::Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace cset::testing
