#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kmetric/bitset.hpp"
#include "kmetric/errors.hpp"

namespace kmetric::testutil {

// Runs f and reports which ErrorCode it threw, if any.
template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
    return std::nullopt;
  } catch (const Error& e) {
    return e.code();
  }
}

inline Bitset bits(int capacity, std::initializer_list<int> members) {
  Bitset b(capacity);
  for (int i : members) b.set(i);
  return b;
}

using Edges = std::vector<std::pair<int, int>>;

}  // namespace kmetric::testutil
