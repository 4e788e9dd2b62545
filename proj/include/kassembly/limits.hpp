#pragma once

#include <cstddef>

namespace kas {

// Size guards shared by every module. Exceeding one is a TooLarge error,
// never a silent truncation.
struct Limits {
  std::size_t max_group_order = 64;
  std::size_t max_dense_entries = 1'000'000;
  int max_degree = 4;
  std::size_t max_generators = 100'000;
};

}  // namespace kas
