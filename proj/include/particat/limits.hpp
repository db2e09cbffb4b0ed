#pragma once

#include <cstddef>

namespace particat {

struct Limits {
  std::size_t max_enumeration_points = 10;  // k + l for enumerate(C, k, l)
  std::size_t max_projective_arity = 8;     // k for projectives(C, k)
  std::size_t max_closure_points = 10;
  std::size_t max_symmetric_degree = 8;     // t for searches over S_t
  std::size_t max_matrix_rows = 4096;       // N^max(k, l)
  std::size_t max_rational_entries = 20'000'000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

}  // namespace particat
