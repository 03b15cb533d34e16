#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "wonderlat/types.hpp"

namespace wonderlat::test {

inline IntVector ivec(std::initializer_list<Integer> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (Integer x : values) v(k++) = x;
  return v;
}

inline RatVector rvec(std::initializer_list<Rational> values) {
  RatVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index k = 0;
  for (const Rational& x : values) v(k++) = x;
  return v;
}

/// Every simple type of rank <= max_rank, in a fixed order.
inline std::vector<std::string> simple_types(int min_rank, int max_rank) {
  std::vector<std::string> out;
  for (char s : std::string("ABCDEFG")) {
    for (int r = min_rank; r <= max_rank; ++r) {
      const bool ok = (s == 'A' && r >= 1) || ((s == 'B' || s == 'C') && r >= 2) || (s == 'D' && r >= 3) ||
                      (s == 'E' && r >= 6 && r <= 8) || (s == 'F' && r == 4) || (s == 'G' && r == 2);
      if (ok) out.push_back(std::string(1, s) + std::to_string(r));
    }
  }
  return out;
}

}  // namespace wonderlat::test
