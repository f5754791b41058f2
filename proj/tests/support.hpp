#pragma once

#include <random>
#include <vector>

#include "zm/group.hpp"

namespace zm::testing {

/// Every valid (m,n,r) with lo <= mn <= hi, ordered by (mn, m, r).
inline std::vector<ZmParams> triples_by_order(u64 lo, u64 hi) {
  std::vector<ZmParams> out;
  for (u64 order = lo; order <= hi; ++order)
    for (u64 m = 1; m <= order; ++m) {
      if (order % m != 0) continue;
      for (u64 r = 0; r < m; ++r)
        if (!find_violation(m, order / m, static_cast<i64>(r)))
          out.push_back(validate(m, order / m, static_cast<i64>(r)));
    }
  return out;
}

inline std::vector<ZmParams> triples_up_to(u64 hi) { return triples_by_order(1, hi); }

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2024);
  return gen;
}

inline u64 uniform(u64 lo, u64 hi) { return std::uniform_int_distribution<u64>(lo, hi)(rng()); }

inline GroupElement random_element(const ZmParams& p) {
  return {uniform(0, p.n() - 1), uniform(0, p.m() - 1)};
}

}  // namespace zm::testing
