#pragma once

// All lattices with a given number of elements, one per isomorphism class.
// Elements are 0 (bottom), 1..n-2 and n-1 (top); the middle carries every
// partial order compatible with index order, so each class appears at
// least once. Duplicates are removed by isomorphism search.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toplat/error.hpp"
#include "toplat/lattice.hpp"

namespace small_lattices {

inline std::vector<toplat::FiniteLattice> all_lattices(std::size_t n) {
  using toplat::FiniteLattice;
  if (n == 1) return {FiniteLattice()};
  const std::size_t m = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

  std::vector<FiniteLattice> out;
  std::vector<std::uint32_t> above(m);
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << pairs.size()); ++r) {
    for (std::size_t i = 0; i < m; ++i) above[i] = std::uint32_t{1} << i;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (r >> k & 1U) above[pairs[k].first] |= std::uint32_t{1} << pairs[k].second;
    bool transitive = true;
    for (std::size_t i = 0; i < m && transitive; ++i)
      for (std::size_t j = 0; j < m && transitive; ++j)
        if (above[i] >> j & 1U) transitive = (above[j] & ~above[i]) == 0;
    if (!transitive) continue;
    auto leq = [&](std::size_t a, std::size_t b) {
      if (a == 0 || b == n - 1) return true;
      if (b == 0 || a == n - 1) return a == b;
      return ((above[a - 1] >> (b - 1)) & 1U) != 0;
    };
    try {
      auto l = FiniteLattice::build(n, leq);
      bool fresh = true;
      for (const auto& seen : out)
        if (toplat::are_isomorphic(seen, l)) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(std::move(l));
    } catch (const toplat::NotALattice&) {
    }
  }
  return out;
}

}  // namespace small_lattices
