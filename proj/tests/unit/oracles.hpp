#pragma once

// Brute-force reference implementations used only by tests. Nothing here
// shares code with the library beyond the group's multiplication table.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "toplat/group.hpp"

namespace oracle {

using Set = std::set<std::uint32_t>;

inline bool closed(const toplat::FiniteGroup& g, const Set& s) {
  if (s.empty()) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

// Every non-empty subset closed under multiplication (finite => subgroup).
inline std::set<Set> subgroups_by_subsets(const toplat::FiniteGroup& g) {
  std::set<Set> out;
  const std::size_t n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> g.identity() & 1U)) continue;
    Set s;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask >> i & 1U) s.insert(i);
    if (closed(g, s)) out.insert(s);
  }
  return out;
}

inline bool normal(const toplat::FiniteGroup& g, const Set& s) {
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (auto h : s)
      if (!s.count(g.mul(g.mul(x, h), g.inverse(x)))) return false;
  return true;
}

// Permutation search for a multiplication-preserving bijection.
inline bool isomorphic(const toplat::FiniteGroup& a, const toplat::FiniteGroup& b) {
  const std::size_t n = a.order();
  if (n != b.order()) return false;
  std::vector<std::int64_t> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t x) -> bool {
    if (x == n) {
      for (std::uint32_t p = 0; p < n; ++p)
        for (std::uint32_t q = 0; q < n; ++q)
          if (map[a.mul(p, q)] != b.mul(static_cast<std::uint32_t>(map[p]), static_cast<std::uint32_t>(map[q])))
            return false;
      return true;
    }
    for (std::uint32_t y = 0; y < n; ++y) {
      if (used[y] || a.element_order(static_cast<std::uint32_t>(x)) != b.element_order(y)) continue;
      // Partial check against already assigned pairs.
      bool ok = true;
      for (std::uint32_t p = 0; p < x && ok; ++p) {
        const auto prod = a.mul(p, static_cast<std::uint32_t>(x));
        if (prod < x && map[prod] != b.mul(static_cast<std::uint32_t>(map[p]), y)) ok = false;
      }
      if (!ok) continue;
      used[y] = true;
      map[x] = y;
      if (go(x + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  return go(0);
}

}  // namespace oracle
