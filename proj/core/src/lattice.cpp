#include "toplat/lattice.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <tuple>

#include "toplat/error.hpp"
#include "toplat/parallel.hpp"

namespace toplat {

namespace {

using Word = std::uint64_t;
using Index = FiniteLattice::Index;

std::string str(std::size_t v) { return std::to_string(v); }

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

}  // namespace

FiniteLattice::FiniteLattice() = default;

FiniteLattice FiniteLattice::build(std::size_t n, const LeqFn& leq, std::vector<std::string> labels) {
  if (n == 0) throw InvalidArgument("build_lattice: a lattice needs at least one element");
  if (n > Limits::kHardMaxLatticeSize)
    throw ResourceLimit("build_lattice: " + str(n) + " elements exceeds cap " + str(Limits::kHardMaxLatticeSize));
  if (!labels.empty() && labels.size() != n) throw InvalidArgument("build_lattice: label count mismatch");

  FiniteLattice l;
  l.n_ = n;
  const std::size_t w = (n + 63) / 64;
  l.words_ = w;
  l.up_.assign(n * w, 0);
  l.down_.assign(n * w, 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (leq(a, b)) {
        l.up_[a * w + b / 64] |= Word{1} << (b % 64);
        l.down_[b * w + a / 64] |= Word{1} << (a % 64);
      }

  auto row = [w](const std::vector<Word>& rows, Index r) { return rows.data() + r * w; };

  for (Index a = 0; a < n; ++a)
    if (!l.leq(a, a)) throw NotAPoset("relation is not reflexive at " + str(a), {a});
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (l.leq(a, b) && l.leq(b, a))
        throw NotAPoset("relation is not antisymmetric at (" + str(a) + "," + str(b) + ")", {a, b});
  for (Index a = 0; a < n; ++a) {
    const Word* ua = row(l.up_, a);
    for (Index b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      const Word* ub = row(l.up_, b);
      for (std::size_t k = 0; k < w; ++k)
        if (ub[k] & ~ua[k]) {
          const Index c = k * 64 + static_cast<Index>(std::countr_zero(ub[k] & ~ua[k]));
          throw NotAPoset("relation is not transitive at (" + str(a) + "," + str(b) + "," + str(c) + ")",
                          {a, b, c});
        }
    }
  }

  l.down_size_.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < w; ++k) c += static_cast<std::size_t>(std::popcount(row(l.down_, a)[k]));
    l.down_size_[a] = c;
  }

  // Linear extension: ascending down-set size. In the permuted bit rows the
  // first upper bound is minimal and the last lower bound maximal.
  std::vector<Index> ord(n);
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(), [&](Index x, Index y) { return l.down_size_[x] < l.down_size_[y]; });
  std::vector<Index> pos(n);
  for (Index i = 0; i < n; ++i) pos[ord[i]] = i;
  std::vector<Word> up_p(n * w, 0), down_p(n * w, 0);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      if (l.leq(a, b)) up_p[a * w + pos[b] / 64] |= Word{1} << (pos[b] % 64);
      if (l.leq(b, a)) down_p[a * w + pos[b] / 64] |= Word{1} << (pos[b] % 64);
    }

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  std::vector<Word> common(w);
  for (Index a = 0; a < n; ++a) {
    l.meet_[a * n + a] = l.join_[a * n + a] = static_cast<std::uint16_t>(a);
    for (Index b = a + 1; b < n; ++b) {
      // Join: least element of the common up-set.
      std::size_t first = kNone;
      for (std::size_t k = 0; k < w; ++k) {
        common[k] = up_p[a * w + k] & up_p[b * w + k];
        if (first == kNone && common[k]) first = k * 64 + static_cast<std::size_t>(std::countr_zero(common[k]));
      }
      if (first == kNone) throw NotALattice("no upper bound for (" + str(a) + "," + str(b) + ")", a, b);
      const Index j = ord[first];
      for (std::size_t k = 0; k < w; ++k)
        if (common[k] & ~up_p[j * w + k])
          throw NotALattice("no least upper bound for (" + str(a) + "," + str(b) + ")", a, b);
      // Meet: greatest element of the common down-set.
      std::size_t last = kNone;
      for (std::size_t k = w; k-- > 0;) {
        common[k] = down_p[a * w + k] & down_p[b * w + k];
        if (last == kNone && common[k]) last = k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(common[k]));
      }
      if (last == kNone) throw NotALattice("no lower bound for (" + str(a) + "," + str(b) + ")", a, b);
      const Index m = ord[last];
      for (std::size_t k = 0; k < w; ++k)
        if (common[k] & ~down_p[m * w + k])
          throw NotALattice("no greatest lower bound for (" + str(a) + "," + str(b) + ")", a, b);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint16_t>(j);
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint16_t>(m);
    }
  }

  l.bottom_ = ord.front();
  l.top_ = ord.back();

  // b is covered by a iff a is minimal in the strict up-set of b.
  l.cover_.assign(n * w, 0);
  l.upper_covers_.assign(n, {});
  l.lower_covers_.assign(n, {});
  for (Index b = 0; b < n; ++b) {
    const Word* ub = row(l.up_, b);
    for (Index a = 0; a < n; ++a) {
      if (a == b || !l.leq(b, a)) continue;
      const Word* da = row(l.down_, a);
      bool cover = true;
      for (std::size_t k = 0; k < w && cover; ++k) {
        Word between = ub[k] & da[k];
        if (k == b / 64) between &= ~(Word{1} << (b % 64));
        if (k == a / 64) between &= ~(Word{1} << (a % 64));
        cover = between == 0;
      }
      if (cover) {
        l.cover_[b * w + a / 64] |= Word{1} << (a % 64);
        l.upper_covers_[b].push_back(a);
        l.lower_covers_[a].push_back(b);
      }
    }
  }

  if (labels.empty()) {
    labels.resize(n);
    for (Index i = 0; i < n; ++i) labels[i] = str(i);
  }
  l.labels_ = std::move(labels);
  return l;
}

Index FiniteLattice::big_meet(std::span<const Index> s) const noexcept {
  Index r = top_;
  for (auto x : s) r = meet(r, x);
  return r;
}

Index FiniteLattice::big_join(std::span<const Index> s) const noexcept {
  Index r = bottom_;
  for (auto x : s) r = join(r, x);
  return r;
}

std::vector<Index> FiniteLattice::up_set(Index a) const {
  std::vector<Index> out;
  for (Index b = 0; b < n_; ++b)
    if (leq(a, b)) out.push_back(b);
  return out;
}

std::vector<Index> FiniteLattice::down_set(Index a) const {
  std::vector<Index> out;
  for (Index b = 0; b < n_; ++b)
    if (leq(b, a)) out.push_back(b);
  return out;
}

// --- law checks ---------------------------------------------------------------

using Triple = std::array<std::size_t, 3>;
using Pair = std::array<std::size_t, 2>;

namespace {

Verdict from_triple(const std::optional<Triple>& t) {
  if (!t) return Verdict::pass();
  return Verdict::fail({(*t)[0], (*t)[1], (*t)[2]});
}

Verdict from_pair(const std::optional<Pair>& t) {
  if (!t) return Verdict::pass();
  return Verdict::fail({(*t)[0], (*t)[1]});
}

}  // namespace

Verdict check_modular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  return from_triple(find_first<Triple>(n, [&](std::size_t a) -> std::optional<Triple> {
    const auto ups = l.up_set(a);
    for (Index b = 0; b < n; ++b) {
      const Index ab = l.join(a, b);
      for (Index c : ups)
        if (l.join(a, l.meet(b, c)) != l.meet(ab, c)) return Triple{a, b, c};
    }
    return std::nullopt;
  }));
}

Verdict check_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  return from_triple(find_first<Triple>(n, [&](std::size_t a) -> std::optional<Triple> {
    for (Index b = 0; b < n; ++b) {
      const Index ab = l.meet(a, b);
      for (Index c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(ab, l.meet(a, c))) return Triple{a, b, c};
    }
    return std::nullopt;
  }));
}

Verdict check_semimodular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  return from_triple(find_first<Triple>(n, [&](std::size_t b) -> std::optional<Triple> {
    for (Index a : l.upper_covers(b))
      for (Index c = 0; c < n; ++c)
        if (!l.covers_or_equal(l.join(b, c), l.join(a, c))) return Triple{b, a, c};
    return std::nullopt;
  }));
}

Verdict check_dually_semimodular(const FiniteLattice& l) {
  const std::size_t n = l.size();
  return from_triple(find_first<Triple>(n, [&](std::size_t b) -> std::optional<Triple> {
    for (Index a : l.upper_covers(b))
      for (Index c = 0; c < n; ++c)
        if (!l.covers_or_equal(l.meet(b, c), l.meet(a, c))) return Triple{b, a, c};
    return std::nullopt;
  }));
}

Verdict check_dual_birkhoff(const FiniteLattice& l) {
  const std::size_t n = l.size();
  return from_pair(find_first<Pair>(n, [&](std::size_t a) -> std::optional<Pair> {
    for (Index b = 0; b < n; ++b) {
      const Index j = l.join(a, b);
      if (!l.covers(a, j) || !l.covers(b, j)) continue;
      const Index m = l.meet(a, b);
      if (!l.covers(m, a) || !l.covers(m, b)) return Pair{a, b};
    }
    return std::nullopt;
  }));
}

Verdict check_birkhoff(const FiniteLattice& l) {
  const std::size_t n = l.size();
  return from_pair(find_first<Pair>(n, [&](std::size_t a) -> std::optional<Pair> {
    for (Index b = 0; b < n; ++b) {
      const Index m = l.meet(a, b);
      if (!l.covers(m, a) || !l.covers(m, b)) continue;
      const Index j = l.join(a, b);
      if (!l.covers(a, j) || !l.covers(b, j)) return Pair{a, b};
    }
    return std::nullopt;
  }));
}

// --- chains -------------------------------------------------------------------

std::vector<Chain> maximal_chains(const FiniteLattice& l, std::size_t a, std::size_t b, const Limits& limits) {
  if (a >= l.size() || b >= l.size() || !l.leq(a, b))
    throw InvalidArgument("maximal_chains: invalid interval [" + str(a) + "," + str(b) + "]");
  std::vector<Chain> out;
  std::vector<std::size_t> path{a};
  auto dfs = [&](auto&& self, std::size_t x) -> void {
    if (x == b) {
      if (out.size() >= limits.max_chains)
        throw ResourceLimit("maximal_chains: more than " + str(limits.max_chains) + " chains");
      out.push_back(Chain{path});
      return;
    }
    for (std::size_t y : l.upper_covers(x)) {
      if (!l.leq(y, b)) continue;
      path.push_back(y);
      self(self, y);
      path.pop_back();
    }
  };
  dfs(dfs, a);
  return out;
}

namespace {

// Shortest and longest cover-chain lengths from every x <= target up to
// target; kNone for elements not below target.
struct ChainBounds {
  std::vector<std::size_t> lo;
  std::vector<std::size_t> hi;
};

ChainBounds chain_bounds_to(const FiniteLattice& l, std::size_t target) {
  const std::size_t n = l.size();
  ChainBounds cb{std::vector<std::size_t>(n, kNone), std::vector<std::size_t>(n, kNone)};
  auto below = l.down_set(target);
  std::sort(below.begin(), below.end(),
            [&](std::size_t x, std::size_t y) { return l.down_size(x) > l.down_size(y); });
  for (std::size_t x : below) {
    if (x == target) {
      cb.lo[x] = cb.hi[x] = 0;
      continue;
    }
    std::size_t lo = kNone, hi = 0;
    for (std::size_t y : l.upper_covers(x)) {
      if (cb.lo[y] == kNone) continue;
      lo = std::min(lo, cb.lo[y] + 1);
      hi = std::max(hi, cb.hi[y] + 1);
    }
    cb.lo[x] = lo;
    cb.hi[x] = hi;
  }
  return cb;
}

Chain greedy_chain(const FiniteLattice& l, const std::vector<std::size_t>& bound, std::size_t a, std::size_t b) {
  Chain c{{a}};
  std::size_t x = a;
  while (x != b) {
    for (std::size_t y : l.upper_covers(x))
      if (bound[y] != kNone && bound[y] + 1 == bound[x]) {
        x = y;
        break;
      }
    c.elements.push_back(x);
  }
  return c;
}

}  // namespace

JordanHolderReport jordan_holder_check(const FiniteLattice& l, std::size_t a, std::size_t b) {
  if (a >= l.size() || b >= l.size() || !l.leq(a, b))
    throw InvalidArgument("jordan_holder_check: invalid interval [" + str(a) + "," + str(b) + "]");
  const auto cb = chain_bounds_to(l, b);
  JordanHolderReport r;
  r.shortest = cb.lo[a];
  r.longest = cb.hi[a];
  r.uniform = r.shortest == r.longest;
  r.length = r.uniform ? r.shortest : 0;
  if (!r.uniform) r.witness = std::make_pair(greedy_chain(l, cb.lo, a, b), greedy_chain(l, cb.hi, a, b));
  return r;
}

bool jordan_holder_everywhere(const FiniteLattice& l) {
  for (std::size_t b = 0; b < l.size(); ++b) {
    const auto cb = chain_bounds_to(l, b);
    for (std::size_t x = 0; x < l.size(); ++x)
      if (cb.lo[x] != cb.hi[x]) return false;
  }
  return true;
}

std::vector<std::size_t> k_maximal_elements(const FiniteLattice& l, std::size_t k) {
  const auto cb = chain_bounds_to(l, l.top());
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (cb.lo[x] == k && cb.hi[x] == k) out.push_back(x);
  return out;
}

std::size_t height(const FiniteLattice& l) { return chain_bounds_to(l, l.top()).hi[l.bottom()]; }

bool refines(const FiniteLattice& l, const Chain& c, const Chain& d) {
  if (c.elements.empty() || d.elements.empty() || c.elements.front() != d.elements.front() ||
      c.elements.back() != d.elements.back())
    throw InvalidArgument("refines: chains must share endpoints");
  for (auto x : d.elements)
    if (std::find(c.elements.begin(), c.elements.end(), x) == c.elements.end()) return false;
  for (auto x : c.elements) {
    bool bracketed = false;
    for (auto lo : d.elements)
      for (auto hi : d.elements)
        if (l.leq(lo, x) && l.leq(x, hi)) bracketed = true;
    if (!bracketed) return false;
  }
  return true;
}

std::optional<std::size_t> refining_element(const FiniteLattice& l, const Chain& c) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i + 1 < c.elements.size(); ++i) {
    const auto x = c.elements[i], y = c.elements[i + 1];
    for (std::size_t z = 0; z < l.size(); ++z)
      if (l.less(x, z) && l.less(z, y) && (!best || z < *best)) {
        best = z;
        break;
      }
  }
  return best;
}

// --- derived lattices ---------------------------------------------------------

FiniteLattice interval(const FiniteLattice& l, std::size_t a, std::size_t b) {
  if (a >= l.size() || b >= l.size() || !l.leq(a, b))
    throw InvalidArgument("interval: invalid interval [" + str(a) + "," + str(b) + "]");
  std::vector<std::size_t> members;
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.leq(a, x) && l.leq(x, b)) {
      members.push_back(x);
      labels.push_back(l.label(x));
    }
  return FiniteLattice::build(
      members.size(), [&](std::size_t i, std::size_t j) { return l.leq(members[i], members[j]); },
      std::move(labels));
}

FiniteLattice product_lattice(const FiniteLattice& l1, const FiniteLattice& l2) {
  const std::size_t n1 = l1.size(), n2 = l2.size();
  if (n1 * n2 > Limits::kHardMaxLatticeSize)
    throw ResourceLimit("product_lattice: " + str(n1 * n2) + " elements exceeds cap");
  std::vector<std::string> labels(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) labels[i * n2 + j] = "(" + l1.label(i) + "," + l2.label(j) + ")";
  return FiniteLattice::build(
      n1 * n2,
      [&](std::size_t x, std::size_t y) { return l1.leq(x / n2, y / n2) && l2.leq(x % n2, y % n2); },
      std::move(labels));
}

std::optional<std::vector<std::size_t>> are_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2,
                                                       const Limits& limits) {
  const std::size_t n = l1.size();
  if (n != l2.size()) return std::nullopt;
  if (n > limits.isomorphism)
    throw ResourceLimit("are_isomorphic: " + str(n) + " elements exceeds cap " + str(limits.isomorphism));

  // Per-element invariants preserved by any isomorphism.
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;
  auto keys = [](const FiniteLattice& l) {
    const auto to_top = chain_bounds_to(l, l.top());
    std::vector<Key> k(l.size());
    for (std::size_t x = 0; x < l.size(); ++x)
      k[x] = {l.down_size(x), l.up_set(x).size(), l.upper_covers(x).size(), l.lower_covers(x).size(),
              to_top.lo[x], to_top.hi[x]};
    return k;
  };
  const auto k1 = keys(l1), k2 = keys(l2);
  {
    auto s1 = k1, s2 = k2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return l1.down_size(x) < l1.down_size(y); });

  std::vector<std::size_t> map(n, kNone);
  std::vector<bool> used(n, false);
  auto assign = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t x = order[depth];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || k1[x] != k2[y]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t w = order[d];
        ok = l1.leq(w, x) == l2.leq(map[w], y) && l1.leq(x, w) == l2.leq(y, map[w]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (self(self, depth + 1)) return true;
      used[y] = false;
      map[x] = kNone;
    }
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  return map;
}

// --- reference lattices -------------------------------------------------------

FiniteLattice chain_lattice(std::size_t n) {
  return FiniteLattice::build(n, [](std::size_t a, std::size_t b) { return a <= b; });
}

FiniteLattice boolean_lattice(std::size_t atoms) {
  return FiniteLattice::build(std::size_t{1} << atoms, [](std::size_t a, std::size_t b) { return (a & ~b) == 0; });
}

namespace {

// Reflexive-transitive closure of the given strict covers.
FiniteLattice from_covers(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> covers,
                          std::vector<std::string> labels) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (auto [lo, hi] : covers) leq[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return FiniteLattice::build(n, [&](std::size_t a, std::size_t b) { return leq[a][b]; }, std::move(labels));
}

}  // namespace

FiniteLattice pentagon_n5() {
  return from_covers(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}, {"0", "a", "b", "c", "1"});
}

FiniteLattice diamond_m3() {
  return from_covers(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"});
}

FiniteLattice centered_hexagon_s7() {
  return from_covers(7, {{0, 1}, {0, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}},
                     {"0", "a", "b", "x", "y", "z", "1"});
}

}  // namespace toplat
