#include "toplat/set_topology.hpp"

#include <algorithm>
#include <bit>
#include <ostream>

#include "toplat/error.hpp"

namespace toplat {

namespace {

std::uint32_t full_mask(std::size_t n) { return (std::uint32_t{1} << n) - 1; }

void require_points(std::size_t n, std::size_t cap) {
  if (n == 0) throw InvalidArgument("topologies need at least one point");
  if (n > cap) throw ResourceLimit("at most " + std::to_string(cap) + " points, got " + std::to_string(n));
}

std::vector<std::uint32_t> opens_of(std::uint64_t family) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < 64; ++m)
    if (family >> m & 1U) out.push_back(m);
  return out;
}

bool closed(std::uint64_t family) {
  for (std::uint32_t a = 0; a < 64; ++a) {
    if (!(family >> a & 1U)) continue;
    for (std::uint32_t b = a + 1; b < 64; ++b)
      if ((family >> b & 1U) && (!(family >> (a | b) & 1U) || !(family >> (a & b) & 1U))) return false;
  }
  return true;
}

// Up-sets of the preorder whose row x lists the points above x.
std::uint64_t up_sets(std::size_t n, const std::vector<std::uint32_t>& above) {
  std::uint64_t family = 0;
  for (std::uint32_t u = 0; u <= full_mask(n); ++u) {
    bool up = true;
    for (std::size_t x = 0; x < n && up; ++x)
      if (u >> x & 1U) up = (above[x] & ~u) == 0;
    if (up) family |= std::uint64_t{1} << u;
  }
  return family;
}

// Specialisation preorder: the least open set around each point.
std::vector<std::uint32_t> specialisation(const SetTopology& t) {
  std::vector<std::uint32_t> above(t.points(), full_mask(t.points()));
  for (auto u : t.opens())
    for (std::size_t x = 0; x < t.points(); ++x)
      if (u >> x & 1U) above[x] &= u;
  return above;
}

SetTopology from_family(std::size_t n, std::uint64_t family) { return SetTopology(n, opens_of(family)); }

nlohmann::json topologies_json(const std::vector<SetTopology>& ts, const std::vector<std::size_t>& idx) {
  nlohmann::json out = nlohmann::json::array();
  for (auto i : idx) out.push_back(ts[i].opens());
  return out;
}

}  // namespace

SetTopology::SetTopology(std::size_t n, std::vector<std::uint32_t> opens) : n_(n), opens_(std::move(opens)) {
  require_points(n, kMaxSetTopologyPoints);
  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (auto u : opens_) {
    if (u > full_mask(n)) throw InvalidArgument("open set mask outside the carrier");
    family_ |= std::uint64_t{1} << u;
  }
  if (!is_open(0) || !is_open(full_mask(n))) throw InvalidArgument("topology must contain the empty and full sets");
  if (!closed(family_)) throw InvalidArgument("open sets are not closed under union and intersection");
}

SetTopology SetTopology::discrete(std::size_t n) {
  require_points(n, kMaxSetTopologyPoints);
  std::vector<std::uint32_t> all(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < all.size(); ++m) all[m] = m;
  return SetTopology(n, std::move(all));
}

SetTopology SetTopology::anti_discrete(std::size_t n) {
  require_points(n, kMaxSetTopologyPoints);
  return SetTopology(n, {0, full_mask(n)});
}

bool operator<(const SetTopology& a, const SetTopology& b) noexcept {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.opens_.size() != b.opens_.size()) return a.opens_.size() < b.opens_.size();
  return a.opens_ < b.opens_;
}

std::string SetTopology::to_string() const {
  std::string s;
  for (auto u : opens_) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u);
  }
  return s;
}

std::vector<SetTopology> enumerate_topologies(std::size_t n) {
  require_points(n, kMaxSetTopologyPoints);
  // Off-diagonal pairs (x, y) with x != y, one bit each.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) pairs.emplace_back(x, y);

  std::vector<SetTopology> out;
  std::vector<std::uint32_t> above(n);
  const std::uint64_t relations = std::uint64_t{1} << pairs.size();
  for (std::uint64_t r = 0; r < relations; ++r) {
    for (std::size_t x = 0; x < n; ++x) above[x] = std::uint32_t{1} << x;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (r >> k & 1U) above[pairs[k].first] |= std::uint32_t{1} << pairs[k].second;
    bool transitive = true;
    for (std::size_t x = 0; x < n && transitive; ++x)
      for (std::size_t y = 0; y < n && transitive; ++y)
        if (above[x] >> y & 1U) transitive = (above[y] & ~above[x]) == 0;
    if (transitive) out.push_back(from_family(n, up_sets(n, above)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetTopology> brute_force_topologies(std::size_t n) {
  require_points(n, 4);
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t must = 1U | std::uint64_t{1} << full_mask(n);
  std::vector<SetTopology> out;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << subsets); ++f)
    if ((f & must) == must && closed(f)) out.push_back(from_family(n, f));
  std::sort(out.begin(), out.end());
  return out;
}

SetTopology top_meet(const SetTopology& a, const SetTopology& b) {
  if (a.points() != b.points()) throw InvalidArgument("top_meet: carriers differ");
  return from_family(a.points(), a.family() & b.family());
}

SetTopology top_join(const SetTopology& a, const SetTopology& b) {
  if (a.points() != b.points()) throw InvalidArgument("top_join: carriers differ");
  std::uint64_t f = a.family() | b.family();
  for (bool grew = true; grew;) {
    grew = false;
    for (auto u : opens_of(f))
      for (auto v : opens_of(f)) {
        const std::uint64_t add = (std::uint64_t{1} << (u & v)) | (std::uint64_t{1} << (u | v));
        if ((f | add) != f) {
          f |= add;
          grew = true;
        }
      }
  }
  return from_family(a.points(), f);
}

FiniteLattice toplattice(std::size_t n) {
  require_points(n, 4);
  const auto ts = enumerate_topologies(n);
  std::vector<std::string> labels;
  for (const auto& t : ts) labels.push_back("{" + t.to_string() + "}");
  return FiniteLattice::build(
      ts.size(), [&](std::size_t i, std::size_t j) { return ts[i].coarser_or_equal(ts[j]); }, std::move(labels));
}

SetTopology coset_topology(const GroupTopology& tau) {
  const auto& g = tau.group();
  require_points(g.order(), kMaxSetTopologyPoints);
  std::vector<std::uint32_t> cosets;
  std::uint32_t seen = 0;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen >> x & 1U) continue;
    std::uint32_t c = 0;
    tau.kernel().members().for_each([&](std::size_t k) { c |= std::uint32_t{1} << g.mul(x, static_cast<Element>(k)); });
    cosets.push_back(c);
    seen |= c;
  }
  std::vector<std::uint32_t> opens;
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << cosets.size()); ++pick) {
    std::uint32_t u = 0;
    for (std::size_t i = 0; i < cosets.size(); ++i)
      if (pick >> i & 1U) u |= cosets[i];
    opens.push_back(u);
  }
  return SetTopology(g.order(), std::move(opens));
}

bool ClassicalReport::passed() const noexcept {
  if (oracle_count && *oracle_count != count) return false;
  if (!closure_invariants || !preorder_roundtrip || !dual_birkhoff) return false;
  if (n >= 3 && distributive.holds) return false;
  return !join_is_least_upper_bound || *join_is_least_upper_bound;
}

nlohmann::json ClassicalReport::to_json() const {
  nlohmann::json j{{"n", n},
                   {"count", count},
                   {"closure_invariants", closure_invariants},
                   {"preorder_roundtrip", preorder_roundtrip},
                   {"distributive", distributive.holds},
                   {"dual_birkhoff", dual_birkhoff.holds},
                   {"dual_birkhoff_pairs", dual_birkhoff_pairs},
                   {"passed", passed()}};
  if (oracle_count) j["oracle_count"] = *oracle_count;
  if (join_is_least_upper_bound) j["join_is_least_upper_bound"] = *join_is_least_upper_bound;
  if (!distributive.holds) j["non_distributive_witness"] = topologies_json(topologies, distributive.witness);
  if (!dual_birkhoff.holds) j["dual_birkhoff_witness"] = topologies_json(topologies, dual_birkhoff.witness);
  return j;
}

ClassicalReport verify_classical_facts(std::size_t n) {
  require_points(n, 4);
  ClassicalReport r;
  r.n = n;
  r.topologies = enumerate_topologies(n);
  const auto& ts = r.topologies;
  r.count = ts.size();
  r.oracle_count = brute_force_topologies(n).size();

  for (std::size_t i = 0; i < ts.size(); ++i) {
    r.closure_invariants = r.closure_invariants && closed(ts[i].family());
    if (up_sets(n, specialisation(ts[i])) != ts[i].family()) r.preorder_roundtrip = false;
    if (i > 0 && !(ts[i - 1] < ts[i])) r.preorder_roundtrip = false;
  }

  const auto l = toplattice(n);
  r.distributive = check_distributive(l);
  r.dual_birkhoff = check_dual_birkhoff(l);

  // Cover relation recomputed by scanning for an element strictly between.
  auto covered = [&](std::size_t b, std::size_t a) {
    if (!l.less(b, a)) return false;
    for (std::size_t x = 0; x < l.size(); ++x)
      if (l.less(b, x) && l.less(x, a)) return false;
    return true;
  };
  const bool small = n <= 3;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      const auto j = l.join(a, b), m = l.meet(a, b);
      const bool both = small ? covered(a, j) && covered(b, j) : l.covers(a, j) && l.covers(b, j);
      if (!both) continue;
      ++r.dual_birkhoff_pairs;
      const bool ok = small ? covered(m, a) && covered(m, b) : l.covers(m, a) && l.covers(m, b);
      if (!ok && r.dual_birkhoff.holds) r.dual_birkhoff = Verdict::fail({a, b});
    }

  if (small) {
    bool lub = true;
    for (std::size_t a = 0; a < ts.size() && lub; ++a)
      for (std::size_t b = 0; b < ts.size() && lub; ++b) {
        const auto j = top_join(ts[a], ts[b]);
        if (!ts[a].coarser_or_equal(j) || !ts[b].coarser_or_equal(j)) lub = false;
        for (const auto& t : ts)
          if (lub && ts[a].coarser_or_equal(t) && ts[b].coarser_or_equal(t)) lub = j.coarser_or_equal(t);
        lub = lub && ts[l.join(a, b)] == j && ts[l.meet(a, b)] == top_meet(ts[a], ts[b]);
      }
    r.join_is_least_upper_bound = lub;
  }
  return r;
}

nlohmann::json EmbeddingReport::to_json(const TopologyLattice& tl) const {
  auto pair_json = [&](const std::optional<std::pair<std::size_t, std::size_t>>& p) -> nlohmann::json {
    if (!p) return nullptr;
    return {tl.kernel(p->first).members(), tl.kernel(p->second).members()};
  };
  return {{"group", group},
          {"pairs", pairs},
          {"joins_agree", joins_agree},
          {"join_disagreement", pair_json(join_disagreement)},
          {"meet_disagreement", pair_json(meet_disagreement)}};
}

EmbeddingReport embed_group_topologies(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > 4) throw ResourceLimit("embed_group_topologies: group order above 4");
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  std::vector<SetTopology> ct;
  for (const auto& t : tl.topologies()) ct.push_back(coset_topology(t));

  EmbeddingReport r;
  r.group = g.label();
  for (std::size_t i = 0; i < tl.size(); ++i)
    for (std::size_t j = i + 1; j < tl.size(); ++j) {
      ++r.pairs;
      if (ct[l.join(i, j)] != top_join(ct[i], ct[j]) && r.joins_agree) {
        r.joins_agree = false;
        r.join_disagreement = {i, j};
      }
      const auto m = top_meet(ct[i], ct[j]);
      if (!r.meet_disagreement && std::find(ct.begin(), ct.end(), m) == ct.end()) r.meet_disagreement = {i, j};
    }
  return r;
}

void dump_topologies(std::ostream& out, const std::vector<SetTopology>& ts) {
  for (const auto& t : ts) out << t.to_string() << '\n';
}

}  // namespace toplat
