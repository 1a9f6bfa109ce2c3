#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "toplat/group.hpp"
#include "toplat/lattice.hpp"
#include "toplat/topology.hpp"

namespace toplat {

// Largest carrier handled by the toplattice code.
inline constexpr std::size_t kMaxSetTopologyPoints = 5;

// A topology on {0, ..., n-1}; open sets are bitmasks.
class SetTopology {
 public:
  // Throws InvalidArgument unless opens contains the empty and full sets
  // and is closed under pairwise union and intersection; ResourceLimit for
  // n > 5.
  SetTopology(std::size_t n, std::vector<std::uint32_t> opens);

  static SetTopology discrete(std::size_t n);
  static SetTopology anti_discrete(std::size_t n);

  std::size_t points() const noexcept { return n_; }
  // Ascending.
  const std::vector<std::uint32_t>& opens() const noexcept { return opens_; }
  bool is_open(std::uint32_t mask) const noexcept { return family_ >> mask & 1U; }
  // Bit m set iff mask m is open; 2^n <= 32 bits.
  std::uint64_t family() const noexcept { return family_; }
  // Every open set of this is open in other.
  bool coarser_or_equal(const SetTopology& other) const noexcept {
    return n_ == other.n_ && (family_ & ~other.family_) == 0;
  }

  friend bool operator==(const SetTopology& a, const SetTopology& b) noexcept {
    return a.n_ == b.n_ && a.family_ == b.family_;
  }
  // Canonical order: fewer opens first, then lexicographic on opens().
  friend bool operator<(const SetTopology& a, const SetTopology& b) noexcept;

  std::string to_string() const;  // "0 1 3"

 private:
  std::size_t n_;
  std::vector<std::uint32_t> opens_;
  std::uint64_t family_ = 0;
};

// All topologies on n points via preorders. Throws ResourceLimit for n > 5,
// InvalidArgument for n = 0.
std::vector<SetTopology> enumerate_topologies(std::size_t n);

// Filter over every family of subsets; n <= 4.
std::vector<SetTopology> brute_force_topologies(std::size_t n);

// Intersection of families / the topology generated by their union.
// Throw InvalidArgument on carrier mismatch.
SetTopology top_meet(const SetTopology& a, const SetTopology& b);
SetTopology top_join(const SetTopology& a, const SetTopology& b);

// Element i is enumerate_topologies(n)[i]; ordered by inclusion. n <= 4.
FiniteLattice toplattice(std::size_t n);

// The topology of a finite group topology on the carrier: unions of
// kernel cosets. |g| <= 5.
SetTopology coset_topology(const GroupTopology& tau);

struct ClassicalReport {
  std::size_t n = 0;
  std::size_t count = 0;
  std::optional<std::size_t> oracle_count;
  bool closure_invariants = true;
  bool preorder_roundtrip = true;
  Verdict distributive;
  Verdict dual_birkhoff;
  std::size_t dual_birkhoff_pairs = 0;  // pairs both covered by their join
  std::optional<bool> join_is_least_upper_bound;
  std::vector<SetTopology> topologies;

  bool passed() const noexcept;
  nlohmann::json to_json() const;
};

// n <= 4; the least-upper-bound sweep and cover cross-check run for n <= 3.
ClassicalReport verify_classical_facts(std::size_t n);

struct EmbeddingReport {
  std::string group;
  std::size_t pairs = 0;
  bool joins_agree = true;
  std::optional<std::pair<std::size_t, std::size_t>> join_disagreement;
  // Pair of group topologies whose meet in T_G is not a group topology.
  std::optional<std::pair<std::size_t, std::size_t>> meet_disagreement;

  nlohmann::json to_json(const TopologyLattice& tl) const;
};

// |g| <= 4.
EmbeddingReport embed_group_topologies(const FiniteGroup& g, const Limits& limits = {});

// One topology per line.
void dump_topologies(std::ostream& out, const std::vector<SetTopology>& ts);

}  // namespace toplat
