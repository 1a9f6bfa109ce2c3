#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toplat/limits.hpp"

namespace toplat {

// Finite lattice with precomputed order, cover, meet and join tables.
//
// Elements are indices 0..size-1 carrying caller supplied labels. The
// order matrix is stored as bit rows (up-sets and down-sets), meets and
// joins as dense size x size tables.
class FiniteLattice {
 public:
  using Index = std::size_t;
  using LeqFn = std::function<bool(Index, Index)>;

  FiniteLattice();  // one-element lattice

  // Builds the lattice on n elements ordered by leq. Verifies the poset
  // axioms (NotAPoset) and the existence of all binary meets and joins
  // (NotALattice, reporting the first offending pair).
  static FiniteLattice build(std::size_t n, const LeqFn& leq, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return n_; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }

  bool leq(Index a, Index b) const noexcept { return bit(up_, a, b); }
  bool less(Index a, Index b) const noexcept { return a != b && leq(a, b); }
  // b is covered by a (b < a with nothing strictly between).
  bool covers(Index b, Index a) const noexcept { return bit(cover_, b, a); }
  // b equals a or is covered by it.
  bool covers_or_equal(Index b, Index a) const noexcept { return a == b || covers(b, a); }

  Index meet(Index a, Index b) const noexcept { return meet_[a * n_ + b]; }
  Index join(Index a, Index b) const noexcept { return join_[a * n_ + b]; }
  // Folds; the empty meet is top and the empty join is bottom.
  Index big_meet(std::span<const Index> s) const noexcept;
  Index big_join(std::span<const Index> s) const noexcept;

  const std::vector<Index>& upper_covers(Index a) const noexcept { return upper_covers_[a]; }
  const std::vector<Index>& lower_covers(Index a) const noexcept { return lower_covers_[a]; }
  // Elements >= a, ascending.
  std::vector<Index> up_set(Index a) const;
  std::vector<Index> down_set(Index a) const;
  // |{x : x <= a}|; strictly increasing along the order.
  std::size_t down_size(Index a) const noexcept { return down_size_[a]; }

  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  using Word = std::uint64_t;
  bool bit(const std::vector<Word>& rows, Index r, Index c) const noexcept {
    return (rows[r * words_ + c / 64] >> (c % 64)) & 1U;
  }

  std::size_t n_ = 1;
  std::size_t words_ = 1;
  std::vector<Word> up_{1};     // row a: {b : a <= b}
  std::vector<Word> down_{1};   // row a: {b : b <= a}
  std::vector<Word> cover_{0};  // row b: {a : b covered by a}
  std::vector<std::uint16_t> meet_{0};
  std::vector<std::uint16_t> join_{0};
  std::vector<std::vector<Index>> upper_covers_{{}};
  std::vector<std::vector<Index>> lower_covers_{{}};
  std::vector<std::string> labels_{"0"};
  std::vector<std::size_t> down_size_{1};
  Index bottom_ = 0;
  Index top_ = 0;
};

// Result of a law check. holds is false exactly when witness is set; the
// witness is the lexicographically least violating tuple.
struct Verdict {
  bool holds = true;
  std::vector<std::size_t> witness;

  explicit operator bool() const noexcept { return holds; }
  static Verdict pass() { return {}; }
  static Verdict fail(std::vector<std::size_t> w) { return {false, std::move(w)}; }
};

// a v (b ^ c) = (a v b) ^ c for all a <= c; witness (a, b, c).
Verdict check_modular(const FiniteLattice& l);
// a ^ (b v c) = (a ^ b) v (a ^ c); witness (a, b, c).
Verdict check_distributive(const FiniteLattice& l);
// Upper covering condition: b < a covering => b v c <=. a v c; witness (b, a, c).
Verdict check_semimodular(const FiniteLattice& l);
// Lower covering condition: b < a covering => b ^ c <=. a ^ c; witness (b, a, c).
Verdict check_dually_semimodular(const FiniteLattice& l);
// a, b both covered by a v b => a ^ b covered by both; witness (a, b).
Verdict check_dual_birkhoff(const FiniteLattice& l);
// a ^ b covered by both a and b => a, b both covered by a v b; witness (a, b).
Verdict check_birkhoff(const FiniteLattice& l);

inline bool is_modular(const FiniteLattice& l) { return check_modular(l).holds; }
inline bool is_distributive(const FiniteLattice& l) { return check_distributive(l).holds; }
inline bool is_semimodular(const FiniteLattice& l) { return check_semimodular(l).holds; }
inline bool is_dually_semimodular(const FiniteLattice& l) { return check_dually_semimodular(l).holds; }

// Strictly increasing element list; length() counts links.
struct Chain {
  std::vector<std::size_t> elements;
  std::size_t length() const noexcept { return elements.empty() ? 0 : elements.size() - 1; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

// All maximal chains of [a, b] in lexicographic order. Throws
// InvalidArgument if a is not <= b, ResourceLimit past limits.max_chains.
std::vector<Chain> maximal_chains(const FiniteLattice& l, std::size_t a, std::size_t b,
                                  const Limits& limits = {});

struct JordanHolderReport {
  bool uniform = true;
  std::size_t length = 0;  // common length when uniform
  std::size_t shortest = 0;
  std::size_t longest = 0;
  // When not uniform: a shortest and a longest maximal chain.
  std::optional<std::pair<Chain, Chain>> witness;
};

// Whether all maximal chains of [a, b] share one length. Uses a memoised
// pass over the cover graph, so it never enumerates chains.
JordanHolderReport jordan_holder_check(const FiniteLattice& l, std::size_t a, std::size_t b);

// True when every interval [x, y] satisfies the chain condition.
bool jordan_holder_everywhere(const FiniteLattice& l);

// Elements from which every maximal chain up to top has exactly k links.
std::vector<std::size_t> k_maximal_elements(const FiniteLattice& l, std::size_t k);

// Length of the longest chain from bottom to top.
std::size_t height(const FiniteLattice& l);

// c refines d: same endpoints, d a subset of c. Throws InvalidArgument on
// endpoint mismatch.
bool refines(const FiniteLattice& l, const Chain& c, const Chain& d);
// Least element strictly between two consecutive chain members, if any.
std::optional<std::size_t> refining_element(const FiniteLattice& l, const Chain& c);
inline bool is_refinable(const FiniteLattice& l, const Chain& c) {
  return refining_element(l, c).has_value();
}

// Sublattice [a, b]; element i of the result is the i-th member of
// l.up_set(a) that is <= b.
FiniteLattice interval(const FiniteLattice& l, std::size_t a, std::size_t b);
// Componentwise order; element (i, j) has index i * |l2| + j.
FiniteLattice product_lattice(const FiniteLattice& l1, const FiniteLattice& l2);

// Witness bijection l1 -> l2 preserving order both ways, or nullopt.
// Throws ResourceLimit above limits.isomorphism elements.
std::optional<std::vector<std::size_t>> are_isomorphic(const FiniteLattice& l1, const FiniteLattice& l2,
                                                       const Limits& limits = {});

// Reference lattices used by tests and the CLI.
FiniteLattice chain_lattice(std::size_t n);
FiniteLattice boolean_lattice(std::size_t atoms);
// bottom=0, a=1, b=2, c=3, top=4 with a < c and b incomparable to a, c.
FiniteLattice pentagon_n5();
// bottom=0, three atoms 1..3, top=4.
FiniteLattice diamond_m3();
// Centered hexagon: 0 < a(1), b(2); a < x(3), z(5); b < y(4), z(5); x, y, z < 1(6).
FiniteLattice centered_hexagon_s7();

}  // namespace toplat
