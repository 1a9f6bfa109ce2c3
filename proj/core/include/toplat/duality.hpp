#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toplat/group.hpp"
#include "toplat/topology.hpp"

namespace toplat {

// A homomorphism from a finite abelian group into Z(exp G), stored as its
// value on every element.
struct Character {
  std::vector<std::uint32_t> values;
  std::uint32_t operator()(Element x) const { return values[x]; }
  friend bool operator==(const Character&, const Character&) = default;
};

struct DualGroup {
  FiniteGroup source;
  std::size_t exponent = 1;
  // Cyclic decomposition of source: generators with their orders.
  std::vector<Element> generators;
  std::vector<std::size_t> orders;
  // characters[i] is element i of group.
  std::vector<Character> characters;
  FiniteGroup group;
};

// All characters of an abelian group. Throws InvalidArgument when g is not
// abelian.
DualGroup dual_group(const FiniteGroup& g, const Limits& limits = {});

// Elements of the source killed by every character in h (a subgroup of
// the dual).
SubgroupSet annihilator(const DualGroup& d, const SubgroupSet& h);
// Characters vanishing on k (a subgroup of the source).
SubgroupSet dual_annihilator(const DualGroup& d, const SubgroupSet& k);

struct ComfortRossReport {
  std::string group;
  std::size_t dual_subgroups = 0;
  std::size_t topologies = 0;
  bool bijective = false;
  bool order_preserving = false;  // H1 <= H2 => image(H1) <= image(H2)
  bool order_reflecting = false;
  bool meets = false;
  bool joins = false;
  bool extremes = false;             // {0} -> anti-discrete, dual -> discrete
  bool double_annihilator = false;  // annihilator of the dual annihilator of K is K
  nlohmann::json witness;

  bool passed() const noexcept {
    return bijective && order_preserving && order_reflecting && meets && joins && extremes && double_annihilator;
  }
  nlohmann::json to_json() const;
};

// H -> topology with kernel annihilator(H), from the subgroup lattice of
// the dual to L_G.
ComfortRossReport comfort_ross_map(const FiniteGroup& g, const Limits& limits = {});

// {"exponent": e, "characters": [[values...], ...]}
nlohmann::json characters_json(const DualGroup& d);

}  // namespace toplat
