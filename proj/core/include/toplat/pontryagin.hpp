#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "toplat/error.hpp"
#include "toplat/group.hpp"
#include "toplat/topology.hpp"

namespace toplat {

// A candidate neighbourhood basis at the identity.
class NeighborhoodFamily {
 public:
  // Throws InvalidArgument when sets is empty, a set has the wrong
  // universe, or a set misses the identity.
  NeighborhoodFamily(FiniteGroup g, std::vector<ElementSet> sets);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<ElementSet>& sets() const noexcept { return sets_; }

 private:
  FiniteGroup group_;
  std::vector<ElementSet> sets_;
};

struct ConditionResult {
  bool holds = true;
  std::optional<std::size_t> set;     // failing U
  std::optional<Element> element;     // failing x for (iii), (iv); extra member for (vi)
  std::optional<std::size_t> second;  // failing V for (v)
};

// Conditions (i)..(vi) at indices 0..5.
struct PontryaginReport {
  std::array<ConditionResult, 6> conditions;

  // (i)..(v): the family is a basis at e for some group topology.
  bool is_basis() const noexcept;
  // (vi): that topology is Hausdorff.
  bool is_hausdorff() const noexcept { return conditions[5].holds; }
  nlohmann::json to_json() const;
};

PontryaginReport check_conditions(const NeighborhoodFamily& b);

class PontryaginViolation : public PreconditionError {
 public:
  explicit PontryaginViolation(PontryaginReport report);
  const PontryaginReport& report() const noexcept { return report_; }

 private:
  PontryaginReport report_;
};

// The topology with kernel the intersection of the family. Throws
// PontryaginViolation when (i)..(v) fail.
GroupTopology generate_topology(const NeighborhoodFamily& b);

}  // namespace toplat
