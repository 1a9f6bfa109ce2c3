#include "toplat/pontryagin.hpp"

#include <stdexcept>

namespace toplat {

namespace {

ElementSet conjugate_set(const FiniteGroup& g, const ElementSet& v, Element x) {
  ElementSet out(g.order());
  v.for_each([&](std::size_t y) { out.insert(g.conjugate(static_cast<Element>(y), x)); });
  return out;
}

ElementSet inverse_set(const FiniteGroup& g, const ElementSet& v) {
  ElementSet out(g.order());
  v.for_each([&](std::size_t y) { out.insert(g.inverse(static_cast<Element>(y))); });
  return out;
}

ElementSet translate(const FiniteGroup& g, Element x, const ElementSet& v) {
  ElementSet out(g.order());
  v.for_each([&](std::size_t y) { out.insert(g.mul(x, static_cast<Element>(y))); });
  return out;
}

template <class Pred>
bool exists_set(const std::vector<ElementSet>& sets, Pred&& pred) {
  for (const auto& v : sets)
    if (pred(v)) return true;
  return false;
}

const char* const kNames[6] = {"i", "ii", "iii", "iv", "v", "vi"};

}  // namespace

NeighborhoodFamily::NeighborhoodFamily(FiniteGroup g, std::vector<ElementSet> sets)
    : group_(std::move(g)), sets_(std::move(sets)) {
  if (sets_.empty()) throw InvalidArgument("neighbourhood family is empty");
  for (const auto& s : sets_) {
    if (s.universe() != group_.order()) throw InvalidArgument("neighbourhood set has the wrong universe");
    if (!s.contains(group_.identity())) throw InvalidArgument("neighbourhood set misses the identity");
  }
}

bool PontryaginReport::is_basis() const noexcept {
  for (std::size_t i = 0; i < 5; ++i)
    if (!conditions[i].holds) return false;
  return true;
}

nlohmann::json PontryaginReport::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& c = conditions[i];
    nlohmann::json e{{"holds", c.holds}};
    if (c.set) e["U"] = *c.set;
    if (c.element) e["x"] = *c.element;
    if (c.second) e["V"] = *c.second;
    j[kNames[i]] = e;
  }
  j["basis"] = is_basis();
  j["hausdorff"] = is_hausdorff();
  return j;
}

PontryaginReport check_conditions(const NeighborhoodFamily& b) {
  const auto& g = b.group();
  const auto& sets = b.sets();
  PontryaginReport r;
  auto fail = [](ConditionResult& c, std::size_t u, std::optional<Element> x = {},
                 std::optional<std::size_t> v = {}) {
    if (!c.holds) return;
    c = {false, u, x, v};
  };

  for (std::size_t u = 0; u < sets.size(); ++u) {
    const auto& U = sets[u];
    if (!exists_set(sets, [&](const ElementSet& v) { return product_set(g, v, v).is_subset_of(U); }))
      fail(r.conditions[0], u);
    if (!exists_set(sets, [&](const ElementSet& v) { return inverse_set(g, v).is_subset_of(U); }))
      fail(r.conditions[1], u);
    for (auto x : U.members())
      if (!exists_set(sets, [&](const ElementSet& v) { return translate(g, x, v).is_subset_of(U); })) {
        fail(r.conditions[2], u, x);
        break;
      }
    for (Element x = 0; x < g.order(); ++x)
      if (!exists_set(sets, [&](const ElementSet& v) { return conjugate_set(g, v, x).is_subset_of(U); })) {
        fail(r.conditions[3], u, x);
        break;
      }
    for (std::size_t v = 0; v < sets.size() && r.conditions[4].holds; ++v) {
      const auto both = U & sets[v];
      if (!exists_set(sets, [&](const ElementSet& w) { return w.is_subset_of(both); })) fail(r.conditions[4], u, {}, v);
    }
  }

  ElementSet all = sets.front();
  for (const auto& s : sets) all &= s;
  for (auto x : all.members())
    if (x != g.identity()) {
      r.conditions[5] = {false, std::nullopt, x, std::nullopt};
      break;
    }
  return r;
}

PontryaginViolation::PontryaginViolation(PontryaginReport report)
    : PreconditionError("family is not a neighbourhood basis at e: " + report.to_json().dump()),
      report_(std::move(report)) {}

GroupTopology generate_topology(const NeighborhoodFamily& b) {
  auto report = check_conditions(b);
  if (!report.is_basis()) throw PontryaginViolation(std::move(report));
  const auto& g = b.group();
  ElementSet k = b.sets().front();
  for (const auto& s : b.sets()) k &= s;
  // (i)-(v) force this on a finite group; a failure here is a checker bug.
  if (!is_subgroup(g, k) || !is_normal(g, k))
    throw std::logic_error("intersection of a neighbourhood basis is not a normal subgroup");
  return GroupTopology(SubgroupSet(g, std::move(k)));
}

}  // namespace toplat
