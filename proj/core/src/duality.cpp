#include "toplat/duality.hpp"

#include <stdexcept>

#include "toplat/error.hpp"

namespace toplat {

namespace {

// Splits off a maximal-order element of the current subgroup together with
// a complement, found among all subgroups, until nothing is left.
void cyclic_decomposition(const FiniteGroup& g, const Limits& limits, std::vector<Element>& gens,
                          std::vector<std::size_t>& orders) {
  const auto subs = all_subgroups(g, limits);
  ElementSet current = ElementSet::full(g.order());
  while (current.size() > 1) {
    Element x = g.identity();
    current.for_each([&](std::size_t y) {
      if (g.element_order(static_cast<Element>(y)) > g.element_order(x)) x = static_cast<Element>(y);
    });
    const auto cyclic = subgroup_generated(g, ElementSet(g.order(), {x})).members();
    const std::size_t want = current.size() / cyclic.size();
    const ElementSet* complement = nullptr;
    for (const auto& s : subs)
      if (s.size() == want && s.members().is_subset_of(current) && (s.members() & cyclic).size() == 1) {
        complement = &s.members();
        break;
      }
    if (!complement) throw std::logic_error("cyclic decomposition: no complement for a maximal-order element");
    gens.push_back(x);
    orders.push_back(cyclic.size());
    current = *complement;
  }
}

}  // namespace

DualGroup dual_group(const FiniteGroup& g, const Limits& limits) {
  if (!g.is_abelian()) throw InvalidArgument("dual_group: group is not abelian");
  DualGroup d;
  d.source = g;
  d.exponent = exponent_and_element_orders(g).exponent;
  cyclic_decomposition(g, limits, d.generators, d.orders);
  const std::size_t r = d.generators.size();

  // Coordinates of every element in the decomposition.
  std::vector<std::vector<std::size_t>> coords(g.order());
  {
    std::vector<std::size_t> k(r, 0);
    std::vector<bool> seen(g.order(), false);
    for (;;) {
      Element x = g.identity();
      for (std::size_t i = 0; i < r; ++i) x = g.mul(x, g.power(d.generators[i], static_cast<long long>(k[i])));
      if (seen[x]) throw std::logic_error("cyclic decomposition is not direct");
      seen[x] = true;
      coords[x] = k;
      std::size_t i = r;
      while (i > 0 && ++k[i - 1] == d.orders[i - 1]) k[--i] = 0;
      if (i == 0) break;
    }
  }

  // Character a sends generator i to a[i] * exp / orders[i]; index is a in
  // mixed radix, last coordinate fastest.
  std::vector<std::size_t> a(r, 0);
  for (;;) {
    Character chi;
    chi.values.resize(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      std::size_t v = 0;
      for (std::size_t i = 0; i < r; ++i) v += coords[x][i] * a[i] * (d.exponent / d.orders[i]);
      chi.values[x] = static_cast<std::uint32_t>(v % d.exponent);
    }
    d.characters.push_back(std::move(chi));
    std::size_t i = r;
    while (i > 0 && ++a[i - 1] == d.orders[i - 1]) a[--i] = 0;
    if (i == 0) break;
  }
  if (d.characters.size() != g.order()) throw std::logic_error("dual group order differs from group order");

  const std::size_t n = d.characters.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t p = 0; p < n; ++p) {
    // Decode p back into its coefficient vector.
    std::vector<std::size_t> ap(r), aq(r);
    for (std::size_t i = r, t = p; i-- > 0; t /= d.orders[i]) ap[i] = t % d.orders[i];
    names[p] = "chi(";
    for (std::size_t i = 0; i < r; ++i) names[p] += (i ? "," : "") + std::to_string(ap[i]);
    names[p] += ")";
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t i = r, t = q; i-- > 0; t /= d.orders[i]) aq[i] = t % d.orders[i];
      std::size_t idx = 0;
      for (std::size_t i = 0; i < r; ++i) idx = idx * d.orders[i] + (ap[i] + aq[i]) % d.orders[i];
      table[p][q] = static_cast<Element>(idx);
    }
  }
  if (n == 1) names[0] = "chi()";
  d.group = FiniteGroup::from_table(table, std::move(names), limits).with_label("dual(" + g.label() + ")");
  return d;
}

SubgroupSet annihilator(const DualGroup& d, const SubgroupSet& h) {
  if (!h.group().same_as(d.group)) throw InvalidArgument("annihilator: subgroup is not of the dual group");
  ElementSet k(d.source.order());
  for (Element x = 0; x < d.source.order(); ++x) {
    bool killed = true;
    h.members().for_each([&](std::size_t c) { killed = killed && d.characters[c](x) == 0; });
    if (killed) k.insert(x);
  }
  return SubgroupSet(d.source, std::move(k));
}

SubgroupSet dual_annihilator(const DualGroup& d, const SubgroupSet& k) {
  if (!k.group().same_as(d.source)) throw InvalidArgument("dual_annihilator: subgroup is not of the source group");
  ElementSet h(d.group.order());
  for (std::size_t c = 0; c < d.characters.size(); ++c) {
    bool vanishes = true;
    k.members().for_each([&](std::size_t x) { vanishes = vanishes && d.characters[c](static_cast<Element>(x)) == 0; });
    if (vanishes) h.insert(c);
  }
  return SubgroupSet(d.group, std::move(h));
}

nlohmann::json ComfortRossReport::to_json() const {
  nlohmann::json j{{"group", group},
                   {"dual_subgroups", dual_subgroups},
                   {"topologies", topologies},
                   {"bijective", bijective},
                   {"order_preserving", order_preserving},
                   {"order_reflecting", order_reflecting},
                   {"meets", meets},
                   {"joins", joins},
                   {"extremes", extremes},
                   {"double_annihilator", double_annihilator},
                   {"passed", passed()}};
  if (!passed()) j["witness"] = witness;
  return j;
}

ComfortRossReport comfort_ross_map(const FiniteGroup& g, const Limits& limits) {
  const auto d = dual_group(g, limits);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  const auto subs = all_subgroups(d.group, limits);
  const auto sl = FiniteLattice::build(subs.size(), [&](std::size_t i, std::size_t j) {
    return subs[i].members().is_subset_of(subs[j].members());
  });

  ComfortRossReport r;
  r.group = g.label();
  r.dual_subgroups = subs.size();
  r.topologies = tl.size();
  auto note = [&](const char* what, nlohmann::json w) {
    if (r.witness.is_null()) r.witness = {{"part", what}, {"detail", std::move(w)}};
  };

  std::vector<std::size_t> image(subs.size());
  std::vector<bool> hit(tl.size(), false);
  r.bijective = subs.size() == tl.size();
  for (std::size_t i = 0; i < subs.size(); ++i) {
    image[i] = tl.index_of(annihilator(d, subs[i]).members());
    if (hit[image[i]]) {
      r.bijective = false;
      note("bijective", subs[i].members().members());
    }
    hit[image[i]] = true;
  }

  r.order_preserving = r.order_reflecting = r.meets = r.joins = true;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      const bool sub = sl.leq(i, j), img = l.leq(image[i], image[j]);
      if (sub && !img) {
        r.order_preserving = false;
        note("order_preserving", {i, j});
      }
      if (img && !sub) {
        r.order_reflecting = false;
        note("order_reflecting", {i, j});
      }
      if (image[sl.meet(i, j)] != l.meet(image[i], image[j])) {
        r.meets = false;
        note("meets", {i, j});
      }
      if (image[sl.join(i, j)] != l.join(image[i], image[j])) {
        r.joins = false;
        note("joins", {i, j});
      }
    }

  r.extremes = image[sl.bottom()] == tl.anti_discrete() && image[sl.top()] == tl.discrete();
  if (!r.extremes) note("extremes", nullptr);

  r.double_annihilator = true;
  for (const auto& k : all_subgroups(g, limits))
    if (annihilator(d, dual_annihilator(d, k)) != k) {
      r.double_annihilator = false;
      note("double_annihilator", k.members().members());
    }
  return r;
}

nlohmann::json characters_json(const DualGroup& d) {
  nlohmann::json chars = nlohmann::json::array();
  for (const auto& c : d.characters) chars.push_back(c.values);
  return {{"group", d.source.label()}, {"exponent", d.exponent}, {"characters", chars}};
}

}  // namespace toplat
