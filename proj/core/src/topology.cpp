#include "toplat/topology.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "toplat/error.hpp"

namespace toplat {

namespace {

using json = nlohmann::json;

json members_json(const ElementSet& s) { return s.members(); }

json kernels_json(const TopologyLattice& tl, const std::vector<std::size_t>& idx) {
  json out = json::array();
  for (auto i : idx) out.push_back(members_json(tl.kernel(i)));
  return out;
}

json verdict_json(const TopologyLattice& tl, const Verdict& v) {
  json j{{"holds", v.holds}};
  if (!v.holds) j["witness"] = kernels_json(tl, v.witness);
  return j;
}

void require_same_group(const FiniteGroup& a, const FiniteGroup& b, const char* what) {
  if (!a.same_as(b)) throw InvalidArgument(std::string(what) + ": subgroup belongs to a different group");
}

// Every subgroup of the centre.
std::vector<SubgroupSet> central_subgroups(const FiniteGroup& g, const Limits& limits) {
  const auto z = center(g);
  std::vector<SubgroupSet> out;
  for (auto& h : all_subgroups(g, limits))
    if (h.members().is_subset_of(z.members())) out.push_back(std::move(h));
  return out;
}

std::vector<std::size_t> restriction_indices(const TopologyLattice& tl, const RestrictionView& v) {
  std::vector<std::size_t> r(tl.size());
  for (std::size_t i = 0; i < tl.size(); ++i) r[i] = v.index_of_restriction(tl.kernel(i));
  return r;
}

std::vector<std::size_t> quotient_indices(const TopologyLattice& tl, const QuotientView& v) {
  std::vector<std::size_t> q(tl.size());
  for (std::size_t i = 0; i < tl.size(); ++i) q[i] = v.index_of_quotient(tl.kernel(i));
  return q;
}

VerificationReport new_report(std::string name, const FiniteGroup& g) {
  VerificationReport r;
  r.name = std::move(name);
  r.group = g.label();
  return r;
}

void record(VerificationReport& r, json witness) {
  if (r.violations++ == 0) r.witness = std::move(witness);
}

}  // namespace

// --- GroupTopology --------------------------------------------------------------

GroupTopology::GroupTopology(SubgroupSet kernel) : kernel_(std::move(kernel)) {
  if (!is_normal(kernel_)) throw InvalidArgument("group topology kernel must be a normal subgroup");
}

GroupTopology GroupTopology::discrete(const FiniteGroup& g) { return GroupTopology(SubgroupSet::trivial(g)); }

GroupTopology GroupTopology::anti_discrete(const FiniteGroup& g) { return GroupTopology(SubgroupSet::whole(g)); }

bool GroupTopology::is_open(const ElementSet& s) const {
  const auto& g = group();
  bool open = true;
  s.for_each([&](std::size_t x) {
    kernel_.members().for_each([&](std::size_t k) {
      if (!s.contains(g.mul(static_cast<Element>(x), static_cast<Element>(k)))) open = false;
    });
  });
  return open;
}

std::string kernel_label(const FiniteGroup& g, const ElementSet& kernel) {
  std::string s = "{";
  bool first = true;
  kernel.for_each([&](std::size_t x) {
    if (!first) s += ",";
    s += g.name(static_cast<Element>(x));
    first = false;
  });
  return s + "}";
}

// --- TopologyLattice ------------------------------------------------------------

TopologyLattice::TopologyLattice(const FiniteGroup& g, const Limits& limits) : group_(g) {
  auto normals = all_normal_subgroups(g, limits);
  topologies_.reserve(normals.size());
  std::vector<std::string> labels;
  labels.reserve(normals.size());
  for (auto& n : normals) {
    index_.emplace(n.members(), topologies_.size());
    labels.push_back(kernel_label(g, n.members()));
    topologies_.emplace_back(std::move(n));
  }
  lattice_ = FiniteLattice::build(
      topologies_.size(),
      [this](std::size_t i, std::size_t j) { return kernel(j).is_subset_of(kernel(i)); }, std::move(labels));

  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) {
      const auto both = kernel(i) & kernel(j);
      if (kernel(lattice_.join(i, j)) != both)
        throw std::logic_error("topology join does not intersect kernels");
      const auto& m = kernel(lattice_.meet(i, j));
      if (!kernel(i).is_subset_of(m) || !kernel(j).is_subset_of(m) ||
          m.size() * both.size() != kernel(i).size() * kernel(j).size())
        throw std::logic_error("topology meet is not the kernel product");
    }
}

std::optional<std::size_t> TopologyLattice::find(const ElementSet& kernel) const {
  const auto it = index_.find(kernel);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t TopologyLattice::index_of(const ElementSet& kernel) const {
  if (auto i = find(kernel)) return *i;
  throw InvalidArgument("index_of: set is not a normal subgroup kernel");
}

// --- operators ------------------------------------------------------------------

RestrictedTopology restrict(const GroupTopology& tau, const SubgroupSet& n) {
  require_same_group(tau.group(), n.group(), "restrict");
  auto emb = subgroup_as_group(n);
  ElementSet k(emb.group.order());
  (tau.kernel().members() & n.members()).for_each([&](std::size_t x) { k.insert(*emb.restriction[x]); });
  GroupTopology t(SubgroupSet(emb.group, std::move(k)));
  return {std::move(emb), std::move(t)};
}

QuotientTopology quotient_topology(const GroupTopology& tau, const SubgroupSet& n) {
  require_same_group(tau.group(), n.group(), "quotient_topology");
  auto q = quotient(n);
  GroupTopology t(SubgroupSet(q.group, q.projection.image(tau.kernel().members())));
  return {std::move(q), std::move(t)};
}

GroupTopology saturate(const GroupTopology& tau, const SubgroupSet& n) {
  require_same_group(tau.group(), n.group(), "saturate");
  if (!is_normal(n)) throw InvalidArgument("saturate: subgroup is not normal");
  return GroupTopology(SubgroupSet(tau.group(), product_set(tau.group(), tau.kernel().members(), n.members())));
}

RestrictionView::RestrictionView(const SubgroupSet& n, const Limits& limits)
    : n_(n), embedding_(subgroup_as_group(n)), lattice_(embedding_.group, limits) {}

std::size_t RestrictionView::index_of_restriction(const ElementSet& kernel) const {
  ElementSet k(embedding_.group.order());
  (kernel & n_.members()).for_each([&](std::size_t x) { k.insert(*embedding_.restriction[x]); });
  return lattice_.index_of(k);
}

QuotientView::QuotientView(const SubgroupSet& n, const Limits& limits)
    : quotient_(toplat::quotient(n)), lattice_(quotient_.group, limits) {}

std::size_t QuotientView::index_of_quotient(const ElementSet& kernel) const {
  return lattice_.index_of(quotient_.projection.image(kernel));
}

// --- verification ---------------------------------------------------------------

json VerificationReport::to_json() const {
  json j{{"name", name}, {"group", group}, {"checked", checked}, {"violations", violations}, {"passed", passed()}};
  if (!passed()) j["witness"] = witness;
  return j;
}

VerificationReport verify_merzon(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("merzon", g);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  for (const auto& n : all_subgroups(g, limits)) {
    // Per topology: its restriction kernel and the partition of G into
    // cosets of kernel * N, labelled by least coset member.
    std::vector<ElementSet> res;
    std::vector<std::vector<Element>> parts;
    for (std::size_t i = 0; i < tl.size(); ++i) {
      res.push_back(tl.kernel(i) & n.members());
      const auto kn = product_set(g, tl.kernel(i), n.members());
      std::vector<Element> label(g.order(), static_cast<Element>(g.order()));
      for (Element x = 0; x < g.order(); ++x) {
        if (label[x] != g.order()) continue;
        kn.for_each([&](std::size_t y) { label[g.mul(x, static_cast<Element>(y))] = x; });
      }
      parts.push_back(std::move(label));
    }
    for (std::size_t s = 0; s < tl.size(); ++s)
      for (std::size_t t = 0; t < tl.size(); ++t) {
        if (!l.leq(s, t)) continue;
        ++r.checked;
        if (res[s] == res[t] && parts[s] == parts[t] && s != t)
          record(r, {{"sigma", members_json(tl.kernel(s))},
                     {"tau", members_json(tl.kernel(t))},
                     {"N", members_json(n.members())}});
      }
  }
  return r;
}

VerificationReport verify_restriction_join(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("restriction-join", g);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  for (const auto& n : all_subgroups(g, limits)) {
    const RestrictionView view(n, limits);
    const auto& ln = view.lattice().lattice();
    const auto res = restriction_indices(tl, view);
    for (std::size_t s = 0; s < tl.size(); ++s)
      for (std::size_t t = 0; t < tl.size(); ++t) {
        ++r.checked;
        if (res[l.join(s, t)] != ln.join(res[s], res[t]))
          record(r, {{"sigma", members_json(tl.kernel(s))},
                     {"tau", members_json(tl.kernel(t))},
                     {"N", members_json(n.members())}});
      }
  }
  return r;
}

VerificationReport verify_quotient_meet(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("quotient-meet", g);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  for (const auto& top : tl.topologies()) {
    const QuotientView view(top.kernel(), limits);
    const auto& lq = view.lattice().lattice();
    const auto q = quotient_indices(tl, view);
    for (std::size_t s = 0; s < tl.size(); ++s)
      for (std::size_t t = 0; t < tl.size(); ++t) {
        ++r.checked;
        if (q[l.meet(s, t)] != lq.meet(q[s], q[t]))
          record(r, {{"sigma", members_json(tl.kernel(s))},
                     {"tau", members_json(tl.kernel(t))},
                     {"N", members_json(top.kernel().members())}});
      }
  }
  return r;
}

VerificationReport verify_saturation_join(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("saturation-join", g);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  for (const auto& top : tl.topologies()) {
    const auto& n = top.kernel();
    const QuotientView view(n, limits);
    const auto& lq = view.lattice().lattice();
    const auto q = quotient_indices(tl, view);
    std::vector<std::size_t> sat(tl.size());
    for (std::size_t t = 0; t < tl.size(); ++t)
      sat[t] = tl.index_of(saturate(tl.topology(t), n).kernel().members());
    for (std::size_t s = 0; s < tl.size(); ++s)
      for (std::size_t t = 0; t < tl.size(); ++t) {
        ++r.checked;
        if (q[l.join(s, sat[t])] != lq.join(q[s], q[t]))
          record(r, {{"sigma", members_json(tl.kernel(s))},
                     {"tau", members_json(tl.kernel(t))},
                     {"N", members_json(n.members())}});
      }
  }
  return r;
}

VerificationReport verify_cover_transfer(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("cover-transfer", g);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  auto witness = [&](const char* part, std::size_t s, std::size_t t, const ElementSet& n) {
    return json{{"part", part},
                {"sigma", members_json(tl.kernel(s))},
                {"tau", members_json(tl.kernel(t))},
                {"N", members_json(n)}};
  };

  // Quotients of covers, every normal N.
  for (const auto& top : tl.topologies()) {
    const QuotientView view(top.kernel(), limits);
    const auto& lq = view.lattice().lattice();
    const auto q = quotient_indices(tl, view);
    for (std::size_t s = 0; s < tl.size(); ++s)
      for (std::size_t t : l.upper_covers(s)) {
        ++r.checked;
        if (!lq.covers_or_equal(q[s], q[t])) record(r, witness("quotient", s, t, top.kernel().members()));
      }
  }

  for (const auto& n : central_subgroups(g, limits)) {
    const RestrictionView rv(n, limits);
    const QuotientView qv(n, limits);
    const auto& ln = rv.lattice().lattice();
    const auto& lq = qv.lattice().lattice();
    const auto res = restriction_indices(tl, rv);
    const auto q = quotient_indices(tl, qv);
    for (std::size_t s = 0; s < tl.size(); ++s)
      for (std::size_t t : l.upper_covers(s)) {
        ++r.checked;
        if (!ln.covers_or_equal(res[s], res[t])) record(r, witness("restriction", s, t, n.members()));
      }
    for (std::size_t s = 0; s < tl.size(); ++s)
      for (std::size_t t = 0; t < tl.size(); ++t) {
        if (!l.leq(s, t)) continue;
        ++r.checked;
        const bool a = res[s] == res[t] && lq.covers(q[s], q[t]);
        const bool b = ln.covers(res[s], res[t]) && q[s] == q[t];
        if (l.covers(s, t) != (a || b) || (a && b)) record(r, witness("characterization", s, t, n.members()));
        const bool a_weak = res[s] == res[t] && lq.covers_or_equal(q[s], q[t]);
        const bool b_weak = ln.covers_or_equal(res[s], res[t]) && q[s] == q[t];
        if (l.covers_or_equal(s, t) != (a_weak || b_weak))
          record(r, witness("characterization-weak", s, t, n.members()));
      }
  }
  return r;
}

VerificationReport verify_meet_basis(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("meet-basis", g);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  for (const auto& n : central_subgroups(g, limits)) {
    const QuotientView qv(n, limits);
    const auto& lq = qv.lattice().lattice();
    const auto q = quotient_indices(tl, qv);
    for (std::size_t sigma = 0; sigma < tl.size(); ++sigma)
      for (std::size_t tau = 0; tau < tl.size(); ++tau) {
        if (!lq.leq(q[sigma], q[tau])) continue;
        ++r.checked;
        const auto product = product_set(g, tl.kernel(tau), tl.kernel(sigma));
        if (tl.kernel(l.meet(sigma, tau)) != product)
          record(r, {{"sigma", members_json(tl.kernel(sigma))},
                     {"tau", members_json(tl.kernel(tau))},
                     {"N", members_json(n.members())}});
      }
  }
  return r;
}

VerificationReport verify_semimodular_transfer(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("semimod-transfer", g);
  const TopologyLattice tl(g, limits);
  const auto& l = tl.lattice();
  const bool semi_g = is_semimodular(l);
  for (const auto& n : central_subgroups(g, limits)) {
    const QuotientView qv(n, limits);
    const auto& lq = qv.lattice().lattice();
    const json where{{"N", members_json(n.members())}};

    ++r.checked;
    if (semi_g != is_semimodular(lq)) record(r, {{"part", "equivalence"}, {"N", where["N"]}});

    // [anti-discrete, tau_N] through the projection.
    const std::size_t tau_n = tl.index_of(n.members());
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < tl.size(); ++x)
      if (l.leq(x, tau_n)) members.push_back(x);
    std::vector<std::size_t> image(members.size());
    std::vector<bool> hit(lq.size(), false);
    bool bijective = members.size() == lq.size();
    for (std::size_t i = 0; i < members.size() && bijective; ++i) {
      image[i] = qv.index_of_quotient(tl.kernel(members[i]));
      bijective = !hit[image[i]];
      hit[image[i]] = true;
    }
    bool order_iso = bijective;
    for (std::size_t i = 0; i < members.size() && order_iso; ++i)
      for (std::size_t j = 0; j < members.size() && order_iso; ++j)
        order_iso = l.leq(members[i], members[j]) == lq.leq(image[i], image[j]);
    ++r.checked;
    if (!order_iso) record(r, {{"part", "projection"}, {"N", where["N"]}});

    ++r.checked;
    if (!are_isomorphic(interval(l, l.bottom(), tau_n), lq, limits))
      record(r, {{"part", "isomorphism"}, {"N", where["N"]}});
  }
  return r;
}

ProductDecomposition decompose_product_topology(const GroupTopology& tau) {
  const auto& g = tau.group();
  const auto f = g.factors();
  if (!f) throw InvalidArgument("decompose_product_topology: group is not a marked direct product");
  const auto& [h, fac] = *f;
  const auto [emb_h, emb_f] = factor_embeddings(g);
  const auto& k = tau.kernel().members();
  const std::size_t nf = fac.order();
  const std::size_t exp_h = exponent_and_element_orders(h).exponent;

  ProductDecomposition d;
  d.coprime = std::gcd(exp_h, nf) == 1;
  const auto n1 = k & emb_h.members();
  const auto n2 = k & emb_f.members();

  if (d.coprime) {
    // (x, y)^|F| = (x^|F|, 1) and (x, y)^exp(H) = (1, y^exp(H)); coprime
    // roots recover (x, 1) and (1, y), which must both lie in the kernel.
    for (auto z : k.members()) {
      const Element x_part = coprime_root(g, g.power(z, static_cast<long long>(nf)), static_cast<long long>(nf));
      const Element y_part =
          coprime_root(g, g.power(z, static_cast<long long>(exp_h)), static_cast<long long>(exp_h));
      const bool ok = x_part == (z / nf) * nf + fac.identity() && y_part == h.identity() * nf + z % nf &&
                      n1.contains(x_part) && n2.contains(y_part);
      if (!ok) {
        d.witness = z;
        return d;
      }
    }
  }

  const auto prod = product_set(g, n1, n2);
  if (prod != k) {
    for (auto z : k.members())
      if (!prod.contains(z)) {
        d.witness = z;
        break;
      }
    return d;
  }
  ElementSet kh(h.order()), kf(nf);
  n1.for_each([&](std::size_t z) { kh.insert(z / nf); });
  n2.for_each([&](std::size_t z) { kf.insert(z % nf); });
  d.is_product = true;
  d.left = GroupTopology(SubgroupSet(h, std::move(kh)));
  d.right = GroupTopology(SubgroupSet(fac, std::move(kf)));
  return d;
}

VerificationReport verify_product_decomposition(const FiniteGroup& g, const Limits& limits) {
  auto r = new_report("th0-product", g);
  const auto f = g.factors();
  if (!f) throw InvalidArgument("verify_product_decomposition: group is not a marked direct product");
  const TopologyLattice tl(g, limits);
  const TopologyLattice th(f->first, limits);
  const TopologyLattice tf(f->second, limits);
  const auto& l = tl.lattice();

  // Explicit map tau -> (tau_H, tau_F) into the product lattice.
  const std::size_t nf = tf.size();
  std::vector<std::size_t> image(tl.size());
  std::vector<bool> hit(th.size() * nf, false);
  bool bijective = tl.size() == th.size() * nf;
  for (std::size_t i = 0; i < tl.size(); ++i) {
    ++r.checked;
    const auto d = decompose_product_topology(tl.topology(i));
    if (!d.is_product) {
      record(r, {{"part", "decomposition"},
                 {"tau", members_json(tl.kernel(i))},
                 {"witness", d.witness ? json(*d.witness) : json()}});
      bijective = false;
      continue;
    }
    image[i] = th.index_of(d.left->kernel().members()) * nf + tf.index_of(d.right->kernel().members());
    if (hit[image[i]]) bijective = false;
    hit[image[i]] = true;
  }
  const auto product = product_lattice(th.lattice(), tf.lattice());
  bool order_iso = bijective;
  for (std::size_t i = 0; i < tl.size() && order_iso; ++i)
    for (std::size_t j = 0; j < tl.size() && order_iso; ++j)
      order_iso = l.leq(i, j) == product.leq(image[i], image[j]);
  ++r.checked;
  if (!order_iso) record(r, {{"part", "factor-map"}});
  ++r.checked;
  if (!are_isomorphic(l, product, limits)) record(r, {{"part", "isomorphism"}});
  ++r.checked;
  if (const auto v = check_modular(l); !v) record(r, {{"part", "modular"}, {"witness", kernels_json(tl, v.witness)}});
  return r;
}

// --- Prodanov lattice -----------------------------------------------------------

ProdanovReport prodanov_lattice(const TopologyLattice& tl, const Limits& limits) {
  const auto& l = tl.lattice();
  ProdanovReport p;
  p.coatoms = k_maximal_elements(l, 1);
  const std::size_t m = p.coatoms.size();
  if (m > std::min<std::size_t>(limits.max_coatoms, 30))
    throw ResourceLimit("prodanov_lattice: " + std::to_string(m) + " coatoms exceeds cap");

  const std::size_t masks = std::size_t{1} << m;
  p.meets.resize(masks);
  p.closures.resize(masks);
  for (std::size_t b = 0; b < masks; ++b) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < m; ++i)
      if (b >> i & 1U) chosen.push_back(p.coatoms[i]);
    p.meets[b] = l.big_meet(chosen);
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (l.leq(p.meets[b], p.coatoms[i])) c |= std::uint32_t{1} << i;
    p.closures[b] = c;
    if (c != b) p.non_closed.push_back(static_cast<std::uint32_t>(b));
  }
  p.elements = p.meets;
  std::sort(p.elements.begin(), p.elements.end());
  p.elements.erase(std::unique(p.elements.begin(), p.elements.end()), p.elements.end());
  auto in_p = [&](std::size_t x) { return std::binary_search(p.elements.begin(), p.elements.end(), x); };

  for (auto x : p.elements)
    for (auto y : p.elements)
      if (!in_p(l.join(x, y)) || !in_p(l.meet(x, y))) p.sublattice = false;

  for (std::size_t b = 0; b < masks && p.join_is_least_upper_bound; ++b)
    for (std::size_t c = 0; c < masks && p.join_is_least_upper_bound; ++c) {
      const auto j = p.prodanov_join(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c));
      bool ok = l.leq(p.meets[b], j) && l.leq(p.meets[c], j);
      for (auto e : p.elements)
        if (ok && l.leq(p.meets[b], e) && l.leq(p.meets[c], e)) ok = l.leq(j, e);
      p.join_is_least_upper_bound = ok;
    }

  const std::size_t h = height(l);
  for (std::size_t k = 1; k <= h; ++k)
    for (auto x : k_maximal_elements(l, k))
      if (!in_p(x)) {
        p.contains_k_maximal = false;
        p.k_maximal_outside.push_back(x);
      }
  return p;
}

json ProdanovReport::to_json(const TopologyLattice& tl) const {
  json non = json::array();
  for (auto b : non_closed) {
    std::vector<std::size_t> bs, cs;
    for (std::size_t i = 0; i < coatoms.size(); ++i) {
      if (b >> i & 1U) bs.push_back(coatoms[i]);
      if (closures[b] >> i & 1U) cs.push_back(coatoms[i]);
    }
    non.push_back({{"B", kernels_json(tl, bs)}, {"closure", kernels_json(tl, cs)}});
  }
  return {{"group", tl.group().label()},
          {"coatoms", kernels_json(tl, coatoms)},
          {"elements", kernels_json(tl, elements)},
          {"sublattice", sublattice},
          {"join_is_least_upper_bound", join_is_least_upper_bound},
          {"contains_k_maximal", contains_k_maximal},
          {"k_maximal_outside", kernels_json(tl, k_maximal_outside)},
          {"freely_generated", freely_generated()},
          {"non_closed", non}};
}

// --- analysis -------------------------------------------------------------------

AnalysisReport analyze(const TopologyLattice& tl) {
  const auto& g = tl.group();
  const auto& l = tl.lattice();
  AnalysisReport a;
  a.group = g.label();
  a.order = g.order();
  a.abelian = g.is_abelian();
  a.nilpotency_class = nilpotency_class(g);
  a.topologies = tl.size();
  a.modular = check_modular(l);
  a.distributive = check_distributive(l);
  a.semimodular = check_semimodular(l);
  a.dually_semimodular = check_dually_semimodular(l);
  a.birkhoff = check_birkhoff(l);
  a.dual_birkhoff = check_dual_birkhoff(l);
  a.chains = jordan_holder_check(l, l.bottom(), l.top());
  a.height = a.chains.longest;
  for (std::size_t k = 0; k <= a.height; ++k) a.k_maximal.push_back(k_maximal_elements(l, k));
  if (a.abelian && !a.modular) a.invariants_hold = false;
  if (a.nilpotency_class && (!a.semimodular || !a.chains.uniform)) a.invariants_hold = false;
  return a;
}

json AnalysisReport::to_json(const TopologyLattice& tl) const {
  json k = json::array();
  for (const auto& level : k_maximal) k.push_back(kernels_json(tl, level));
  json chain{{"uniform", chains.uniform},
             {"shortest", chains.shortest},
             {"longest", chains.longest}};
  if (chains.uniform) chain["length"] = chains.length;
  else {
    chain["witness"] = {kernels_json(tl, chains.witness->first.elements),
                        kernels_json(tl, chains.witness->second.elements)};
  }
  return {{"group", group},
          {"order", order},
          {"abelian", abelian},
          {"nilpotency_class", nilpotency_class ? json(*nilpotency_class) : json()},
          {"topologies", topologies},
          {"modular", verdict_json(tl, modular)},
          {"distributive", verdict_json(tl, distributive)},
          {"semimodular", verdict_json(tl, semimodular)},
          {"dually_semimodular", verdict_json(tl, dually_semimodular)},
          {"birkhoff", verdict_json(tl, birkhoff)},
          {"dual_birkhoff", verdict_json(tl, dual_birkhoff)},
          {"jordan_holder", chain},
          {"height", height},
          {"k_maximal", k},
          {"invariants_hold", invariants_hold}};
}

}  // namespace toplat
