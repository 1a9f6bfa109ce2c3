#include "toplat/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

#include "toplat/error.hpp"

namespace toplat {

namespace {

std::string str(std::size_t v) { return std::to_string(v); }

// Fills inverse, element orders and commutativity from the table.
void finish(detail::GroupData& d) {
  const std::size_t n = d.order;
  d.inverse.assign(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (d.table[a * n + b] == d.identity) {
        d.inverse[a] = b;
        break;
      }
  d.element_order.assign(n, 1);
  for (Element a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    Element x = a;
    while (x != d.identity) {
      x = d.table[x * n + a];
      ++k;
    }
    d.element_order[a] = k;
  }
  d.abelian = true;
  for (Element a = 0; a < n && d.abelian; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (d.table[a * n + b] != d.table[b * n + a]) {
        d.abelian = false;
        break;
      }
}

void require_order(std::size_t order, const Limits& limits, const char* what) {
  const auto cap = std::min(limits.max_order, Limits::kHardMaxOrder);
  if (order > cap)
    throw ResourceLimit(std::string(what) + ": order " + str(order) + " exceeds cap " + str(cap));
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// Inverse of m modulo q (q >= 1, gcd(m, q) = 1).
std::uint64_t mod_inverse(long long m, std::uint64_t q) {
  if (q == 1) return 1;
  long long r0 = static_cast<long long>(q);
  long long r1 = ((m % r0) + r0) % r0;
  long long s0 = 0;
  long long s1 = 1;
  while (r1 != 0) {
    const long long t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  const long long qq = static_cast<long long>(q);
  return static_cast<std::uint64_t>(((s0 % qq) + qq) % qq);
}

// Closure of generators under multiplication (inverses are powers).
ElementSet close_under_product(const FiniteGroup& g, std::span<const Element> gens) {
  ElementSet s(g.order());
  std::vector<Element> list{g.identity()};
  s.insert(g.identity());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Element x : gens) {
      const Element y = g.mul(list[i], x);
      if (!s.contains(y)) {
        s.insert(y);
        list.push_back(y);
      }
    }
  return s;
}

}  // namespace

FiniteGroup::FiniteGroup() : d_(std::make_shared<const detail::GroupData>()) {}

FiniteGroup FiniteGroup::from_trusted(detail::GroupData data) {
  finish(data);
  return FiniteGroup(std::make_shared<const detail::GroupData>(std::move(data)));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table,
                                    std::vector<std::string> names, const Limits& limits) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidArgument("group table is empty");
  require_order(n, limits, "group table");
  if (!names.empty() && names.size() != n)
    throw InvalidArgument("expected " + str(n) + " element names, got " + str(names.size()));

  detail::GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw InvalidArgument("table row " + str(a) + " has wrong length");
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw InvalidArgument("table entry out of range at " + str(a) + "," + str(b));
      d.table[a * n + b] = table[a][b];
    }
  }
  // Latin square.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n), col(n);
    for (std::size_t b = 0; b < n; ++b) {
      const auto r = d.table[a * n + b];
      const auto c = d.table[b * n + a];
      if (row[r]) throw InvalidArgument("row " + str(a) + " is not a permutation");
      if (col[c]) throw InvalidArgument("column " + str(a) + " is not a permutation");
      row[r] = col[c] = true;
    }
  }
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element i = 0; i < n && ok; ++i) ok = d.table[e * n + i] == i && d.table[i * n + e] == i;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidArgument("table has no two-sided identity");
  d.identity = *identity;
  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b)
      found = d.table[a * n + b] == d.identity && d.table[b * n + a] == d.identity;
    if (!found) throw InvalidArgument("element " + str(a) + " has no two-sided inverse");
  }
  if (n <= limits.associativity_check) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const auto ab = d.table[a * n + b];
        for (std::size_t c = 0; c < n; ++c)
          if (d.table[ab * n + c] != d.table[a * n + d.table[b * n + c]])
            throw InvalidArgument("associativity fails at (" + str(a) + "," + str(b) + "," + str(c) + ")");
      }
  }
  d.names = std::move(names);
  d.label = "table " + str(n);
  return from_trusted(std::move(d));
}

Element FiniteGroup::power(Element a, long long k) const noexcept {
  const long long ord = element_order(a);
  long long e = ((k % ord) + ord) % ord;
  Element result = identity();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::string FiniteGroup::name(Element a) const {
  if (!d_->names.empty()) return d_->names[a];
  return str(a);
}

FiniteGroup FiniteGroup::with_label(std::string label) const {
  auto d = std::make_shared<detail::GroupData>(*d_);
  d->label = std::move(label);
  return FiniteGroup(std::move(d));
}

std::optional<std::pair<FiniteGroup, FiniteGroup>> FiniteGroup::factors() const {
  if (!d_->left) return std::nullopt;
  return std::make_pair(FiniteGroup(d_->left), FiniteGroup(d_->right));
}

// --- SubgroupSet / GroupHomomorphism ------------------------------------------

SubgroupSet::SubgroupSet(FiniteGroup g, ElementSet members)
    : group_(std::move(g)), members_(std::move(members)) {
  if (!is_subgroup(group_, members_)) throw InvalidArgument("set is not a subgroup");
  size_ = members_.size();
}

SubgroupSet SubgroupSet::trivial(const FiniteGroup& g) {
  return {Unchecked{}, g, ElementSet(g.order(), {g.identity()})};
}

SubgroupSet SubgroupSet::whole(const FiniteGroup& g) {
  return {Unchecked{}, g, ElementSet::full(g.order())};
}

GroupHomomorphism::GroupHomomorphism(FiniteGroup source, FiniteGroup target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.order()) throw InvalidArgument("homomorphism map has wrong length");
  for (auto v : map_)
    if (v >= target_.order()) throw InvalidArgument("homomorphism value out of range");
  if (map_[source_.identity()] != target_.identity())
    throw InvalidArgument("homomorphism does not preserve the identity");
  for (Element x = 0; x < source_.order(); ++x)
    for (Element y = 0; y < source_.order(); ++y)
      if (map_[source_.mul(x, y)] != target_.mul(map_[x], map_[y]))
        throw InvalidArgument("map is not multiplicative at (" + str(x) + "," + str(y) + ")");
}

ElementSet GroupHomomorphism::image(const ElementSet& s) const {
  ElementSet out(target_.order());
  s.for_each([&](std::size_t x) { out.insert(map_[x]); });
  return out;
}

ElementSet GroupHomomorphism::preimage(const ElementSet& s) const {
  ElementSet out(source_.order());
  for (Element x = 0; x < source_.order(); ++x)
    if (s.contains(map_[x])) out.insert(x);
  return out;
}

SubgroupSet GroupHomomorphism::kernel() const {
  return {SubgroupSet::Unchecked{}, source_,
          preimage(ElementSet(target_.order(), {target_.identity()}))};
}

// --- constructors -------------------------------------------------------------

bool is_prime(std::size_t n) noexcept {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteGroup make_cyclic(std::size_t n, const Limits& limits) {
  if (n == 0) throw InvalidArgument("invalid order: cyclic group needs n >= 1");
  require_order(n, limits, "make_cyclic");
  detail::GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.table[a * n + b] = static_cast<Element>((a + b) % n);
  d.label = "Z " + str(n);
  return FiniteGroup::from_trusted(std::move(d));
}

FiniteGroup make_elementary_abelian(std::size_t p, std::size_t k, const Limits& limits) {
  if (!is_prime(p)) throw InvalidArgument("make_elementary_abelian: " + str(p) + " is not prime");
  if (k == 0) throw InvalidArgument("make_elementary_abelian: rank must be positive");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    n *= p;
    require_order(n, limits, "make_elementary_abelian");
  }
  // Base-p digits, most significant coordinate first.
  auto digits = [&](std::size_t v) {
    std::vector<std::size_t> out(k);
    for (std::size_t i = k; i-- > 0;) {
      out[i] = v % p;
      v /= p;
    }
    return out;
  };
  detail::GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto da = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto db = digits(b);
      std::size_t v = 0;
      for (std::size_t i = 0; i < k; ++i) v = v * p + (da[i] + db[i]) % p;
      d.table[a * n + b] = static_cast<Element>(v);
    }
  }
  d.names.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    const auto da = digits(a);
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + str(da[i]);
    d.names[a] = s + ")";
  }
  d.label = "Z^k " + str(p) + " " + str(k);
  return FiniteGroup::from_trusted(std::move(d));
}

FiniteGroup make_dihedral(std::size_t n, const Limits& limits) {
  if (n == 0) throw InvalidArgument("make_dihedral: n must be positive");
  require_order(2 * n, limits, "make_dihedral");
  // Element s^a r^i has index a*n + i; r^i s = s r^-i.
  const std::size_t order = 2 * n;
  detail::GroupData d;
  d.order = order;
  d.table.resize(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x / n, i = x % n, b = y / n, j = y % n;
      const std::size_t ri = b ? (n - i) % n : i;
      d.table[x * order + y] = static_cast<Element>(((a + b) % 2) * n + (ri + j) % n);
    }
  d.names.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / n, i = x % n;
    std::string s = a ? "s" : "";
    if (i) s += (a ? " r^" : "r^") + str(i);
    d.names[x] = s.empty() ? "e" : s;
  }
  d.label = "D " + str(n);
  return FiniteGroup::from_trusted(std::move(d));
}

FiniteGroup make_quaternion() {
  // Index 2*u + s for (-1)^s * unit u, units 1, i, j, k.
  // unit_mul[u][v] = {unit, sign} of u*v.
  static constexpr int unit_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  detail::GroupData d;
  d.order = 8;
  d.table.resize(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const auto& m = unit_mul[x / 2][y / 2];
      const int sign = (x % 2 + y % 2 + m[1]) % 2;
      d.table[x * 8 + y] = static_cast<Element>(2 * m[0] + sign);
    }
  d.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  d.label = "Q8";
  return FiniteGroup::from_trusted(std::move(d));
}

FiniteGroup make_heisenberg(std::size_t p, const Limits& limits) {
  if (!is_prime(p)) throw InvalidArgument("make_heisenberg: " + str(p) + " is not prime");
  require_order(p * p * p, limits, "make_heisenberg");
  // [[1,a,c],[0,1,b],[0,0,1]] has index a*p^2 + b*p + c.
  const std::size_t n = p * p * p;
  detail::GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      d.table[x * n + y] = static_cast<Element>(ra * p * p + rb * p + rc);
    }
  d.names.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    d.names[x] = "[" + str(x / (p * p)) + "," + str((x / p) % p) + "," + str(x % p) + "]";
  d.label = "Heis " + str(p);
  return FiniteGroup::from_trusted(std::move(d));
}

FiniteGroup make_symmetric(std::size_t n, const Limits& limits) {
  if (n == 0) throw InvalidArgument("make_symmetric: n must be positive");
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    order *= i;
    require_order(order, limits, "make_symmetric");
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  detail::GroupData d;
  d.order = order;
  d.table.resize(order * order);
  std::vector<int> c(n);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      // (xy)(i) = x(y(i))
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[x][perms[y][i]];
      d.table[x * order + y] = index.at(c);
    }
  d.names.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::string s;
    std::vector<bool> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[i] || perms[x][i] == static_cast<int>(i)) continue;
      s += "(";
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perms[x][j])) {
        seen[j] = true;
        s += (s.back() == '(' ? "" : " ") + str(j + 1);
      }
      s += ")";
    }
    d.names[x] = s.empty() ? "()" : s;
  }
  d.label = "S " + str(n);
  return FiniteGroup::from_trusted(std::move(d));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  require_order(n, limits, "direct_product");
  detail::GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g.mul(static_cast<Element>(x / nh), static_cast<Element>(y / nh));
      const auto b = h.mul(static_cast<Element>(x % nh), static_cast<Element>(y % nh));
      d.table[x * n + y] = static_cast<Element>(a * nh + b);
    }
  d.identity = static_cast<Element>(g.identity() * nh + h.identity());
  d.names.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    d.names[x] = "(" + g.name(static_cast<Element>(x / nh)) + "," + h.name(static_cast<Element>(x % nh)) + ")";
  d.label = g.label() + " x " + h.label();
  d.left = g.d_;
  d.right = h.d_;
  return FiniteGroup::from_trusted(std::move(d));
}

// --- subgroups ----------------------------------------------------------------

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order()) return false;
  if (!s.contains(g.identity())) return false;
  const auto m = s.members();
  for (auto a : m) {
    if (!s.contains(g.inverse(a))) return false;
    for (auto b : m)
      if (!s.contains(g.mul(a, b))) return false;
  }
  return true;
}

SubgroupSet subgroup_generated(const FiniteGroup& g, const ElementSet& seed) {
  const auto gens = seed.members();
  return subgroup_generated(g, gens);
}

SubgroupSet subgroup_generated(const FiniteGroup& g, std::span<const Element> seed) {
  for (auto x : seed)
    if (x >= g.order()) throw InvalidArgument("seed element " + str(x) + " out of range");
  return {SubgroupSet::Unchecked{}, g, close_under_product(g, seed)};
}

std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g, const Limits& limits) {
  const auto cap = std::min(limits.enumeration, Limits::kHardMaxOrder);
  if (g.order() > cap)
    throw ResourceLimit("all_subgroups: order " + str(g.order()) + " exceeds enumeration cap " + str(cap));

  struct Found {
    ElementSet members;
    std::vector<Element> gens;
  };
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Found> found;
  // Cyclic subgroups, one generator each.
  std::vector<std::pair<ElementSet, Element>> cyclic;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    auto s = close_under_product(g, gen);
    if (seen.insert(s).second) {
      cyclic.emplace_back(s, x);
      found.push_back({std::move(s), x == g.identity() ? std::vector<Element>{} : std::vector<Element>{x}});
    }
  }
  // Join every subgroup found with every cyclic subgroup until fixpoint.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (const auto& [c, x] : cyclic) {
      if (c.is_subset_of(found[i].members)) continue;
      auto gens = found[i].gens;
      gens.push_back(x);
      auto s = close_under_product(g, gens);
      if (seen.insert(s).second) found.push_back({std::move(s), std::move(gens)});
    }

  std::vector<SubgroupSet> out;
  out.reserve(found.size());
  for (auto& f : found) out.emplace_back(SubgroupSet::Unchecked{}, g, std::move(f.members));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const SubgroupSet& h) {
  const auto& g = h.group();
  const auto m = h.members().members();
  for (Element x = 0; x < g.order(); ++x)
    for (auto a : m)
      if (!h.contains(g.conjugate(a, x))) return false;
  return true;
}

bool is_normal(const FiniteGroup& g, const ElementSet& s) {
  if (!is_subgroup(g, s)) throw InvalidArgument("is_normal: set is not a subgroup");
  return is_normal(SubgroupSet(SubgroupSet::Unchecked{}, g, s));
}

std::vector<SubgroupSet> all_normal_subgroups(const FiniteGroup& g, const Limits& limits) {
  auto subs = all_subgroups(g, limits);
  std::vector<SubgroupSet> out;
  for (auto& h : subs)
    if (is_normal(h)) out.push_back(std::move(h));
  return out;
}

bool is_central(const SubgroupSet& h) {
  const auto& g = h.group();
  bool ok = true;
  h.members().for_each([&](std::size_t a) {
    for (Element x = 0; x < g.order() && ok; ++x)
      ok = g.mul(static_cast<Element>(a), x) == g.mul(x, static_cast<Element>(a));
  });
  return ok;
}

ElementSet product_set(const FiniteGroup& g, const ElementSet& a, const ElementSet& b) {
  ElementSet out(g.order());
  const auto bm = b.members();
  a.for_each([&](std::size_t x) {
    for (auto y : bm) out.insert(g.mul(static_cast<Element>(x), y));
  });
  return out;
}

Quotient quotient(const SubgroupSet& n) {
  const auto& g = n.group();
  if (!is_normal(n)) throw InvalidArgument("quotient: subgroup is not normal");
  const std::size_t order = g.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset(order, kUnset);
  std::vector<Element> reps;
  const auto nm = n.members().members();
  for (Element x = 0; x < order; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto y : nm) coset[g.mul(x, y)] = id;
  }
  const std::size_t q = reps.size();
  detail::GroupData d;
  d.order = q;
  d.table.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) d.table[a * q + b] = coset[g.mul(reps[a], reps[b])];
  d.identity = coset[g.identity()];
  d.names.resize(q);
  for (std::size_t a = 0; a < q; ++a) d.names[a] = "[" + g.name(reps[a]) + "]";
  d.label = "(" + g.label() + ")/N" + str(n.size());
  auto qg = FiniteGroup::from_trusted(std::move(d));
  return Quotient{qg, GroupHomomorphism(g, qg, std::move(coset)), std::move(reps)};
}

Embedding subgroup_as_group(const SubgroupSet& h) {
  const auto& g = h.group();
  const auto members = h.members().members();
  const std::size_t n = members.size();
  std::vector<std::optional<Element>> back(g.order());
  for (Element i = 0; i < n; ++i) back[members[i]] = i;
  detail::GroupData d;
  d.order = n;
  d.table.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d.table[a * n + b] = *back[g.mul(members[a], members[b])];
  d.identity = *back[g.identity()];
  d.names.resize(n);
  for (std::size_t a = 0; a < n; ++a) d.names[a] = g.name(members[a]);
  d.label = "sub(" + g.label() + ")";
  auto sg = FiniteGroup::from_trusted(std::move(d));
  std::vector<Element> inc(members.begin(), members.end());
  return Embedding{sg, GroupHomomorphism(sg, g, std::move(inc)), std::move(back)};
}

std::pair<SubgroupSet, SubgroupSet> factor_embeddings(const FiniteGroup& g) {
  const auto f = g.factors();
  if (!f) throw InvalidArgument("factor_embeddings: group is not a marked direct product");
  const auto& [left, right] = *f;
  const std::size_t nr = right.order();
  ElementSet l(g.order()), r(g.order());
  for (Element a = 0; a < left.order(); ++a) l.insert(a * nr + right.identity());
  for (Element b = 0; b < nr; ++b) r.insert(left.identity() * nr + b);
  return {SubgroupSet(SubgroupSet::Unchecked{}, g, std::move(l)),
          SubgroupSet(SubgroupSet::Unchecked{}, g, std::move(r))};
}

// --- nilpotency -----------------------------------------------------------------

SubgroupSet center(const FiniteGroup& g) {
  ElementSet z(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element x = 0; x < g.order() && central; ++x) central = g.mul(a, x) == g.mul(x, a);
    if (central) z.insert(a);
  }
  return {SubgroupSet::Unchecked{}, g, std::move(z)};
}

SubgroupSet commutator_subgroup(const FiniteGroup& g) {
  ElementSet seed(g.order());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      seed.insert(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
  return subgroup_generated(g, seed);
}

std::vector<SubgroupSet> upper_central_series(const FiniteGroup& g) {
  std::vector<SubgroupSet> series{SubgroupSet::trivial(g)};
  while (series.back().size() < g.order()) {
    const auto q = quotient(series.back());
    const auto z = center(q.group);
    SubgroupSet next(SubgroupSet::Unchecked{}, g, q.projection.preimage(z.members()));
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const FiniteGroup& g) {
  const auto series = upper_central_series(g);
  if (series.back().size() != g.order()) return std::nullopt;
  return series.size() - 1;
}

ElementOrders exponent_and_element_orders(const FiniteGroup& g) {
  ElementOrders out;
  out.orders.resize(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    out.orders[x] = g.element_order(x);
    out.exponent = std::lcm(out.exponent, static_cast<std::size_t>(out.orders[x]));
  }
  return out;
}

CoprimeWitness coprime_component(const FiniteGroup& g, Element x, long long m) {
  const std::uint64_t ord = g.element_order(x);
  if (gcd_u(ord, static_cast<std::uint64_t>(std::llabs(m))) != 1)
    throw PreconditionError("coprime_component: gcd(ord(x), m) != 1 for ord(x) = " + str(ord) +
                            ", m = " + std::to_string(m));
  return {g.power(x, m), mod_inverse(m, ord)};
}

Element coprime_root(const FiniteGroup& g, Element z, long long m) {
  const std::uint64_t ord = g.element_order(z);
  if (gcd_u(ord, static_cast<std::uint64_t>(std::llabs(m))) != 1)
    throw PreconditionError("coprime_root: gcd(ord(z), m) != 1");
  return g.power(z, static_cast<long long>(mod_inverse(m, ord)));
}

}  // namespace toplat
