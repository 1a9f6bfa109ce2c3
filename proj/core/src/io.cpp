#include "toplat/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>

#include "toplat/corpus.hpp"
#include "toplat/error.hpp"

namespace toplat {

namespace {

template <class F>
auto json_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string(what) + ": " + e.what());
  }
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

FiniteGroup group_from_json(const nlohmann::json& j, const Limits& limits) {
  if (j.is_string()) return parse_group(j.get<std::string>(), limits);
  return json_guard("group JSON", [&] {
    const auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
      throw InvalidArgument("group JSON: order does not match table size");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    auto g = FiniteGroup::from_table(table, std::move(names), limits);
    if (j.contains("label")) g = g.with_label(j.at("label").get<std::string>());
    return g;
  });
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  std::vector<std::vector<Element>> table(g.order(), std::vector<Element>(g.order()));
  std::vector<std::string> names;
  for (Element a = 0; a < g.order(); ++a) {
    names.push_back(g.name(a));
    for (Element b = 0; b < g.order(); ++b) table[a][b] = g.mul(a, b);
  }
  return {{"label", g.label()}, {"order", g.order()}, {"table", table}, {"names", names}};
}

FiniteLattice lattice_from_json(const nlohmann::json& j) {
  return json_guard("poset JSON", [&] {
    const auto n = j.at("size").get<std::size_t>();
    if (n == 0) throw InvalidArgument("poset JSON: size must be positive");
    if (n > Limits::kHardMaxLatticeSize) throw ResourceLimit("poset JSON: size above hard limit");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    if (j.contains("leq")) {
      const auto m = j.at("leq").get<std::vector<std::vector<int>>>();
      if (m.size() != n) throw InvalidArgument("poset JSON: leq has wrong row count");
      for (std::size_t a = 0; a < n; ++a) {
        if (m[a].size() != n) throw InvalidArgument("poset JSON: leq row of wrong length");
        for (std::size_t b = 0; b < n; ++b) leq[a][b] = m[a][b] != 0;
      }
    } else {
      for (std::size_t a = 0; a < n; ++a) leq[a][a] = true;
      for (const auto& e : j.at("covers")) {
        const auto lo = e.at(0).get<std::size_t>(), hi = e.at(1).get<std::size_t>();
        if (lo >= n || hi >= n) throw InvalidArgument("poset JSON: cover index out of range");
        leq[lo][hi] = true;
      }
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
          if (leq[a][k])
            for (std::size_t b = 0; b < n; ++b)
              if (leq[k][b]) leq[a][b] = true;
    }
    return FiniteLattice::build(n, [&](std::size_t a, std::size_t b) { return leq[a][b]; }, std::move(labels));
  });
}

NeighborhoodFamily family_from_json(const nlohmann::json& j, const Limits& limits) {
  return json_guard("family JSON", [&] {
    auto g = group_from_json(j.at("group"), limits);
    std::vector<ElementSet> sets;
    for (const auto& s : j.at("sets")) {
      ElementSet e(g.order());
      for (auto x : s.get<std::vector<std::size_t>>()) {
        if (x >= g.order()) throw InvalidArgument("family JSON: element index out of range");
        e.insert(x);
      }
      sets.push_back(std::move(e));
    }
    return NeighborhoodFamily(std::move(g), std::move(sets));
  });
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_dot(std::ostream& out, const FiniteLattice& l, const std::string& title) {
  // Rank = longest chain from bottom.
  std::vector<std::size_t> order(l.size()), rank(l.size(), 0);
  for (std::size_t i = 0; i < l.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return l.down_size(a) < l.down_size(b); });
  for (auto a : order)
    for (auto b : l.upper_covers(a)) rank[b] = std::max(rank[b], rank[a] + 1);

  out << "digraph \"" << escape(title) << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i) out << "  n" << i << " [label=\"" << escape(l.label(i)) << "\"];\n";
  std::map<std::size_t, std::vector<std::size_t>> ranks;
  for (std::size_t i = 0; i < l.size(); ++i) ranks[rank[i]].push_back(i);
  for (const auto& [r, members] : ranks) {
    out << "  { rank=same;";
    for (auto i : members) out << " n" << i << ";";
    out << " }\n";
  }
  for (std::size_t i = 0; i < l.size(); ++i)
    for (auto j : l.upper_covers(i)) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
}

}  // namespace toplat
