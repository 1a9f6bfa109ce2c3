#include "toplat/corpus.hpp"

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "toplat/error.hpp"

namespace toplat {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t number(const std::string& s) {
  if (s.size() > 6) throw InvalidArgument("number too large in group spec: " + s);
  return std::stoul(s);
}

FiniteGroup power_of(const FiniteGroup& base, std::size_t k, const Limits& limits) {
  if (k == 0) throw InvalidArgument("group power must be positive");
  FiniteGroup g = base;
  for (std::size_t i = 1; i < k; ++i) g = direct_product(g, base, limits);
  return g;
}

FiniteGroup parse_factor(const std::string& f, const Limits& limits) {
  static const std::regex elementary(R"(Z\s*\^\s*k\s+(\d+)\s+(\d+))");
  static const std::regex cyclic_power(R"(Z\s*\(?\s*(\d+)\s*\)?\s*\^\s*(\d+))");
  static const std::regex cyclic(R"(Z\s*\(?\s*(\d+)\s*\)?)");
  static const std::regex dihedral(R"(D\s*\(?\s*(\d+)\s*\)?)");
  static const std::regex quaternion(R"(Q\s*8)");
  static const std::regex heisenberg(R"(Heis\s*\(?\s*(\d+)\s*\)?)");
  static const std::regex symmetric(R"(S\s*\(?\s*(\d+)\s*\)?)");

  std::smatch m;
  if (std::regex_match(f, m, elementary)) {
    const auto p = number(m[1]);
    if (!is_prime(p)) throw InvalidArgument("Z^k needs a prime, got " + m[1].str());
    return make_elementary_abelian(p, number(m[2]), limits);
  }
  if (std::regex_match(f, m, cyclic_power)) {
    const auto n = number(m[1]), k = number(m[2]);
    if (is_prime(n)) return make_elementary_abelian(n, k, limits);
    return power_of(make_cyclic(n, limits), k, limits);
  }
  if (std::regex_match(f, m, cyclic)) return make_cyclic(number(m[1]), limits);
  if (std::regex_match(f, m, dihedral)) return make_dihedral(number(m[1]), limits);
  if (std::regex_match(f, m, quaternion)) return make_quaternion();
  if (std::regex_match(f, m, heisenberg)) return make_heisenberg(number(m[1]), limits);
  if (std::regex_match(f, m, symmetric)) return make_symmetric(number(m[1]), limits);
  throw InvalidArgument("unrecognised group factor '" + f + "'");
}

}  // namespace

FiniteGroup parse_group(std::string_view spec, const Limits& limits) {
  std::string s(spec);
  for (std::size_t pos; (pos = s.find("\xC3\x97")) != std::string::npos;) s.replace(pos, 2, "x");
  std::vector<std::string> factors;
  std::string cur;
  for (char c : s) {
    if (c == 'x' || c == '*') {
      factors.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(trim(cur));

  std::optional<FiniteGroup> g;
  for (const auto& f : factors) {
    if (f.empty()) throw InvalidArgument("empty factor in group spec '" + std::string(spec) + "'");
    auto h = parse_factor(f, limits);
    g = g ? direct_product(*g, h, limits) : h;
  }
  return *g;
}

std::vector<CorpusEntry> read_corpus(std::istream& in, const Limits& limits) {
  std::vector<CorpusEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::string name, spec = line;
    if (const auto eq = line.find('='); eq != std::string::npos) {
      name = trim(line.substr(0, eq));
      spec = trim(line.substr(eq + 1));
    }
    try {
      auto g = parse_group(spec, limits);
      if (name.empty()) name = spec;
      out.push_back({std::move(name), std::move(spec), std::move(g)});
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("corpus line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open corpus file " + path);
  return read_corpus(in, limits);
}

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::ostringstream text;
    for (int n = 1; n <= 64; ++n) text << "Z " << n << "\n";
    for (const char* s :
         {"Z^k 2 2", "Z^k 2 3", "Z^k 2 4", "Z^k 2 5", "Z^k 2 6", "Z^k 3 2", "Z^k 3 3", "Z^k 5 2", "Z^k 7 2",
          "Z2 x Z4", "Z2 x Z6", "Z2 x Z8", "Z4 x Z4", "Z2 x Z2 x Z4", "Z2 x Z10", "Z3 x Z6", "Z2 x Z12",
          "Z2 x Z2 x Z6", "Z3 x Z9", "Z2 x Z14", "Z2 x Z16", "Z4 x Z8", "Z2 x Z4 x Z4", "Z2 x Z2 x Z8",
          "Z2 x Z2 x Z2 x Z4", "Z6 x Z6", "Z2 x Z18", "Z3 x Z12", "Z2 x Z20", "Z2 x Z2 x Z10", "Z2 x Z22",
          "Z2 x Z24", "Z2 x Z2 x Z12", "Z5 x Z10", "Z3 x Z15", "Z2 x Z26", "Z3 x Z18", "Z2 x Z28",
          "Z2 x Z30", "Z2 x Z32", "Z4 x Z16", "Z8 x Z8", "Z2 x Z2 x Z16", "Z2 x Z4 x Z8", "Z4 x Z4 x Z4",
          "Z2 x Z2 x Z4 x Z4", "Z2 x Z2 x Z2 x Z8", "Z2 x Z2 x Z2 x Z2 x Z4"})
      text << s << "\n";
    for (int n = 3; n <= 12; ++n) text << "D " << n << "\n";
    for (const char* s : {"Q8", "Heis 2", "Heis 3", "S 3", "S 4", "Z3 x Q8", "Z3 x D4", "Z2 x Q8", "Z3^2 x D4",
                          "Z5 x Q8", "Z3 x Heis 2", "Z2 x D4", "Z2 x S3"})
      text << s << "\n";
    std::istringstream in(text.str());
    return read_corpus(in);
  }();
  return corpus;
}

}  // namespace toplat
