#include "orbit_atlas/serialize.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbit_atlas {

namespace {

json pair_json(int i, const Permutation& w, const Permutation& u, bool standardized) {
  return {{"i", i}, {"w", w}, {"u", u}, {"standardized", standardized}};
}

ActionKind kind_from_string(const std::string& s) {
  static const std::map<std::string, ActionKind> kinds{
      {"right", ActionKind::kRight},
      {"left", ActionKind::kLeft},
      {"exotic_first", ActionKind::kExoticFirst},
      {"exotic_second", ActionKind::kExoticSecond},
  };
  auto it = kinds.find(s);
  if (it == kinds.end()) throw std::invalid_argument("unknown action kind " + s);
  return it->second;
}

RootType root_from_string(const std::string& s) {
  for (RootType t : {RootType::kComplexStable, RootType::kNoncompact,
                     RootType::kRealOrComplexUnstable}) {
    if (to_string(t) == s) return t;
  }
  throw std::invalid_argument("unknown root type " + s);
}

}  // namespace

void to_json(json& j, const Permutation& w) {
  j = json::array();
  for (int v : w.images()) j.push_back(v);
}

void from_json(const json& j, Permutation& w) { w = Permutation(j.get<std::vector<int>>()); }

void to_json(json& j, const DecoratedPermutation& d) { j = {{"w", d.w}, {"delta", d.delta}}; }

void from_json(const json& j, DecoratedPermutation& d) {
  d.w = j.at("w").get<Permutation>();
  d.delta = j.at("delta").get<std::vector<int>>();
  check_decorated(d);
}

void to_json(json& j, const IStandardFlag& f) {
  json entries = json::array();
  for (const FlagEntry& e : f.entries) entries.push_back({{"idx", e.index}, {"hat", e.hat}});
  j = {{"i", f.i}, {"entries", entries}};
}

void from_json(const json& j, IStandardFlag& f) {
  f.i = j.at("i").get<int>();
  f.entries.clear();
  for (const json& e : j.at("entries")) {
    f.entries.push_back({e.at("idx").get<int>(), e.at("hat").get<bool>()});
  }
  check_flag(f);
}

void to_json(json& j, const SharePair& p) { j = pair_json(p.i, p.w, p.u_i, false); }

void from_json(const json& j, SharePair& p) {
  if (j.at("standardized").get<bool>()) {
    p = destandardize(j.get<StdPair>());
    return;
  }
  p = {j.at("i").get<int>(), j.at("w").get<Permutation>(), j.at("u").get<Permutation>()};
}

void to_json(json& j, const StdPair& p) { j = pair_json(p.i, p.w, p.u, true); }

void from_json(const json& j, StdPair& p) {
  if (!j.at("standardized").get<bool>()) {
    p = standardize(j.get<SharePair>());
    return;
  }
  p = {j.at("i").get<int>(), j.at("w").get<Permutation>(), j.at("u").get<Permutation>()};
}

void to_json(json& j, const Pil& p) { j = {{"blocks", p.blocks}, {"distinguished", nullptr}}; }

void to_json(json& j, const PilWithList& p) {
  j = {{"blocks", p.pil.blocks}, {"distinguished", nullptr}};
  if (auto idx = p.distinguished_index()) j["distinguished"] = *idx;
}

void from_json(const json& j, PilWithList& p) {
  p.pil = canonical(Pil{j.at("blocks").get<std::vector<ListBlock>>()});
  p.distinguished.clear();
  const json& d = j.at("distinguished");
  if (!d.is_null()) {
    // The index refers to the block order as written.
    p.distinguished = j.at("blocks").at(d.get<std::size_t>()).get<ListBlock>();
  }
}

void to_json(json& j, const PartialPermutation& kappa) {
  json mapping = json::array();
  for (auto [a, b] : kappa.mapping) mapping.push_back({a, b});
  j = {{"n", kappa.n}, {"mapping", mapping}};
}

void from_json(const json& j, PartialPermutation& kappa) {
  kappa.n = j.at("n").get<int>();
  kappa.mapping.clear();
  for (const json& m : j.at("mapping")) kappa.mapping.emplace_back(m.at(0), m.at(1));
  std::sort(kappa.mapping.begin(), kappa.mapping.end());
  check_partial(kappa);
}

json graph_to_json(const OrbitGraph& g) {
  json nodes = json::array();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    nodes.push_back({{"id", v},
                     {"label", node_label(g.nodes[v])},
                     {"w", g.nodes[v].w},
                     {"u", g.nodes[v].u},
                     {"level", g.levels[v]}});
  }
  json edges = json::array();
  for (const ActionEdge& e : g.action_edges) {
    json edge = {{"source", e.source},
                 {"target", e.target},
                 {"kind", to_string(e.label.kind)},
                 {"k", e.label.k},
                 {"root", root_name(e.label, g.n, g.i)},
                 {"type", to_string(e.type)}};
    if (e.label.kind == ActionKind::kExoticFirst || e.label.kind == ActionKind::kExoticSecond) {
      edge["provenance"] = "stated without proof; construction deferred";
    }
    edges.push_back(std::move(edge));
  }
  json covers = json::array();
  for (auto [a, b] : closure_covers(g)) covers.push_back({a, b});
  json green = json::array();
  for (auto [a, b] : closure_only_edges(g)) green.push_back({a, b});
  return {{"n", g.n},          {"i", g.i},
          {"nodes", nodes},    {"action_edges", edges},
          {"closure_covers", covers}, {"closure_only_edges", green}};
}

OrbitGraph graph_from_json(const json& j) {
  OrbitGraph g;
  g.n = j.at("n").get<int>();
  g.i = j.at("i").get<int>();
  for (const json& node : j.at("nodes")) {
    g.nodes.push_back({g.i, node.at("w").get<Permutation>(), node.at("u").get<Permutation>()});
    g.levels.push_back(node.at("level").get<int>());
  }
  for (const json& e : j.at("action_edges")) {
    g.action_edges.push_back({e.at("source").get<std::size_t>(),
                              e.at("target").get<std::size_t>(),
                              {kind_from_string(e.at("kind")), e.at("k").get<int>()},
                              root_from_string(e.at("type"))});
  }
  g.closure.assign(g.nodes.size(), boost::dynamic_bitset<>(g.nodes.size()));
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    for (std::size_t b = 0; b < g.nodes.size(); ++b) {
      if (closure_leq(g.nodes[a], g.nodes[b])) g.closure[a].set(b);
    }
  }
  return g;
}

std::string graph_to_dot(const OrbitGraph& g) {
  std::ostringstream out;
  out << "digraph orbits_n" << g.n << "_i" << g.i << " {\n";
  out << "  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    out << "  v" << v << " [label=\"" << node_label(g.nodes[v]) << "\"];\n";
  }
  const int top = g.levels.empty() ? -1 : *std::max_element(g.levels.begin(), g.levels.end());
  for (int level = 0; level <= top; ++level) {
    out << "  { rank=same;";
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (g.levels[v] == level) out << " v" << v << ";";
    }
    out << " }\n";
  }
  for (const ActionEdge& e : g.action_edges) {
    const bool solid = e.label.kind == ActionKind::kRight;
    const char* color = e.type == RootType::kComplexStable ? "blue" : "red";
    out << "  v" << e.source << " -> v" << e.target << " [color=" << color
        << ", style=" << (solid ? "solid" : "dashed") << ", label=\""
        << root_name(e.label, g.n, g.i) << "\"];\n";
  }
  for (auto [a, b] : closure_only_edges(g)) {
    out << "  v" << a << " -> v" << b << " [color=green, style=solid];\n";
  }
  out << "}\n";
  return out.str();
}

std::string flag_text(const IStandardFlag& f) {
  std::string out;
  for (const FlagEntry& e : f.entries) {
    if (!out.empty()) out += ' ';
    if (e.hat) out += '^';
    out += std::to_string(e.index);
  }
  return out;
}

std::string pil_text(const Pil& p) {
  std::string out;
  for (const ListBlock& b : p.blocks) {
    out += '(';
    for (std::size_t m = 0; m < b.size(); ++m) {
      if (m > 0) out += ' ';
      out += std::to_string(b[m]);
    }
    out += ')';
  }
  return out;
}

std::string triangle_csv(int max_n) {
  std::ostringstream out;
  out << "n";
  for (int i = 1; i <= max_n; ++i) out << ",i=" << i;
  out << ",row_sum\n";
  for (int n = 1; n <= max_n; ++n) {
    out << n;
    BigInt sum = 0;
    for (int i = 1; i <= max_n; ++i) {
      out << ',';
      if (i <= n) {
        const BigInt c = count_orbits(n, i);
        sum += c;
        out << c;
      }
    }
    out << ',' << sum << '\n';
  }
  return out.str();
}

json triangle_json(int max_n) {
  json rows = json::array();
  for (int n = 1; n <= max_n; ++n) {
    json counts = json::array();
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) {
      const BigInt c = count_orbits(n, i);
      sum += c;
      counts.push_back(c.str());
    }
    rows.push_back({{"n", n}, {"counts", counts}, {"row_sum", sum.str()}});
  }
  return rows;
}

}  // namespace orbit_atlas
