#include "orbit_atlas/monoid.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "orbit_atlas/pil.hpp"

namespace orbit_atlas {

namespace {

void require_label(ActionLabel a, int n, int i) {
  if (!is_valid_label(a, n, i)) {
    throw std::invalid_argument("action " + to_string(a) + " is not defined for n=" +
                                std::to_string(n) + ", i=" + std::to_string(i));
  }
}

// Which factors of the pair move under `a`.
std::pair<bool, bool> moves(const StdPair& p, ActionLabel a) {
  const StdPair q = act(p, a);
  return {q.w != p.w, q.u != p.u};
}

}  // namespace

bool is_valid_label(ActionLabel a, int n, int i) {
  if (n < 1 || i < 1 || i > n) return false;
  switch (a.kind) {
    case ActionKind::kRight:
      return a.k >= 1 && a.k <= n - 1;
    case ActionKind::kLeft:
      return a.k >= 1 && a.k <= n - 1 && (a.k <= i - 2 || a.k >= i + 1);
    case ActionKind::kExoticFirst:
    case ActionKind::kExoticSecond:
      return i >= 2;
  }
  return false;
}

std::vector<ActionLabel> action_labels(int n, int i) {
  std::vector<ActionLabel> out;
  for (int k = 1; k <= n - 1; ++k) out.push_back(ActionLabel::right(k));
  for (int k = 1; k <= n - 1; ++k) {
    if (is_valid_label(ActionLabel::left(k), n, i)) out.push_back(ActionLabel::left(k));
  }
  if (i >= 2) {
    out.push_back(ActionLabel::exotic_first());
    out.push_back(ActionLabel::exotic_second());
  }
  return out;
}

StdPair act(const StdPair& p, ActionLabel a) {
  const int n = p.w.degree();
  require_label(a, n, p.i);
  switch (a.kind) {
    case ActionKind::kRight:
      return {p.i, monoid_right(p.w, {a.k}), monoid_right(p.u, {a.k})};
    case ActionKind::kLeft: {
      // alpha_k is the twisted simple root alpha^i_{k+1} when k <= i-2.
      const int twisted = a.k <= p.i - 2 ? a.k + 1 : a.k;
      return {p.i, monoid_left(p.w, {a.k}), monoid_left(p.u, {twisted})};
    }
    case ActionKind::kExoticFirst:
      return {p.i, monoid_left(p.w, {p.i - 1}), p.u};
    case ActionKind::kExoticSecond:
      return {p.i, p.w, monoid_left(p.u, {1})};
  }
  throw std::logic_error("unknown action kind");
}

RootType root_type(const StdPair& p, ActionLabel a) {
  const auto [w_moves, u_moves] = moves(p, a);
  if (a.kind == ActionKind::kExoticFirst || a.kind == ActionKind::kExoticSecond) {
    return (w_moves || u_moves) ? RootType::kNoncompact : RootType::kRealOrComplexUnstable;
  }
  if (w_moves && u_moves) return RootType::kComplexStable;
  if (w_moves || u_moves) return RootType::kNoncompact;
  return RootType::kRealOrComplexUnstable;
}

bool closure_leq(const StdPair& p, const StdPair& q) {
  if (p.i != q.i || p.w.degree() != q.w.degree()) {
    throw std::invalid_argument("closure order compares pairs with different (n, i)");
  }
  return bruhat_leq(p.w, q.w) && bruhat_leq(p.u, q.u);
}

std::size_t OrbitGraph::index_of(const StdPair& p) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
  if (it == nodes.end() || *it != p) {
    throw std::out_of_range("pair is not a node of this graph");
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

OrbitGraph weak_order_graph(int n, int i, std::uint64_t guard) {
  const BigInt predicted = count_orbits(n, i);
  if (predicted > guard) {
    throw std::length_error("orbit count " + predicted.str() + " exceeds size guard " +
                            std::to_string(guard));
  }
  OrbitGraph g;
  g.n = n;
  g.i = i;
  for (const DecoratedPermutation& d : enumerate_decorated(n, i)) {
    g.nodes.push_back(standardize(sharepair_of(d)));
  }
  std::sort(g.nodes.begin(), g.nodes.end());

  const auto labels = action_labels(n, i);
  std::vector<int> indegree(g.nodes.size(), 0);
  for (std::size_t s = 0; s < g.nodes.size(); ++s) {
    for (ActionLabel a : labels) {
      const StdPair q = act(g.nodes[s], a);
      if (q == g.nodes[s]) continue;
      auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), q);
      if (it == g.nodes.end() || *it != q) {
        throw std::logic_error("action " + to_string(a) + " leaves the set of pairs at " +
                               node_label(g.nodes[s]));
      }
      const auto t = static_cast<std::size_t>(it - g.nodes.begin());
      g.action_edges.push_back({s, t, a, root_type(g.nodes[s], a)});
      ++indegree[t];
    }
  }

  g.levels.assign(g.nodes.size(), -1);
  std::vector<std::vector<std::size_t>> out_edges(g.nodes.size());
  for (const ActionEdge& e : g.action_edges) out_edges[e.source].push_back(e.target);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (indegree[v] == 0) {
      g.levels[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t t : out_edges[v]) {
      if (g.levels[t] < 0) {
        g.levels[t] = g.levels[v] + 1;
        queue.push_back(t);
      }
    }
  }
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    if (g.levels[v] < 0) {
      throw std::logic_error("node " + node_label(g.nodes[v]) +
                             " is unreachable from the minimal nodes");
    }
  }
  for (const ActionEdge& e : g.action_edges) {
    if (g.levels[e.target] != g.levels[e.source] + 1) {
      throw std::logic_error("inconsistent levels on edge " + node_label(g.nodes[e.source]) +
                             " -> " + node_label(g.nodes[e.target]));
    }
  }

  g.closure.assign(g.nodes.size(), boost::dynamic_bitset<>(g.nodes.size()));
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    for (std::size_t b = 0; b < g.nodes.size(); ++b) {
      if (closure_leq(g.nodes[a], g.nodes[b])) g.closure[a].set(b);
    }
  }
  return g;
}

std::vector<std::pair<std::size_t, std::size_t>> closure_covers(const OrbitGraph& g) {
  const std::size_t size = g.nodes.size();
  std::vector<boost::dynamic_bitset<>> strict_up = g.closure;
  for (std::size_t a = 0; a < size; ++a) strict_up[a].reset(a);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < size; ++a) {
    boost::dynamic_bitset<> cover = strict_up[a];
    for (auto c = strict_up[a].find_first(); c != boost::dynamic_bitset<>::npos;
         c = strict_up[a].find_next(c)) {
      cover -= strict_up[c];
    }
    for (auto b = cover.find_first(); b != boost::dynamic_bitset<>::npos; b = cover.find_next(b)) {
      covers.emplace_back(a, b);
    }
  }
  return covers;
}

std::vector<std::pair<std::size_t, std::size_t>> closure_only_edges(const OrbitGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> realized;
  for (const ActionEdge& e : g.action_edges) realized.emplace_back(e.source, e.target);
  std::sort(realized.begin(), realized.end());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& c : closure_covers(g)) {
    if (!std::binary_search(realized.begin(), realized.end(), c)) out.push_back(c);
  }
  return out;
}

std::string reduced_word(const Permutation& w, const std::vector<std::string>& letters) {
  if (w.is_identity()) return "e";
  std::string word;
  Permutation rest = w;
  while (!rest.is_identity()) {
    const Permutation inv = rest.inverse();
    int k = 1;
    while (inv(k) < inv(k + 1)) ++k;  // first left descent
    word += letters.at(k - 1);
    rest = Permutation::simple_reflection(w.degree(), k) * rest;
  }
  return word;
}

std::string node_label(const StdPair& p) {
  if (p.w.degree() == 3) {
    const std::vector<std::string> letters{"s", "t"};
    return "(" + reduced_word(p.w, letters) + "," + reduced_word(p.u, letters) + ")";
  }
  return "(" + to_string(p.w) + "," + to_string(p.u) + ")";
}

std::string root_name(ActionLabel a, int n, int i) {
  const int k = a.kind == ActionKind::kExoticFirst ? i - 1 : a.k;
  if (n == 3) {
    if (a.kind == ActionKind::kExoticSecond) return "α" + std::string(i == 2 ? "²" : "³");
    return k == 1 ? "α" : "β";
  }
  if (a.kind == ActionKind::kExoticSecond) return "alpha_1^" + std::to_string(i);
  return "alpha_" + std::to_string(k);
}

std::string to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::kRight: return "right";
    case ActionKind::kLeft: return "left";
    case ActionKind::kExoticFirst: return "exotic_first";
    case ActionKind::kExoticSecond: return "exotic_second";
  }
  return "?";
}

std::string to_string(RootType type) {
  switch (type) {
    case RootType::kComplexStable: return "complex_stable";
    case RootType::kNoncompact: return "noncompact";
    case RootType::kRealOrComplexUnstable: return "real_or_complex_unstable";
  }
  return "?";
}

std::string to_string(ActionLabel a) {
  if (a.kind == ActionKind::kRight || a.kind == ActionKind::kLeft) {
    return to_string(a.kind) + "(" + std::to_string(a.k) + ")";
  }
  return to_string(a.kind);
}

}  // namespace orbit_atlas
