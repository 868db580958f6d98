// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Published values are transcribed here independently of the
// library's own copies.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "orbit_atlas/monoid.hpp"
#include "orbit_atlas/pil.hpp"
#include "orbit_atlas/series.hpp"

using namespace orbit_atlas;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok = true;
  std::string note;
};

Verdict bad(std::string why) { return {false, std::move(why)}; }

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<std::vector<long long>> kTriangle{
    {1}, {2, 3}, {6, 9, 13}, {24, 36, 52, 73}, {120, 180, 260, 365, 501},
    {720, 1080, 1560, 2190, 3006, 4051},
};
const std::vector<long long> kTotals{1, 5, 28, 185, 1426, 12607};

Verdict triangle() {
  auto start = Clock::now();
  int entries = 0;
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      if (count_orbits(n, i) != kTriangle[n - 1][i - 1]) {
        return bad("closed form n=" + std::to_string(n) + " i=" + std::to_string(i));
      }
      ++entries;
    }
  const double closed = seconds_since(start);
  start = Clock::now();
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      if (static_cast<long long>(enumerate_decorated(n, i).size()) != kTriangle[n - 1][i - 1]) {
        return bad("enumeration n=" + std::to_string(n) + " i=" + std::to_string(i));
      }
    }
  const double enumerated = seconds_since(start);
  char note[160];
  std::snprintf(note, sizeof note, "%d entries; closed form %.4fs (<1s), enumeration %.2fs (<120s)",
                entries, closed, enumerated);
  if (closed >= 1.0 || enumerated >= 120.0) return bad(std::string("too slow: ") + note);
  return {true, note};
}

Verdict totals() {
  const RationalSeries series = total_orbit_egf(6);
  for (int n = 1; n <= 6; ++n) {
    long long rows = 0;
    for (int i = 1; i <= n; ++i) rows += static_cast<long long>(enumerate_decorated(n, i).size());
    const BigInt egf = series.egf_coefficient(n);
    const long long partial = static_cast<long long>(enumerate_strict_partial(n).size());
    if (rows != kTotals[n - 1] || egf != kTotals[n - 1] || partial != kTotals[n - 1]) {
      return bad("n=" + std::to_string(n) + ": rows " + std::to_string(rows) + ", series " +
                 egf.str() + ", partial permutations " + std::to_string(partial));
    }
  }
  return {true, "1, 5, 28, 185, 1426, 12607 by row sums, series and partial permutations"};
}

Verdict per_index_series() {
  int cases = 0;
  for (int n = 0; n <= 7; ++n)
    for (int i = 0; i <= n; ++i) {
      if (n == 0) continue;  // no orbit count for degree 0
      if (egf_si_coeff(i, n) != count_orbits(n, n - i)) {
        return bad("n=" + std::to_string(n) + " i=" + std::to_string(i));
      }
      ++cases;
    }
  if (egf_si_coeff(0, 0) != 1) return bad("n=0 coefficient");
  return {true, std::to_string(cases + 1) + " coefficients, 0 <= i <= n <= 7"};
}

Verdict recursion() {
  int cases = 0;
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i) {
      if (count_orbits(n + 1, i) != (n + 1) * count_orbits(n, i)) {
        return bad("n=" + std::to_string(n) + " i=" + std::to_string(i));
      }
      ++cases;
    }
  return {true, std::to_string(cases) + " identities, 1 <= i <= n <= 7"};
}

Verdict bijections() {
  long cases = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (const auto& d : enumerate_decorated(n, i)) {
        const IStandardFlag f = decorated_to_flag(d);
        const SharePair p = sharepair_of(d);
        if (flag_to_decorated(f) != d) return bad("decorated/flag at n=" + std::to_string(n));
        if (decorated_of_sharepair(p) != d) return bad("decorated/pair at n=" + std::to_string(n));
        if (destandardize(standardize(p)) != p) return bad("standardize at n=" + std::to_string(n));
        if (sharepair_of(flag_to_decorated(f)) != p) return bad("flag/pair at n=" + std::to_string(n));
        if (pilpair_to_flag(flag_to_pilpair(f), i) != f) return bad("flag/PIL at n=" + std::to_string(n));
        cases += 5;
      }
      for (const auto& f : enumerate_flags(n, i)) {
        if (decorated_to_flag(flag_to_decorated(f)) != f) return bad("flag/decorated at n=" + std::to_string(n));
        ++cases;
      }
      for (const auto& q : enumerate_pil_with_list(n, n - i)) {
        if (flag_to_pilpair(pilpair_to_flag(q, i)) != q) return bad("PIL/flag at n=" + std::to_string(n));
        ++cases;
      }
    }
    for (const auto& d : enumerate_all_decorated(n)) {
      if (partial_to_decorated(decorated_to_partial(d)) != d) return bad("decorated/partial at n=" + std::to_string(n));
      ++cases;
    }
    for (const auto& k : enumerate_strict_partial(n)) {
      if (decorated_to_partial(partial_to_decorated(k)) != k) return bad("partial/decorated at n=" + std::to_string(n));
      ++cases;
    }
  }
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      const auto a = enumerate_decorated(n, i).size();
      const auto b = enumerate_flags(n, i).size();
      const auto c = enumerate_pil_with_list(n, n - i).size();
      if (a != b || a != c || count_orbits(n, i) != a) {
        return bad("cardinalities differ at n=" + std::to_string(n) + " i=" + std::to_string(i));
      }
    }
  return {true, std::to_string(cases) + " round trips (n <= 5); cardinalities agree for n <= 6"};
}

Verdict pil31() {
  auto make = [](ListBlock sigma, std::vector<ListBlock> blocks) {
    return PilWithList{std::move(sigma), canonical(Pil{std::move(blocks)})};
  };
  const std::set<PilWithList> expected{
      make({1}, {{1}, {2}, {3}}), make({2}, {{1}, {2}, {3}}), make({3}, {{1}, {2}, {3}}),
      make({1}, {{1}, {2, 3}}),   make({1}, {{1}, {3, 2}}),   make({2}, {{2}, {1, 3}}),
      make({2}, {{2}, {3, 1}}),   make({3}, {{3}, {1, 2}}),   make({3}, {{3}, {2, 1}}),
  };
  const auto got = enumerate_pil_with_list(3, 1);
  if (got.size() != 9) return bad(std::to_string(got.size()) + " elements");
  if (std::set<PilWithList>(got.begin(), got.end()) != expected) return bad("element sets differ");
  if (!std::is_sorted(got.begin(), got.end())) return bad("not canonically ordered");
  return {true, "the 9 listed elements"};
}

struct Drawn {
  const char* from;
  const char* to;
  const char* root;
  bool dashed;
  bool red;
};

Verdict figure() {
  const std::map<std::string, int> level{
      {"(e,s)", 0},  {"(s,e)", 0},    {"(t,st)", 1},   {"(s,s)", 1},     {"(st,t)", 1},
      {"(ts,sts)", 2}, {"(st,st)", 2}, {"(sts,ts)", 2}, {"(sts,sts)", 3},
  };
  const std::vector<Drawn> drawn{
      {"(e,s)", "(t,st)", "β", false, false},     {"(e,s)", "(s,s)", "α", false, true},
      {"(s,e)", "(s,s)", "α", false, true},       {"(s,e)", "(st,t)", "β", false, false},
      {"(t,st)", "(ts,sts)", "α", false, false},  {"(t,st)", "(st,st)", "α", true, true},
      {"(s,s)", "(st,st)", "β", false, false},    {"(st,t)", "(st,st)", "α²", true, true},
      {"(st,t)", "(sts,ts)", "α", false, false},  {"(ts,sts)", "(sts,sts)", "β", false, true},
      {"(st,st)", "(sts,sts)", "α", false, false}, {"(sts,ts)", "(sts,sts)", "β", false, true},
  };
  const std::set<std::pair<std::string, std::string>> green{{"(s,s)", "(ts,sts)"}, {"(s,s)", "(sts,ts)"}};

  const OrbitGraph g = weak_order_graph(3, 2);
  std::vector<std::string> name(g.nodes.size());
  for (std::size_t v = 0; v < g.nodes.size(); ++v) name[v] = node_label(g.nodes[v]);
  if (g.nodes.size() != level.size()) return bad(std::to_string(g.nodes.size()) + " nodes");
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    auto it = level.find(name[v]);
    if (it == level.end()) return bad("unexpected node " + name[v]);
    if (it->second != g.levels[v]) return bad("level of " + name[v]);
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (const ActionEdge& e : g.action_edges) pairs.insert({name[e.source], name[e.target]});
  std::set<std::pair<std::string, std::string>> drawn_pairs;
  for (const Drawn& d : drawn) {
    drawn_pairs.insert({d.from, d.to});
    const bool found = std::any_of(g.action_edges.begin(), g.action_edges.end(), [&](const ActionEdge& e) {
      return name[e.source] == d.from && name[e.target] == d.to &&
             root_name(e.label, 3, 2) == d.root && (e.label.kind != ActionKind::kRight) == d.dashed &&
             (e.type == RootType::kNoncompact) == d.red && e.type != RootType::kRealOrComplexUnstable;
    });
    if (!found) return bad(std::string("missing drawn edge ") + d.from + " -> " + d.to + " " + d.root);
  }
  if (pairs != drawn_pairs) {
    return bad(std::to_string(pairs.size()) + " connected pairs, figure has " + std::to_string(drawn_pairs.size()));
  }
  std::set<std::pair<std::string, std::string>> got_green;
  for (auto [a, b] : closure_only_edges(g)) got_green.insert({name[a], name[b]});
  if (got_green != green) return bad("green edges differ");
  return {true, "9 nodes, levels 2/3/3/1, 12 drawn edges (" + std::to_string(g.action_edges.size()) +
                    " labelled actions), 2 green edges"};
}

// Subword criterion on a reduced word read off by stripping left descents.
bool subword_leq(const Permutation& u, const Permutation& w) {
  std::vector<int> word;
  Permutation rest = w;
  while (!rest.is_identity()) {
    const Permutation inv = rest.inverse();
    int k = w.degree() - 1;
    while (inv(k) < inv(k + 1)) --k;
    word.push_back(k);
    rest = Permutation::simple_reflection(w.degree(), k) * rest;
  }
  std::set<Permutation> reachable{Permutation::identity(w.degree())};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::set<Permutation> next = reachable;
    for (const Permutation& x : reachable) next.insert(Permutation::simple_reflection(w.degree(), *it) * x);
    reachable = std::move(next);
  }
  return reachable.count(u) > 0;
}

Verdict properties() {
  const auto start = Clock::now();
  long actions = 0, edges = 0, bruhat = 0;
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i) {
      const OrbitGraph g = weak_order_graph(n, i);
      for (const StdPair& p : g.nodes)
        for (ActionLabel a : action_labels(n, i)) {
          const StdPair q = act(p, a);
          const SharePair back = destandardize(q);
          if (!is_share_pair(back.w, back.u_i, i)) return bad("Sp-preservation: " + node_label(p) + " " + to_string(a));
          if (act(q, a) != q) return bad("idempotency: " + node_label(p) + " " + to_string(a));
          ++actions;
        }
      for (const ActionEdge& e : g.action_edges) {
        if (g.levels[e.target] != g.levels[e.source] + 1) return bad("level jump at n=" + std::to_string(n));
        if (!closure_leq(g.nodes[e.source], g.nodes[e.target])) return bad("weak edge outside closure order");
        ++edges;
      }
    }
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& u : perms)
      for (const Permutation& w : perms) {
        if (bruhat_leq(u, w) != subword_leq(u, w)) return bad("Bruhat " + to_string(u) + " " + to_string(w));
        ++bruhat;
      }
  }
  const double secs = seconds_since(start);
  char note[200];
  std::snprintf(note, sizeof note, "%ld action evaluations, %ld edges, %ld Bruhat pairs, 0 violations, %.2fs (<300s)",
                actions, edges, bruhat, secs);
  if (secs >= 300.0) return bad(std::string("too slow: ") + note);
  return {true, note};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"1 triangle reproduction", triangle},
      {"2 total sequence by three routes", totals},
      {"3 per-index series coefficients", per_index_series},
      {"4 count recursion", recursion},
      {"5 parametrization bijections", bijections},
      {"6 PIL(3,1) element set", pil31},
      {"7 n=3 i=2 graph golden test", figure},
      {"8 action property suite", properties},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = bad(std::string("exception: ") + e.what());
    }
    failures += !v.ok;
    std::printf("%s criterion %s: %s\n", v.ok ? "PASS" : "FAIL", name.c_str(), v.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
