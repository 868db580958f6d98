#include "orbit_atlas/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "orbit_atlas/oracles.hpp"
#include "orbit_atlas/pil.hpp"
#include "orbit_atlas/series.hpp"

namespace orbit_atlas {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome pass(std::size_t cases) { return {true, std::to_string(cases) + " cases"}; }

std::string str(const BigInt& v) { return v.str(); }

Outcome triangle_counts(int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      const BigInt closed = count_orbits(n, i);
      const std::size_t decorated = enumerate_decorated(n, i).size();
      const std::size_t flags = enumerate_flags(n, i).size();
      const std::size_t pils = enumerate_pil_with_list(n, n - i).size();
      if (closed != decorated || closed != flags || closed != pils) {
        return fail("n=" + std::to_string(n) + " i=" + std::to_string(i) + ": closed form " +
                    str(closed) + ", decorated " + std::to_string(decorated) + ", flags " +
                    std::to_string(flags) + ", PIL(n,n-i) " + std::to_string(pils));
      }
      ++cases;
    }
  }
  return pass(cases);
}

Outcome published_triangle_rows(int max_n) {
  const auto& rows = oracles::published_triangle();
  std::size_t cases = 0;
  for (int n = 1; n <= std::min<int>(max_n, static_cast<int>(rows.size())); ++n) {
    for (int i = 1; i <= n; ++i) {
      if (count_orbits(n, i) != rows[n - 1][i - 1]) {
        return fail("n=" + std::to_string(n) + " i=" + std::to_string(i) + ": got " +
                    str(count_orbits(n, i)) + ", expected " + std::to_string(rows[n - 1][i - 1]));
      }
      ++cases;
    }
  }
  return pass(cases);
}

Outcome total_sequence(int max_n, int order) {
  const RationalSeries total = total_orbit_egf(std::max(order, max_n));
  const auto& published = oracles::published_totals();
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    BigInt row = 0;
    for (int i = 1; i <= n; ++i) row += enumerate_decorated(n, i).size();
    const BigInt egf = total.egf_coefficient(n);
    const BigInt partial = enumerate_strict_partial(n).size();
    if (row != egf || row != partial) {
      return fail("n=" + std::to_string(n) + ": enumeration " + str(row) + ", series " + str(egf) +
                  ", partial permutations " + str(partial));
    }
    if (n <= static_cast<int>(published.size()) && row != published[n - 1]) {
      return fail("n=" + std::to_string(n) + ": " + str(row) + " differs from published " +
                  std::to_string(published[n - 1]));
    }
    ++cases;
  }
  return pass(cases);
}

Outcome decorated_flag_pair_roundtrips(int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (const DecoratedPermutation& d : enumerate_decorated(n, i)) {
        const IStandardFlag f = decorated_to_flag(d);
        if (!is_i_standard(f) || flag_to_decorated(f) != d) {
          return fail("decorated -> flag -> decorated fails at w=" + to_string(d.w));
        }
        const SharePair p = sharepair_of(d);
        if (p.w != flag_tilde(f) || p.u_i != flag_i(f)) {
          return fail("pair disagrees with the flag's Weyl elements at w=" + to_string(d.w));
        }
        if (!is_share_pair(p.w, p.u_i, i) || decorated_of_sharepair(p) != d) {
          return fail("decorated -> pair -> decorated fails at w=" + to_string(d.w));
        }
        if (destandardize(standardize(p)) != p) {
          return fail("standardize round trip fails at w=" + to_string(d.w));
        }
        ++cases;
      }
      for (const IStandardFlag& f : enumerate_flags(n, i)) {
        if (decorated_to_flag(flag_to_decorated(f)) != f) {
          return fail("flag -> decorated -> flag fails for n=" + std::to_string(n));
        }
        ++cases;
      }
    }
  }
  return pass(cases);
}

Outcome pair_set_characterization(int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::set<SharePair> mapped;
      for (const DecoratedPermutation& d : enumerate_decorated(n, i)) mapped.insert(sharepair_of(d));
      const auto brute = enumerate_share_pairs_brute_force(n, i);
      if (std::set<SharePair>(brute.begin(), brute.end()) != mapped) {
        return fail("image of the pair map differs from the characterized set at n=" +
                    std::to_string(n) + " i=" + std::to_string(i));
      }
      cases += mapped.size();
    }
  }
  return pass(cases);
}

Outcome flag_pil_roundtrips(int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::set<PilWithList> images;
      for (const IStandardFlag& f : enumerate_flags(n, i)) {
        const PilWithList p = flag_to_pilpair(f);
        if (pilpair_to_flag(p, i) != f) {
          return fail("flag -> PIL -> flag fails at n=" + std::to_string(n) +
                      " i=" + std::to_string(i));
        }
        images.insert(p);
        ++cases;
      }
      const auto all = enumerate_pil_with_list(n, n - i);
      if (std::set<PilWithList>(all.begin(), all.end()) != images) {
        return fail("flag -> PIL is not onto PIL(n,n-i) at n=" + std::to_string(n) +
                    " i=" + std::to_string(i));
      }
      for (const PilWithList& p : all) {
        if (flag_to_pilpair(pilpair_to_flag(p, i)) != p) {
          return fail("PIL -> flag -> PIL fails at n=" + std::to_string(n));
        }
        ++cases;
      }
    }
  }
  return pass(cases);
}

Outcome decorated_partial_roundtrips(int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    std::set<PartialPermutation> images;
    for (const DecoratedPermutation& d : enumerate_all_decorated(n)) {
      const PartialPermutation kappa = decorated_to_partial(d);
      if (partial_to_decorated(kappa) != d) {
        return fail("decorated -> partial -> decorated fails at w=" + to_string(d.w));
      }
      images.insert(kappa);
      ++cases;
    }
    const auto all = enumerate_strict_partial(n);
    if (std::set<PartialPermutation>(all.begin(), all.end()) != images) {
      return fail("decorated -> partial is not onto at n=" + std::to_string(n));
    }
    for (const PartialPermutation& kappa : all) {
      if (decorated_to_partial(partial_to_decorated(kappa)) != kappa) {
        return fail("partial -> decorated -> partial fails at n=" + std::to_string(n));
      }
      ++cases;
    }
  }
  return pass(cases);
}

Outcome per_i_series(int top) {
  std::size_t cases = 0;
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      if (egf_si_coeff(i, n) != count_orbits(n, n - i)) {
        return fail("n=" + std::to_string(n) + " shift=" + std::to_string(i) + ": series " +
                    str(egf_si_coeff(i, n)) + ", closed form " + str(count_orbits(n, n - i)));
      }
      ++cases;
    }
  }
  return pass(cases);
}

Outcome total_series(int top) {
  const RationalSeries total = total_orbit_egf(top);
  std::size_t cases = 0;
  for (int n = 1; n <= top; ++n) {
    BigInt sum = 0;
    for (int i = 1; i <= n; ++i) sum += count_orbits(n, i);
    if (total.egf_coefficient(n) != sum) {
      return fail("n=" + std::to_string(n) + ": series " + str(total.egf_coefficient(n)) +
                  ", row sum " + str(sum));
    }
    ++cases;
  }
  return pass(cases);
}

Outcome exp_identities(int order) {
  const RationalSeries a = RationalSeries::x_over_one_minus_x(order);
  const RationalSeries f = series_exp(a);
  // f' = a' f, compared below the truncation edge.
  const RationalSeries lhs = series_derivative(f);
  const RationalSeries rhs = series_mul(series_derivative(a), f);
  for (int k = 0; k < order; ++k) {
    if (lhs[k] != rhs[k]) return fail("f' != a'f at x^" + std::to_string(k));
  }
  if (oracles::naive_exp(a) != f) return fail("recurrence disagrees with the power-sum exp");
  const RationalSeries doubled = pil_egf(2 * order);
  for (int k = 0; k <= order; ++k) {
    if (doubled[k] != f[k]) return fail("doubling the order changed x^" + std::to_string(k));
  }
  return pass(static_cast<std::size_t>(order) + 1);
}

Outcome recursion(int top) {
  std::size_t cases = 0;
  for (int n = 1; n <= top; ++n) {
    for (int i = 1; i <= n; ++i) {
      if (count_orbits(n + 1, i) != (n + 1) * count_orbits(n, i)) {
        return fail("n=" + std::to_string(n) + " i=" + std::to_string(i));
      }
      ++cases;
    }
  }
  return pass(cases);
}

// Builds every graph once; the action checks below share them.
struct GraphCache {
  std::map<std::pair<int, int>, OrbitGraph> graphs;
  const OrbitGraph& get(int n, int i) {
    auto it = graphs.find({n, i});
    if (it == graphs.end()) it = graphs.emplace(std::pair{n, i}, weak_order_graph(n, i)).first;
    return it->second;
  }
};

std::string where(const StdPair& p, ActionLabel a) {
  return "n=" + std::to_string(p.w.degree()) + " i=" + std::to_string(p.i) + " at " +
         node_label(p) + " under " + to_string(a);
}

Outcome sp_preservation(int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::set<StdPair> nodes;
      for (const DecoratedPermutation& d : enumerate_decorated(n, i)) {
        nodes.insert(standardize(sharepair_of(d)));
      }
      for (const StdPair& p : nodes) {
        for (ActionLabel a : action_labels(n, i)) {
          const SharePair q = destandardize(act(p, a));
          if (!is_share_pair(q.w, q.u_i, i)) return fail(where(p, a));
          ++cases;
        }
      }
    }
  }
  return pass(cases);
}

template <typename Pred>
Outcome for_all_actions(GraphCache& cache, int max_n, Pred pred) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (const StdPair& p : cache.get(n, i).nodes) {
        for (ActionLabel a : action_labels(n, i)) {
          if (!pred(p, a)) return fail(where(p, a));
          ++cases;
        }
      }
    }
  }
  return pass(cases);
}

Outcome levels_and_closure(GraphCache& cache, int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int i = 1; i <= n; ++i) {
      const OrbitGraph& g = cache.get(n, i);
      for (const ActionEdge& e : g.action_edges) {
        if (g.levels[e.target] != g.levels[e.source] + 1) {
          return fail("level jump on " + where(g.nodes[e.source], e.label));
        }
        if (!g.closure_pair(e.source, e.target)) {
          return fail("edge outside the closure order: " + where(g.nodes[e.source], e.label));
        }
        ++cases;
      }
    }
  }
  return pass(cases);
}

Outcome bruhat_oracle(int max_n) {
  std::size_t cases = 0;
  for (int n = 1; n <= max_n; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& u : perms) {
      for (const Permutation& w : perms) {
        if (bruhat_leq(u, w) != oracles::bruhat_leq_subword(u, w)) {
          return fail(to_string(u) + " vs " + to_string(w));
        }
        ++cases;
      }
    }
  }
  return pass(cases);
}

Outcome i1_closure_only(GraphCache& cache, int max_n) {
  std::ostringstream out;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) out << ", ";
    out << "n=" << n << ": " << closure_only_edges(cache.get(n, 1)).size();
  }
  return {true, "closure-only covers for i=1 " + out.str()};
}

}  // namespace

std::string compare_with_figure(const OrbitGraph& g) {
  const oracles::FigureGraph& fig = oracles::s2_flags_of_c3();
  if (g.n != 3 || g.i != 2) return "graph is not the n=3, i=2 graph";
  std::map<std::string, std::size_t> id;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) id[node_label(g.nodes[v])] = v;
  if (id.size() != fig.nodes.size()) {
    return std::to_string(id.size()) + " nodes, expected " + std::to_string(fig.nodes.size());
  }
  for (std::size_t k = 0; k < fig.nodes.size(); ++k) {
    auto it = id.find(fig.nodes[k]);
    if (it == id.end()) return "missing node " + fig.nodes[k];
    if (g.levels[it->second] != fig.levels[k]) {
      return "node " + fig.nodes[k] + " at level " + std::to_string(g.levels[it->second]);
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> drawn;
  for (const oracles::FigureEdge& e : fig.edges) {
    const std::size_t s = id.at(e.source);
    const std::size_t t = id.at(e.target);
    drawn.insert({s, t});
    const bool found = std::any_of(g.action_edges.begin(), g.action_edges.end(), [&](const ActionEdge& a) {
      const bool dashed = a.label.kind != ActionKind::kRight;
      const bool red = a.type == RootType::kNoncompact;
      return a.source == s && a.target == t && dashed == e.dashed && red == e.red &&
             root_name(a.label, g.n, g.i) == e.root;
    });
    if (!found) return "no action edge matching " + e.source + " -> " + e.target + " " + e.root;
  }
  std::set<std::pair<std::size_t, std::size_t>> realized;
  for (const ActionEdge& a : g.action_edges) realized.insert({a.source, a.target});
  if (realized != drawn) {
    return std::to_string(realized.size()) + " distinct action pairs, figure draws " +
           std::to_string(drawn.size());
  }
  std::set<std::pair<std::size_t, std::size_t>> green;
  for (const auto& [a, b] : fig.green) green.insert({id.at(a), id.at(b)});
  const auto computed = closure_only_edges(g);
  if (std::set<std::pair<std::size_t, std::size_t>>(computed.begin(), computed.end()) != green) {
    return "closure-only covers differ from the green edges";
  }
  return {};
}

std::vector<CheckResult> run_verification(int max_n, int order) {
  if (max_n < 1) throw std::invalid_argument("max_n must be at least 1");
  if (order < 2) throw std::invalid_argument("series order must be at least 2");
  const int count_n = std::min(max_n, 6);
  const int small_n = std::min(max_n, 5);
  const int series_top = order - 1;

  GraphCache cache;
  std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
      {"published_triangle", [&] { return published_triangle_rows(max_n); }},
      {"counts_closed_form_vs_enumeration", [&] { return triangle_counts(count_n); }},
      {"total_sequence_three_routes", [&] { return total_sequence(count_n, order); }},
      {"roundtrip_decorated_flag_pair", [&] { return decorated_flag_pair_roundtrips(small_n); }},
      {"pair_set_characterization", [&] { return pair_set_characterization(small_n); }},
      {"roundtrip_flag_pil", [&] { return flag_pil_roundtrips(small_n); }},
      {"roundtrip_decorated_partial", [&] { return decorated_partial_roundtrips(small_n); }},
      {"series_per_i", [&] { return per_i_series(series_top); }},
      {"series_total", [&] { return total_series(series_top); }},
      {"series_exp_identities", [&] { return exp_identities(order); }},
      {"count_recursion", [&] { return recursion(series_top); }},
      {"sp_preservation", [&] { return sp_preservation(small_n); }},
      {"act_idempotent",
       [&] {
         return for_all_actions(cache, small_n, [](const StdPair& p, ActionLabel a) {
           const StdPair q = act(p, a);
           return act(q, a) == q;
         });
       }},
      {"act_monotone",
       [&] {
         return for_all_actions(cache, small_n, [](const StdPair& p, ActionLabel a) {
           const StdPair q = act(p, a);
           return q == p || (closure_leq(p, q) && length(q.w) + length(q.u) > length(p.w) + length(p.u));
         });
       }},
      {"root_type_matches_moves",
       [&] {
         return for_all_actions(cache, small_n, [](const StdPair& p, ActionLabel a) {
           const StdPair q = act(p, a);
           const bool w_up = length(q.w) > length(p.w);
           const bool u_up = length(q.u) > length(p.u);
           const RootType t = root_type(p, a);
           if (a.kind == ActionKind::kRight || a.kind == ActionKind::kLeft) {
             if ((t == RootType::kComplexStable) != (w_up && u_up)) return false;
             return (t == RootType::kNoncompact) == (w_up != u_up);
           }
           if (t == RootType::kComplexStable) return false;
           return (t == RootType::kNoncompact) == (w_up || u_up);
         });
       }},
      {"levels_and_weak_in_closure", [&] { return levels_and_closure(cache, small_n); }},
      {"bruhat_vs_subword", [&] { return bruhat_oracle(std::min(max_n, 4)); }},
  };
  if (max_n >= 3) {
    checks.emplace_back("figure_n3_i2", [&]() -> Outcome {
      const std::string why = compare_with_figure(cache.get(3, 2));
      return why.empty() ? Outcome{true, "9 nodes, 12 drawn edges, 2 green"} : fail(why);
    });
  }

  std::vector<CheckResult> results;
  for (auto& [name, run] : checks) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    results.push_back({name, o.ok, o.detail, false});
  }
  try {
    results.push_back({"closure_only_covers_i1", true, i1_closure_only(cache, small_n).detail, true});
  } catch (const std::exception& e) {
    results.push_back({"closure_only_covers_i1", false, std::string("exception: ") + e.what(), false});
  }
  return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const CheckResult& r : results) {
    out << (r.informational ? "INFO" : r.passed ? "PASS" : "FAIL") << ' ' << r.name << ": "
        << r.detail << '\n';
  }
  return out.str();
}

}  // namespace orbit_atlas
