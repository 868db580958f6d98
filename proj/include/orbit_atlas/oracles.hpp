#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbit_atlas/permutation.hpp"
#include "orbit_atlas/series.hpp"

namespace orbit_atlas::oracles {

// Reference implementations that share no code path with the library
// routines they check. Used by `verify` and the test suites.

/// u <= w iff some subword of a reduced word of w multiplies to u.
bool bruhat_leq_subword(const Permutation& u, const Permutation& w);

/// exp(a) as the truncated sum of a^m / m!.
RationalSeries naive_exp(const RationalSeries& a);

/// One drawn edge of the published S_2 orbit graph on flags of C^3.
struct FigureEdge {
  std::string source;
  std::string target;
  std::string root;  // "α", "β" or "α²"
  bool dashed = false;
  bool red = false;
};

struct FigureGraph {
  std::vector<std::string> nodes;  // a1..a9
  std::vector<int> levels;         // parallel to nodes
  std::vector<FigureEdge> edges;
  std::vector<std::pair<std::string, std::string>> green;
};

/// The figure for n = 3, i = 2, transcribed by hand.
const FigureGraph& s2_flags_of_c3();

/// Rows n = 1..6 of the published orbit-count triangle, i = 1..n.
const std::vector<std::vector<long long>>& published_triangle();
/// Published totals for n = 1..6.
const std::vector<long long>& published_totals();

}  // namespace orbit_atlas::oracles
