#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "orbit_atlas/orbit_reps.hpp"

namespace orbit_atlas {

enum class ActionKind {
  kRight,         ///< right action by alpha_k, any 1 <= k <= n-1
  kLeft,          ///< left action by alpha_k with [e_i] stable under P_alpha
  kExoticFirst,   ///< left action by alpha_{i-1} on the first factor
  kExoticSecond,  ///< left action by the twisted root alpha_1^i on the second factor
};

struct ActionLabel {
  ActionKind kind = ActionKind::kRight;
  int k = 0;  // unused for the exotic kinds

  static ActionLabel right(int k) { return {ActionKind::kRight, k}; }
  static ActionLabel left(int k) { return {ActionKind::kLeft, k}; }
  static ActionLabel exotic_first() { return {ActionKind::kExoticFirst, 0}; }
  static ActionLabel exotic_second() { return {ActionKind::kExoticSecond, 0}; }

  friend auto operator<=>(const ActionLabel&, const ActionLabel&) = default;
  friend bool operator==(const ActionLabel&, const ActionLabel&) = default;
};

enum class RootType { kComplexStable, kNoncompact, kRealOrComplexUnstable };

/// Whether `a` is defined on orbits of degree n for the line [e_i].
bool is_valid_label(ActionLabel a, int n, int i);
/// Every valid label in a fixed order: right(1..n-1), left(...), exotics.
std::vector<ActionLabel> action_labels(int n, int i);

/// The extended monoid action in standardized coordinates.
StdPair act(const StdPair& p, ActionLabel a);
RootType root_type(const StdPair& p, ActionLabel a);

/// Product of Bruhat orders on standardized pairs.
bool closure_leq(const StdPair& p, const StdPair& q);

struct ActionEdge {
  std::size_t source = 0;
  std::size_t target = 0;
  ActionLabel label;
  RootType type = RootType::kComplexStable;
};

/// The weak-order graph of all standardized pairs for (n, i).
struct OrbitGraph {
  int n = 0;
  int i = 0;
  std::vector<StdPair> nodes;            // sorted
  std::vector<ActionEdge> action_edges;  // sorted by (source, label)
  std::vector<int> levels;               // relative dimension, minimum 0
  /// closure[a][b] iff closure_leq(nodes[a], nodes[b]).
  std::vector<boost::dynamic_bitset<>> closure;

  std::size_t index_of(const StdPair& p) const;
  bool closure_pair(std::size_t a, std::size_t b) const { return closure[a][b]; }
};

inline constexpr std::uint64_t kDefaultSizeGuard = 10'000'000;

/// Builds the graph; throws std::length_error when the orbit count exceeds
/// `guard`, std::logic_error when the level function is inconsistent or a
/// node is unreachable from the minimal nodes.
OrbitGraph weak_order_graph(int n, int i, std::uint64_t guard = kDefaultSizeGuard);

/// Covering pairs (a, b) of the closure order restricted to the nodes.
std::vector<std::pair<std::size_t, std::size_t>> closure_covers(const OrbitGraph& g);
/// Covering pairs that no action edge realizes.
std::vector<std::pair<std::size_t, std::size_t>> closure_only_edges(const OrbitGraph& g);

/// Lexicographically least reduced word using `letters[k-1]` for s_k; "e" for identity.
std::string reduced_word(const Permutation& w, const std::vector<std::string>& letters);
/// "(st,st)" for n = 3, one-line notation otherwise.
std::string node_label(const StdPair& p);
/// Root name for drawing: "α", "β", "α²" when n = 3, else "alpha_k" / "alpha_1^i".
std::string root_name(ActionLabel a, int n, int i);

std::string to_string(ActionKind kind);
std::string to_string(RootType type);
/// "right(2)", "left(1)", "exotic_first", "exotic_second".
std::string to_string(ActionLabel a);

}  // namespace orbit_atlas
