#pragma once

#include <compare>
#include <span>
#include <vector>

#include "orbit_atlas/permutation.hpp"

namespace orbit_atlas {

/// A pair (w, delta) where delta = {j_1 < ... < j_k} is nonempty and a
/// decreasing sequence for w^{-1}: w^{-1}(j_k) < ... < w^{-1}(j_1).
///
/// It is i-decorated when max(delta) = i; the i-decorated permutations index
/// the orbits of the stabilizer of the line [e_i] on the flag variety.
struct DecoratedPermutation {
  Permutation w;
  std::vector<int> delta;

  int i() const { return delta.back(); }

  friend auto operator<=>(const DecoratedPermutation&, const DecoratedPermutation&) = default;
  friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;
};

/// True iff `delta` is nonempty, strictly ascending inside 1..n and decreasing for w^{-1}.
bool is_decorated(const Permutation& w, std::span<const int> delta);
/// Throws std::invalid_argument if `d` is not a decorated permutation.
void check_decorated(const DecoratedPermutation& d);

/// All i-decorated permutations of degree n, sorted by (w, delta-as-bitset).
std::vector<DecoratedPermutation> enumerate_decorated(int n, int i);
/// All decorated permutations of degree n (every i), same ordering within each w.
std::vector<DecoratedPermutation> enumerate_all_decorated(int n);

/// One vector of a flag in i-standard form: e_index, or e_index + e_i when `hat`.
struct FlagEntry {
  int index = 0;
  bool hat = false;

  friend auto operator<=>(const FlagEntry&, const FlagEntry&) = default;
  friend bool operator==(const FlagEntry&, const FlagEntry&) = default;
};

/// A flag (v_1 ⊂ ... ⊂ v_n) with every v_k a plain or hatted basis vector.
struct IStandardFlag {
  int i = 1;
  std::vector<FlagEntry> entries;

  int degree() const { return static_cast<int>(entries.size()); }

  friend auto operator<=>(const IStandardFlag&, const IStandardFlag&) = default;
  friend bool operator==(const IStandardFlag&, const IStandardFlag&) = default;
};

/// Checks the i-standard form rules: indices form a permutation, hats have
/// index < i, e_i occurs unhatted, nothing after e_i is hatted, and hat
/// indices strictly decrease along the flag.
bool is_i_standard(const IStandardFlag& f);
void check_flag(const IStandardFlag& f);

/// Every flag in i-standard form of degree n, generated directly from the
/// form rules (independently of the decorated-permutation route).
std::vector<IStandardFlag> enumerate_flags(int n, int i);

/// The hat indices of f together with i, ascending.
std::vector<int> flag_delta(const IStandardFlag& f);
/// The permutation whose flag is f with every hat removed.
Permutation unhat_permutation(const IStandardFlag& f);

IStandardFlag decorated_to_flag(const DecoratedPermutation& d);
DecoratedPermutation flag_to_decorated(const IStandardFlag& f);

/// w with w(E) the H-stable flag in the B-orbit of f.
Permutation flag_tilde(const IStandardFlag& f);
/// u^i with u^i(E^i) the H-stable flag in the B^i-orbit of f.
Permutation flag_i(const IStandardFlag& f);

/// (w, u^i): the B-orbit and B^i-orbit whose intersection is the orbit.
struct SharePair {
  int i = 1;
  Permutation w;
  Permutation u_i;

  friend auto operator<=>(const SharePair&, const SharePair&) = default;
  friend bool operator==(const SharePair&, const SharePair&) = default;
};

/// Standardized coordinates (w, u) with u = sigma_i^{-1} u^i sigma_i.
struct StdPair {
  int i = 1;
  Permutation w;
  Permutation u;

  friend auto operator<=>(const StdPair&, const StdPair&) = default;
  friend bool operator==(const StdPair&, const StdPair&) = default;
};

/// (w, tau_delta w sigma_i^{-1}).
SharePair sharepair_of(const DecoratedPermutation& d);
/// Reads delta off the cycle u^i sigma_i w^{-1}; throws std::invalid_argument
/// when the pair is not an i-Shareshian pair.
DecoratedPermutation decorated_of_sharepair(const SharePair& p);

/// Direct test of the pair characterization: y = tau_delta w sigma_i^{-1} for
/// some delta ⊆ {1..i} containing i, with delta decreasing for w^{-1}.
/// Searches all such delta, so it is independent of decorated_of_sharepair.
bool is_share_pair(const Permutation& w, const Permutation& y, int i);

StdPair standardize(const SharePair& p);
SharePair destandardize(const StdPair& q);

/// All i-Shareshian pairs of degree n by brute-force search over W x W.
std::vector<SharePair> enumerate_share_pairs_brute_force(int n, int i);

}  // namespace orbit_atlas
