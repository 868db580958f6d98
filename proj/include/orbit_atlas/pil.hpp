#pragma once

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbit_atlas/orbit_reps.hpp"

namespace orbit_atlas {

using BigInt = boost::multiprecision::cpp_int;

/// An ordered list of distinct non-negative integers.
using ListBlock = std::vector<int>;

/// A partition of a finite set into lists.
///
/// Canonical form keeps blocks sorted by their minimum element; every
/// function returning a Pil returns it canonical.
struct Pil {
  std::vector<ListBlock> blocks;

  friend auto operator<=>(const Pil&, const Pil&) = default;
  friend bool operator==(const Pil&, const Pil&) = default;
};

/// A PIL with one distinguished list. An empty `distinguished` list is only
/// used for the boundary PIL(n, 0), identified with PIL(n).
struct PilWithList {
  ListBlock distinguished;
  Pil pil;

  /// Position of `distinguished` among pil.blocks, or nullopt when empty.
  std::optional<std::size_t> distinguished_index() const;

  friend auto operator<=>(const PilWithList&, const PilWithList&) = default;
  friend bool operator==(const PilWithList&, const PilWithList&) = default;
};

/// An injective map between proper subsets of {1..n}, as (source, target)
/// pairs sorted by source.
struct PartialPermutation {
  int n = 0;
  std::vector<std::pair<int, int>> mapping;

  friend auto operator<=>(const PartialPermutation&, const PartialPermutation&) = default;
  friend bool operator==(const PartialPermutation&, const PartialPermutation&) = default;
};

Pil canonical(Pil p);
/// Throws std::invalid_argument unless the blocks are nonempty lists whose
/// supports partition `ground`.
void check_pil(const Pil& p, std::span<const int> ground);

std::vector<Pil> enumerate_pil(std::span<const int> ground);
/// All (sigma, Sigma) with sigma ∈ Sigma a list of length k on {1..n}.
std::vector<PilWithList> enumerate_pil_with_list(int n, int k);

/// The PIL of a flag in n-standard form: cut after every hatted position.
Pil std_flag_to_pil(const IStandardFlag& f);
/// Inverse of std_flag_to_pil on PIL(n).
IStandardFlag pil_to_std_flag(const Pil& p, int n);

/// The bijection from flags in i-standard form to PIL(n, n-i).
PilWithList flag_to_pilpair(const IStandardFlag& f);
IStandardFlag pilpair_to_flag(const PilWithList& p, int i);

/// w restricted to the complement of w^{-1}(delta).
PartialPermutation decorated_to_partial(const DecoratedPermutation& d);
DecoratedPermutation partial_to_decorated(const PartialPermutation& kappa);
void check_partial(const PartialPermutation& kappa);

/// All strict partial permutations of {1..n}, sorted.
std::vector<PartialPermutation> enumerate_strict_partial(int n);

/// |PIL(n)| = sum_{k=1}^{n} C(n-1, k-1) n!/k!, with |PIL(0)| = 1.
BigInt count_pil(int n);
/// n (n-1) ... (i+1) |PIL(i)|, for 0 <= i <= n.
BigInt count_orbits(int n, int i);
BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace orbit_atlas
