#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace orbit_atlas {

/// An element of the symmetric group on {1..n} in one-line notation.
///
/// Indices are 1-based throughout: `w(j)` is the image of `j`. Composition
/// is right-to-left, `(u * v)(j) = u(v(j))`, so that `w` acting on the
/// standard flag gives `(e_{w(1)} ⊂ ... ⊂ e_{w(n)})`.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The simple reflection s_k swapping k and k+1.
  static Permutation simple_reflection(int n, int k);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// Index of a simple root alpha_k = eps_k - eps_{k+1}, 1 <= k <= n-1.
struct SimpleRootIndex {
  int k = 1;
};

/// (u * v)(j) = u(v(j)). Throws on degree mismatch.
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) {
  return compose(u, v);
}

/// Coxeter length, i.e. the number of inversions.
int length(const Permutation& w);

/// Standard Bruhat order by the rank-matrix criterion:
/// #{j <= a : u(j) >= b} <= #{j <= a : w(j) >= b} for all a, b.
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Right monoid action: w s_k if that is longer than w, else w.
Permutation monoid_right(const Permutation& w, SimpleRootIndex k);
/// Left monoid action: s_k w if that is longer than w, else w.
Permutation monoid_left(const Permutation& w, SimpleRootIndex k);

/// The i-cycle i -> i-1 -> ... -> 1 -> i, fixing i+1..n.
Permutation sigma_cycle(int i, int n);

/// The cycle i -> j_{k-1} -> ... -> j_1 -> i for delta = {j_1 < ... < j_{k-1} < i}.
/// `delta` must be ascending with maximum i.
Permutation tau_from_delta(std::span<const int> delta, int i, int n);

/// Length with respect to the twisted simple reflections sigma_i s_k sigma_i^{-1},
/// computed as length(sigma_i^{-1} x sigma_i).
int twisted_length(const Permutation& x, int i);

/// The permutation sending support[l] to i+1+l and the remaining indices,
/// in ascending order, to 1..i. `support` has n - i distinct entries.
Permutation min_coset_rep(std::span<const int> support, int n, int i);

/// All permutations of degree n in lexicographic order of one-line notation.
std::vector<Permutation> all_permutations(int n);

/// "[2,1,3]".
std::string to_string(const Permutation& w);

}  // namespace orbit_atlas
