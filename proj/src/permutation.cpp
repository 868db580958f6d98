#include "orbit_atlas/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace orbit_atlas {

namespace {

void require_same_degree(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(u.degree()) +
                                " vs " + std::to_string(v.degree()));
  }
}

void require_root(const Permutation& w, SimpleRootIndex k) {
  if (k.k < 1 || k.k > w.degree() - 1) {
    throw std::out_of_range("simple root index " + std::to_string(k.k) +
                            " out of range for degree " + std::to_string(w.degree()));
  }
}

void require_index(int i, int n) {
  if (n < 1 || i < 1 || i > n) {
    throw std::out_of_range("index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n == 0) throw std::invalid_argument("permutation of degree 0");
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::simple_reflection(int n, int k) {
  Permutation p = identity(n);
  require_root(p, {k});
  std::swap(p.images_[k - 1], p.images_[k]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int j = 1; j <= degree(); ++j) p.images_[images_[j - 1] - 1] = j;
  return p;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= degree(); ++j) {
    if (images_[j - 1] != j) return false;
  }
  return true;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  require_same_degree(u, v);
  std::vector<int> images(v.degree());
  for (int j = 1; j <= v.degree(); ++j) images[j - 1] = u(v(j));
  return Permutation(std::move(images));
}

int length(const Permutation& w) {
  int inversions = 0;
  const auto img = w.images();
  for (std::size_t a = 0; a < img.size(); ++a) {
    for (std::size_t b = a + 1; b < img.size(); ++b) {
      if (img[a] > img[b]) ++inversions;
    }
  }
  return inversions;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  require_same_degree(u, w);
  const int n = u.degree();
  // count_u[b] = #{j <= a : u(j) >= b}, updated row by row.
  std::vector<int> count_u(n + 2, 0), count_w(n + 2, 0);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= u(a); ++b) ++count_u[b];
    for (int b = 1; b <= w(a); ++b) ++count_w[b];
    for (int b = 1; b <= n; ++b) {
      if (count_u[b] > count_w[b]) return false;
    }
  }
  return true;
}

Permutation monoid_right(const Permutation& w, SimpleRootIndex k) {
  require_root(w, k);
  // w s_k swaps positions k, k+1; it is longer iff w(k) < w(k+1).
  if (w(k.k) > w(k.k + 1)) return w;
  return compose(w, Permutation::simple_reflection(w.degree(), k.k));
}

Permutation monoid_left(const Permutation& w, SimpleRootIndex k) {
  require_root(w, k);
  // s_k w swaps values k, k+1; it is longer iff k precedes k+1 in w.
  const Permutation inv = w.inverse();
  if (inv(k.k) > inv(k.k + 1)) return w;
  return compose(Permutation::simple_reflection(w.degree(), k.k), w);
}

Permutation sigma_cycle(int i, int n) {
  require_index(i, n);
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  images[0] = i;
  for (int k = 2; k <= i; ++k) images[k - 1] = k - 1;
  return Permutation(std::move(images));
}

Permutation tau_from_delta(std::span<const int> delta, int i, int n) {
  require_index(i, n);
  if (delta.empty()) throw std::invalid_argument("empty decoration set");
  if (delta.back() != i) {
    throw std::invalid_argument("decoration set must have maximum " + std::to_string(i));
  }
  for (std::size_t m = 0; m < delta.size(); ++m) {
    if (delta[m] < 1 || (m > 0 && delta[m] <= delta[m - 1])) {
      throw std::invalid_argument("decoration set must be strictly ascending in 1..i");
    }
  }
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  // Each element goes to its predecessor in delta; the smallest goes to i.
  images[delta.front() - 1] = i;
  for (std::size_t m = 1; m < delta.size(); ++m) images[delta[m] - 1] = delta[m - 1];
  return Permutation(std::move(images));
}

int twisted_length(const Permutation& x, int i) {
  const Permutation sigma = sigma_cycle(i, x.degree());
  return length(sigma.inverse() * x * sigma);
}

Permutation min_coset_rep(std::span<const int> support, int n, int i) {
  require_index(i, n);
  if (static_cast<int>(support.size()) != n - i) {
    throw std::invalid_argument("support must have " + std::to_string(n - i) + " entries");
  }
  std::vector<int> images(n, 0);
  int next = i + 1;
  for (int j : support) {
    if (j < 1 || j > n || images[j - 1] != 0) {
      throw std::invalid_argument("support entries must be distinct indices in 1..n");
    }
    images[j - 1] = next++;
  }
  int low = 1;
  for (int j = 1; j <= n; ++j) {
    if (images[j - 1] == 0) images[j - 1] = low++;
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::string to_string(const Permutation& w) {
  std::string out = "[";
  for (int j = 1; j <= w.degree(); ++j) {
    if (j > 1) out += ',';
    out += std::to_string(w(j));
  }
  return out + "]";
}

}  // namespace orbit_atlas
