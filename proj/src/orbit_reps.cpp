#include "orbit_atlas/orbit_reps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace orbit_atlas {

namespace {

std::vector<int> bits_to_set(unsigned mask, int n) {
  std::vector<int> out;
  for (int j = 1; j <= n; ++j) {
    if (mask & (1u << (j - 1))) out.push_back(j);
  }
  return out;
}

void require_index(int i, int n) {
  if (n < 1 || i < 1 || i > n) {
    throw std::out_of_range("index i=" + std::to_string(i) + " out of range for n=" +
                            std::to_string(n));
  }
}

}  // namespace

bool is_decorated(const Permutation& w, std::span<const int> delta) {
  if (delta.empty()) return false;
  const Permutation inv = w.inverse();
  for (std::size_t m = 0; m < delta.size(); ++m) {
    if (delta[m] < 1 || delta[m] > w.degree()) return false;
    if (m == 0) continue;
    if (delta[m] <= delta[m - 1]) return false;
    if (inv(delta[m]) >= inv(delta[m - 1])) return false;
  }
  return true;
}

void check_decorated(const DecoratedPermutation& d) {
  if (!is_decorated(d.w, d.delta)) {
    throw std::invalid_argument("not a decorated permutation: w=" + to_string(d.w));
  }
}

std::vector<DecoratedPermutation> enumerate_decorated(int n, int i) {
  require_index(i, n);
  std::vector<DecoratedPermutation> out;
  const unsigned top = 1u << (i - 1);
  for (const Permutation& w : all_permutations(n)) {
    for (unsigned low = 0; low < top; ++low) {
      auto delta = bits_to_set(low | top, n);
      if (is_decorated(w, delta)) out.push_back({w, std::move(delta)});
    }
  }
  return out;
}

std::vector<DecoratedPermutation> enumerate_all_decorated(int n) {
  std::vector<DecoratedPermutation> out;
  for (const Permutation& w : all_permutations(n)) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      auto delta = bits_to_set(mask, n);
      if (is_decorated(w, delta)) out.push_back({w, std::move(delta)});
    }
  }
  return out;
}

bool is_i_standard(const IStandardFlag& f) {
  const int n = f.degree();
  if (f.i < 1 || f.i > n) return false;
  std::vector<bool> seen(n + 1, false);
  bool found_i = false;
  int last_hat = n + 1;
  for (const FlagEntry& e : f.entries) {
    if (e.index < 1 || e.index > n || seen[e.index]) return false;
    seen[e.index] = true;
    if (e.hat) {
      if (e.index >= f.i || found_i || e.index >= last_hat) return false;
      last_hat = e.index;
    }
    if (e.index == f.i) found_i = true;
  }
  return found_i;
}

void check_flag(const IStandardFlag& f) {
  if (!is_i_standard(f)) {
    throw std::invalid_argument("flag is not in " + std::to_string(f.i) + "-standard form");
  }
}

std::vector<IStandardFlag> enumerate_flags(int n, int i) {
  require_index(i, n);
  std::vector<IStandardFlag> out;
  for (const Permutation& p : all_permutations(n)) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      IStandardFlag f{i, {}};
      bool ok = true;
      for (int k = 1; k <= n && ok; ++k) {
        const bool hat = (mask >> (k - 1)) & 1u;
        if (hat && p(k) >= i) ok = false;
        f.entries.push_back({p(k), hat});
      }
      if (ok && is_i_standard(f)) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> flag_delta(const IStandardFlag& f) {
  std::vector<int> delta;
  for (const FlagEntry& e : f.entries) {
    if (e.hat) delta.push_back(e.index);
  }
  delta.push_back(f.i);
  std::sort(delta.begin(), delta.end());
  return delta;
}

Permutation unhat_permutation(const IStandardFlag& f) {
  std::vector<int> images;
  images.reserve(f.entries.size());
  for (const FlagEntry& e : f.entries) images.push_back(e.index);
  return Permutation(std::move(images));
}

IStandardFlag decorated_to_flag(const DecoratedPermutation& d) {
  check_decorated(d);
  const int n = d.w.degree();
  const int i = d.i();
  const Permutation moved = tau_from_delta(d.delta, i, n) * d.w;
  IStandardFlag f{i, {}};
  for (int k = 1; k <= n; ++k) {
    const int idx = moved(k);
    const bool hat = idx != i && std::binary_search(d.delta.begin(), d.delta.end(), idx);
    f.entries.push_back({idx, hat});
  }
  return f;
}

DecoratedPermutation flag_to_decorated(const IStandardFlag& f) {
  check_flag(f);
  auto delta = flag_delta(f);
  const Permutation tau = tau_from_delta(delta, f.i, f.degree());
  DecoratedPermutation d{tau.inverse() * unhat_permutation(f), std::move(delta)};
  check_decorated(d);
  return d;
}

Permutation flag_tilde(const IStandardFlag& f) { return flag_to_decorated(f).w; }

Permutation flag_i(const IStandardFlag& f) {
  check_flag(f);
  return unhat_permutation(f) * sigma_cycle(f.i, f.degree()).inverse();
}

SharePair sharepair_of(const DecoratedPermutation& d) {
  check_decorated(d);
  const int n = d.w.degree();
  const int i = d.i();
  return {i, d.w, tau_from_delta(d.delta, i, n) * d.w * sigma_cycle(i, n).inverse()};
}

DecoratedPermutation decorated_of_sharepair(const SharePair& p) {
  const int n = p.w.degree();
  require_index(p.i, n);
  if (p.u_i.degree() != n) throw std::invalid_argument("degree mismatch in pair");
  const Permutation tau = p.u_i * sigma_cycle(p.i, n) * p.w.inverse();
  std::vector<int> delta;
  for (int j = 1; j <= n; ++j) {
    if (tau(j) != j || j == p.i) delta.push_back(j);
  }
  if (delta.back() != p.i || tau_from_delta(delta, p.i, n) != tau) {
    throw std::invalid_argument("u^i sigma_i w^{-1} is not a cycle of the form (i, j_{k-1}, ..., j_1)");
  }
  if (!is_decorated(p.w, delta)) {
    throw std::invalid_argument("recovered decoration is not decreasing for w^{-1}");
  }
  return {p.w, std::move(delta)};
}

bool is_share_pair(const Permutation& w, const Permutation& y, int i) {
  const int n = w.degree();
  if (y.degree() != n || i < 1 || i > n) return false;
  const Permutation sigma_inv = sigma_cycle(i, n).inverse();
  const unsigned top = 1u << (i - 1);
  for (unsigned low = 0; low < top; ++low) {
    const auto delta = bits_to_set(low | top, n);
    if (y == tau_from_delta(delta, i, n) * w * sigma_inv && is_decorated(w, delta)) {
      return true;
    }
  }
  return false;
}

StdPair standardize(const SharePair& p) {
  const Permutation sigma = sigma_cycle(p.i, p.w.degree());
  return {p.i, p.w, sigma.inverse() * p.u_i * sigma};
}

SharePair destandardize(const StdPair& q) {
  const Permutation sigma = sigma_cycle(q.i, q.w.degree());
  return {q.i, q.w, sigma * q.u * sigma.inverse()};
}

std::vector<SharePair> enumerate_share_pairs_brute_force(int n, int i) {
  require_index(i, n);
  const auto perms = all_permutations(n);
  std::vector<SharePair> out;
  for (const Permutation& w : perms) {
    for (const Permutation& y : perms) {
      if (is_share_pair(w, y, i)) out.push_back({i, w, y});
    }
  }
  return out;
}

}  // namespace orbit_atlas
