#include "orbit_atlas/pil.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace orbit_atlas {

std::optional<std::size_t> PilWithList::distinguished_index() const {
  if (distinguished.empty()) return std::nullopt;
  auto it = std::find(pil.blocks.begin(), pil.blocks.end(), distinguished);
  if (it == pil.blocks.end()) return std::nullopt;
  return static_cast<std::size_t>(it - pil.blocks.begin());
}

Pil canonical(Pil p) {
  std::sort(p.blocks.begin(), p.blocks.end(), [](const ListBlock& a, const ListBlock& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return p;
}

void check_pil(const Pil& p, std::span<const int> ground) {
  std::vector<int> seen;
  for (const ListBlock& b : p.blocks) {
    if (b.empty()) throw std::invalid_argument("PIL contains an empty list");
    seen.insert(seen.end(), b.begin(), b.end());
  }
  std::sort(seen.begin(), seen.end());
  std::vector<int> expected(ground.begin(), ground.end());
  std::sort(expected.begin(), expected.end());
  if (seen != expected) {
    throw std::invalid_argument("PIL supports do not partition the ground set");
  }
}

std::vector<Pil> enumerate_pil(std::span<const int> ground) {
  std::vector<int> elems(ground.begin(), ground.end());
  std::sort(elems.begin(), elems.end());
  std::vector<Pil> out;
  std::vector<ListBlock> blocks;
  // Each new element opens a list or is inserted anywhere into an existing one.
  std::function<void(std::size_t)> place = [&](std::size_t m) {
    if (m == elems.size()) {
      out.push_back(canonical(Pil{blocks}));
      return;
    }
    const int x = elems[m];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t pos = 0; pos <= blocks[b].size(); ++pos) {
        blocks[b].insert(blocks[b].begin() + static_cast<std::ptrdiff_t>(pos), x);
        place(m + 1);
        blocks[b].erase(blocks[b].begin() + static_cast<std::ptrdiff_t>(pos));
      }
    }
    blocks.push_back({x});
    place(m + 1);
    blocks.pop_back();
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PilWithList> enumerate_pil_with_list(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::out_of_range("need 0 <= k <= n");
  }
  std::vector<int> ground(n);
  for (int j = 0; j < n; ++j) ground[j] = j + 1;
  std::vector<PilWithList> out;
  for (Pil& p : enumerate_pil(ground)) {
    if (k == 0) {
      out.push_back({{}, std::move(p)});
      continue;
    }
    for (const ListBlock& b : p.blocks) {
      if (static_cast<int>(b.size()) == k) out.push_back({b, p});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Pil std_flag_to_pil(const IStandardFlag& f) {
  check_flag(f);
  if (f.i != f.degree()) {
    throw std::invalid_argument("expected a flag in n-standard form (i = n)");
  }
  Pil p;
  ListBlock current;
  for (const FlagEntry& e : f.entries) {
    current.push_back(e.index);
    if (e.hat) p.blocks.push_back(std::exchange(current, {}));
  }
  if (!current.empty()) p.blocks.push_back(std::move(current));
  return canonical(std::move(p));
}

IStandardFlag pil_to_std_flag(const Pil& p, int n) {
  std::vector<int> ground(n);
  for (int j = 0; j < n; ++j) ground[j] = j + 1;
  check_pil(p, ground);
  // The list holding n comes last; the others end in a hat, and hat
  // indices decrease along the flag.
  std::vector<const ListBlock*> head;
  const ListBlock* tail = nullptr;
  for (const ListBlock& b : p.blocks) {
    if (std::find(b.begin(), b.end(), n) != b.end()) {
      tail = &b;
    } else {
      head.push_back(&b);
    }
  }
  std::sort(head.begin(), head.end(),
            [](const ListBlock* a, const ListBlock* b) { return a->back() > b->back(); });
  IStandardFlag f{n, {}};
  for (const ListBlock* b : head) {
    for (std::size_t m = 0; m < b->size(); ++m) {
      f.entries.push_back({(*b)[m], m + 1 == b->size()});
    }
  }
  for (int x : *tail) f.entries.push_back({x, false});
  check_flag(f);
  return f;
}

PilWithList flag_to_pilpair(const IStandardFlag& f) {
  check_flag(f);
  const int n = f.degree();
  const int i = f.i;
  // Positions of e_{i+1}, ..., e_n, and the sub-flag spanned by the rest.
  std::vector<int> support(n - i);
  IStandardFlag sub{i, {}};
  for (int k = 1; k <= n; ++k) {
    const FlagEntry& e = f.entries[k - 1];
    if (e.index > i) {
      support[e.index - i - 1] = k;
    } else {
      sub.entries.push_back(e);
    }
  }
  const Permutation w_inv = min_coset_rep(support, n, i).inverse();
  Pil result;
  for (ListBlock b : std_flag_to_pil(sub).blocks) {
    for (int& x : b) x = w_inv(x);
    result.blocks.push_back(std::move(b));
  }
  if (!support.empty()) result.blocks.push_back(support);
  return {support, canonical(std::move(result))};
}

IStandardFlag pilpair_to_flag(const PilWithList& p, int i) {
  int n = 0;
  for (const ListBlock& b : p.pil.blocks) n += static_cast<int>(b.size());
  if (i < 1 || i > n) throw std::out_of_range("index i out of range");
  if (static_cast<int>(p.distinguished.size()) != n - i) {
    throw std::invalid_argument("distinguished list must have length n - i = " +
                                std::to_string(n - i));
  }
  if (!p.distinguished.empty() && !p.distinguished_index()) {
    throw std::invalid_argument("distinguished list is not a block of the PIL");
  }
  const Permutation w = min_coset_rep(p.distinguished, n, i);
  Pil rest;
  for (const ListBlock& b : p.pil.blocks) {
    if (!p.distinguished.empty() && b == p.distinguished) continue;
    ListBlock relabeled;
    for (int x : b) relabeled.push_back(w(x));
    rest.blocks.push_back(std::move(relabeled));
  }
  const IStandardFlag sub = pil_to_std_flag(canonical(std::move(rest)), i);
  IStandardFlag f{i, std::vector<FlagEntry>(n)};
  std::vector<bool> taken(n + 1, false);
  for (int l = 0; l < n - i; ++l) {
    f.entries[p.distinguished[l] - 1] = {i + 1 + l, false};
    taken[p.distinguished[l]] = true;
  }
  std::size_t next = 0;
  for (int k = 1; k <= n; ++k) {
    if (!taken[k]) f.entries[k - 1] = sub.entries[next++];
  }
  check_flag(f);
  return f;
}

void check_partial(const PartialPermutation& kappa) {
  const int n = kappa.n;
  if (n < 1) throw std::invalid_argument("partial permutation needs n >= 1");
  if (static_cast<int>(kappa.mapping.size()) >= n) {
    throw std::invalid_argument("partial permutation is not strict");
  }
  std::vector<bool> src(n + 1, false), dst(n + 1, false);
  for (auto [a, b] : kappa.mapping) {
    if (a < 1 || a > n || b < 1 || b > n || src[a] || dst[b]) {
      throw std::invalid_argument("partial permutation is not an injective map on 1..n");
    }
    src[a] = dst[b] = true;
  }
}

PartialPermutation decorated_to_partial(const DecoratedPermutation& d) {
  check_decorated(d);
  PartialPermutation kappa{d.w.degree(), {}};
  for (int j = 1; j <= d.w.degree(); ++j) {
    if (!std::binary_search(d.delta.begin(), d.delta.end(), d.w(j))) {
      kappa.mapping.emplace_back(j, d.w(j));
    }
  }
  return kappa;
}

DecoratedPermutation partial_to_decorated(const PartialPermutation& kappa) {
  check_partial(kappa);
  const int n = kappa.n;
  std::vector<int> images(n, 0);
  std::vector<bool> hit(n + 1, false);
  for (auto [a, b] : kappa.mapping) {
    images[a - 1] = b;
    hit[b] = true;
  }
  std::vector<int> delta;
  for (int j = 1; j <= n; ++j) {
    if (!hit[j]) delta.push_back(j);
  }
  // Unmapped sources, ascending, go to delta in descending order.
  auto target = delta.rbegin();
  for (int j = 1; j <= n; ++j) {
    if (images[j - 1] == 0) images[j - 1] = *target++;
  }
  DecoratedPermutation d{Permutation(std::move(images)), std::move(delta)};
  check_decorated(d);
  return d;
}

std::vector<PartialPermutation> enumerate_strict_partial(int n) {
  std::vector<PartialPermutation> out;
  PartialPermutation current{n, {}};
  std::vector<bool> used(n + 1, false);
  std::function<void(int)> extend = [&](int source) {
    if (source > n) {
      if (static_cast<int>(current.mapping.size()) < n) out.push_back(current);
      return;
    }
    extend(source + 1);
    for (int t = 1; t <= n; ++t) {
      if (used[t]) continue;
      used[t] = true;
      current.mapping.emplace_back(source, t);
      extend(source + 1);
      current.mapping.pop_back();
      used[t] = false;
    }
  };
  extend(1);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

BigInt count_pil(int n) {
  if (n < 0) throw std::out_of_range("n must be non-negative");
  if (n == 0) return 1;
  BigInt total = 0;
  const BigInt nfact = factorial(n);
  for (int k = 1; k <= n; ++k) total += binomial(n - 1, k - 1) * nfact / factorial(k);
  return total;
}

BigInt count_orbits(int n, int i) {
  // i = 0 is the Borel subgroup itself: n! Schubert cells.
  if (n < 1 || i < 0 || i > n) {
    throw std::out_of_range("need 0 <= i <= n, n >= 1");
  }
  BigInt r = count_pil(i);
  for (int k = i + 1; k <= n; ++k) r *= k;
  return r;
}

}  // namespace orbit_atlas
