#include "orbit_atlas/oracles.hpp"

#include <set>

namespace orbit_atlas::oracles {

namespace {

// Any reduced word; built by repeatedly stripping a right descent.
std::vector<int> some_reduced_word(const Permutation& w) {
  std::vector<int> word;
  std::vector<int> img(w.images().begin(), w.images().end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < img.size(); ++k) {
      if (img[k] > img[k + 1]) {
        std::swap(img[k], img[k + 1]);
        word.push_back(static_cast<int>(k) + 1);
        changed = true;
        break;
      }
    }
  }
  // w s_{a1} ... s_{am} = e, so w = s_{am} ... s_{a1}.
  return {word.rbegin(), word.rend()};
}

}  // namespace

bool bruhat_leq_subword(const Permutation& u, const Permutation& w) {
  const int n = w.degree();
  const std::vector<int> word = some_reduced_word(w);
  const std::size_t m = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> img(n);
    for (int j = 0; j < n; ++j) img[j] = j + 1;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask >> b & 1) std::swap(img[word[b] - 1], img[word[b]]);
    }
    if (Permutation(img) == u) return true;
  }
  return false;
}

RationalSeries naive_exp(const RationalSeries& a) {
  const int order = a.order();
  RationalSeries sum = RationalSeries::constant(order, 1);
  RationalSeries power = RationalSeries::constant(order, 1);
  Rational inv_fact = 1;
  for (int m = 1; m <= order; ++m) {
    power = series_mul(power, a);
    inv_fact /= m;
    for (int k = 0; k <= order; ++k) sum[k] += power[k] * inv_fact;
  }
  return sum;
}

const FigureGraph& s2_flags_of_c3() {
  static const FigureGraph g{
      {"(e,s)", "(s,e)", "(t,st)", "(s,s)", "(st,t)", "(ts,sts)", "(st,st)", "(sts,ts)",
       "(sts,sts)"},
      {0, 0, 1, 1, 1, 2, 2, 2, 3},
      {
          {"(e,s)", "(t,st)", "β", false, false},
          {"(e,s)", "(s,s)", "α", false, true},
          {"(s,e)", "(s,s)", "α", false, true},
          {"(s,e)", "(st,t)", "β", false, false},
          {"(t,st)", "(ts,sts)", "α", false, false},
          {"(t,st)", "(st,st)", "α", true, true},
          {"(s,s)", "(st,st)", "β", false, false},
          {"(st,t)", "(st,st)", "α²", true, true},
          {"(st,t)", "(sts,ts)", "α", false, false},
          {"(ts,sts)", "(sts,sts)", "β", false, true},
          {"(st,st)", "(sts,sts)", "α", false, false},
          {"(sts,ts)", "(sts,sts)", "β", false, true},
      },
      {{"(s,s)", "(sts,ts)"}, {"(s,s)", "(ts,sts)"}},
  };
  return g;
}

const std::vector<std::vector<long long>>& published_triangle() {
  static const std::vector<std::vector<long long>> rows{
      {1},
      {2, 3},
      {6, 9, 13},
      {24, 36, 52, 73},
      {120, 180, 260, 365, 501},
      {720, 1080, 1560, 2190, 3006, 4051},
  };
  return rows;
}

const std::vector<long long>& published_totals() {
  static const std::vector<long long> totals{1, 5, 28, 185, 1426, 12607};
  return totals;
}

}  // namespace orbit_atlas::oracles
