#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbit_atlas {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr int kDefaultSeriesOrder = 12;

/// A formal power series truncated after x^order, with exact rational
/// coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(int order = kDefaultSeriesOrder);
  RationalSeries(int order, std::vector<Rational> coeffs);

  static RationalSeries constant(int order, const Rational& c);
  /// 1 + x + x^2 + ...
  static RationalSeries geometric(int order);
  /// x / (1 - x) = x + x^2 + ...
  static RationalSeries x_over_one_minus_x(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  Rational& operator[](int k) { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// n! [x^n]; throws std::domain_error if that is not an integer.
  BigInt egf_coefficient(int n) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b);
RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b);
/// x^shift * a, truncated.
RationalSeries series_scale_xpow(const RationalSeries& a, int shift);
/// Termwise derivative; the top coefficient becomes 0.
RationalSeries series_derivative(const RationalSeries& a);
/// exp(a) for a with zero constant term, via n f_n = sum_k k a_k f_{n-k}.
RationalSeries series_exp(const RationalSeries& a);
/// a / (1 - x): partial sums of the coefficients.
RationalSeries series_div_one_minus_x(const RationalSeries& a);

/// exp(x / (1 - x)), the EGF of |PIL(n)|.
RationalSeries pil_egf(int order);
/// (exp(x / (1 - x)) - x) / (1 - x), the EGF of the orbit totals.
RationalSeries total_orbit_egf(int order);
/// x^shift exp(x / (1 - x)).
RationalSeries shifted_pil_egf(int shift, int order);

/// n! [x^n] x^shift exp(x/(1-x)), the number of orbits for the stabilizer
/// of [e_{n-shift}] (shift = n gives the Borel count n!).
BigInt egf_si_coeff(int shift, int n);

/// CSV rows "n,[x^n],n![x^n]" for n = 0..order, with a header line.
std::string series_csv(const RationalSeries& s);

}  // namespace orbit_atlas
