#include "orbit_atlas/series.hpp"

#include <sstream>
#include <stdexcept>

namespace orbit_atlas {

namespace {

void require_same_order(const RationalSeries& a, const RationalSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series truncation orders differ: " +
                                std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.assign(order + 1, Rational(0));
}

RationalSeries::RationalSeries(int order, std::vector<Rational> coeffs) : RationalSeries(order) {
  if (static_cast<int>(coeffs.size()) > order + 1) {
    throw std::invalid_argument("more coefficients than the truncation order allows");
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = coeffs[k];
}

RationalSeries RationalSeries::constant(int order, const Rational& c) {
  RationalSeries s(order);
  s[0] = c;
  return s;
}

RationalSeries RationalSeries::geometric(int order) {
  RationalSeries s(order);
  for (auto& c : s.coeffs_) c = 1;
  return s;
}

RationalSeries RationalSeries::x_over_one_minus_x(int order) {
  RationalSeries s = geometric(order);
  s[0] = 0;
  return s;
}

BigInt RationalSeries::egf_coefficient(int n) const {
  const Rational scaled = coeffs_.at(n) * Rational(factorial(n));
  if (denominator(scaled) != 1) {
    throw std::domain_error("n! [x^n] is not an integer at n = " + std::to_string(n));
  }
  return numerator(scaled);
}

RationalSeries series_add(const RationalSeries& a, const RationalSeries& b) {
  require_same_order(a, b);
  RationalSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

RationalSeries series_sub(const RationalSeries& a, const RationalSeries& b) {
  require_same_order(a, b);
  RationalSeries r(a.order());
  for (int k = 0; k <= a.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

RationalSeries series_mul(const RationalSeries& a, const RationalSeries& b) {
  require_same_order(a, b);
  const int order = a.order();
  RationalSeries r(order);
  for (int p = 0; p <= order; ++p) {
    if (a[p] == 0) continue;
    for (int q = 0; p + q <= order; ++q) r[p + q] += a[p] * b[q];
  }
  return r;
}

RationalSeries series_scale_xpow(const RationalSeries& a, int shift) {
  if (shift < 0) throw std::invalid_argument("negative shift");
  RationalSeries r(a.order());
  for (int k = 0; k + shift <= a.order(); ++k) r[k + shift] = a[k];
  return r;
}

RationalSeries series_derivative(const RationalSeries& a) {
  RationalSeries r(a.order());
  for (int k = 1; k <= a.order(); ++k) r[k - 1] = a[k] * k;
  return r;
}

RationalSeries series_exp(const RationalSeries& a) {
  if (a[0] != 0) throw std::invalid_argument("exp needs a zero constant term");
  const int order = a.order();
  RationalSeries f(order);
  f[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * a[k] * f[n - k];
    f[n] = acc / n;
  }
  return f;
}

RationalSeries series_div_one_minus_x(const RationalSeries& a) {
  RationalSeries r(a.order());
  Rational running = 0;
  for (int k = 0; k <= a.order(); ++k) {
    running += a[k];
    r[k] = running;
  }
  return r;
}

RationalSeries pil_egf(int order) {
  return series_exp(RationalSeries::x_over_one_minus_x(order));
}

RationalSeries total_orbit_egf(int order) {
  RationalSeries x(order);
  if (order >= 1) x[1] = 1;
  return series_div_one_minus_x(series_sub(pil_egf(order), x));
}

RationalSeries shifted_pil_egf(int shift, int order) {
  return series_scale_xpow(pil_egf(order), shift);
}

BigInt egf_si_coeff(int shift, int n) {
  if (shift < 0 || n < shift) throw std::out_of_range("need 0 <= shift <= n");
  return shifted_pil_egf(shift, n).egf_coefficient(n);
}

std::string series_csv(const RationalSeries& s) {
  std::ostringstream out;
  out << "n,coefficient,egf_value\n";
  for (int n = 0; n <= s.order(); ++n) {
    const Rational& c = s[n];
    out << n << ',' << numerator(c);
    if (denominator(c) != 1) out << '/' << denominator(c);
    out << ',';
    const Rational scaled = c * Rational(factorial(n));
    out << numerator(scaled);
    if (denominator(scaled) != 1) out << '/' << denominator(scaled);
    out << '\n';
  }
  return out.str();
}

}  // namespace orbit_atlas
