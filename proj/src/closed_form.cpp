#include "atomembed/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace atomembed {

namespace {

template <Scalar T>
void require_simplex_weights(std::span<const T> xs) {
  if (xs.size() < 3) throw std::invalid_argument("closed form needs at least three weights (n >= 2)");
  for (const auto& x : xs)
    if (!(x > 0)) throw std::invalid_argument("closed form needs strictly positive weights");
}

Rational power_of_two(std::size_t e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return Rational(p);
}

}  // namespace

Rational det_closed_form(std::span<const Rational> xs) {
  require_simplex_weights(xs);
  const std::size_t n = xs.size() - 1;
  Rational product = 1;
  Rational inv_sum = 0;
  Rational inv_sq_sum = 0;
  for (const auto& x : xs) {
    product *= x;
    Rational inv = 1 / x;
    inv_sum += inv;
    inv_sq_sum += inv * inv;
  }
  const Rational e = product * inv_sum;
  const Rational q = product * product * inv_sq_sum;
  return power_of_two(n - 1) * (e * e - Rational(static_cast<long>(n - 1)) * q);
}

double det_closed_form(std::span<const double> xs) {
  require_simplex_weights(xs);
  const std::size_t n = xs.size() - 1;
  double log_total = 0;
  for (double x : xs) log_total += std::log(x);
  // Leave-one-out log products; the largest belongs to the smallest weight.
  double log_max = -INFINITY;
  for (double x : xs) log_max = std::max(log_max, log_total - std::log(x));
  double e = 0, q = 0;
  for (double x : xs) {
    const double r = std::exp(log_total - std::log(x) - log_max);
    e += r;
    q += r * r;
  }
  const double bracket = e * e - static_cast<double>(n - 1) * q;
  return bracket * std::exp(2 * log_max + static_cast<double>(n - 1) * std::log(2.0));
}

namespace {

template <Scalar T>
T reciprocal_form_impl(std::span<const T> z) {
  if (z.size() < 2) throw std::invalid_argument("reciprocal form needs at least two coordinates");
  const long n = static_cast<long>(z.size()) - 1;
  T s(0), sq(0);
  for (const auto& v : z) {
    s += v;
    sq += v * v;
  }
  return s * s - T(n - 1) * sq;
}

template <Scalar T>
T reduced_criterion_impl(std::span<const T> xs) {
  require_simplex_weights(xs);
  std::vector<T> z;
  z.reserve(xs.size());
  for (const auto& x : xs) z.push_back(T(1) / x);
  return reciprocal_form_impl<T>(z);
}

template <Scalar T>
RankOneDecomposition<T> rank_one_decomposition_impl(std::span<const T> xs) {
  require_simplex_weights(xs);
  const std::size_t n = xs.size() - 1;
  const T& x0 = xs[0];
  RankOneDecomposition<T> out{Matrix<T>(n, n), std::vector<T>(n), T(0), Matrix<T>(n, n)};
  T sq_product(1);
  for (std::size_t i = 1; i <= n; ++i) sq_product *= xs[i] * xs[i];
  for (std::size_t i = 0; i < n; ++i) {
    out.v[i] = x0 + xs[i + 1];
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out.a(i, j) = T(-2) * xs[i + 1] * xs[j + 1];
    }
  }
  // det(A) = -2^n (n-1) prod x_i^2
  T two_pow_n(1);
  for (std::size_t k = 0; k < n; ++k) two_pow_n *= 2;
  out.det_a = -two_pow_n * T(static_cast<long>(n - 1)) * sq_product;
  // Adj(A)_ij = 2^{n-1} prod x^2 (1/(x_i x_j) - delta_ij (n-1)/x_i^2)
  const T scale = two_pow_n / 2 * sq_product;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const T& xi = xs[i + 1];
      const T& xj = xs[j + 1];
      T e = T(1) / (xi * xj);
      if (i == j) e -= T(static_cast<long>(n - 1)) / (xi * xi);
      out.adj_a(i, j) = scale * e;
    }
  return out;
}

template <Scalar T>
T det_rank_one_route_impl(std::span<const T> xs) {
  const auto parts = rank_one_decomposition_impl(xs);
  return parts.det_a + parts.adj_a.bilinear(parts.v, parts.v);
}

}  // namespace

double reciprocal_form(std::span<const double> z) { return reciprocal_form_impl(z); }
Rational reciprocal_form(std::span<const Rational> z) { return reciprocal_form_impl(z); }
double reduced_criterion(std::span<const double> xs) { return reduced_criterion_impl(xs); }
Rational reduced_criterion(std::span<const Rational> xs) { return reduced_criterion_impl(xs); }
RankOneDecomposition<double> rank_one_decomposition(std::span<const double> xs) {
  return rank_one_decomposition_impl(xs);
}
RankOneDecomposition<Rational> rank_one_decomposition(std::span<const Rational> xs) {
  return rank_one_decomposition_impl(xs);
}
double det_rank_one_route(std::span<const double> xs) { return det_rank_one_route_impl(xs); }
Rational det_rank_one_route(std::span<const Rational> xs) { return det_rank_one_route_impl(xs); }

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::negative: return "negative";
    case Sign::zero: return "zero";
    case Sign::positive: return "positive";
    case Sign::indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

Sign criterion_sign(std::span<const double> xs, double margin) {
  require_simplex_weights(xs);
  const double smallest = *std::min_element(xs.begin(), xs.end());
  double s = 0, sq = 0;
  for (double x : xs) {
    const double z = smallest / x;
    s += z;
    sq += z * z;
  }
  const double value = s * s - static_cast<double>(xs.size() - 2) * sq;
  if (std::abs(value) <= margin * s * s) return Sign::indeterminate;
  return value > 0 ? Sign::positive : Sign::negative;
}

Sign criterion_sign(std::span<const Rational> xs, double) {
  const int s = sgn(reduced_criterion(xs));
  return s > 0 ? Sign::positive : (s < 0 ? Sign::negative : Sign::zero);
}


}  // namespace atomembed
