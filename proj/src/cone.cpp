#include "atomembed/cone.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace atomembed {

template <Scalar T>
Matrix<T> cone_form_matrix(std::size_t n) {
  Matrix<T> a(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) a(i, j) = i == j ? T(static_cast<long>(n) - 2) : T(-1);
  return a;
}

template Matrix<double> cone_form_matrix(std::size_t);
template Matrix<Rational> cone_form_matrix(std::size_t);

Matrix<double> cone_eigenbasis(std::size_t n) {
  Matrix<double> p(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = 1.0 / std::sqrt(static_cast<double>((i + 1) * (i + 2)));
    for (std::size_t r = 0; r <= i; ++r) p(r, i) = c;
    p(i + 1, i) = -static_cast<double>(i + 1) * c;
  }
  const double axis = 1.0 / std::sqrt(static_cast<double>(n + 1));
  for (std::size_t r = 0; r <= n; ++r) p(r, n) = axis;
  return p;
}

double cone_half_angle_cos(std::size_t n) {
  return std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n + 1));
}

ConeCoordinates cone_coordinates(std::span<const double> z) {
  if (z.size() < 2) throw std::invalid_argument("cone coordinates need at least two components");
  const std::size_t n = z.size() - 1;
  // y_i = <v_i, z> for the Helmert vectors, accumulated with a running
  // prefix sum so the whole transform is O(n).
  double prefix = 0;
  double radial_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    prefix += z[i];
    const double c = 1.0 / std::sqrt(static_cast<double>((i + 1) * (i + 2)));
    const double y = c * (prefix - static_cast<double>(i + 1) * z[i + 1]);
    radial_sq += y * y;
  }
  prefix += z[n];
  const double axial = prefix / std::sqrt(static_cast<double>(n + 1));
  const double radial = std::sqrt(radial_sq);
  return {axial, radial, std::atan2(radial, axial)};
}

bool inside_cone(std::span<const double> z, double cos_half_angle) {
  const auto c = cone_coordinates(z);
  const double norm = std::hypot(c.axial, c.radial);
  if (norm == 0) return true;
  return c.axial >= cos_half_angle * norm;
}

bool cone_membership(std::span<const double> xs) {
  if (xs.size() < 4) throw std::invalid_argument("cone membership needs n >= 3 (at least four weights)");
  std::vector<double> z;
  z.reserve(xs.size());
  for (double x : xs) {
    if (!(x > 0)) throw std::invalid_argument("cone membership needs strictly positive weights");
    z.push_back(1.0 / x);
  }
  return inside_cone(z, cone_half_angle_cos(xs.size() - 1));
}

bool cone_membership(std::span<const Rational> xs) {
  std::vector<double> d;
  d.reserve(xs.size());
  for (const auto& x : xs) {
    if (!(x > 0)) throw std::invalid_argument("cone membership needs strictly positive weights");
    d.push_back(x.get_d());
  }
  return cone_membership(d);
}

}  // namespace atomembed
