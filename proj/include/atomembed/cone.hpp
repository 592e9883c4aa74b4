#ifndef ATOMEMBED_CONE_HPP
#define ATOMEMBED_CONE_HPP

#include "atomembed/matrix.hpp"

#include <cstddef>
#include <span>

namespace atomembed {

// Cone picture of the flatness criterion. Under the reciprocal map
// z = (1/x_0, ..., 1/x_n), the criterion reads z^t A z <= 0 with
// A = (n-1) I - J of order n+1. A has eigenvalue n-1 on the complement of the
// all-ones axis and -2 on the axis, so the admissible set is a solid circular
// cone around (1, ..., 1).

/// A = (n-1) I - J of order n+1 (diagonal n-2, off-diagonal -1).
template <Scalar T>
Matrix<T> cone_form_matrix(std::size_t n);

/// Orthonormal eigenbasis of cone_form_matrix(n) as columns: Helmert vectors
/// c_i (1, ..., 1, -(i+1), 0, ...) for i = 0..n-1, then the unit axis.
Matrix<double> cone_eigenbasis(std::size_t n);

/// Cosine of the half-angle implied by the spectrum: cos^2 = (n-1)/(n+1).
double cone_half_angle_cos(std::size_t n);

struct ConeCoordinates {
  double axial;   ///< component along (1, ..., 1)/sqrt(n+1)
  double radial;  ///< norm of the orthogonal component
  double angle;   ///< angle to the axis, radians
};

/// Coordinates of z in the eigenbasis of the cone matrix.
ConeCoordinates cone_coordinates(std::span<const double> z);

/// True iff z lies within the given half-angle of the all-ones axis.
bool inside_cone(std::span<const double> z, double cos_half_angle);

/// Membership of the reciprocal image of xs (length n+1, n >= 3) in the
/// solid cone. Agrees with reduced_criterion(xs) >= 0.
/// Throws std::invalid_argument for n < 3 or non-positive weights.
bool cone_membership(std::span<const double> xs);
bool cone_membership(std::span<const Rational> xs);

}  // namespace atomembed

#endif  // ATOMEMBED_CONE_HPP
