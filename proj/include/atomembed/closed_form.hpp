#ifndef ATOMEMBED_CLOSED_FORM_HPP
#define ATOMEMBED_CLOSED_FORM_HPP

#include "atomembed/matrix.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace atomembed {

// Closed forms for the Gram determinant of an atom simplex. All functions take
// the n+1 weights of the simplex's atoms, base first; none require the
// weights to sum to 1.

/// 2^{n-1} [E^2 - (n-1) Q] with E = sum_a prod_{b != a} x_b and
/// Q = sum_a prod_{b != a} x_b^2. Throws std::invalid_argument for fewer than
/// three weights or a non-positive weight.
///
/// Float mode evaluates E and Q through log-sums rescaled by the largest
/// leave-one-out product, so long simplices do not underflow before the
/// final scale is applied.
double det_closed_form(std::span<const double> xs);
Rational det_closed_form(std::span<const Rational> xs);

/// (sum z)^2 - (n-1) sum z^2 with n = z.size() - 1. This is -z^t A z for the
/// cone matrix A = (n-1) I - J.
double reciprocal_form(std::span<const double> z);
Rational reciprocal_form(std::span<const Rational> z);

/// reciprocal_form of (1/x_0, ..., 1/x_n). Same sign as det_closed_form.
double reduced_criterion(std::span<const double> xs);
Rational reduced_criterion(std::span<const Rational> xs);

/// M = A + v v^t with A_ij = -2 (1 - delta_ij) x_i x_j and v_i = x_0 + x_i,
/// together with det(A) and Adj(A) in closed form.
template <Scalar T>
struct RankOneDecomposition {
  Matrix<T> a;
  std::vector<T> v;
  T det_a;
  Matrix<T> adj_a;
};

RankOneDecomposition<double> rank_one_decomposition(std::span<const double> xs);
RankOneDecomposition<Rational> rank_one_decomposition(std::span<const Rational> xs);

/// det(A) + v^t Adj(A) v from the decomposition above.
double det_rank_one_route(std::span<const double> xs);
Rational det_rank_one_route(std::span<const Rational> xs);

enum class Sign { negative, zero, positive, indeterminate };

std::string_view to_string(Sign s);

/// Default float-mode margin relative to (sum 1/x)^2.
inline constexpr double default_sign_margin = 1e-9;

/// Sign of the criterion. In float mode the value is computed on
/// z_a = min(x) / x_a and reported indeterminate when
/// |value| <= margin * (sum z)^2. Exact mode never returns indeterminate.
Sign criterion_sign(std::span<const double> xs, double margin = default_sign_margin);
Sign criterion_sign(std::span<const Rational> xs, double margin = default_sign_margin);

}  // namespace atomembed

#endif  // ATOMEMBED_CLOSED_FORM_HPP
