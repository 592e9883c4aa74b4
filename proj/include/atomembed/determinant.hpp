#ifndef ATOMEMBED_DETERMINANT_HPP
#define ATOMEMBED_DETERMINANT_HPP

#include "atomembed/matrix.hpp"

#include <span>
#include <type_traits>

namespace atomembed {

/// Determinant by Gaussian elimination with full pivoting. Exact in rational
/// mode. The empty matrix has determinant 1.
template <Scalar T>
T det_numeric(const Matrix<T>& m);

/// Transpose of the cofactor matrix, computed entrywise from minors, so it is
/// defined for singular input as well.
template <Scalar T>
Matrix<T> adjugate(const Matrix<T>& m);

/// det(A) + v^t Adj(A) u, which equals det(A + u v^t).
/// Throws std::invalid_argument on a size mismatch.
template <Scalar T>
T matrix_det_lemma(const Matrix<T>& a, std::type_identity_t<std::span<const T>> u,
                   std::type_identity_t<std::span<const T>> v);

}  // namespace atomembed

#endif  // ATOMEMBED_DETERMINANT_HPP
