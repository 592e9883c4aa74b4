#include "atomembed/determinant.hpp"

#include <stdexcept>
#include <utility>

namespace atomembed {

template <Scalar T>
T det_numeric(const Matrix<T>& input) {
  if (!input.square()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<T> m = input;
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    T best = abs_value(m(k, k));
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        T a = abs_value(m(i, j));
        if (a > best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) return T(0);
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(k, j));
      det = -det;
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, pc), m(i, k));
      det = -det;
    }
    const T pivot = m(k, k);
    det *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const T factor = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
      m(i, k) = 0;
    }
  }
  return det;
}

template <Scalar T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T cofactor = det_numeric(minor_matrix(m, i, j));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      adj(j, i) = cofactor;
    }
  return adj;
}

template <Scalar T>
T matrix_det_lemma(const Matrix<T>& a, std::type_identity_t<std::span<const T>> u,
                   std::type_identity_t<std::span<const T>> v) {
  if (!a.square() || u.size() != a.rows() || v.size() != a.rows()) {
    throw std::invalid_argument("matrix determinant lemma: size mismatch");
  }
  return det_numeric(a) + adjugate(a).bilinear(v, u);
}

#define ATOMEMBED_INSTANTIATE(T)                  \
  template T det_numeric(const Matrix<T>&);       \
  template Matrix<T> adjugate(const Matrix<T>&);  \
  template T matrix_det_lemma<T>(const Matrix<T>&, std::span<const T>, std::span<const T>);

ATOMEMBED_INSTANTIATE(double)
ATOMEMBED_INSTANTIATE(Rational)

#undef ATOMEMBED_INSTANTIATE

}  // namespace atomembed
