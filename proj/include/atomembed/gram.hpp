#ifndef ATOMEMBED_GRAM_HPP
#define ATOMEMBED_GRAM_HPP

#include "atomembed/matrix.hpp"
#include "atomembed/metric.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace atomembed {

/// <x_i, x_j, x_base> = (d(base,i)^2 + d(base,j)^2 - d(i,j)^2) / 2.
/// Either index may equal the base, which yields 0.
template <Scalar T>
T triple_product(const DistanceMatrix<T>& d, std::size_t i, std::size_t j, std::size_t base);

/// The n x n matrix of triple products for an (n+1)-point simplex, relative
/// to its first point.
template <Scalar T>
struct GramMatrix {
  std::vector<std::size_t> simplex;  ///< simplex[0] is the base point
  Matrix<T> entries;

  std::size_t base() const { return simplex.front(); }
  std::size_t order() const { return entries.rows(); }
};

/// Throws std::invalid_argument if the simplex has fewer than two points,
/// repeats a point, or indexes past the matrix.
template <Scalar T>
GramMatrix<T> gram_matrix(const DistanceMatrix<T>& d, std::span<const std::size_t> simplex);

/// Entries directly from atom weights, with xs[0] as the base:
/// (x0 + xi)^2 on the diagonal and x0^2 + x0 xi + x0 xj - xi xj off it.
Matrix<double> atom_gram_entries(std::span<const double> xs);
Matrix<Rational> atom_gram_entries(std::span<const Rational> xs);

}  // namespace atomembed

#endif  // ATOMEMBED_GRAM_HPP
