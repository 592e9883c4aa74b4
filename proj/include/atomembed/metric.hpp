#ifndef ATOMEMBED_METRIC_HPP
#define ATOMEMBED_METRIC_HPP

#include "atomembed/atom_subset.hpp"
#include "atomembed/measure.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace atomembed {

/// Symmetric matrix of pairwise distances with zero diagonal and positive
/// off-diagonal entries. The triangle inequality is checked separately by
/// metric_axiom_violation since it costs O(n^3).
template <Scalar T>
class DistanceMatrix {
 public:
  /// Row-major n*n entries. Throws std::invalid_argument if the shape,
  /// symmetry, zero diagonal, or off-diagonal positivity fails.
  DistanceMatrix(std::size_t n, std::vector<T> entries);

  std::size_t size() const { return n_; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<T> entries_;
};

/// Describes the first violated metric axiom (including the triangle
/// inequality, with slack `tolerance` in float mode), or nullopt.
template <Scalar T>
std::optional<std::string> metric_axiom_violation(const DistanceMatrix<T>& d, double tolerance = 0.0);

/// Kolmogorov distance between atoms i and j: m(a_i) + m(a_j), or 0 when
/// i == j. Throws std::out_of_range.
template <Scalar T>
T atom_distance(const BasicMeasure<T>& m, std::size_t i, std::size_t j);

template <Scalar T>
DistanceMatrix<T> atom_metric(const BasicMeasure<T>& m);

/// m(a XOR b): total weight of the symmetric difference. Throws
/// std::out_of_range if either subset references an atom beyond the measure.
template <Scalar T>
T powerset_distance(const BasicMeasure<T>& m, AtomSubset a, AtomSubset b);

/// Distance matrix among arbitrary elements of the powerset algebra.
/// Throws std::invalid_argument on duplicate elements.
template <Scalar T>
DistanceMatrix<T> powerset_metric(const BasicMeasure<T>& m, std::span<const AtomSubset> elements);

}  // namespace atomembed

#endif  // ATOMEMBED_METRIC_HPP
