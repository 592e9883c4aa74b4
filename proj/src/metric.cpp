#include "atomembed/metric.hpp"

#include <stdexcept>

namespace atomembed {

template <Scalar T>
DistanceMatrix<T>::DistanceMatrix(std::size_t n, std::vector<T> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw std::invalid_argument("distance matrix entry count does not match size");
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0) throw std::invalid_argument("distance matrix has nonzero diagonal");
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw std::invalid_argument("distance matrix is not symmetric");
      if (!((*this)(i, j) > 0)) throw std::invalid_argument("distinct points at non-positive distance");
    }
  }
}

template <Scalar T>
std::optional<std::string> metric_axiom_violation(const DistanceMatrix<T>& d, double tolerance) {
  const std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0) return "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0";
    for (std::size_t j = 0; j < n; ++j) {
      if (d(i, j) != d(j, i)) return "asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (i != j && !(d(i, j) > 0)) return "non-positive distance at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) {
        T slack = d(i, j) + d(j, l) - d(i, l);
        bool ok;
        if constexpr (is_exact_v<T>) {
          ok = slack >= 0;
        } else {
          ok = slack >= -tolerance;
        }
        if (!ok) {
          return "triangle inequality fails for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(l) + ")";
        }
      }
  return std::nullopt;
}

template <Scalar T>
T atom_distance(const BasicMeasure<T>& m, std::size_t i, std::size_t j) {
  if (i >= m.atom_count() || j >= m.atom_count()) {
    throw std::out_of_range("atom index out of range (measure has " + std::to_string(m.atom_count()) + " atoms)");
  }
  if (i == j) return T(0);
  return m[i] + m[j];
}

template <Scalar T>
DistanceMatrix<T> atom_metric(const BasicMeasure<T>& m) {
  const std::size_t n = m.atom_count();
  std::vector<T> entries(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = atom_distance(m, i, j);
  return DistanceMatrix<T>(n, std::move(entries));
}

template <Scalar T>
T powerset_distance(const BasicMeasure<T>& m, AtomSubset a, AtomSubset b) {
  if (a.extent() > m.atom_count() || b.extent() > m.atom_count()) {
    throw std::out_of_range("subset references an atom beyond the measure");
  }
  T total(0);
  for (std::size_t i : a.symmetric_difference(b).indices()) total += m[i];
  return total;
}

template <Scalar T>
DistanceMatrix<T> powerset_metric(const BasicMeasure<T>& m, std::span<const AtomSubset> elements) {
  const std::size_t n = elements.size();
  std::vector<T> entries(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && elements[i] == elements[j]) {
        throw std::invalid_argument("duplicate algebra element " + elements[i].to_string());
      }
      entries[i * n + j] = powerset_distance(m, elements[i], elements[j]);
    }
  return DistanceMatrix<T>(n, std::move(entries));
}

#define ATOMEMBED_INSTANTIATE(T)                                                                   \
  template class DistanceMatrix<T>;                                                                \
  template std::optional<std::string> metric_axiom_violation(const DistanceMatrix<T>&, double);    \
  template T atom_distance(const BasicMeasure<T>&, std::size_t, std::size_t);                      \
  template DistanceMatrix<T> atom_metric(const BasicMeasure<T>&);                                  \
  template T powerset_distance(const BasicMeasure<T>&, AtomSubset, AtomSubset);                    \
  template DistanceMatrix<T> powerset_metric(const BasicMeasure<T>&, std::span<const AtomSubset>);

ATOMEMBED_INSTANTIATE(double)
ATOMEMBED_INSTANTIATE(Rational)

#undef ATOMEMBED_INSTANTIATE

}  // namespace atomembed
