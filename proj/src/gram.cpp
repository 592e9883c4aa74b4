#include "atomembed/gram.hpp"

#include <stdexcept>

namespace atomembed {

template <Scalar T>
T triple_product(const DistanceMatrix<T>& d, std::size_t i, std::size_t j, std::size_t base) {
  if (i >= d.size() || j >= d.size() || base >= d.size()) throw std::out_of_range("triple product index out of range");
  const T& di = d(base, i);
  const T& dj = d(base, j);
  const T& dij = d(i, j);
  T value = di * di + dj * dj - dij * dij;
  value /= 2;
  return value;
}

template <Scalar T>
GramMatrix<T> gram_matrix(const DistanceMatrix<T>& d, std::span<const std::size_t> simplex) {
  if (simplex.size() < 2) throw std::invalid_argument("a simplex needs at least two points");
  for (std::size_t a = 0; a < simplex.size(); ++a) {
    if (simplex[a] >= d.size()) throw std::invalid_argument("simplex point out of range");
    for (std::size_t b = a + 1; b < simplex.size(); ++b)
      if (simplex[a] == simplex[b]) throw std::invalid_argument("duplicate simplex point " + std::to_string(simplex[a]));
  }
  const std::size_t n = simplex.size() - 1;
  GramMatrix<T> g{std::vector<std::size_t>(simplex.begin(), simplex.end()), Matrix<T>(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      T v = triple_product(d, simplex[i + 1], simplex[j + 1], simplex[0]);
      g.entries(i, j) = v;
      g.entries(j, i) = v;
    }
  return g;
}

namespace {

template <Scalar T>
Matrix<T> atom_gram_entries_impl(std::span<const T> xs) {
  if (xs.size() < 2) throw std::invalid_argument("need a base and at least one more weight");
  const std::size_t n = xs.size() - 1;
  const T& x0 = xs[0];
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const T& xi = xs[i + 1];
      const T& xj = xs[j + 1];
      if (i == j) {
        T s = x0 + xi;
        m(i, j) = s * s;
      } else {
        m(i, j) = x0 * x0 + x0 * xi + x0 * xj - xi * xj;
      }
    }
  return m;
}

}  // namespace

Matrix<double> atom_gram_entries(std::span<const double> xs) { return atom_gram_entries_impl(xs); }
Matrix<Rational> atom_gram_entries(std::span<const Rational> xs) { return atom_gram_entries_impl(xs); }

#define ATOMEMBED_INSTANTIATE(T)                                                                        \
  template T triple_product(const DistanceMatrix<T>&, std::size_t, std::size_t, std::size_t);           \
  template GramMatrix<T> gram_matrix(const DistanceMatrix<T>&, std::span<const std::size_t>);

ATOMEMBED_INSTANTIATE(double)
ATOMEMBED_INSTANTIATE(Rational)

#undef ATOMEMBED_INSTANTIATE

}  // namespace atomembed
