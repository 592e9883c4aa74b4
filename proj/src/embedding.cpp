#include "atomembed/embedding.hpp"

#include "atomembed/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace atomembed {

namespace {

DistanceMatrix<double> metric_as_double(const DistanceMatrix<double>& d) { return d; }

DistanceMatrix<double> metric_as_double(const DistanceMatrix<Rational>& d) {
  std::vector<double> entries(d.size() * d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) entries[i * d.size() + j] = d(i, j).get_d();
  return DistanceMatrix<double>(d.size(), std::move(entries));
}

}  // namespace

template <Scalar T>
EmbeddingResult embed(const BasicMeasure<T>& m, const EmbedOptions& options) {
  const auto report = is_flat(m, options.flatness);
  if (report.witness) {
    throw NotFlatError("atom space is not flat; failing simplex " + report.witness->to_string());
  }
  if (!report.conclusive()) {
    throw NotFlatError("flatness is inconclusive in float mode; " + std::to_string(report.indeterminate.size()) +
                       " simplices lie within the sign margin");
  }

  const std::size_t atoms = m.atom_count();
  const auto distances = atom_metric(m);
  std::vector<std::size_t> simplex(atoms);
  std::iota(simplex.begin(), simplex.end(), std::size_t{0});
  const auto gram = gram_matrix(distances, simplex);

  const std::size_t k = atoms - 1;
  Eigen::MatrixXd g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(gram.entries(i, j));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g);
  if (solver.info() != Eigen::Success) throw InconsistentSpectrum("eigen decomposition of the Gram matrix failed");
  const Eigen::VectorXd& lambda = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  const double largest = lambda(lambda.size() - 1);
  const double norm = std::max(std::abs(lambda(0)), std::abs(largest));
  if (lambda(0) < -options.clip * norm) {
    throw InconsistentSpectrum("Gram matrix has eigenvalue " + format_double(lambda(0)) +
                               " below the clipping band although the space is flat");
  }
  const double rank_tol = options.rank_tolerance * largest;

  EmbeddingResult result;
  result.base = 0;
  result.dimension = dimension(report);
  for (Eigen::Index i = lambda.size() - 1; i >= 0; --i) {
    const double l = lambda(i);
    result.eigenvalues.push_back(l);
    if (l > rank_tol && l < 10 * rank_tol) {
      throw NumericalRankAmbiguity("eigenvalue " + format_double(l) + " lies inside the rank ambiguity band (" +
                                   format_double(rank_tol) + ", " + format_double(10 * rank_tol) + ")");
    }
    if (l > rank_tol) ++result.spectral_rank;
  }

  const std::size_t cols = std::min(result.dimension, k);
  result.coordinates = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(atoms), static_cast<Eigen::Index>(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    const Eigen::Index e = lambda.size() - 1 - static_cast<Eigen::Index>(c);
    const double scale = std::sqrt(std::max(lambda(e), 0.0));
    for (std::size_t i = 0; i < k; ++i) {
      result.coordinates(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(c)) =
          vectors(static_cast<Eigen::Index>(i), e) * scale;
    }
  }

  const auto check = verify_isometry(result.coordinates, metric_as_double(distances), options.isometry_tolerance);
  result.max_residual = check.max_residual;
  if (!check.pass) {
    throw InconsistentSpectrum("embedding residual " + format_double(check.max_residual) + " exceeds tolerance " +
                               format_double(options.isometry_tolerance));
  }
  return result;
}

template EmbeddingResult embed(const FloatMeasure&, const EmbedOptions&);
template EmbeddingResult embed(const ExactMeasure&, const EmbedOptions&);

IsometryCheck verify_isometry(const Eigen::MatrixXd& coordinates, const DistanceMatrix<double>& d, double tolerance) {
  if (static_cast<std::size_t>(coordinates.rows()) != d.size()) {
    throw std::invalid_argument("coordinate rows do not match the distance matrix size");
  }
  double worst = 0;
  for (Eigen::Index i = 0; i < coordinates.rows(); ++i)
    for (Eigen::Index j = i + 1; j < coordinates.rows(); ++j) {
      const double euclid = (coordinates.row(i) - coordinates.row(j)).norm();
      worst = std::max(worst, std::abs(euclid - d(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
    }
  return {worst, worst <= tolerance};
}

}  // namespace atomembed
