#ifndef ATOMEMBED_EMBEDDING_HPP
#define ATOMEMBED_EMBEDDING_HPP

#include "atomembed/flatness.hpp"
#include "atomembed/metric.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace atomembed {

class NotFlatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some eigenvalue lies in (rank_tol, 10 * rank_tol): the rank cannot be
/// read off the spectrum reliably.
class NumericalRankAmbiguity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An eigenvalue is more negative than the clipping band allows, which
/// contradicts a passed flatness check.
class InconsistentSpectrum : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmbedOptions {
  FlatnessOptions flatness{};
  /// Eigenvalues in [-clip * ||M||, 0] are treated as zero.
  double clip = 1e-10;
  /// Rank tolerance relative to the largest eigenvalue.
  double rank_tolerance = 1e-9;
  /// Required isometry residual for the result.
  double isometry_tolerance = 1e-8;
};

struct EmbeddingResult {
  std::size_t dimension = 0;      ///< combinatorial dimension; column count
  std::size_t spectral_rank = 0;  ///< eigenvalues above the rank tolerance
  std::size_t base = 0;
  Eigen::MatrixXd coordinates;    ///< one row per atom
  std::vector<double> eigenvalues;  ///< Gram spectrum, descending
  double max_residual = 0;
};

/// Realizes the atoms in R^N by factoring the Gram matrix at base atom 0:
/// M = V diag(l) V^t, and point i >= 1 maps to row i-1 of V sqrt(l). The base
/// maps to the origin. Throws NotFlatError, NumericalRankAmbiguity, or
/// InconsistentSpectrum; also NotFlatError when the flatness check is
/// inconclusive.
template <Scalar T>
EmbeddingResult embed(const BasicMeasure<T>& m, const EmbedOptions& options = {});

struct IsometryCheck {
  double max_residual = 0;
  bool pass = false;
};

/// max over pairs |‖p_i - p_j‖ - d(i,j)|. Throws std::invalid_argument when
/// the row count differs from the matrix size.
IsometryCheck verify_isometry(const Eigen::MatrixXd& coordinates, const DistanceMatrix<double>& d, double tolerance);

}  // namespace atomembed

#endif  // ATOMEMBED_EMBEDDING_HPP
