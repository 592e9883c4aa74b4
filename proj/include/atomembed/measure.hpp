#ifndef ATOMEMBED_MEASURE_HPP
#define ATOMEMBED_MEASURE_HPP

#include "atomembed/scalar.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace atomembed {

class MeasureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Float-mode weights below this trigger a degeneracy warning.
inline constexpr double degenerate_weight_threshold = 1e-12;

template <Scalar T>
class BasicMeasure;

/// Checks strict positivity and length, optionally divides by the total.
/// Throws MeasureError on empty input, fewer than two atoms, a non-positive
/// or non-finite weight, or more than 64 atoms.
template <Scalar T>
BasicMeasure<T> validate_measure(std::vector<T> raw, bool normalize = false);

/// A strictly positive weight vector on k+1 >= 2 atoms. Immutable once
/// validated; construct through validate_measure.
template <Scalar T>
class BasicMeasure {
 public:
  std::span<const T> weights() const { return weights_; }
  std::size_t atom_count() const { return weights_.size(); }
  const T& operator[](std::size_t i) const { return weights_[i]; }

  /// True iff the weights sum to 1 (exactly in rational mode, to 1e-12 in
  /// float mode).
  bool normalized() const { return normalized_; }
  T total() const;

  /// Copy rescaled onto the probability simplex.
  BasicMeasure normalize() const;

  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  template <Scalar U>
  friend BasicMeasure<U> validate_measure(std::vector<U> raw, bool normalize);

  BasicMeasure() = default;

  std::vector<T> weights_;
  bool normalized_ = false;
  std::vector<std::string> warnings_;
};

using FloatMeasure = BasicMeasure<double>;
using ExactMeasure = BasicMeasure<Rational>;
using Measure = std::variant<FloatMeasure, ExactMeasure>;

inline std::size_t atom_count(const Measure& m) {
  return std::visit([](const auto& mm) { return mm.atom_count(); }, m);
}

inline bool is_exact(const Measure& m) { return std::holds_alternative<ExactMeasure>(m); }

/// Weights of either mode as doubles.
std::vector<double> weights_as_double(const Measure& m);

/// Converts a float measure to exact mode using the exact binary values.
ExactMeasure to_exact(const FloatMeasure& m);

}  // namespace atomembed

#endif  // ATOMEMBED_MEASURE_HPP
