#include "atomembed/measure.hpp"

#include "atomembed/atom_subset.hpp"

#include <cmath>

namespace atomembed {

namespace {

bool sums_to_one(const std::vector<double>& w) {
  double s = 0;
  for (double x : w) s += x;
  return std::abs(s - 1.0) <= 1e-12;
}

bool sums_to_one(const std::vector<Rational>& w) {
  Rational s = 0;
  for (const auto& x : w) s += x;
  return s == 1;
}

}  // namespace

template <Scalar T>
T BasicMeasure<T>::total() const {
  T s(0);
  for (const auto& x : weights_) s += x;
  return s;
}

template <Scalar T>
BasicMeasure<T> BasicMeasure<T>::normalize() const {
  if (normalized_) return *this;
  BasicMeasure out = *this;
  const T s = total();
  for (auto& x : out.weights_) x /= s;
  if constexpr (is_exact_v<T>) {
    out.normalized_ = true;
  } else {
    out.normalized_ = sums_to_one(out.weights_);
  }
  return out;
}

template <Scalar T>
BasicMeasure<T> validate_measure(std::vector<T> raw, bool normalize) {
  if (raw.empty()) throw MeasureError("measure has no weights");
  if (raw.size() < 2) throw MeasureError("measure needs at least two atoms, got 1");
  if (raw.size() > AtomSubset::max_atoms) {
    throw MeasureError("measure has " + std::to_string(raw.size()) + " atoms; at most 64 are supported");
  }
  BasicMeasure<T> m;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if constexpr (!is_exact_v<T>) {
      if (!std::isfinite(raw[i])) {
        throw MeasureError("weight " + std::to_string(i) + " is not finite");
      }
    }
    if (!(raw[i] > 0)) {
      throw MeasureError("non-positive weight at atom " + std::to_string(i) + " (strict positivity required)");
    }
    if constexpr (is_exact_v<T>) raw[i].canonicalize();
  }
  m.weights_ = std::move(raw);
  m.normalized_ = sums_to_one(m.weights_);
  if (normalize) m = m.normalize();
  if constexpr (!is_exact_v<T>) {
    for (std::size_t i = 0; i < m.weights_.size(); ++i) {
      if (m.weights_[i] < degenerate_weight_threshold) {
        m.warnings_.push_back("atom " + std::to_string(i) + " has weight " + format_double(m.weights_[i]) +
                              " below 1e-12; float-mode verdicts may be unreliable");
      }
    }
  }
  return m;
}

template class BasicMeasure<double>;
template class BasicMeasure<Rational>;
template FloatMeasure validate_measure(std::vector<double>, bool);
template ExactMeasure validate_measure(std::vector<Rational>, bool);

std::vector<double> weights_as_double(const Measure& m) {
  return std::visit(
      [](const auto& mm) {
        std::vector<double> out;
        for (const auto& w : mm.weights()) out.push_back(to_double(w));
        return out;
      },
      m);
}

ExactMeasure to_exact(const FloatMeasure& m) {
  std::vector<Rational> w;
  w.reserve(m.atom_count());
  for (double x : m.weights()) w.push_back(exact_from_double(x));
  return validate_measure(std::move(w));
}

}  // namespace atomembed
