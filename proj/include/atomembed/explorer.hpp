#ifndef ATOMEMBED_EXPLORER_HPP
#define ATOMEMBED_EXPLORER_HPP

#include "atomembed/classify.hpp"
#include "atomembed/family.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace atomembed {

struct SweepRow {
  Rational parameter;
  Verdict verdict = Verdict::indeterminate;
  std::size_t dimension = 0;
  std::optional<double> worst_value;         ///< min criterion over checked simplices
  std::optional<AtomSubset> worst_subset;    ///< where the minimum is attained
  std::optional<AtomSubset> witness;         ///< first failing simplex
  std::string reason;
};

/// Classifies every grid point. Rows keep the grid order; a point whose
/// evaluation throws becomes an Indeterminate row carrying the message.
std::vector<SweepRow> sweep(std::span<const GridPoint> grid, const FlatnessOptions& options = {}, unsigned jobs = 1);

SweepRow sweep_row(const Rational& parameter, const Measure& m, const FlatnessOptions& options);

/// A one-parameter path of measures.
using MeasurePath = std::function<Measure(const Rational&)>;

/// t -> (1-t) from + t to, both normalized first. Exact when both endpoints
/// are exact. Throws FamilyError when atom counts differ.
MeasurePath mixture_path(const Measure& from, const Measure& to);

/// t -> realize(with_parameter(base, parameter, t)).
MeasurePath family_path(const FamilySpec& base, FamilyParameter parameter);

class NoCrossingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BisectOptions {
  std::size_t max_iterations = 200;
  Rational tolerance = Rational(1, 1'000'000);
  /// Evenly spaced interior probes used to count flips before bisecting.
  std::size_t probes = 16;
  FlatnessOptions flatness{};
};

struct BisectStep {
  Rational lo, hi;
  Verdict lo_verdict, hi_verdict;
};

struct BisectionResult {
  Rational lo, hi, midpoint;
  Verdict lo_verdict = Verdict::indeterminate;
  Verdict hi_verdict = Verdict::indeterminate;
  std::size_t iterations = 0;
  std::size_t flips_detected = 0;  ///< verdict changes seen across the probes
  bool converged = false;          ///< width <= tolerance
  std::vector<BisectStep> trace;
};

/// Shrinks [lo, hi] around a verdict flip with exact rational midpoints.
/// Throws NoCrossingError when no flip is seen between the endpoints and
/// probes, and std::invalid_argument when lo >= hi.
BisectionResult bisect_boundary(const MeasurePath& path, const Rational& lo, const Rational& hi,
                                const BisectOptions& options = {});

struct SampleRecord {
  std::size_t index = 0;
  std::vector<double> weights;
  Verdict verdict = Verdict::indeterminate;
  std::optional<AtomSubset> witness;
};

struct SampleSummary {
  std::size_t total = 0;
  std::size_t embeddable = 0;
  std::size_t not_embeddable = 0;
  std::size_t indeterminate = 0;
  double fraction = 0;    ///< embeddable / total
  double half_width = 0;  ///< 95% normal-approximation half-width
  std::uint64_t seed = 0;

  friend bool operator==(const SampleSummary&, const SampleSummary&) = default;
};

struct SampleRun {
  SampleSummary summary;
  std::vector<SampleRecord> samples;
};

/// The index-th point of the stream: k+1 normalized unit exponentials drawn
/// from a generator keyed by (seed, index), independent of evaluation order.
std::vector<double> simplex_point(std::size_t k, std::uint64_t seed, std::uint64_t index);

/// Uniform (flat Dirichlet) samples from the open simplex on k+1 atoms,
/// classified in float mode. Throws std::invalid_argument for k < 3 or
/// count == 0.
SampleRun sample_simplex(std::size_t k, std::size_t count, std::uint64_t seed, unsigned jobs = 1,
                         const FlatnessOptions& options = {});

}  // namespace atomembed

#endif  // ATOMEMBED_EXPLORER_HPP
