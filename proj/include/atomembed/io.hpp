#ifndef ATOMEMBED_IO_HPP
#define ATOMEMBED_IO_HPP

#include "atomembed/classify.hpp"
#include "atomembed/embedding.hpp"
#include "atomembed/explorer.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string_view>

namespace atomembed {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact mode was requested but a weight is a non-integer JSON number.
class ModeConflictError : public InputError {
 public:
  using InputError::InputError;
};

/// Measure JSON: {"weights": [numbers or "p/q" strings], "normalized": bool}.
/// Any string weight selects exact mode; `force_exact` demands it. In exact
/// mode every weight must be a string or a JSON integer, otherwise
/// ModeConflictError. "normalized": true rescales the weights to sum to 1.
Measure measure_from_json(const nlohmann::json& j, bool force_exact = false);
Measure parse_measure(std::string_view text, bool force_exact = false);

/// Exact weights are written as "p/q" strings, float weights as numbers.
nlohmann::json measure_to_json(const Measure& m);

nlohmann::json scalar_to_json(double v);
nlohmann::json scalar_to_json(const Rational& v);

nlohmann::json subset_to_json(AtomSubset s);

template <Scalar T>
nlohmann::json report_to_json(const FlatnessReport<T>& report);

nlohmann::json classification_to_json(const Classification& c);
nlohmann::json embedding_summary_to_json(const EmbeddingResult& e);
nlohmann::json sample_summary_to_json(const SampleSummary& s);
nlohmann::json bisection_to_json(const BisectionResult& r);
nlohmann::json sweep_to_json(std::span<const SweepRow> rows);

// CSV writers: header row, doubles with 17 significant digits, verdicts as
// E/N/I, subsets as space-separated indices.
void write_coordinates_csv(std::ostream& out, const EmbeddingResult& e);
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_samples_csv(std::ostream& out, const SampleRun& run);
void write_bisection_csv(std::ostream& out, const BisectionResult& r);

}  // namespace atomembed

#endif  // ATOMEMBED_IO_HPP
