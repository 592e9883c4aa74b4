#ifndef ATOMEMBED_CLASSIFY_HPP
#define ATOMEMBED_CLASSIFY_HPP

#include "atomembed/flatness.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace atomembed {

enum class Verdict { embeddable, not_embeddable, indeterminate };

/// "E", "N" or "I".
char verdict_code(Verdict v);
std::string_view verdict_name(Verdict v);

struct Classification {
  Verdict verdict = Verdict::indeterminate;
  std::size_t dimension = 0;           ///< meaningful for embeddable
  std::optional<AtomSubset> witness;   ///< set for not_embeddable
  std::string reason;                  ///< set for indeterminate
};

template <Scalar T>
Classification classify(const FlatnessReport<T>& report);

template <Scalar T>
Classification classify(const BasicMeasure<T>& m, const FlatnessOptions& options = {}) {
  return classify(is_flat(m, options));
}

Classification classify(const Measure& m, const FlatnessOptions& options = {});

}  // namespace atomembed

#endif  // ATOMEMBED_CLASSIFY_HPP
