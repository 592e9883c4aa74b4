#ifndef ATOMEMBED_FLATNESS_HPP
#define ATOMEMBED_FLATNESS_HPP

#include "atomembed/atom_subset.hpp"
#include "atomembed/closed_form.hpp"
#include "atomembed/measure.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace atomembed {

enum class SubsetScope {
  /// Every atom subset of size >= 4.
  all_subsets,
  /// Only the prefixes {0..n} for 3 <= n <= k, the C_n convention.
  prefixes,
};

struct FlatnessOptions {
  SubsetScope scope = SubsetScope::all_subsets;
  /// Worker threads for subset evaluation; 0 means hardware concurrency.
  unsigned jobs = 1;
  /// Float-mode relative margin inside which a sign is not trusted.
  double margin = default_sign_margin;
  /// Recompute in-margin float values exactly from the binary weights.
  bool exact_fallback = true;
};

template <Scalar T>
struct SubsetValue {
  AtomSubset subset;
  T value;  ///< reduced criterion on the subset's weights
  Sign sign;
};

/// Outcome of checking every required simplex. `flat` holds iff `witness` is
/// absent. When `indeterminate` is non-empty and there is no witness the
/// verdict is provisional; see conclusive().
template <Scalar T>
struct FlatnessReport {
  bool flat = true;
  std::optional<AtomSubset> witness;
  std::vector<SubsetValue<T>> subset_values;  ///< in (size, lex) order
  std::size_t checked_count = 0;
  std::vector<AtomSubset> indeterminate;
  std::size_t atom_count = 0;

  bool conclusive() const { return witness.has_value() || indeterminate.empty(); }
};

/// n+1-point simplices of size 2 and 3 are always flat, so only subsets of
/// size >= 4 are evaluated. The witness is the first failing subset in
/// (size, lex) order. The report is identical for every `jobs` setting.
template <Scalar T>
FlatnessReport<T> is_flat(const BasicMeasure<T>& m, const FlatnessOptions& options = {});

/// Largest n such that some (n+1)-subset has a strictly positive
/// determinant. Subsets of size 2 and 3 always qualify.
template <Scalar T>
std::size_t dimension(const FlatnessReport<T>& report);

template <Scalar T>
std::size_t dimension(const BasicMeasure<T>& m, const FlatnessOptions& options = {}) {
  return dimension(is_flat(m, options));
}

/// Weights of `m` restricted to `subset`, in index order.
template <Scalar T>
std::vector<T> restrict_weights(const BasicMeasure<T>& m, AtomSubset subset);

}  // namespace atomembed

#endif  // ATOMEMBED_FLATNESS_HPP
