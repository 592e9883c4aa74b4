#include "atomembed/flatness.hpp"

#include "atomembed/parallel.hpp"

#include <algorithm>

namespace atomembed {

namespace {

std::vector<AtomSubset> required_subsets(std::size_t atoms, SubsetScope scope) {
  if (scope == SubsetScope::all_subsets) return subsets_in_size_lex_order(atoms, 4, atoms);
  std::vector<AtomSubset> out;
  for (std::size_t s = 4; s <= atoms; ++s) out.push_back(AtomSubset::prefix(s));
  return out;
}

Sign exact_sign(std::span<const Rational> w) { return criterion_sign(w); }

SubsetValue<Rational> evaluate(const ExactMeasure& m, AtomSubset s, const FlatnessOptions&) {
  const auto w = restrict_weights(m, s);
  Rational value = reduced_criterion(w);
  const int sg = sgn(value);
  return {s, std::move(value), sg > 0 ? Sign::positive : (sg < 0 ? Sign::negative : Sign::zero)};
}

SubsetValue<double> evaluate(const FloatMeasure& m, AtomSubset s, const FlatnessOptions& options) {
  const auto w = restrict_weights(m, s);
  Sign sign = criterion_sign(w, options.margin);
  double value = reduced_criterion(w);
  if (sign == Sign::indeterminate && options.exact_fallback) {
    std::vector<Rational> exact;
    exact.reserve(w.size());
    for (double x : w) exact.push_back(exact_from_double(x));
    const Rational exact_value = reduced_criterion(exact);
    sign = exact_sign(exact);
    value = exact_value.get_d();
  }
  return {s, value, sign};
}

}  // namespace

template <Scalar T>
std::vector<T> restrict_weights(const BasicMeasure<T>& m, AtomSubset subset) {
  if (subset.extent() > m.atom_count()) throw std::out_of_range("subset references an atom beyond the measure");
  std::vector<T> out;
  out.reserve(subset.size());
  for (std::size_t i : subset.indices()) out.push_back(m[i]);
  return out;
}

template <Scalar T>
FlatnessReport<T> is_flat(const BasicMeasure<T>& m, const FlatnessOptions& options) {
  const auto subsets = required_subsets(m.atom_count(), options.scope);
  std::vector<std::optional<SubsetValue<T>>> slots(subsets.size());
  parallel_for(subsets.size(), options.jobs, [&](std::size_t i) { slots[i] = evaluate(m, subsets[i], options); });

  FlatnessReport<T> report;
  report.atom_count = m.atom_count();
  report.checked_count = subsets.size();
  report.subset_values.reserve(subsets.size());
  for (auto& slot : slots) {
    SubsetValue<T>& sv = *slot;
    if (sv.sign == Sign::negative && !report.witness) report.witness = sv.subset;
    if (sv.sign == Sign::indeterminate) report.indeterminate.push_back(sv.subset);
    report.subset_values.push_back(std::move(sv));
  }
  report.flat = !report.witness.has_value();
  return report;
}

template <Scalar T>
std::size_t dimension(const FlatnessReport<T>& report) {
  std::size_t dim = report.atom_count >= 3 ? 2 : (report.atom_count == 2 ? 1 : 0);
  for (const auto& sv : report.subset_values) {
    if (sv.sign == Sign::positive) dim = std::max(dim, sv.subset.size() - 1);
  }
  return dim;
}

template std::vector<double> restrict_weights(const FloatMeasure&, AtomSubset);
template std::vector<Rational> restrict_weights(const ExactMeasure&, AtomSubset);
template FlatnessReport<double> is_flat(const FloatMeasure&, const FlatnessOptions&);
template FlatnessReport<Rational> is_flat(const ExactMeasure&, const FlatnessOptions&);
template std::size_t dimension(const FlatnessReport<double>&);
template std::size_t dimension(const FlatnessReport<Rational>&);

}  // namespace atomembed
