#ifndef ATOMEMBED_ATOM_SUBSET_HPP
#define ATOMEMBED_ATOM_SUBSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace atomembed {

/// A set of atom indices, stored as a 64-bit mask. Represents both elements of
/// the powerset algebra and simplex-vertex selections.
class AtomSubset {
 public:
  static constexpr std::size_t max_atoms = 64;

  constexpr AtomSubset() = default;
  constexpr explicit AtomSubset(std::uint64_t mask) : mask_(mask) {}

  /// Throws std::invalid_argument on duplicates or indices >= max_atoms.
  static AtomSubset from_indices(std::span<const std::size_t> indices);

  /// {0, ..., count-1}
  static AtomSubset prefix(std::size_t count);

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(std::size_t i) const { return i < max_atoms && ((mask_ >> i) & 1u) != 0; }

  /// Largest index + 1, or 0 for the empty set.
  constexpr std::size_t extent() const {
    return mask_ == 0 ? 0 : max_atoms - static_cast<std::size_t>(std::countl_zero(mask_));
  }

  std::vector<std::size_t> indices() const;

  /// Complement within {0, ..., atom_count-1}.
  AtomSubset complement(std::size_t atom_count) const;

  constexpr AtomSubset symmetric_difference(AtomSubset other) const { return AtomSubset(mask_ ^ other.mask_); }

  /// "{0,2,5}"
  std::string to_string() const;

  friend constexpr bool operator==(AtomSubset, AtomSubset) = default;

 private:
  std::uint64_t mask_ = 0;
};

/// Order by size first, then lexicographically by sorted index list.
bool size_lex_less(AtomSubset a, AtomSubset b);

/// Calls `visit` for every `size`-element subset of {0, ..., atom_count-1} in
/// lexicographic order of the sorted index lists.
void for_each_combination(std::size_t atom_count, std::size_t size, const std::function<void(AtomSubset)>& visit);

/// All subsets with min_size <= |S| <= max_size, in (size, lex) order.
std::vector<AtomSubset> subsets_in_size_lex_order(std::size_t atom_count, std::size_t min_size, std::size_t max_size);

}  // namespace atomembed

#endif  // ATOMEMBED_ATOM_SUBSET_HPP
