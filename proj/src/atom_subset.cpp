#include "atomembed/atom_subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace atomembed {

AtomSubset AtomSubset::from_indices(std::span<const std::size_t> indices) {
  std::uint64_t mask = 0;
  for (std::size_t i : indices) {
    if (i >= max_atoms) {
      throw std::invalid_argument("atom index " + std::to_string(i) + " out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (mask & bit) {
      throw std::invalid_argument("duplicate atom index " + std::to_string(i));
    }
    mask |= bit;
  }
  return AtomSubset(mask);
}

AtomSubset AtomSubset::prefix(std::size_t count) {
  if (count > max_atoms) throw std::invalid_argument("prefix longer than 64 atoms");
  if (count == max_atoms) return AtomSubset(~std::uint64_t{0});
  return AtomSubset((std::uint64_t{1} << count) - 1);
}

std::vector<std::size_t> AtomSubset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

AtomSubset AtomSubset::complement(std::size_t atom_count) const {
  return AtomSubset(~mask_ & prefix(atom_count).mask());
}

std::string AtomSubset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i : indices()) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool size_lex_less(AtomSubset a, AtomSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on sorted index lists: the first differing index decides,
  // and the set holding the smaller index comes first.
  const std::uint64_t diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.mask() & lowest) != 0;
}

void for_each_combination(std::size_t atom_count, std::size_t size, const std::function<void(AtomSubset)>& visit) {
  if (atom_count > AtomSubset::max_atoms) throw std::invalid_argument("more than 64 atoms");
  if (size > atom_count) return;
  if (size == 0) {
    visit(AtomSubset{});
    return;
  }
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    visit(AtomSubset::from_indices(idx));
    // Advance the rightmost index that still has room.
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == atom_count - size + (pos - 1)) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<AtomSubset> subsets_in_size_lex_order(std::size_t atom_count, std::size_t min_size, std::size_t max_size) {
  std::vector<AtomSubset> out;
  for (std::size_t s = min_size; s <= std::min(max_size, atom_count); ++s) {
    for_each_combination(atom_count, s, [&](AtomSubset a) { out.push_back(a); });
  }
  return out;
}

}  // namespace atomembed
