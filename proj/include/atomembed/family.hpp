#ifndef ATOMEMBED_FAMILY_HPP
#define ATOMEMBED_FAMILY_HPP

#include "atomembed/measure.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

namespace atomembed {

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Principle of indifference: weight 1/atoms on every atom.
struct UniformFamily {
  std::size_t atoms = 2;
};

/// Atom alpha (0..trials) carries C(trials, alpha) p^alpha (1-p)^(trials-alpha).
struct BinomialFamily {
  unsigned trials = 1;
  std::variant<Rational, double> p = Rational(1, 2);
};

/// Atom alpha (0..draws) carries C(K, alpha) C(N-K, draws-alpha) / C(N, draws).
struct HypergeometricFamily {
  unsigned population = 2;  ///< N
  unsigned successes = 1;   ///< K
  unsigned draws = 1;       ///< n
};

/// Weights as given; unnormalized input is kept unnormalized.
struct CustomFamily {
  std::variant<std::vector<double>, std::vector<Rational>> weights;
};

using FamilySpec = std::variant<UniformFamily, BinomialFamily, HypergeometricFamily, CustomFamily>;

inline constexpr unsigned max_binomial_trials = 64;

/// Exact C(n, k) for n <= 64. Throws FamilyError for larger n.
std::uint64_t binomial_coefficient(unsigned n, unsigned k);

/// Exact-rational measure whenever the parameters are rational (always for
/// uniform and hypergeometric). Throws FamilyError for parameters out of range
/// or a support with zero-probability outcomes.
Measure realize(const FamilySpec& spec);

enum class FamilyParameter { atoms, trials, p, population, successes, draws };

/// Accepts "atoms", "n"/"trials", "p", "N"/"population", "K"/"successes",
/// "draws". Throws FamilyError otherwise.
FamilyParameter parse_family_parameter(std::string_view name);

struct GridPoint {
  Rational parameter;
  Measure measure;
};

/// `steps` evenly spaced values lo + i (hi - lo) / (steps - 1), each applied
/// to `base` and realized. Integer parameters must land on integers. Throws
/// FamilyError naming the offending value.
std::vector<GridPoint> family_grid(const FamilySpec& base, FamilyParameter parameter, const Rational& lo,
                                   const Rational& hi, std::size_t steps);

/// `base` with one parameter replaced.
FamilySpec with_parameter(const FamilySpec& base, FamilyParameter parameter, const Rational& value);

}  // namespace atomembed

#endif  // ATOMEMBED_FAMILY_HPP
