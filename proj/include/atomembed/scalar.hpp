#ifndef ATOMEMBED_SCALAR_HPP
#define ATOMEMBED_SCALAR_HPP

#include <gmpxx.h>

#include <concepts>
#include <string>
#include <string_view>

namespace atomembed {

/// Arbitrary-precision rational, used for every exact-mode computation.
using Rational = mpq_class;

/// The two scalar modes: IEEE double or exact big rational.
template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

/// Parses "p/q", an integer, or a plain decimal such as "0.25" or "-1.5e-3"
/// into an exact rational. Throws std::invalid_argument on malformed text or
/// a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

/// Exactly the binary value held by `value`; throws on NaN or infinity.
Rational exact_from_double(double value);

inline double to_double(double value) { return value; }
inline double to_double(const Rational& value) { return value.get_d(); }

/// Decimal with 17 significant digits, round-trippable for doubles.
std::string format_double(double value);

inline double abs_value(double v) { return v < 0 ? -v : v; }
inline Rational abs_value(const Rational& v) { return abs(v); }

inline int sign_of(double v) { return (v > 0) - (v < 0); }
inline int sign_of(const Rational& v) { return sgn(v); }

}  // namespace atomembed

#endif  // ATOMEMBED_SCALAR_HPP
