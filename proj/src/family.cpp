#include "atomembed/family.hpp"

#include <cmath>
#include <string>

namespace atomembed {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Rational rational_power(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

Measure realize_uniform(const UniformFamily& f) {
  if (f.atoms < 2) throw FamilyError("uniform family needs at least 2 atoms, got " + std::to_string(f.atoms));
  return validate_measure(std::vector<Rational>(f.atoms, Rational(1, static_cast<unsigned long>(f.atoms))));
}

Measure realize_binomial(const BinomialFamily& f) {
  if (f.trials < 1) throw FamilyError("binomial family needs at least one trial");
  if (f.trials > max_binomial_trials) {
    throw FamilyError("binomial family supports at most " + std::to_string(max_binomial_trials) + " trials, got " +
                      std::to_string(f.trials));
  }
  const unsigned n = f.trials;
  if (const auto* p = std::get_if<Rational>(&f.p)) {
    if (!(*p > 0 && *p < 1)) throw FamilyError("binomial p must lie in (0,1), got " + to_string(*p));
    const Rational q = 1 - *p;
    std::vector<Rational> w;
    w.reserve(n + 1);
    for (unsigned a = 0; a <= n; ++a) {
      mpz_class c;
      mpz_set_ui(c.get_mpz_t(), 0);
      const std::uint64_t coefficient = binomial_coefficient(n, a);
      mpz_import(c.get_mpz_t(), 1, -1, sizeof coefficient, 0, 0, &coefficient);
      w.push_back(Rational(c) * rational_power(*p, a) * rational_power(q, n - a));
    }
    return validate_measure(std::move(w));
  }
  const double p = std::get<double>(f.p);
  if (!(p > 0 && p < 1)) throw FamilyError("binomial p must lie in (0,1), got " + format_double(p));
  std::vector<double> w;
  w.reserve(n + 1);
  for (unsigned a = 0; a <= n; ++a) {
    w.push_back(static_cast<double>(binomial_coefficient(n, a)) * std::pow(p, a) * std::pow(1 - p, n - a));
  }
  return validate_measure(std::move(w));
}

mpz_class choose(unsigned n, unsigned k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

Measure realize_hypergeometric(const HypergeometricFamily& f) {
  const unsigned big_n = f.population, big_k = f.successes, n = f.draws;
  if (!(big_k > 0 && big_k < big_n)) {
    throw FamilyError("hypergeometric needs 0 < K < N, got K=" + std::to_string(big_k) + ", N=" + std::to_string(big_n));
  }
  if (!(n > 0 && n < big_n)) {
    throw FamilyError("hypergeometric needs 0 < draws < N, got draws=" + std::to_string(n) + ", N=" + std::to_string(big_n));
  }
  if (n > big_k || n > big_n - big_k) {
    throw FamilyError("hypergeometric with N=" + std::to_string(big_n) + ", K=" + std::to_string(big_k) +
                      ", draws=" + std::to_string(n) +
                      " gives zero probability to some outcome in 0..draws; strict positivity needs draws <= min(K, N-K)");
  }
  const mpz_class total = choose(big_n, n);
  std::vector<Rational> w;
  w.reserve(n + 1);
  for (unsigned a = 0; a <= n; ++a) {
    Rational x(choose(big_k, a) * choose(big_n - big_k, n - a), total);
    x.canonicalize();
    w.push_back(x);
  }
  return validate_measure(std::move(w));
}

Measure realize_custom(const CustomFamily& f) {
  return std::visit([](const auto& w) -> Measure { return validate_measure(w); }, f.weights);
}

unsigned as_integer_parameter(const Rational& value, std::string_view name) {
  if (value.get_den() != 1 || value < 0 || value > 1'000'000) {
    throw FamilyError("parameter " + std::string(name) + " must be a non-negative integer, got " + to_string(value));
  }
  return static_cast<unsigned>(value.get_num().get_ui());
}

}  // namespace

std::uint64_t binomial_coefficient(unsigned n, unsigned k) {
  if (n > max_binomial_trials) {
    throw FamilyError("binomial coefficients are exact only up to n = 64, got n = " + std::to_string(n));
  }
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<std::uint64_t>(r);
}

Measure realize(const FamilySpec& spec) {
  return std::visit(overloaded{
                        [](const UniformFamily& f) { return realize_uniform(f); },
                        [](const BinomialFamily& f) { return realize_binomial(f); },
                        [](const HypergeometricFamily& f) { return realize_hypergeometric(f); },
                        [](const CustomFamily& f) { return realize_custom(f); },
                    },
                    spec);
}

FamilyParameter parse_family_parameter(std::string_view name) {
  if (name == "atoms") return FamilyParameter::atoms;
  if (name == "n" || name == "trials") return FamilyParameter::trials;
  if (name == "p") return FamilyParameter::p;
  if (name == "N" || name == "population") return FamilyParameter::population;
  if (name == "K" || name == "successes") return FamilyParameter::successes;
  if (name == "draws") return FamilyParameter::draws;
  throw FamilyError("unknown family parameter '" + std::string(name) + "'");
}

FamilySpec with_parameter(const FamilySpec& base, FamilyParameter parameter, const Rational& value) {
  FamilySpec spec = base;
  auto mismatch = [&] { return FamilyError("parameter does not apply to this family"); };
  switch (parameter) {
    case FamilyParameter::atoms:
      if (auto* u = std::get_if<UniformFamily>(&spec)) {
        u->atoms = as_integer_parameter(value, "atoms");
        return spec;
      }
      throw mismatch();
    case FamilyParameter::trials:
      if (auto* b = std::get_if<BinomialFamily>(&spec)) {
        b->trials = as_integer_parameter(value, "n");
        return spec;
      }
      throw mismatch();
    case FamilyParameter::p:
      if (auto* b = std::get_if<BinomialFamily>(&spec)) {
        b->p = value;
        return spec;
      }
      throw mismatch();
    case FamilyParameter::population:
    case FamilyParameter::successes:
    case FamilyParameter::draws:
      if (auto* h = std::get_if<HypergeometricFamily>(&spec)) {
        const unsigned v = as_integer_parameter(value, "hypergeometric parameter");
        if (parameter == FamilyParameter::population) h->population = v;
        if (parameter == FamilyParameter::successes) h->successes = v;
        if (parameter == FamilyParameter::draws) h->draws = v;
        return spec;
      }
      throw mismatch();
  }
  throw mismatch();
}

std::vector<GridPoint> family_grid(const FamilySpec& base, FamilyParameter parameter, const Rational& lo,
                                   const Rational& hi, std::size_t steps) {
  if (steps == 0) throw FamilyError("grid needs at least one step");
  std::vector<GridPoint> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    Rational value = lo;
    if (steps > 1) {
      value = lo + (hi - lo) * Rational(static_cast<unsigned long>(i), static_cast<unsigned long>(steps - 1));
    }
    value.canonicalize();
    try {
      out.push_back({value, realize(with_parameter(base, parameter, value))});
    } catch (const std::invalid_argument& e) {
      throw FamilyError("grid point " + to_string(value) + " is invalid: " + e.what());
    }
  }
  return out;
}

}  // namespace atomembed
