#include "atomembed/explorer.hpp"

#include "atomembed/parallel.hpp"

#include <cmath>
#include <random>

namespace atomembed {

namespace {

template <Scalar T>
SweepRow row_from_report(const Rational& parameter, const FlatnessReport<T>& report) {
  SweepRow row;
  row.parameter = parameter;
  const auto c = classify(report);
  row.verdict = c.verdict;
  row.dimension = c.dimension;
  row.witness = c.witness;
  row.reason = c.reason;
  const SubsetValue<T>* worst = nullptr;
  for (const auto& sv : report.subset_values) {
    if (worst == nullptr || sv.value < worst->value) worst = &sv;
  }
  if (worst != nullptr) {
    row.worst_value = to_double(worst->value);
    row.worst_subset = worst->subset;
  }
  return row;
}

Measure mix(const Measure& a, const Measure& b, const Rational& t) {
  if (std::holds_alternative<ExactMeasure>(a) && std::holds_alternative<ExactMeasure>(b)) {
    const auto& ea = std::get<ExactMeasure>(a);
    const auto& eb = std::get<ExactMeasure>(b);
    std::vector<Rational> w(ea.atom_count());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = (1 - t) * ea[i] + t * eb[i];
    return validate_measure(std::move(w));
  }
  const auto wa = weights_as_double(a);
  const auto wb = weights_as_double(b);
  const double td = t.get_d();
  std::vector<double> w(wa.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (1 - td) * wa[i] + td * wb[i];
  return validate_measure(std::move(w));
}

Measure normalized(const Measure& m) {
  return std::visit([](const auto& mm) -> Measure { return mm.normalize(); }, m);
}

Verdict verdict_at(const MeasurePath& path, const Rational& t, const FlatnessOptions& options) {
  return classify(path(t), options).verdict;
}

}  // namespace

SweepRow sweep_row(const Rational& parameter, const Measure& m, const FlatnessOptions& options) {
  return std::visit([&](const auto& mm) { return row_from_report(parameter, is_flat(mm, options)); }, m);
}

std::vector<SweepRow> sweep(std::span<const GridPoint> grid, const FlatnessOptions& options, unsigned jobs) {
  std::vector<SweepRow> rows(grid.size());
  FlatnessOptions inner = options;
  inner.jobs = 1;
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    try {
      rows[i] = sweep_row(grid[i].parameter, grid[i].measure, inner);
    } catch (const std::exception& e) {
      rows[i].parameter = grid[i].parameter;
      rows[i].verdict = Verdict::indeterminate;
      rows[i].reason = e.what();
    }
  });
  return rows;
}

MeasurePath mixture_path(const Measure& from, const Measure& to) {
  if (atom_count(from) != atom_count(to)) {
    throw FamilyError("mixture endpoints have different atom counts (" + std::to_string(atom_count(from)) + " vs " +
                      std::to_string(atom_count(to)) + ")");
  }
  return [a = normalized(from), b = normalized(to)](const Rational& t) { return mix(a, b, t); };
}

MeasurePath family_path(const FamilySpec& base, FamilyParameter parameter) {
  return [base, parameter](const Rational& t) { return realize(with_parameter(base, parameter, t)); };
}

BisectionResult bisect_boundary(const MeasurePath& path, const Rational& lo, const Rational& hi,
                                const BisectOptions& options) {
  if (!(lo < hi)) throw std::invalid_argument("bisection interval must satisfy lo < hi");

  // Probe lo, hi and `probes` interior points to count flips.
  const std::size_t segments = options.probes + 1;
  std::vector<Rational> ts(segments + 1);
  std::vector<Verdict> vs(segments + 1);
  for (std::size_t i = 0; i <= segments; ++i) {
    ts[i] = lo + (hi - lo) * Rational(static_cast<unsigned long>(i), static_cast<unsigned long>(segments));
    ts[i].canonicalize();
    vs[i] = verdict_at(path, ts[i], options.flatness);
  }
  std::size_t flips = 0;
  std::size_t first_flip = segments;
  for (std::size_t i = 0; i < segments; ++i) {
    if (vs[i] != vs[i + 1]) {
      if (flips == 0) first_flip = i;
      ++flips;
    }
  }
  if (vs.front() == vs.back()) {
    throw NoCrossingError("endpoints both classify " + std::string(verdict_name(vs.front())) + " (" +
                          std::to_string(flips) + " interior flips seen across probes)");
  }

  BisectionResult r;
  r.flips_detected = flips;
  r.lo = ts[first_flip];
  r.hi = ts[first_flip + 1];
  r.lo_verdict = vs[first_flip];
  r.hi_verdict = vs[first_flip + 1];
  r.trace.push_back({r.lo, r.hi, r.lo_verdict, r.hi_verdict});
  while (r.hi - r.lo > options.tolerance && r.iterations < options.max_iterations) {
    Rational mid = (r.lo + r.hi) / 2;
    mid.canonicalize();
    const Verdict v = verdict_at(path, mid, options.flatness);
    if (v == r.lo_verdict) {
      r.lo = mid;
    } else {
      r.hi = mid;
      r.hi_verdict = v;
    }
    ++r.iterations;
    r.trace.push_back({r.lo, r.hi, r.lo_verdict, r.hi_verdict});
  }
  r.converged = r.hi - r.lo <= options.tolerance;
  r.midpoint = (r.lo + r.hi) / 2;
  r.midpoint.canonicalize();
  return r;
}

std::vector<double> simplex_point(std::size_t k, std::uint64_t seed, std::uint64_t index) {
  std::seed_seq key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(key);
  std::vector<double> w(k + 1);
  double total = 0;
  for (auto& x : w) {
    // 53-bit uniform strictly inside (0, 1); the raw engine output is fully
    // specified, unlike the library distributions.
    const double u = (static_cast<double>(gen() >> 11) + 0.5) * 0x1.0p-53;
    x = -std::log(u);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

SampleRun sample_simplex(std::size_t k, std::size_t count, std::uint64_t seed, unsigned jobs,
                         const FlatnessOptions& options) {
  if (k < 3) throw std::invalid_argument("simplex sampling needs k >= 3 (at least four atoms)");
  if (count == 0) throw std::invalid_argument("sample count must be at least 1");
  FlatnessOptions inner = options;
  inner.jobs = 1;

  SampleRun run;
  run.samples.resize(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    SampleRecord& rec = run.samples[i];
    rec.index = i;
    rec.weights = simplex_point(k, seed, i);
    const auto c = classify(validate_measure(rec.weights), inner);
    rec.verdict = c.verdict;
    rec.witness = c.witness;
  });

  SampleSummary& s = run.summary;
  s.total = count;
  s.seed = seed;
  for (const auto& rec : run.samples) {
    switch (rec.verdict) {
      case Verdict::embeddable: ++s.embeddable; break;
      case Verdict::not_embeddable: ++s.not_embeddable; break;
      case Verdict::indeterminate: ++s.indeterminate; break;
    }
  }
  s.fraction = static_cast<double>(s.embeddable) / static_cast<double>(s.total);
  s.half_width = 1.96 * std::sqrt(s.fraction * (1 - s.fraction) / static_cast<double>(s.total));
  return run;
}

}  // namespace atomembed
