#include "cli.hpp"

#include "atomembed/closed_form.hpp"
#include "atomembed/determinant.hpp"
#include "atomembed/embedding.hpp"
#include "atomembed/explorer.hpp"
#include "atomembed/gram.hpp"
#include "atomembed/io.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>

namespace atomembed::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MeasureOptions {
  std::string input = "-";
  bool exact = false;
};

struct FlatnessFlags {
  bool full_set_only = false;
  unsigned jobs = 1;
  double margin = default_sign_margin;
  bool no_exact_fallback = false;

  FlatnessOptions options() const {
    FlatnessOptions o;
    o.scope = full_set_only ? SubsetScope::prefixes : SubsetScope::all_subsets;
    o.jobs = jobs;
    o.margin = margin;
    o.exact_fallback = !no_exact_fallback;
    return o;
  }
};

struct FamilyFlags {
  std::string kind;
  std::size_t atoms = 0;
  unsigned n = 0;
  unsigned population = 0;
  unsigned successes = 0;
  std::string p = "1/2";
  std::string weights;
  CLI::Option* atoms_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* population_opt = nullptr;
  CLI::Option* successes_opt = nullptr;
  CLI::Option* weights_opt = nullptr;
};

struct GridFlags {
  std::string param;
  std::string from;
  std::string to;
  std::size_t steps = 11;
};

enum class OutFormat { none, csv, json };

void add_measure_options(CLI::App* sub, MeasureOptions& m) {
  sub->add_option("measure", m.input, "Measure JSON file, or - for stdin")->capture_default_str();
  sub->add_flag("--exact", m.exact, "Require exact rational weights");
}

void add_flatness_options(CLI::App* sub, FlatnessFlags& f) {
  sub->add_flag("--full-set-only", f.full_set_only, "Check only the prefix simplices {0..n}");
  sub->add_option("--jobs", f.jobs, "Worker threads, 0 for all cores")->capture_default_str();
  sub->add_option("--margin", f.margin, "Relative float sign margin")->check(CLI::NonNegativeNumber)->capture_default_str();
  sub->add_flag("--no-exact-fallback", f.no_exact_fallback, "Report margin cases as indeterminate");
}

void add_family_options(CLI::App* sub, FamilyFlags& f, bool kind_required) {
  auto* kind = sub->add_option("family", f.kind, "uniform | binomial | hypergeometric | custom")
                   ->check(CLI::IsMember({"uniform", "binomial", "hypergeometric", "custom"}));
  if (kind_required) kind->required();
  f.atoms_opt = sub->add_option("--atoms", f.atoms, "Atom count (uniform)");
  f.n_opt = sub->add_option("--n", f.n, "Trials (binomial) or draws (hypergeometric)");
  f.population_opt = sub->add_option("--N", f.population, "Population size (hypergeometric)");
  f.successes_opt = sub->add_option("--K", f.successes, "Successes in the population (hypergeometric)");
  sub->add_option("--p", f.p, "Success probability (binomial), rational or decimal")->capture_default_str();
  f.weights_opt = sub->add_option("--weights", f.weights, "Comma-separated weights (custom)");
}

void add_grid_options(CLI::App* sub, GridFlags& g) {
  sub->add_option("--param", g.param, "Family parameter to vary");
  sub->add_option("--from", g.from, "Start of the parameter range");
  sub->add_option("--to", g.to, "End of the parameter range");
}

void add_out_option(CLI::App* sub, std::string& out) {
  sub->add_option("--out", out, "Write data to this file; format from the extension (.csv or .json)");
}

Rational rational_flag(const std::string& text, std::string_view flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(flag) + " expects a rational number, got '" + text + "'");
  }
}

OutFormat out_format(const std::string& path, bool csv_allowed) {
  if (path.empty()) return OutFormat::none;
  auto ends_with = [&](std::string_view ext) {
    return path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
  };
  if (ends_with(".json")) return OutFormat::json;
  if (ends_with(".csv")) {
    if (!csv_allowed) throw UsageError("--out: this command has no tabular output; use a .json file");
    return OutFormat::csv;
  }
  throw UsageError("--out: unsupported extension in '" + path + "' (expected .csv or .json)");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
  return f;
}

void emit_json(const json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    auto f = open_out(out_path);
    f << j.dump(2) << '\n';
  }
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

Measure load_measure(const MeasureOptions& opts, std::istream& in, std::ostream& err) {
  std::string text;
  if (opts.input == "-") {
    text = read_all(in);
  } else {
    std::ifstream f(opts.input);
    if (!f) throw InputError("cannot read measure file '" + opts.input + "'");
    text = read_all(f);
  }
  Measure m = parse_measure(text, opts.exact);
  std::visit(
      [&](const auto& mm) {
        for (const auto& w : mm.warnings()) err << "warning: " << w << '\n';
      },
      m);
  return m;
}

unsigned required(const CLI::Option* opt, unsigned value, std::string_view flag, std::string_view kind) {
  if (opt->count() == 0) throw UsageError(std::string(kind) + " family requires " + std::string(flag));
  return value;
}

FamilySpec build_family(const FamilyFlags& f, std::optional<FamilyParameter> varied) {
  auto varies = [&](FamilyParameter p) { return varied && *varied == p; };
  if (f.kind == "uniform") {
    UniformFamily u;
    u.atoms = varies(FamilyParameter::atoms) ? 2 : f.atoms;
    if (!varies(FamilyParameter::atoms) && f.atoms_opt->count() == 0) throw UsageError("uniform family requires --atoms");
    return u;
  }
  if (f.kind == "binomial") {
    BinomialFamily b;
    b.trials = varies(FamilyParameter::trials) ? 1 : required(f.n_opt, f.n, "--n", "binomial");
    b.p = rational_flag(f.p, "--p");
    return b;
  }
  if (f.kind == "hypergeometric") {
    HypergeometricFamily h;
    h.population = varies(FamilyParameter::population) ? 2 : required(f.population_opt, f.population, "--N", "hypergeometric");
    h.successes = varies(FamilyParameter::successes) ? 1 : required(f.successes_opt, f.successes, "--K", "hypergeometric");
    h.draws = varies(FamilyParameter::draws) ? 1 : required(f.n_opt, f.n, "--n", "hypergeometric");
    return h;
  }
  if (f.kind == "custom") {
    if (f.weights_opt->count() == 0) throw UsageError("custom family requires --weights");
    std::vector<Rational> w;
    std::stringstream ss(f.weights);
    for (std::string item; std::getline(ss, item, ',');) w.push_back(rational_flag(item, "--weights"));
    return CustomFamily{std::move(w)};
  }
  throw UsageError("a family kind is required");
}

FamilyParameter grid_parameter(const FamilyFlags& f, const GridFlags& g) {
  if (g.param.empty()) throw UsageError("--param is required with a family");
  FamilyParameter p = parse_family_parameter(g.param);
  // --n means draws for the hypergeometric family.
  if (f.kind == "hypergeometric" && (g.param == "n")) p = FamilyParameter::draws;
  return p;
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t value) {
  if (opt->count() > 0) return value;
  const char* env = std::getenv("ATOMEMBED_SEED");
  if (env == nullptr || *env == '\0') return 0;
  std::uint64_t seed = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("ATOMEMBED_SEED must be an unsigned 64-bit integer, got '" + std::string(text) + "'");
  }
  return seed;
}

int verdict_exit(Verdict v) { return v == Verdict::indeterminate ? exit_indeterminate : exit_ok; }

// ---- det -------------------------------------------------------------------

template <Scalar T>
int run_det(const BasicMeasure<T>& m, std::vector<std::size_t> simplex, const std::string& mode,
            const FlatnessFlags& flags, const std::string& out_path, std::ostream& out) {
  if (simplex.empty()) {
    simplex.resize(m.atom_count());
    std::iota(simplex.begin(), simplex.end(), std::size_t{0});
  }
  const auto distances = atom_metric(m);
  const auto gram = gram_matrix(distances, std::span<const std::size_t>(simplex));
  std::vector<T> xs;
  for (std::size_t i : simplex) xs.push_back(m[i]);

  const bool want_closed = mode == "closed" || mode == "all";
  const bool want_numeric = mode == "numeric" || mode == "all";
  const bool want_lemma = mode == "lemma" || mode == "all";
  if (xs.size() < 3 && (want_closed || want_lemma)) {
    throw UsageError("--mode " + mode + " needs a simplex of at least 3 points; use --mode numeric");
  }

  json j;
  j["simplex"] = simplex;
  j["order"] = gram.order();
  j["scalar_mode"] = is_exact_v<T> ? "exact" : "float";
  json values = json::object();
  json approx = json::object();
  std::vector<T> computed;
  auto record = [&](const char* name, const T& v) {
    values[name] = scalar_to_json(v);
    approx[name] = to_double(v);
    computed.push_back(v);
  };
  if (want_closed) record("closed", det_closed_form(std::span<const T>(xs)));
  if (want_numeric) record("numeric", det_numeric(gram.entries));
  if (want_lemma) record("lemma", det_rank_one_route(std::span<const T>(xs)));
  j["determinant"] = values;
  if constexpr (is_exact_v<T>) j["approx"] = approx;

  Sign sign;
  if (xs.size() >= 3) {
    const T reduced = reduced_criterion(std::span<const T>(xs));
    j["reduced_criterion"] = scalar_to_json(reduced);
    sign = criterion_sign(std::span<const T>(xs), flags.margin);
    if constexpr (!is_exact_v<T>) {
      if (sign == Sign::indeterminate && !flags.no_exact_fallback) {
        std::vector<Rational> exact;
        for (double x : xs) exact.push_back(exact_from_double(x));
        sign = criterion_sign(std::span<const Rational>(exact));
        j["exact_fallback"] = true;
      }
    }
  } else {
    sign = computed.front() > 0 ? Sign::positive : Sign::zero;
  }
  j["sign"] = std::string(to_string(sign));

  bool agree = true;
  for (const auto& v : computed) {
    if constexpr (is_exact_v<T>) {
      agree = agree && v == computed.front();
    } else {
      const double scale = std::max(std::abs(v), std::abs(computed.front()));
      agree = agree && std::abs(v - computed.front()) <= 1e-9 * scale;
    }
  }
  j["agree"] = agree;
  emit_json(j, out_path, out);
  return sign == Sign::indeterminate ? exit_indeterminate : exit_ok;
}

// ---- check / classify --------------------------------------------------------

template <Scalar T>
int run_check(const BasicMeasure<T>& m, const FlatnessOptions& options, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
  const auto report = is_flat(m, options);
  json j = report_to_json(report);
  const auto c = classify(report);
  j["verdict"] = verdict_name(c.verdict);
  if (c.verdict == Verdict::indeterminate) err << "indeterminate: " << c.reason << '\n';
  emit_json(j, out_path, out);
  return verdict_exit(c.verdict);
}

int run_classify(const Measure& m, const FlatnessOptions& options, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
  const auto c = classify(m, options);
  if (c.verdict == Verdict::indeterminate) err << "indeterminate: " << c.reason << '\n';
  emit_json(classification_to_json(c), out_path, out);
  return verdict_exit(c.verdict);
}

// ---- embed ---------------------------------------------------------------------

template <Scalar T>
int run_embed(const BasicMeasure<T>& m, const EmbedOptions& options, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  const OutFormat format = out_format(out_path, true);
  const auto c = classify(m, options.flatness);
  if (c.verdict == Verdict::indeterminate) {
    err << "indeterminate: " << c.reason << '\n';
    return exit_indeterminate;
  }
  EmbeddingResult e;
  try {
    e = embed(m, options);
  } catch (const NumericalRankAmbiguity& ex) {
    err << "indeterminate: " << ex.what() << '\n';
    return exit_indeterminate;
  }
  json summary = embedding_summary_to_json(e);
  summary["isometry_tolerance"] = options.isometry_tolerance;
  json full = summary;
  json rows = json::array();
  for (Eigen::Index r = 0; r < e.coordinates.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index col = 0; col < e.coordinates.cols(); ++col) row.push_back(e.coordinates(r, col));
    rows.push_back(std::move(row));
  }
  full["coordinates"] = std::move(rows);

  if (format == OutFormat::none) {
    out << full.dump(2) << '\n';
  } else {
    auto f = open_out(out_path);
    if (format == OutFormat::csv) write_coordinates_csv(f, e);
    else f << full.dump(2) << '\n';
    out << summary.dump(2) << '\n';
  }
  return exit_ok;
}

// ---- tabular output ------------------------------------------------------------

template <class WriteCsv>
void emit_table(const json& summary, const json& full, const std::string& out_path, std::ostream& out,
                WriteCsv&& write_csv) {
  const OutFormat format = out_format(out_path, true);
  if (format == OutFormat::none) {
    out << full.dump(2) << '\n';
    return;
  }
  auto f = open_out(out_path);
  if (format == OutFormat::csv) write_csv(f);
  else f << full.dump(2) << '\n';
  out << summary.dump(2) << '\n';
}

int run_sweep(const FamilyFlags& fam, const GridFlags& grid, const FlatnessFlags& flags, const std::string& out_path,
              std::ostream& out) {
  out_format(out_path, true);
  const FamilyParameter param = grid_parameter(fam, grid);
  if (grid.from.empty() || grid.to.empty()) throw UsageError("sweep requires --from and --to");
  if (grid.steps == 0) throw UsageError("--steps must be at least 1");
  const Rational lo = rational_flag(grid.from, "--from");
  const Rational hi = rational_flag(grid.to, "--to");
  const auto points = family_grid(build_family(fam, param), param, lo, hi, grid.steps);
  const auto rows = sweep(points, flags.options(), flags.jobs);

  std::size_t counts[3] = {0, 0, 0};
  std::size_t flips = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ++counts[static_cast<int>(rows[i].verdict)];
    if (i > 0 && rows[i].verdict != rows[i - 1].verdict) ++flips;
  }
  json summary{{"family", fam.kind},
               {"parameter", grid.param},
               {"rows", rows.size()},
               {"embeddable", counts[0]},
               {"not_embeddable", counts[1]},
               {"indeterminate", counts[2]},
               {"flips", flips}};
  json full = summary;
  full["sweep"] = sweep_to_json(rows);
  emit_table(summary, full, out_path, out, [&](std::ostream& f) { write_sweep_csv(f, rows); });
  return counts[2] > 0 ? exit_indeterminate : exit_ok;
}

int run_sample(std::size_t k, std::size_t count, std::uint64_t seed, const FlatnessFlags& flags,
               const std::string& out_path, std::ostream& out) {
  out_format(out_path, true);
  const auto run = sample_simplex(k, count, seed, flags.jobs, flags.options());
  json summary = sample_summary_to_json(run.summary);
  summary["k"] = k;
  json full = summary;
  json samples = json::array();
  for (const auto& rec : run.samples) {
    json r{{"index", rec.index}, {"verdict", verdict_name(rec.verdict)}, {"weights", rec.weights}};
    if (rec.witness) r["witness"] = subset_to_json(*rec.witness);
    samples.push_back(std::move(r));
  }
  full["samples"] = std::move(samples);
  emit_table(summary, full, out_path, out, [&](std::ostream& f) { write_samples_csv(f, run); });
  return run.summary.indeterminate > 0 ? exit_indeterminate : exit_ok;
}

struct BisectFlags {
  std::string start;
  std::string end;
  std::string tol = "1e-6";
  std::size_t max_iterations = 200;
  std::size_t probes = 16;
  bool exact = false;
};

Measure load_measure_file(const std::string& path, bool exact, std::istream& in, std::ostream& err) {
  MeasureOptions m;
  m.input = path;
  m.exact = exact;
  return load_measure(m, in, err);
}

int run_bisect(const FamilyFlags& fam, const GridFlags& grid, const BisectFlags& b, const FlatnessFlags& flags,
               const std::string& out_path, std::istream& in, std::ostream& out, std::ostream& err) {
  out_format(out_path, true);
  const bool mixture = !b.start.empty() || !b.end.empty();
  if (mixture && !fam.kind.empty()) throw UsageError("bisect takes either --start/--end or a family, not both");
  if (!mixture && fam.kind.empty()) throw UsageError("bisect needs --start and --end measures or a family");
  if (mixture && (b.start.empty() || b.end.empty())) throw UsageError("bisect needs both --start and --end");
  if (b.start == "-" && b.end == "-") throw UsageError("--start and --end cannot both read stdin");

  BisectOptions options;
  options.tolerance = rational_flag(b.tol, "--tol");
  if (!(options.tolerance > 0)) throw UsageError("--tol must be positive");
  options.max_iterations = b.max_iterations;
  options.probes = b.probes;
  options.flatness = flags.options();

  MeasurePath path;
  Rational lo = 0, hi = 1;
  if (mixture) {
    path = mixture_path(load_measure_file(b.start, b.exact, in, err), load_measure_file(b.end, b.exact, in, err));
    if (!grid.param.empty()) throw UsageError("--param applies only to family bisection");
  } else {
    const FamilyParameter param = grid_parameter(fam, grid);
    path = family_path(build_family(fam, param), param);
    if (grid.from.empty() || grid.to.empty()) throw UsageError("family bisection requires --from and --to");
  }
  if (!grid.from.empty()) lo = rational_flag(grid.from, "--from");
  if (!grid.to.empty()) hi = rational_flag(grid.to, "--to");

  const auto r = bisect_boundary(path, lo, hi, options);
  if (r.flips_detected > 1) err << "warning: " << r.flips_detected << " verdict flips seen across the probes; the first is bracketed\n";
  if (!r.converged) err << "warning: iteration limit reached before the bracket width fell below --tol\n";
  json summary = bisection_to_json(r);
  json full = summary;
  json trace = json::array();
  for (const auto& s : r.trace) {
    trace.push_back({{"lo", to_string(s.lo)},
                     {"hi", to_string(s.hi)},
                     {"lo_verdict", verdict_name(s.lo_verdict)},
                     {"hi_verdict", verdict_name(s.hi_verdict)}});
  }
  full["trace"] = std::move(trace);
  emit_table(summary, full, out_path, out, [&](std::ostream& f) { write_bisection_csv(f, r); });
  return r.lo_verdict == Verdict::indeterminate || r.hi_verdict == Verdict::indeterminate ? exit_indeterminate : exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euclidean embeddability of Kolmogorov metrics on finite Boolean algebras", "atomembed"};
  app.require_subcommand(1);

  MeasureOptions measure;
  FlatnessFlags flatness;
  FamilyFlags family, sweep_family, bisect_family;
  GridFlags grid;
  BisectFlags bisect;
  std::string out_path;

  auto* det = app.add_subcommand("det", "Determinant of the Gram matrix of a simplex");
  std::vector<std::size_t> simplex;
  std::string mode = "all";
  add_measure_options(det, measure);
  det->add_option("--simplex", simplex, "Comma-separated atom indices; the first is the base point")->delimiter(',');
  det->add_option("--mode", mode, "closed | numeric | lemma | all")
      ->check(CLI::IsMember({"closed", "numeric", "lemma", "all"}))
      ->capture_default_str();
  det->add_option("--margin", flatness.margin, "Relative float sign margin")->check(CLI::NonNegativeNumber);
  det->add_flag("--no-exact-fallback", flatness.no_exact_fallback, "Report margin cases as indeterminate");
  add_out_option(det, out_path);

  auto* check = app.add_subcommand("check", "Flatness report over all simplices");
  add_measure_options(check, measure);
  add_flatness_options(check, flatness);
  add_out_option(check, out_path);

  auto* classify_cmd = app.add_subcommand("classify", "Embeddable(N) or NotEmbeddable(witness)");
  add_measure_options(classify_cmd, measure);
  add_flatness_options(classify_cmd, flatness);
  add_out_option(classify_cmd, out_path);

  auto* embed_cmd = app.add_subcommand("embed", "Euclidean coordinates for a flat measure");
  double isometry_tol = EmbedOptions{}.isometry_tolerance;
  add_measure_options(embed_cmd, measure);
  add_flatness_options(embed_cmd, flatness);
  embed_cmd->add_option("--tol", isometry_tol, "Isometry residual tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  add_out_option(embed_cmd, out_path);

  auto* family_cmd = app.add_subcommand("family", "Emit the measure JSON of a parametric family");
  add_family_options(family_cmd, family, true);
  add_out_option(family_cmd, out_path);

  auto* sweep_cmd = app.add_subcommand("sweep", "Classify a family across a parameter grid");
  add_family_options(sweep_cmd, sweep_family, true);
  add_grid_options(sweep_cmd, grid);
  sweep_cmd->add_option("--steps", grid.steps, "Grid points, endpoints included")->capture_default_str();
  add_flatness_options(sweep_cmd, flatness);
  add_out_option(sweep_cmd, out_path);

  auto* sample_cmd = app.add_subcommand("sample", "Monte Carlo classification of the probability simplex");
  std::size_t k = 3;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  sample_cmd->add_option("--k", k, "Simplex dimension; measures have k+1 atoms")->capture_default_str();
  sample_cmd->add_option("--count", count, "Number of samples")->capture_default_str();
  auto* seed_opt = sample_cmd->add_option("--seed", seed, "Master seed (default: ATOMEMBED_SEED, else 0)");
  add_flatness_options(sample_cmd, flatness);
  add_out_option(sample_cmd, out_path);

  auto* bisect_cmd = app.add_subcommand("bisect", "Locate a verdict flip along a path of measures");
  add_family_options(bisect_cmd, bisect_family, false);
  add_grid_options(bisect_cmd, grid);
  bisect_cmd->add_option("--start", bisect.start, "Measure JSON at t = 0 (mixture path)");
  bisect_cmd->add_option("--end", bisect.end, "Measure JSON at t = 1 (mixture path)");
  bisect_cmd->add_flag("--exact", bisect.exact, "Require exact rational endpoint weights");
  bisect_cmd->add_option("--tol", bisect.tol, "Target bracket width")->capture_default_str();
  bisect_cmd->add_option("--max-iter", bisect.max_iterations, "Iteration limit")->capture_default_str();
  bisect_cmd->add_option("--probes", bisect.probes, "Interior probes scanned for flips")->capture_default_str();
  add_flatness_options(bisect_cmd, flatness);
  add_out_option(bisect_cmd, out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (det->parsed()) {
      out_format(out_path, false);
      const Measure m = load_measure(measure, in, err);
      return std::visit([&](const auto& mm) { return run_det(mm, simplex, mode, flatness, out_path, out); }, m);
    }
    if (check->parsed()) {
      out_format(out_path, false);
      const Measure m = load_measure(measure, in, err);
      return std::visit([&](const auto& mm) { return run_check(mm, flatness.options(), out_path, out, err); }, m);
    }
    if (classify_cmd->parsed()) {
      out_format(out_path, false);
      return run_classify(load_measure(measure, in, err), flatness.options(), out_path, out, err);
    }
    if (embed_cmd->parsed()) {
      out_format(out_path, true);
      EmbedOptions options;
      options.flatness = flatness.options();
      options.isometry_tolerance = isometry_tol;
      const Measure m = load_measure(measure, in, err);
      return std::visit([&](const auto& mm) { return run_embed(mm, options, out_path, out, err); }, m);
    }
    if (family_cmd->parsed()) {
      out_format(out_path, false);
      emit_json(measure_to_json(realize(build_family(family, std::nullopt))), out_path, out);
      return exit_ok;
    }
    if (sweep_cmd->parsed()) return run_sweep(sweep_family, grid, flatness, out_path, out);
    if (sample_cmd->parsed()) return run_sample(k, count, resolve_seed(seed_opt, seed), flatness, out_path, out);
    if (bisect_cmd->parsed()) return run_bisect(bisect_family, grid, bisect, flatness, out_path, in, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_error;
  } catch (const ModeConflictError& e) {
    err << "mode conflict: " << e.what() << '\n';
    return exit_error;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return exit_error;
  } catch (const MeasureError& e) {
    err << "invalid measure: " << e.what() << '\n';
    return exit_error;
  } catch (const FamilyError& e) {
    err << "invalid family: " << e.what() << '\n';
    return exit_error;
  } catch (const NotFlatError& e) {
    err << "not flat: " << e.what() << '\n';
    return exit_error;
  } catch (const NoCrossingError& e) {
    err << "no crossing: " << e.what() << '\n';
    return exit_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }
  err << "usage error: no command given\n";
  return exit_error;
}

}  // namespace atomembed::cli
