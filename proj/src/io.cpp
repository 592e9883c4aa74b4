#include "atomembed/io.hpp"

#include <cmath>
#include <ostream>

namespace atomembed {

using nlohmann::json;

namespace {

std::string subset_cell(const std::optional<AtomSubset>& s) {
  if (!s) return "";
  std::string out;
  for (std::size_t i : s->indices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
  }
  return out;
}

std::string number_cell(const std::optional<double>& v) { return v ? format_double(*v) : ""; }

json verdict_json(Verdict v) { return std::string(verdict_name(v)); }

}  // namespace

Measure measure_from_json(const json& j, bool force_exact) {
  if (!j.is_object()) throw InputError("measure JSON must be an object with a \"weights\" array");
  const auto it = j.find("weights");
  if (it == j.end() || !it->is_array()) throw InputError("measure JSON needs a \"weights\" array");
  bool normalize = false;
  if (const auto n = j.find("normalized"); n != j.end()) {
    if (!n->is_boolean()) throw InputError("\"normalized\" must be a boolean");
    normalize = n->get<bool>();
  }
  bool exact = force_exact;
  for (const auto& w : *it) {
    if (w.is_string()) exact = true;
    else if (!w.is_number()) throw InputError("weights must be numbers or rational strings");
  }
  try {
    if (exact) {
      std::vector<Rational> weights;
      for (std::size_t i = 0; i < it->size(); ++i) {
        const auto& w = (*it)[i];
        if (w.is_string()) {
          weights.push_back(parse_rational(w.get<std::string>()));
        } else if (w.is_number_integer()) {
          weights.push_back(Rational(w.dump()));
        } else {
          throw ModeConflictError("exact mode requested but weight " + std::to_string(i) + " is the float literal " +
                                  w.dump() + "; write it as a \"p/q\" string");
        }
      }
      return validate_measure(std::move(weights), normalize);
    }
    std::vector<double> weights;
    for (const auto& w : *it) weights.push_back(w.get<double>());
    return validate_measure(std::move(weights), normalize);
  } catch (const ModeConflictError&) {
    throw;
  } catch (const MeasureError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad weight: ") + e.what());
  }
}

Measure parse_measure(std::string_view text, bool force_exact) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return measure_from_json(j, force_exact);
}

json measure_to_json(const Measure& m) {
  json j;
  std::visit(
      [&](const auto& mm) {
        json w = json::array();
        for (const auto& x : mm.weights()) w.push_back(scalar_to_json(x));
        j["weights"] = std::move(w);
        j["normalized"] = mm.normalized();
      },
      m);
  return j;
}

json scalar_to_json(double v) {
  if (!std::isfinite(v)) return format_double(v);
  return v;
}

json scalar_to_json(const Rational& v) { return to_string(v); }

json subset_to_json(AtomSubset s) { return s.indices(); }

template <Scalar T>
json report_to_json(const FlatnessReport<T>& report) {
  json j;
  j["flat"] = report.flat;
  j["conclusive"] = report.conclusive();
  j["witness"] = report.witness ? subset_to_json(*report.witness) : json(nullptr);
  j["checked_count"] = report.checked_count;
  j["dimension"] = dimension(report);
  j["mode"] = is_exact_v<T> ? "exact" : "float";
  json values = json::array();
  for (const auto& sv : report.subset_values) {
    json row;
    row["subset"] = subset_to_json(sv.subset);
    row["value"] = scalar_to_json(sv.value);
    if constexpr (is_exact_v<T>) row["approx"] = sv.value.get_d();
    row["sign"] = std::string(to_string(sv.sign));
    values.push_back(std::move(row));
  }
  j["subset_values"] = std::move(values);
  json ind = json::array();
  for (auto s : report.indeterminate) ind.push_back(subset_to_json(s));
  j["indeterminate"] = std::move(ind);
  return j;
}

template json report_to_json(const FlatnessReport<double>&);
template json report_to_json(const FlatnessReport<Rational>&);

json classification_to_json(const Classification& c) {
  json j;
  j["verdict"] = verdict_json(c.verdict);
  j["code"] = std::string(1, verdict_code(c.verdict));
  if (c.verdict == Verdict::embeddable) j["dimension"] = c.dimension;
  if (c.witness) j["witness"] = subset_to_json(*c.witness);
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

json embedding_summary_to_json(const EmbeddingResult& e) {
  json j;
  j["dimension"] = e.dimension;
  j["spectral_rank"] = e.spectral_rank;
  j["base"] = e.base;
  j["atoms"] = e.coordinates.rows();
  j["max_residual"] = e.max_residual;
  j["eigenvalues"] = e.eigenvalues;
  return j;
}

json sample_summary_to_json(const SampleSummary& s) {
  return json{{"total", s.total},
              {"embeddable", s.embeddable},
              {"not_embeddable", s.not_embeddable},
              {"indeterminate", s.indeterminate},
              {"fraction", s.fraction},
              {"half_width_95", s.half_width},
              {"seed", s.seed}};
}

json bisection_to_json(const BisectionResult& r) {
  return json{{"lo", to_string(r.lo)},
              {"hi", to_string(r.hi)},
              {"midpoint", to_string(r.midpoint)},
              {"midpoint_approx", r.midpoint.get_d()},
              {"width", Rational(r.hi - r.lo).get_d()},
              {"lo_verdict", verdict_json(r.lo_verdict)},
              {"hi_verdict", verdict_json(r.hi_verdict)},
              {"iterations", r.iterations},
              {"flips_detected", r.flips_detected},
              {"converged", r.converged}};
}

json sweep_to_json(std::span<const SweepRow> rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json j;
    j["parameter"] = to_string(r.parameter);
    j["verdict"] = verdict_json(r.verdict);
    j["dimension"] = r.dimension;
    j["worst_value"] = r.worst_value ? json(*r.worst_value) : json(nullptr);
    j["worst_subset"] = r.worst_subset ? subset_to_json(*r.worst_subset) : json(nullptr);
    j["witness"] = r.witness ? subset_to_json(*r.witness) : json(nullptr);
    if (!r.reason.empty()) j["reason"] = r.reason;
    arr.push_back(std::move(j));
  }
  return arr;
}

void write_coordinates_csv(std::ostream& out, const EmbeddingResult& e) {
  for (Eigen::Index c = 0; c < e.coordinates.cols(); ++c) out << (c ? "," : "") << 'x' << (c + 1);
  out << '\n';
  for (Eigen::Index r = 0; r < e.coordinates.rows(); ++r) {
    for (Eigen::Index c = 0; c < e.coordinates.cols(); ++c) out << (c ? "," : "") << format_double(e.coordinates(r, c));
    out << '\n';
  }
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "parameter,verdict,dimension,worst_value,worst_subset,witness\n";
  for (const auto& r : rows) {
    out << format_double(r.parameter.get_d()) << ',' << verdict_code(r.verdict) << ',' << r.dimension << ','
        << number_cell(r.worst_value) << ',' << subset_cell(r.worst_subset) << ',' << subset_cell(r.witness) << '\n';
  }
}

void write_samples_csv(std::ostream& out, const SampleRun& run) {
  const std::size_t atoms = run.samples.empty() ? 0 : run.samples.front().weights.size();
  out << "index,verdict";
  for (std::size_t a = 0; a < atoms; ++a) out << ",x" << a;
  out << ",witness\n";
  for (const auto& rec : run.samples) {
    out << rec.index << ',' << verdict_code(rec.verdict);
    for (double w : rec.weights) out << ',' << format_double(w);
    out << ',' << subset_cell(rec.witness) << '\n';
  }
}

void write_bisection_csv(std::ostream& out, const BisectionResult& r) {
  out << "iteration,lo,hi,lo_verdict,hi_verdict\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto& s = r.trace[i];
    out << i << ',' << format_double(s.lo.get_d()) << ',' << format_double(s.hi.get_d()) << ','
        << verdict_code(s.lo_verdict) << ',' << verdict_code(s.hi_verdict) << '\n';
  }
}

}  // namespace atomembed
