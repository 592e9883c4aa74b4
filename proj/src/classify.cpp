#include "atomembed/classify.hpp"

#include <variant>

namespace atomembed {

char verdict_code(Verdict v) {
  switch (v) {
    case Verdict::embeddable: return 'E';
    case Verdict::not_embeddable: return 'N';
    case Verdict::indeterminate: return 'I';
  }
  return 'I';
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::embeddable: return "Embeddable";
    case Verdict::not_embeddable: return "NotEmbeddable";
    case Verdict::indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

template <Scalar T>
Classification classify(const FlatnessReport<T>& report) {
  Classification c;
  if (report.witness) {
    c.verdict = Verdict::not_embeddable;
    c.witness = report.witness;
    c.dimension = dimension(report);
    return c;
  }
  if (!report.conclusive()) {
    c.verdict = Verdict::indeterminate;
    c.reason = std::to_string(report.indeterminate.size()) +
               " simplices fall inside the float sign margin and exact recomputation is disabled";
    return c;
  }
  c.verdict = Verdict::embeddable;
  c.dimension = dimension(report);
  return c;
}

template Classification classify(const FlatnessReport<double>&);
template Classification classify(const FlatnessReport<Rational>&);

Classification classify(const Measure& m, const FlatnessOptions& options) {
  return std::visit([&](const auto& mm) { return classify(mm, options); }, m);
}

}  // namespace atomembed
