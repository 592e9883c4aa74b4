// Acceptance suite: one PASS/FAIL line per criterion, plus INFO lines.
// Exit status is the number of failing criteria.
#include "atomembed/closed_form.hpp"
#include "atomembed/cone.hpp"
#include "atomembed/determinant.hpp"
#include "atomembed/family.hpp"
#include "atomembed/gram.hpp"
#include "atomembed/io.hpp"
#include "atomembed/metric.hpp"
#include "oracle.hpp"

#include <Eigen/Eigenvalues>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace atomembed;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void info(const std::string& what) { notes.push_back("info " + what); }
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

Rational pow2(long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= 2;
  return r;
}

Outcome criterion1() {
  Outcome o;
  const std::vector<Rational> z{1, q(1, 5), q(1, 10), q(1, 10), q(1, 5), 1};
  const Rational value = reciprocal_form(std::span<const Rational>(z));
  o.require(value == q(-41, 25), "criterion on z = (1,1/5,1/10,1/10,1/5,1) is " + to_string(value) + ", want -41/25");
  const std::vector<Rational> counts{1, 5, 10, 10, 5, 1};
  o.require(oracle::brute_reduced(counts) == q(-41, 25), "brute-force criterion on the counts agrees");

  const auto m = std::get<ExactMeasure>(realize(BinomialFamily{5, q(1, 2)}));
  const auto report = is_flat(m);
  const auto c = classify(report);
  o.require(c.verdict == Verdict::not_embeddable, std::string("verdict ") + std::string(verdict_name(c.verdict)));
  const AtomSubset full = AtomSubset::prefix(6);
  std::string wit = c.witness ? c.witness->to_string() : "none";
  o.require(c.witness && *c.witness == full, "witness " + wit + " equals the full 6-atom set");

  std::size_t failing_small = 0, small = 0;
  for (const auto& sv : report.subset_values) {
    if (sv.subset.size() < 4 || sv.subset.size() > 5) continue;
    ++small;
    if (sv.sign == Sign::negative) ++failing_small;
  }
  o.require(failing_small == 0,
            "all size-4 and size-5 subsets pass (" + std::to_string(failing_small) + " of " + std::to_string(small) +
                " are negative)");
  const auto oracle_witness = oracle::first_failing_subset(std::vector<Rational>(m.weights().begin(), m.weights().end()));
  std::string ow;
  for (auto i : oracle_witness) ow += std::to_string(i) + " ";
  o.info("oracle first failing subset: { " + ow + "}");
  o.info("full-set criterion sign " + std::string(to_string(criterion_sign(std::span<const Rational>(counts)))));
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst_rel = 0, worst_corrected = 0, worst_residual = 0;
  bool exact_stated = true, exact_corrected = true, classified = true;
  for (std::size_t k = 2; k <= 10; ++k) {
    const long n = static_cast<long>(k);
    const Rational x0 = q(1, n + 1);
    const std::vector<Rational> xs(k + 1, x0);
    const auto exact_m = std::get<ExactMeasure>(realize(UniformFamily{k + 1}));
    const auto float_m = validate_measure(std::vector<double>(k + 1, 1.0 / (k + 1)));
    for (const auto& c : {classify(exact_m), classify(float_m)})
      classified = classified && c.verdict == Verdict::embeddable && c.dimension == k;

    Rational x2n = 1;
    for (long i = 0; i < 2 * n; ++i) x2n *= x0;
    const Rational stated = pow2(n - 1) * 2 * n * x2n;
    const Rational corrected = pow2(n - 1) * 2 * (n + 1) * x2n;
    const Rational got = det_closed_form(std::span<const Rational>(xs));
    exact_stated = exact_stated && got == stated;
    exact_corrected = exact_corrected && got == corrected;

    const auto xd = to_double(xs);
    const double fd = det_closed_form(std::span<const double>(xd));
    worst_rel = std::max(worst_rel, oracle::relative_error(fd, stated.get_d()));
    worst_corrected = std::max(worst_corrected, oracle::relative_error(fd, corrected.get_d()));

    const auto e = embed(float_m);
    worst_residual = std::max(worst_residual, e.max_residual);
    o.require(e.dimension == k, "k=" + std::to_string(k) + " embedding dimension " + std::to_string(e.dimension));
  }
  o.require(classified, "uniform k=2..10 classify Embeddable(k) in exact and float mode");
  o.require(exact_stated, "closed form equals 2^(n-1)*2n*x0^(2n) exactly");
  o.require(worst_rel <= 1e-12, "float closed form vs 2^(n-1)*2n*x0^(2n): worst relative error " + fmt(worst_rel));
  o.require(worst_residual <= 1e-8, "worst isometry residual " + fmt(worst_residual));
  o.info(std::string("closed form equals 2^(n-1)*2(n+1)*x0^(2n) exactly: ") + (exact_corrected ? "yes" : "no") +
         ", float relative error " + fmt(worst_corrected));
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::mt19937_64 gen(20260301);
  std::size_t exact_bad = 0, float_bad = 0, tuples = 0;
  double worst = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t size = 3 + static_cast<std::size_t>(trial) % 6;
    ++tuples;
    const auto xr = oracle::random_rationals(gen, size);
    const auto mr = validate_measure(xr);
    const auto order = oracle::all_points(xr);
    const Rational closed = det_closed_form(std::span<const Rational>(xr));
    const Rational numeric = det_numeric(gram_matrix(atom_metric(mr), std::span<const std::size_t>(order)).entries);
    const Rational lemma = det_rank_one_route(std::span<const Rational>(xr));
    if (closed != numeric || closed != lemma) ++exact_bad;

    const auto xf = oracle::random_positive(gen, size);
    const auto mf = validate_measure(xf);
    const double c = det_closed_form(std::span<const double>(xf));
    const double nm = det_numeric(gram_matrix(atom_metric(mf), std::span<const std::size_t>(order)).entries);
    const double lm = det_rank_one_route(std::span<const double>(xf));
    const double err = std::max(oracle::relative_error(c, nm), oracle::relative_error(c, lm));
    worst = std::max(worst, err);
    if (err > 1e-9) ++float_bad;
  }
  o.require(exact_bad == 0, std::to_string(tuples) + " rational tuples, " + std::to_string(exact_bad) + " disagreements");
  o.require(float_bad == 0, std::to_string(tuples) + " float tuples, worst relative error " + fmt(worst));
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 gen(20260302);
  std::size_t nonpositive = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto xr = oracle::random_rationals(gen, 3, 1000, 1000);
    const auto xf = oracle::random_positive(gen, 3, 1e-3, 1e3);
    if (det_closed_form(std::span<const Rational>(xr)) <= 0) ++nonpositive;
    if (!(det_closed_form(std::span<const double>(xf)) > 0)) ++nonpositive;
  }
  o.require(nonpositive == 0, "4000 random triples, " + std::to_string(nonpositive) + " non-positive determinants");

  std::uniform_real_distribution<double> log_lambda(std::log(0.01), std::log(100.0));
  double worst = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t size = 3 + static_cast<std::size_t>(trial) % 6;
    const auto x = oracle::random_positive(gen, size);
    const double lambda = std::exp(log_lambda(gen));
    std::vector<double> scaled;
    for (double v : x) scaled.push_back(lambda * v);
    const double lhs = det_closed_form(std::span<const double>(scaled));
    const double rhs = std::pow(lambda, 2.0 * static_cast<double>(size - 1)) * det_closed_form(std::span<const double>(x));
    worst = std::max(worst, oracle::relative_error(lhs, rhs));
  }
  o.require(worst <= 1e-10, "homogeneity over 1000 tuples, worst relative error " + fmt(worst));

  std::size_t mismatched = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = oracle::random_rationals(gen, 3 + static_cast<std::size_t>(trial) % 6);
    const int a = sgn(reduced_criterion(std::span<const Rational>(x)));
    const int b = sgn(det_closed_form(std::span<const Rational>(x)));
    if (a != b) ++mismatched;
    const auto xf = oracle::random_positive(gen, 3 + static_cast<std::size_t>(trial) % 6);
    if (oracle::sign(reduced_criterion(std::span<const double>(xf))) !=
        oracle::sign(det_closed_form(std::span<const double>(xf))))
      ++mismatched;
  }
  o.require(mismatched == 0, "sign(reduced) = sign(closed form) on 2000 tuples, " + std::to_string(mismatched) + " mismatches");
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 gen(20260303);
  for (std::size_t n = 3; n <= 7; ++n) {
    std::size_t stated_bad = 0, derived_bad = 0, inside = 0;
    const std::size_t tuples = 1000;
    for (std::size_t t = 0; t < tuples; ++t) {
      // Spread the tuples so both sides of the boundary are well populated.
      const auto x = oracle::random_positive(gen, n + 1, 0.02, 1.0);
      std::vector<Rational> xr;
      for (double v : x) xr.emplace_back(v);
      const bool truth = reduced_criterion(std::span<const Rational>(xr)) >= 0;
      inside += truth;
      std::vector<double> z;
      for (double v : x) z.push_back(1.0 / v);
      const double stated_cos = std::sqrt(static_cast<double>(n - 2) / static_cast<double>(n));
      if (inside_cone(z, stated_cos) != truth) ++stated_bad;
      if (cone_membership(std::span<const double>(x)) != truth) ++derived_bad;
    }
    o.require(stated_bad == 0, "n=" + std::to_string(n) + ": cos(alpha)=sqrt((n-2)/n) disagrees on " +
                                   std::to_string(stated_bad) + " of " + std::to_string(tuples) + " tuples (" +
                                   std::to_string(inside) + " inside)");
    o.info("n=" + std::to_string(n) + ": cos^2(alpha)=(n-1)/(n+1) disagrees on " + std::to_string(derived_bad));

    const Matrix<double> a = cone_form_matrix<double>(n);
    Eigen::MatrixXd dense(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    const auto& ev = solver.eigenvalues();
    double err = std::abs(ev(0) + 2.0);
    for (Eigen::Index i = 1; i < ev.size(); ++i) err = std::max(err, std::abs(ev(i) - static_cast<double>(n - 1)));
    o.require(err <= 1e-9, "n=" + std::to_string(n) + ": spectrum {n-1 x n, -2}, max deviation " + fmt(err));
  }
  return o;
}

// Gram determinant of {bottom, a, a', top} from a distance table built here.
Rational four_point_det(const std::vector<Rational>& w) {
  const std::vector<unsigned> pts{0b00, 0b01, 0b10, 0b11};
  auto dist = [&](unsigned x, unsigned y) {
    Rational s = 0;
    for (unsigned i = 0; i < 2; ++i)
      if (((x ^ y) >> i) & 1u) s += w[i];
    return s;
  };
  oracle::Grid<Rational> g(3, std::vector<Rational>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational a = dist(pts[0], pts[i + 1]), b = dist(pts[0], pts[j + 1]), c = dist(pts[i + 1], pts[j + 1]);
      g[i][j] = (a * a + b * b - c * c) / 2;
    }
  return oracle::leibniz_det(g);
}

Rational library_four_point_det(const std::vector<Rational>& w) {
  const auto m = validate_measure(w);
  const std::vector<AtomSubset> pts{AtomSubset{}, AtomSubset(0b01), AtomSubset(0b10), AtomSubset(0b11)};
  const auto d = powerset_metric(m, std::span<const AtomSubset>(pts));
  const std::vector<std::size_t> order{0, 1, 2, 3};
  return det_numeric(gram_matrix(d, std::span<const std::size_t>(order)).entries);
}

Outcome criterion6() {
  Outcome o;
  const std::vector<Rational> half{q(1, 2), q(1, 2)};
  const Rational ref = four_point_det(half), lib = library_four_point_det(half);
  o.require(ref == q(-1, 4) && lib == ref, "m=(1/2,1/2): library " + to_string(lib) + ", oracle " + to_string(ref));
  std::mt19937_64 gen(20260304);
  std::uniform_int_distribution<long> num(1, 999);
  std::size_t bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Rational t = q(num(gen), 1000);
    const std::vector<Rational> w{t, 1 - t};
    const Rational v = library_four_point_det(w);
    if (!(v < 0) || v != four_point_det(w)) ++bad;
  }
  o.require(bad == 0, "100 random t in (0,1): " + std::to_string(bad) + " non-negative or mismatched");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::uint64_t seed = 20261014;
  const auto a = sample_simplex(5, 2000, seed, 1);
  const auto b = sample_simplex(5, 2000, seed, 1);
  const auto c = sample_simplex(5, 2000, seed, 4);
  auto csv = [](const SampleRun& r) {
    std::ostringstream s;
    write_samples_csv(s, r);
    return s.str();
  };
  const std::string ca = csv(a);
  o.require(ca == csv(b), "two runs with jobs=1 are identical");
  o.require(ca == csv(c), "jobs=1 and jobs=4 are identical");
  o.require(a.summary.embeddable > 0 && a.summary.not_embeddable > 0,
            "found " + std::to_string(a.summary.embeddable) + " Embeddable and " +
                std::to_string(a.summary.not_embeddable) + " NotEmbeddable");

  const auto path = mixture_path(realize(UniformFamily{6}), realize(BinomialFamily{5, q(1, 2)}));
  const auto r = bisect_boundary(path, 0, 1);
  const Rational width = r.hi - r.lo;
  o.require(r.lo_verdict != r.hi_verdict && width <= q(1, 1000000),
            "mixture bracket [" + fmt(r.lo.get_d()) + ", " + fmt(r.hi.get_d()) + "], width " + fmt(width.get_d()));
  o.info("flips seen across probes: " + std::to_string(r.flips_detected));
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "binomial(5,1/2) criterion, verdict and witness", 1.0, criterion1},
      {2, "indifference measure closed form and embedding", 5.0, criterion2},
      {3, "determinant oracle equivalence", 0, criterion3},
      {4, "triple positivity, homogeneity, sign agreement", 0, criterion4},
      {5, "cone cross-check and spectrum", 0, criterion5},
      {6, "powerset four-point determinant", 0, criterion6},
      {7, "explorer determinism and mixture bisection", 0, criterion7},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0) o.require(secs < c.budget_s, "runtime " + fmt(secs) + " s < " + fmt(c.budget_s) + " s");
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << fmt(secs)
              << " s)\n";
    for (const auto& n : o.notes) std::cout << "        " << n << '\n';
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures;
}
