#include "atomembed/io.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace atomembed;
using nlohmann::json;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

AtomSubset subset(std::vector<std::size_t> idx) { return AtomSubset::from_indices(idx); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(ParseMeasure, ExactStrings) {
  const auto m = parse_measure(R"({"weights": ["1/2", "1/3", "1/6"]})");
  ASSERT_TRUE(std::holds_alternative<ExactMeasure>(m));
  const auto& e = std::get<ExactMeasure>(m);
  EXPECT_EQ(e[0], q(1, 2));
  EXPECT_EQ(e[2], q(1, 6));
  EXPECT_TRUE(e.normalized());
}

TEST(ParseMeasure, StringSelectsExactAndIntegersJoin) {
  const auto m = parse_measure(R"({"weights": [1, "3/2", 2]})");
  ASSERT_TRUE(std::holds_alternative<ExactMeasure>(m));
  EXPECT_EQ(std::get<ExactMeasure>(m)[1], q(3, 2));
  const auto forced = parse_measure(R"({"weights": [1, 2, 3]})", true);
  ASSERT_TRUE(std::holds_alternative<ExactMeasure>(forced));
  EXPECT_EQ(std::get<ExactMeasure>(forced)[2], 3);
}

TEST(ParseMeasure, FloatNumbers) {
  const auto m = parse_measure(R"({"weights": [0.1, 0.2, 0.7]})");
  ASSERT_TRUE(std::holds_alternative<FloatMeasure>(m));
  EXPECT_DOUBLE_EQ(std::get<FloatMeasure>(m)[0], 0.1);
  EXPECT_TRUE(std::holds_alternative<FloatMeasure>(parse_measure(R"({"weights": [1, 2]})")));
}

TEST(ParseMeasure, ModeConflict) {
  try {
    parse_measure(R"({"weights": [0.1, 0.2, 0.7]})", true);
    FAIL() << "expected ModeConflictError";
  } catch (const ModeConflictError& e) {
    EXPECT_NE(std::string(e.what()).find("weight 0"), std::string::npos);
  }
  EXPECT_THROW(parse_measure(R"({"weights": ["1/2", 0.5]})"), ModeConflictError);
}

TEST(ParseMeasure, MalformedInput) {
  EXPECT_THROW(parse_measure("{\"weights\": [1, 2"), InputError);
  EXPECT_THROW(parse_measure("[1, 2, 3]"), InputError);
  EXPECT_THROW(parse_measure(R"({"w": [1, 2]})"), InputError);
  EXPECT_THROW(parse_measure(R"({"weights": 3})"), InputError);
  EXPECT_THROW(parse_measure(R"({"weights": [1, true]})"), InputError);
  EXPECT_THROW(parse_measure(R"({"weights": ["1/0", "1"]})"), InputError);
  EXPECT_THROW(parse_measure(R"({"weights": ["x", "1"]})"), InputError);
  EXPECT_THROW(parse_measure(R"({"weights": [1, 2], "normalized": "yes"})"), InputError);
  EXPECT_THROW(parse_measure(R"({"weights": [1, -2]})"), MeasureError);
  EXPECT_THROW(parse_measure(R"({"weights": ["1", "0"]})"), MeasureError);
  EXPECT_THROW(parse_measure(R"({"weights": []})"), MeasureError);
}

TEST(ParseMeasure, NormalizedFlag) {
  const auto m = parse_measure(R"({"weights": [1, 2, 5], "normalized": true})", true);
  const auto& e = std::get<ExactMeasure>(m);
  EXPECT_EQ(e[0], q(1, 8));
  EXPECT_EQ(e[2], q(5, 8));
  const auto raw = parse_measure(R"({"weights": ["1", "2", "5"]})");
  EXPECT_FALSE(std::get<ExactMeasure>(raw).normalized());
}

TEST(MeasureJson, RoundTrip) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = oracle::random_rationals(gen, 2 + trial % 9);
    const Measure m = validate_measure(w);
    const auto back = parse_measure(measure_to_json(m).dump());
    EXPECT_EQ(std::get<ExactMeasure>(back).weights().size(), w.size());
    for (std::size_t i = 0; i < w.size(); ++i) EXPECT_EQ(std::get<ExactMeasure>(back)[i], w[i]);

    const auto f = oracle::random_positive(gen, 3 + trial % 7);
    const auto fb = parse_measure(measure_to_json(validate_measure(f)).dump());
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(std::get<FloatMeasure>(fb)[i], f[i]);
  }
}

TEST(ReportJson, Fields) {
  const auto m = parse_measure(R"({"weights": ["1","5","10","10","5","1"]})");
  const auto report = is_flat(std::get<ExactMeasure>(m));
  const json j = report_to_json(report);
  EXPECT_FALSE(j["flat"].get<bool>());
  EXPECT_TRUE(j["conclusive"].get<bool>());
  EXPECT_EQ(j["witness"], json({0, 1, 2, 3}));
  EXPECT_EQ(j["mode"], "exact");
  EXPECT_EQ(j["checked_count"].get<std::size_t>(), report.checked_count);
  ASSERT_FALSE(j["subset_values"].empty());
  const auto& first = j["subset_values"][0];
  EXPECT_EQ(first["subset"], json({0, 1, 2, 3}));
  const Rational v = parse_rational(first["value"].get<std::string>());
  EXPECT_EQ(v, oracle::brute_reduced(std::vector<Rational>{1, 5, 10, 10}));
  EXPECT_EQ(first["sign"], "negative");
}

TEST(ClassificationJson, Fields) {
  Classification c;
  c.verdict = Verdict::embeddable;
  c.dimension = 3;
  json j = classification_to_json(c);
  EXPECT_EQ(j["verdict"], "Embeddable");
  EXPECT_EQ(j["code"], "E");
  EXPECT_EQ(j["dimension"], 3);
  EXPECT_FALSE(j.contains("witness"));
  c.verdict = Verdict::not_embeddable;
  c.witness = subset({1, 2, 4, 5});
  j = classification_to_json(c);
  EXPECT_EQ(j["code"], "N");
  EXPECT_FALSE(j.contains("dimension"));
  EXPECT_EQ(j["witness"], json({1, 2, 4, 5}));
}

TEST(Csv, SweepFormat) {
  SweepRow r;
  r.parameter = q(1, 2);
  r.verdict = Verdict::not_embeddable;
  r.dimension = 3;
  r.worst_value = -1.5;
  r.worst_subset = subset({0, 1, 2, 3});
  r.witness = subset({0, 1, 2, 3});
  std::vector<SweepRow> rows{r};
  std::ostringstream s;
  write_sweep_csv(s, rows);
  const auto l = lines(s.str());
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "parameter,verdict,dimension,worst_value,worst_subset,witness");
  EXPECT_EQ(l[1], "0.5,N,3,-1.5,0 1 2 3,0 1 2 3");
}

TEST(Csv, SamplesAndBisection) {
  const auto run = sample_simplex(3, 5, 3, 1);
  std::ostringstream s;
  write_samples_csv(s, run);
  const auto l = lines(s.str());
  ASSERT_EQ(l.size(), 6u);
  EXPECT_EQ(l[0], "index,verdict,x0,x1,x2,x3,witness");
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_EQ(l[i].substr(0, 2), std::to_string(i - 1) + ",");

  BisectionResult b;
  b.trace.push_back({q(0), q(1), Verdict::embeddable, Verdict::not_embeddable});
  b.trace.push_back({q(1, 2), q(1), Verdict::embeddable, Verdict::not_embeddable});
  std::ostringstream t;
  write_bisection_csv(t, b);
  EXPECT_EQ(t.str(), "iteration,lo,hi,lo_verdict,hi_verdict\n0,0,1,E,N\n1,0.5,1,E,N\n");
}

TEST(Csv, Coordinates) {
  EmbeddingResult e;
  e.coordinates = Eigen::MatrixXd{{0, 0}, {1, 0}, {0, 2.5}};
  std::ostringstream s;
  write_coordinates_csv(s, e);
  EXPECT_EQ(s.str(), "x1,x2\n0,0\n1,0\n0,2.5\n");
}
