#include <future>

#include <gtest/gtest.h>

#include "projindex/expression.hpp"
#include "projindex/scenario.hpp"

using namespace projindex;

namespace {

Scenario builtin(const char* name) { return parse_scenario(builtin_text(name)); }

const char* kMinimal = R"({
  "name": "mini",
  "manifold": {"dimension": 2, "generators": [{"name": "x", "degree": 2}], "relations": ["x^2 -> 0"],
               "fundamental": {"monomial": "x"}},
  "group": {"cyclic_orders": [3]},
  "symbol": [{"character": [1], "class": "2*x"}],
  "tasks": [{"task": "fractional_index", "gamma": [1]}]
})";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  if (pos == std::string::npos) throw std::logic_error("fixture text lacks " + from);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST(Scenario, BuiltinsAreListedInOrder) {
  const auto names = builtin_names();
  ASSERT_GE(names.size(), 8u);
  EXPECT_EQ(names.front(), "point_trivial");
  EXPECT_THROW(builtin_text("nope"), std::out_of_range);
}

TEST(Scenario, EveryBuiltinPassesItsExpectations) {
  for (const auto& name : builtin_names()) {
    const Scenario s = parse_scenario(builtin_text(name));
    const auto results = run(s);
    EXPECT_EQ(results.size(), s.tasks.size()) << name;
    EXPECT_FALSE(s.expectations.empty()) << name;
    const auto failures = check_expectations(s, results);
    EXPECT_TRUE(failures.empty()) << name << ": " << (failures.empty() ? "" : failures.front());
  }
}

TEST(Scenario, PointTrivial) {
  const Scenario s = builtin("point_trivial");
  EXPECT_EQ(s.model->dimension(), 0);
  ASSERT_EQ(s.tasks.size(), 1u);
  const auto r = run(s);
  EXPECT_EQ(std::get<Cyclotomic>(r[0].value), Cyclotomic(1));
}

TEST(Scenario, HopfHasTorusWeights) {
  const Scenario s = builtin("hopf_riemann_roch");
  EXPECT_EQ(s.model->dimension(), 2);
  ASSERT_TRUE(s.weights.has_value());
  EXPECT_EQ(s.weights->kind, WeightSystem::Kind::torus);
  EXPECT_TRUE(s.group.is_trivial());
  EXPECT_EQ(format_class(s.symbol.components.begin()->second), "1 + x");
}

TEST(Scenario, RoundTripPreservesNormalForms) {
  for (const auto& name : builtin_names()) {
    const Scenario a = parse_scenario(builtin_text(name));
    const std::string text = scenario_to_text(a);
    const Scenario b = parse_scenario(text);
    EXPECT_EQ(scenario_to_text(b), text) << name;
    ASSERT_EQ(a.symbol.components.size(), b.symbol.components.size()) << name;
    for (auto ia = a.symbol.components.begin(), ib = b.symbol.components.begin(); ia != a.symbol.components.end();
         ++ia, ++ib) {
      EXPECT_EQ(ia->first, ib->first);
      EXPECT_EQ(format_class(ia->second), format_class(ib->second)) << name;
    }
    EXPECT_EQ(format_class(a.a_hat()), format_class(b.a_hat())) << name;
    EXPECT_EQ(emit(a, run(a), OutputFormat::machine), emit(b, run(b), OutputFormat::machine)) << name;
  }
}

TEST(Scenario, MachineOutputIsDeterministic) {
  for (const auto& name : builtin_names()) {
    const Scenario s = parse_scenario(builtin_text(name));
    EXPECT_EQ(emit(s, run(s), OutputFormat::machine), emit(s, run(s), OutputFormat::machine));
    EXPECT_EQ(emit(s, run(s), OutputFormat::human), emit(s, run(s), OutputFormat::human));
  }
}

TEST(Scenario, MachineSerialization) {
  const Scenario s = parse_scenario(kMinimal);
  const std::string out = emit(s, run(s), OutputFormat::machine);
  EXPECT_NE(out.find("\"scenario\": \"mini\""), std::string::npos);
  EXPECT_NE(out.find("\"order\": 3"), std::string::npos);
  EXPECT_NE(out.find("\"0\",\n          \"2\""), std::string::npos) << out;
  const Scenario dirac = builtin("cp2_projective_dirac");
  EXPECT_NE(emit(dirac, run(dirac), OutputFormat::machine).find("\"value\": \"-1/8\""), std::string::npos);
}

TEST(Scenario, EmptyTaskList) {
  const Scenario s = parse_scenario(replace(kMinimal, R"([{"task": "fractional_index", "gamma": [1]}])", "[]"));
  const auto results = run(s);
  EXPECT_TRUE(results.empty());
  EXPECT_NE(emit(s, results, OutputFormat::machine).find("\"results\": []"), std::string::npos);
}

TEST(Scenario, TaskFilterAndDegreeOverride) {
  const Scenario s = builtin("cp2_projective_dirac");
  RunOptions o;
  o.task_filter = {"moments"};
  const auto r = run(s, o);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].index, 2u);
  o.task_filter = {"1"};
  ASSERT_EQ(run(s, o).size(), 1u);
  o.task_filter = {"2"};
  o.max_degree = 0;
  EXPECT_EQ(std::get<MomentTable>(run(s, o)[0].value).entries.size(), 1u);
}

TEST(Scenario, JsonSyntaxErrorHasLineAndColumn) {
  try {
    (void)parse_scenario("{\n  \"name\": \"x\",\n  \"manifold\": [,]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 16);
  }
}

TEST(Scenario, ValidationErrorsNameTheInvariant) {
  auto expect_validation = [](const std::string& text, const std::string& needle) {
    try {
      (void)parse_scenario(text);
      ADD_FAILURE() << "accepted scenario expected to fail with " << needle;
    } catch (const ValidationError& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  expect_validation(replace(kMinimal, "x^2 -> 0", "x^2 -> x"), "degree-homogeneous");
  expect_validation(replace(kMinimal, "\"character\": [1]", "\"character\": [3]"), "symbol[0].character");
  expect_validation(replace(kMinimal, "\"gamma\": [1]", "\"gamma\": [1, 0]"), "tasks[0].gamma");
  expect_validation(replace(kMinimal, "\"cyclic_orders\": [3]",
                            R"("cyclic_orders": [3], "invariant_generators": [{"name": "c", "s_degree": 2, "image": "x"}])"),
                    "homogeneous of degree 4");
  expect_validation(replace(kMinimal, "\"monomial\": \"x\"", "\"monomial\": \"x^2\""), "fundamental");
  expect_validation(replace(kMinimal, "\"class\": \"2*x\"", "\"preset\": \"dirac\""), "tangent");
}

TEST(Scenario, StructuralErrorsAreParseErrors) {
  EXPECT_THROW(parse_scenario("[]"), ParseError);
  EXPECT_THROW(parse_scenario(replace(kMinimal, "\"name\": \"mini\",", "")), ParseError);
  EXPECT_THROW(parse_scenario(replace(kMinimal, "\"fractional_index\"", "\"frobnicate\"")), ParseError);
  EXPECT_THROW(parse_scenario(replace(kMinimal, "\"2*x\"", "\"2*y\"")), ParseError);
  EXPECT_THROW(parse_scenario(replace(kMinimal, "\"2*x\"", "\"2**x\"")), ParseError);
  EXPECT_THROW(parse_scenario(replace(kMinimal, "\"dimension\": 2", "\"dimension\": \"two\"")), ParseError);
}

TEST(Scenario, EngineErrorsCarryTaskIndex) {
  const Scenario s = parse_scenario(replace(kMinimal, R"({"task": "fractional_index", "gamma": [1]})",
                                            R"({"task": "fractional_index"}, {"task": "atiyah_pairing", "lambda": [1]})"));
  try {
    (void)run(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()).rfind("task 1 (atiyah_pairing):", 0), 0u) << e.what();
  }
}

TEST(Scenario, MismatchIsReported) {
  const Scenario s = parse_scenario(replace(kMinimal, "\"tasks\"", R"("expect": [{"task": 0, "value": "1"}], "tasks")"));
  const auto failures = check_expectations(s, run(s));
  ASSERT_EQ(failures.size(), 1u);
  EXPECT_NE(failures[0].find("task 0"), std::string::npos);
}

TEST(Scenario, ConcurrentRunsMatchSequentialOutput) {
  std::vector<std::string> sequential;
  for (const auto& name : builtin_names()) {
    const Scenario s = parse_scenario(builtin_text(name));
    sequential.push_back(emit(s, run(s), OutputFormat::machine));
  }
  std::vector<std::future<std::string>> jobs;
  for (int round = 0; round < 3; ++round)
    for (const auto& name : builtin_names())
      jobs.push_back(std::async(std::launch::async, [name] {
        const Scenario s = parse_scenario(builtin_text(name));
        return emit(s, run(s), OutputFormat::machine);
      }));
  for (std::size_t i = 0; i < jobs.size(); ++i) EXPECT_EQ(jobs[i].get(), sequential[i % sequential.size()]);
}
