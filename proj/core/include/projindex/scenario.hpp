#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "projindex/index_engine.hpp"

namespace projindex {

enum class TaskKind { fractional_index, moments, full_distribution, mms_projective, projective_dirac, atiyah_pairing };

std::string_view task_name(TaskKind kind);
std::optional<TaskKind> task_from_name(std::string_view name);

struct TaskRequest {
  TaskKind kind = TaskKind::fractional_index;
  std::optional<GroupElement> gamma;    // fractional_index, moments; identity when absent
  std::optional<int> max_degree;        // moment cutoff in s-degree; dim M / 2 when absent
  std::optional<Character> character;   // mms_projective
  std::vector<int> lambda;              // atiyah_pairing
};

/// Expected value of one task, as a JSON fragment in machine output format.
/// Objects match by subset: listed keys must be present and equal.
struct Expectation {
  std::size_t task = 0;
  std::string value_json;
};

/// How a symbol component was written in the scenario file.
struct SymbolSource {
  Character character;
  std::string preset;      // "dirac", "dolbeault" or empty
  std::string expression;  // used when preset is empty
};

struct Scenario {
  std::string name;
  std::string description;
  ModelPtr model;
  std::vector<BundleData> bundles;
  std::optional<std::size_t> tangent;  // index into bundles
  FiniteAbelianGroup group;
  std::vector<InvariantGenerator> generators;
  std::optional<WeightSystem> weights;
  std::vector<SymbolSource> symbol_sources;
  SymbolData symbol;
  std::vector<TaskRequest> tasks;
  std::vector<Expectation> expectations;

  /// A-hat of the tangent bundle, or 1 when no tangent bundle is declared.
  CohClass a_hat() const;
  IndexSetting setting() const;
};

/// Reads a JSON scenario. Throws ParseError (with line/column for syntax
/// errors) or ValidationError naming the violated invariant.
Scenario parse_scenario(std::string_view text);

/// Canonical JSON text of a scenario with every class written in normal form.
/// parse_scenario(scenario_to_text(s)) is equivalent to s.
std::string scenario_to_text(const Scenario& s);

using ResultValue = std::variant<Cyclotomic, MomentTable, IndexDistribution>;

struct TaskResult {
  std::size_t index = 0;
  TaskRequest request;
  ResultValue value;
};

struct RunOptions {
  std::optional<int> max_degree;  // overrides every moment cutoff
  /// Task names or decimal indices; empty runs all tasks.
  std::vector<std::string> task_filter;
};

/// Runs the selected tasks in order. Engine errors are rethrown with the task
/// index prepended, keeping their type.
std::vector<TaskResult> run(const Scenario& s, const RunOptions& options = {});

enum class OutputFormat { human, machine };

/// Deterministic rendering. Machine output is JSON with rationals as "p/q"
/// strings and irrational cyclotomics as {"order": N, "coefficients": [...]}.
std::string emit(const Scenario& s, const std::vector<TaskResult>& results, OutputFormat format);

/// One message per expectation that does not match; expectations for tasks
/// that were filtered out are skipped.
std::vector<std::string> check_expectations(const Scenario& s, const std::vector<TaskResult>& results);

/// Built-in example scenarios, in a fixed order.
std::vector<std::string> builtin_names();
/// Scenario text of a built-in; throws std::out_of_range for unknown names.
std::string_view builtin_text(std::string_view name);

}  // namespace projindex
