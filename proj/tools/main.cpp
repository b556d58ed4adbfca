// projindex: evaluates index distributions described by scenario files.

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "projindex/scenario.hpp"

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kMismatch = 2, kInvariant = 3 };

struct Outcome {
  std::string out;
  std::string err;
  int code = kOk;
};

std::string load(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  for (const auto& name : projindex::builtin_names())
    if (name == source) return std::string(projindex::builtin_text(name));
  throw projindex::ValidationError("no such file or built-in scenario");
}

Outcome process(const std::string& source, const projindex::RunOptions& options, projindex::OutputFormat format,
                bool check, bool emit_scenario) {
  Outcome o;
  try {
    const projindex::Scenario s = projindex::parse_scenario(load(source));
    if (emit_scenario) {
      o.out = projindex::scenario_to_text(s);
      return o;
    }
    const auto results = projindex::run(s, options);
    o.out = projindex::emit(s, results, format);
    if (check) {
      for (const auto& msg : projindex::check_expectations(s, results)) {
        o.err += "mismatch: " + msg + "\n";
        o.code = kMismatch;
      }
    }
  } catch (const projindex::InvariantViolation& e) {
    o.err = source + ": internal invariant violation: " + e.what() + "\n";
    o.code = kInvariant;
  } catch (const projindex::Error& e) {
    o.err = source + ": error: " + e.what() + "\n";
    o.code = kInputError;
  } catch (const std::exception& e) {
    o.err = source + ": unexpected failure: " + e.what() + "\n";
    o.code = kInvariant;
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact index distributions of projective and transversally elliptic operators"};
  std::vector<std::string> sources;
  std::vector<std::string> tasks;
  std::optional<int> max_degree;
  std::string format = "human";
  bool check = false, list = false, all = false, emit_scenario = false;

  app.add_option("scenarios", sources, "Scenario files or built-in scenario names");
  app.add_option("--task", tasks, "Run only tasks with this name or index (repeatable)");
  app.add_option("--max-degree", max_degree, "Moment cutoff in s-degree for every moment task")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--check", check, "Verify the expect blocks; exit 2 on mismatch");
  app.add_flag("--list-builtins", list, "Print the built-in scenario names");
  app.add_flag("--all-builtins", all, "Run every built-in scenario");
  app.add_flag("--emit-scenario", emit_scenario, "Print the canonical scenario text instead of running it");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  if (list) {
    for (const auto& name : projindex::builtin_names()) std::cout << name << "\n";
    return kOk;
  }
  if (all)
    for (const auto& name : projindex::builtin_names()) sources.push_back(name);
  if (sources.empty()) {
    std::cerr << app.help();
    return kInputError;
  }

  const projindex::RunOptions options{max_degree, tasks};
  const auto fmt = format == "machine" ? projindex::OutputFormat::machine : projindex::OutputFormat::human;

  std::vector<std::future<Outcome>> jobs;
  for (const auto& src : sources)
    jobs.push_back(std::async(std::launch::async, process, src, options, fmt, check, emit_scenario));

  int code = kOk;
  for (auto& job : jobs) {
    const Outcome o = job.get();
    std::cout << o.out;
    std::cerr << o.err;
    code = std::max(code, o.code);
  }
  return code;
}
