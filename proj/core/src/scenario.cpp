#include "projindex/scenario.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "projindex/expression.hpp"

namespace projindex {

using json = nlohmann::ordered_json;

namespace {

constexpr std::pair<TaskKind, std::string_view> kTaskNames[] = {
    {TaskKind::fractional_index, "fractional_index"},
    {TaskKind::moments, "moments"},
    {TaskKind::full_distribution, "full_distribution"},
    {TaskKind::mms_projective, "mms_projective"},
    {TaskKind::projective_dirac, "projective_dirac"},
    {TaskKind::atiyah_pairing, "atiyah_pairing"},
};

[[noreturn]] void malformed(const std::string& path, const std::string& msg) { throw ParseError(path + ": " + msg); }

/// Runs f, prefixing any error message with the JSON path while keeping the error kind.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const EngineError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) malformed(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(path, std::string("missing key '") + key + "'");
  return *it;
}

const json* optional_key(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) malformed(path, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) malformed(path, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) malformed(path, "expected a string");
  return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) malformed(path, "expected an array");
  return j;
}

Rational as_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return at_path(path, [&] { return Rational::parse(j.get<std::string>()); });
  malformed(path, "expected a rational as an integer or a \"p/q\" string");
}

std::vector<int> as_int_tuple(const json& j, const std::string& path) {
  std::vector<int> out;
  const json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(as_int(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

CohClass class_at(const json& j, const ModelPtr& model, const std::string& path) {
  const std::string text = as_string(j, path);
  return at_path(path, [&] { return parse_class(text, model); });
}

std::vector<CohClass> class_list(const json& j, const ModelPtr& model, const std::string& path) {
  std::vector<CohClass> out;
  const json& arr = as_array(j, path);
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(class_at(arr[i], model, path + "[" + std::to_string(i) + "]"));
  return out;
}

ModelPtr parse_manifold(const json& m) {
  const std::string path = "manifold";
  const int dimension = as_int(require(m, "dimension", path), path + ".dimension");

  std::vector<Generator> gens;
  std::vector<std::string> names;
  if (const json* g = optional_key(m, "generators", path)) {
    const json& arr = as_array(*g, path + ".generators");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".generators[" + std::to_string(i) + "]";
      gens.push_back({as_string(require(arr[i], "name", p), p + ".name"), as_int(require(arr[i], "degree", p), p + ".degree")});
      names.push_back(gens.back().name);
    }
  }

  std::vector<Relation> relations;
  if (const json* r = optional_key(m, "relations", path)) {
    const json& arr = as_array(*r, path + ".relations");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = path + ".relations[" + std::to_string(i) + "]";
      const std::string text = as_string(arr[i], p);
      std::size_t arrow = text.find("->");
      std::size_t arrow_len = 2;
      if (arrow == std::string::npos) {
        arrow = text.find("→");
        arrow_len = std::string("→").size();
      }
      if (arrow == std::string::npos) malformed(p, "relation must have the form \"gen^k -> polynomial\"");
      relations.push_back(at_path(p, [&] {
        const RawPolynomial lhs = Expression::parse(text.substr(0, arrow)).to_raw(names);
        const RawPolynomial rhs = Expression::parse(text.substr(arrow + arrow_len)).to_raw(names);
        if (lhs.size() != 1 || lhs.begin()->second != Rational(1))
          throw ValidationError("left side of '" + text + "' must be a pure power of a single generator");
        const auto& e = lhs.begin()->first.exponents;
        const auto nonzero = std::count_if(e.begin(), e.end(), [](int x) { return x != 0; });
        if (nonzero != 1)
          throw ValidationError("left side of '" + text + "' must be a pure power of a single generator");
        const auto gen = static_cast<std::size_t>(std::find_if(e.begin(), e.end(), [](int x) { return x != 0; }) - e.begin());
        return Relation{gen, e[gen], rhs};
      }));
    }
  }

  const json& f = require(m, "fundamental", path);
  const std::string fp = path + ".fundamental";
  const std::string mono_text = as_string(require(f, "monomial", fp), fp + ".monomial");
  const Monomial fundamental = at_path(fp + ".monomial", [&] {
    const RawPolynomial raw = Expression::parse(mono_text).to_raw(names);
    if (raw.size() != 1 || raw.begin()->second != Rational(1))
      throw ValidationError("fundamental class must be a single monomial, got '" + mono_text + "'");
    return raw.begin()->first;
  });
  const json* orient = optional_key(f, "orientation", fp);
  const Rational orientation = orient ? as_rational(*orient, fp + ".orientation") : Rational(1);

  return at_path(path, [&] {
    return ManifoldModel::create(dimension, std::move(gens), std::move(relations), fundamental, orientation);
  });
}

BundleData parse_bundle(const json& b, const ModelPtr& model, const std::string& path) {
  BundleData out;
  out.name = as_string(require(b, "name", path), path + ".name");
  if (const json* r = optional_key(b, "chern_roots", path)) out.roots = class_list(*r, model, path + ".chern_roots");
  if (const json* c = optional_key(b, "chern_classes", path)) out.chern = class_list(*c, model, path + ".chern_classes");
  if (const json* p = optional_key(b, "pontryagin", path)) out.pontryagin = class_list(*p, model, path + ".pontryagin");
  if (const json* r = optional_key(b, "rank", path)) out.rank = as_int(*r, path + ".rank");
  else if (out.roots) out.rank = static_cast<int>(out.roots->size());
  else malformed(path, "missing key 'rank'");
  at_path(path, [&] { out.validate(model); });
  return out;
}

TaskRequest parse_task(const json& t, const std::string& path) {
  TaskRequest req;
  const std::string name = as_string(require(t, "task", path), path + ".task");
  auto kind = task_from_name(name);
  if (!kind) malformed(path + ".task", "unknown task '" + name + "'");
  req.kind = *kind;
  if (const json* g = optional_key(t, "gamma", path)) req.gamma = GroupElement{as_int_tuple(*g, path + ".gamma")};
  if (const json* d = optional_key(t, "max_degree", path)) {
    req.max_degree = as_int(*d, path + ".max_degree");
    if (*req.max_degree < 0) throw ValidationError(path + ".max_degree: must be nonnegative");
  }
  if (const json* c = optional_key(t, "character", path)) req.character = Character{as_int_tuple(*c, path + ".character")};
  if (const json* l = optional_key(t, "lambda", path)) req.lambda = as_int_tuple(*l, path + ".lambda");
  if (req.kind == TaskKind::atiyah_pairing && !optional_key(t, "lambda", path)) malformed(path, "atiyah_pairing needs 'lambda'");
  return req;
}

std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string_view task_name(TaskKind kind) {
  for (const auto& [k, n] : kTaskNames)
    if (k == kind) return n;
  return "unknown";
}

std::optional<TaskKind> task_from_name(std::string_view name) {
  for (const auto& [k, n] : kTaskNames)
    if (n == name) return k;
  return std::nullopt;
}

CohClass Scenario::a_hat() const {
  if (!tangent) return CohClass::constant(model, Rational(1));
  return projindex::a_hat(bundles.at(*tangent), model);
}

IndexSetting Scenario::setting() const { return IndexSetting{model, group, generators, a_hat()}; }

Scenario parse_scenario(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    std::string msg = e.what();
    if (auto pos = msg.find(": syntax error"); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError("scenario is not valid JSON: " + msg, line, col);
  }
  if (!root.is_object()) throw ParseError("scenario must be a JSON object", 1, 1);

  Scenario s;
  s.name = as_string(require(root, "name", "scenario"), "name");
  if (const json* d = optional_key(root, "description", "scenario")) s.description = as_string(*d, "description");
  s.model = parse_manifold(require(root, "manifold", "scenario"));

  if (const json* b = optional_key(root, "bundles", "scenario")) {
    const json& arr = as_array(*b, "bundles");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = "bundles[" + std::to_string(i) + "]";
      s.bundles.push_back(parse_bundle(arr[i], s.model, p));
      if (const json* t = optional_key(arr[i], "tangent", p)) {
        if (!t->is_boolean()) malformed(p + ".tangent", "expected a boolean");
        if (t->get<bool>()) {
          if (s.tangent) throw ValidationError(p + ": only one bundle may be marked as the tangent bundle");
          s.tangent = i;
        }
      }
    }
  }

  if (const json* g = optional_key(root, "group", "scenario")) {
    if (const json* o = optional_key(*g, "cyclic_orders", "group"))
      s.group = at_path("group.cyclic_orders", [&] { return FiniteAbelianGroup(as_int_tuple(*o, "group.cyclic_orders")); });
    if (const json* ig = optional_key(*g, "invariant_generators", "group")) {
      const json& arr = as_array(*ig, "group.invariant_generators");
      for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = "group.invariant_generators[" + std::to_string(i) + "]";
        InvariantGenerator gen{as_string(require(arr[i], "name", p), p + ".name"),
                               as_int(require(arr[i], "s_degree", p), p + ".s_degree"),
                               class_at(require(arr[i], "image", p), s.model, p + ".image")};
        at_path(p, [&] { gen.validate(); });
        for (const auto& other : s.generators)
          if (other.name == gen.name) throw ValidationError(p + ": duplicate invariant generator '" + gen.name + "'");
        s.generators.push_back(std::move(gen));
      }
    }
    if (const json* w = optional_key(*g, "weight_system", "group")) {
      WeightSystem ws;
      const std::string kind = as_string(require(*w, "kind", "group.weight_system"), "group.weight_system.kind");
      if (kind == "torus") ws.kind = WeightSystem::Kind::torus;
      else if (kind == "su2") ws.kind = WeightSystem::Kind::su2;
      else malformed("group.weight_system.kind", "expected \"torus\" or \"su2\"");
      ws.line_classes = class_list(require(*w, "line_classes", "group.weight_system"), s.model, "group.weight_system.line_classes");
      at_path("group.weight_system", [&] { ws.validate(); });
      s.weights = std::move(ws);
    }
  }

  const CohClass ahat = at_path("bundles", [&] { return s.a_hat(); });
  if (const json* sym = optional_key(root, "symbol", "scenario")) {
    const json& arr = as_array(*sym, "symbol");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = "symbol[" + std::to_string(i) + "]";
      SymbolSource src;
      if (const json* c = optional_key(arr[i], "character", p)) src.character = Character{as_int_tuple(*c, p + ".character")};
      else src.character = s.group.trivial_character();
      at_path(p + ".character", [&] { s.group.check(src.character); });
      if (s.symbol.components.count(src.character))
        throw ValidationError(p + ": character " + format_tuple(src.character.exponents) + " appears twice");
      CohClass u(s.model);
      if (const json* preset = optional_key(arr[i], "preset", p)) {
        src.preset = as_string(*preset, p + ".preset");
        if (!s.tangent) throw ValidationError(p + ": preset '" + src.preset + "' needs a bundle marked \"tangent\": true");
        if (src.preset == "dirac") {
          u = inverse_class(ahat);
        } else if (src.preset == "dolbeault") {
          const CohClass td = at_path(p, [&] { return todd_class(s.bundles[*s.tangent], s.model); });
          const CohClass inv = inverse_class(ahat);
          u = td * inv * inv;
        } else {
          malformed(p + ".preset", "unknown preset '" + src.preset + "' (expected \"dirac\" or \"dolbeault\")");
        }
      } else {
        src.expression = as_string(require(arr[i], "class", p), p + ".class");
        u = class_at(arr[i]["class"], s.model, p + ".class");
      }
      s.symbol.components.emplace(src.character, std::move(u));
      s.symbol_sources.push_back(std::move(src));
    }
  }
  s.symbol.label = s.name;

  if (const json* t = optional_key(root, "tasks", "scenario")) {
    const json& arr = as_array(*t, "tasks");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = "tasks[" + std::to_string(i) + "]";
      TaskRequest req = parse_task(arr[i], p);
      if (req.gamma) at_path(p + ".gamma", [&] { s.group.check(*req.gamma); });
      if (req.character) at_path(p + ".character", [&] { s.group.check(*req.character); });
      s.tasks.push_back(std::move(req));
    }
  }

  if (const json* e = optional_key(root, "expect", "scenario")) {
    const json& arr = as_array(*e, "expect");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = "expect[" + std::to_string(i) + "]";
      const int task = as_int(require(arr[i], "task", p), p + ".task");
      if (task < 0 || static_cast<std::size_t>(task) >= s.tasks.size())
        throw ValidationError(p + ".task: no task with index " + std::to_string(task));
      s.expectations.push_back({static_cast<std::size_t>(task), require(arr[i], "value", p).dump()});
    }
  }
  return s;
}

std::string scenario_to_text(const Scenario& s) {
  const ModelPtr& model = s.model;
  json root;
  root["name"] = s.name;
  if (!s.description.empty()) root["description"] = s.description;

  json m;
  m["dimension"] = model->dimension();
  m["generators"] = json::array();
  std::vector<std::string> names;
  for (const auto& g : model->generators()) {
    m["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    names.push_back(g.name);
  }
  m["relations"] = json::array();
  for (const auto& r : model->relations())
    m["relations"].push_back(model->format(model->generator_monomial(r.generator, r.power)) + " -> " +
                             format_raw(r.replacement, names));
  m["fundamental"] = {{"monomial", model->format(model->fundamental())}, {"orientation", model->orientation().to_string()}};
  root["manifold"] = m;

  root["bundles"] = json::array();
  for (std::size_t i = 0; i < s.bundles.size(); ++i) {
    const BundleData& b = s.bundles[i];
    json jb;
    jb["name"] = b.name;
    jb["rank"] = b.rank;
    if (s.tangent && *s.tangent == i) jb["tangent"] = true;
    auto list = [](const std::vector<CohClass>& v) {
      json arr = json::array();
      for (const auto& c : v) arr.push_back(format_class(c));
      return arr;
    };
    if (b.roots) jb["chern_roots"] = list(*b.roots);
    if (b.chern) jb["chern_classes"] = list(*b.chern);
    if (b.pontryagin) jb["pontryagin"] = list(*b.pontryagin);
    root["bundles"].push_back(jb);
  }

  json g;
  g["cyclic_orders"] = s.group.cyclic_orders();
  g["invariant_generators"] = json::array();
  for (const auto& ig : s.generators)
    g["invariant_generators"].push_back({{"name", ig.name}, {"s_degree", ig.s_degree}, {"image", format_class(ig.image)}});
  if (s.weights) {
    json lines = json::array();
    for (const auto& l : s.weights->line_classes) lines.push_back(format_class(l));
    g["weight_system"] = {{"kind", s.weights->kind == WeightSystem::Kind::torus ? "torus" : "su2"}, {"line_classes", lines}};
  }
  root["group"] = g;

  root["symbol"] = json::array();
  for (const auto& [chi, u] : s.symbol.components)
    root["symbol"].push_back({{"character", chi.exponents}, {"class", format_class(u)}});

  root["tasks"] = json::array();
  for (const auto& t : s.tasks) {
    json jt;
    jt["task"] = std::string(task_name(t.kind));
    if (t.gamma) jt["gamma"] = t.gamma->exponents;
    if (t.max_degree) jt["max_degree"] = *t.max_degree;
    if (t.character) jt["character"] = t.character->exponents;
    if (t.kind == TaskKind::atiyah_pairing) jt["lambda"] = t.lambda;
    root["tasks"].push_back(jt);
  }
  if (!s.expectations.empty()) {
    root["expect"] = json::array();
    for (const auto& e : s.expectations) root["expect"].push_back({{"task", e.task}, {"value", json::parse(e.value_json)}});
  }
  return root.dump(2) + "\n";
}

namespace {

bool selected(const RunOptions& options, std::size_t index, TaskKind kind) {
  if (options.task_filter.empty()) return true;
  for (const auto& f : options.task_filter) {
    if (f == task_name(kind)) return true;
    if (!f.empty() && std::all_of(f.begin(), f.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
        std::stoul(f) == index)
      return true;
  }
  return false;
}

ResultValue run_task(const Scenario& s, const IndexSetting& setting, const TaskRequest& t, const RunOptions& options) {
  const int bound = options.max_degree ? *options.max_degree : (t.max_degree ? *t.max_degree : -1);
  const GroupElement gamma = t.gamma ? *t.gamma : s.group.identity();
  switch (t.kind) {
    case TaskKind::fractional_index: return fractional_index(setting, s.symbol, gamma);
    case TaskKind::moments: return moments(setting, s.symbol, gamma, bound);
    case TaskKind::full_distribution: return full_distribution(setting, s.symbol, bound);
    case TaskKind::mms_projective: {
      Character chi_o;
      if (t.character) {
        chi_o = *t.character;
      } else {
        std::vector<Character> nonzero;
        for (const auto& [chi, u] : s.symbol.components)
          if (!u.is_zero()) nonzero.push_back(chi);
        if (nonzero.size() != 1)
          throw EngineError("mms_projective needs 'character' unless the symbol has exactly one nonzero component");
        chi_o = nonzero.front();
      }
      return mms_projective(setting, s.symbol, chi_o, bound);
    }
    case TaskKind::projective_dirac:
      if (!s.tangent) throw EngineError("projective_dirac needs a bundle marked \"tangent\": true");
      return projective_dirac(s.model, setting.a_hat, s.generators, bound);
    case TaskKind::atiyah_pairing:
      if (!s.weights) throw EngineError("atiyah_pairing needs group.weight_system");
      return Cyclotomic(atiyah_pairing(setting, s.symbol, *s.weights, t.lambda));
  }
  throw EngineError("unknown task");
}

}  // namespace

std::vector<TaskResult> run(const Scenario& s, const RunOptions& options) {
  std::vector<TaskResult> results;
  std::optional<IndexSetting> setting;
  for (std::size_t i = 0; i < s.tasks.size(); ++i) {
    const TaskRequest& t = s.tasks[i];
    if (!selected(options, i, t.kind)) continue;
    const std::string prefix = "task " + std::to_string(i) + " (" + std::string(task_name(t.kind)) + "): ";
    try {
      if (!setting) {
        setting = s.setting();
        setting->validate();
      }
      results.push_back({i, t, run_task(s, *setting, t, options)});
    } catch (const InvariantViolation& e) {
      throw InvariantViolation(prefix + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(prefix + e.what());
    } catch (const ParseError& e) {
      throw ParseError(prefix + e.what());
    } catch (const Error& e) {
      throw EngineError(prefix + e.what());
    }
  }
  return results;
}

namespace {

json scalar_json(const Cyclotomic& c) {
  if (auto r = c.to_rational()) return r->to_string();
  json coeffs = json::array();
  for (const auto& x : c.coefficients()) coeffs.push_back(x.to_string());
  return {{"order", c.order()}, {"coefficients", coeffs}};
}

json table_json(const MomentTable& t, const std::vector<InvariantGenerator>& gens) {
  json out = json::object();
  for (const auto& e : t.entries) out[format_jet_monomial(e.monomial, gens)] = scalar_json(e.value);
  return out;
}

const std::vector<InvariantGenerator>& generators_for(const Scenario& s) { return s.generators; }

json result_json(const Scenario& s, const TaskResult& r) {
  json out;
  out["index"] = r.index;
  out["task"] = std::string(task_name(r.request.kind));
  const auto& gens = generators_for(s);
  if (r.request.kind == TaskKind::fractional_index || r.request.kind == TaskKind::moments)
    out["gamma"] = (r.request.gamma ? *r.request.gamma : s.group.identity()).exponents;
  if (r.request.kind == TaskKind::atiyah_pairing) out["lambda"] = r.request.lambda;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Cyclotomic>) {
          out["value"] = scalar_json(v);
        } else if constexpr (std::is_same_v<T, MomentTable>) {
          out["max_s_degree"] = v.max_s_degree;
          out["value"] = table_json(v, gens);
        } else {
          json arr = json::array();
          for (const auto& t : v.tables) arr.push_back({{"gamma", t.base.exponents}, {"moments", table_json(t, gens)}});
          out["value"] = arr;
        }
      },
      r.value);
  return out;
}

std::string scalar_text(const Cyclotomic& c) { return c.to_string(); }

std::string human(const Scenario& s, const std::vector<TaskResult>& results) {
  struct Row {
    std::string index, task, where, key, value;
  };
  std::vector<Row> rows;
  rows.push_back({"#", "task", "where", "moment", "value"});
  for (const auto& r : results) {
    const std::string idx = std::to_string(r.index);
    const std::string name(task_name(r.request.kind));
    std::string where;
    if (r.request.kind == TaskKind::fractional_index || r.request.kind == TaskKind::moments)
      where = "gamma=" + format_tuple((r.request.gamma ? *r.request.gamma : s.group.identity()).exponents);
    if (r.request.kind == TaskKind::atiyah_pairing) where = "lambda=" + format_tuple(r.request.lambda);
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Cyclotomic>) {
            rows.push_back({idx, name, where, "", scalar_text(v)});
          } else if constexpr (std::is_same_v<T, MomentTable>) {
            bool first = true;
            for (const auto& e : v.entries) {
              rows.push_back({first ? idx : "", first ? name : "", first ? where : "",
                              format_jet_monomial(e.monomial, s.generators), scalar_text(e.value)});
              first = false;
            }
          } else {
            bool first = true;
            for (const auto& t : v.tables) {
              bool first_in_table = true;
              for (const auto& e : t.entries) {
                rows.push_back({first ? idx : "", first ? name : "",
                                first_in_table ? "gamma=" + format_tuple(t.base.exponents) : "",
                                format_jet_monomial(e.monomial, s.generators), scalar_text(e.value)});
                first = false;
                first_in_table = false;
              }
            }
          }
        },
        r.value);
  }
  std::size_t w[4] = {0, 0, 0, 0};
  for (const auto& row : rows) {
    w[0] = std::max(w[0], row.index.size());
    w[1] = std::max(w[1], row.task.size());
    w[2] = std::max(w[2], row.where.size());
    w[3] = std::max(w[3], row.key.size());
  }
  std::ostringstream os;
  os << "scenario: " << s.name << "\n";
  if (results.empty()) {
    os << "  (no results)\n";
    return os.str();
  }
  for (const auto& row : rows) {
    os << "  " << std::left << std::setw(static_cast<int>(w[0])) << row.index << "  " << std::setw(static_cast<int>(w[1]))
       << row.task << "  " << std::setw(static_cast<int>(w[2])) << row.where << "  " << std::setw(static_cast<int>(w[3]))
       << row.key << "  " << row.value;
    std::string line = os.str();
    // strip trailing blanks of this row
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os.str(line);
    os.seekp(0, std::ios::end);
    os << "\n";
  }
  return os.str();
}

std::optional<Cyclotomic> cyclotomic_from_json(const json& j) {
  try {
    if (j.is_string()) return Cyclotomic(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Cyclotomic(Rational(j.get<std::int64_t>()));
    if (j.is_object() && j.contains("order") && j.contains("coefficients")) {
      QPoly coeffs;
      for (const auto& c : j["coefficients"]) coeffs.push_back(Rational::parse(c.get<std::string>()));
      return Cyclotomic(j["order"].get<int>(), std::move(coeffs));
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

bool matches(const json& expected, const json& actual) {
  auto e = cyclotomic_from_json(expected);
  auto a = cyclotomic_from_json(actual);
  if (e && a) return *e == *a;
  if (expected.is_object() && actual.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      auto found = actual.find(it.key());
      if (found == actual.end() || !matches(it.value(), *found)) return false;
    }
    return true;
  }
  if (expected.is_array() && actual.is_array()) {
    if (expected.size() != actual.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!matches(expected[i], actual[i])) return false;
    return true;
  }
  return expected == actual;
}

}  // namespace

std::string emit(const Scenario& s, const std::vector<TaskResult>& results, OutputFormat format) {
  if (format == OutputFormat::human) return human(s, results);
  json out;
  out["scenario"] = s.name;
  out["results"] = json::array();
  for (const auto& r : results) out["results"].push_back(result_json(s, r));
  return out.dump(2) + "\n";
}

std::vector<std::string> check_expectations(const Scenario& s, const std::vector<TaskResult>& results) {
  std::vector<std::string> failures;
  for (const auto& e : s.expectations) {
    auto it = std::find_if(results.begin(), results.end(), [&](const TaskResult& r) { return r.index == e.task; });
    if (it == results.end()) continue;
    const json actual = result_json(s, *it)["value"];
    const json expected = json::parse(e.value_json);
    if (!matches(expected, actual))
      failures.push_back(s.name + ": task " + std::to_string(e.task) + " (" + std::string(task_name(it->request.kind)) +
                         ") expected " + expected.dump() + ", got " + actual.dump());
  }
  return failures;
}

}  // namespace projindex
