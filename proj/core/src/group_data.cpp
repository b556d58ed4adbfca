#include "projindex/group_data.hpp"

#include <numeric>
#include <sstream>

#include "projindex/expression.hpp"

namespace projindex {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (int n : orders_)
    if (n < 1) throw ValidationError("cyclic orders must be positive, got " + std::to_string(n));
}

int FiniteAbelianGroup::order() const {
  int n = 1;
  for (int o : orders_) n *= o;
  return n;
}

int FiniteAbelianGroup::exponent() const {
  int l = 1;
  for (int o : orders_) l = std::lcm(l, o);
  return l;
}

GroupElement FiniteAbelianGroup::identity() const { return GroupElement{std::vector<int>(orders_.size(), 0)}; }

Character FiniteAbelianGroup::trivial_character() const { return Character{std::vector<int>(orders_.size(), 0)}; }

namespace {

std::vector<std::vector<int>> all_tuples(const std::vector<int>& orders) {
  std::vector<std::vector<int>> out{{}};
  for (int n : orders) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (int k = 0; k < n; ++k) {
        auto t = prefix;
        t.push_back(k);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  for (auto& t : all_tuples(orders_)) out.push_back(GroupElement{std::move(t)});
  return out;
}

std::vector<Character> FiniteAbelianGroup::characters() const {
  std::vector<Character> out;
  for (auto& t : all_tuples(orders_)) out.push_back(Character{std::move(t)});
  return out;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r = a;
  for (std::size_t i = 0; i < orders_.size(); ++i) r.exponents[i] = (a.exponents[i] + b.exponents[i]) % orders_[i];
  return r;
}

Character FiniteAbelianGroup::add(const Character& a, const Character& b) const {
  check(a);
  check(b);
  Character r = a;
  for (std::size_t i = 0; i < orders_.size(); ++i) r.exponents[i] = (a.exponents[i] + b.exponents[i]) % orders_[i];
  return r;
}

namespace {

void check_tuple(const std::vector<int>& orders, const std::vector<int>& t, const char* what) {
  if (t.size() != orders.size())
    throw ValidationError(std::string(what) + " " + format_tuple(t) + " has " + std::to_string(t.size()) +
                          " entries, the group has " + std::to_string(orders.size()) + " cyclic factors");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] < 0 || t[i] >= orders[i])
      throw ValidationError(std::string(what) + " " + format_tuple(t) + ": entry " + std::to_string(i) +
                            " must lie in [0, " + std::to_string(orders[i]) + ")");
}

}  // namespace

void FiniteAbelianGroup::check(const GroupElement& g) const { check_tuple(orders_, g.exponents, "group element"); }
void FiniteAbelianGroup::check(const Character& c) const { check_tuple(orders_, c.exponents, "character"); }

Cyclotomic bracket(const FiniteAbelianGroup& group, const Character& chi, const GroupElement& gamma) {
  group.check(chi);
  group.check(gamma);
  const int l = group.exponent();
  std::int64_t power = 0;
  for (std::size_t i = 0; i < group.cyclic_orders().size(); ++i) {
    const int n = group.cyclic_orders()[i];
    power += static_cast<std::int64_t>(chi.exponents[i]) * gamma.exponents[i] % n * (l / n);
  }
  return Cyclotomic::root_of_unity(l, power % l);
}

std::string format_tuple(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void InvariantGenerator::validate() const {
  if (s_degree < 1) throw ValidationError("invariant generator '" + name + "' needs a positive s_degree");
  if (!image.is_homogeneous(2 * s_degree))
    throw ValidationError("image of invariant generator '" + name + "' must be homogeneous of degree " +
                          std::to_string(2 * s_degree) + ", got " + format_class(image));
}

TestJet TestJet::bump() {
  TestJet j;
  j.unit_bump = true;
  j.polynomial[Monomial{}] = Rational(1);
  return j;
}

TestJet TestJet::monomial(const Monomial& m) {
  TestJet j;
  j.polynomial[m] = Rational(1);
  return j;
}

TestJet TestJet::parse(const std::string& text, const std::vector<InvariantGenerator>& gens) {
  std::vector<std::string> names;
  for (const auto& g : gens) names.push_back(g.name);
  TestJet j;
  j.polynomial = Expression::parse(text).to_raw(names);
  return j;
}

CohClass chern_weil_eval(const TestJet& jet, const std::vector<InvariantGenerator>& gens, const ModelPtr& model) {
  if (jet.unit_bump) return CohClass::constant(model, Rational(1));
  CohClass result(model);
  for (const auto& [m, c] : jet.polynomial) {
    if (m.exponents.size() > gens.size()) throw EngineError("test jet refers to an undeclared invariant generator");
    CohClass term = CohClass::constant(model, c);
    for (std::size_t i = 0; i < m.exponents.size() && !term.is_zero(); ++i) {
      if (gens[i].image.model() != model)
        throw EngineError("image of invariant generator '" + gens[i].name + "' lives on another model");
      term *= pow(gens[i].image, m.exponents[i]);
    }
    result += term;
  }
  return result;
}

int jet_weight(const Monomial& m, const std::vector<InvariantGenerator>& gens) {
  int w = 0;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) w += 2 * m.exponents[i] * gens.at(i).s_degree;
  return w;
}

std::string format_jet_monomial(const Monomial& m, const std::vector<InvariantGenerator>& gens) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens.at(i).name;
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

void WeightSystem::validate() const {
  if (kind == Kind::su2 && line_classes.size() != 1)
    throw ValidationError("an su2 weight system takes exactly one line class");
  for (const auto& l : line_classes)
    if (!l.is_homogeneous(2))
      throw ValidationError("line classes of a weight system must have degree 2, got " + format_class(l));
}

std::vector<std::vector<int>> WeightSystem::weights(const std::vector<int>& lambda) const {
  if (kind == Kind::torus) {
    if (lambda.size() != line_classes.size())
      throw ValidationError("torus weight " + format_tuple(lambda) + " needs one entry per line class (" +
                            std::to_string(line_classes.size()) + ")");
    return {lambda};
  }
  if (lambda.size() != 1 || lambda[0] < 0)
    throw ValidationError("su2 highest weight must be a single nonnegative integer, got " + format_tuple(lambda));
  std::vector<std::vector<int>> out;
  for (int w = lambda[0]; w >= -lambda[0]; w -= 2) out.push_back({w});
  return out;
}

CohClass character_of_weights(const std::vector<CohClass>& line_classes, const std::vector<std::vector<int>>& weights,
                              const ModelPtr& model) {
  CohClass ch(model);
  for (const auto& w : weights) {
    CohClass arg(model);
    for (std::size_t i = 0; i < w.size(); ++i) arg += line_classes.at(i) * Rational(w[i]);
    ch += exp_class(arg);
  }
  return ch;
}

CohClass character_jet(const WeightSystem& w, const std::vector<int>& lambda, const ModelPtr& model) {
  return character_of_weights(w.line_classes, w.weights(lambda), model);
}

}  // namespace projindex
