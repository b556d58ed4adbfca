#include "projindex/manifold_model.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "projindex/error.hpp"

namespace projindex {

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  if (r.exponents.size() < b.exponents.size()) r.exponents.resize(b.exponents.size(), 0);
  for (std::size_t i = 0; i < b.exponents.size(); ++i) r.exponents[i] += b.exponents[i];
  return r;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

void add_scaled(RawPolynomial& acc, const RawPolynomial& p, const Rational& c) {
  for (const auto& [m, v] : p) {
    Rational& slot = acc[m];
    slot += v * c;
    if (slot.is_zero()) acc.erase(m);
  }
}

}  // namespace

ModelPtr ManifoldModel::create(int dimension, std::vector<Generator> generators, std::vector<Relation> relations,
                               Monomial fundamental, Rational orientation) {
  if (dimension < 0 || dimension % 2 != 0)
    throw ValidationError("manifold dimension must be even and nonnegative, got " + std::to_string(dimension));
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (!valid_identifier(g.name)) throw ValidationError("invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second) throw ValidationError("duplicate generator name '" + g.name + "'");
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw ValidationError("generator '" + g.name + "' must have even positive degree, got " +
                            std::to_string(g.degree));
  }
  if (orientation.is_zero()) throw ValidationError("orientation value of the fundamental class must be nonzero");

  auto model = std::shared_ptr<ManifoldModel>(new ManifoldModel());
  model->dimension_ = dimension;
  model->generators_ = std::move(generators);
  const std::size_t n = model->generators_.size();

  fundamental.exponents.resize(n, 0);
  if (fundamental.exponents.size() != n) throw ValidationError("fundamental monomial uses undeclared generators");
  model->fundamental_ = std::move(fundamental);
  model->orientation_ = std::move(orientation);

  std::vector<bool> seen(n, false);
  for (auto& r : relations) {
    if (r.generator >= n) throw ValidationError("relation refers to an undeclared generator");
    const std::string& name = model->generators_[r.generator].name;
    if (r.power < 1) throw ValidationError("relation on '" + name + "' must have a positive power");
    if (seen[r.generator]) throw ValidationError("more than one relation for generator '" + name + "'");
    seen[r.generator] = true;
    const int lhs_degree = r.power * model->generators_[r.generator].degree;
    RawPolynomial cleaned;
    for (const auto& [key, c] : r.replacement) {
      Monomial m = key;
      if (m.exponents.size() > n) throw ValidationError("relation on '" + name + "' uses undeclared generators");
      m.exponents.resize(n, 0);
      if (c.is_zero()) continue;
      if (model->degree(m) != lhs_degree)
        throw ValidationError("relation " + name + "^" + std::to_string(r.power) + " -> ... is not degree-homogeneous: term " +
                              model->format(m) + " has degree " + std::to_string(model->degree(m)) + ", expected " +
                              std::to_string(lhs_degree));
      cleaned[m] += c;
    }
    r.replacement = std::move(cleaned);
  }
  model->relations_ = std::move(relations);

  if (model->degree(model->fundamental_) != dimension)
    throw ValidationError("fundamental monomial " + model->format(model->fundamental_) + " has degree " +
                          std::to_string(model->degree(model->fundamental_)) + ", expected the dimension " +
                          std::to_string(dimension));

  model->build_normal_forms();

  const RawPolynomial& fnf = model->normal_form(model->fundamental_);
  if (fnf.size() != 1 || fnf.begin()->first != model->fundamental_ || fnf.begin()->second != Rational(1))
    throw ValidationError("fundamental monomial " + model->format(model->fundamental_) + " is not irreducible");
  return model;
}

void ManifoldModel::build_normal_forms() {
  const std::size_t n = generators_.size();
  std::set<Monomial> in_progress;

  auto applicable = [&](const Monomial& m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < relations_.size(); ++i)
      if (m.exponents[relations_[i].generator] >= relations_[i].power) out.push_back(i);
    return out;
  };

  std::function<const RawPolynomial&(const Monomial&)> nf;

  auto rewrite_with = [&](const Monomial& m, std::size_t rel_index) {
    const Relation& rel = relations_[rel_index];
    Monomial rest = m;
    rest.exponents[rel.generator] -= rel.power;
    RawPolynomial acc;
    for (const auto& [term, c] : rel.replacement) add_scaled(acc, nf(rest * term), c);
    return acc;
  };

  nf = [&](const Monomial& m) -> const RawPolynomial& {
    if (auto it = normal_forms_.find(m); it != normal_forms_.end()) return it->second;
    static const RawPolynomial zero;
    if (degree(m) > dimension_) return zero;
    if (in_progress.count(m))
      throw ValidationError("relations do not terminate: rewriting " + format(m) + " cycles back to itself");
    in_progress.insert(m);
    const auto rules = applicable(m);
    RawPolynomial result;
    if (rules.empty()) {
      result[m] = Rational(1);
    } else {
      result = rewrite_with(m, rules.front());
    }
    in_progress.erase(m);
    return normal_forms_.emplace(m, std::move(result)).first->second;
  };

  // Every monomial of degree <= dimension.
  std::vector<Monomial> all;
  Monomial cur{std::vector<int>(n, 0)};
  std::function<void(std::size_t, int)> enumerate = [&](std::size_t i, int budget) {
    if (i == n) {
      all.push_back(cur);
      return;
    }
    for (int e = 0; e * generators_[i].degree <= budget; ++e) {
      cur.exponents[i] = e;
      enumerate(i + 1, budget - e * generators_[i].degree);
    }
    cur.exponents[i] = 0;
  };
  enumerate(0, dimension_);

  for (const auto& m : all) nf(m);

  // Confluence: every admissible first rewrite step must reach the same normal form.
  for (const auto& m : all) {
    const auto rules = applicable(m);
    if (rules.size() < 2) continue;
    const RawPolynomial& reference = nf(m);
    for (std::size_t k = 1; k < rules.size(); ++k) {
      if (rewrite_with(m, rules[k]) != reference)
        throw ValidationError("relation set is not confluent: " + format(m) + " reduces differently via " +
                              generators_[relations_[rules[0]].generator].name + " and " +
                              generators_[relations_[rules[k]].generator].name);
    }
  }
}

std::optional<std::size_t> ManifoldModel::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

int ManifoldModel::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.exponents.size() && i < generators_.size(); ++i)
    d += m.exponents[i] * generators_[i].degree;
  return d;
}

Monomial ManifoldModel::generator_monomial(std::size_t index, int power) const {
  Monomial m = one();
  m.exponents.at(index) = power;
  return m;
}

const RawPolynomial& ManifoldModel::normal_form(const Monomial& m) const {
  static const RawPolynomial zero;
  if (degree(m) > dimension_) return zero;
  Monomial key = m;
  key.exponents.resize(generators_.size(), 0);
  return normal_forms_.at(key);
}

std::vector<Monomial> ManifoldModel::basis() const {
  std::vector<Monomial> out;
  for (const auto& [m, p] : normal_forms_)
    if (p.size() == 1 && p.begin()->first == m) out.push_back(m);
  std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    const int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  return out;
}

std::string ManifoldModel::format(const Monomial& m) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.exponents.size() && i < generators_.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << generators_[i].name;
    if (m.exponents[i] > 1) os << "^" << m.exponents[i];
  }
  if (first) return "1";
  return os.str();
}

ModelPtr ManifoldModel::point(Rational orientation) {
  return create(0, {}, {}, Monomial{}, std::move(orientation));
}

ModelPtr ManifoldModel::projective_space(int n, std::string generator) {
  if (n < 0) throw ValidationError("projective space dimension must be nonnegative");
  Relation r{0, n + 1, {}};
  return create(2 * n, {{std::move(generator), 2}}, {r}, Monomial{{n}}, Rational(1));
}

ModelPtr ManifoldModel::formal_four_manifold(const Rational& top_integral, std::string generator) {
  Relation r{0, 2, {}};
  return create(4, {{std::move(generator), 4}}, {r}, Monomial{{1}}, top_integral);
}

Monomial ProductModel::embed_left(const Monomial& m) const {
  Monomial out = model->one();
  for (std::size_t i = 0; i < m.exponents.size(); ++i) out.exponents[left_generators.at(i)] = m.exponents[i];
  return out;
}

Monomial ProductModel::embed_right(const Monomial& m) const {
  Monomial out = model->one();
  for (std::size_t i = 0; i < m.exponents.size(); ++i) out.exponents[right_generators.at(i)] = m.exponents[i];
  return out;
}

ProductModel product_model(const ModelPtr& left, const ModelPtr& right) {
  std::vector<Generator> gens = left->generators();
  std::set<std::string> used;
  for (const auto& g : gens) used.insert(g.name);

  ProductModel out;
  for (std::size_t i = 0; i < gens.size(); ++i) out.left_generators.push_back(i);
  for (const auto& g : right->generators()) {
    std::string name = g.name;
    for (int suffix = 2; used.count(name); ++suffix) name = g.name + "_" + std::to_string(suffix);
    used.insert(name);
    out.right_generators.push_back(gens.size());
    gens.push_back({name, g.degree});
  }
  const std::size_t n = gens.size();

  auto shift = [&](const Monomial& m, const std::vector<std::size_t>& map) {
    Monomial r{std::vector<int>(n, 0)};
    for (std::size_t i = 0; i < m.exponents.size(); ++i) r.exponents[map[i]] = m.exponents[i];
    return r;
  };

  std::vector<Relation> rels;
  for (const auto& r : left->relations()) {
    Relation copy{out.left_generators[r.generator], r.power, {}};
    for (const auto& [m, c] : r.replacement) copy.replacement[shift(m, out.left_generators)] = c;
    rels.push_back(std::move(copy));
  }
  for (const auto& r : right->relations()) {
    Relation copy{out.right_generators[r.generator], r.power, {}};
    for (const auto& [m, c] : r.replacement) copy.replacement[shift(m, out.right_generators)] = c;
    rels.push_back(std::move(copy));
  }
  Monomial fund = shift(left->fundamental(), out.left_generators) * shift(right->fundamental(), out.right_generators);
  out.model = ManifoldModel::create(left->dimension() + right->dimension(), std::move(gens), std::move(rels),
                                    std::move(fund), left->orientation() * right->orientation());

  // A factor that relies on truncation above its own dimension (rather than on
  // relations) would acquire spurious classes in the product.
  auto check_factor = [&](const ModelPtr& factor, const std::vector<std::size_t>& map) {
    const auto& fg = factor->generators();
    Monomial cur{std::vector<int>(fg.size(), 0)};
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int deg) {
      if (i == fg.size()) {
        if (deg > factor->dimension() && !out.model->normal_form(shift(cur, map)).empty())
          throw ValidationError("cannot form product: monomial " + factor->format(cur) +
                                " vanishes in its factor only by truncation; declare a relation for it");
        return;
      }
      for (int e = 0; deg + e * fg[i].degree <= out.model->dimension(); ++e) {
        cur.exponents[i] = e;
        walk(i + 1, deg + e * fg[i].degree);
      }
      cur.exponents[i] = 0;
    };
    walk(0, 0);
  };
  check_factor(left, out.left_generators);
  check_factor(right, out.right_generators);
  return out;
}

}  // namespace projindex
