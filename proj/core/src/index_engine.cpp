#include "projindex/index_engine.hpp"

#include <algorithm>
#include <functional>

#include "projindex/expression.hpp"

namespace projindex {

SymbolData SymbolData::restricted(const Character& chi) const {
  SymbolData out;
  out.label = label;
  if (auto it = components.find(chi); it != components.end()) out.components.emplace(chi, it->second);
  return out;
}

SymbolData operator+(const SymbolData& a, const SymbolData& b) {
  SymbolData out = a;
  for (const auto& [chi, u] : b.components) {
    auto [it, inserted] = out.components.try_emplace(chi, u);
    if (!inserted) it->second += u;
  }
  return out;
}

void IndexSetting::validate() const {
  if (!model) throw EngineError("index setting without a manifold model");
  if (a_hat.model() != model) throw EngineError("A-hat class lives on another model");
  if (a_hat.constant_term() != Rational(1)) throw EngineError("A-hat class must have constant term 1");
  for (const auto& g : generators) {
    if (g.image.model() != model) throw EngineError("invariant generator '" + g.name + "' lives on another model");
    g.validate();
  }
}

void IndexSetting::validate(const SymbolData& symbol) const {
  for (const auto& [chi, u] : symbol.components) {
    group.check(chi);
    if (u.model() != model) throw EngineError("symbol component " + format_tuple(chi.exponents) + " lives on another model");
  }
}

Cyclotomic MomentTable::value(const Monomial& m) const {
  for (const auto& e : entries)
    if (e.monomial == m) return e.value;
  return Cyclotomic(0);
}

Cyclotomic MomentTable::pair(const TestJet& jet) const {
  if (jet.unit_bump) return value(entries.empty() ? Monomial{} : entries.front().monomial);
  Cyclotomic acc(0);
  for (const auto& [m, c] : jet.polynomial) {
    Monomial key = m;
    if (!entries.empty()) key.exponents.resize(entries.front().monomial.exponents.size(), 0);
    acc += value(key) * Cyclotomic(c);
  }
  return acc;
}

bool operator==(const MomentTable& a, const MomentTable& b) {
  if (a.base != b.base || a.entries.size() != b.entries.size()) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    if (a.entries[i].monomial != b.entries[i].monomial || !(a.entries[i].value == b.entries[i].value)) return false;
  return true;
}

const MomentTable& IndexDistribution::at(const GroupElement& gamma) const {
  for (const auto& t : tables)
    if (t.base == gamma) return t;
  throw EngineError("distribution has no table at " + format_tuple(gamma.exponents));
}

Cyclotomic IndexDistribution::total_mass() const {
  Cyclotomic acc(0);
  for (const auto& t : tables) acc += t.pair(TestJet::bump());
  return acc;
}

std::vector<Monomial> jet_monomials(const std::vector<InvariantGenerator>& gens, int max_s_degree) {
  std::vector<Monomial> out;
  Monomial cur{std::vector<int>(gens.size(), 0)};
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int budget) {
    if (i == gens.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e * gens[i].s_degree <= budget; ++e) {
      cur.exponents[i] = e;
      walk(i + 1, budget - e * gens[i].s_degree);
    }
    cur.exponents[i] = 0;
  };
  if (max_s_degree >= 0) walk(0, max_s_degree);
  auto s_degree = [&](const Monomial& m) { return jet_weight(m, gens) / 2; };
  std::stable_sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    if (s_degree(a) != s_degree(b)) return s_degree(a) < s_degree(b);
    return a > b;
  });
  return out;
}

namespace {

int resolve_bound(const IndexSetting& setting, int max_s_degree) {
  return max_s_degree < 0 ? setting.model->dimension() / 2 : max_s_degree;
}

CohClass a_hat_squared(const IndexSetting& setting) { return setting.a_hat * setting.a_hat; }

/// Moments of a fixed rational or cyclotomic integrand.
template <class Coeff>
MomentTable table_for(const IndexSetting& setting, const BasicClass<Coeff>& integrand, const GroupElement& gamma,
                      int bound) {
  MomentTable t;
  t.base = gamma;
  t.max_s_degree = bound;
  for (const auto& m : jet_monomials(setting.generators, bound)) {
    const CohClass image = chern_weil_eval(TestJet::monomial(m), setting.generators, setting.model);
    Cyclotomic v;
    if constexpr (std::is_same_v<Coeff, Rational>) {
      v = integrate(integrand * image);
    } else {
      v = integrate(integrand * to_cyclotomic(image));
    }
    t.entries.push_back({m, v});
  }
  return t;
}

}  // namespace

CycClass reduced_integrand(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma) {
  setting.validate(symbol);
  setting.group.check(gamma);
  CycClass twisted(setting.model);
  for (const auto& [chi, u] : symbol.components) {
    CycClass term = to_cyclotomic(u);
    term *= bracket(setting.group, chi, gamma);
    twisted += term;
  }
  return to_cyclotomic(a_hat_squared(setting)) * twisted;
}

Cyclotomic t_pair(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma,
                  const TestJet& jet) {
  const CycClass beta = reduced_integrand(setting, symbol, gamma);
  return integrate(beta * to_cyclotomic(chern_weil_eval(jet, setting.generators, setting.model)));
}

Cyclotomic fractional_index(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma) {
  return t_pair(setting, symbol, gamma, TestJet::bump());
}

MomentTable moments(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma,
                    int max_s_degree) {
  return table_for(setting, reduced_integrand(setting, symbol, gamma), gamma, resolve_bound(setting, max_s_degree));
}

IndexDistribution full_distribution(const IndexSetting& setting, const SymbolData& symbol, int max_s_degree) {
  setting.validate();
  setting.validate(symbol);
  const int bound = resolve_bound(setting, max_s_degree);

  // Identity-component tables of each isotypic piece, with rational integrands.
  const CohClass ahat2 = a_hat_squared(setting);
  std::map<Character, MomentTable> pieces;
  for (const auto& [chi, u] : symbol.components)
    pieces.emplace(chi, table_for(setting, ahat2 * u, setting.group.identity(), bound));

  IndexDistribution dist;
  for (const auto& gamma : setting.group.elements()) {
    MomentTable direct = moments(setting, symbol, gamma, bound);
    for (std::size_t i = 0; i < direct.entries.size(); ++i) {
      Cyclotomic recombined(0);
      for (const auto& [chi, table] : pieces)
        recombined += bracket(setting.group, chi, gamma) * table.entries[i].value;
      if (!(recombined == direct.entries[i].value))
        throw InvariantViolation("moment " + format_jet_monomial(direct.entries[i].monomial, setting.generators) +
                                 " at gamma=" + format_tuple(gamma.exponents) + ": twisted integrand gives " +
                                 direct.entries[i].value.to_string() + ", character decomposition gives " +
                                 recombined.to_string());
    }
    dist.tables.push_back(std::move(direct));
  }
  return dist;
}

IndexDistribution mms_projective(const IndexSetting& setting, const SymbolData& symbol, const Character& chi_o,
                                 int max_s_degree) {
  setting.validate();
  setting.validate(symbol);
  setting.group.check(chi_o);
  for (const auto& [chi, u] : symbol.components)
    if (chi != chi_o && !u.is_zero())
      throw EngineError("symbol has a component at character " + format_tuple(chi.exponents) +
                        " besides the prescribed character " + format_tuple(chi_o.exponents));
  const int bound = resolve_bound(setting, max_s_degree);
  const MomentTable t_d = moments(setting, symbol.restricted(chi_o), setting.group.identity(), bound);
  // At the identity every bracket is 1, so t_d is exactly T_D.
  IndexDistribution dist;
  for (const auto& z : setting.group.elements()) {
    MomentTable t = t_d;
    t.base = z;
    const Cyclotomic scale = bracket(setting.group, chi_o, z);
    for (auto& e : t.entries) e.value = e.value * scale;
    dist.tables.push_back(std::move(t));
  }
  return dist;
}

SymbolData dirac_symbol(const CohClass& a_hat) {
  SymbolData s;
  s.label = "projective Dirac";
  s.components.emplace(Character{{1}}, inverse_class(a_hat));
  return s;
}

IndexDistribution projective_dirac(const ModelPtr& model, const CohClass& a_hat,
                                   const std::vector<InvariantGenerator>& generators, int max_s_degree) {
  IndexSetting setting{model, FiniteAbelianGroup::cyclic(2), generators, a_hat};
  return full_distribution(setting, dirac_symbol(a_hat), max_s_degree);
}

Rational atiyah_pairing(const IndexSetting& setting, const SymbolData& symbol, const WeightSystem& weights,
                        const std::vector<int>& lambda) {
  setting.validate(symbol);
  if (!setting.group.is_trivial())
    throw EngineError("the Atiyah pairing applies only when the central subgroup is trivial");
  weights.validate();
  CohClass u(setting.model);
  for (const auto& [chi, c] : symbol.components) u += c;
  return integrate(a_hat_squared(setting) * u * character_jet(weights, lambda, setting.model));
}

}  // namespace projindex
