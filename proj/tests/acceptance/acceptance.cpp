// Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "projindex/expression.hpp"
#include "projindex/scenario.hpp"

using namespace projindex;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  int cases = 0;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

SymbolData single(const Character& chi, const CohClass& u) {
  SymbolData s;
  s.components.emplace(chi, u);
  return s;
}

CohClass from_poly(const oracle::Poly& p, const ModelPtr& cpn) {
  CohClass c(cpn);
  for (std::size_t k = 0; k < p.size(); ++k) c += CohClass::monomial(cpn, Monomial{{static_cast<int>(k)}}, p[k]);
  return c;
}

std::string str(const Cyclotomic& c) { return c.to_string(); }

// 1. CP2 projective Dirac fractional indices against the Chern-root series oracle.
Check cp2_dirac() {
  Check c;
  const Scenario s = parse_scenario(builtin_text("cp2_projective_dirac"));
  const IndexSetting setting = s.setting();
  const SymbolData sym = s.symbol;
  const Rational genus = oracle::integrate_cpn(oracle::a_hat_cpn(2), 2);
  c.expect(genus == Rational(-1, 8), "oracle A-hat genus of CP2 is " + genus.to_string());
  const Cyclotomic plus = fractional_index(setting, sym, GroupElement{{0}});
  const Cyclotomic minus = fractional_index(setting, sym, GroupElement{{1}});
  c.expect(plus == Cyclotomic(genus), "index at +1 is " + str(plus));
  c.expect(minus == Cyclotomic(-genus), "index at -1 is " + str(minus));
  const IndexDistribution d = projective_dirac(s.model, setting.a_hat, s.generators);
  c.expect(d.tables[0].entries[0].value == Cyclotomic(Rational(-1, 8)), "projective_dirac mass at +1");
  c.expect(d.tables[1].entries[0].value == Cyclotomic(Rational(1, 8)), "projective_dirac mass at -1");
  c.detail = c.ok ? "+1 -> " + str(plus) + ", -1 -> " + str(minus) : c.detail;
  return c;
}

// 2. CP2 Dirac moment table against hand-coded polynomial integrals.
Check cp2_moments() {
  Check c;
  const Scenario s = parse_scenario(builtin_text("cp2_projective_dirac"));
  const IndexSetting setting = s.setting();
  const oracle::Poly ahat = oracle::a_hat_cpn(2);  // 1 - x^2/8
  const oracle::Poly image{Rational(0), Rational(0), Rational(3)};
  auto integral = [&](const std::vector<oracle::Poly>& factors) {
    oracle::Poly acc = ahat;
    for (const auto& f : factors) acc = oracle::mul(acc, f, 2);
    return Cyclotomic(oracle::integrate_cpn(acc, 2));
  };
  const MomentTable t = moments(setting, s.symbol, GroupElement{{0}}, 4);
  const Monomial one{{0, 0}}, p1{{1, 0}}, e{{0, 1}}, p1p1{{2, 0}}, p1e{{1, 1}}, ee{{0, 2}};
  c.expect(t.entries.size() == 6, "table has " + std::to_string(t.entries.size()) + " entries up to s-degree 4");
  c.expect(t.value(one) == integral({}) && t.value(one) == Cyclotomic(Rational(-1, 8)), "<T,1> = " + str(t.value(one)));
  c.expect(t.value(p1) == integral({image}) && t.value(p1) == Cyclotomic(3), "<T,P1> = " + str(t.value(p1)));
  c.expect(t.value(e) == integral({image}) && t.value(e) == Cyclotomic(3), "<T,E> = " + str(t.value(e)));
  for (const auto& m : {p1p1, p1e, ee})
    c.expect(t.value(m) == integral({image, image}) && t.value(m).is_zero(),
             "<T," + format_jet_monomial(m, s.generators) + "> = " + str(t.value(m)));
  const MomentTable dflt = moments(setting, s.symbol, GroupElement{{0}});
  c.expect(dflt.entries.size() == 3, "default cutoff keeps 1, P1, E");
  if (c.ok) c.detail = "{1: -1/8, P1: 3, E: 3, P1^2: 0, P1*E: 0, E^2: 0}";
  return c;
}

// 3. Hopf scenario pairings against Riemann–Roch on CP1.
Check hopf() {
  Check c;
  const Scenario s = parse_scenario(builtin_text("hopf_riemann_roch"));
  const IndexSetting setting = s.setting();
  for (int k = -2; k <= 8; ++k) {
    const Rational v = atiyah_pairing(setting, s.symbol, *s.weights, {k});
    c.expect(v == oracle::riemann_roch_cp1(k) && v == Rational(k + 1),
             "k=" + std::to_string(k) + " gives " + v.to_string());
  }
  if (c.ok) c.detail = "k=-2..8 -> k+1";
  return c;
}

// 4. Reconstruction of every twisted table from the identity tables of the isotypic pieces.
Check reconstruction() {
  Check c;
  std::mt19937_64 rng(20240601);
  const std::vector<FiniteAbelianGroup> groups{FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3),
                                               FiniteAbelianGroup::cyclic(4), FiniteAbelianGroup({2, 2})};
  const std::vector<ModelPtr> models{ManifoldModel::projective_space(1), ManifoldModel::projective_space(2),
                                     fixtures::quadric(), ManifoldModel::formal_four_manifold(Rational(-48)),
                                     ManifoldModel::projective_space(3)};
  const int corpus = 64;
  int monomials = 0;
  for (int n = 0; n < corpus; ++n) {
    const FiniteAbelianGroup& g = groups[static_cast<std::size_t>(n) % groups.size()];
    const ModelPtr& m = models[static_cast<std::size_t>(n / 4) % models.size()];
    std::vector<InvariantGenerator> gens;
    const int min_gen_degree = m->basis().size() > 1 ? m->degree(m->basis()[1]) : 2;
    gens.push_back({"A", min_gen_degree / 2, fixtures::random_class(rng, m, min_gen_degree, min_gen_degree)});
    gens.push_back({"B", 2, fixtures::random_class(rng, m, 4, 4)});
    CohClass ahat = fixtures::random_class(rng, m, 2);
    ahat += CohClass::constant(m, Rational(1));
    const IndexSetting setting{m, g, gens, ahat};
    SymbolData sym;
    for (const auto& chi : g.characters())
      if (std::bernoulli_distribution(0.8)(rng)) sym.components.emplace(chi, fixtures::random_class(rng, m));
    const int bound = m->dimension() / 2;
    std::map<Character, MomentTable> pieces;
    for (const auto& [chi, u] : sym.components)
      pieces.emplace(chi, moments(setting, sym.restricted(chi), g.identity(), bound));
    for (const auto& gamma : g.elements()) {
      const MomentTable direct = moments(setting, sym, gamma, bound);
      for (const auto& entry : direct.entries) {
        Cyclotomic sum(0);
        for (const auto& [chi, table] : pieces) sum += bracket(g, chi, gamma) * table.value(entry.monomial);
        ++monomials;
        c.expect(sum == entry.value, "scenario " + std::to_string(n) + " gamma=" + format_tuple(gamma.exponents) +
                                         " monomial " + format_jet_monomial(entry.monomial, gens) + ": " +
                                         str(entry.value) + " vs " + str(sum));
      }
    }
    try {
      (void)full_distribution(setting, sym, bound);
    } catch (const InvariantViolation& e) {
      c.expect(false, std::string("full_distribution: ") + e.what());
    }
  }
  if (c.ok) c.detail = std::to_string(corpus) + " scenarios, " + std::to_string(monomials) + " moments";
  return c;
}

// 5. Masses of a symbol on a nontrivial character sum to zero.
Check mass_balance() {
  Check c;
  std::mt19937_64 rng(5);
  const auto cp2 = ManifoldModel::projective_space(2);
  const CohClass ahat = a_hat(BundleData::projective_tangent(cp2), cp2);
  for (int n : {2, 3, 4, 6}) {
    const FiniteAbelianGroup g = FiniteAbelianGroup::cyclic(n);
    const IndexSetting setting{cp2, g, {}, ahat};
    for (int k = 1; k < n; ++k) {
      const Character chi{{k}};
      const CohClass u = k == 1 ? inverse_class(ahat) : fixtures::random_class(rng, cp2);
      const IndexDistribution d = mms_projective(setting, single(chi, u), chi);
      Cyclotomic sum(0);
      for (const auto& t : d.tables) sum += t.entries[0].value;
      c.expect(sum.is_zero(), "N=" + std::to_string(n) + " chi=" + std::to_string(k) + " sums to " + str(sum));
      c.expect(d.total_mass() == sum, "total_mass disagrees");
      const Cyclotomic q = d.tables[0].entries[0].value;
      for (int z = 0; z < n; ++z)
        c.expect(d.tables[static_cast<std::size_t>(z)].entries[0].value == q * Cyclotomic::root_of_unity(n, k * z),
                 "mass at z=" + std::to_string(z) + " is not the bracket multiple");
    }
  }
  if (c.ok) c.detail = "N in {2,3,4,6}, every nontrivial character";
  return c;
}

// 6. Genera of products are products of genera.
struct Factor {
  std::string name;
  ModelPtr model;
  BundleData real;     // used for A-hat (Pontryagin data where that is all we have)
  BundleData complex;  // used for Todd
};

CohClass embed(const CohClass& a, const ProductModel& p, bool left) {
  CohClass out(p.model);
  for (const auto& [m, coeff] : a.terms())
    out += CohClass::monomial(p.model, left ? p.embed_left(m) : p.embed_right(m), coeff);
  return out;
}

Check multiplicativity() {
  Check c;
  std::vector<Factor> factors;
  {
    const auto pt = ManifoldModel::point();
    factors.push_back({"point", pt, BundleData::trivial("T", 0, pt), BundleData::trivial("T", 0, pt)});
    for (int n : {1, 2}) {
      const auto cpn = ManifoldModel::projective_space(n);
      const auto t = BundleData::projective_tangent(cpn);
      factors.push_back({"CP" + std::to_string(n), cpn, t, t});
    }
    const auto f = ManifoldModel::formal_four_manifold(Rational(-48));
    factors.push_back({"formal", f, BundleData::from_pontryagin("T", 4, {parse_class("p", f)}),
                       BundleData::from_chern("T", 2, {CohClass(f), parse_class("-p/2", f)})});
  }
  int pairs = 0;
  for (const auto& a : factors)
    for (const auto& b : factors) {
      const ProductModel p = product_model(a.model, b.model);
      auto lift = [&](const BundleData& bd, bool left) {
        return map_bundle(bd, [&](const CohClass& x) { return embed(x, p, left); });
      };
      const BundleData real = direct_sum(lift(a.real, true), lift(b.real, false), p.model);
      const BundleData cplx = direct_sum(lift(a.complex, true), lift(b.complex, false), p.model);
      const Rational ahat_ab = integrate(a_hat(real, p.model));
      const Rational ahat_expected = integrate(a_hat(a.real, a.model)) * integrate(a_hat(b.real, b.model));
      const Rational todd_ab = integrate(todd_class(cplx, p.model));
      const Rational todd_expected = integrate(todd_class(a.complex, a.model)) * integrate(todd_class(b.complex, b.model));
      const std::string label = a.name + " x " + b.name;
      c.expect(ahat_ab == ahat_expected, label + ": A-hat " + ahat_ab.to_string() + " vs " + ahat_expected.to_string());
      c.expect(todd_ab == todd_expected, label + ": Todd " + todd_ab.to_string() + " vs " + todd_expected.to_string());
      // Classes, not only genera, are multiplicative.
      c.expect(a_hat(real, p.model) == embed(a_hat(a.real, a.model), p, true) * embed(a_hat(b.real, b.model), p, false),
               label + ": A-hat classes differ");
      if (a.name == "CP1" && b.name == "CP1") c.expect(todd_ab == Rational(1), "Todd(CP1 x CP1) = " + todd_ab.to_string());
      ++pairs;
    }
  const Scenario q = parse_scenario(builtin_text("cp1xcp1_dolbeault"));
  c.expect(integrate(todd_class(q.bundles[0], q.model)) == Rational(1), "built-in CP1 x CP1 Todd genus");
  if (c.ok) c.detail = std::to_string(pairs) + " ordered pairs; Todd(CP1 x CP1) = 1";
  return c;
}

// 7. Genus series coefficients against series division.
Check series() {
  Check c;
  const int order = 16;
  const PowerSeries a = genus_series(GenusKind::a_hat, order);
  const PowerSeries t = genus_series(GenusKind::todd, order);
  const auto a_ref = oracle::a_hat_series(order);
  const auto t_ref = oracle::todd_series(order);
  for (int k = 0; k <= order; ++k) {
    c.expect(a[k] == a_ref[static_cast<std::size_t>(k)], "A-hat x^" + std::to_string(k) + " = " + a[k].to_string());
    c.expect(t[k] == t_ref[static_cast<std::size_t>(k)], "Todd x^" + std::to_string(k) + " = " + t[k].to_string());
  }
  c.expect(a[0] == Rational(1) && a[2] == Rational(-1, 24) && a[4] == Rational(7, 5760), "A-hat leading terms");
  c.expect(t[0] == Rational(1) && t[1] == Rational(1, 2) && t[2] == Rational(1, 12) && t[3].is_zero() &&
               t[4] == Rational(-1, 720),
           "Todd leading terms");
  if (c.ok) c.detail = "A-hat (1, -1/24, 7/5760), Todd (1, 1/2, 1/12, 0, -1/720), through x^16";
  return c;
}

// 8. Point scenarios and the trivial-center case.
Check degenerate() {
  Check c;
  std::mt19937_64 rng(8);
  const auto pt = ManifoldModel::point();
  const IndexSetting s{pt, FiniteAbelianGroup(), {}, CohClass::constant(pt, Rational(1))};
  for (int i = 0; i < 10; ++i) {
    const Rational q = oracle::random_rational(rng, 50);
    const Cyclotomic v = fractional_index(s, single(Character{}, CohClass::constant(pt, q)), GroupElement{});
    c.expect(v == Cyclotomic(q), "point with u = " + q.to_string() + " gives " + str(v));
  }
  const Scenario trivial = parse_scenario(builtin_text("point_trivial"));
  c.expect(std::get<Cyclotomic>(run(trivial)[0].value) == Cyclotomic(1), "point_trivial built-in");

  for (const char* name : {"hopf_riemann_roch", "cp2_riemann_roch", "cp1xcp1_dolbeault"}) {
    const Scenario sc = parse_scenario(builtin_text(name));
    const IndexSetting setting = sc.setting();
    const IndexDistribution d = full_distribution(setting, sc.symbol);
    c.expect(d.tables.size() == 1, std::string(name) + ": " + std::to_string(d.tables.size()) + " tables");
    const std::vector<int> zero(sc.weights->line_classes.size(), 0);
    const Rational atiyah = atiyah_pairing(setting, sc.symbol, *sc.weights, zero);
    c.expect(d.tables[0].entries[0].value == Cyclotomic(atiyah), std::string(name) + ": table " +
                                                                      str(d.tables[0].entries[0].value) + " vs " +
                                                                      atiyah.to_string());
    c.expect(fractional_index(setting, sc.symbol, GroupElement{}) == Cyclotomic(atiyah),
             std::string(name) + ": fractional index");
  }
  if (c.ok) c.detail = "point index = scalar of u; trivial center matches trivial-weight pairing";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"CP2 projective Dirac fractional index", cp2_dirac},
      {"CP2 Dirac moment table", cp2_moments},
      {"Hopf Atiyah pairing k=-2..8", hopf},
      {"twisted tables from isotypic pieces (randomized)", reconstruction},
      {"character-sum mass balance", mass_balance},
      {"genus multiplicativity over products", multiplicativity},
      {"genus series ground truth", series},
      {"degenerate cases", degenerate},
  };
  const auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (!c.ok) ++failed;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " -- "
              << c.detail << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << secs;
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << " in " << os.str() << " s (limit 10 s, exact arithmetic, tolerance 0)\n";
  return failed ? 1 : 0;
}
