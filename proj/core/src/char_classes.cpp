#include "projindex/char_classes.hpp"

#include "projindex/expression.hpp"

namespace projindex {

namespace {

CohClass zero(const ModelPtr& m) { return CohClass(m); }
CohClass one(const ModelPtr& m) { return CohClass::constant(m, Rational(1)); }

void check_homogeneous(const CohClass& c, int degree, const std::string& what) {
  if (!c.is_homogeneous(degree))
    throw ValidationError(what + " must be homogeneous of degree " + std::to_string(degree) + ", got " +
                          format_class(c));
}

std::vector<CohClass> padded(std::vector<CohClass> v, std::size_t n, const ModelPtr& model) {
  while (v.size() < n) v.push_back(zero(model));
  return v;
}

/// Series order needed so that every root power up to the dimension is kept.
int root_order(const ModelPtr& model) { return model->dimension() / 2; }

std::vector<std::optional<CohClass>> chern_power_sums(const std::vector<CohClass>& chern, const ModelPtr& model) {
  std::vector<std::optional<CohClass>> out;
  for (auto& s : newton_power_sums(padded(chern, 1, model), root_order(model))) out.emplace_back(std::move(s));
  return out;
}

/// Power sums of the Chern roots when only Pontryagin classes are known:
/// s_{2m} = sum_j (x_j^2)^m, odd power sums unknown.
std::vector<std::optional<CohClass>> pontryagin_power_sums(const std::vector<CohClass>& pont, const ModelPtr& model) {
  const int k = root_order(model);
  const auto even = newton_power_sums(padded(pont, 1, model), k / 2);
  std::vector<std::optional<CohClass>> out(static_cast<std::size_t>(k));
  for (int m = 1; 2 * m <= k; ++m) out[static_cast<std::size_t>(2 * m - 1)] = even[static_cast<std::size_t>(m - 1)];
  return out;
}

CohClass genus_from_data(GenusKind kind, const BundleData& b, const ModelPtr& model) {
  const PowerSeries f = genus_series(kind, root_order(model));
  if (b.roots) {
    CohClass r = one(model);
    for (const auto& x : *b.roots) r *= evaluate_series(f, x);
    return r;
  }
  if (b.chern) return multiplicative_sequence(f, chern_power_sums(*b.chern, model), model);
  if (b.pontryagin) return multiplicative_sequence(f, pontryagin_power_sums(*b.pontryagin, model), model);
  throw EngineError("bundle '" + b.name + "' carries no characteristic data");
}

std::vector<CohClass> total_product(const std::vector<CohClass>& a, const std::vector<CohClass>& b,
                                    std::size_t n, const ModelPtr& model) {
  std::vector<CohClass> out;
  for (std::size_t k = 1; k <= n; ++k) {
    CohClass acc = zero(model);
    for (std::size_t i = 0; i <= k; ++i) {
      const CohClass ai = i == 0 ? one(model) : (i <= a.size() ? a[i - 1] : zero(model));
      const std::size_t j = k - i;
      const CohClass bj = j == 0 ? one(model) : (j <= b.size() ? b[j - 1] : zero(model));
      acc += ai * bj;
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

BundleData BundleData::from_roots(std::string name, std::vector<CohClass> roots) {
  BundleData b;
  b.name = std::move(name);
  b.rank = static_cast<int>(roots.size());
  b.roots = std::move(roots);
  return b;
}

BundleData BundleData::from_chern(std::string name, int rank, std::vector<CohClass> chern) {
  BundleData b;
  b.name = std::move(name);
  b.rank = rank;
  b.chern = std::move(chern);
  return b;
}

BundleData BundleData::from_pontryagin(std::string name, int rank, std::vector<CohClass> pontryagin) {
  BundleData b;
  b.name = std::move(name);
  b.rank = rank;
  b.pontryagin = std::move(pontryagin);
  return b;
}

BundleData BundleData::trivial(std::string name, int rank, const ModelPtr& model) {
  return from_roots(std::move(name), std::vector<CohClass>(static_cast<std::size_t>(rank), zero(model)));
}

BundleData BundleData::projective_tangent(const ModelPtr& cpn) {
  if (cpn->generators().size() != 1 || cpn->generators()[0].degree != 2)
    throw EngineError("projective_tangent expects a CP^n model with one degree-2 generator");
  const int n = cpn->dimension() / 2;
  const CohClass x = CohClass::monomial(cpn, cpn->generator_monomial(0), Rational(1));
  return from_roots("tangent", std::vector<CohClass>(static_cast<std::size_t>(n + 1), x));
}

void BundleData::validate(const ModelPtr& model) const {
  if (rank < 0) throw ValidationError("bundle '" + name + "' has negative rank");
  if (!roots && !chern && !pontryagin)
    throw ValidationError("bundle '" + name + "' needs chern_roots, chern_classes or pontryagin data");
  auto same_model = [&](const CohClass& c) {
    if (c.model() != model) throw ValidationError("bundle '" + name + "' uses classes from another model");
  };
  if (roots) {
    if (static_cast<int>(roots->size()) != rank)
      throw ValidationError("bundle '" + name + "' has rank " + std::to_string(rank) + " but " +
                            std::to_string(roots->size()) + " Chern roots");
    for (const auto& r : *roots) {
      same_model(r);
      check_homogeneous(r, 2, "Chern root of '" + name + "'");
    }
  }
  if (chern) {
    if (static_cast<int>(chern->size()) > rank)
      throw ValidationError("bundle '" + name + "' declares more Chern classes than its rank");
    for (std::size_t i = 0; i < chern->size(); ++i) {
      same_model((*chern)[i]);
      check_homogeneous((*chern)[i], 2 * static_cast<int>(i + 1), "c_" + std::to_string(i + 1) + " of '" + name + "'");
    }
  }
  if (pontryagin) {
    for (std::size_t i = 0; i < pontryagin->size(); ++i) {
      same_model((*pontryagin)[i]);
      check_homogeneous((*pontryagin)[i], 4 * static_cast<int>(i + 1),
                        "p_" + std::to_string(i + 1) + " of '" + name + "'");
    }
  }
  if (roots && chern) {
    const auto from_roots = elementary_symmetric(*roots);
    const auto declared = padded(*chern, from_roots.size(), model);
    for (std::size_t i = 0; i < from_roots.size(); ++i)
      if (!(from_roots[i] == declared[i]))
        throw ValidationError("bundle '" + name + "': c_" + std::to_string(i + 1) +
                              " does not match the elementary symmetric function of its roots");
  }
  if ((roots || chern) && pontryagin) {
    BundleData complex_part = *this;
    complex_part.pontryagin.reset();
    auto derived = pontryagin_classes(complex_part, model);
    const std::size_t n = std::max(derived.size(), pontryagin->size());
    derived = padded(derived, n, model);
    const auto declared = padded(*pontryagin, n, model);
    for (std::size_t i = 0; i < n; ++i)
      if (!(derived[i] == declared[i]))
        throw ValidationError("bundle '" + name + "': p_" + std::to_string(i + 1) +
                              " does not match the Pontryagin class implied by its Chern data");
  }
}

std::vector<CohClass> newton_power_sums(const std::vector<CohClass>& elementary, int max_k) {
  if (elementary.empty()) throw EngineError("newton_power_sums needs at least one class to fix the model");
  const ModelPtr& model = elementary.front().model();
  auto e = [&](int i) { return i <= static_cast<int>(elementary.size()) ? elementary[static_cast<std::size_t>(i - 1)] : zero(model); };
  std::vector<CohClass> s;
  for (int k = 1; k <= max_k; ++k) {
    // s_k = e_1 s_{k-1} - e_2 s_{k-2} + ... + (-1)^{k-2} e_{k-1} s_1 + (-1)^{k-1} k e_k
    CohClass acc = e(k) * Rational(k % 2 ? k : -k);
    for (int i = 1; i < k; ++i) {
      CohClass t = e(i) * s[static_cast<std::size_t>(k - i - 1)];
      if (i % 2) acc += t;
      else acc -= t;
    }
    s.push_back(std::move(acc));
  }
  return s;
}

std::vector<CohClass> elementary_symmetric(const std::vector<CohClass>& values) {
  if (values.empty()) return {};
  const ModelPtr& model = values.front().model();
  std::vector<CohClass> e(values.size() + 1, zero(model));
  e[0] = one(model);
  for (std::size_t j = 0; j < values.size(); ++j)
    for (std::size_t i = j + 1; i >= 1; --i) e[i] += values[j] * e[i - 1];
  e.erase(e.begin());
  return e;
}

CohClass evaluate_series(const PowerSeries& f, const CohClass& a) {
  const ModelPtr& model = a.model();
  if (!a.constant_term().is_zero()) throw EngineError("series can only be evaluated at nilpotent classes");
  if (a.is_zero()) return CohClass::constant(model, f[0]);
  const int needed = model->dimension() / a.min_degree();
  if (f.order() < needed)
    throw EngineError("series order " + std::to_string(f.order()) + " is too small for a class of degree " +
                      std::to_string(a.min_degree()) + " in dimension " + std::to_string(model->dimension()));
  CohClass acc = CohClass::constant(model, f[needed]);
  for (int k = needed - 1; k >= 0; --k) {
    acc = acc * a;
    acc += CohClass::constant(model, f[k]);
  }
  return acc;
}

CohClass multiplicative_sequence(const PowerSeries& f, const std::vector<std::optional<CohClass>>& power_sums,
                                 const ModelPtr& model) {
  const int k_max = root_order(model);
  const PowerSeries log_f = f.truncated(k_max).log();
  CohClass exponent = zero(model);
  for (int k = 1; k <= k_max; ++k) {
    const Rational a = log_f[k];
    if (a.is_zero()) continue;
    if (static_cast<std::size_t>(k) > power_sums.size() || !power_sums[static_cast<std::size_t>(k - 1)])
      throw EngineError("power sum s_" + std::to_string(k) +
                        " is unavailable (only Pontryagin data given?) but the series needs it");
    exponent += *power_sums[static_cast<std::size_t>(k - 1)] * a;
  }
  return exp_class(exponent);
}

std::vector<CohClass> chern_classes(const BundleData& b, const ModelPtr& model) {
  if (b.roots) return padded(elementary_symmetric(*b.roots), static_cast<std::size_t>(b.rank), model);
  if (b.chern) return padded(*b.chern, static_cast<std::size_t>(b.rank), model);
  throw EngineError("bundle '" + b.name + "' has no Chern data");
}

std::vector<CohClass> pontryagin_classes(const BundleData& b, const ModelPtr& model) {
  if (b.pontryagin) return *b.pontryagin;
  const auto c = chern_classes(b, model);
  const int k_max = model->dimension() / 4;
  std::vector<CohClass> p;
  for (int k = 1; k <= k_max; ++k) {
    CohClass acc = zero(model);
    for (int i = 0; i <= 2 * k; ++i) {
      const int j = 2 * k - i;
      auto ci = i == 0 ? one(model) : (i <= static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i - 1)] : zero(model));
      auto cj = j == 0 ? one(model) : (j <= static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j - 1)] : zero(model));
      if (j % 2) acc -= ci * cj;
      else acc += ci * cj;
    }
    p.push_back(k % 2 ? -acc : acc);
  }
  return p;
}

CohClass a_hat(const BundleData& b, const ModelPtr& model) { return genus_from_data(GenusKind::a_hat, b, model); }

CohClass todd_class(const BundleData& b, const ModelPtr& model) { return genus_from_data(GenusKind::todd, b, model); }

CohClass chern_character(const BundleData& b, const ModelPtr& model) {
  if (b.roots) {
    CohClass ch = zero(model);
    for (const auto& x : *b.roots) ch += exp_class(x);
    return ch;
  }
  if (b.chern) {
    CohClass ch = CohClass::constant(model, Rational(b.rank));
    const auto s = newton_power_sums(padded(*b.chern, 1, model), root_order(model));
    for (std::size_t k = 1; k <= s.size(); ++k) ch += s[k - 1] * factorial(static_cast<int>(k)).inverse();
    return ch;
  }
  throw EngineError("bundle '" + b.name + "': the Chern character needs Chern roots or Chern classes");
}

BundleData direct_sum(const BundleData& e, const BundleData& f, const ModelPtr& model) {
  const std::string name = e.name + "+" + f.name;
  if (e.roots && f.roots) {
    std::vector<CohClass> r = *e.roots;
    r.insert(r.end(), f.roots->begin(), f.roots->end());
    return BundleData::from_roots(name, std::move(r));
  }
  const int rank = e.rank + f.rank;
  const bool complex_e = e.roots || e.chern;
  const bool complex_f = f.roots || f.chern;
  if (complex_e && complex_f)
    return BundleData::from_chern(name, rank,
                                  total_product(chern_classes(e, model), chern_classes(f, model),
                                                static_cast<std::size_t>(rank), model));
  const auto pe = pontryagin_classes(e, model);
  const auto pf = pontryagin_classes(f, model);
  return BundleData::from_pontryagin(name, rank,
                                     total_product(pe, pf, std::max<std::size_t>(1, static_cast<std::size_t>(model->dimension() / 4)), model));
}

ThomReducedClass thom_reduce(CohClass base) { return ThomReducedClass{std::move(base)}; }

Rational integrate_tstar(const ThomReducedClass& t) { return integrate(t.base); }

}  // namespace projindex
