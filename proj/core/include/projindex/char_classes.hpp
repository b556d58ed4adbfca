#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projindex/coh_class.hpp"
#include "projindex/power_series.hpp"

namespace projindex {

/// Characteristic data of a complex (or real) vector bundle. At least one of
/// `roots`, `chern` or `pontryagin` is present. `chern` holds c_1..c_r,
/// `pontryagin` holds p_1..p_k.
struct BundleData {
  std::string name;
  int rank = 0;
  std::optional<std::vector<CohClass>> roots;
  std::optional<std::vector<CohClass>> chern;
  std::optional<std::vector<CohClass>> pontryagin;

  static BundleData from_roots(std::string name, std::vector<CohClass> roots);
  static BundleData from_chern(std::string name, int rank, std::vector<CohClass> chern);
  static BundleData from_pontryagin(std::string name, int rank, std::vector<CohClass> pontryagin);
  /// Rank-r bundle with vanishing characteristic classes.
  static BundleData trivial(std::string name, int rank, const ModelPtr& model);

  /// Tangent bundle of CP^n through the Euler sequence: n+1 roots equal to the generator.
  static BundleData projective_tangent(const ModelPtr& cpn);

  /// Checks degrees and root/Chern consistency. Throws ValidationError.
  void validate(const ModelPtr& model) const;
};

/// Newton's identities: power sums s_1..s_k of the roots from the elementary
/// symmetric classes e_1..e_r (entries beyond r are taken as zero).
std::vector<CohClass> newton_power_sums(const std::vector<CohClass>& elementary, int max_k);

/// Elementary symmetric classes e_1..e_n of the given classes.
std::vector<CohClass> elementary_symmetric(const std::vector<CohClass>& values);

/// Evaluates a power series at a class with zero constant term.
CohClass evaluate_series(const PowerSeries& f, const CohClass& a);

/// prod_j f(x_j) expressed through the power sums of the roots x_j, using
/// log f and Newton's identities. `power_sums[k-1]` is s_k; entries may be
/// nullopt when unavailable, which is only an error if log f needs them.
CohClass multiplicative_sequence(const PowerSeries& f, const std::vector<std::optional<CohClass>>& power_sums,
                                 const ModelPtr& model);

/// Chern classes c_1..c_rank (from roots or declared classes).
std::vector<CohClass> chern_classes(const BundleData& b, const ModelPtr& model);
/// Pontryagin classes p_1..p_k with p_k = (-1)^k c_{2k}(E (x) C).
std::vector<CohClass> pontryagin_classes(const BundleData& b, const ModelPtr& model);

CohClass a_hat(const BundleData& b, const ModelPtr& model);
CohClass todd_class(const BundleData& b, const ModelPtr& model);
CohClass chern_character(const BundleData& b, const ModelPtr& model);

/// E (+) F. Root data concatenates; otherwise total classes multiply.
BundleData direct_sum(const BundleData& e, const BundleData& f, const ModelPtr& model);

/// Moves a bundle to another model through a ring map on classes.
template <class Map>
BundleData map_bundle(const BundleData& b, Map&& f) {
  BundleData out{b.name, b.rank, std::nullopt, std::nullopt, std::nullopt};
  auto apply = [&](const std::optional<std::vector<CohClass>>& src) -> std::optional<std::vector<CohClass>> {
    if (!src) return std::nullopt;
    std::vector<CohClass> v;
    for (const auto& c : *src) v.push_back(f(c));
    return v;
  };
  out.roots = apply(b.roots);
  out.chern = apply(b.chern);
  out.pontryagin = apply(b.pontryagin);
  return out;
}

/// base wedge Thom(T*M), a compactly supported class on T*M.
struct ThomReducedClass {
  CohClass base;
};

ThomReducedClass thom_reduce(CohClass base);
/// Integral over T*M, oriented so that it equals the integral of the base over M.
Rational integrate_tstar(const ThomReducedClass& t);

}  // namespace projindex
