#pragma once

#include <map>
#include <string>
#include <vector>

#include "projindex/char_classes.hpp"
#include "projindex/group_data.hpp"

namespace projindex {

/// A transversally elliptic symbol, given through the Thom-reduced classes
/// u_chi of its isotypic pieces: Ch_e(sigma_chi) = u_chi wedge Thom(T*M).
struct SymbolData {
  std::map<Character, CohClass> components;
  std::string label;

  /// Only the component at chi (empty symbol if absent).
  SymbolData restricted(const Character& chi) const;
  /// sigma (+) sigma'.
  friend SymbolData operator+(const SymbolData& a, const SymbolData& b);
};

/// Everything the index formula needs besides the symbol.
struct IndexSetting {
  ModelPtr model;
  FiniteAbelianGroup group;
  std::vector<InvariantGenerator> generators;
  CohClass a_hat;  // A-hat class of M

  void validate() const;
  void validate(const SymbolData& symbol) const;
};

/// Values <T_gamma(sigma), mu> on every generator monomial mu of bounded s-degree.
/// Entries are ordered by total s-degree, then by exponent tuple (declaration order first).
struct MomentTable {
  struct Entry {
    Monomial monomial;
    Cyclotomic value;
  };

  GroupElement base;
  int max_s_degree = 0;
  std::vector<Entry> entries;

  /// Value at a monomial; zero if the monomial exceeds the bound.
  Cyclotomic value(const Monomial& m) const;
  /// Pairing with a polynomial jet by linearity (unit_bump gives the degree-0 moment).
  Cyclotomic pair(const TestJet& jet) const;

  friend bool operator==(const MomentTable&, const MomentTable&);
};

/// sum_gamma T_gamma(sigma) * delta_gamma, one table per element of Gamma in
/// lexicographic order.
struct IndexDistribution {
  std::vector<MomentTable> tables;

  const MomentTable& at(const GroupElement& gamma) const;
  /// Sum of the degree-0 moments over Gamma.
  Cyclotomic total_mass() const;
};

/// Generator monomials with total s-degree at most max_s_degree, in table order.
std::vector<Monomial> jet_monomials(const std::vector<InvariantGenerator>& gens, int max_s_degree);

/// beta_gamma = A-hat(M)^2 wedge sum_chi <chi, gamma> u_chi.
CycClass reduced_integrand(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma);

/// <T_gamma(sigma), jet> = integral over M of beta_gamma wedge (jet evaluated at the curvature).
Cyclotomic t_pair(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma,
                  const TestJet& jet);

/// Pairing with a unit bump at gamma; at the identity this is the analytical index.
Cyclotomic fractional_index(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma);

/// A negative bound means dim M / 2.
MomentTable moments(const IndexSetting& setting, const SymbolData& symbol, const GroupElement& gamma,
                    int max_s_degree = -1);

/// Tables at every gamma, checked against the character decomposition
/// sum_chi <chi, gamma> T_e(sigma_chi); a mismatch throws InvariantViolation.
IndexDistribution full_distribution(const IndexSetting& setting, const SymbolData& symbol, int max_s_degree = -1);

/// Symbol concentrated on the character chi_o: T_D scaled by <chi_o, z> at each z.
IndexDistribution mms_projective(const IndexSetting& setting, const SymbolData& symbol, const Character& chi_o,
                                 int max_s_degree = -1);

/// Gamma = Z/2, u_{chi_o} = A-hat(M)^{-1}: T_M * delta_1 - T_M * delta_{-1}.
IndexDistribution projective_dirac(const ModelPtr& model, const CohClass& a_hat,
                                   const std::vector<InvariantGenerator>& generators, int max_s_degree = -1);

/// The Dirac symbol data used by projective_dirac.
SymbolData dirac_symbol(const CohClass& a_hat);

/// Index of sigma (x) V_lambda for Gamma trivial.
Rational atiyah_pairing(const IndexSetting& setting, const SymbolData& symbol, const WeightSystem& weights,
                        const std::vector<int>& lambda);

}  // namespace projindex
