#pragma once

#include <compare>
#include <string>
#include <vector>

#include "projindex/coh_class.hpp"

namespace projindex {

/// Element of a finite abelian group, as exponents against its cyclic factors.
struct GroupElement {
  std::vector<int> exponents;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Character of a finite abelian group: chi(g) = prod_i zeta_{n_i}^{k_i g_i}.
struct Character {
  std::vector<int> exponents;
  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;
};

/// Gamma = Z/n_1 x ... x Z/n_r. No factors means the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  static FiniteAbelianGroup cyclic(int n) { return FiniteAbelianGroup({n}); }

  const std::vector<int>& cyclic_orders() const { return orders_; }
  int order() const;
  /// lcm of the cyclic orders; brackets live in Q(zeta_exponent).
  int exponent() const;
  bool is_trivial() const { return order() == 1; }

  GroupElement identity() const;
  Character trivial_character() const;
  /// All elements in lexicographic exponent order.
  std::vector<GroupElement> elements() const;
  /// All characters in lexicographic exponent order.
  std::vector<Character> characters() const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  Character add(const Character& a, const Character& b) const;

  /// Throws ValidationError unless the tuple has the right length and each
  /// entry lies in [0, n_i).
  void check(const GroupElement& g) const;
  void check(const Character& c) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  std::vector<int> orders_;
};

/// Duality bracket <chi, gamma>, an exact root of unity.
Cyclotomic bracket(const FiniteAbelianGroup& group, const Character& chi, const GroupElement& gamma);

std::string format_tuple(const std::vector<int>& v);

/// Invariant polynomial on the Lie algebra together with its Chern–Weil image.
struct InvariantGenerator {
  std::string name;
  int s_degree;
  CohClass image;  // homogeneous of cohomological degree 2 * s_degree

  void validate() const;
};

/// Taylor jet of an already averaged invariant test function, as a polynomial
/// in the invariant generators. A unit bump (1 near the base point, small
/// support) has jet 1.
struct TestJet {
  RawPolynomial polynomial;  // monomials over the generator list
  bool unit_bump = false;

  static TestJet bump();
  static TestJet monomial(const Monomial& m);
  /// Parses an expression over generator names, e.g. "P1 + 2*E^2".
  static TestJet parse(const std::string& text, const std::vector<InvariantGenerator>& gens);
};

/// Chern–Weil evaluation: each generator is replaced by its image.
CohClass chern_weil_eval(const TestJet& jet, const std::vector<InvariantGenerator>& gens, const ModelPtr& model);

/// Cohomological weight 2 * sum e_i s_i of a generator monomial.
int jet_weight(const Monomial& m, const std::vector<InvariantGenerator>& gens);
std::string format_jet_monomial(const Monomial& m, const std::vector<InvariantGenerator>& gens);

/// Weights of representations against degree-2 line classes: a torus
/// representation lambda has the single weight lambda; an SU(2)-type
/// representation lambda = (m) has weights m, m-2, ..., -m on one line class.
struct WeightSystem {
  enum class Kind { torus, su2 };
  Kind kind = Kind::torus;
  std::vector<CohClass> line_classes;

  void validate() const;
  std::vector<std::vector<int>> weights(const std::vector<int>& lambda) const;
};

/// sum over weights w of exp(sum_i w_i L_i).
CohClass character_of_weights(const std::vector<CohClass>& line_classes, const std::vector<std::vector<int>>& weights,
                              const ModelPtr& model);

/// Ch(V_lambda) via the Chern–Weil morphism.
CohClass character_jet(const WeightSystem& w, const std::vector<int>& lambda, const ModelPtr& model);

}  // namespace projindex
