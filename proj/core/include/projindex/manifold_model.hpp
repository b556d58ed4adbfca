#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "projindex/rational.hpp"

namespace projindex {

/// Exponent vector over the generators of a model (or over invariant
/// generators, for jets).
struct Monomial {
  std::vector<int> exponents;

  bool is_one() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Sparse polynomial with rational coefficients, not reduced against any relations.
using RawPolynomial = std::map<Monomial, Rational>;

struct Generator {
  std::string name;
  int degree;  // cohomological, even and positive
};

/// generator^power -> replacement; replacement must be homogeneous of the same degree.
struct Relation {
  std::size_t generator;
  int power;
  RawPolynomial replacement;
};

class ManifoldModel;
using ModelPtr = std::shared_ptr<const ManifoldModel>;

/// Finite rational cohomology ring of a closed even-dimensional manifold:
/// even-degree generators modulo pure-power rewrite rules, truncated above the
/// dimension, together with a fundamental monomial and its orientation value.
///
/// Construction precomputes the normal form of every monomial of degree at
/// most the dimension and rejects relation sets that loop or are not
/// confluent.
class ManifoldModel {
 public:
  static ModelPtr create(int dimension, std::vector<Generator> generators, std::vector<Relation> relations,
                         Monomial fundamental, Rational orientation);

  static ModelPtr point(Rational orientation = Rational(1));
  /// CP^n: one generator of degree 2, gen^{n+1} -> 0, fundamental gen^n.
  static ModelPtr projective_space(int n, std::string generator = "x");
  /// A four-manifold whose only class above degree 0 is a degree-4 generator
  /// `generator` with the given integral.
  static ModelPtr formal_four_manifold(const Rational& top_integral, std::string generator = "p");

  int dimension() const { return dimension_; }
  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::optional<std::size_t> generator_index(const std::string& name) const;

  const Monomial& fundamental() const { return fundamental_; }
  const Rational& orientation() const { return orientation_; }

  int degree(const Monomial& m) const;
  Monomial one() const { return Monomial{std::vector<int>(generators_.size(), 0)}; }
  Monomial generator_monomial(std::size_t index, int power = 1) const;

  /// Normal form of a monomial; empty for degree above the dimension.
  const RawPolynomial& normal_form(const Monomial& m) const;

  /// Irreducible monomials, ordered by degree then exponent tuple.
  std::vector<Monomial> basis() const;

  /// Rendering of a monomial, e.g. "x^2*y"; "1" for the unit.
  std::string format(const Monomial& m) const;

 private:
  ManifoldModel() = default;
  void build_normal_forms();

  int dimension_ = 0;
  std::vector<Generator> generators_;
  std::vector<Relation> relations_;
  Monomial fundamental_;
  Rational orientation_;
  std::map<Monomial, RawPolynomial> normal_forms_;
};

/// Kunneth product together with the embeddings of each factor's monomials.
struct ProductModel {
  ModelPtr model;
  /// Index of each factor generator inside the product.
  std::vector<std::size_t> left_generators;
  std::vector<std::size_t> right_generators;

  Monomial embed_left(const Monomial& m) const;
  Monomial embed_right(const Monomial& m) const;
};

/// Generators of the second factor are renamed with a "_2", "_3", ... suffix on clash.
ProductModel product_model(const ModelPtr& left, const ModelPtr& right);

}  // namespace projindex
