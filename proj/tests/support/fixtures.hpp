#pragma once

// Input generators shared by several test binaries.

#include <random>

#include "oracles.hpp"
#include "projindex/coh_class.hpp"
#include "projindex/manifold_model.hpp"

namespace fixtures {

using projindex::CohClass;
using projindex::ModelPtr;

/// Random class with terms on basis monomials of degree in [min_degree, max_degree].
inline CohClass random_class(std::mt19937_64& rng, const ModelPtr& model, int min_degree = 0, int max_degree = -1) {
  if (max_degree < 0) max_degree = model->dimension();
  CohClass out(model);
  std::bernoulli_distribution keep(0.7);
  for (const auto& m : model->basis()) {
    const int d = model->degree(m);
    if (d < min_degree || d > max_degree || !keep(rng)) continue;
    out += CohClass::monomial(model, m, oracle::random_rational(rng));
  }
  return out;
}

/// CP^1 x CP^1 with generators a, b.
inline ModelPtr quadric() {
  using projindex::Monomial;
  using projindex::RawPolynomial;
  return projindex::ManifoldModel::create(4, {{"a", 2}, {"b", 2}},
                                          {{0, 2, RawPolynomial{}}, {1, 2, RawPolynomial{}}},
                                          Monomial{{1, 1}}, projindex::Rational(1));
}

}  // namespace fixtures
