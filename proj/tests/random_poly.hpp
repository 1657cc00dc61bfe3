#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "annibounds/ideal.hpp"

namespace testing_support {

using namespace annibounds;

inline Polynomial random_polynomial(const RingPtr& ring, std::mt19937& rng, int max_degree,
                                    int max_terms, bool homogeneous = false, int fixed_degree = -1) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  const std::size_t n = ring->nvars();
  TermList t;
  int target = fixed_degree >= 0 ? fixed_degree : std::uniform_int_distribution<int>(0, max_degree)(rng);
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m;
    int d = homogeneous ? target : std::uniform_int_distribution<int>(0, max_degree)(rng);
    for (int j = 0; j < d; ++j) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      ++m.exp[v];
    }
    m.degree = static_cast<std::uint32_t>(d);
    int c = coeff(rng);
    if (c == 0) c = 1;
    t.push_back({m, Scalar(c)});
  }
  return Polynomial(ring, t);
}

inline Polynomial random_monomial(const RingPtr& ring, std::mt19937& rng, int min_degree, int max_degree) {
  const std::size_t n = ring->nvars();
  Monomial m;
  int d = std::uniform_int_distribution<int>(min_degree, max_degree)(rng);
  for (int j = 0; j < d; ++j) ++m.exp[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
  m.degree = static_cast<std::uint32_t>(d);
  return Polynomial::monomial(ring, m);
}

inline Ideal random_monomial_ideal(const RingPtr& ring, std::mt19937& rng, int max_gens, int max_degree) {
  std::vector<Polynomial> gens;
  int k = std::uniform_int_distribution<int>(std::min(2, max_gens), max_gens)(rng);
  for (int i = 0; i < k; ++i) gens.push_back(random_monomial(ring, rng, std::min(2, max_degree), max_degree));
  return Ideal(ring, gens);
}

} // namespace testing_support
