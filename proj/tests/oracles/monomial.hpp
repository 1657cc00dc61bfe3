#pragma once

// Combinatorial operations on monomial ideals given by exponent vectors.

#include <algorithm>
#include <vector>

#include "annibounds/ideal.hpp"

namespace oracle {

using Exponents = std::vector<int>;

inline Exponents exponents_of(const annibounds::Polynomial& m) {
  const auto& t = m.terms().front().mono;
  Exponents e(m.ring()->nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exp[i];
  return e;
}

inline annibounds::Polynomial monomial_of(const annibounds::RingPtr& ring, const Exponents& e) {
  annibounds::Polynomial m = annibounds::Polynomial::constant(ring, annibounds::Scalar(1));
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) m = m * annibounds::Polynomial::variable(ring, i, static_cast<std::uint32_t>(e[i]));
  return m;
}

inline bool exp_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Minimal generators, sorted.
inline std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = j != i && exp_divides(gens[j], gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

inline std::vector<Exponents> lcm_intersection(const std::vector<Exponents>& a, const std::vector<Exponents>& b) {
  std::vector<Exponents> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Exponents l(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) l[i] = std::max(x[i], y[i]);
      out.push_back(l);
    }
  return minimalize(out);
}

inline std::vector<Exponents> divide_colon(const std::vector<Exponents>& a, const Exponents& m) {
  std::vector<Exponents> out;
  for (const auto& x : a) {
    Exponents q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = std::max(0, x[i] - m[i]);
    out.push_back(q);
  }
  return minimalize(out);
}

inline std::vector<Exponents> exponents_of(const annibounds::Ideal& i) {
  std::vector<Exponents> out;
  for (const auto& g : i.generators()) out.push_back(exponents_of(g));
  return minimalize(out);
}

inline annibounds::Ideal ideal_of(const annibounds::RingPtr& ring, const std::vector<Exponents>& gens) {
  std::vector<annibounds::Polynomial> p;
  for (const auto& e : gens) p.push_back(monomial_of(ring, e));
  return annibounds::Ideal(ring, p);
}

} // namespace oracle
