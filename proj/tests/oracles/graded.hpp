#pragma once

// Degree-by-degree linear algebra for graded modules and resolutions.

#include "annibounds/module.hpp"
#include "oracles/linear_algebra.hpp"

namespace oracle {

using annibounds::FreeElement;
using annibounds::Monomial;
using annibounds::PresentedModule;
using annibounds::Resolution;
using annibounds::TermList;

/// Rank of the degree-d part of the span of homogeneous columns.
inline std::size_t span_rank_in_degree(const annibounds::RingPtr& ring, const std::vector<FreeElement>& cols,
                                       const std::vector<int>& shifts, int d) {
  const std::size_t n = ring->nvars();
  Echelon span(ring->field());
  for (const auto& c : cols) {
    if (c.is_zero()) continue;
    int need = d - c.degree(shifts);
    for (const auto& m : monomials_of_degree(n, need))
      span.insert(to_sparse(annibounds::terms::scale(c.terms(), annibounds::Scalar(1), m, ring->field()), n));
  }
  return span.rank();
}

inline std::size_t count_monomials(std::size_t n, int d) { return monomials_of_degree(n, d).size(); }

/// dim_K of the degree-d part of a graded presented module.
inline std::size_t module_dimension_in_degree(const PresentedModule& m, int d) {
  const auto& g = *m.grading();
  std::size_t total = 0;
  for (int gi : g) total += count_monomials(m.ring()->nvars(), d - gi);
  return total - span_rank_in_degree(m.ring(), m.relations(), g, d);
}

/// Rank in degree d of Hom(d_k, R) : Hom(F_{k-1}, R) -> Hom(F_k, R), with
/// Hom(F_k, R) = sum of R(s_i) so its degree-d part is sum of R_{d+s_i}.
inline std::size_t dual_rank_in_degree(const Resolution& res, std::size_t k, int d) {
  const auto& ring = res.ring;
  const std::size_t n = ring->nvars();
  if (k == 0 || k > res.maps.size()) return 0;
  const auto& dk = res.maps[k - 1];
  const auto& src = (*res.shifts)[k - 1];
  Echelon span(ring->field());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (const auto& mu : monomials_of_degree(n, d + src[i])) {
      TermList image;
      for (std::size_t j = 0; j < dk.size(); ++j) {
        for (const auto& t : dk[j].terms()) {
          if (t.mono.component != i) continue;
          Monomial m = mu * t.mono;
          m.component = static_cast<std::uint32_t>(j);
          image.push_back({m, t.coeff});
        }
      }
      annibounds::terms::canonicalize(image, ring->term_order(), ring->field());
      span.insert(to_sparse(image, n));
    }
  return span.rank();
}

/// dim_K Ext^t(M,R)_d as cohomology of the dualized resolution.
inline std::size_t ext_dimension_in_degree(const Resolution& res, std::size_t t, int d) {
  const std::size_t n = res.ring->nvars();
  if (t >= res.ranks.size()) return 0;
  std::size_t c = 0;
  for (int s : (*res.shifts)[t]) c += count_monomials(n, d + s);
  std::size_t out_rank = dual_rank_in_degree(res, t + 1, d);
  std::size_t in_rank = dual_rank_in_degree(res, t, d);
  return c - out_rank - in_rank;
}

/// Degreewise exactness of the resolution at F_k for k >= 1.
inline bool exact_in_degree(const Resolution& res, std::size_t k, int d) {
  const std::size_t n = res.ring->nvars();
  if (k == 0 || k >= res.ranks.size()) return true;
  std::size_t dim = 0;
  for (int s : (*res.shifts)[k]) dim += count_monomials(n, d - s);
  std::size_t rank_k = span_rank_in_degree(res.ring, res.maps[k - 1], (*res.shifts)[k - 1], d);
  std::size_t rank_next =
      k < res.maps.size() ? span_rank_in_degree(res.ring, res.maps[k], (*res.shifts)[k], d) : 0;
  return dim - rank_k == rank_next;
}

} // namespace oracle
