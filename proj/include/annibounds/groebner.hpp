#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "annibounds/polynomial.hpp"

namespace annibounds {

/// Groebner basis of a submodule of R^rank (rank 1 for ideals) under `order`.
/// When `reduced`, elements are monic, fully interreduced, and sorted by
/// ascending leading monomial, so equal submodules give identical bases.
struct GroebnerBasis {
  RingPtr ring;
  std::size_t rank = 1;
  TermOrder order;
  std::vector<TermList> elements;
  bool reduced = false;

  std::size_t size() const noexcept { return elements.size(); }
  bool empty() const noexcept { return elements.empty(); }

  /// Elements re-sorted into the ring's canonical order.
  std::vector<FreeElement> vectors() const {
    std::vector<FreeElement> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.emplace_back(ring, rank, e);
    return out;
  }

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.emplace_back(ring, e);
    return out;
  }

  bool contains_unit() const {
    for (const auto& e : elements)
      if (e.front().mono.is_one()) return true;
    return false;
  }
};

namespace gb {

inline const TermList* find_reducer(const Monomial& m, const std::vector<const TermList*>& basis) {
  for (const TermList* g : basis)
    if (divides(g->front().mono, m)) return g;
  return nullptr;
}

/// Reduces f by `basis` (each element monic). With `full` every term is
/// reduced; otherwise only until the leading term is irreducible.
inline TermList reduce(TermList f, const std::vector<const TermList*>& basis, const TermOrder& order,
                       const Field& field, bool full = true) {
  TermList result;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const Term& lt = f[pos];
    if (const TermList* g = find_reducer(lt.mono, basis)) {
      Scalar c = field.neg(field.div(lt.coeff, g->front().coeff));
      Monomial m = quotient(lt.mono, g->front().mono);
      f = terms::add_scaled(f, c, m, *g, order, field, pos);
      pos = 0;
    } else {
      if (!full) {
        result.insert(result.end(), f.begin() + long(pos), f.end());
        return result;
      }
      result.push_back(f[pos]);
      ++pos;
    }
  }
  return result;
}

inline TermList s_vector(const TermList& f, const TermList& g, const TermOrder& order,
                         const Field& field) {
  Monomial l = lcm(f.front().mono, g.front().mono);
  TermList a = terms::scale(f, field.inv(f.front().coeff), quotient(l, f.front().mono), field);
  Scalar c = field.neg(field.inv(g.front().coeff));
  return terms::add_scaled(a, c, quotient(l, g.front().mono), g, order, field);
}

/// Buchberger's algorithm with normal pair selection and Gebauer-Moller
/// pair elimination.
class Buchberger {
public:
  Buchberger(const TermOrder& order, const Field& field, bool ideal_case)
      : order_(order), field_(field), product_criterion_(ideal_case) {}

  std::vector<TermList> run(std::vector<TermList> gens) {
    for (auto& g : gens) {
      if (g.empty()) continue;
      add(std::move(g));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (less_pair(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      TermList s = s_vector(polys_[p.i], polys_[p.j], order_, field_);
      if (!s.empty()) add(std::move(s));
    }
    return finish();
  }

private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  bool less_pair(const Pair& a, const Pair& b) const {
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  std::vector<const TermList*> active_basis() const {
    std::vector<const TermList*> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) basis.push_back(&polys_[k]);
    return basis;
  }

  void add(TermList f) {
    f = reduce(std::move(f), active_basis(), order_, field_, false);
    if (f.empty()) return;
    terms::make_monic(f, field_);
    polys_.push_back(std::move(f));
    active_.push_back(false);
    update(polys_.size() - 1);
  }

  const Monomial& lm(std::size_t k) const { return polys_[k].front().mono; }

  void update(std::size_t h) {
    const Monomial& lh = lm(h);
    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && lm(g).component == lh.component) candidates.push_back({g, h, lcm(lm(g), lh)});

    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& c = candidates[k];
      bool keep = product_criterion_ && coprime(lm(c.i), lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < candidates.size() && keep; ++q)
          if (divides(candidates[q].lcm, c.lcm)) keep = false;
        for (std::size_t q = 0; q < kept.size() && keep; ++q)
          if (divides(kept[q].lcm, c.lcm)) keep = false;
      }
      if (keep) kept.push_back(c);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) && !(lcm(lh, lm(p.j)) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (auto& p : kept)
      if (!(product_criterion_ && coprime(lm(p.i), lh))) next.push_back(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g] && divides(lh, lm(g))) active_[g] = false;
    active_[h] = true;
  }

  std::vector<TermList> finish() {
    std::vector<TermList> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) basis.push_back(polys_[k]);
    return interreduce(std::move(basis));
  }

  std::vector<TermList> interreduce(std::vector<TermList> basis) const {
    std::vector<TermList> out;
    out.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const TermList*> others;
      for (std::size_t q = 0; q < basis.size(); ++q)
        if (q != k) others.push_back(&basis[q]);
      TermList tail(basis[k].begin() + 1, basis[k].end());
      TermList r{basis[k].front()};
      TermList rt = reduce(std::move(tail), others, order_, field_, true);
      r.insert(r.end(), rt.begin(), rt.end());
      terms::make_monic(r, field_);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const TermList& a, const TermList& b) {
      return order_.greater(b.front().mono, a.front().mono);
    });
    return out;
  }

  TermOrder order_;
  Field field_;
  bool product_criterion_;
  std::vector<TermList> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

inline GroebnerBasis compute(const RingPtr& ring, std::size_t rank, std::vector<TermList> gens,
                             const TermOrder& order) {
  for (auto& g : gens) g = terms::reorder(std::move(g), order);
  bool ideal_case = true;
  for (const auto& g : gens)
    for (const auto& t : g)
      if (t.mono.component != 0) ideal_case = false;
  Buchberger engine(order, ring->field(), ideal_case);
  GroebnerBasis out;
  out.ring = ring;
  out.rank = rank;
  out.order = order;
  out.elements = engine.run(std::move(gens));
  out.reduced = true;
  return out;
}

inline TermList normal_form(const TermList& f, const GroebnerBasis& basis) {
  std::vector<const TermList*> b;
  for (const auto& e : basis.elements) b.push_back(&e);
  return reduce(terms::reorder(f, basis.order), b, basis.order, basis.ring->field(), true);
}

} // namespace gb

/// Reduced Groebner basis of the ideal generated by `gens`, in the ring order.
inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<TermList> t;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    t.push_back(g.terms());
  }
  return gb::compute(ring, 1, std::move(t), ring->term_order());
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw InvalidArgument("cannot infer the ring of an empty generator list");
  return buchberger(gens.front().ring(), gens);
}

/// Reduced Groebner basis of the submodule of R^rank generated by `gens`.
/// `weights` selects an elimination block (see TermOrder); empty means
/// term-over-position.
inline GroebnerBasis buchberger(const RingPtr& ring, std::size_t rank,
                                const std::vector<FreeElement>& gens, std::vector<int> weights = {}) {
  std::vector<TermList> t;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.rank() != rank) throw RingMismatch("generator rank does not match the free module");
    t.push_back(g.terms());
  }
  return gb::compute(ring, rank, std::move(t), ring->term_order(std::move(weights)));
}

inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring);
  if (basis.rank != 1) throw RingMismatch("polynomial reduced against a module basis");
  return Polynomial(f.ring(), gb::normal_form(f.terms(), basis));
}

inline FreeElement normal_form(const FreeElement& f, const GroebnerBasis& basis) {
  require_same_ring(f.ring(), basis.ring);
  if (f.rank() != basis.rank) throw RingMismatch("rank mismatch in normal form");
  return FreeElement(f.ring(), f.rank(), gb::normal_form(f.terms(), basis));
}

/// Generators of the syzygy module {h : sum h_i gens_i = 0} in R^k.
///
/// Computed from the Groebner basis of (gens_i + e_{rank+i}) in R^{rank+k}
/// under an order eliminating the first `rank` components; the trailing block
/// tracks how each basis element was built from the inputs.
inline std::vector<FreeElement> syzygies(const RingPtr& ring, std::size_t rank,
                                         const std::vector<FreeElement>& gens) {
  const std::size_t k = gens.size();
  std::vector<TermList> lifted;
  lifted.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    require_same_ring(ring, gens[i].ring());
    if (gens[i].rank() != rank) throw RingMismatch("generator rank does not match the free module");
    TermList t = gens[i].terms();
    t.push_back({Monomial::one(static_cast<std::uint32_t>(rank + i)), Scalar(1)});
    lifted.push_back(std::move(t));
  }
  std::vector<int> weights(rank + k, 0);
  for (std::size_t i = 0; i < rank; ++i) weights[i] = 1;
  GroebnerBasis basis = gb::compute(ring, rank + k, std::move(lifted), ring->term_order(weights));
  std::vector<FreeElement> out;
  for (const auto& e : basis.elements) {
    if (e.front().mono.component < rank) continue;
    TermList shifted;
    shifted.reserve(e.size());
    for (auto t : e) {
      t.mono.component -= static_cast<std::uint32_t>(rank);
      shifted.push_back(std::move(t));
    }
    out.emplace_back(ring, k, std::move(shifted));
  }
  return out;
}

inline std::vector<FreeElement> syzygies(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::vector<FreeElement> v;
  for (const auto& g : gens) v.push_back(FreeElement::from_polynomial(g));
  return syzygies(ring, 1, v);
}

} // namespace annibounds
