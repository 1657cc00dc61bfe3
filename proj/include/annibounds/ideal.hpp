#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "annibounds/groebner.hpp"

namespace annibounds {

namespace detail {
struct BasisCache {
  std::once_flag once;
  GroebnerBasis basis;
};
} // namespace detail

/// Finitely generated submodule of the free module R^rank. The reduced
/// Groebner basis is computed on first use and shared between copies.
class Submodule {
public:
  Submodule() = default;
  Submodule(RingPtr ring, std::size_t rank, std::vector<FreeElement> gens)
      : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<detail::BasisCache>()) {
    for (auto& g : gens) {
      require_same_ring(ring_, g.ring());
      if (g.rank() != rank_) throw RingMismatch("generator rank does not match the free module");
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  static Submodule zero(RingPtr ring, std::size_t rank) { return Submodule(std::move(ring), rank, {}); }

  static Submodule whole(RingPtr ring, std::size_t rank) {
    std::vector<FreeElement> basis;
    for (std::size_t i = 0; i < rank; ++i) basis.push_back(FreeElement::basis(ring, rank, i));
    return Submodule(ring, rank, std::move(basis));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<FreeElement>& generators() const noexcept { return gens_; }

  const GroebnerBasis& groebner() const {
    std::call_once(cache_->once, [this] { cache_->basis = buchberger(ring_, rank_, gens_); });
    return cache_->basis;
  }

  /// Reduced Groebner basis in descending order of leading terms.
  std::vector<FreeElement> canonical_generators() const {
    auto v = groebner().vectors();
    std::reverse(v.begin(), v.end());
    return v;
  }

  bool is_zero() const { return gens_.empty(); }

  bool is_whole() const {
    if (rank_ == 0) return true;
    std::size_t units = 0;
    for (const auto& e : groebner().elements)
      if (e.front().mono.is_one()) ++units;
    return units == rank_;
  }

  bool contains(const FreeElement& v) const {
    require_same_ring(ring_, v.ring());
    if (v.rank() != rank_) throw RingMismatch("rank mismatch in membership test");
    return normal_form(v, groebner()).is_zero();
  }

  bool contains(const Submodule& other) const {
    check_compatible(other);
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  friend bool operator==(const Submodule& a, const Submodule& b) {
    a.check_compatible(b);
    const auto& x = a.groebner().elements;
    const auto& y = b.groebner().elements;
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!terms::equal(x[i], y[i])) return false;
    return true;
  }

  void check_compatible(const Submodule& b) const {
    require_same_ring(ring_, b.ring_);
    if (rank_ != b.rank_) throw RingMismatch("submodules live in free modules of different rank");
  }

  std::string to_string() const {
    auto gens = canonical_generators();
    if (gens.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) s += ", ";
      s += gens[i].to_string();
    }
    return s + ">";
  }

private:
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<FreeElement> gens_;
  std::shared_ptr<detail::BasisCache> cache_;
};

/// Ideal of the ring, stored as a rank-one submodule.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, const std::vector<Polynomial>& gens) : module_(make(ring, gens)) {}
  explicit Ideal(Submodule m) : module_(std::move(m)) {
    if (module_.rank() != 1) throw RingMismatch("an ideal is a submodule of rank one");
  }

  static Ideal zero(RingPtr ring) { return Ideal(ring, {}); }
  static Ideal unit(RingPtr ring) { return Ideal(ring, {Polynomial::constant(ring, Scalar(1))}); }

  /// Ideal generated by the listed variables.
  static Ideal variables(RingPtr ring, const std::vector<std::size_t>& indices) {
    std::vector<Polynomial> gens;
    for (auto i : indices) gens.push_back(Polynomial::variable(ring, i));
    return Ideal(ring, gens);
  }

  const RingPtr& ring() const noexcept { return module_.ring(); }
  const Submodule& as_submodule() const noexcept { return module_; }

  std::vector<Polynomial> generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : module_.generators()) out.push_back(g.component(0));
    return out;
  }

  const GroebnerBasis& groebner() const { return module_.groebner(); }

  std::vector<Polynomial> canonical_generators() const {
    auto p = groebner().polynomials();
    std::reverse(p.begin(), p.end());
    return p;
  }

  bool is_zero() const { return module_.is_zero(); }
  bool is_unit() const { return groebner().contains_unit(); }

  /// True iff the ideal is generated by monomials (its reduced basis is).
  bool is_monomial() const {
    for (const auto& e : groebner().elements)
      if (e.size() != 1) return false;
    return true;
  }

  bool is_homogeneous() const {
    for (const auto& e : groebner().elements)
      if (!terms::is_homogeneous(e, {})) return false;
    return true;
  }

  bool contains(const Polynomial& f) const {
    require_same_ring(ring(), f.ring());
    return normal_form(f, groebner()).is_zero();
  }
  bool contains(const Ideal& other) const { return module_.contains(other.module_); }

  friend bool operator==(const Ideal& a, const Ideal& b) { return a.module_ == b.module_; }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    auto g = a.generators();
    auto h = b.generators();
    g.insert(g.end(), h.begin(), h.end());
    return Ideal(a.ring(), g);
  }

  friend Ideal operator*(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    std::vector<Polynomial> g;
    for (const auto& x : a.generators())
      for (const auto& y : b.generators()) g.push_back(x * y);
    return Ideal(a.ring(), g);
  }

  std::string to_string() const {
    auto gens = canonical_generators();
    if (gens.empty()) return "<0>";
    std::string s = "<";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i) s += ", ";
      s += gens[i].to_string();
    }
    return s + ">";
  }

  std::vector<std::string> generator_strings() const {
    std::vector<std::string> out;
    for (const auto& g : canonical_generators()) out.push_back(g.to_string());
    if (out.empty()) out.push_back("0");
    return out;
  }

private:
  static Submodule make(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<FreeElement> v;
    for (const auto& g : gens) {
      require_same_ring(ring, g.ring());
      v.push_back(FreeElement::from_polynomial(g));
    }
    return Submodule(ring, 1, std::move(v));
  }

  Submodule module_;
};

inline Submodule sum(const Submodule& a, const Submodule& b) {
  a.check_compatible(b);
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.ring(), a.rank(), std::move(g));
}

/// A ∩ B: basis of <(a,a), (b,0)> in R^{2r} eliminating the first block;
/// elements left in the second block are exactly (0, x) with x in A ∩ B.
inline Submodule intersect(const Submodule& a, const Submodule& b) {
  a.check_compatible(b);
  const std::size_t r = a.rank();
  const auto& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Submodule::zero(ring, r);
  std::vector<TermList> gens;
  for (const auto& g : a.generators()) {
    TermList t = g.terms();
    for (auto term : g.terms()) {
      term.mono.component += static_cast<std::uint32_t>(r);
      t.push_back(std::move(term));
    }
    gens.push_back(std::move(t));
  }
  for (const auto& g : b.generators()) gens.push_back(g.terms());
  std::vector<int> weights(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i) weights[i] = 1;
  GroebnerBasis basis = gb::compute(ring, 2 * r, std::move(gens), ring->term_order(weights));
  std::vector<FreeElement> out;
  for (const auto& e : basis.elements) {
    if (e.front().mono.component < r) continue;
    TermList shifted;
    for (auto t : e) {
      t.mono.component -= static_cast<std::uint32_t>(r);
      shifted.push_back(std::move(t));
    }
    out.emplace_back(ring, r, std::move(shifted));
  }
  return Submodule(ring, r, std::move(out));
}

inline Ideal intersect(const Ideal& a, const Ideal& b) {
  return Ideal(intersect(a.as_submodule(), b.as_submodule()));
}

/// Intersection of a family; the empty family gives the whole module.
inline Submodule intersect_all(const RingPtr& ring, std::size_t rank, const std::vector<Submodule>& family) {
  if (family.empty()) return Submodule::whole(ring, rank);
  Submodule acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = intersect(acc, family[i]);
  return acc;
}

inline Ideal intersect_all(const RingPtr& ring, const std::vector<Ideal>& family) {
  if (family.empty()) return Ideal::unit(ring);
  Ideal acc = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) acc = intersect(acc, family[i]);
  return acc;
}

/// Exact quotient g / f; throws if f does not divide g.
inline Polynomial exact_divide(const Polynomial& g, const Polynomial& f) {
  require_same_ring(g.ring(), f.ring());
  if (f.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const auto& ring = g.ring();
  const auto order = ring->term_order();
  const auto& field = ring->field();
  TermList rest = g.terms(), q;
  const Term& lf = f.leading_term();
  while (!rest.empty()) {
    if (!divides(lf.mono, rest.front().mono)) throw InvalidArgument("inexact polynomial division");
    Monomial m = quotient(rest.front().mono, lf.mono);
    Scalar c = field.div(rest.front().coeff, lf.coeff);
    q.push_back({m, c});
    rest = terms::add_scaled(rest, field.neg(c), m, f.terms(), order, field);
  }
  return Polynomial(ring, std::move(q));
}

/// (A : f) = {v : f v ∈ A}, via A ∩ f R^r divided by f.
inline Submodule colon(const Submodule& a, const Polynomial& f) {
  require_same_ring(a.ring(), f.ring());
  const auto& ring = a.ring();
  const std::size_t r = a.rank();
  if (f.is_zero()) return Submodule::whole(ring, r);
  std::vector<FreeElement> multiples;
  for (std::size_t i = 0; i < r; ++i) multiples.push_back(f * FreeElement::basis(ring, r, i));
  Submodule meet = intersect(a, Submodule(ring, r, multiples));
  std::vector<FreeElement> out;
  for (const auto& g : meet.generators()) {
    std::vector<Polynomial> parts;
    for (const auto& p : g.components()) parts.push_back(p.is_zero() ? p : exact_divide(p, f));
    out.push_back(FreeElement::from_components(ring, parts));
  }
  return Submodule(ring, r, std::move(out));
}

/// (A : J) = {v : J v ⊆ A}.
inline Submodule colon(const Submodule& a, const Ideal& j) {
  require_same_ring(a.ring(), j.ring());
  if (j.is_unit()) return a;
  auto gens = j.canonical_generators();
  if (gens.empty()) return Submodule::whole(a.ring(), a.rank());
  Submodule acc = colon(a, gens.front());
  for (std::size_t i = 1; i < gens.size(); ++i) acc = intersect(acc, colon(a, gens[i]));
  return acc;
}

inline Ideal colon(const Ideal& a, const Ideal& j) { return Ideal(colon(a.as_submodule(), j)); }

template <class T> struct Saturation {
  T result;
  int exponent = 0; ///< first k with (A : J^k) = (A : J^{k+1})
};

inline Saturation<Submodule> saturate(const Submodule& a, const Ideal& j) {
  Submodule current = a;
  for (int k = 0;; ++k) {
    Submodule next = colon(current, j);
    if (current.contains(next)) return {current, k};
    current = next;
  }
}

inline Saturation<Ideal> saturate(const Ideal& a, const Ideal& j) {
  auto s = saturate(a.as_submodule(), j);
  return {Ideal(s.result), s.exponent};
}

/// Krull dimension of R/I: the largest set of variables no leading monomial
/// of I is supported on; -1 for the unit ideal.
inline int dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  const std::size_t n = ideal.ring()->nvars();
  std::vector<std::uint32_t> supports;
  for (const auto& e : ideal.groebner().elements) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (e.front().mono.exp[i]) s |= 1u << i;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

inline int height(const Ideal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("the unit ideal has no height");
  return static_cast<int>(ideal.ring()->nvars()) - dimension(ideal);
}

} // namespace annibounds
