#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "annibounds/ring.hpp"
#include "annibounds/terms.hpp"

namespace annibounds {

/// Element of the ring, kept in canonical form under the ring's order.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, TermList terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    for (auto& t : terms_) {
      t.mono.component = 0;
      t.coeff = ring_->field().normalize(t.coeff);
    }
    terms::canonicalize(terms_, ring_->term_order(), ring_->field());
  }

  static Polynomial constant(RingPtr ring, const Scalar& c) {
    return Polynomial(ring, TermList{{Monomial::one(), c}});
  }
  static Polynomial variable(RingPtr ring, std::size_t index, std::uint32_t power = 1) {
    if (index >= ring->nvars()) throw InvalidArgument("variable index out of range");
    return Polynomial(ring, TermList{{Monomial::variable(index, power), Scalar(1)}});
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c = Scalar(1)) {
    return Polynomial(ring, TermList{{m, c}});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const TermList& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
  }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_homogeneous() const { return terms::is_homogeneous(terms_, {}); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, int(t.mono.degree));
    return d;
  }

  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const {
    Polynomial r(ring_);
    r.terms_ = terms::scale(terms_, ring_->field().neg(Scalar(1)), Monomial::one(), ring_->field());
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    r.terms_ = terms::add(a.terms_, b.terms_, a.ring_->term_order(), a.ring_->field());
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    r.terms_ = terms::sub(a.terms_, b.terms_, a.ring_->term_order(), a.ring_->field());
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    Polynomial r(a.ring_);
    r.terms_ = terms::multiply(a.terms_, b.terms_, a.ring_->term_order(), a.ring_->field());
    return r;
  }
  friend Polynomial operator*(const Scalar& c, const Polynomial& a) {
    Polynomial r(a.ring_);
    r.terms_ = terms::scale(a.terms_, a.ring_->field().normalize(c), Monomial::one(), a.ring_->field());
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, Scalar(1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && terms::equal(a.terms_, b.terms_);
  }

  std::string to_string() const {
    return terms::to_string(terms_, ring_->variables(), ring_->field());
  }

private:
  RingPtr ring_;
  TermList terms_;
};

/// Element of the free module R^rank; components are the monomials' component
/// indices. Canonical under the ring's term-over-position order.
class FreeElement {
public:
  FreeElement() = default;
  FreeElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}
  FreeElement(RingPtr ring, std::size_t rank, TermList terms)
      : ring_(std::move(ring)), rank_(rank), terms_(std::move(terms)) {
    for (auto& t : terms_) {
      if (t.mono.component >= rank_) throw InvalidArgument("component index exceeds rank");
      t.coeff = ring_->field().normalize(t.coeff);
    }
    terms::canonicalize(terms_, ring_->term_order(), ring_->field());
  }

  /// Builds (components[0], ..., components[r-1]).
  static FreeElement from_components(RingPtr ring, const std::vector<Polynomial>& components) {
    TermList all;
    for (std::size_t i = 0; i < components.size(); ++i) {
      require_same_ring(ring, components[i].ring());
      for (auto t : components[i].terms()) {
        t.mono.component = static_cast<std::uint32_t>(i);
        all.push_back(std::move(t));
      }
    }
    return FreeElement(std::move(ring), components.size(), std::move(all));
  }

  static FreeElement basis(RingPtr ring, std::size_t rank, std::size_t i) {
    return FreeElement(ring, rank, TermList{{Monomial::one(static_cast<std::uint32_t>(i)), Scalar(1)}});
  }

  static FreeElement from_polynomial(const Polynomial& p) {
    return from_components(p.ring(), {p});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const TermList& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Polynomial component(std::size_t i) const {
    TermList c;
    for (const auto& t : terms_)
      if (t.mono.component == i) c.push_back({with_component(t.mono, 0), t.coeff});
    return Polynomial(ring_, std::move(c));
  }

  std::vector<Polynomial> components() const {
    std::vector<TermList> parts(rank_);
    for (const auto& t : terms_) parts[t.mono.component].push_back({with_component(t.mono, 0), t.coeff});
    std::vector<Polynomial> out;
    out.reserve(rank_);
    for (auto& p : parts) out.emplace_back(ring_, std::move(p));
    return out;
  }

  /// Degree w.r.t. generator shifts; requires a nonzero homogeneous element.
  int degree(const std::vector<int>& shifts) const {
    const Monomial& m = terms_.front().mono;
    return int(m.degree) + shifts.at(m.component);
  }

  bool is_homogeneous(const std::vector<int>& shifts) const {
    return terms::is_homogeneous(terms_, shifts);
  }

  friend FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    a.check_compatible(b);
    FreeElement r(a.ring_, a.rank_);
    r.terms_ = terms::add(a.terms_, b.terms_, a.ring_->term_order(), a.ring_->field());
    return r;
  }
  friend FreeElement operator-(const FreeElement& a, const FreeElement& b) {
    a.check_compatible(b);
    FreeElement r(a.ring_, a.rank_);
    r.terms_ = terms::sub(a.terms_, b.terms_, a.ring_->term_order(), a.ring_->field());
    return r;
  }
  friend FreeElement operator*(const Polynomial& f, const FreeElement& v) {
    require_same_ring(f.ring(), v.ring_);
    FreeElement r(v.ring_, v.rank_);
    r.terms_ = terms::multiply(f.terms(), v.terms_, v.ring_->term_order(), v.ring_->field());
    return r;
  }

  friend bool operator==(const FreeElement& a, const FreeElement& b) {
    return same_ring(a.ring_, b.ring_) && a.rank_ == b.rank_ && terms::equal(a.terms_, b.terms_);
  }

  std::string to_string() const {
    if (rank_ == 1) return component(0).to_string();
    std::string s = "[";
    auto parts = components();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ", ";
      s += parts[i].to_string();
    }
    return s + "]";
  }

private:
  void check_compatible(const FreeElement& b) const {
    require_same_ring(ring_, b.ring_);
    if (rank_ != b.rank_) throw RingMismatch("free-module rank mismatch");
  }

  RingPtr ring_;
  std::size_t rank_ = 0;
  TermList terms_;
};

/// Dot product sum_i v_i * gens_i of a coefficient vector with generators.
inline FreeElement combine(const FreeElement& coefficients, const std::vector<FreeElement>& gens,
                           const RingPtr& ring, std::size_t target_rank) {
  if (coefficients.rank() != gens.size()) throw RingMismatch("coefficient vector length mismatch");
  FreeElement acc(ring, target_rank);
  auto parts = coefficients.components();
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!parts[i].is_zero()) acc = acc + parts[i] * gens[i];
  return acc;
}

} // namespace annibounds
