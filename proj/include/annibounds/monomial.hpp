#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "annibounds/errors.hpp"

namespace annibounds {

/// Upper bound on the number of ring variables. Exponents live inline so
/// monomial arithmetic never allocates.
inline constexpr std::size_t kMaxVariables = 16;

/// A monomial x^a times a free-module basis vector e_component.
/// Ring elements use component 0 throughout.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};
  std::uint32_t degree = 0;
  std::uint32_t component = 0;

  static Monomial one(std::uint32_t component = 0) {
    Monomial m;
    m.component = component;
    return m;
  }

  static Monomial variable(std::size_t index, std::uint32_t power = 1) {
    Monomial m;
    m.exp[index] = static_cast<std::uint16_t>(power);
    m.degree = power;
    return m;
  }

  bool is_one() const noexcept { return degree == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.component == b.component && a.degree == b.degree && a.exp == b.exp;
  }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned(a.exp[i]) + b.exp[i];
    if (e > 0xffff) throw InvalidArgument("exponent overflow");
    r.exp[i] = static_cast<std::uint16_t>(e);
  }
  r.degree = a.degree + b.degree;
  r.component = a.component + b.component;
  return r;
}

/// True iff a divides b, including agreement of the module component.
inline bool divides(const Monomial& a, const Monomial& b) noexcept {
  if (a.component != b.component || a.degree > b.degree) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a with the component of the quotient set to 0. Requires divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    r.exp[i] = static_cast<std::uint16_t>(b.exp[i] - a.exp[i]);
  r.degree = b.degree - a.degree;
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
    r.degree += r.exp[i];
  }
  r.component = a.component;
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exp[i] = a.exp[i] < b.exp[i] ? a.exp[i] : b.exp[i];
    r.degree += r.exp[i];
  }
  r.component = a.component;
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

inline Monomial with_component(Monomial m, std::uint32_t component) noexcept {
  m.component = component;
  return m;
}

enum class MonomialOrder { grevlex, lex, glex };

inline std::string to_string(MonomialOrder o) {
  switch (o) {
  case MonomialOrder::grevlex: return "grevlex";
  case MonomialOrder::lex: return "lex";
  case MonomialOrder::glex: return "glex";
  }
  return "?";
}

/// Total order on module monomials m*e_i.
///
/// Components carry a weight; a larger weight dominates regardless of the
/// monomial, which makes high-weight components an elimination block. Inside a
/// weight class monomials are compared first, then components (e_0 > e_1 > ...).
/// With all weights equal this is term-over-position.
class TermOrder {
public:
  TermOrder() = default;
  TermOrder(MonomialOrder order, std::size_t nvars, std::vector<int> weights = {})
      : order_(order), nvars_(nvars), weights_(std::move(weights)) {}

  MonomialOrder monomial_order() const noexcept { return order_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<int>& weights() const noexcept { return weights_; }

  int weight(std::uint32_t component) const noexcept {
    return component < weights_.size() ? weights_[component] : 0;
  }

  /// Sign of a - b under the monomial order alone (components ignored).
  int compare_monomials(const Monomial& a, const Monomial& b) const noexcept {
    switch (order_) {
    case MonomialOrder::grevlex:
      if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
      for (std::size_t i = nvars_; i-- > 0;)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
      return 0;
    case MonomialOrder::glex:
      if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
      [[fallthrough]];
    case MonomialOrder::lex:
      for (std::size_t i = 0; i < nvars_; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      return 0;
    }
    return 0;
  }

  int compare(const Monomial& a, const Monomial& b) const noexcept {
    int wa = weight(a.component), wb = weight(b.component);
    if (wa != wb) return wa > wb ? 1 : -1;
    if (int c = compare_monomials(a, b)) return c;
    if (a.component != b.component) return a.component < b.component ? 1 : -1;
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) > 0;
  }

  friend bool operator==(const TermOrder& a, const TermOrder& b) {
    return a.order_ == b.order_ && a.nvars_ == b.nvars_ && a.weights_ == b.weights_;
  }

private:
  MonomialOrder order_ = MonomialOrder::grevlex;
  std::size_t nvars_ = 0;
  std::vector<int> weights_;
};

} // namespace annibounds
