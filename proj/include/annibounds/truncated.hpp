#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <string>

#include "annibounds/module.hpp"

namespace annibounds {

inline constexpr int kDefaultMaxDegree = 12;

/// Degree cap for truncated linear-algebra checks, from ANNIBOUNDS_MAX_DEGREE.
inline int max_check_degree() {
  const char* env = std::getenv("ANNIBOUNDS_MAX_DEGREE");
  if (!env || !*env) return kDefaultMaxDegree;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 64) throw InvalidArgument("ANNIBOUNDS_MAX_DEGREE must be an integer in 0..64");
  return static_cast<int>(v);
}

namespace detail {

inline void for_each_monomial(std::size_t n, int d, const std::function<void(const Monomial&)>& f) {
  Monomial m;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      m.exp[i] = static_cast<std::uint16_t>(left);
      m.degree = static_cast<std::uint32_t>(d);
      f(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m.exp[i] = static_cast<std::uint16_t>(e);
      rec(i + 1, left - e);
    }
  };
  rec(0, d);
}

inline int degree_of(const Polynomial& f) { return f.is_zero() ? -1 : int(f.terms().front().mono.degree); }

} // namespace detail

/// Membership of a homogeneous f in the ideal spanned by homogeneous gens,
/// decided by linear algebra in degree deg f. Empty when the data is not
/// homogeneous or deg f exceeds the cap.
inline std::optional<bool> truncated_contains(const Ideal& ideal, const Polynomial& f, int cap) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous() || detail::degree_of(f) > cap) return std::nullopt;
  const RingPtr& ring = f.ring();
  const int d = detail::degree_of(f);
  detail::LinearSpan span(ring->term_order(), ring->field());
  for (const auto& g : ideal.canonical_generators()) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) return std::nullopt;
    int dg = detail::degree_of(g);
    if (dg > d) continue;
    detail::for_each_monomial(ring->nvars(), d - dg, [&](const Monomial& m) {
      span.insert(terms::scale(g.terms(), Scalar(1), m, ring->field()));
    });
  }
  return span.reduce(f.terms()).empty();
}

/// Two-way truncated comparison; empty when any generator falls outside the check.
inline std::optional<bool> truncated_equal(const Ideal& a, const Ideal& b, int cap) {
  bool all = true;
  for (const auto& [x, y] : {std::pair{&a, &b}, std::pair{&b, &a}})
    for (const auto& g : x->canonical_generators()) {
      auto in = truncated_contains(*y, g, cap);
      if (!in) return std::nullopt;
      all = all && *in;
    }
  return all;
}

} // namespace annibounds
