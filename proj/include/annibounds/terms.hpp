#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "annibounds/field.hpp"
#include "annibounds/monomial.hpp"

namespace annibounds {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial or free-module vector: terms sorted strictly descending
/// under some TermOrder, no zero coefficients.
using TermList = std::vector<Term>;

namespace terms {

/// Sort descending, merge equal monomials, drop zeros.
inline void canonicalize(TermList& f, const TermOrder& order, const Field& field) {
  std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  TermList out;
  out.reserve(f.size());
  for (auto& t : f) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
      if (sgn(out.back().coeff) == 0) out.pop_back();
    } else if (sgn(t.coeff) != 0) {
      out.push_back(std::move(t));
    }
  }
  f = std::move(out);
}

/// a + c * m * b, with a and b canonical under order.
inline TermList add_scaled(const TermList& a, const Scalar& c, const Monomial& m,
                           const TermList& b, const TermOrder& order, const Field& field,
                           std::size_t a_begin = 0) {
  TermList out;
  out.reserve(a.size() - a_begin + b.size());
  std::size_t i = a_begin, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = m * b[j].mono;
    if (i == a.size()) {
      out.push_back({bm, field.mul(c, b[j].coeff)});
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, field.mul(c, b[j].coeff)});
      ++j;
    } else {
      Scalar s = field.add(a[i].coeff, field.mul(c, b[j].coeff));
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline TermList add(const TermList& a, const TermList& b, const TermOrder& order,
                    const Field& field) {
  return add_scaled(a, Scalar(1), Monomial::one(), b, order, field);
}

inline TermList sub(const TermList& a, const TermList& b, const TermOrder& order,
                    const Field& field) {
  return add_scaled(a, field.neg(Scalar(1)), Monomial::one(), b, order, field);
}

inline TermList scale(const TermList& a, const Scalar& c, const Monomial& m, const Field& field) {
  TermList out;
  if (sgn(c) == 0) return out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({m * t.mono, field.mul(c, t.coeff)});
  return out;
}

/// Product of a polynomial (component 0) with a polynomial or vector.
inline TermList multiply(const TermList& f, const TermList& g, const TermOrder& order,
                         const Field& field) {
  TermList acc;
  for (const auto& t : f) acc = add_scaled(acc, t.coeff, t.mono, g, order, field);
  return acc;
}

inline void make_monic(TermList& f, const Field& field) {
  if (f.empty()) return;
  Scalar inv = field.inv(f.front().coeff);
  for (auto& t : f) t.coeff = field.mul(t.coeff, inv);
}

inline bool equal(const TermList& a, const TermList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i].mono == b[i].mono) || a[i].coeff != b[i].coeff) return false;
  return true;
}

/// Re-sort a canonical list under a different order.
inline TermList reorder(TermList f, const TermOrder& order) {
  std::sort(f.begin(), f.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mono, b.mono);
  });
  return f;
}

inline bool is_homogeneous(const TermList& f, const std::vector<int>& shifts) {
  if (f.empty()) return true;
  auto deg = [&](const Monomial& m) {
    return int(m.degree) + (m.component < shifts.size() ? shifts[m.component] : 0);
  };
  int d = deg(f.front().mono);
  for (const auto& t : f)
    if (deg(t.mono) != d) return false;
  return true;
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s;
}

/// Terms of a single component rendered as `c*x^a*y^b + ...`.
inline std::string to_string(const TermList& f, const std::vector<std::string>& names,
                             const Field& field) {
  if (f.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f) {
    Scalar c = t.coeff;
    bool negative = field.is_rational() && sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_to_string(t.mono, names);
    if (mono.empty()) {
      s += field.to_string(c);
    } else if (c == 1) {
      s += mono;
    } else {
      s += field.to_string(c) + "*" + mono;
    }
  }
  return s;
}

} // namespace terms
} // namespace annibounds
