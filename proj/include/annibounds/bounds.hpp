#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annibounds/decomposition.hpp"

namespace annibounds {

/// Bound data for the annihilator of one Ext or local cohomology module.
struct BoundReport {
  std::string theorem; ///< ext | lc_max | lc_top | lc_cm_grade
  int t = 0;
  std::vector<Ideal> delta;
  std::vector<Ideal> sigma;
  Submodule S_t;
  Submodule T_t;
  Ideal lower;
  std::optional<Ideal> upper;
  std::optional<Ideal> exact;
  std::string exactness_reason;
  std::vector<std::string> notes;
};

namespace detail {

inline std::vector<Ideal> sorted(std::vector<Ideal> v) {
  sort_primes(v);
  return v;
}

inline bool same_primes(std::vector<Ideal> a, std::vector<Ideal> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (!contains_prime(b, p)) return false;
  return true;
}

inline std::string prime_list(const std::vector<Ideal>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + "}";
}

/// ann(M / U) for U containing the relations of M.
inline Ideal quotient_annihilator(const PresentedModule& m, const Submodule& u) {
  return annihilator(m.quotient_by(u));
}

inline void require_inclusion(const Ideal& small, const Ideal& big, const std::string& what) {
  if (!big.contains(small))
    throw CrossCheckFailure(what + ": " + small.to_string() + " is not contained in " + big.to_string());
}

inline Ideal maximal_ideal(const RingPtr& ring) {
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < ring->nvars(); ++i) all.push_back(i);
  return Ideal::variables(ring, all);
}

} // namespace detail

enum class GorensteinKind { free_module, complete_intersection, unknown };

inline std::string to_string(GorensteinKind k) {
  switch (k) {
  case GorensteinKind::free_module: return "free module";
  case GorensteinKind::complete_intersection: return "complete intersection";
  case GorensteinKind::unknown: return "unknown";
  }
  return "unknown";
}

/// Recognizes R^k (k >= 1) and R / (f_1..f_k) with grade k.
inline GorensteinKind gorenstein_kind(const PresentedModule& n) {
  if (n.is_zero()) return GorensteinKind::unknown;
  const Resolution& res = n.resolution();
  if (res.rank(1) == 0 && res.rank(0) > 0) return GorensteinKind::free_module;
  if (res.rank(0) != 1) return GorensteinKind::unknown;
  Ideal i = annihilator(n);
  std::size_t k = res.rank(1);
  if (static_cast<std::size_t>(height(i)) == k) return GorensteinKind::complete_intersection;
  return GorensteinKind::unknown;
}

inline bool gorenstein_recognized(const PresentedModule& n) { return gorenstein_kind(n) != GorensteinKind::unknown; }

/// Gorenstein as a module (depth = injective dimension = dim R): free modules.
inline bool is_gorenstein_module(const PresentedModule& n) { return gorenstein_kind(n) == GorensteinKind::free_module; }

/// ann Ext^t(M, N), computed directly.
inline Ideal ext_exact_oracle(const PresentedModule& m, const PresentedModule& n, int t) {
  return annihilator(ext(m, n, t));
}

/// ann H^t_m(M) for graded M via graded local duality: ann Ext^{n-t}(M, R).
inline Ideal lc_max_exact_oracle(const PresentedModule& m, int t) {
  if (!m.is_graded()) throw Unsupported("the duality oracle needs a graded module");
  if (t < 0) throw InvalidArgument("local cohomology degree must be nonnegative");
  const int n = static_cast<int>(m.ring()->nvars());
  if (t > n) return Ideal::unit(m.ring());
  return annihilator(ext(m, PresentedModule::free(m.ring(), 1), n - t));
}

/// Bounds for ann Ext^t(M, N) from a certified decomposition of 0 in M.
inline BoundReport ext_bounds(const PresentedModule& m, const PresentedModule& n, const DecompositionCertificate& cert,
                              int t, bool assert_gorenstein = false) {
  require_same_ring(m.ring(), n.ring());
  require_verified(cert);
  if (n.is_zero()) throw InvalidArgument("the second module must be nonzero");
  if (t < 0) throw InvalidArgument("Ext degree must be nonnegative");
  const RingPtr& ring = m.ring();
  BoundReport rep;
  rep.theorem = "ext";
  rep.t = t;
  std::vector<Ideal> ass = cert.primes();
  std::vector<Ideal> mins = minimal_elements(ass);
  std::map<std::size_t, ExtendedInt> grades;
  for (std::size_t i = 0; i < ass.size(); ++i) {
    ExtendedInt g = grade(ass[i], n);
    if (g <= ExtendedInt(t)) rep.delta.push_back(ass[i]);
    if (g == ExtendedInt(t) && contains_prime(mins, ass[i])) rep.sigma.push_back(ass[i]);
  }
  rep.delta = detail::sorted(rep.delta);
  rep.sigma = detail::sorted(rep.sigma);

  const GorensteinKind kind = gorenstein_kind(n);
  const bool gorenstein = assert_gorenstein || kind == GorensteinKind::free_module;
  if (gorenstein) {
    Ideal ann_n = annihilator(n);
    std::vector<Ideal> d2, s2;
    for (const auto& p : ass) {
      if (!p.contains(ann_n)) continue;
      int h = height(p);
      if (h <= t) d2.push_back(p);
      if (h == t && contains_prime(mins, p)) s2.push_back(p);
    }
    if (!detail::same_primes(d2, rep.delta) || !detail::same_primes(s2, rep.sigma))
      throw CrossCheckFailure("grade and height routes disagree: grade gives " + detail::prime_list(rep.delta) + " / " +
                              detail::prime_list(rep.sigma) + ", height gives " + detail::prime_list(d2) + " / " +
                              detail::prime_list(s2));
    rep.notes.push_back("grade and height routes agree");
  }

  rep.S_t = isolated_component(cert, rep.delta);
  rep.T_t = isolated_component(cert, rep.sigma);
  rep.lower = detail::quotient_annihilator(m, rep.S_t);
  if (gorenstein) {
    rep.upper = detail::quotient_annihilator(m, rep.T_t);
    detail::require_inclusion(rep.lower, *rep.upper, "lower bound exceeds upper bound");
    rep.notes.push_back(assert_gorenstein && kind != GorensteinKind::free_module
                            ? "upper bound uses the caller's Gorenstein assertion"
                            : "second module recognized as Gorenstein (" + to_string(kind) + ")");
    Ideal ann_m = annihilator(m);
    if (!(ann_m + annihilator(n)).is_unit()) {
      ExtendedInt g = grade(ann_m, n);
      if (!g.is_infinite() && g.value() == t) {
        if (!detail::same_primes(rep.delta, rep.sigma))
          throw CrossCheckFailure("at t = grade(ann M, N) the sets " + detail::prime_list(rep.delta) + " and " +
                                  detail::prime_list(rep.sigma) + " differ");
        rep.exact = rep.upper;
        rep.exactness_reason = "t = grade(ann M, N)";
      }
    }
  } else {
    rep.notes.push_back(kind == GorensteinKind::complete_intersection
                            ? "upper bound not applicable: second module is a complete intersection of lower "
                              "dimension, not a Gorenstein module (assert gorenstein to override)"
                            : "upper bound not applicable: second module not recognized as Gorenstein (assert "
                              "gorenstein to override)");
  }
  (void)ring;
  return rep;
}

namespace detail {

inline void require_primes_in_maximal(const DecompositionCertificate& cert) {
  Ideal m = maximal_ideal(cert.module.ring());
  for (const auto& p : cert.primes())
    if (!m.contains(p))
      throw Unsupported("associated prime " + p.to_string() + " is not contained in the graded maximal ideal");
}

} // namespace detail

/// Bounds for ann H^t_m(M), m the graded maximal ideal.
inline BoundReport lc_max_bounds(const PresentedModule& m, const DecompositionCertificate& cert, int t) {
  require_verified(cert);
  detail::require_primes_in_maximal(cert);
  if (t < 0) throw InvalidArgument("local cohomology degree must be nonnegative");
  BoundReport rep;
  rep.theorem = "lc_max";
  rep.t = t;
  std::vector<Ideal> ass = cert.primes();
  rep.delta = primes_of_dimension_at_least(ass, t);
  rep.sigma = primes_of_dimension(minimal_elements(ass), t);
  rep.S_t = isolated_component(cert, rep.delta);
  rep.T_t = isolated_component(cert, rep.sigma);
  rep.lower = detail::quotient_annihilator(m, rep.S_t);
  rep.upper = detail::quotient_annihilator(m, rep.T_t);
  detail::require_inclusion(rep.lower, *rep.upper, "lower bound exceeds upper bound");
  if (!m.is_zero() && t == dimension(m)) {
    if (!(rep.lower == *rep.upper))
      throw CrossCheckFailure("at t = dim M the two bounds differ: " + rep.lower.to_string() + " vs " +
                              rep.upper->to_string());
    rep.exact = rep.upper;
    rep.exactness_reason = "t = dim M";
  }
  return rep;
}

/// cd_a(X) together with the rule that produced it.
struct CdValue {
  int value = -1;
  std::string rule;
};

/// cd values of R/p supplied by the caller.
using CdTable = std::vector<std::pair<Ideal, int>>;

namespace detail {

inline bool in_radical_of(const Ideal& j, const Polynomial& f) { return in_radical(f, j); }

/// sqrt(a) is the graded maximal ideal.
inline bool radical_is_maximal(const Ideal& a) {
  if (a.is_unit()) return false;
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i)
    if (!in_radical_of(a, Polynomial::variable(a.ring(), i))) return false;
  return true;
}

inline std::optional<CdValue> cd_by_rules(const PresentedModule& x, const Ideal& a) {
  if (x.is_zero()) return CdValue{-1, "zero module"};
  if (radical_is_maximal(a) && x.is_graded()) return CdValue{dimension(x), "m-primary"};
  auto gens = a.canonical_generators();
  if (gens.size() == 1) {
    const Polynomial& f = gens.front();
    Submodule sat = saturate(x.image(), a).result;
    PresentedModule reduced = PresentedModule::quotient(sat);
    std::vector<FreeElement> multiples;
    for (std::size_t i = 0; i < x.rank(); ++i) multiples.push_back(f * FreeElement::basis(x.ring(), x.rank(), i));
    if (!reduced.quotient_by(Submodule(x.ring(), x.rank(), multiples)).is_zero()) return CdValue{1, "principal"};
    if (!x.image().contains(sat)) return CdValue{0, "principal"};
    return CdValue{-1, "principal"};
  }
  return std::nullopt;
}

} // namespace detail

/// cd_a(X) = sup{i : H^i_a(X) != 0}; -1 when all vanish.
/// Supported: sqrt(a) = m with X graded, a principal, or a table of
/// cd_a(R/p) combined as the maximum over Ass(X).
inline CdValue cohomological_dimension(const PresentedModule& x, const Ideal& a, const CdTable& table = {}) {
  require_same_ring(x.ring(), a.ring());
  if (a.is_unit()) throw InvalidArgument("cohomological dimension needs a proper ideal");
  if (auto v = detail::cd_by_rules(x, a)) return *v;
  if (!table.empty()) {
    std::vector<Ideal> ass = associated_primes(x);
    CdValue out{-1, "table"};
    std::vector<std::string> missing;
    for (const auto& p : ass) {
      auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == p; });
      int v;
      if (it != table.end()) {
        v = it->second;
      } else if (auto r = detail::cd_by_rules(PresentedModule::quotient(p), a)) {
        v = r->value;
      } else {
        missing.push_back(p.to_string());
        continue;
      }
      out.value = std::max(out.value, v);
    }
    if (missing.empty()) return out;
    std::string msg = "cohomological dimension unknown for primes";
    for (const auto& s : missing) msg += " " + s;
    throw Unsupported(msg);
  }
  throw Unsupported("cohomological dimension of " + x.to_string() + " with respect to " + a.to_string() +
                    " is outside the supported cases");
}

/// Bounds for ann H^c_a(M), c = cd_a(M).
inline BoundReport top_lc_bounds(const PresentedModule& m, const DecompositionCertificate& cert, const Ideal& a,
                                 const CdTable& table = {}) {
  require_same_ring(m.ring(), a.ring());
  require_verified(cert);
  if (a.is_unit()) throw InvalidArgument("cohomological dimension needs a proper ideal");
  std::vector<Ideal> ass = cert.primes();
  std::vector<int> cds;
  std::vector<std::string> unsupported;
  for (const auto& p : ass) {
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == p; });
    if (it != table.end()) {
      cds.push_back(it->second);
      continue;
    }
    auto v = detail::cd_by_rules(PresentedModule::quotient(p), a);
    if (!v) {
      unsupported.push_back(p.to_string());
      cds.push_back(-1);
    } else {
      cds.push_back(v->value);
    }
  }
  if (!unsupported.empty()) {
    std::string msg = "cohomological dimension unsupported for primes";
    for (const auto& s : unsupported) msg += " " + s;
    throw Unsupported(msg);
  }
  int c = -1;
  for (int v : cds) c = std::max(c, v);
  if (c < 0) throw InvalidArgument("all local cohomology of M with respect to " + a.to_string() + " vanishes");
  BoundReport rep;
  rep.theorem = "lc_top";
  rep.t = c;
  for (std::size_t i = 0; i < ass.size(); ++i) {
    if (cds[i] != c) continue;
    rep.delta.push_back(ass[i]);
    if (dimension(ass[i]) == c) rep.sigma.push_back(ass[i]);
  }
  rep.S_t = isolated_component(cert, rep.delta);
  rep.T_t = isolated_component(cert, rep.sigma);
  rep.lower = detail::quotient_annihilator(m, rep.S_t);
  rep.upper = detail::quotient_annihilator(m, rep.T_t);
  detail::require_inclusion(rep.lower, *rep.upper, "lower bound exceeds upper bound");
  rep.notes.push_back("c = " + std::to_string(c));
  if (c == dimension(m)) {
    if (!(rep.S_t.contains(rep.T_t) && rep.T_t.contains(rep.S_t)))
      throw CrossCheckFailure("at c = dim M the submodules for the two bounds differ");
    rep.exact = rep.lower;
    rep.exactness_reason = "c = dim M";
  }
  return rep;
}

/// Cohen-Macaulay test: Ext^i(M, R) = 0 for every i other than ht(ann M).
inline bool is_cohen_macaulay(const PresentedModule& m) {
  if (m.is_zero()) return false;
  int h = height(annihilator(m));
  PresentedModule r = PresentedModule::free(m.ring(), 1);
  for (int i = 0; i <= int(m.ring()->nvars()); ++i)
    if (i != h && !ext(m, r, i).is_zero()) return false;
  return true;
}

/// dim M - dim M/bM; infinity when bM = M.
inline ExtendedInt module_height(const PresentedModule& m, const Ideal& b) {
  Ideal s = b + annihilator(m);
  if (s.is_unit()) return ExtendedInt::infinity();
  return dimension(m) - dimension(s);
}

/// Bounds for ann H^t_a(M), M Cohen-Macaulay.
inline BoundReport cm_grade_bounds(const PresentedModule& m, const DecompositionCertificate& cert, const Ideal& a,
                                   int t, bool require_exact = false) {
  require_same_ring(m.ring(), a.ring());
  require_verified(cert);
  if (t < 0) throw InvalidArgument("local cohomology degree must be nonnegative");
  if (!is_cohen_macaulay(m)) throw InvalidArgument("module is not Cohen-Macaulay");
  BoundReport rep;
  rep.theorem = "lc_cm_grade";
  rep.t = t;
  for (const auto& p : cert.primes())
    if (module_height(m, a + p) == ExtendedInt(t)) rep.sigma.push_back(p);
  rep.S_t = m.image();
  rep.T_t = isolated_component(cert, rep.sigma);
  rep.lower = annihilator(m);
  rep.upper = detail::quotient_annihilator(m, rep.T_t);
  detail::require_inclusion(rep.lower, *rep.upper, "lower bound exceeds upper bound");
  ExtendedInt g = grade(a, m);
  if (g.is_infinite()) {
    if (require_exact) throw InvalidArgument("aM = M: the equality case does not apply");
    rep.notes.push_back("aM = M, so every local cohomology module vanishes");
  } else if (g.value() == t) {
    rep.exact = rep.upper;
    rep.exactness_reason = "t = grade(a,M), CM";
  } else if (require_exact) {
    rep.notes.push_back("t differs from grade(a,M) = " + g.to_string() + "; no exact value");
  }
  return rep;
}

/// Whether p is predicted to lie in Ass H^{grade}_a(M): depth M_p = grade(a, M).
inline bool grade_lc_ass_member(const PresentedModule& m, const Ideal& a, const Ideal& p) {
  require_same_ring(m.ring(), a.ring());
  if (!p.contains(a)) throw InvalidArgument(a.to_string() + " is not contained in " + p.to_string());
  return depth_at_prime(m, p) == grade(a, m);
}

/// lower within the oracle value, which lies within upper; exact equals it.
inline std::vector<Check> sandwich_checks(const BoundReport& rep, const Ideal& oracle) {
  std::vector<Check> out;
  Check low{"lower_in_oracle", oracle.contains(rep.lower), false, ""};
  if (!low.passed) low.detail = rep.lower.to_string() + " not in " + oracle.to_string();
  out.push_back(low);
  if (rep.upper) {
    Check up{"oracle_in_upper", rep.upper->contains(oracle), false, ""};
    if (!up.passed) up.detail = oracle.to_string() + " not in " + rep.upper->to_string();
    out.push_back(up);
  }
  if (rep.exact) {
    Check ex{"exact_equals_oracle", *rep.exact == oracle, false, ""};
    if (!ex.passed) ex.detail = rep.exact->to_string() + " vs " + oracle.to_string();
    out.push_back(ex);
  }
  return out;
}

} // namespace annibounds
