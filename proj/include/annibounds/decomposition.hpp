#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "annibounds/module.hpp"

namespace annibounds {

/// Canonical prime order: by height, then by generator strings.
inline bool prime_less(const Ideal& a, const Ideal& b) {
  int ha = a.is_unit() ? -1 : height(a), hb = b.is_unit() ? -1 : height(b);
  if (ha != hb) return ha < hb;
  return a.generator_strings() < b.generator_strings();
}

inline void sort_primes(std::vector<Ideal>& primes) { std::stable_sort(primes.begin(), primes.end(), prime_less); }

inline bool contains_prime(const std::vector<Ideal>& list, const Ideal& p) {
  return std::any_of(list.begin(), list.end(), [&](const Ideal& q) { return q == p; });
}

namespace detail {

using Support = std::uint32_t;

inline Support support_of(const Monomial& m, std::size_t n) {
  Support s = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (m.exp[i]) s |= Support(1) << i;
  return s;
}

inline void vertex_covers(const std::vector<Support>& edges, std::size_t next, Support chosen,
                          std::vector<Support>& out) {
  while (next < edges.size() && (edges[next] & chosen)) ++next;
  if (next == edges.size()) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t v = 0; v < 32; ++v)
    if (edges[next] & (Support(1) << v)) vertex_covers(edges, next + 1, chosen | (Support(1) << v), out);
}

inline std::vector<Support> minimal_sets(std::vector<Support> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Support> out;
  for (Support s : sets) {
    bool minimal = true;
    for (Support t : sets)
      if (t != s && (t & s) == t) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

inline Ideal prime_of_support(const RingPtr& ring, Support s) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    if (s & (Support(1) << i)) idx.push_back(i);
  return Ideal::variables(ring, idx);
}

inline std::vector<Monomial> monomial_generators(const Ideal& i) {
  if (!i.is_monomial()) throw Unsupported("ideal " + i.to_string() + " is not a monomial ideal");
  std::vector<Monomial> out;
  for (const auto& g : i.canonical_generators()) out.push_back(g.leading_term().mono);
  return out;
}

/// Irreducible components of a monomial ideal given by minimal generators:
/// a generator x^a * m' with m' != 1 splits I into (I + x^a) and (I + m').
inline void irreducible_split(const RingPtr& ring, std::vector<Monomial> gens, std::vector<std::vector<Monomial>>& out) {
  const std::size_t n = ring->nvars();
  for (const auto& g : gens) {
    std::size_t first = n;
    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.exp[i]) {
        if (first == n) first = i;
        ++count;
      }
    if (count < 2) continue;
    Monomial power = Monomial::variable(first, g.exp[first]);
    Monomial rest = quotient(g, power);
    for (const Monomial& extra : {power, rest}) {
      std::vector<Monomial> next;
      for (const auto& h : gens)
        if (!divides(extra, h)) next.push_back(h);
      next.push_back(extra);
      irreducible_split(ring, std::move(next), out);
    }
    return;
  }
  out.push_back(std::move(gens));
}

inline Ideal ideal_of(const RingPtr& ring, const std::vector<Monomial>& gens) {
  std::vector<Polynomial> p;
  for (const auto& m : gens) p.push_back(Polynomial::monomial(ring, m));
  return Ideal(ring, p);
}

} // namespace detail

/// Minimal primes of a monomial ideal: minimal vertex covers of its supports.
inline std::vector<Ideal> minimal_primes_monomial(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_unit()) return {};
  std::vector<detail::Support> edges;
  for (const auto& m : detail::monomial_generators(ideal)) edges.push_back(detail::support_of(m, ring->nvars()));
  std::vector<detail::Support> covers;
  detail::vertex_covers(edges, 0, 0, covers);
  std::vector<Ideal> out;
  for (auto s : detail::minimal_sets(covers)) out.push_back(detail::prime_of_support(ring, s));
  sort_primes(out);
  return out;
}

struct PrimaryPair {
  Ideal primary;
  Ideal prime;
};

/// Irredundant primary decomposition of a proper monomial ideal, one
/// component per associated prime, sorted by prime.
inline std::vector<PrimaryPair> primary_decomposition_monomial(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  if (ideal.is_unit()) throw InvalidArgument("the unit ideal has no primary decomposition");
  if (ideal.is_zero()) return {{ideal, ideal}};
  std::vector<std::vector<Monomial>> leaves;
  detail::irreducible_split(ring, detail::monomial_generators(ideal), leaves);
  std::vector<Ideal> irreducible;
  for (const auto& l : leaves) {
    Ideal q = detail::ideal_of(ring, l);
    if (!contains_prime(irreducible, q)) irreducible.push_back(q);
  }
  std::vector<Ideal> kept;
  for (std::size_t i = 0; i < irreducible.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < irreducible.size() && !redundant; ++j)
      redundant = j != i && irreducible[i].contains(irreducible[j]) && !(irreducible[i] == irreducible[j]);
    if (!redundant) kept.push_back(irreducible[i]);
  }
  std::vector<PrimaryPair> groups;
  for (const auto& q : kept) {
    detail::Support s = 0;
    for (const auto& m : detail::monomial_generators(q)) s |= detail::support_of(m, ring->nvars());
    Ideal p = detail::prime_of_support(ring, s);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const PrimaryPair& g) { return g.prime == p; });
    if (it == groups.end()) groups.push_back({q, p});
    else it->primary = intersect(it->primary, q);
  }
  for (std::size_t i = 0; i < groups.size();) {
    std::vector<Ideal> others;
    for (std::size_t j = 0; j < groups.size(); ++j)
      if (j != i) others.push_back(groups[j].primary);
    if (groups.size() > 1 && intersect_all(ring, others) == ideal) groups.erase(groups.begin() + std::ptrdiff_t(i));
    else ++i;
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const PrimaryPair& a, const PrimaryPair& b) { return prime_less(a.prime, b.prime); });
  return groups;
}

/// Ass(M) through the support of Ext: p is associated iff it is minimal over
/// ann Ext^{ht p}(M, R). Every such annihilator must be monomial.
inline std::vector<Ideal> associated_primes(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  PresentedModule r = PresentedModule::free(ring, 1);
  std::vector<Ideal> out;
  for (int i = 0; i <= int(ring->nvars()); ++i) {
    PresentedModule e = ext(m, r, i);
    if (e.is_zero()) continue;
    Ideal a = annihilator(e);
    if (!a.is_monomial())
      throw Unsupported("associated primes need monomial Ext annihilators; got " + a.to_string() +
                        " in degree " + std::to_string(i) + "; supply candidate primes");
    for (auto& p : minimal_primes_monomial(a))
      if (height(p) == i && !contains_prime(out, p)) out.push_back(std::move(p));
  }
  sort_primes(out);
  return out;
}

/// The candidates p (caller-asserted prime) with ann Ext^{ht p}(M, R) inside p.
inline std::vector<Ideal> associated_primes(const PresentedModule& m, const std::vector<Ideal>& candidates) {
  PresentedModule r = PresentedModule::free(m.ring(), 1);
  std::vector<Ideal> out;
  for (const auto& p : candidates) {
    require_prime_if_monomial(p);
    if (p.contains(annihilator(ext(m, r, height(p)))) && !contains_prime(out, p)) out.push_back(p);
  }
  sort_primes(out);
  return out;
}

/// Minimal elements of a prime list under inclusion.
inline std::vector<Ideal> minimal_elements(const std::vector<Ideal>& primes) {
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < primes.size() && minimal; ++j)
      minimal = j == i || !(primes[i].contains(primes[j]) && !(primes[i] == primes[j]));
    if (minimal) out.push_back(primes[i]);
  }
  return out;
}

/// Primes p of the list with dim R/p = t.
inline std::vector<Ideal> primes_of_dimension(const std::vector<Ideal>& primes, int t) {
  std::vector<Ideal> out;
  for (const auto& p : primes)
    if (dimension(p) == t) out.push_back(p);
  return out;
}

/// Primes p of the list with dim R/p >= t.
inline std::vector<Ideal> primes_of_dimension_at_least(const std::vector<Ideal>& primes, int t) {
  std::vector<Ideal> out;
  for (const auto& p : primes)
    if (dimension(p) >= t) out.push_back(p);
  return out;
}

struct PrimaryComponent {
  Submodule component;
  Ideal prime;
};

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct DecompositionCertificate {
  PresentedModule module;
  std::vector<PrimaryComponent> components;
  std::vector<Check> checks;

  bool verified() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  std::vector<Check> failures() const {
    std::vector<Check> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c);
    return out;
  }
  std::vector<Ideal> primes() const {
    std::vector<Ideal> out;
    for (const auto& c : components) out.push_back(c.prime);
    return out;
  }
};

namespace detail {

/// f is in the radical of J iff J : f^infinity is the unit ideal.
inline bool in_radical(const Polynomial& f, const Ideal& j) {
  return saturate(j, Ideal(j.ring(), {f})).result.is_unit();
}

} // namespace detail

/// Checks that the components form a minimal primary decomposition of 0 in M.
inline DecompositionCertificate verify_decomposition(const PresentedModule& m,
                                                     std::vector<PrimaryComponent> components) {
  const RingPtr& ring = m.ring();
  for (const auto& c : components) {
    require_same_ring(ring, c.component.ring());
    require_same_ring(ring, c.prime.ring());
    if (c.component.rank() != m.rank()) throw RingMismatch("component does not live in the module's ambient");
  }
  DecompositionCertificate cert{m, std::move(components), {}};
  const auto& comps = cert.components;
  const Submodule& zero = m.image();

  Check primes{"primes", true, false, ""};
  for (const auto& c : comps) {
    if (c.prime.is_unit() || (c.prime.is_monomial() && !is_monomial_prime(c.prime))) {
      primes.passed = false;
      primes.detail += c.prime.to_string() + " is not prime; ";
    } else if (!c.prime.is_monomial()) {
      primes.detail += c.prime.to_string() + " caller-asserted prime; ";
    }
  }
  cert.checks.push_back(primes);

  Check contains{"contains_relations", true, false, ""};
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (!comps[i].component.contains(zero)) {
      contains.passed = false;
      contains.detail += "component " + std::to_string(i + 1) + " misses relations; ";
    }
  cert.checks.push_back(contains);

  std::vector<Submodule> all;
  for (const auto& c : comps) all.push_back(c.component);
  Submodule meet = intersect_all(ring, m.rank(), all);
  Check inter{"intersection_is_zero", zero.contains(meet) && meet.contains(zero), false, ""};
  if (!inter.passed) inter.detail = "intersection " + meet.to_string() + " differs from " + zero.to_string();
  cert.checks.push_back(inter);

  Check irred{"irredundant", true, false, ""};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<Submodule> others;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i) others.push_back(comps[j].component);
    if (zero.contains(intersect_all(ring, m.rank(), others))) {
      irred.passed = false;
      irred.detail += "component " + std::to_string(i + 1) + " is redundant; ";
    }
  }
  cert.checks.push_back(irred);

  Check distinct{"distinct_primes", true, false, ""};
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (comps[i].prime == comps[j].prime) {
        distinct.passed = false;
        distinct.detail += "components " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " share a prime; ";
      }
  cert.checks.push_back(distinct);

  Check radical{"radical_of_annihilator", true, false, ""};
  Check single{"single_associated_prime", true, false, ""};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    PresentedModule q = PresentedModule::quotient(comps[i].component);
    Ideal ann = annihilator(q);
    bool ok = comps[i].prime.contains(ann);
    for (const auto& f : comps[i].prime.generators()) ok = ok && detail::in_radical(f, ann);
    if (!ok) {
      radical.passed = false;
      radical.detail += "component " + std::to_string(i + 1) + ": radical of " + ann.to_string() + " is not " +
                        comps[i].prime.to_string() + "; ";
    }
    try {
      std::vector<Ideal> ass = associated_primes(q);
      if (!(ass.size() == 1 && ass.front() == comps[i].prime)) {
        single.passed = false;
        single.detail += "component " + std::to_string(i + 1) + " has associated primes";
        for (const auto& p : ass) single.detail += " " + p.to_string();
        single.detail += "; ";
      }
    } catch (const Unsupported&) {
      single.skipped = true;
      single.detail += "component " + std::to_string(i + 1) + " caller-asserted; ";
    }
  }
  cert.checks.push_back(radical);
  cert.checks.push_back(single);
  return cert;
}

/// Certified minimal primary decomposition of R/I for monomial I.
inline DecompositionCertificate decompose(const PresentedModule& m) {
  if (m.rank() != 1) throw Unsupported("automatic decomposition needs a cyclic module R/I");
  Ideal i = annihilator(m);
  if (!i.is_monomial()) throw Unsupported("automatic decomposition needs a monomial ideal");
  std::vector<PrimaryComponent> comps;
  if (!i.is_unit())
    for (auto& pair : primary_decomposition_monomial(i)) comps.push_back({pair.primary.as_submodule(), pair.prime});
  return verify_decomposition(m, std::move(comps));
}

inline void require_verified(const DecompositionCertificate& cert) {
  if (cert.verified()) return;
  std::string msg = "decomposition certificate failed:";
  for (const auto& c : cert.failures()) msg += " " + c.name + " (" + c.detail + ")";
  throw InvalidArgument(msg);
}

/// The intersection of the components whose primes lie in sigma, computed
/// directly and as the saturation of 0 by the intersection of the other
/// associated primes; the two must agree.
inline Submodule isolated_component(const DecompositionCertificate& cert, const std::vector<Ideal>& sigma) {
  const PresentedModule& m = cert.module;
  const RingPtr& ring = m.ring();
  std::vector<Ideal> ass = cert.primes();
  for (const auto& p : sigma)
    if (!contains_prime(ass, p)) throw InvalidArgument("prime " + p.to_string() + " is not an associated prime");
  std::vector<Ideal> rest;
  for (const auto& q : ass)
    if (!contains_prime(sigma, q)) rest.push_back(q);
  for (const auto& q : rest)
    for (const auto& p : sigma)
      if (p.contains(q))
        throw InvalidArgument("set is not isolated: " + q.to_string() + " lies outside it but inside " + p.to_string());

  std::vector<Submodule> chosen;
  for (const auto& c : cert.components)
    if (contains_prime(sigma, c.prime)) chosen.push_back(c.component);
  Submodule direct = intersect_all(ring, m.rank(), chosen);
  Ideal b = intersect_all(ring, rest);
  Submodule saturated = saturate(m.image(), b).result;
  if (!(direct.contains(saturated) && saturated.contains(direct)))
    throw CrossCheckFailure("isolated component differs between intersection " + direct.to_string() +
                            " and saturation " + saturated.to_string());
  return direct;
}

} // namespace annibounds
