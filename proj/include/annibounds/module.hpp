#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <vector>

#include "annibounds/ideal.hpp"

namespace annibounds {

/// An integer or +infinity (grade of a module that equals aN).
class ExtendedInt {
public:
  constexpr ExtendedInt(int value = 0) noexcept : value_(value) {}
  static constexpr ExtendedInt infinity() noexcept {
    ExtendedInt e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const noexcept { return infinite_; }
  int value() const {
    if (infinite_) throw InvalidArgument("value of an infinite quantity");
    return value_;
  }

  friend bool operator==(const ExtendedInt& a, const ExtendedInt& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const ExtendedInt& a, const ExtendedInt& b) noexcept {
    if (a.infinite_) return false;
    return b.infinite_ || a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedInt& a, const ExtendedInt& b) noexcept { return !(b < a); }
  friend bool operator>(const ExtendedInt& a, const ExtendedInt& b) noexcept { return b < a; }
  friend bool operator>=(const ExtendedInt& a, const ExtendedInt& b) noexcept { return !(a < b); }

  std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedInt& e) { return os << e.to_string(); }

private:
  int value_ = 0;
  bool infinite_ = false;
};

/// Dense column form of a matrix: cols[j][i] is the entry in row i.
using DenseColumns = std::vector<std::vector<Polynomial>>;

namespace detail {

inline DenseColumns to_dense(const std::vector<FreeElement>& cols) {
  DenseColumns out;
  out.reserve(cols.size());
  for (const auto& c : cols) out.push_back(c.components());
  return out;
}

inline std::vector<FreeElement> from_dense(const RingPtr& ring, std::size_t rows, const DenseColumns& cols) {
  std::vector<FreeElement> out;
  for (const auto& c : cols) {
    if (c.size() != rows) throw InvalidArgument("column length does not match the row count");
    if (rows == 0) continue;
    FreeElement v = FreeElement::from_components(ring, c);
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

/// Repeatedly removes row i and column j when entry (i,j) is a nonzero
/// constant, clearing row i from the other columns first. Returns the
/// original indices of the rows that were removed, ascending.
inline std::vector<std::size_t> prune_units(const RingPtr& ring, std::size_t& rows, DenseColumns& cols) {
  std::vector<std::size_t> alive(rows);
  for (std::size_t i = 0; i < rows; ++i) alive[i] = i;
  std::vector<std::size_t> removed;
  const Field& field = ring->field();
  for (;;) {
    std::size_t pj = cols.size(), pi = 0;
    for (std::size_t j = 0; j < cols.size() && pj == cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i)
        if (cols[j][i].is_constant() && !cols[j][i].is_zero()) {
          pj = j;
          pi = i;
          break;
        }
    if (pj == cols.size()) break;
    Scalar inv = field.inv(cols[pj][pi].leading_term().coeff);
    std::vector<Polynomial> pivot = cols[pj];
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k == pj || cols[k][pi].is_zero()) continue;
      Polynomial factor = cols[k][pi] * Polynomial::constant(ring, inv);
      for (std::size_t i = 0; i < cols[k].size(); ++i)
        if (!pivot[i].is_zero()) cols[k][i] = cols[k][i] - factor * pivot[i];
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pj));
    for (auto& c : cols) c.erase(c.begin() + static_cast<std::ptrdiff_t>(pi));
    removed.push_back(alive[pi]);
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pi));
    --rows;
  }
  DenseColumns kept;
  for (auto& c : cols) {
    bool zero = std::all_of(c.begin(), c.end(), [](const Polynomial& p) { return p.is_zero(); });
    if (!zero) kept.push_back(std::move(c));
  }
  cols = std::move(kept);
  std::sort(removed.begin(), removed.end());
  return removed;
}

/// K-linear span of vectors, kept in echelon form by leading monomial.
class LinearSpan {
public:
  LinearSpan(TermOrder order, Field field) : order_(std::move(order)), field_(field) {}

  TermList reduce(TermList v) const {
    TermList done;
    while (!v.empty()) {
      auto it = pivots_.find(key(v.front().mono));
      if (it == pivots_.end()) {
        done.push_back(v.front());
        v.erase(v.begin());
        continue;
      }
      v = terms::add_scaled(v, field_.neg(v.front().coeff), Monomial::one(), it->second, order_, field_);
    }
    return done;
  }

  bool insert(TermList v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    terms::make_monic(v, field_);
    pivots_.emplace(key(v.front().mono), std::move(v));
    return true;
  }

private:
  static std::vector<std::uint32_t> key(const Monomial& m) {
    std::vector<std::uint32_t> k(m.exp.begin(), m.exp.end());
    k.push_back(m.component);
    return k;
  }
  TermOrder order_;
  Field field_;
  std::map<std::vector<std::uint32_t>, TermList> pivots_;
};

/// A minimal homogeneous generating set of the span of `cols` in R^rank,
/// chosen greedily in order of degree and then input position.
inline std::vector<FreeElement> minimal_generators(const RingPtr& ring, std::size_t rank,
                                                   const std::vector<FreeElement>& cols,
                                                   const std::vector<int>& shifts) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if (!cols[i].is_zero()) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return cols[a].degree(shifts) < cols[b].degree(shifts);
  });
  std::vector<FreeElement> kept;
  std::size_t pos = 0;
  while (pos < idx.size()) {
    int d = cols[idx[pos]].degree(shifts);
    std::optional<GroebnerBasis> lower;
    if (!kept.empty()) lower = buchberger(ring, rank, kept, {});
    LinearSpan span(ring->term_order(), ring->field());
    for (; pos < idx.size() && cols[idx[pos]].degree(shifts) == d; ++pos) {
      const FreeElement& c = cols[idx[pos]];
      FreeElement nf = lower ? normal_form(c, *lower) : c;
      if (span.insert(nf.terms())) kept.push_back(c);
    }
  }
  return kept;
}

} // namespace detail

/// A free resolution F_k -> ... -> F_1 -> F_0 of a presented module.
/// maps[k-1] holds the columns of d_k : F_k -> F_{k-1}.
struct Resolution {
  RingPtr ring;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<FreeElement>> maps;
  /// Degrees of the basis elements of each F_k, present for graded input.
  std::optional<std::vector<std::vector<int>>> shifts;
  /// True when the last map is injective (the resolution terminated).
  bool complete = false;

  /// Index of the last nonzero free module; -1 for the zero module.
  int length() const {
    int len = -1;
    for (std::size_t k = 0; k < ranks.size(); ++k)
      if (ranks[k] > 0) len = static_cast<int>(k);
    return len;
  }
  std::size_t rank(std::size_t k) const { return k < ranks.size() ? ranks[k] : 0; }
  const std::vector<FreeElement>& differential(std::size_t k) const {
    static const std::vector<FreeElement> none;
    return k >= 1 && k <= maps.size() ? maps[k - 1] : none;
  }
};

class PresentedModule;

/// A homomorphism given by images of the source generators in the target's
/// ambient free module.
struct ModuleMap;

/// M = R^rank / (span of the relation columns).
class PresentedModule {
public:
  PresentedModule() = default;
  PresentedModule(RingPtr ring, std::size_t rank, std::vector<FreeElement> relations,
                  std::optional<std::vector<int>> grading = std::nullopt)
      : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {
    for (auto& v : relations) {
      require_same_ring(ring_, v.ring());
      if (v.rank() != rank_) throw RingMismatch("relation length does not match the module rank");
      if (!v.is_zero()) relations_.push_back(std::move(v));
    }
    if (grading) {
      if (grading->size() != rank_) throw InvalidArgument("grading length does not match the module rank");
      for (const auto& v : relations_)
        if (!v.is_homogeneous(*grading)) throw InvalidArgument("relations are not homogeneous for the grading");
      grading_ = std::move(grading);
    } else {
      grading_ = infer_grading();
    }
    image_ = Submodule(ring_, rank_, relations_);
  }

  /// Matrix given by rows: rows[i][j] is the entry of relation j in generator i.
  static PresentedModule from_rows(RingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& row : rows)
      if (row.size() != cols) throw InvalidArgument("matrix rows have different lengths");
    std::vector<FreeElement> rel;
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Polynomial> c;
      for (const auto& row : rows) c.push_back(row[j]);
      rel.push_back(FreeElement::from_components(ring, c));
    }
    return PresentedModule(ring, rows.size(), std::move(rel));
  }

  static PresentedModule free(RingPtr ring, std::size_t rank) { return PresentedModule(ring, rank, {}); }

  /// R / I.
  static PresentedModule quotient(const Ideal& ideal) {
    std::vector<FreeElement> rel;
    for (const auto& g : ideal.generators()) rel.push_back(FreeElement::from_polynomial(g));
    return PresentedModule(ideal.ring(), 1, std::move(rel));
  }

  /// R^rank / U.
  static PresentedModule quotient(const Submodule& u) {
    return PresentedModule(u.ring(), u.rank(), u.generators());
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<FreeElement>& relations() const noexcept { return relations_; }
  const std::optional<std::vector<int>>& grading() const noexcept { return grading_; }
  bool is_graded() const noexcept { return grading_.has_value(); }

  /// The relation submodule im P of R^rank.
  const Submodule& image() const noexcept { return image_; }

  bool is_zero() const { return image_.is_whole(); }

  /// M / (U + im P) for U in the ambient free module.
  PresentedModule quotient_by(const Submodule& u) const {
    if (u.rank() != rank_) throw RingMismatch("submodule rank does not match the module rank");
    std::vector<FreeElement> rel = relations_;
    for (const auto& g : u.generators()) rel.push_back(g);
    return PresentedModule(ring_, rank_, std::move(rel), homogeneous_grading_for(u));
  }

  /// The submodule (U + im P) / im P of M, presented on the generators of U.
  PresentedModule submodule(const Submodule& u) const {
    if (u.rank() != rank_) throw RingMismatch("submodule rank does not match the module rank");
    std::vector<FreeElement> gens = u.generators();
    const std::size_t k = gens.size();
    std::vector<FreeElement> all = gens;
    for (const auto& r : relations_) all.push_back(r);
    std::vector<FreeElement> rel;
    for (const auto& s : syzygies(ring_, rank_, all)) rel.push_back(truncate(s, k));
    std::optional<std::vector<int>> grading;
    if (grading_) {
      bool ok = true;
      std::vector<int> degs;
      for (const auto& g : gens) {
        ok = ok && g.is_homogeneous(*grading_);
        if (ok) degs.push_back(g.degree(*grading_));
      }
      if (ok) grading = degs;
    }
    return PresentedModule(ring_, k, std::move(rel), grading);
  }

  /// Cached free resolution of length at most nvars + 1; minimal when graded.
  const Resolution& resolution() const {
    std::call_once(cache_->once, [&] { cache_->resolution = compute_resolution(ring_->nvars() + 1); });
    return cache_->resolution;
  }

  std::string to_string() const {
    std::string s = "coker[";
    for (std::size_t j = 0; j < relations_.size(); ++j) {
      if (j) s += ", ";
      s += relations_[j].to_string();
    }
    return s + "] in R^" + std::to_string(rank_);
  }

  Resolution compute_resolution(std::size_t max_length) const {
    Resolution res;
    res.ring = ring_;
    std::size_t rows = rank_;
    DenseColumns cols = detail::to_dense(relations_);
    std::vector<std::size_t> removed = detail::prune_units(ring_, rows, cols);
    std::vector<int> shift0;
    if (grading_)
      for (std::size_t i = 0, k = 0; i < rank_; ++i) {
        if (k < removed.size() && removed[k] == i) {
          ++k;
          continue;
        }
        shift0.push_back((*grading_)[i]);
      }
    std::vector<FreeElement> d = detail::from_dense(ring_, rows, cols);
    if (grading_) d = detail::minimal_generators(ring_, rows, d, shift0);
    res.ranks.push_back(rows);
    std::vector<std::vector<int>> shifts{shift0};
    if (max_length == 0) {
      res.complete = d.empty();
      if (grading_) res.shifts = shifts;
      return res;
    }
    for (std::size_t k = 1; !d.empty(); ++k) {
      std::vector<int> sk;
      if (grading_)
        for (const auto& c : d) sk.push_back(c.degree(shifts.back()));
      res.ranks.push_back(d.size());
      res.maps.push_back(d);
      shifts.push_back(sk);
      if (k == max_length) break;
      std::vector<FreeElement> next = syzygies(ring_, res.ranks[k - 1], d);
      if (grading_) {
        next = detail::minimal_generators(ring_, d.size(), next, sk);
      } else {
        std::size_t nrows = d.size();
        DenseColumns dense = detail::to_dense(next);
        std::vector<std::size_t> gone = detail::prune_units(ring_, nrows, dense);
        for (auto it = gone.rbegin(); it != gone.rend(); ++it)
          res.maps.back().erase(res.maps.back().begin() + static_cast<std::ptrdiff_t>(*it));
        res.ranks.back() = nrows;
        next = detail::from_dense(ring_, nrows, dense);
      }
      d = std::move(next);
    }
    res.complete = d.empty();
    if (grading_) res.shifts = shifts;
    return res;
  }

private:
  struct Cache {
    std::once_flag once;
    Resolution resolution;
  };

  static FreeElement truncate(const FreeElement& v, std::size_t k) {
    TermList t;
    for (const auto& term : v.terms())
      if (term.mono.component < k) t.push_back(term);
    return FreeElement(v.ring(), k, std::move(t));
  }

  std::optional<std::vector<int>> homogeneous_grading_for(const Submodule& u) const {
    if (!grading_) return std::nullopt;
    for (const auto& g : u.generators())
      if (!g.is_homogeneous(*grading_)) return std::nullopt;
    return grading_;
  }

  /// Row degrees making every relation homogeneous, or nullopt if none exist.
  std::optional<std::vector<int>> infer_grading() const {
    const std::size_t s = relations_.size();
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(rank_ + s);
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t i = 0; i < rank_; ++i) {
        Polynomial e = relations_[j].component(i);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) return std::nullopt;
        adj[i].push_back({rank_ + j, e.degree()});
        adj[rank_ + j].push_back({i, -e.degree()});
      }
    }
    std::vector<std::optional<int>> deg(rank_ + s);
    for (std::size_t start = 0; start < rank_; ++start) {
      if (deg[start]) continue;
      deg[start] = 0;
      std::queue<std::size_t> q;
      q.push(start);
      while (!q.empty()) {
        std::size_t u = q.front();
        q.pop();
        for (auto [v, w] : adj[u]) {
          int want = *deg[u] + w;
          if (!deg[v]) {
            deg[v] = want;
            q.push(v);
          } else if (*deg[v] != want) {
            return std::nullopt;
          }
        }
      }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < rank_; ++i) out.push_back(*deg[i]);
    return out;
  }

  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<FreeElement> relations_;
  std::optional<std::vector<int>> grading_;
  Submodule image_;
  std::shared_ptr<Cache> cache_;
};

struct ModuleMap {
  PresentedModule source;
  PresentedModule target;
  std::vector<FreeElement> images;

  /// Source relations land in the target relations.
  bool is_well_defined() const {
    if (images.size() != source.rank()) return false;
    for (const auto& rel : source.relations()) {
      FreeElement acc(target.ring(), target.rank());
      for (std::size_t i = 0; i < images.size(); ++i) acc = acc + rel.component(i) * images[i];
      if (!target.image().contains(acc)) return false;
    }
    return true;
  }
};

/// The differentials of the resolution as maps between free modules.
inline std::vector<ModuleMap> resolution_maps(const Resolution& res) {
  std::vector<ModuleMap> out;
  for (std::size_t k = 1; k <= res.maps.size(); ++k)
    out.push_back({PresentedModule::free(res.ring, res.rank(k)), PresentedModule::free(res.ring, res.rank(k - 1)),
                   res.maps[k - 1]});
  return out;
}

inline Resolution free_resolution(const PresentedModule& m, std::size_t max_length) {
  const std::size_t cached = m.ring()->nvars() + 1;
  if (max_length > cached) return m.compute_resolution(max_length);
  Resolution r = m.resolution();
  if (r.maps.size() > max_length) {
    r.maps.resize(max_length);
    r.ranks.resize(max_length + 1);
    if (r.shifts) r.shifts->resize(max_length + 1);
    r.complete = false;
  }
  return r;
}

namespace detail {

/// Columns of Hom(d, N): the map Hom(F_src, N) -> Hom(F_dst, N) induced by
/// d : F_dst -> F_src (columns of d live in R^src_rank), as vectors in
/// R^{dst_rank * c}, one per basis element (i,k) of R^{src_rank * c}.
inline std::vector<FreeElement> hom_columns(const RingPtr& ring, const std::vector<FreeElement>& d,
                                            std::size_t src_rank, std::size_t c) {
  const std::size_t dst_rank = d.size();
  std::vector<FreeElement> out;
  std::vector<TermList> built(src_rank * c);
  for (std::size_t j = 0; j < dst_rank; ++j)
    for (const auto& t : d[j].terms()) {
      std::size_t i = t.mono.component;
      for (std::size_t k = 0; k < c; ++k) {
        Term term = t;
        term.mono.component = static_cast<std::uint32_t>(j * c + k);
        built[i * c + k].push_back(term);
      }
    }
  for (auto& b : built) out.emplace_back(ring, dst_rank * c, std::move(b));
  return out;
}

/// Q^{⊕copies}: the relations of N repeated on each block of c coordinates.
inline std::vector<FreeElement> block_relations(const RingPtr& ring, const PresentedModule& n, std::size_t copies) {
  const std::size_t c = n.rank();
  std::vector<FreeElement> out;
  for (std::size_t b = 0; b < copies; ++b)
    for (const auto& q : n.relations()) {
      TermList t = q.terms();
      for (auto& term : t) term.mono.component += static_cast<std::uint32_t>(b * c);
      out.emplace_back(ring, copies * c, std::move(t));
    }
  return out;
}

inline FreeElement leading_block(const FreeElement& v, std::size_t k) {
  TermList t;
  for (const auto& term : v.terms())
    if (term.mono.component < k) t.push_back(term);
  return FreeElement(v.ring(), k, std::move(t));
}

} // namespace detail

/// Ext^t_R(M, N) as a presented module, computed from a free resolution of M.
inline PresentedModule ext(const PresentedModule& m, const PresentedModule& n, int t) {
  require_same_ring(m.ring(), n.ring());
  if (t < 0) throw InvalidArgument("Ext degree must be nonnegative");
  const RingPtr& ring = m.ring();
  const std::size_t c = n.rank();
  if (static_cast<std::size_t>(t) > ring->nvars()) return PresentedModule::free(ring, 0);
  const Resolution& res = m.resolution();
  const std::size_t tt = static_cast<std::size_t>(t);
  const std::size_t at = res.rank(tt), anext = res.rank(tt + 1);
  const std::size_t dim = at * c;
  if (dim == 0) return PresentedModule::free(ring, 0);

  std::vector<FreeElement> z;
  if (anext == 0) {
    for (std::size_t i = 0; i < dim; ++i) z.push_back(FreeElement::basis(ring, dim, i));
  } else {
    std::vector<FreeElement> gens = detail::hom_columns(ring, res.differential(tt + 1), at, c);
    for (auto& q : detail::block_relations(ring, n, anext)) gens.push_back(std::move(q));
    for (const auto& s : syzygies(ring, anext * c, gens)) {
      FreeElement v = detail::leading_block(s, dim);
      if (!v.is_zero()) z.push_back(v);
    }
  }

  std::vector<FreeElement> b = detail::block_relations(ring, n, at);
  if (tt >= 1) {
    const std::size_t aprev = res.rank(tt - 1);
    for (auto& v : detail::hom_columns(ring, res.differential(tt), aprev, c))
      if (!v.is_zero()) b.push_back(std::move(v));
  }

  std::optional<std::vector<int>> zdeg;
  if (res.shifts && n.is_graded()) {
    std::vector<int> hom(dim);
    for (std::size_t i = 0; i < at; ++i)
      for (std::size_t k = 0; k < c; ++k) hom[i * c + k] = (*n.grading())[k] - (*res.shifts)[tt][i];
    std::vector<int> degs;
    for (const auto& v : z) degs.push_back(v.degree(hom));
    zdeg = degs;
  }

  const std::size_t s = z.size();
  std::vector<FreeElement> all = z;
  for (auto& v : b) all.push_back(std::move(v));
  std::vector<FreeElement> rel;
  for (const auto& syz : syzygies(ring, dim, all)) {
    FreeElement v = detail::leading_block(syz, s);
    if (!v.is_zero()) rel.push_back(v);
  }

  std::size_t rows = s;
  DenseColumns dense = detail::to_dense(rel);
  std::vector<std::size_t> removed = detail::prune_units(ring, rows, dense);
  std::optional<std::vector<int>> grading;
  if (zdeg) {
    std::vector<int> g;
    for (std::size_t i = 0, k = 0; i < s; ++i) {
      if (k < removed.size() && removed[k] == i) {
        ++k;
        continue;
      }
      g.push_back((*zdeg)[i]);
    }
    grading = g;
  }
  std::vector<FreeElement> cols = detail::from_dense(ring, rows, dense);
  if (grading) cols = detail::minimal_generators(ring, rows, cols, *grading);
  return PresentedModule(ring, rows, std::move(cols), grading);
}

/// {f : f M = 0}: the intersection over generators e_j of (im P : e_j).
inline Ideal annihilator(const PresentedModule& m) {
  const RingPtr& ring = m.ring();
  const std::size_t r = m.rank();
  if (r == 0) return Ideal::unit(ring);
  if (r == 1) {
    std::vector<Polynomial> gens;
    for (const auto& v : m.relations()) gens.push_back(v.component(0));
    return Ideal(ring, gens);
  }
  std::vector<Ideal> parts;
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<int> weights(r, 1);
    weights[j] = 0;
    GroebnerBasis g = buchberger(ring, r, m.relations(), weights);
    std::vector<Polynomial> gens;
    for (const auto& e : g.elements) {
      if (e.front().mono.component != j) continue;
      TermList t = e;
      for (auto& term : t) term.mono.component = 0;
      gens.emplace_back(ring, std::move(t));
    }
    Ideal part(ring, gens);
    if (part.is_zero()) return Ideal::zero(ring);
    parts.push_back(std::move(part));
  }
  return intersect_all(ring, parts);
}

/// Least i with Ext^i(R/a, N) != 0; infinity when aN = N.
inline ExtendedInt grade(const Ideal& a, const PresentedModule& n) {
  require_same_ring(a.ring(), n.ring());
  if ((a + annihilator(n)).is_unit()) return ExtendedInt::infinity();
  PresentedModule quotient = PresentedModule::quotient(a);
  const int nv = static_cast<int>(a.ring()->nvars());
  for (int i = 0; i <= nv; ++i)
    if (!ext(quotient, n, i).is_zero()) return i;
  throw CrossCheckFailure("no nonvanishing Ext found below the global dimension");
}

/// A monomial ideal generated by variables (the zero ideal included).
inline bool is_monomial_prime(const Ideal& p) {
  if (!p.is_monomial() || p.is_unit()) return false;
  for (const auto& g : p.canonical_generators())
    if (g.degree() != 1) return false;
  return true;
}

inline void require_prime_if_monomial(const Ideal& p) {
  if (p.is_unit()) throw InvalidArgument("the unit ideal is not prime");
  if (p.is_monomial() && !is_monomial_prime(p))
    throw InvalidArgument("monomial ideal " + p.to_string() + " is not prime");
}

/// depth of M_p: least i with ann Ext^i(R/p, M) contained in p.
inline ExtendedInt depth_at_prime(const PresentedModule& m, const Ideal& p) {
  require_same_ring(m.ring(), p.ring());
  require_prime_if_monomial(p);
  PresentedModule quotient = PresentedModule::quotient(p);
  const int nv = static_cast<int>(p.ring()->nvars());
  for (int i = 0; i <= nv; ++i) {
    PresentedModule e = ext(quotient, m, i);
    if (p.contains(annihilator(e))) return i;
  }
  return ExtendedInt::infinity();
}

/// Length of the minimal graded free resolution; -1 for the zero module.
inline int projective_dimension(const PresentedModule& m) {
  if (!m.is_graded()) throw Unsupported("projective dimension needs a graded presentation");
  const Resolution& res = m.resolution();
  if (!res.complete) throw CrossCheckFailure("graded resolution did not terminate");
  return res.length();
}

/// Krull dimension of M, that of R / ann M.
inline int dimension(const PresentedModule& m) { return dimension(annihilator(m)); }

} // namespace annibounds
