#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "art/matrix.hpp"

namespace art {

using VertexId = std::size_t;

struct Arrow {
  std::string name;
  VertexId src = 0, dst = 0;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;
  bool operator==(const Quiver&) const = default;
};

/// A path, stored in traversal order: arrows[0] is walked first.
/// Length-zero paths are the vertex idempotents e_v.
struct Path {
  VertexId src = 0, dst = 0;
  std::vector<std::size_t> arrows;  // indices into Quiver::arrows

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
  bool operator<(const Path& o) const {
    if (src != o.src) return src < o.src;
    return arrows < o.arrows;
  }
};

template <class F>
struct RelationTerm {
  typename F::Elt coeff;
  Path path;
};
template <class F>
using Relation = std::vector<RelationTerm<F>>;

namespace detail {

struct PathKey {
  VertexId src;
  std::vector<std::size_t> arrows;
  bool operator<(const PathKey& o) const {
    if (src != o.src) return src < o.src;
    return arrows < o.arrows;
  }
};

}  // namespace detail

/// One associative algebra value, presented either by a bound quiver (basis =
/// surviving path monomials) or by raw structure constants. Immutable after
/// construction; shared by reference from modules and morphisms.
template <class F>
struct Algebra {
  enum class Kind { QuiverPath, Structure };
  using Elt = typename F::Elt;
  using Vec = std::vector<Elt>;

  Kind kind = Kind::Structure;
  F field;

  // Quiver presentation
  Quiver quiver;
  std::vector<Relation<F>> relations;
  std::size_t nilpotency = 0;  // least N with (arrow ideal)^N = 0
  std::vector<Path> basis_paths;
  std::map<detail::PathKey, std::vector<std::pair<std::size_t, Elt>>> path_reduce;

  /// Coordinates over the basis of an arbitrary path (zero if it lies in the
  /// ideal or in the vanishing degree).
  Vec reduce_path(const Path& p) const {
    Vec r(dim(), field.zero());
    if (p.length() >= nilpotency) return r;
    auto it = path_reduce.find({p.src, p.arrows});
    if (it == path_reduce.end()) return r;
    for (const auto& [k, c] : it->second) r[k] = c;
    return r;
  }

  // Structure constants: mult[i][j] = coordinates of g_i * g_j.
  // For the quiver kind the product is "g_j traversed first, then g_i"
  // (function composition order), so left-module actions are homomorphisms.
  std::vector<std::vector<Vec>> mult;
  Vec unit;

  std::size_t dim() const { return mult.size(); }
  std::size_t vertices() const { return kind == Kind::QuiverPath ? quiver.vertex_count : 1; }

  bool is_quiver() const { return kind == Kind::QuiverPath; }

  Vec zero_vec() const { return Vec(dim(), field.zero()); }

  Vec mul_vec(const Vec& x, const Vec& y) const {
    Vec r = zero_vec();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (field.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (field.is_zero(y[j])) continue;
        const auto c = field.mul(x[i], y[j]);
        const Vec& m = mult[i][j];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!field.is_zero(m[k])) r[k] = field.add(r[k], field.mul(c, m[k]));
      }
    }
    return r;
  }

  Mat<F> left_mult_matrix(const Vec& x) const {
    Mat<F> L(field, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec ej = zero_vec();
      ej[j] = field.one();
      Vec col = mul_vec(x, ej);
      for (std::size_t i = 0; i < dim(); ++i) L.at(i, j) = col[i];
    }
    return L;
  }

  Mat<F> right_mult_matrix(const Vec& x) const {
    Mat<F> R(field, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec ej = zero_vec();
      ej[j] = field.one();
      Vec col = mul_vec(ej, x);
      for (std::size_t i = 0; i < dim(); ++i) R.at(i, j) = col[i];
    }
    return R;
  }

  // --- quiver-specific accessors ---

  const Path& path_of(std::size_t basis_idx) const { return basis_paths[basis_idx]; }

  /// Basis index of the arrow a (arrows always survive: relations have length >= 2).
  std::size_t arrow_basis_index(std::size_t arrow_idx) const {
    for (std::size_t i = 0; i < basis_paths.size(); ++i)
      if (basis_paths[i].length() == 1 && basis_paths[i].arrows[0] == arrow_idx) return i;
    throw std::logic_error("arrow not in basis");
  }

  std::vector<std::size_t> basis_from(VertexId v) const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < basis_paths.size(); ++i)
      if (basis_paths[i].src == v) r.push_back(i);
    return r;
  }

  std::vector<std::size_t> basis_from_to(VertexId v, VertexId u) const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < basis_paths.size(); ++i)
      if (basis_paths[i].src == v && basis_paths[i].dst == u) r.push_back(i);
    return r;
  }

  bool operator==(const Algebra& o) const {
    if (kind != o.kind || !(field == o.field) || dim() != o.dim()) return false;
    if (kind == Kind::QuiverPath) {
      if (!(quiver == o.quiver) || !(basis_paths == o.basis_paths)) return false;
    }
    if (!vec_eq(unit, o.unit)) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        if (!vec_eq(mult[i][j], o.mult[i][j])) return false;
    return true;
  }

 private:
  bool vec_eq(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!field.eq(a[k], b[k])) return false;
    return true;
  }
};

template <class F>
using AlgebraRef = std::shared_ptr<const Algebra<F>>;

/// Builder for bound quiver algebras. Enumerates paths degree by degree and
/// reduces each degree against the relation ideal with one Gaussian
/// elimination per (source, target) block. Relations must be parallel paths
/// of a common length, so the ideal is graded and each degree closes on its
/// own; the admissibility search stops at the first degree where every
/// surviving path block is annihilated.
template <class F>
class QuiverAlgebraBuilder {
 public:
  QuiverAlgebraBuilder(Quiver q, std::vector<Relation<F>> rels, F f, std::size_t max_len = 32)
      : q_(std::move(q)), rels_(std::move(rels)), f_(f), max_len_(max_len) {}

  AlgebraRef<F> build() {
    validate();
    auto A = std::make_shared<Algebra<F>>();
    A->kind = Algebra<F>::Kind::QuiverPath;
    A->field = f_;
    A->quiver = q_;
    A->relations = rels_;

    // paths_by_deg[l] = all paths of length l, deterministic order
    std::vector<std::vector<Path>> paths_by_deg;
    {
      std::vector<Path> deg0;
      for (VertexId v = 0; v < q_.vertex_count; ++v) deg0.push_back(Path{v, v, {}});
      paths_by_deg.push_back(std::move(deg0));
    }

    // Per degree: RREF of the ideal component in each (src,dst) block, plus
    // the reduction of every path to the surviving basis.
    std::map<detail::PathKey, std::vector<std::pair<std::size_t, typename F::Elt>>> reduce;
    std::vector<Path> basis;
    // ideal rows by degree and (s,t): stored as combinations of that block's paths
    std::map<std::pair<VertexId, VertexId>, Echelon<F>> prev_ideal;

    std::size_t max_rel_len = 0;
    for (const auto& r : rels_) max_rel_len = std::max(max_rel_len, r[0].path.length());

    // degree 0: idempotents survive untouched
    for (VertexId v = 0; v < q_.vertex_count; ++v) {
      basis.push_back(Path{v, v, {}});
      reduce[{v, {}}] = {{v, f_.one()}};
    }

    std::size_t N = 0;
    for (std::size_t len = 1;; ++len) {
      if (len > max_len_)
        throw std::invalid_argument(
            "algebra is not finite-dimensional or the ideal is not admissible "
            "(no vanishing degree up to length " +
            std::to_string(max_len_) + ")");
      std::vector<Path> cur;
      for (const auto& p : paths_by_deg[len - 1])
        for (std::size_t a = 0; a < q_.arrows.size(); ++a)
          if (q_.arrows[a].src == p.dst) {
            Path np = p;
            np.arrows.push_back(a);
            np.dst = q_.arrows[a].dst;
            cur.push_back(std::move(np));
          }
      if (cur.size() > 200000)
        throw std::invalid_argument("path explosion: algebra too large or not admissible");
      if (cur.empty()) {
        N = len;  // no paths at all from here on
        break;
      }

      // group the degree-len paths by (src,dst)
      std::map<std::pair<VertexId, VertexId>, std::vector<std::size_t>> groups;
      for (std::size_t i = 0; i < cur.size(); ++i)
        groups[{cur[i].src, cur[i].dst}].push_back(i);
      auto local_index = [&](const Path& p) -> std::size_t {
        const auto& g = groups.at({p.src, p.dst});
        for (std::size_t k = 0; k < g.size(); ++k)
          if (cur[g[k]] == p) return k;
        throw std::logic_error("path not found in its block");
      };

      // ideal generators in this degree
      std::map<std::pair<VertexId, VertexId>, std::vector<std::vector<typename F::Elt>>> gens;
      auto add_gen = [&](VertexId s, VertexId t, std::vector<typename F::Elt> row) {
        gens[{s, t}].push_back(std::move(row));
      };
      // relations of this length
      for (const auto& r : rels_) {
        if (r[0].path.length() != len) continue;
        VertexId s = r[0].path.src, t = r[0].path.dst;
        std::vector<typename F::Elt> row(groups.at({s, t}).size(), f_.zero());
        for (const auto& term : r) row[local_index(term.path)] = f_.add(row[local_index(term.path)], term.coeff);
        add_gen(s, t, std::move(row));
      }
      // arrow extensions of the previous degree's ideal
      for (const auto& [st, ech] : prev_ideal) {
        const auto& prev_paths = paths_by_deg[len - 1];
        std::vector<std::size_t> prev_group;
        for (std::size_t i = 0; i < prev_paths.size(); ++i)
          if (prev_paths[i].src == st.first && prev_paths[i].dst == st.second) prev_group.push_back(i);
        for (std::size_t rrow = 0; rrow < ech.rref.rows(); ++rrow) {
          // extend at the end: x -> a*x for arrows a out of st.second
          for (std::size_t a = 0; a < q_.arrows.size(); ++a) {
            if (q_.arrows[a].src != st.second) continue;
            auto key = std::make_pair(st.first, q_.arrows[a].dst);
            if (!groups.count(key)) continue;
            std::vector<typename F::Elt> row(groups.at(key).size(), f_.zero());
            for (std::size_t c = 0; c < prev_group.size(); ++c) {
              if (f_.is_zero(ech.rref.at(rrow, c))) continue;
              Path np = prev_paths[prev_group[c]];
              np.arrows.push_back(a);
              np.dst = q_.arrows[a].dst;
              row[local_index(np)] = f_.add(row[local_index(np)], ech.rref.at(rrow, c));
            }
            add_gen(key.first, key.second, std::move(row));
          }
          // extend at the beginning: x -> x*a for arrows a into st.first
          for (std::size_t a = 0; a < q_.arrows.size(); ++a) {
            if (q_.arrows[a].dst != st.first) continue;
            auto key = std::make_pair(q_.arrows[a].src, st.second);
            if (!groups.count(key)) continue;
            std::vector<typename F::Elt> row(groups.at(key).size(), f_.zero());
            for (std::size_t c = 0; c < prev_group.size(); ++c) {
              if (f_.is_zero(ech.rref.at(rrow, c))) continue;
              Path np = prev_paths[prev_group[c]];
              np.arrows.insert(np.arrows.begin(), a);
              np.src = q_.arrows[a].src;
              row[local_index(np)] = f_.add(row[local_index(np)], ech.rref.at(rrow, c));
            }
            add_gen(key.first, key.second, std::move(row));
          }
        }
      }

      // eliminate per block; collect survivors
      std::map<std::pair<VertexId, VertexId>, Echelon<F>> cur_ideal;
      bool all_full = true;
      for (const auto& [st, idxs] : groups) {
        Mat<F> m(f_, gens.count(st) ? gens[st].size() : 0, idxs.size());
        if (gens.count(st))
          for (std::size_t i = 0; i < gens[st].size(); ++i)
            for (std::size_t j = 0; j < idxs.size(); ++j) m.at(i, j) = gens[st][i][j];
        auto ech = echelon(m);
        if (ech.pivots.size() < idxs.size()) all_full = false;
        cur_ideal[st] = std::move(ech);
      }

      if (all_full) {
        N = len;
        break;
      }

      // register survivors of this degree and the reduction of every path
      for (const auto& [st, idxs] : groups) {
        const auto& ech = cur_ideal[st];
        std::vector<bool> is_piv(idxs.size(), false);
        std::vector<std::size_t> piv_row(idxs.size(), 0);
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
          is_piv[ech.pivots[i]] = true;
          piv_row[ech.pivots[i]] = i;
        }
        std::vector<std::size_t> global_idx(idxs.size(), 0);
        for (std::size_t c = 0; c < idxs.size(); ++c)
          if (!is_piv[c]) {
            global_idx[c] = basis.size();
            basis.push_back(cur[idxs[c]]);
          }
        for (std::size_t c = 0; c < idxs.size(); ++c) {
          const Path& p = cur[idxs[c]];
          std::vector<std::pair<std::size_t, typename F::Elt>> expansion;
          if (!is_piv[c]) {
            expansion.emplace_back(global_idx[c], f_.one());
          } else {
            const std::size_t rrow = piv_row[c];
            for (std::size_t c2 = 0; c2 < idxs.size(); ++c2) {
              if (is_piv[c2] || f_.is_zero(ech.rref.at(rrow, c2))) continue;
              expansion.emplace_back(global_idx[c2], f_.neg(ech.rref.at(rrow, c2)));
            }
          }
          reduce[{p.src, p.arrows}] = std::move(expansion);
        }
      }

      prev_ideal = std::move(cur_ideal);
      paths_by_deg.push_back(std::move(cur));
    }

    A->nilpotency = N;
    A->basis_paths = basis;
    A->path_reduce = reduce;
    A->unit.assign(basis.size(), f_.zero());
    for (VertexId v = 0; v < q_.vertex_count; ++v) A->unit[v] = f_.one();

    // multiplication table: p_i * p_j = "walk p_j, then walk p_i"
    A->mult.assign(basis.size(),
                   std::vector<typename Algebra<F>::Vec>(
                       basis.size(), typename Algebra<F>::Vec(basis.size(), f_.zero())));
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[i].src != basis[j].dst) continue;
        if (basis[i].length() + basis[j].length() >= N) continue;  // vanishing degree
        std::vector<std::size_t> seq = basis[j].arrows;
        seq.insert(seq.end(), basis[i].arrows.begin(), basis[i].arrows.end());
        auto it = reduce.find({basis[j].src, seq});
        if (it == reduce.end()) continue;  // reduced to zero
        for (const auto& [k, c] : it->second) A->mult[i][j][k] = c;
      }

    return A;
  }

 private:
  void validate() const {
    std::vector<std::string> names;
    for (const auto& a : q_.arrows) {
      if (a.src >= q_.vertex_count || a.dst >= q_.vertex_count)
        throw std::invalid_argument("arrow '" + a.name + "': vertex out of range");
      names.push_back(a.name);
    }
    std::sort(names.begin(), names.end());
    if (std::adjacent_find(names.begin(), names.end()) != names.end())
      throw std::invalid_argument("duplicate arrow id");
    for (const auto& r : rels_) {
      if (r.empty()) throw std::invalid_argument("empty relation");
      for (const auto& term : r) {
        const Path& p = term.path;
        if (p.length() < 2) throw std::invalid_argument("relation path has length < 2");
        VertexId at = p.src;
        for (auto a : p.arrows) {
          if (a >= q_.arrows.size()) throw std::invalid_argument("relation: unknown arrow");
          if (q_.arrows[a].src != at) throw std::invalid_argument("relation path not composable");
          at = q_.arrows[a].dst;
        }
        if (at != p.dst) throw std::invalid_argument("relation path endpoint mismatch");
        if (p.src != r[0].path.src || p.dst != r[0].path.dst)
          throw std::invalid_argument("relation terms are not parallel paths");
        if (p.length() != r[0].path.length())
          throw std::invalid_argument(
              "relation mixes path lengths; only length-homogeneous relations are supported");
      }
    }
  }

  Quiver q_;
  std::vector<Relation<F>> rels_;
  F f_;
  std::size_t max_len_;
};

template <class F>
AlgebraRef<F> build_quiver_algebra(Quiver q, std::vector<Relation<F>> rels, F f,
                                   std::size_t max_len = 32) {
  return QuiverAlgebraBuilder<F>(std::move(q), std::move(rels), f, max_len).build();
}

/// Opposite algebra: arrows reversed, relation paths reversed.
template <class F>
AlgebraRef<F> opposite(const AlgebraRef<F>& A) {
  if (A->is_quiver()) {
    Quiver q = A->quiver;
    for (auto& a : q.arrows) std::swap(a.src, a.dst);
    std::vector<Relation<F>> rels = A->relations;
    for (auto& r : rels)
      for (auto& term : r) {
        std::reverse(term.path.arrows.begin(), term.path.arrows.end());
        std::swap(term.path.src, term.path.dst);
      }
    return build_quiver_algebra(q, rels, A->field, std::max<std::size_t>(A->nilpotency + 1, 32));
  }
  auto B = std::make_shared<Algebra<F>>(*A);
  for (std::size_t i = 0; i < A->dim(); ++i)
    for (std::size_t j = 0; j < A->dim(); ++j) B->mult[i][j] = A->mult[j][i];
  return B;
}

/// Structure algebra from raw multiplication data; checks associativity on
/// all basis triples and that the unit acts as identity.
template <class F>
AlgebraRef<F> make_structure_algebra(F f, std::vector<std::vector<std::vector<typename F::Elt>>> mult,
                                     std::vector<typename F::Elt> unit) {
  auto A = std::make_shared<Algebra<F>>();
  A->kind = Algebra<F>::Kind::Structure;
  A->field = f;
  A->mult = std::move(mult);
  A->unit = std::move(unit);
  const std::size_t d = A->dim();
  if (A->unit.size() != d) throw std::invalid_argument("structure algebra: unit size mismatch");
  auto e = [&](std::size_t i) {
    auto v = A->zero_vec();
    v[i] = f.one();
    return v;
  };
  for (std::size_t i = 0; i < d; ++i) {
    auto ui = A->mul_vec(A->unit, e(i));
    auto iu = A->mul_vec(e(i), A->unit);
    for (std::size_t k = 0; k < d; ++k)
      if (!f.eq(ui[k], e(i)[k]) || !f.eq(iu[k], e(i)[k]))
        throw std::invalid_argument("structure algebra: unit is not an identity");
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        auto lhs = A->mul_vec(A->mul_vec(e(i), e(j)), e(k));
        auto rhs = A->mul_vec(e(i), A->mul_vec(e(j), e(k)));
        for (std::size_t t = 0; t < d; ++t)
          if (!f.eq(lhs[t], rhs[t]))
            throw std::invalid_argument("structure algebra: multiplication not associative");
      }
  return A;
}

/// Jacobson radical. Quiver algebras: the arrow ideal, valid in any
/// characteristic. Structure algebras: the radical of the trace form of the
/// regular representation, valid in characteristic 0 or p > dim.
template <class F>
Subspace<F> radical(const AlgebraRef<F>& A) {
  const F f = A->field;
  const std::size_t d = A->dim();
  if (A->is_quiver()) {
    std::size_t n_arrows_plus = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (A->basis_paths[i].length() >= 1) ++n_arrows_plus;
    Mat<F> b(f, n_arrows_plus, d);
    std::size_t r = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (A->basis_paths[i].length() >= 1) b.at(r++, i) = f.one();
    return row_space(b);
  }
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (A->field.p <= d)
      throw std::invalid_argument(
          "radical via trace form needs char 0 or p > dim; present this algebra by a bound "
          "quiver instead");
  }
  std::vector<Mat<F>> L;
  for (std::size_t i = 0; i < d; ++i) {
    auto e = A->zero_vec();
    e[i] = f.one();
    L.push_back(A->left_mult_matrix(e));
  }
  Mat<F> G(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto P = L[i] * L[j];
      auto t = f.zero();
      for (std::size_t k = 0; k < d; ++k) t = f.add(t, P.at(k, k));
      G.at(i, j) = t;
    }
  return kernel_basis(G);
}

/// A two-sided quotient A -> A/ideal presented as a structure algebra, with
/// the projection matrix and a linear section.
template <class F>
struct AlgebraQuotient {
  AlgebraRef<F> source;
  Subspace<F> ideal;
  AlgebraRef<F> quotient;
  Mat<F> projection;  // quotient dim x source dim
  Mat<F> section;     // source dim x quotient dim
};

template <class F>
AlgebraQuotient<F> quotient_by_ideal(const AlgebraRef<F>& A, const Subspace<F>& ideal) {
  const F f = A->field;
  const std::size_t d = A->dim();
  if (ideal.ambient != d) throw std::invalid_argument("quotient_by_ideal: ambient mismatch");

  // two-sidedness: closed under left/right multiplication by every basis element
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    typename Algebra<F>::Vec x(d, f.zero());
    for (std::size_t k = 0; k < d; ++k) x[k] = ideal.basis.at(r, k);
    for (std::size_t i = 0; i < d; ++i) {
      typename Algebra<F>::Vec e(d, f.zero());
      e[i] = f.one();
      for (const auto& prod : {A->mul_vec(e, x), A->mul_vec(x, e)}) {
        Mat<F> v(f, d, 1);
        for (std::size_t k = 0; k < d; ++k) v.at(k, 0) = prod[k];
        if (!contains(ideal, v))
          throw std::invalid_argument("quotient_by_ideal: ideal is not two-sided");
      }
    }
  }

  Mat<F> proj = quotient_map(d, ideal);
  auto sect = solve(proj, Mat<F>::identity(f, proj.rows()));
  if (!sect) throw std::logic_error("quotient projection has no section");

  const std::size_t qd = proj.rows();
  std::vector<std::vector<typename Algebra<F>::Vec>> qmult(
      qd, std::vector<typename Algebra<F>::Vec>(qd, typename Algebra<F>::Vec(qd, f.zero())));
  auto lift = [&](std::size_t i) {
    typename Algebra<F>::Vec v(d, f.zero());
    for (std::size_t k = 0; k < d; ++k) v[k] = sect->at(k, i);
    return v;
  };
  for (std::size_t i = 0; i < qd; ++i)
    for (std::size_t j = 0; j < qd; ++j) {
      auto prod = A->mul_vec(lift(i), lift(j));
      Mat<F> v(f, d, 1);
      for (std::size_t k = 0; k < d; ++k) v.at(k, 0) = prod[k];
      auto down = proj * v;
      for (std::size_t k = 0; k < qd; ++k) qmult[i][j][k] = down.at(k, 0);
    }
  Mat<F> uv(f, d, 1);
  for (std::size_t k = 0; k < d; ++k) uv.at(k, 0) = A->unit[k];
  auto qunit_m = proj * uv;
  std::vector<typename F::Elt> qunit(qd, f.zero());
  for (std::size_t k = 0; k < qd; ++k) qunit[k] = qunit_m.at(k, 0);

  AlgebraRef<F> Q;
  if (qd == 0) {
    auto Z = std::make_shared<Algebra<F>>();
    Z->kind = Algebra<F>::Kind::Structure;
    Z->field = f;
    Q = Z;
  } else {
    Q = make_structure_algebra(f, std::move(qmult), std::move(qunit));
  }
  return AlgebraQuotient<F>{A, ideal, Q, proj, *sect};
}

}  // namespace art
