#pragma once

#include <numeric>

#include "art/algebra.hpp"

namespace art {

/// A finite-dimensional left module, presented as a representation: one
/// space per vertex and one matrix per algebra generator. Right modules are
/// handled throughout as left modules over the opposite algebra. Structure
/// algebras count as having a single vertex, with one action matrix per
/// algebra basis element; the same code paths serve both presentations.
template <class F>
struct Module {
  AlgebraRef<F> A;
  std::vector<std::size_t> dims;  // per vertex
  std::vector<Mat<F>> act;        // per generator (arrow / algebra basis element)

  // When the module was assembled as a sum of vertex projectives P(v), the
  // list of vertices is kept; the transpose machinery relies on it.
  std::optional<std::vector<VertexId>> proj_verts;

  std::size_t vertex_count() const { return dims.size(); }
  std::size_t total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
  std::size_t offset(VertexId v) const {
    return std::accumulate(dims.begin(), dims.begin() + v, std::size_t{0});
  }
  bool is_zero() const { return total_dim() == 0; }

  std::size_t gen_count() const { return act.size(); }
  VertexId gen_src(std::size_t g) const { return A->is_quiver() ? A->quiver.arrows[g].src : 0; }
  VertexId gen_dst(std::size_t g) const { return A->is_quiver() ? A->quiver.arrows[g].dst : 0; }

  bool operator==(const Module& o) const {
    if (!(*A == *o.A) || dims != o.dims || act.size() != o.act.size()) return false;
    for (std::size_t g = 0; g < act.size(); ++g)
      if (!(act[g] == o.act[g])) return false;
    return true;
  }
};

template <class F>
Module<F> zero_module(const AlgebraRef<F>& A) {
  Module<F> m;
  m.A = A;
  m.dims.assign(A->vertices(), 0);
  const std::size_t ng = A->is_quiver() ? A->quiver.arrows.size() : A->dim();
  for (std::size_t g = 0; g < ng; ++g) {
    auto u = A->is_quiver() ? A->quiver.arrows[g].src : 0;
    auto v = A->is_quiver() ? A->quiver.arrows[g].dst : 0;
    (void)u;
    (void)v;
    m.act.emplace_back(A->field, 0, 0);
  }
  if (A->is_quiver()) m.proj_verts = std::vector<VertexId>{};
  return m;
}

/// Action of a path on a quiver-presented module.
template <class F>
Mat<F> path_action(const Module<F>& M, const Path& p) {
  Mat<F> r = Mat<F>::identity(M.A->field, M.dims[p.src]);
  VertexId at = p.src;
  for (auto a : p.arrows) {
    r = M.act[a] * r;
    at = M.A->quiver.arrows[a].dst;
  }
  (void)at;
  return r;
}

/// Action of the i-th algebra basis element.
template <class F>
Mat<F> basis_elt_action(const Module<F>& M, std::size_t i) {
  if (!M.A->is_quiver()) return M.act[i];
  const Path& p = M.A->basis_paths[i];
  // embed the (dst block) x (src block) path action into the total space
  Mat<F> big(M.A->field, M.total_dim(), M.total_dim());
  big.set_block(M.offset(p.dst), M.offset(p.src), path_action(M, p));
  return big;
}

/// Validates shapes and that the algebra's defining identities hold on the
/// action; throws with a description of the first violation.
template <class F>
Module<F> make_module(AlgebraRef<F> A, std::vector<std::size_t> dims, std::vector<Mat<F>> act) {
  Module<F> m{std::move(A), std::move(dims), std::move(act), std::nullopt};
  const F f = m.A->field;
  if (m.dims.size() != m.A->vertices()) throw std::invalid_argument("module: dims size mismatch");
  const std::size_t ng = m.A->is_quiver() ? m.A->quiver.arrows.size() : m.A->dim();
  if (m.act.size() != ng) throw std::invalid_argument("module: one action matrix per generator required");
  for (std::size_t g = 0; g < ng; ++g) {
    auto u = m.gen_src(g), v = m.gen_dst(g);
    if (m.act[g].rows() != m.dims[v] || m.act[g].cols() != m.dims[u])
      throw std::invalid_argument("module: action matrix " + std::to_string(g) + " has shape " +
                                  std::to_string(m.act[g].rows()) + "x" + std::to_string(m.act[g].cols()) +
                                  ", expected " + std::to_string(m.dims[v]) + "x" + std::to_string(m.dims[u]));
  }
  if (m.A->is_quiver()) {
    for (std::size_t ri = 0; ri < m.A->relations.size(); ++ri) {
      const auto& r = m.A->relations[ri];
      Mat<F> s(f, m.dims[r[0].path.dst], m.dims[r[0].path.src]);
      for (const auto& term : r) s = s + path_action(m, term.path).scaled(term.coeff);
      if (!s.is_zero())
        throw std::invalid_argument("module: relation " + std::to_string(ri) +
                                    " does not annihilate the action:\n" + s.to_string());
    }
  } else {
    // the assignment g_i -> act[i] must be an algebra homomorphism
    const std::size_t d = m.A->dim();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        Mat<F> prod = m.act[i] * m.act[j];
        Mat<F> expect(f, m.dims[0], m.dims[0]);
        for (std::size_t k = 0; k < d; ++k)
          if (!f.is_zero(m.A->mult[i][j][k])) expect = expect + m.act[k].scaled(m.A->mult[i][j][k]);
        if (!(prod == expect))
          throw std::invalid_argument("module: action is not an algebra homomorphism at basis pair (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
      }
    Mat<F> u(f, m.dims[0], m.dims[0]);
    for (std::size_t k = 0; k < d; ++k)
      if (!f.is_zero(m.A->unit[k])) u = u + m.act[k].scaled(m.A->unit[k]);
    if (!(u == Mat<F>::identity(f, m.dims[0])))
      throw std::invalid_argument("module: unit does not act as the identity");
  }
  return m;
}

template <class F>
struct Morphism {
  Module<F> src, dst;
  std::vector<Mat<F>> blocks;  // per vertex: dims_dst[v] x dims_src[v]

  bool is_zero() const {
    for (const auto& b : blocks)
      if (!b.is_zero()) return false;
    return true;
  }

  bool operator==(const Morphism& o) const {
    return src == o.src && dst == o.dst && blocks == o.blocks;
  }
};

/// Checked constructor: every block must intertwine the generator actions.
template <class F>
Morphism<F> make_morphism(Module<F> src, Module<F> dst, std::vector<Mat<F>> blocks) {
  if (!(*src.A == *dst.A)) throw std::invalid_argument("morphism: modules over different algebras");
  Morphism<F> f{std::move(src), std::move(dst), std::move(blocks)};
  if (f.blocks.size() != f.src.vertex_count()) throw std::invalid_argument("morphism: one block per vertex");
  for (std::size_t v = 0; v < f.blocks.size(); ++v)
    if (f.blocks[v].rows() != f.dst.dims[v] || f.blocks[v].cols() != f.src.dims[v])
      throw std::invalid_argument("morphism: block shape mismatch at vertex " + std::to_string(v));
  for (std::size_t g = 0; g < f.src.gen_count(); ++g) {
    auto u = f.src.gen_src(g), v = f.src.gen_dst(g);
    if (!(f.dst.act[g] * f.blocks[u] == f.blocks[v] * f.src.act[g]))
      throw std::invalid_argument("morphism: intertwining fails at generator " + std::to_string(g));
  }
  return f;
}

template <class F>
Morphism<F> identity_morphism(const Module<F>& M) {
  std::vector<Mat<F>> blocks;
  for (auto d : M.dims) blocks.push_back(Mat<F>::identity(M.A->field, d));
  return Morphism<F>{M, M, std::move(blocks)};
}

template <class F>
Morphism<F> zero_morphism(const Module<F>& M, const Module<F>& N) {
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < M.vertex_count(); ++v)
    blocks.emplace_back(M.A->field, N.dims[v], M.dims[v]);
  return Morphism<F>{M, N, std::move(blocks)};
}

template <class F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
  if (!(f.dst == g.src)) throw std::invalid_argument("compose: middle modules differ");
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) blocks.push_back(g.blocks[v] * f.blocks[v]);
  return Morphism<F>{f.src, g.dst, std::move(blocks)};
}

template <class F>
Morphism<F> mor_add(const Morphism<F>& a, const Morphism<F>& b) {
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < a.blocks.size(); ++v) blocks.push_back(a.blocks[v] + b.blocks[v]);
  return Morphism<F>{a.src, a.dst, std::move(blocks)};
}

template <class F>
Morphism<F> mor_scale(const Morphism<F>& a, const typename F::Elt& c) {
  std::vector<Mat<F>> blocks;
  for (const auto& b : a.blocks) blocks.push_back(b.scaled(c));
  return Morphism<F>{a.src, a.dst, std::move(blocks)};
}

template <class F>
bool is_iso(const Morphism<F>& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

template <class F>
Morphism<F> inverse_morphism(const Morphism<F>& f) {
  std::vector<Mat<F>> blocks;
  for (const auto& b : f.blocks) {
    auto bi = inverse(b);
    if (!bi) throw std::invalid_argument("inverse_morphism: not invertible");
    blocks.push_back(*bi);
  }
  return Morphism<F>{f.dst, f.src, std::move(blocks)};
}

/// Flattened coordinates of a morphism: vertex-major, row-major per block.
template <class F>
Mat<F> hom_coords(const Morphism<F>& f) {
  const F fld = f.src.A->field;
  std::size_t n = 0;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) n += f.dst.dims[v] * f.src.dims[v];
  Mat<F> c(fld, n, 1);
  std::size_t k = 0;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(k++, 0) = b.at(i, j);
  return c;
}

template <class F>
Morphism<F> morphism_from_coords(const Module<F>& M, const Module<F>& N, const Mat<F>& c) {
  const F fld = M.A->field;
  std::vector<Mat<F>> blocks;
  std::size_t k = 0;
  for (std::size_t v = 0; v < M.vertex_count(); ++v) {
    Mat<F> b(fld, N.dims[v], M.dims[v]);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b.at(i, j) = c.at(k++, 0);
    blocks.push_back(std::move(b));
  }
  return Morphism<F>{M, N, std::move(blocks)};
}

/// Basis of Hom(M, N): the kernel of the intertwining system, in the fixed
/// coordinate layout above. Deterministic by the elimination pivot rule.
template <class F>
std::vector<Morphism<F>> hom_basis(const Module<F>& M, const Module<F>& N) {
  if (!(*M.A == *N.A)) throw std::invalid_argument("hom_basis: modules over different algebras");
  const F f = M.A->field;
  std::vector<std::size_t> off(M.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < M.vertex_count(); ++v)
    off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  const std::size_t nunk = off.back();

  std::size_t nrows = 0;
  for (std::size_t g = 0; g < M.gen_count(); ++g)
    nrows += N.dims[M.gen_dst(g)] * M.dims[M.gen_src(g)];
  Mat<F> sys(f, nrows, nunk);
  std::size_t r0 = 0;
  for (std::size_t g = 0; g < M.gen_count(); ++g) {
    const auto u = M.gen_src(g), v = M.gen_dst(g);
    // constraint: B_v * actM - actN * B_u = 0, rows indexed by (i, j)
    for (std::size_t i = 0; i < N.dims[v]; ++i)
      for (std::size_t j = 0; j < M.dims[u]; ++j) {
        const std::size_t row = r0 + i * M.dims[u] + j;
        for (std::size_t t = 0; t < M.dims[v]; ++t) {
          auto c = M.act[g].at(t, j);
          if (!f.is_zero(c)) {
            std::size_t col = off[v] + i * M.dims[v] + t;
            sys.at(row, col) = f.add(sys.at(row, col), c);
          }
        }
        for (std::size_t s = 0; s < N.dims[u]; ++s) {
          auto c = N.act[g].at(i, s);
          if (!f.is_zero(c)) {
            std::size_t col = off[u] + s * M.dims[u] + j;
            sys.at(row, col) = f.sub(sys.at(row, col), c);
          }
        }
      }
    r0 += N.dims[v] * M.dims[u];
  }
  auto K = kernel_basis(sys);
  std::vector<Morphism<F>> basis;
  for (std::size_t i = 0; i < K.dim(); ++i) {
    Mat<F> c(f, nunk, 1);
    for (std::size_t k = 0; k < nunk; ++k) c.at(k, 0) = K.basis.at(i, k);
    basis.push_back(morphism_from_coords(M, N, c));
  }
  return basis;
}

template <class F>
Mat<F> hom_basis_matrix(const std::vector<Morphism<F>>& basis, const Module<F>& M, const Module<F>& N) {
  const F f = M.A->field;
  std::size_t n = 0;
  for (std::size_t v = 0; v < M.vertex_count(); ++v) n += N.dims[v] * M.dims[v];
  Mat<F> B(f, n, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto c = hom_coords(basis[j]);
    for (std::size_t i = 0; i < n; ++i) B.at(i, j) = c.at(i, 0);
  }
  return B;
}

/// Coefficients of f in the given Hom basis (throws if f is outside the span).
template <class F>
Mat<F> expand_in_hom_basis(const std::vector<Morphism<F>>& basis, const Morphism<F>& f) {
  Mat<F> B = hom_basis_matrix(basis, f.src, f.dst);
  auto x = solve(B, hom_coords(f));
  if (!x) throw std::logic_error("expand_in_hom_basis: morphism outside span");
  return *x;
}

template <class F>
struct SubquotientPair {
  Module<F> mod;
  Morphism<F> map;
};

/// 0 -> X -> Y -> Z -> 0 with exactness certified at construction.
template <class F>
struct ShortExactSequence {
  Morphism<F> iota;  // X -> Y, mono
  Morphism<F> pi;    // Y -> Z, epi
};

/// Submodule from per-vertex column-span inclusions; actions induced and
/// re-verified.
template <class F>
SubquotientPair<F> submodule_from_inclusions(const Module<F>& M, std::vector<Mat<F>> incl) {
  const F f = M.A->field;
  Module<F> S;
  S.A = M.A;
  for (const auto& b : incl) S.dims.push_back(b.cols());
  for (std::size_t g = 0; g < M.gen_count(); ++g) {
    auto u = M.gen_src(g), v = M.gen_dst(g);
    auto sol = solve(incl[v], M.act[g] * incl[u]);
    if (!sol) throw std::logic_error("submodule: span not closed under the action");
    S.act.push_back(std::move(*sol));
  }
  auto inc_mor = make_morphism(S, M, std::move(incl));
  return {S, inc_mor};
}

template <class F>
SubquotientPair<F> kernel(const Morphism<F>& f) {
  std::vector<Mat<F>> incl;
  for (const auto& b : f.blocks) incl.push_back(kernel_basis(b).basis.transpose());
  return submodule_from_inclusions(f.src, std::move(incl));
}

template <class F>
SubquotientPair<F> image(const Morphism<F>& f) {
  std::vector<Mat<F>> incl;
  for (const auto& b : f.blocks) incl.push_back(column_space_inclusion(b));
  return submodule_from_inclusions(f.dst, std::move(incl));
}

/// The corestriction M -> im(f) with incl . corestriction = f.
template <class F>
Morphism<F> corestriction_to_image(const Morphism<F>& f, const SubquotientPair<F>& im) {
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    auto x = solve(im.map.blocks[v], f.blocks[v]);
    if (!x) throw std::logic_error("corestriction: image basis does not span");
    blocks.push_back(std::move(*x));
  }
  return make_morphism(f.src, im.mod, std::move(blocks));
}

template <class F>
SubquotientPair<F> cokernel(const Morphism<F>& f) {
  const F fld = f.src.A->field;
  Module<F> Q;
  Q.A = f.dst.A;
  std::vector<Mat<F>> proj, sect;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) {
    auto q = quotient_map(f.dst.dims[v], row_space(f.blocks[v].transpose()));
    Q.dims.push_back(q.rows());
    auto s = solve(q, Mat<F>::identity(fld, q.rows()));
    if (!s) throw std::logic_error("cokernel: no section");
    proj.push_back(std::move(q));
    sect.push_back(std::move(*s));
  }
  for (std::size_t g = 0; g < f.dst.gen_count(); ++g) {
    auto u = f.dst.gen_src(g), v = f.dst.gen_dst(g);
    Q.act.push_back(proj[v] * f.dst.act[g] * sect[u]);
    // the induced action must satisfy act_Q . proj = proj . act
    if (!(Q.act.back() * proj[u] == proj[v] * f.dst.act[g]))
      throw std::logic_error("cokernel: induced action is not well defined");
  }
  auto pr = make_morphism(f.dst, Q, std::move(proj));
  return {Q, pr};
}

// ---------------------------------------------------------------------------
// direct sums

template <class F>
struct DirectSum {
  Module<F> mod;
  std::vector<Morphism<F>> inject;
  std::vector<Morphism<F>> project;
};

template <class F>
DirectSum<F> direct_sum(const std::vector<Module<F>>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: empty");
  const F f = parts[0].A->field;
  Module<F> S;
  S.A = parts[0].A;
  S.dims.assign(parts[0].vertex_count(), 0);
  bool all_proj = true;
  std::vector<VertexId> pv;
  for (const auto& p : parts) {
    if (!(*p.A == *S.A)) throw std::invalid_argument("direct_sum: algebra mismatch");
    for (std::size_t v = 0; v < S.dims.size(); ++v) S.dims[v] += p.dims[v];
    if (p.proj_verts)
      pv.insert(pv.end(), p.proj_verts->begin(), p.proj_verts->end());
    else
      all_proj = false;
  }
  for (std::size_t g = 0; g < parts[0].gen_count(); ++g) {
    auto u = parts[0].gen_src(g), v = parts[0].gen_dst(g);
    Mat<F> big(f, S.dims[v], S.dims[u]);
    std::size_t ro = 0, co = 0;
    for (const auto& p : parts) {
      big.set_block(ro, co, p.act[g]);
      ro += p.dims[v];
      co += p.dims[u];
    }
    S.act.push_back(std::move(big));
  }
  if (all_proj) S.proj_verts = pv;

  DirectSum<F> ds{S, {}, {}};
  std::vector<std::size_t> at(S.dims.size(), 0);
  for (const auto& p : parts) {
    std::vector<Mat<F>> inj, prj;
    for (std::size_t v = 0; v < S.dims.size(); ++v) {
      Mat<F> in(f, S.dims[v], p.dims[v]);
      in.set_block(at[v], 0, Mat<F>::identity(f, p.dims[v]));
      inj.push_back(in);
      prj.push_back(in.transpose());
    }
    ds.inject.push_back(Morphism<F>{p, S, std::move(inj)});
    ds.project.push_back(Morphism<F>{S, p, std::move(prj)});
    for (std::size_t v = 0; v < S.dims.size(); ++v) at[v] += p.dims[v];
  }
  return ds;
}

// ---------------------------------------------------------------------------
// simples, projectives, injectives, regular module (quiver presentation)

template <class F>
Module<F> simple_at(const AlgebraRef<F>& A, VertexId v) {
  if (!A->is_quiver()) throw std::invalid_argument("simple_at: quiver presentation required");
  Module<F> m;
  m.A = A;
  m.dims.assign(A->quiver.vertex_count, 0);
  m.dims[v] = 1;
  for (const auto& a : A->quiver.arrows) m.act.emplace_back(A->field, m.dims[a.dst], m.dims[a.src]);
  return m;
}

/// P(v) = (paths leaving v); the vertex-u component is spanned by the basis
/// paths v -> u and arrows act by appending.
template <class F>
Module<F> projective_at(const AlgebraRef<F>& A, VertexId v) {
  if (!A->is_quiver()) throw std::invalid_argument("projective_at: quiver presentation required");
  const F f = A->field;
  Module<F> m;
  m.A = A;
  std::vector<std::vector<std::size_t>> comp(A->quiver.vertex_count);
  for (VertexId u = 0; u < A->quiver.vertex_count; ++u) comp[u] = A->basis_from_to(v, u);
  for (VertexId u = 0; u < A->quiver.vertex_count; ++u) m.dims.push_back(comp[u].size());
  for (std::size_t a = 0; a < A->quiver.arrows.size(); ++a) {
    const auto u = A->quiver.arrows[a].src, w = A->quiver.arrows[a].dst;
    Mat<F> act(f, m.dims[w], m.dims[u]);
    const std::size_t ai = A->arrow_basis_index(a);
    for (std::size_t j = 0; j < comp[u].size(); ++j) {
      const auto& prod = A->mult[ai][comp[u][j]];  // a * p, coordinates over the algebra basis
      for (std::size_t i = 0; i < comp[w].size(); ++i) act.at(i, j) = prod[comp[w][i]];
    }
    m.act.push_back(std::move(act));
  }
  m.proj_verts = std::vector<VertexId>{v};
  return m;
}

/// Dual module: a left module over the opposite algebra on the same vertex
/// spaces, with transposed action matrices. Strictly involutive.
template <class F>
Module<F> dual(const Module<F>& M, const AlgebraRef<F>& Aop) {
  Module<F> d;
  d.A = Aop;
  d.dims = M.dims;
  for (const auto& b : M.act) d.act.push_back(b.transpose());
  return d;
}

template <class F>
Module<F> dual(const Module<F>& M) {
  return dual(M, opposite(M.A));
}

/// Dual of a morphism: D(f) : D(N) -> D(M) with transposed blocks.
template <class F>
Morphism<F> dual(const Morphism<F>& f, const AlgebraRef<F>& Aop) {
  std::vector<Mat<F>> blocks;
  for (const auto& b : f.blocks) blocks.push_back(b.transpose());
  return Morphism<F>{dual(f.dst, Aop), dual(f.src, Aop), std::move(blocks)};
}

template <class F>
Module<F> injective_at(const AlgebraRef<F>& A, VertexId v, const AlgebraRef<F>& Aop) {
  return dual(projective_at(Aop, v), A);
}

template <class F>
Module<F> injective_at(const AlgebraRef<F>& A, VertexId v) {
  return injective_at(A, v, opposite(A));
}

/// The left regular module. Quiver algebras: sum of the vertex projectives
/// (carrying proj_verts). Structure algebras: left multiplication.
template <class F>
Module<F> regular_module(const AlgebraRef<F>& A) {
  if (A->is_quiver()) {
    std::vector<Module<F>> parts;
    for (VertexId v = 0; v < A->quiver.vertex_count; ++v) parts.push_back(projective_at(A, v));
    return direct_sum(parts).mod;
  }
  Module<F> m;
  m.A = A;
  m.dims = {A->dim()};
  for (std::size_t i = 0; i < A->dim(); ++i) {
    auto e = A->zero_vec();
    e[i] = A->field.one();
    m.act.push_back(A->left_mult_matrix(e));
  }
  return m;
}

// ---------------------------------------------------------------------------
// radical, top, socle of a module

/// Per-vertex inclusions of rad(A) . M.
template <class F>
SubquotientPair<F> radical_submodule(const Module<F>& M) {
  const F f = M.A->field;
  std::vector<Mat<F>> incl;
  if (M.A->is_quiver()) {
    for (std::size_t v = 0; v < M.vertex_count(); ++v) {
      Mat<F> cols(f, M.dims[v], 0);
      for (std::size_t a = 0; a < M.A->quiver.arrows.size(); ++a)
        if (M.A->quiver.arrows[a].dst == v) cols = cols.hstack(M.act[a]);
      incl.push_back(column_space_inclusion(cols));
    }
  } else {
    auto rad = radical(M.A);
    Mat<F> cols(f, M.dims[0], 0);
    for (std::size_t r = 0; r < rad.dim(); ++r) {
      Mat<F> act(f, M.dims[0], M.dims[0]);
      for (std::size_t i = 0; i < M.A->dim(); ++i)
        if (!f.is_zero(rad.basis.at(r, i))) act = act + M.act[i].scaled(rad.basis.at(r, i));
      cols = cols.hstack(act);
    }
    incl.push_back(column_space_inclusion(cols));
  }
  return submodule_from_inclusions(M, std::move(incl));
}

template <class F>
SubquotientPair<F> top_quotient(const Module<F>& M) {
  return cokernel(radical_submodule(M).map);
}

/// Largest submodule annihilated by the radical.
template <class F>
SubquotientPair<F> socle_submodule(const Module<F>& M) {
  const F f = M.A->field;
  std::vector<Mat<F>> incl;
  if (M.A->is_quiver()) {
    for (std::size_t v = 0; v < M.vertex_count(); ++v) {
      Mat<F> stack(f, 0, M.dims[v]);
      for (std::size_t a = 0; a < M.A->quiver.arrows.size(); ++a)
        if (M.A->quiver.arrows[a].src == v) stack = stack.vstack(M.act[a]);
      incl.push_back(kernel_basis(stack).basis.transpose());
    }
  } else {
    auto rad = radical(M.A);
    Mat<F> stack(f, 0, M.dims[0]);
    for (std::size_t r = 0; r < rad.dim(); ++r) {
      Mat<F> act(f, M.dims[0], M.dims[0]);
      for (std::size_t i = 0; i < M.A->dim(); ++i)
        if (!f.is_zero(rad.basis.at(r, i))) act = act + M.act[i].scaled(rad.basis.at(r, i));
      stack = stack.vstack(act);
    }
    incl.push_back(kernel_basis(stack).basis.transpose());
  }
  return submodule_from_inclusions(M, std::move(incl));
}

// ---------------------------------------------------------------------------
// tensor product over the algebra

/// mr tensor_A nl for mr a left A^op-module and nl a left A-module: the
/// quotient of the matching-vertex sum of componentwise tensors by the
/// bimodule relations (m.a (x) n - m (x) a.n). Plain vector space with a
/// projection from the big componentwise space.
template <class F>
struct TensorSpace {
  std::size_t dim = 0;
  Mat<F> proj;  // dim x big
  Mat<F> sect;  // big x dim
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> mr_dims, nl_dims;
};

namespace detail {

template <class F>
bool opposite_pair(const Algebra<F>& Aop, const Algebra<F>& A) {
  if (Aop.kind != A.kind || !(Aop.field == A.field) || Aop.dim() != A.dim()) return false;
  if (A.is_quiver()) {
    if (Aop.quiver.vertex_count != A.quiver.vertex_count ||
        Aop.quiver.arrows.size() != A.quiver.arrows.size())
      return false;
    for (std::size_t a = 0; a < A.quiver.arrows.size(); ++a)
      if (Aop.quiver.arrows[a].name != A.quiver.arrows[a].name ||
          Aop.quiver.arrows[a].src != A.quiver.arrows[a].dst ||
          Aop.quiver.arrows[a].dst != A.quiver.arrows[a].src)
        return false;
    return true;
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j)
      for (std::size_t k = 0; k < A.dim(); ++k)
        if (!A.field.eq(Aop.mult[i][j][k], A.mult[j][i][k])) return false;
  return true;
}

}  // namespace detail

template <class F>
TensorSpace<F> tensor_space(const Module<F>& mr, const Module<F>& nl) {
  const F f = nl.A->field;
  if (!detail::opposite_pair(*mr.A, *nl.A))
    throw std::invalid_argument("tensor: left factor must be a module over the opposite algebra");
  const std::size_t nv = nl.vertex_count();
  TensorSpace<F> T;
  T.mr_dims = mr.dims;
  T.nl_dims = nl.dims;
  T.offsets.assign(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) T.offsets[v + 1] = T.offsets[v] + mr.dims[v] * nl.dims[v];
  const std::size_t big = T.offsets[nv];

  std::vector<std::vector<typename F::Elt>> rows;
  auto add_row = [&](std::vector<typename F::Elt> r) { rows.push_back(std::move(r)); };
  for (std::size_t g = 0; g < nl.gen_count(); ++g) {
    // generator g: u -> v in A; on mr (over A^op) it maps the v-block to the u-block
    const auto u = nl.gen_src(g), v = nl.gen_dst(g);
    for (std::size_t mi = 0; mi < mr.dims[v]; ++mi)
      for (std::size_t nj = 0; nj < nl.dims[u]; ++nj) {
        std::vector<typename F::Elt> r(big, f.zero());
        // (m.g) (x) n in block u
        for (std::size_t i = 0; i < mr.dims[u]; ++i) {
          auto c = mr.act[g].at(i, mi);
          if (!f.is_zero(c)) r[T.offsets[u] + i * nl.dims[u] + nj] = f.add(r[T.offsets[u] + i * nl.dims[u] + nj], c);
        }
        // - m (x) (g.n) in block v
        for (std::size_t j = 0; j < nl.dims[v]; ++j) {
          auto c = nl.act[g].at(j, nj);
          if (!f.is_zero(c))
            r[T.offsets[v] + mi * nl.dims[v] + j] = f.sub(r[T.offsets[v] + mi * nl.dims[v] + j], c);
        }
        add_row(std::move(r));
      }
  }
  Mat<F> rel(f, rows.size(), big);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < big; ++j) rel.at(i, j) = rows[i][j];
  T.proj = quotient_map(big, row_space(rel));
  T.dim = T.proj.rows();
  auto s = solve(T.proj, Mat<F>::identity(f, T.dim));
  if (!s) throw std::logic_error("tensor: projection has no section");
  T.sect = std::move(*s);
  return T;
}

/// Coordinates in the big componentwise space of a pure tensor of basis
/// vectors (vertex v, index i in mr_v, index j in nl_v).
template <class F>
Mat<F> tensor_pure(const TensorSpace<F>& T, const F& f, std::size_t v, std::size_t i, std::size_t j) {
  Mat<F> e(f, T.offsets.back(), 1);
  e.at(T.offsets[v] + i * T.nl_dims[v] + j, 0) = f.one();
  return e;
}

/// Induced map T -> T2 from morphisms fm : mr -> mr2 (over A^op) and
/// gn : nl -> nl2 (over A).
template <class F>
Mat<F> tensor_induced(const TensorSpace<F>& T, const TensorSpace<F>& T2, const Morphism<F>& fm,
                      const Morphism<F>& gn) {
  const F f = gn.src.A->field;
  const std::size_t nv = T.mr_dims.size();
  Mat<F> big(f, T2.offsets.back(), T.offsets.back());
  for (std::size_t v = 0; v < nv; ++v)
    big.set_block(T2.offsets[v], T.offsets[v], fm.blocks[v].kron(gn.blocks[v]));
  return T2.proj * big * T.sect;
}

}  // namespace art
