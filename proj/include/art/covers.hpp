#pragma once

#include "art/fitting.hpp"

namespace art {

/// Projective cover eps : P -> M. For quiver algebras P is assembled from
/// vertex projectives over a basis of top(M) and the kernel lands in rad P
/// by a dimension count. For structure algebras the regular module is split
/// into indecomposable projectives (Fitting), tops are matched against the
/// simple summands of top(M), and the covering map is solved for directly.
template <class F>
Morphism<F> projective_cover(const Module<F>& M, FittingOptions opts = {}) {
  const F f = M.A->field;
  if (M.is_zero()) return zero_morphism(zero_module(M.A), M);

  auto T = top_quotient(M);

  if (M.A->is_quiver()) {
    std::vector<Module<F>> parts;
    std::vector<std::pair<VertexId, std::size_t>> tags;  // (vertex, copy)
    for (VertexId v = 0; v < M.A->quiver.vertex_count; ++v)
      for (std::size_t j = 0; j < T.mod.dims[v]; ++j) {
        parts.push_back(projective_at(M.A, v));
        tags.emplace_back(v, j);
      }
    if (parts.empty()) throw std::logic_error("projective_cover: nonzero module with zero top");
    auto P = direct_sum(parts);
    // lifts of the canonical top basis: columns of a section of the top projection
    std::vector<Mat<F>> sect;
    for (std::size_t v = 0; v < M.vertex_count(); ++v) {
      auto s = solve(T.map.blocks[v], Mat<F>::identity(f, T.mod.dims[v]));
      if (!s) throw std::logic_error("projective_cover: top projection has no section");
      sect.push_back(std::move(*s));
    }
    std::vector<Mat<F>> blocks;
    for (std::size_t u = 0; u < M.vertex_count(); ++u) blocks.emplace_back(f, M.dims[u], P.mod.dims[u]);
    for (std::size_t part = 0; part < parts.size(); ++part) {
      auto [v, copy] = tags[part];
      Mat<F> x = sect[v].col(copy);  // generator image in M_v
      // the part's vertex-u basis is the list of basis paths v -> u
      auto paths = M.A->basis_from(v);
      for (auto pi : paths) {
        const Path& p = M.A->basis_paths[pi];
        Mat<F> colv = path_action(M, p) * x;  // in M_{p.dst}
        // position of p within P(v)'s dst component
        std::size_t inner = 0;
        for (auto qi : M.A->basis_from_to(v, p.dst)) {
          if (qi == pi) break;
          ++inner;
        }
        // column of the inclusion of this part at vertex p.dst, applied to e_inner
        for (std::size_t r = 0; r < P.mod.dims[p.dst]; ++r) {
          if (f.is_zero(P.inject[part].blocks[p.dst].at(r, inner))) continue;
          for (std::size_t i = 0; i < M.dims[p.dst]; ++i)
            blocks[p.dst].at(i, r) = f.add(blocks[p.dst].at(i, r),
                                           f.mul(P.inject[part].blocks[p.dst].at(r, inner), colv.at(i, 0)));
        }
      }
    }
    auto eps = make_morphism(P.mod, M, std::move(blocks));
    for (std::size_t u = 0; u < M.vertex_count(); ++u)
      if (rank(eps.blocks[u]) != M.dims[u]) throw std::logic_error("projective_cover: not surjective");
    return eps;
  }

  // structure algebra: match top(M)'s simple summands with tops of the
  // indecomposable summands of the regular module
  auto reg = regular_module(M.A);
  auto projs = fitting_decompose(reg, opts);
  std::vector<SubquotientPair<F>> proj_tops;
  for (const auto& p : projs) proj_tops.push_back(top_quotient(p.mod));

  auto simples = fitting_decompose(T.mod, opts);
  std::vector<Module<F>> parts;
  std::vector<Morphism<F>> part_top_iso;  // top(P_part) -> simple summand
  std::vector<std::size_t> part_choice;
  for (const auto& s : simples) {
    bool matched = false;
    for (std::size_t i = 0; i < projs.size() && !matched; ++i) {
      if (proj_tops[i].mod.dims != s.mod.dims) continue;
      auto hb = hom_basis(proj_tops[i].mod, s.mod);
      if (hb.empty()) continue;
      if (!is_iso(hb[0]))
        continue;  // between simples any nonzero morphism is invertible
      parts.push_back(projs[i].mod);
      part_top_iso.push_back(hb[0]);
      part_choice.push_back(i);
      matched = true;
    }
    if (!matched) throw std::logic_error("projective_cover: no projective matches a top summand");
  }
  if (parts.empty()) throw std::logic_error("projective_cover: nonzero module with zero top");
  auto P = direct_sum(parts);
  auto TP = top_quotient(P.mod);
  // psi : top(P) -> T through the matched isos
  Mat<F> psi(f, T.mod.dims[0], TP.mod.dims[0]);
  {
    // beta_j : top(parts[j]) -> top(P) induced by the injection
    Mat<F> B(f, TP.mod.dims[0], 0);
    Mat<F> S(f, T.mod.dims[0], 0);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      auto tj = top_quotient(parts[j]);
      auto sj = solve(tj.map.blocks[0], Mat<F>::identity(f, tj.mod.dims[0]));
      if (!sj) throw std::logic_error("projective_cover: no top section");
      B = B.hstack(TP.map.blocks[0] * P.inject[j].blocks[0] * *sj);
      S = S.hstack(simples[j].incl.blocks[0] * part_top_iso[j].blocks[0]);
    }
    auto Bi = inverse(B);
    if (!Bi) throw std::logic_error("projective_cover: assembled top map is not invertible");
    psi = S * *Bi;
  }
  // solve for eps in Hom(P, M) with T.map . eps = psi . TP.map
  auto hb = hom_basis(P.mod, M);
  if (hb.empty()) throw std::logic_error("projective_cover: empty Hom(P, M)");
  const std::size_t n = hb.size();
  Mat<F> target = psi * TP.map.blocks[0];
  Mat<F> sys(f, target.rows() * target.cols(), n);
  for (std::size_t t = 0; t < n; ++t) {
    Mat<F> v = T.map.blocks[0] * hb[t].blocks[0];
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.rows(); ++i)
      for (std::size_t j = 0; j < v.cols(); ++j) sys.at(k++, t) = v.at(i, j);
  }
  Mat<F> rhs(f, target.rows() * target.cols(), 1);
  {
    std::size_t k = 0;
    for (std::size_t i = 0; i < target.rows(); ++i)
      for (std::size_t j = 0; j < target.cols(); ++j) rhs.at(k++, 0) = target.at(i, j);
  }
  auto c = solve(sys, rhs);
  if (!c) throw std::logic_error("projective_cover: lifting system inconsistent");
  auto eps = zero_morphism(P.mod, M);
  for (std::size_t t = 0; t < n; ++t) eps = mor_add(eps, mor_scale(hb[t], c->at(t, 0)));
  if (rank(eps.blocks[0]) != M.dims[0]) throw std::logic_error("projective_cover: not surjective");
  // minimality: dim top P == dim top M
  if (TP.mod.total_dim() != T.mod.total_dim())
    throw std::logic_error("projective_cover: top dimensions disagree");
  return eps;
}

/// Injective envelope M -> E, computed as the dual of a projective cover of
/// D(M) over the opposite algebra. DD is the identity on the nose, so the
/// source of the result is M itself.
template <class F>
Morphism<F> injective_envelope(const Module<F>& M, FittingOptions opts = {}) {
  auto Aop = opposite(M.A);
  auto cov = projective_cover(dual(M, Aop), opts);
  auto env = dual(cov, M.A);
  // dual flips: env : DD(M) = M -> D(P), and DD(M) is M on the nose
  env.src = M;
  return env;
}

template <class F>
struct ProjectivePresentation {
  Module<F> p1, p0;
  Morphism<F> d;    // p1 -> p0
  Morphism<F> eps;  // p0 -> M
  bool minimal = true;
};

/// Minimal presentation P1 -> P0 -> M -> 0: both maps are projective covers.
template <class F>
ProjectivePresentation<F> minimal_presentation(const Module<F>& M, FittingOptions opts = {}) {
  auto eps = projective_cover(M, opts);
  auto K = kernel(eps);
  auto cov1 = projective_cover(K.mod, opts);
  auto d = compose(K.map, cov1);
  return ProjectivePresentation<F>{cov1.src, eps.src, d, eps, true};
}

/// Syzygy: the kernel of a projective cover.
template <class F>
Module<F> syzygy(const Module<F>& M, FittingOptions opts = {}) {
  return kernel(projective_cover(M, opts)).mod;
}

}  // namespace art
