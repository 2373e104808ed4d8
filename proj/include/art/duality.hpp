#pragma once

#include "art/functors.hpp"

namespace art {

/// Context with the standard choice i = D(Gamma).
template <class F>
TranslateContext<F> translate_context_dgamma(const Module<F>& c, FittingOptions opts = {}) {
  auto Ec = endomorphism_algebra(c);
  auto Gop = opposite(Ec.alg);
  return build_translate_context(c, dual_of_algebra(Ec, Gop), opts);
}

template <class F>
struct DualityReport {
  std::string name;
  std::size_t lhs_dim = 0, rhs_dim = 0;
  Mat<F> witness;
  bool witness_invertible = false;
  std::vector<std::pair<std::string, std::size_t>> intermediates;
  std::vector<std::pair<std::string, bool>> checks;

  bool pass() const {
    if (lhs_dim != rhs_dim || !witness_invertible) return false;
    for (const auto& [k, ok] : checks)
      if (!ok) return false;
    return true;
  }
  void check(const std::string& k, bool ok) { checks.emplace_back(k, ok); }
  void dim(const std::string& k, std::size_t d) { intermediates.emplace_back(k, d); }
};

/// The value of a contravariant/covariant Hom-quotient as a right
/// End(c)-module (left module over End(c)^op): the precomposition action
/// descends to the canonical quotient.
template <class F>
Module<F> quotient_right_end_module(const FunctorValue<F>& val, const EndAlgebra<F>& Ec,
                                    const AlgebraRef<F>& Gop) {
  const F f = Gop->field;
  const std::size_t n = val.dim();
  std::vector<Mat<F>> acts;
  for (std::size_t k = 0; k < Ec.alg->dim(); ++k) {
    Mat<F> R(f, val.hom.size(), val.hom.size());
    for (std::size_t j = 0; j < val.hom.size(); ++j) {
      auto c = expand_in_hom_basis(val.hom, compose(val.hom[j], Ec.basis[k]));
      for (std::size_t i = 0; i < val.hom.size(); ++i) R.at(i, j) = c.at(i, 0);
    }
    Mat<F> rbar = val.quot * R * val.sect;
    // the action must descend exactly to the quotient
    if (!(rbar * val.quot == val.quot * R))
      throw std::logic_error("right End action does not descend to the quotient");
    acts.push_back(std::move(rbar));
  }
  return right_module_over(Ec, Gop, n, std::move(acts));
}

/// Ext^1(c, x) as a right End(c)-module via pullback along endomorphisms.
template <class F>
Module<F> ext_right_end_module(const ExtSpace<F>& ext, const EndAlgebra<F>& Ec,
                               const AlgebraRef<F>& Gop) {
  std::vector<Mat<F>> acts;
  for (std::size_t k = 0; k < Ec.alg->dim(); ++k)
    acts.push_back(ext1_pull(ext, ext, Ec.basis[k]));
  return right_module_over(Ec, Gop, ext.dim(), std::move(acts));
}

// ---------------------------------------------------------------------------
// the defect-formula chain

/// All intermediate data of the isomorphism
///   Hom_Gamma(xi^*(c), i)  ==  xi_*(tau_c(i))
/// built step by step: stable cokernel, snake connecting map into the tensor
/// kernel, transport through gamma, envelope, and tensor-hom adjunction.
template <class F>
struct DefectChain {
  FunctorValue<F> v1;            // xi^*(c)
  Module<F> v1mod;               // as right Gamma-module
  std::vector<Morphism<F>> L;    // Hom_Gamma(xi^*(c), i)
  TensorSpace<F> tx, ty;
  Mat<F> tphi;                   // Tr c (x) X -> Tr c (x) Y
  Mat<F> v2_incl;                // kernel inclusion, T_X coords
  Module<F> v2mod;               // ker(phi (x) Tr c) over Sigma'
  Mat<F> delta;                  // V1 -> V2, the snake connecting iso
  std::vector<Morphism<F>> M;    // Hom_{Sigma-bar}(V2, i_bar)
  std::vector<Morphism<F>> N;    // Hom_Sigma(V2, E(i_bar))
  FunctorValue<F> rval;          // xi_*(tau)
  Mat<F> witness;                // L -> R
  DualityReport<F> report;
};

template <class F>
DefectChain<F> defect_chain(const TranslateContext<F>& ctx, const ShortExactSequence<F>& xi,
                            const std::string& name, FittingOptions opts = {}) {
  const F f = ctx.c.A->field;
  DefectChain<F> ch;
  ch.report.name = name;
  const Morphism<F>& phi = xi.iota;
  const Morphism<F>& psi = xi.pi;
  const Module<F>& X = phi.src;

  // xi^*(c) with its right Gamma-structure
  ch.v1 = evaluate(FpFunctor<F>{Variance::Contra, psi}, ctx.c);
  ch.report.dim("xi^*(c)", ch.v1.dim());

  if (ctx.trivial) {
    ch.rval = evaluate(FpFunctor<F>{Variance::Cov, phi}, ctx.tau);
    ch.report.lhs_dim = 0;
    ch.report.rhs_dim = ch.rval.dim();
    ch.report.check("lhs vanishes for projective c", ch.v1.dim() == 0);
    ch.report.witness = Mat<F>(f, ch.rval.dim(), 0);
    ch.report.witness_invertible = ch.rval.dim() == 0;
    return ch;
  }

  ch.v1mod = quotient_right_end_module(ch.v1, ctx.Ec, ctx.Gop);
  ch.L = hom_basis(ch.v1mod, ctx.i);
  ch.report.lhs_dim = ch.L.size();

  // every Gamma-map into i lands in i_bar (the stable ideal kills xi^*(c))
  bool lands = true;
  std::vector<Mat<F>> lbar;
  for (const auto& l : ch.L) {
    auto s = solve(ctx.ibar.map.blocks[0], l.blocks[0]);
    if (!s) {
      lands = false;
      lbar.emplace_back(f, ctx.ibar.mod.dims[0], ch.v1.dim());
    } else {
      lbar.push_back(std::move(*s));
    }
  }
  ch.report.check("Hom_Gamma(xi^*(c), i) = Hom(xi^*(c), i_bar)", lands);

  // the tensor kernel V2 = ker(phi (x) Tr c) with its Sigma'-action
  ch.tx = tensor_space(ctx.tc.tr, X);
  ch.ty = tensor_space(ctx.tc.tr, phi.dst);
  ch.tphi = tensor_induced(ch.tx, ch.ty, identity_morphism(ctx.tc.tr), phi);
  auto v2 = kernel_basis(ch.tphi);
  ch.v2_incl = v2.basis.transpose();
  ch.report.dim("ker(phi (x) Tr c)", v2.dim());
  {
    std::vector<Mat<F>> sacts;
    for (std::size_t k = 0; k < ctx.Etr.alg->dim(); ++k) {
      auto Tk = tensor_induced(ch.tx, ch.tx, ctx.Etr.basis[k], identity_morphism(X));
      auto rk = solve(ch.v2_incl, Tk * ch.v2_incl);
      if (!rk) throw std::logic_error("defect chain: V2 is not Sigma-stable");
      sacts.push_back(std::move(*rk));
    }
    ch.v2mod = make_module(ctx.Etr.alg, {v2.dim()}, sacts);
  }

  // snake connecting map V1 -> V2
  auto gens = [&]() {
    // generator positions of the parts of P1^* inside its vertex blocks
    const auto& verts = *ctx.tc.presentation_used.p1.proj_verts;
    std::vector<std::pair<VertexId, std::size_t>> out;
    std::vector<std::size_t> run(ctx.Aop->quiver.vertex_count, 0);
    for (std::size_t p = 0; p < verts.size(); ++p) {
      out.emplace_back(verts[p], run[verts[p]]);
      for (VertexId u = 0; u < ctx.Aop->quiver.vertex_count; ++u)
        run[u] += ctx.Aop->basis_from_to(verts[p], u).size();
    }
    return out;
  }();
  // generator columns of the parts of P1 itself (over the base algebra)
  auto gens_p1 = [&]() {
    const auto& verts = *ctx.tc.presentation_used.p1.proj_verts;
    std::vector<std::pair<VertexId, std::size_t>> out;
    std::vector<std::size_t> run(ctx.c.A->quiver.vertex_count, 0);
    for (std::size_t p = 0; p < verts.size(); ++p) {
      out.emplace_back(verts[p], run[verts[p]]);
      for (VertexId u = 0; u < ctx.c.A->quiver.vertex_count; ++u)
        run[u] += ctx.c.A->basis_from_to(verts[p], u).size();
    }
    return out;
  }();
  ch.delta = Mat<F>(f, v2.dim(), ch.v1.dim());
  bool delta_ok = true;
  for (std::size_t t = 0; t < ch.v1.dim(); ++t) {
    Mat<F> e(f, ch.v1.dim(), 1);
    e.at(t, 0) = f.one();
    auto coef = ch.v1.sect * e;
    auto g = zero_morphism(ctx.c, psi.dst);
    for (std::size_t j = 0; j < ch.v1.hom.size(); ++j)
      g = mor_add(g, mor_scale(ch.v1.hom[j], coef.at(j, 0)));
    auto G0 = factor_through_epi(psi, compose(g, ctx.pres_c.eps));
    if (!G0) throw std::logic_error("defect chain: psi lift failed");
    auto G1 = compose(*G0, ctx.pres_c.d);
    auto H1 = factor_through_epi(phi, G1);
    if (!H1) throw std::logic_error("defect chain: phi lift failed");
    // push H1 into Tr c (x) X
    Mat<F> big(f, ch.tx.offsets.back(), 1);
    for (std::size_t p = 0; p < gens.size(); ++p) {
      const auto [v, pos] = gens[p];
      const auto [v_p1, col] = gens_p1[p];
      auto xcol = H1->blocks[v_p1].col(col);  // in X_v
      Mat<F> gen(f, ctx.tc.coker_proj.blocks[v].cols(), 1);
      gen.at(pos, 0) = f.one();
      auto tvec = ctx.tc.coker_proj.blocks[v] * gen;  // in (Tr c)_v
      for (std::size_t ti = 0; ti < tvec.rows(); ++ti)
        for (std::size_t i = 0; i < X.dims[v]; ++i)
          big.at(ch.tx.offsets[v] + ti * X.dims[v] + i, 0) =
              f.add(big.at(ch.tx.offsets[v] + ti * X.dims[v] + i, 0),
                    f.mul(tvec.at(ti, 0), xcol.at(i, 0)));
    }
    auto ucol = ch.tx.proj * big;
    if (!((ch.tphi * ucol).is_zero())) delta_ok = false;
    auto v2c = solve(ch.v2_incl, ucol);
    if (!v2c) {
      delta_ok = false;
      continue;
    }
    for (std::size_t r = 0; r < v2.dim(); ++r) ch.delta.at(r, t) = v2c->at(r, 0);
  }
  ch.report.check("snake image lies in the tensor kernel", delta_ok);
  const bool delta_iso = ch.v1.dim() == v2.dim() && is_invertible(ch.delta);
  ch.report.check("snake connecting map is an isomorphism", delta_iso);

  // gamma-equivariance of delta: delta(v . g) = delta(v) . gamma(g)
  bool equivariant = true;
  for (std::size_t t = 0; t < ctx.cbar.quotient->dim() && delta_iso; ++t) {
    Mat<F> e(f, ctx.cbar.quotient->dim(), 1);
    e.at(t, 0) = f.one();
    auto glift = ctx.cbar.section * e;  // in Gamma coordinates
    Mat<F> RV1(f, ch.v1.dim(), ch.v1.dim());
    for (std::size_t k = 0; k < ctx.Ec.alg->dim(); ++k)
      if (!f.is_zero(glift.at(k, 0))) RV1 = RV1 + ch.v1mod.act[k].scaled(glift.at(k, 0));
    auto slift = ctx.trbar.section * (ctx.gamma * e);  // in Sigma' coordinates
    Mat<F> SV2(f, ch.v2mod.dims[0], ch.v2mod.dims[0]);
    for (std::size_t k = 0; k < ctx.Etr.alg->dim(); ++k)
      if (!f.is_zero(slift.at(k, 0))) SV2 = SV2 + ch.v2mod.act[k].scaled(slift.at(k, 0));
    if (!(ch.delta * RV1 == SV2 * ch.delta)) equivariant = false;
  }
  ch.report.check("snake map intertwines gamma", equivariant);

  // Hom over Sigma-bar into i_bar, then into the envelope
  ch.M = hom_basis(ch.v2mod, ctx.J);
  ch.N = hom_basis(ch.v2mod, ctx.envJ.dst);
  ch.report.dim("Hom_Sigma-bar(V2, i_bar)", ch.M.size());
  ch.report.dim("Hom_Sigma(V2, E(i_bar))", ch.N.size());
  ch.report.check("envelope does not change the Hom space", ch.M.size() == ch.N.size());

  // right-hand value
  ch.rval = evaluate(FpFunctor<F>{Variance::Cov, phi}, ctx.tau);
  ch.report.rhs_dim = ch.rval.dim();

  if (!delta_iso) {
    ch.report.witness = Mat<F>(f, ch.rval.dim(), ch.L.size());
    ch.report.witness_invertible = false;
    return ch;
  }

  // assemble the witness L -> R
  auto delta_inv = inverse(ch.delta);
  Mat<F> c1(f, ch.M.size(), ch.L.size());
  for (std::size_t t = 0; t < ch.L.size(); ++t) {
    Mat<F> mu = lbar[t] * *delta_inv;  // V2 -> i_bar coords
    Morphism<F> mor{ch.v2mod, ctx.J, {mu}};
    auto c = expand_in_hom_basis(ch.M, mor);
    for (std::size_t r = 0; r < ch.M.size(); ++r) c1.at(r, t) = c.at(r, 0);
  }
  Mat<F> c2(f, ch.N.size(), ch.M.size());
  for (std::size_t t = 0; t < ch.M.size(); ++t) {
    auto c = expand_in_hom_basis(ch.N, compose(ctx.envJ, ch.M[t]));
    for (std::size_t r = 0; r < ch.N.size(); ++r) c2.at(r, t) = c.at(r, 0);
  }
  // extend each N-element along the tensor inclusion and take the adjoint
  const Module<F>& E = ctx.envJ.dst;
  const std::size_t ed = E.dims[0];
  std::vector<Mat<F>> Ttot;
  for (std::size_t k = 0; k < ctx.Etr.alg->dim(); ++k)
    Ttot.push_back(tensor_induced(ch.tx, ch.tx, ctx.Etr.basis[k], identity_morphism(X)));
  Mat<F> c3(f, ch.rval.dim(), ch.N.size());
  bool adjoint_ok = true;
  for (std::size_t t = 0; t < ch.N.size(); ++t) {
    // solve for W : T_X -> E, Sigma'-linear, restricting to N[t] on V2
    const std::size_t nunk = ed * ch.tx.dim;
    std::size_t nrows = ctx.Etr.alg->dim() * ed * ch.tx.dim + ed * ch.v2mod.dims[0];
    Mat<F> sys(f, nrows, nunk);
    Mat<F> rhs(f, nrows, 1);
    std::size_t r0 = 0;
    for (std::size_t k = 0; k < ctx.Etr.alg->dim(); ++k) {
      // W * Ttot_k - E.act[k] * W = 0
      for (std::size_t i = 0; i < ed; ++i)
        for (std::size_t j = 0; j < ch.tx.dim; ++j) {
          const std::size_t row = r0 + i * ch.tx.dim + j;
          for (std::size_t s = 0; s < ch.tx.dim; ++s)
            if (!f.is_zero(Ttot[k].at(s, j)))
              sys.at(row, i * ch.tx.dim + s) = f.add(sys.at(row, i * ch.tx.dim + s), Ttot[k].at(s, j));
          for (std::size_t s = 0; s < ed; ++s)
            if (!f.is_zero(E.act[k].at(i, s)))
              sys.at(row, s * ch.tx.dim + j) = f.sub(sys.at(row, s * ch.tx.dim + j), E.act[k].at(i, s));
        }
      r0 += ed * ch.tx.dim;
    }
    for (std::size_t i = 0; i < ed; ++i)
      for (std::size_t j = 0; j < ch.v2mod.dims[0]; ++j) {
        const std::size_t row = r0 + i * ch.v2mod.dims[0] + j;
        for (std::size_t s = 0; s < ch.tx.dim; ++s)
          if (!f.is_zero(ch.v2_incl.at(s, j)))
            sys.at(row, i * ch.tx.dim + s) = f.add(sys.at(row, i * ch.tx.dim + s), ch.v2_incl.at(s, j));
        rhs.at(row, 0) = ch.N[t].blocks[0].at(i, j);
      }
    auto wsol = solve(sys, rhs);
    if (!wsol) {
      adjoint_ok = false;
      continue;
    }
    Mat<F> W(f, ed, ch.tx.dim);
    for (std::size_t i = 0; i < ed; ++i)
      for (std::size_t j = 0; j < ch.tx.dim; ++j) W.at(i, j) = wsol->at(i * ch.tx.dim + j, 0);
    // adjoint f_n : X -> tau
    std::vector<Mat<F>> blocks;
    for (std::size_t v = 0; v < X.vertex_count(); ++v)
      blocks.emplace_back(f, ctx.tau.dims[v], X.dims[v]);
    bool graded_ok = true;
    for (std::size_t v = 0; v < X.vertex_count() && graded_ok; ++v)
      for (std::size_t i = 0; i < X.dims[v]; ++i) {
        // h_x : Tr c total -> E, t |-> W([t (x) x])
        Mat<F> hx(f, ed, ctx.tc.tr.total_dim());
        for (std::size_t ti = 0; ti < ctx.tc.tr.dims[v]; ++ti) {
          Mat<F> big(f, ch.tx.offsets.back(), 1);
          big.at(ch.tx.offsets[v] + ti * X.dims[v] + i, 0) = f.one();
          auto col = W * (ch.tx.proj * big);
          for (std::size_t s = 0; s < ed; ++s) hx.at(s, ctx.tc.tr.offset(v) + ti) = col.at(s, 0);
        }
        Morphism<F> hmor{ctx.trS, E, {hx}};
        auto hcoords = expand_in_hom_basis(ctx.tau_hom, hmor);
        auto graded = ctx.grade_Uinv * hcoords;
        for (std::size_t r = 0; r < graded.rows(); ++r) {
          const bool in_block = r >= ctx.tau.offset(v) && r < ctx.tau.offset(v) + ctx.tau.dims[v];
          if (!in_block && !f.is_zero(graded.at(r, 0))) graded_ok = false;
          if (in_block) blocks[v].at(r - ctx.tau.offset(v), i) = graded.at(r, 0);
        }
      }
    if (!graded_ok) {
      adjoint_ok = false;
      continue;
    }
    auto fn = make_morphism(X, ctx.tau, blocks);
    Mat<F> cls = ch.rval.hom.empty() ? Mat<F>(f, 0, 1)
                                     : ch.rval.quot * expand_in_hom_basis(ch.rval.hom, fn);
    for (std::size_t r = 0; r < ch.rval.dim(); ++r) c3.at(r, t) = cls.at(r, 0);
  }
  ch.report.check("tensor-hom adjunction well defined", adjoint_ok);
  ch.witness = c3 * c2 * c1;
  ch.report.witness = ch.witness;
  ch.report.witness_invertible =
      ch.report.lhs_dim == ch.report.rhs_dim && is_invertible(ch.witness);
  return ch;
}

template <class F>
DualityReport<F> verify_defect_formula(const TranslateContext<F>& ctx, const ShortExactSequence<F>& xi,
                                       const std::string& name, FittingOptions opts = {}) {
  return defect_chain(ctx, xi, name, opts).report;
}

/// The audited part of the proof chain: coker Hom-bar(c, psi) against
/// ker(phi (x) Tr c), via the stable route computed independently.
template <class F>
DualityReport<F> snake_chain_audit(const TranslateContext<F>& ctx, const ShortExactSequence<F>& xi,
                                   FittingOptions opts = {}) {
  auto ch = defect_chain(ctx, xi, "snake audit", opts);
  auto& rep = ch.report;
  if (ctx.trivial) {
    rep.lhs_dim = rep.rhs_dim = 0;
    rep.witness_invertible = true;
    return rep;
  }
  // independent computation of coker Hom-underline(c, psi) through stable homs
  const F f = ctx.c.A->field;
  auto cover_Y = projective_cover(xi.pi.src, opts);
  auto cover_Z = projective_cover(xi.pi.dst, opts);
  auto shY = stable_hom_proj(ctx.c, xi.pi.src, cover_Y);
  auto shZ = stable_hom_proj(ctx.c, xi.pi.dst, cover_Z);
  Mat<F> ind(f, shZ.dim(), shY.dim());
  for (std::size_t j = 0; j < shY.dim(); ++j) {
    Mat<F> e(f, shY.dim(), 1);
    e.at(j, 0) = f.one();
    auto rep_m = shY.representative(ctx.c, xi.pi.src, e);
    auto cls = shZ.stable_class(compose(xi.pi, rep_m));
    for (std::size_t i = 0; i < shZ.dim(); ++i) ind.at(i, j) = cls.at(i, 0);
  }
  const std::size_t stable_coker = shZ.dim() - rank(ind);
  rep.dim("coker Hom-bar(c, psi), stable route", stable_coker);
  rep.check("stable route agrees with the functor value", stable_coker == ch.v1.dim());
  rep.lhs_dim = ch.v1.dim();
  rep.rhs_dim = ch.v2mod.is_zero() ? 0 : ch.v2mod.dims[0];
  rep.witness = ch.delta;
  rep.witness_invertible = rep.lhs_dim == rep.rhs_dim && is_invertible(ch.delta);
  return rep;
}

// ---------------------------------------------------------------------------
// envelope / cover sequences

template <class F>
ShortExactSequence<F> envelope_ses(const Module<F>& x, const Morphism<F>& env) {
  auto ck = cokernel(env);
  return make_ses(env, ck.map);
}

template <class F>
ShortExactSequence<F> cover_ses(const ProjectivePresentation<F>& pres) {
  auto K = kernel(pres.eps);
  return make_ses(K.map, pres.eps);
}

// ---------------------------------------------------------------------------
// AR duality, both forms

/// Hom_Gamma(Ext^1(c, x), i) == Hom-bar(x, tau_c(i)): run the defect chain on
/// the injective-envelope sequence of x and translate its left end through
/// the connecting isomorphism Ext^1(c, x) = xi^*(c).
template <class F>
struct InjDualityData {
  DualityReport<F> report;
  ExtSpace<F> ext;            // Ext^1(c, x), syzygy form
  Module<F> extmod;           // as right Gamma-module
  std::vector<Morphism<F>> L; // Hom_Gamma(Ext^1(c,x), i)
  Mat<F> chi;                 // xi^*(c) -> Ext coords
  FunctorValue<F> rhs;        // Hom-bar(x, tau) as the defect value
  Mat<F> witness;             // L -> rhs coords
};

template <class F>
InjDualityData<F> verify_ar_duality_inj(const TranslateContext<F>& ctx, const Module<F>& x,
                                        const Morphism<F>& env_x,
                                        const ProjectivePresentation<F>& pres_c,
                                        FittingOptions opts = {}) {
  const F f = ctx.c.A->field;
  auto xi = envelope_ses(x, env_x);
  auto ch = defect_chain(ctx, xi, "ar duality (mod injectives)", opts);
  InjDualityData<F> out{ch.report, ext1(ctx.c, x, pres_c), {}, {}, Mat<F>(f, 0, 0), ch.rval, {}};
  auto& rep = out.report;

  // connecting iso chi : xi^*(c) -> Ext^1(c, x)
  out.chi = Mat<F>(f, out.ext.dim(), ch.v1.dim());
  bool chi_ok = true;
  for (std::size_t t = 0; t < ch.v1.dim(); ++t) {
    Mat<F> e(f, ch.v1.dim(), 1);
    e.at(t, 0) = f.one();
    auto coef = ch.v1.sect * e;
    auto g = zero_morphism(ctx.c, xi.pi.dst);
    for (std::size_t j = 0; j < ch.v1.hom.size(); ++j)
      g = mor_add(g, mor_scale(ch.v1.hom[j], coef.at(j, 0)));
    auto ghat = factor_through_epi(xi.pi, compose(g, pres_c.eps));
    if (!ghat) {
      chi_ok = false;
      continue;
    }
    auto w0 = compose(*ghat, out.ext.omega_incl);
    std::vector<Mat<F>> blocks;
    bool solved = true;
    for (std::size_t v = 0; v < w0.blocks.size(); ++v) {
      auto s = solve(env_x.blocks[v], w0.blocks[v]);
      if (!s) {
        solved = false;
        break;
      }
      blocks.push_back(std::move(*s));
    }
    if (!solved) {
      chi_ok = false;
      continue;
    }
    auto w = make_morphism(out.ext.omega, x, blocks);
    auto cls = out.ext.class_of(w);
    for (std::size_t r = 0; r < out.ext.dim(); ++r) out.chi.at(r, t) = cls.at(r, 0);
  }
  rep.check("xi^*(c) identifies with Ext^1(c, x)",
            chi_ok && out.ext.dim() == ch.v1.dim() && is_invertible(out.chi));
  rep.dim("Ext^1(c, x)", out.ext.dim());

  if (ctx.trivial) {
    rep.lhs_dim = 0;
    rep.check("Ext^1(c, -) vanishes for projective c", out.ext.dim() == 0);
    out.witness = rep.witness;
    return out;
  }
  if (!rep.pass() && !is_invertible(out.chi)) {
    out.witness = rep.witness;
    return out;
  }

  // user-facing left end: Hom_Gamma(Ext^1(c,x), i), conjugated through chi
  out.extmod = ext_right_end_module(out.ext, ctx.Ec, ctx.Gop);
  out.L = hom_basis(out.extmod, ctx.i);
  rep.lhs_dim = out.L.size();
  Mat<F> T(f, ch.L.size(), out.L.size());
  bool conj_ok = out.L.size() == ch.L.size();
  for (std::size_t t = 0; t < out.L.size() && conj_ok; ++t) {
    Morphism<F> comp{ch.v1mod, ctx.i, {out.L[t].blocks[0] * out.chi}};
    auto c = expand_in_hom_basis(ch.L, comp);
    for (std::size_t r = 0; r < ch.L.size(); ++r) T.at(r, t) = c.at(r, 0);
  }
  rep.check("Gamma-linearity transports through chi", conj_ok);
  out.witness = ch.witness * T;
  rep.witness = out.witness;
  rep.witness_invertible = rep.lhs_dim == rep.rhs_dim && is_invertible(out.witness);
  return out;
}

/// Hom_Gamma(Hom-under(c, x), i) == Ext^1(x, tau_c(i)): the defect chain on
/// the projective-cover sequence of x; both ends are the canonical spaces.
template <class F>
struct ProjDualityData {
  DualityReport<F> report;
  ExtSpace<F> rhs_ext;          // Ext^1(x, tau) with realizations available
  FunctorValue<F> v1;           // Hom-under(c, x) as the defect value
  Module<F> v1mod;              // ... and as a right Gamma-module
  std::vector<Morphism<F>> L;
  Mat<F> witness;
};

template <class F>
ProjDualityData<F> verify_ar_duality_proj(const TranslateContext<F>& ctx, const Module<F>& x,
                                          const ProjectivePresentation<F>& pres_x,
                                          FittingOptions opts = {}) {
  auto xi = cover_ses(pres_x);
  auto ch = defect_chain(ctx, xi, "ar duality (mod projectives)", opts);
  ProjDualityData<F> out{ch.report, ext1(x, ctx.tau, pres_x), ch.v1, ch.v1mod, ch.L, ch.witness};
  auto& rep = out.report;
  // the chain's right value is literally the syzygy-form Ext^1(x, tau)
  rep.dim("Ext^1(x, tau)", out.rhs_ext.dim());
  rep.check("chain value equals syzygy Ext^1(x, tau)", out.rhs_ext.dim() == ch.rval.dim());
  return out;
}

// ---------------------------------------------------------------------------
// almost split sequences

template <class F>
struct AlmostSplitResult {
  ShortExactSequence<F> seq;
  Mat<F> socle_class;  // the chosen Ext class
  bool division_warning = false;  // End(c)/rad is a proper division algebra
};

/// The sequence 0 -> tau c -> E -> c -> 0 attached to a socle element of
/// Ext^1(c, tau c) over the stable endomorphism algebra.
template <class F>
AlmostSplitResult<F> almost_split_sequence(const Module<F>& c, FittingOptions opts = {}) {
  const F f = c.A->field;
  if (c.is_zero()) throw std::invalid_argument("almost split: zero module");
  if (fitting_decompose(c, opts).size() != 1)
    throw std::invalid_argument("almost split: module is decomposable");
  auto Ec = endomorphism_algebra(c);
  auto cover = projective_cover(c, opts);
  auto cbar = stable_endo_quotient(c, Ec, cover);
  if (cbar.quotient->dim() == 0)
    throw std::invalid_argument("no almost split sequence ends in a projective");
  auto pres = minimal_presentation(c, opts);
  auto tau = ar_translate_classical(c, opposite(c.A), opts);
  auto ext = ext1(c, tau, pres);
  if (ext.dim() == 0) throw std::logic_error("almost split: Ext^1(c, tau c) vanished");

  // right Gamma-bar action on Ext^1(c, tau c)
  std::vector<Mat<F>> acts;
  for (std::size_t t = 0; t < cbar.quotient->dim(); ++t) {
    Mat<F> e(f, cbar.quotient->dim(), 1);
    e.at(t, 0) = f.one();
    auto lift = cbar.section * e;
    auto endo = zero_morphism(c, c);
    for (std::size_t k = 0; k < Ec.alg->dim(); ++k)
      endo = mor_add(endo, mor_scale(Ec.basis[k], lift.at(k, 0)));
    acts.push_back(ext1_pull(ext, ext, endo));
  }
  auto radq = radical(cbar.quotient);
  bool division_warning = cbar.quotient->dim() - radq.dim() > 1;
  Mat<F> stack(f, 0, ext.dim());
  for (std::size_t r = 0; r < radq.dim(); ++r) {
    Mat<F> a(f, ext.dim(), ext.dim());
    for (std::size_t k = 0; k < cbar.quotient->dim(); ++k)
      if (!f.is_zero(radq.basis.at(r, k))) a = a + acts[k].scaled(radq.basis.at(r, k));
    stack = stack.vstack(a);
  }
  auto soc = kernel_basis(stack);
  if (soc.dim() == 0) throw std::logic_error("almost split: socle of Ext^1(c, tau c) vanished");
  Mat<F> cls(f, ext.dim(), 1);
  for (std::size_t k = 0; k < ext.dim(); ++k) cls.at(k, 0) = soc.basis.at(0, k);
  auto seq = realize_ext_class(ext, cls);
  return AlmostSplitResult<F>{seq, cls, division_warning};
}

/// Right-almost-split audit: every non-retraction h : X -> c from the given
/// test modules factors through the epi.
template <class F>
bool right_almost_split_audit(const ShortExactSequence<F>& seq,
                              const std::vector<Module<F>>& test_modules,
                              std::string* failure = nullptr) {
  const auto& c = seq.pi.dst;
  for (std::size_t m = 0; m < test_modules.size(); ++m) {
    for (const auto& h : hom_basis(test_modules[m], c)) {
      const bool retraction = factor_through_epi(h, identity_morphism(c)).has_value();
      if (retraction) continue;
      if (!factor_through_epi(seq.pi, h).has_value()) {
        if (failure)
          *failure = "non-retraction from test module " + std::to_string(m) +
                     " does not factor through the almost split epi";
        return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// right-determined epimorphisms

template <class F>
struct DeterminedEpi {
  ShortExactSequence<F> seq;  // 0 -> tau_c(J) -> X_C -> x -> 0
  Morphism<F> pi;
  Module<F> J;
  bool trivial = false;  // Hom-under(c, x) = 0: pi = id
};

/// The epi pi : X_C -> x through which a map from c factors iff its stable
/// class vanishes: realize the class of the injective envelope of
/// Hom-under(c, x) under the chain for the cover sequence of x.
template <class F>
DeterminedEpi<F> determined_epi(const Module<F>& c, const Module<F>& x, FittingOptions opts = {}) {
  const F f = c.A->field;
  auto Ec = endomorphism_algebra(c);
  auto Gop = opposite(Ec.alg);
  auto pres_x = minimal_presentation(x, opts);
  auto xi = cover_ses(pres_x);
  // Hom-under(c, x) as a right Gamma-module (the chain's V1)
  auto v1 = evaluate(FpFunctor<F>{Variance::Contra, xi.pi}, c);
  if (v1.dim() == 0) {
    auto z = zero_module(x.A);
    auto seq = make_ses(zero_morphism(z, x), identity_morphism(x));
    return DeterminedEpi<F>{seq, identity_morphism(x), zero_module(Gop), true};
  }
  auto Hmod = quotient_right_end_module(v1, Ec, Gop);
  auto envH = injective_envelope(Hmod, opts);
  auto ctx = build_translate_context(c, envH.dst, opts);
  auto ch = defect_chain(ctx, xi, "determined epi", opts);
  if (!ch.report.witness_invertible) throw std::logic_error("determined_epi: chain failed");
  // eta = the envelope inclusion, as an element of L = Hom_Gamma(V1, J)
  Morphism<F> eta{ch.v1mod, ctx.i, {envH.blocks[0]}};
  auto eta_coords = expand_in_hom_basis(ch.L, eta);
  auto cls = ch.witness * eta_coords;  // in xi_*(tau) = Ext^1(x, tau_c(J))
  auto ext = ext1(x, ctx.tau, pres_x);
  auto seq = realize_ext_class(ext, cls);
  return DeterminedEpi<F>{seq, seq.pi, ctx.i, false};
}

/// Im Hom(c, a') <= Im Hom(c, a)  iff  a' factors through a, checked over
/// Hom bases from the given test modules.
template <class F>
std::optional<std::string> right_determined_check(const Morphism<F>& alpha, const Module<F>& c,
                                                  const std::vector<Module<F>>& test_modules) {
  const F f = c.A->field;
  auto hom_cY = hom_basis(c, alpha.dst);
  auto im_of = [&](const Morphism<F>& a) {
    // span of the classes of a . g for g in Hom(c, a.src)
    auto gs = hom_basis(c, a.src);
    Mat<F> rows(f, gs.size(), hom_cY.size());
    for (std::size_t t = 0; t < gs.size(); ++t) {
      auto cexp = hom_cY.empty() ? Mat<F>(f, 0, 1) : expand_in_hom_basis(hom_cY, compose(a, gs[t]));
      for (std::size_t j = 0; j < hom_cY.size(); ++j) rows.at(t, j) = cexp.at(j, 0);
    }
    return row_space(rows);
  };
  auto im_alpha = im_of(alpha);
  for (std::size_t m = 0; m < test_modules.size(); ++m) {
    for (const auto& ap : hom_basis(test_modules[m], alpha.dst)) {
      const bool contained = subspace_leq(im_of(ap), im_alpha);
      const bool factors = factor_through_epi(alpha, ap).has_value();
      if (contained != factors)
        return "biconditional fails for a morphism from test module " + std::to_string(m) +
               (contained ? ": image contained but no factorization" : ": factors but image escapes");
    }
  }
  return std::nullopt;
}

}  // namespace art
