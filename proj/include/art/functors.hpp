#pragma once

#include "art/stable.hpp"

namespace art {

template <class F>
ShortExactSequence<F> make_ses(Morphism<F> iota, Morphism<F> pi) {
  if (!(iota.dst == pi.src)) throw std::invalid_argument("ses: middle modules differ");
  for (std::size_t v = 0; v < iota.blocks.size(); ++v) {
    if (kernel_basis(iota.blocks[v]).dim() != 0)
      throw std::invalid_argument("ses: first map is not injective at vertex " + std::to_string(v));
    if (rank(pi.blocks[v]) != pi.dst.dims[v])
      throw std::invalid_argument("ses: second map is not surjective at vertex " + std::to_string(v));
    if (!(row_space(iota.blocks[v].transpose()) == kernel_basis(pi.blocks[v])))
      throw std::invalid_argument("ses: image != kernel at vertex " + std::to_string(v));
  }
  return ShortExactSequence<F>{std::move(iota), std::move(pi)};
}

template <class F>
bool ses_is_split(const ShortExactSequence<F>& s) {
  return factor_through_epi(s.pi, identity_morphism(s.pi.dst)).has_value();
}

/// Pushout of the sequence along f : X -> X2.
template <class F>
ShortExactSequence<F> ses_pushout(const ShortExactSequence<F>& s, const Morphism<F>& f) {
  const auto& X = s.iota.src;
  auto sum = direct_sum<F>({s.iota.dst, f.dst});
  // (iota, -f) : X -> Y + X2
  auto m = mor_add(compose(sum.inject[0], s.iota), mor_scale(compose(sum.inject[1], f), X.A->field.neg(X.A->field.one())));
  auto ck = cokernel(m);
  auto iota2 = compose(ck.map, sum.inject[1]);
  // pi2 with pi2 . q = (pi, 0)
  auto pi0 = compose(s.pi, sum.project[0]);
  auto pi2 = factor_through_mono(ck.map, pi0);
  if (!pi2) throw std::logic_error("ses_pushout: induced epi not defined");
  return make_ses(iota2, *pi2);
}

/// Pullback of the sequence along h : Z2 -> Z.
template <class F>
ShortExactSequence<F> ses_pullback(const ShortExactSequence<F>& s, const Morphism<F>& h) {
  const auto& Z = s.pi.dst;
  auto sum = direct_sum<F>({s.pi.src, h.src});
  // (pi, -h) : Y + Z2 -> Z
  auto m = mor_add(compose(s.pi, sum.project[0]),
                   mor_scale(compose(h, sum.project[1]), Z.A->field.neg(Z.A->field.one())));
  auto K = kernel(m);
  auto pi2 = compose(sum.project[1], K.map);
  // iota2 : X -> ker, x |-> (iota x, 0)
  auto into_sum = compose(sum.inject[0], s.iota);
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < into_sum.blocks.size(); ++v) {
    auto sol = solve(K.map.blocks[v], into_sum.blocks[v]);
    if (!sol) throw std::logic_error("ses_pullback: corestriction failed");
    blocks.push_back(std::move(*sol));
  }
  auto iota2 = make_morphism(s.iota.src, K.mod, std::move(blocks));
  return make_ses(iota2, pi2);
}

// ---------------------------------------------------------------------------
// finitely presented functors

enum class Variance { Contra, Cov };

/// F = coker Hom(-, phi) (contra) or coker Hom(phi, -) (cov); never
/// materialized, only evaluated.
template <class F>
struct FpFunctor {
  Variance variance;
  Morphism<F> phi;  // X -> Y
};

/// The value F(M): a canonical quotient of a Hom space.
template <class F>
struct FunctorValue {
  std::vector<Morphism<F>> hom;  // basis of Hom(M,Y) (contra) or Hom(X,M) (cov)
  Mat<F> quot, sect;
  std::size_t dim() const { return quot.rows(); }
};

template <class F>
FunctorValue<F> evaluate(const FpFunctor<F>& fun, const Module<F>& M) {
  const F f = M.A->field;
  std::vector<Morphism<F>> target_hom, source_hom;
  if (fun.variance == Variance::Contra) {
    target_hom = hom_basis(M, fun.phi.dst);
    source_hom = hom_basis(M, fun.phi.src);
  } else {
    target_hom = hom_basis(fun.phi.src, M);
    source_hom = hom_basis(fun.phi.dst, M);
  }
  Mat<F> rows(f, source_hom.size(), target_hom.size());
  for (std::size_t t = 0; t < source_hom.size(); ++t) {
    auto img = fun.variance == Variance::Contra ? compose(fun.phi, source_hom[t])
                                                : compose(source_hom[t], fun.phi);
    auto c = expand_in_hom_basis(target_hom, img);
    for (std::size_t j = 0; j < target_hom.size(); ++j) rows.at(t, j) = c.at(j, 0);
  }
  auto quot = quotient_map(target_hom.size(), row_space(rows));
  Mat<F> sect(f, target_hom.size(), quot.rows());
  if (quot.rows() > 0) {
    auto s = solve(quot, Mat<F>::identity(f, quot.rows()));
    if (!s) throw std::logic_error("evaluate: no section");
    sect = *s;
  }
  return FunctorValue<F>{std::move(target_hom), std::move(quot), std::move(sect)};
}

/// Induced map on values along g : M -> M2. Contravariant functors give
/// F(M2) -> F(M), covariant ones F(M) -> F(M2).
template <class F>
Mat<F> induced_map(const FpFunctor<F>& fun, const Morphism<F>& g, const FunctorValue<F>& at_src,
                   const FunctorValue<F>& at_dst) {
  // at_src = value at g.src, at_dst = value at g.dst
  const F f = g.src.A->field;
  if (fun.variance == Variance::Contra) {
    Mat<F> m(f, at_src.hom.size(), at_dst.hom.size());
    for (std::size_t j = 0; j < at_dst.hom.size(); ++j) {
      auto c = expand_in_hom_basis(at_src.hom, compose(at_dst.hom[j], g));
      for (std::size_t i = 0; i < at_src.hom.size(); ++i) m.at(i, j) = c.at(i, 0);
    }
    return at_src.quot * m * at_dst.sect;
  }
  Mat<F> m(f, at_dst.hom.size(), at_src.hom.size());
  for (std::size_t j = 0; j < at_src.hom.size(); ++j) {
    auto c = expand_in_hom_basis(at_dst.hom, compose(g, at_src.hom[j]));
    for (std::size_t i = 0; i < at_dst.hom.size(); ++i) m.at(i, j) = c.at(i, 0);
  }
  return at_dst.quot * m * at_src.sect;
}

/// Natural transformations out of a finitely presented functor with the same
/// variance: Nat(coker Hom(-,alpha), G) = ker G(alpha) by Yoneda.
template <class F>
std::size_t nat_hom_dim(const FpFunctor<F>& presented_by_alpha, const FpFunctor<F>& G) {
  const auto& alpha = presented_by_alpha.phi;
  auto at_src = evaluate(G, alpha.src);
  auto at_dst = evaluate(G, alpha.dst);
  auto m = induced_map(G, alpha, at_src, at_dst);
  // contra: G(dst) -> G(src); covariant analogue runs the other way
  return kernel_basis(m).dim();
}

// ---------------------------------------------------------------------------
// defects of a short exact sequence

template <class F>
struct DefectPair {
  ShortExactSequence<F> seq;
  FpFunctor<F> contra;  // xi^* = coker Hom(-, pi)
  FpFunctor<F> cov;     // xi_* = coker Hom(iota, -)
};

template <class F>
DefectPair<F> defects(const ShortExactSequence<F>& seq) {
  // exactness is re-certified so stored sequences cannot drift
  auto checked = make_ses(seq.iota, seq.pi);
  return DefectPair<F>{checked, FpFunctor<F>{Variance::Contra, checked.pi},
                       FpFunctor<F>{Variance::Cov, checked.iota}};
}

/// The duality between the two defects realized at sequence level: the
/// defect pair of the dualized sequence over the opposite algebra, where the
/// roles of xi^* and xi_* are exchanged (xi^* of the dual evaluates at D(M)
/// to xi_* at M and vice versa).
template <class F>
DefectPair<F> defect_duality_swap(const DefectPair<F>& pair, const AlgebraRef<F>& Aop) {
  auto iota2 = dual(pair.seq.pi, Aop);
  auto pi2 = dual(pair.seq.iota, Aop);
  return defects(make_ses(iota2, pi2));
}

template <class F>
DefectPair<F> defect_duality_swap(const DefectPair<F>& pair) {
  return defect_duality_swap(pair, opposite(pair.seq.iota.src.A));
}

/// eff: corestrict the presenting morphism to its image. Right adjoint to
/// the inclusion of effaceable functors.
template <class F>
FpFunctor<F> eff(const FpFunctor<F>& fun) {
  if (fun.variance != Variance::Contra) throw std::invalid_argument("eff: contravariant input required");
  auto im = image(fun.phi);
  return FpFunctor<F>{Variance::Contra, corestriction_to_image(fun.phi, im)};
}

// ---------------------------------------------------------------------------
// coinduction at a single object

/// coind_c(i)(x) = Hom_Gamma(Hom(c, x), i) for Gamma = End(c), i a right
/// Gamma-module (left module over End(c)^op).
template <class F>
std::size_t coind_eval(const EndAlgebra<F>& Ec, const AlgebraRef<F>& Gop, const Module<F>& i,
                       const Module<F>& x) {
  if (!(*i.A == *Gop)) throw std::invalid_argument("coind_eval: i must live over End(c)^op");
  auto [hom_mod, hb] = hom_as_right_end_module(Ec, Gop, x);
  return hom_basis(hom_mod, i).size();
}

template <class F>
std::size_t coind_eval(const Module<F>& c, const Module<F>& i, const Module<F>& x) {
  auto Ec = endomorphism_algebra(c);
  return coind_eval(Ec, opposite(Ec.alg), i, x);
}

// ---------------------------------------------------------------------------
// Ext^1 via the syzygy formula

/// Ext^1(c, x) = Hom(Omega c, x) / im Hom(P0, x), from a minimal
/// presentation of c. Classes are realized as genuine short exact sequences
/// by pushout along representatives.
template <class F>
struct ExtSpace {
  Module<F> c, x;
  ProjectivePresentation<F> pres;  // minimal presentation of c
  Module<F> omega;
  Morphism<F> omega_incl;  // Omega c -> P0
  std::vector<Morphism<F>> hom;  // basis of Hom(Omega c, x)
  Mat<F> quot, sect;

  std::size_t dim() const { return quot.rows(); }

  Mat<F> class_of(const Morphism<F>& f) const {
    if (hom.empty()) return Mat<F>(quot.field(), 0, 1);
    return quot * expand_in_hom_basis(hom, f);
  }

  Morphism<F> representative(const Mat<F>& cls) const {
    auto r = zero_morphism(omega, x);
    auto cf = sect * cls;
    for (std::size_t t = 0; t < hom.size(); ++t) r = mor_add(r, mor_scale(hom[t], cf.at(t, 0)));
    return r;
  }
};

template <class F>
ExtSpace<F> ext1(const Module<F>& c, const Module<F>& x, const ProjectivePresentation<F>& pres) {
  const F f = c.A->field;
  auto K = kernel(pres.eps);
  auto hb = hom_basis(K.mod, x);
  auto p0x = hom_basis(pres.p0, x);
  Mat<F> rows(f, p0x.size(), hb.size());
  for (std::size_t t = 0; t < p0x.size(); ++t) {
    auto cexp = expand_in_hom_basis(hb, compose(p0x[t], K.map));
    for (std::size_t j = 0; j < hb.size(); ++j) rows.at(t, j) = cexp.at(j, 0);
  }
  auto quot = quotient_map(hb.size(), row_space(rows));
  Mat<F> sect(f, hb.size(), quot.rows());
  if (quot.rows() > 0) {
    auto s = solve(quot, Mat<F>::identity(f, quot.rows()));
    if (!s) throw std::logic_error("ext1: no section");
    sect = *s;
  }
  return ExtSpace<F>{c, x, pres, K.mod, K.map, std::move(hb), std::move(quot), std::move(sect)};
}

template <class F>
ExtSpace<F> ext1(const Module<F>& c, const Module<F>& x, FittingOptions opts = {}) {
  return ext1(c, x, minimal_presentation(c, opts));
}

/// Realize an Ext class as a short exact sequence 0 -> x -> E -> c -> 0 by
/// pushing the presentation sequence out along a representative.
template <class F>
ShortExactSequence<F> realize_ext_class(const ExtSpace<F>& ext, const Mat<F>& cls) {
  auto rep = ext.representative(cls);
  auto base = make_ses(ext.omega_incl, ext.pres.eps);
  return ses_pushout(base, rep);
}

/// Ext^1(c, g) for g : x -> x2 (postcomposition, covariant).
template <class F>
Mat<F> ext1_push(const ExtSpace<F>& at_x, const ExtSpace<F>& at_x2, const Morphism<F>& g) {
  const F f = g.src.A->field;
  Mat<F> m(f, at_x2.hom.size(), at_x.hom.size());
  for (std::size_t j = 0; j < at_x.hom.size(); ++j) {
    auto cexp = expand_in_hom_basis(at_x2.hom, compose(g, at_x.hom[j]));
    for (std::size_t i = 0; i < at_x2.hom.size(); ++i) m.at(i, j) = cexp.at(i, 0);
  }
  return at_x2.quot * m * at_x.sect;
}

/// Ext^1(h, x) for h : c2 -> c (pullback along presentation lifts,
/// contravariant): Ext^1(c, x) -> Ext^1(c2, x).
template <class F>
Mat<F> ext1_pull(const ExtSpace<F>& at_c, const ExtSpace<F>& at_c2, const Morphism<F>& h) {
  // lift h through the covers, restrict to the syzygies
  auto phi0 = factor_through_epi(at_c.pres.eps, compose(h, at_c2.pres.eps));
  if (!phi0) throw std::logic_error("ext1_pull: cover lift failed");
  // phi0 maps P0(c2) -> P0(c); it restricts to Omega(c2) -> Omega(c)
  auto rest = compose(*phi0, at_c2.omega_incl);
  std::vector<Mat<F>> blocks;
  for (std::size_t v = 0; v < rest.blocks.size(); ++v) {
    auto sol = solve(at_c.omega_incl.blocks[v], rest.blocks[v]);
    if (!sol) throw std::logic_error("ext1_pull: syzygy restriction failed");
    blocks.push_back(std::move(*sol));
  }
  auto tilde = make_morphism(at_c2.omega, at_c.omega, std::move(blocks));
  const F f = h.src.A->field;
  Mat<F> m(f, at_c2.hom.size(), at_c.hom.size());
  for (std::size_t j = 0; j < at_c.hom.size(); ++j) {
    auto cexp = expand_in_hom_basis(at_c2.hom, compose(at_c.hom[j], tilde));
    for (std::size_t i = 0; i < at_c2.hom.size(); ++i) m.at(i, j) = cexp.at(i, 0);
  }
  return at_c2.quot * m * at_c.sect;
}

}  // namespace art
