#pragma once

#include "art/module.hpp"

namespace art {

/// End(M) as a structure algebra whose product is composition
/// (g_i * g_j = g_i after g_j), together with the realizing morphisms.
/// The structure constants are found by expanding composites in the Hom
/// basis, and composition of the realizing morphisms matches them entrywise
/// by construction.
template <class F>
struct EndAlgebra {
  AlgebraRef<F> alg;
  std::vector<Morphism<F>> basis;
  Module<F> of;
};

template <class F>
EndAlgebra<F> endomorphism_algebra(const Module<F>& M) {
  const F f = M.A->field;
  auto hb = hom_basis(M, M);
  const std::size_t d = hb.size();
  if (d == 0) {
    // End of the zero module: the zero ring
    auto Z = std::make_shared<Algebra<F>>();
    Z->kind = Algebra<F>::Kind::Structure;
    Z->field = f;
    return EndAlgebra<F>{Z, {}, M};
  }
  std::vector<std::vector<std::vector<typename F::Elt>>> mult(
      d, std::vector<std::vector<typename F::Elt>>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = expand_in_hom_basis(hb, compose(hb[i], hb[j]));
      std::vector<typename F::Elt> v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = c.at(k, 0);
      mult[i][j] = std::move(v);
    }
  auto uc = expand_in_hom_basis(hb, identity_morphism(M));
  std::vector<typename F::Elt> unit(d);
  for (std::size_t k = 0; k < d; ++k) unit[k] = uc.at(k, 0);
  return EndAlgebra<F>{make_structure_algebra(f, std::move(mult), std::move(unit)), std::move(hb), M};
}

/// A space with a right action of E becomes a left module over E^op; the
/// caller supplies one right-action matrix per basis element of E.
template <class F>
Module<F> right_module_over(const EndAlgebra<F>& E, const AlgebraRef<F>& Eop, std::size_t dim,
                            std::vector<Mat<F>> right_act) {
  Module<F> m;
  m.A = Eop;
  m.dims = {dim};
  m.act = std::move(right_act);
  if (E.alg->dim() > 0) {
    // verify: the map g -> R_g reverses products, i.e. is a left E^op action
    for (std::size_t i = 0; i < E.alg->dim(); ++i)
      for (std::size_t j = 0; j < E.alg->dim(); ++j) {
        Mat<F> expect(m.A->field, dim, dim);
        for (std::size_t k = 0; k < E.alg->dim(); ++k)
          if (!m.A->field.is_zero(E.alg->mult[i][j][k]))
            expect = expect + m.act[k].scaled(E.alg->mult[i][j][k]);
        if (!(m.act[j] * m.act[i] == expect))
          throw std::logic_error("right_module_over: action does not reverse products");
      }
  }
  return m;
}

/// Hom_A(c, x) as a right End(c)-module (precomposition), returned as a left
/// module over E^op together with the Hom basis realizing its coordinates.
template <class F>
std::pair<Module<F>, std::vector<Morphism<F>>> hom_as_right_end_module(
    const EndAlgebra<F>& E, const AlgebraRef<F>& Eop, const Module<F>& x) {
  auto hb = hom_basis(E.of, x);
  const std::size_t n = hb.size();
  const F f = x.A->field;
  std::vector<Mat<F>> racts;
  for (std::size_t i = 0; i < E.alg->dim(); ++i) {
    Mat<F> R(f, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      auto c = expand_in_hom_basis(hb, compose(hb[j], E.basis[i]));
      for (std::size_t k = 0; k < n; ++k) R.at(k, j) = c.at(k, 0);
    }
    racts.push_back(std::move(R));
  }
  return {right_module_over(E, Eop, n, std::move(racts)), std::move(hb)};
}

/// D(E) = Hom_k(E, k) as a right E-module: the dual of the left regular
/// module, i.e. the standard injective cogenerator on the E^op side.
template <class F>
Module<F> dual_of_algebra(const EndAlgebra<F>& E, const AlgebraRef<F>& Eop) {
  if (E.alg->dim() == 0) return zero_module(Eop);
  return dual(regular_module(E.alg), Eop);
}

}  // namespace art
