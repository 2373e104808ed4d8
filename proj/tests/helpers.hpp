#pragma once

// Shared helpers for the unit suites: fixture algebra shortcuts and a few
// hand-built structure algebras.

#include "art/fixtures.hpp"

namespace art::testhelp {

template <class F>
F field_of() {
  if constexpr (std::is_same_v<F, PrimeField>)
    return PrimeField(5);
  else
    return F{};
}

using art::fixtures::a2;
using art::fixtures::dual_numbers;
using art::fixtures::kronecker;
using art::fixtures::truncated_poly3;

/// k x k as a structure algebra: basis {(1,0), (0,1)}.
template <class F>
AlgebraRef<F> product_field_algebra(F f) {
  auto z = f.zero(), o = f.one();
  std::vector<std::vector<std::vector<typename F::Elt>>> mult = {
      {{o, z}, {z, z}},
      {{z, z}, {z, o}}};
  return make_structure_algebra(f, mult, {o, o});
}

/// k[x]/(x^2) as a structure algebra: basis {1, x}.
template <class F>
AlgebraRef<F> dual_numbers_structure(F f) {
  auto z = f.zero(), o = f.one();
  std::vector<std::vector<std::vector<typename F::Elt>>> mult = {
      {{o, z}, {z, o}},
      {{z, o}, {z, z}}};
  return make_structure_algebra(f, mult, {o, z});
}

/// Upper triangular 2x2 matrices: basis {E11, E22, E12}, product = matrix product.
template <class F>
AlgebraRef<F> upper_triangular2(F f) {
  auto z = f.zero(), o = f.one();
  std::vector<std::vector<std::vector<typename F::Elt>>> mult = {
      {{o, z, z}, {z, z, z}, {z, z, o}},   // E11 * {E11, E22, E12}
      {{z, z, z}, {z, o, z}, {z, z, z}},   // E22 * ...
      {{z, z, z}, {z, z, o}, {z, z, z}}};  // E12 * ...
  return make_structure_algebra(f, mult, {o, o, z});
}

}  // namespace art::testhelp
