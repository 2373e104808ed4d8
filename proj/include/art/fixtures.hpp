#pragma once

#include "art/module.hpp"

namespace art::fixtures {

/// k[x]/(x^2): one vertex, one loop a with a*a = 0.
template <class F>
AlgebraRef<F> dual_numbers(F f) {
  Quiver q{1, {{"a", 0, 0}}};
  Relation<F> r{{f.one(), Path{0, 0, {0, 0}}}};
  return build_quiver_algebra<F>(q, {r}, f);
}

/// k[x]/(x^3): one vertex, one loop a with a*a*a = 0.
template <class F>
AlgebraRef<F> truncated_poly3(F f) {
  Quiver q{1, {{"a", 0, 0}}};
  Relation<F> r{{f.one(), Path{0, 0, {0, 0, 0}}}};
  return build_quiver_algebra<F>(q, {r}, f);
}

/// A2: two vertices, one arrow 1 -> 2, no relations.
template <class F>
AlgebraRef<F> a2(F f) {
  Quiver q{2, {{"a", 0, 1}}};
  return build_quiver_algebra<F>(q, {}, f);
}

/// Kronecker quiver: two vertices, arrows a, b : 1 -> 2, no relations.
template <class F>
AlgebraRef<F> kronecker(F f) {
  Quiver q{2, {{"a", 0, 1}, {"b", 0, 1}}};
  return build_quiver_algebra<F>(q, {}, f);
}

template <class F>
Mat<F> mat_from_ints(F f, std::size_t r, std::size_t c, std::vector<std::vector<long long>> rows) {
  Mat<F> m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(rows[i][j]);
  return m;
}

template <class F>
using NamedModules = std::vector<std::pair<std::string, Module<F>>>;

/// k[x]/(x^n) indecomposables: k[x]/(x^m) for m = 1..n.
template <class F>
NamedModules<F> nilpotent_loop_indecomposables(const AlgebraRef<F>& A) {
  const F f = A->field;
  const std::size_t n = A->nilpotency;
  NamedModules<F> out;
  for (std::size_t m = 1; m <= n; ++m) {
    Mat<F> J(f, m, m);
    for (std::size_t i = 0; i + 1 < m; ++i) J.at(i + 1, i) = f.one();
    out.emplace_back("M" + std::to_string(m), make_module(A, {m}, {J}));
  }
  return out;
}

template <class F>
NamedModules<F> a2_indecomposables(const AlgebraRef<F>& A) {
  return {{"S1", simple_at(A, 0)}, {"S2", simple_at(A, 1)}, {"P1", projective_at(A, 0)}};
}

/// Kronecker indecomposables of total dimension at most 5: the first three
/// preprojectives and preinjectives, the regular simples at 0, 1, infinity,
/// the depth-2 regular at 0, and (when x^2 + 2 is irreducible, e.g. over
/// F_5) the regular simple at that quadratic point.
template <class F>
NamedModules<F> kronecker_indecomposables(const AlgebraRef<F>& A) {
  const F f = A->field;
  NamedModules<F> out;
  out.emplace_back("P2", projective_at(A, 1));   // (0,1)
  out.emplace_back("P1", projective_at(A, 0));   // (1,2)
  out.emplace_back("Q3", make_module(A, {2, 3},
                                     {mat_from_ints(f, 3, 2, {{1, 0}, {0, 1}, {0, 0}}),
                                      mat_from_ints(f, 3, 2, {{0, 0}, {1, 0}, {0, 1}})}));
  out.emplace_back("I1", simple_at(A, 0));       // (1,0)
  out.emplace_back("I2", injective_at(A, 1));    // (2,1)
  out.emplace_back("J3", make_module(A, {3, 2},
                                     {mat_from_ints(f, 2, 3, {{1, 0, 0}, {0, 1, 0}}),
                                      mat_from_ints(f, 2, 3, {{0, 1, 0}, {0, 0, 1}})}));
  out.emplace_back("R0", make_module(A, {1, 1}, {mat_from_ints(f, 1, 1, {{1}}),
                                                 mat_from_ints(f, 1, 1, {{0}})}));
  out.emplace_back("R1", make_module(A, {1, 1}, {mat_from_ints(f, 1, 1, {{1}}),
                                                 mat_from_ints(f, 1, 1, {{1}})}));
  out.emplace_back("Rinf", make_module(A, {1, 1}, {mat_from_ints(f, 1, 1, {{0}}),
                                                   mat_from_ints(f, 1, 1, {{1}})}));
  out.emplace_back("R0_2", make_module(A, {2, 2},
                                       {mat_from_ints(f, 2, 2, {{1, 0}, {0, 1}}),
                                        mat_from_ints(f, 2, 2, {{0, 0}, {1, 0}})}));
  if constexpr (std::is_same_v<F, PrimeField>) {
    // the companion matrix of x^2 + 2 gives a point of degree two when the
    // polynomial has no root mod p
    bool has_root = false;
    for (std::uint64_t t = 0; t < f.p && t < 1u << 20; ++t)
      if (f.is_zero(f.add(f.mul(t, t), f.from_int(2)))) has_root = true;
    if (!has_root)
      out.emplace_back("Rquad",
                       make_module(A, {2, 2},
                                   {mat_from_ints(f, 2, 2, {{1, 0}, {0, 1}}),
                                    mat_from_ints(f, 2, 2, {{0, -2}, {1, 0}})}));
  }
  return out;
}

/// One named fixture: an algebra with its list of indecomposables.
template <class F>
struct FixtureAlgebra {
  std::string name;
  AlgebraRef<F> A;
  NamedModules<F> indecomposables;
};

template <class F>
std::vector<FixtureAlgebra<F>> standard_fixtures(F f) {
  std::vector<FixtureAlgebra<F>> out;
  {
    auto A = dual_numbers(f);
    auto mods = nilpotent_loop_indecomposables(A);
    out.push_back({"k[x]/(x^2)", A, {{"S", mods[0].second}, {"Lambda", mods[1].second}}});
  }
  {
    auto A = a2(f);
    out.push_back({"A2", A, a2_indecomposables(A)});
  }
  {
    auto A = kronecker(f);
    out.push_back({"Kronecker", A, kronecker_indecomposables(A)});
  }
  {
    auto A = truncated_poly3(f);
    out.push_back({"k[x]/(x^3)", A, nilpotent_loop_indecomposables(A)});
  }
  return out;
}

}  // namespace art::fixtures
