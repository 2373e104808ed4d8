#include <catch2/catch_amalgamated.hpp>

#include "art/covers.hpp"
#include "tests/helpers.hpp"

using namespace art;
using namespace art::testhelp;

namespace {

template <class F>
Module<F> simple_dualnum(const AlgebraRef<F>& A) {
  // S over k[x]/(x^2): dim 1, x acts by 0
  Mat<F> z(A->field, 1, 1);
  return make_module(A, {1}, {z});
}

}  // namespace

TEST_CASE("module validation catches bad actions") {
  Rationals Q;
  auto A = dual_numbers(Q);
  Mat<Rationals> one(Q, 1, 1);
  one.at(0, 0) = Q.one();
  // x acting as 1 violates x^2 = 0
  REQUIRE_THROWS_WITH(make_module(A, {1}, {one}),
                      Catch::Matchers::ContainsSubstring("relation"));
  // wrong shape
  REQUIRE_THROWS_WITH(make_module(A, {1}, {Mat<Rationals>(Q, 2, 1)}),
                      Catch::Matchers::ContainsSubstring("shape"));
}

TEST_CASE("hom spaces over A2") {
  Rationals Q;
  auto A = a2(Q);
  auto S1 = simple_at(A, 0), S2 = simple_at(A, 1);
  auto P1 = projective_at(A, 0), P2 = projective_at(A, 1);
  REQUIRE(hom_basis(S1, S2).empty());
  REQUIRE(hom_basis(P1, P1).size() == 1);
  REQUIRE(hom_basis(P1, S1).size() == 1);
  REQUIRE(hom_basis(S1, P1).empty());
  REQUIRE(hom_basis(P2, P1).size() == 1);
  REQUIRE(hom_basis(P1, P2).empty());

  // free module adjunction: dim Hom(Lambda, M) = dim_k M
  auto L = regular_module(A);
  for (const auto& M : {S1, S2, P1, P2, L})
    REQUIRE(hom_basis(L, M).size() == M.total_dim());
}

TEST_CASE("kernel, cokernel, image") {
  Rationals Q;
  auto A = a2(Q);
  auto P1 = projective_at(A, 0);
  auto S1 = simple_at(A, 0);

  auto id = identity_morphism(P1);
  REQUIRE(kernel(id).mod.is_zero());

  auto z = zero_morphism(S1, P1);
  auto ck = cokernel(z);
  REQUIRE(ck.mod.dims == P1.dims);

  // the cover P(1) ->> S1 has image S1 and kernel of dims (0,1)
  auto eps = hom_basis(P1, S1).at(0);
  auto im = image(eps);
  REQUIRE(im.mod.dims == S1.dims);
  auto K = kernel(eps);
  REQUIRE(K.mod.dims == std::vector<std::size_t>{0, 1});

  // rank-nullity per vertex for every morphism in a hom basis
  for (const auto& f : hom_basis(P1, P1)) {
    auto k = kernel(f);
    auto i = image(f);
    for (std::size_t v = 0; v < 2; ++v)
      REQUIRE(k.mod.dims[v] + i.mod.dims[v] == P1.dims[v]);
  }
}

TEST_CASE("projectives, injectives, simples over A2 and dual numbers") {
  Rationals Q;
  auto A = a2(Q);
  REQUIRE(projective_at(A, 0).dims == std::vector<std::size_t>{1, 1});
  REQUIRE(projective_at(A, 1).dims == std::vector<std::size_t>{0, 1});
  auto Aop = opposite(A);
  REQUIRE(injective_at(A, 0, Aop).dims == std::vector<std::size_t>{1, 0});
  REQUIRE(injective_at(A, 1, Aop).dims == std::vector<std::size_t>{1, 1});

  auto D = dual_numbers(Q);
  auto P = projective_at(D, 0);
  REQUIRE(P.dims == std::vector<std::size_t>{2});
  auto I = injective_at(D, 0);
  REQUIRE(I.dims == std::vector<std::size_t>{2});
  // self-injective: P and I are isomorphic
  REQUIRE(find_iso(P, I).has_value());
}

TEST_CASE("dim Hom(P(v), M) = dim M_v and dim Hom(M, I(v)) = dim M_v") {
  Rationals Q;
  for (auto A : {a2(Q), kronecker(Q)}) {
    auto Aop = opposite(A);
    std::vector<Module<Rationals>> fixtures = {simple_at(A, 0), simple_at(A, 1),
                                               projective_at(A, 0), regular_module(A),
                                               injective_at(A, 1, Aop)};
    for (VertexId v = 0; v < 2; ++v) {
      auto P = projective_at(A, v);
      auto I = injective_at(A, v, Aop);
      for (const auto& M : fixtures) {
        REQUIRE(hom_basis(P, M).size() == M.dims[v]);
        REQUIRE(hom_basis(M, I).size() == M.dims[v]);
      }
    }
  }
}

TEMPLATE_TEST_CASE("projective covers", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("S over k[x]/(x^2): cover is Lambda with 1-dim kernel") {
    auto A = dual_numbers(f);
    auto S = simple_dualnum(A);
    auto eps = projective_cover(S);
    REQUIRE(eps.src.total_dim() == 2);
    REQUIRE(kernel(eps).mod.total_dim() == 1);
  }
  SECTION("cover of a projective is an isomorphism") {
    auto A = a2(f);
    auto P = projective_at(A, 0);
    auto eps = projective_cover(P);
    REQUIRE(is_iso(eps));
  }
  SECTION("S1 over A2: cover P(1) with kernel S2") {
    auto A = a2(f);
    auto eps = projective_cover(simple_at(A, 0));
    REQUIRE(eps.src.dims == std::vector<std::size_t>{1, 1});
    REQUIRE(kernel(eps).mod.dims == std::vector<std::size_t>{0, 1});
  }
  SECTION("cover minimality: endomorphisms fixing eps are invertible") {
    auto A = a2(f);
    auto M = direct_sum<TestType>({simple_at(A, 0), projective_at(A, 0)}).mod;
    auto eps = projective_cover(M);
    auto P = eps.src;
    // homogeneous solutions of eps . h = 0
    auto hb = hom_basis(P, P);
    std::vector<Morphism<TestType>> null;
    for (const auto& h : hb)
      if (compose(eps, h).is_zero()) null.push_back(h);
    auto id = identity_morphism(P);
    for (const auto& h : null) REQUIRE(is_iso(mor_add(id, h)));
    std::mt19937_64 rng(7);
    for (int t = 0; t < 5 && !null.empty(); ++t)
      REQUIRE(is_iso(mor_add(id, random_combination(null, rng))));
  }
}

TEMPLATE_TEST_CASE("injective envelopes", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("S over k[x]/(x^2) embeds in Lambda") {
    auto A = dual_numbers(f);
    auto S = simple_dualnum(A);
    auto env = injective_envelope(S);
    REQUIRE(env.dst.total_dim() == 2);
    REQUIRE(kernel(env).mod.is_zero());
    // socle is preserved
    REQUIRE(socle_submodule(env.dst).mod.total_dim() == socle_submodule(S).mod.total_dim());
  }
  SECTION("envelope of an injective is an isomorphism") {
    auto A = a2(f);
    auto I = injective_at(A, 1);
    REQUIRE(is_iso(injective_envelope(I)));
  }
  SECTION("S2 over A2 embeds in I(2) of dims (1,1)") {
    auto A = a2(f);
    auto env = injective_envelope(simple_at(A, 1));
    REQUIRE(env.dst.dims == std::vector<std::size_t>{1, 1});
  }
}

TEST_CASE("minimal presentations") {
  Rationals Q;
  SECTION("S over k[x]/(x^2): Lambda -> Lambda -> S") {
    auto A = dual_numbers(Q);
    auto pres = minimal_presentation(simple_dualnum(A));
    REQUIRE(pres.p0.total_dim() == 2);
    REQUIRE(pres.p1.total_dim() == 2);
    REQUIRE(image(pres.d).mod.total_dim() == 1);
    REQUIRE(image(pres.d).mod == kernel(pres.eps).mod);
  }
  SECTION("projective: p1 = 0") {
    auto A = a2(Q);
    auto pres = minimal_presentation(projective_at(A, 0));
    REQUIRE(pres.p1.is_zero());
  }
  SECTION("S1 over A2: P(2) -> P(1) -> S1") {
    auto A = a2(Q);
    auto pres = minimal_presentation(simple_at(A, 0));
    REQUIRE(pres.p0.dims == std::vector<std::size_t>{1, 1});
    REQUIRE(pres.p1.dims == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("duality") {
  Rationals Q;
  auto A = a2(Q);
  auto Aop = opposite(A);
  SECTION("dual of a simple is the simple on the other side") {
    auto D = dual(simple_at(A, 0), Aop);
    REQUIRE(D.dims == std::vector<std::size_t>{1, 0});
    REQUIRE(*D.A == *Aop);
  }
  SECTION("D(P(1)) is the injective at vertex 1 over the opposite algebra") {
    auto D = dual(projective_at(A, 0), Aop);
    auto I = injective_at(Aop, 0, A);
    REQUIRE(D.dims == I.dims);
    REQUIRE(find_iso(D, I).has_value());
  }
  SECTION("double dual is the identity on the nose") {
    for (auto M : {projective_at(A, 0), simple_at(A, 1), regular_module(A)}) {
      auto DD = dual(dual(M, Aop), A);
      REQUIRE(M.dims == DD.dims);
      for (std::size_t g = 0; g < M.act.size(); ++g) REQUIRE(M.act[g] == DD.act[g]);
    }
  }
}

TEST_CASE("tensor products") {
  Rationals Q;
  SECTION("unit law: Lambda (x) N has dim N") {
    for (auto A : {a2(Q), dual_numbers(Q), kronecker(Q)}) {
      auto Aop = opposite(A);
      auto Lr = regular_module(Aop);  // Lambda as a right module
      for (VertexId v = 0; v < A->quiver.vertex_count; ++v) {
        auto N = projective_at(A, v);
        REQUIRE(tensor_space(Lr, N).dim == N.total_dim());
      }
    }
  }
  SECTION("S (x) S over k[x]/(x^2) has dim 1") {
    auto A = dual_numbers(Q);
    auto S = simple_dualnum(A);
    auto Sop = dual(S);  // 1-dim right module
    REQUIRE(tensor_space(Sop, S).dim == 1);
  }
  SECTION("projective tensor identity: e_v Lambda (x) M = e_v M for A2") {
    auto A = a2(Q);
    auto Aop = opposite(A);
    for (auto M : {projective_at(A, 0), simple_at(A, 1), regular_module(A)})
      for (VertexId v = 0; v < 2; ++v) {
        // e_v Lambda = D(I(v)) as a right module
        auto evL = projective_at(Aop, v);
        REQUIRE(tensor_space(evL, M).dim == M.dims[v]);
        auto DI = dual(injective_at(A, v, Aop), Aop);
        REQUIRE(tensor_space(DI, M).dim == M.dims[v]);
      }
  }
}

TEST_CASE("top, radical and socle of modules") {
  Rationals Q;
  auto A = dual_numbers(Q);
  auto L = regular_module(A);
  REQUIRE(radical_submodule(L).mod.total_dim() == 1);
  REQUIRE(top_quotient(L).mod.total_dim() == 1);
  REQUIRE(socle_submodule(L).mod.total_dim() == 1);
  auto T = truncated_poly3(Q);
  auto L3 = regular_module(T);
  REQUIRE(radical_submodule(L3).mod.total_dim() == 2);
  REQUIRE(top_quotient(L3).mod.total_dim() == 1);
  REQUIRE(socle_submodule(L3).mod.total_dim() == 1);
}

TEMPLATE_TEST_CASE("fitting decomposition", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("S + S over k[x]/(x^2) splits into two simples") {
    auto A = dual_numbers(f);
    auto S = simple_dualnum(A);
    auto M = direct_sum<TestType>({S, S}).mod;
    auto parts = fitting_decompose(M);
    REQUIRE(parts.size() == 2);
    for (const auto& p : parts) {
      REQUIRE(p.mod.total_dim() == 1);
      REQUIRE(is_iso(compose(p.proj, p.incl)));  // split pair
    }
  }
  SECTION("indecomposable projective stays whole") {
    auto A = a2(f);
    auto parts = fitting_decompose(projective_at(A, 0));
    REQUIRE(parts.size() == 1);
  }
  SECTION("zero module decomposes into nothing") {
    auto A = a2(f);
    REQUIRE(fitting_decompose(zero_module(A)).empty());
  }
  SECTION("regular module of A2 splits into P(1) and P(2)") {
    auto A = a2(f);
    auto parts = fitting_decompose(regular_module(A));
    REQUIRE(parts.size() == 2);
    std::size_t total = 0;
    for (const auto& p : parts) total += p.mod.total_dim();
    REQUIRE(total == 3);
  }
}

TEST_CASE("endomorphism algebras") {
  Rationals Q;
  SECTION("End(S1) over A2 is 1-dimensional") {
    auto A = a2(Q);
    REQUIRE(endomorphism_algebra(simple_at(A, 0)).alg->dim() == 1);
  }
  SECTION("End(Lambda) of k[x]/(x^2) is 2-dimensional") {
    auto A = dual_numbers(Q);
    auto E = endomorphism_algebra(regular_module(A));
    REQUIRE(E.alg->dim() == 2);
    // composition of basis morphisms matches the structure constants
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        auto c = expand_in_hom_basis(E.basis, compose(E.basis[i], E.basis[j]));
        for (std::size_t k = 0; k < 2; ++k) REQUIRE(Q.eq(c.at(k, 0), E.alg->mult[i][j][k]));
      }
  }
  SECTION("End(S + S) over k[x]/(x^2) is the 2x2 matrix algebra") {
    auto A = dual_numbers(Q);
    auto S = simple_dualnum(A);
    auto E = endomorphism_algebra(direct_sum<Rationals>({S, S}).mod);
    REQUIRE(E.alg->dim() == 4);
    REQUIRE(radical(E.alg).dim() == 0);
  }
}
