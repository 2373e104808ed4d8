#include <catch2/catch_amalgamated.hpp>

#include "art/duality.hpp"
#include "tests/helpers.hpp"

using namespace art;
using namespace art::testhelp;

namespace {

template <class F>
Module<F> simple_dualnum(const AlgebraRef<F>& A) {
  Mat<F> z(A->field, 1, 1);
  return make_module(A, {1}, {z});
}

template <class F>
ShortExactSequence<F> split_ses(const Module<F>& X, const Module<F>& Z) {
  auto sum = direct_sum<F>({X, Z});
  return make_ses(sum.inject[0], sum.project[1]);
}

}  // namespace

TEMPLATE_TEST_CASE("defect formula on the dual numbers", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  auto D = dual_numbers(f);
  auto S = simple_dualnum(D);
  auto ctx = translate_context_dgamma(S);

  SECTION("split sequence: both sides vanish") {
    auto rep = verify_defect_formula(ctx, split_ses(S, S), "split");
    REQUIRE(rep.lhs_dim == 0);
    REQUIRE(rep.rhs_dim == 0);
    REQUIRE(rep.pass());
  }
  SECTION("the AR sequence: both sides are 1-dimensional") {
    auto e = ext1(S, S);
    Mat<TestType> cls(f, 1, 1);
    cls.at(0, 0) = f.one();
    auto rep = verify_defect_formula(ctx, realize_ext_class(e, cls), "ar");
    REQUIRE(rep.lhs_dim == 1);
    REQUIRE(rep.rhs_dim == 1);
    REQUIRE(rep.pass());
  }
}

TEMPLATE_TEST_CASE("defect formula on A2", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  auto A = a2(f);
  auto S1 = simple_at(A, 0);
  auto ctx = translate_context_dgamma(S1);
  auto e = ext1(S1, simple_at(A, 1));
  Mat<TestType> cls(f, 1, 1);
  cls.at(0, 0) = f.one();
  auto seq = realize_ext_class(e, cls);

  auto rep = verify_defect_formula(ctx, seq, "a2 ar");
  REQUIRE(rep.lhs_dim == 1);
  REQUIRE(rep.rhs_dim == 1);
  REQUIRE(rep.pass());

  SECTION("projective c trivializes both sides") {
    auto ctxp = translate_context_dgamma(projective_at(A, 0));
    auto repp = verify_defect_formula(ctxp, seq, "projective c");
    REQUIRE(repp.lhs_dim == 0);
    REQUIRE(repp.rhs_dim == 0);
    REQUIRE(repp.pass());
  }
}

TEMPLATE_TEST_CASE("snake chain audit", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("split: both spaces vanish") {
    auto A = a2(f);
    auto S1 = simple_at(A, 0);
    auto ctx = translate_context_dgamma(S1);
    auto rep = snake_chain_audit(ctx, split_ses(simple_at(A, 1), S1));
    REQUIRE(rep.lhs_dim == 0);
    REQUIRE(rep.rhs_dim == 0);
    REQUIRE(rep.pass());
  }
  SECTION("A2 AR sequence, c = S1: both spaces 1-dimensional") {
    auto A = a2(f);
    auto S1 = simple_at(A, 0);
    auto ctx = translate_context_dgamma(S1);
    auto e = ext1(S1, simple_at(A, 1));
    Mat<TestType> cls(f, 1, 1);
    cls.at(0, 0) = f.one();
    auto rep = snake_chain_audit(ctx, realize_ext_class(e, cls));
    REQUIRE(rep.lhs_dim == 1);
    REQUIRE(rep.rhs_dim == 1);
    REQUIRE(rep.pass());
  }
  SECTION("dual numbers AR sequence, c = S: both 1-dimensional") {
    auto D = dual_numbers(f);
    auto S = simple_dualnum(D);
    auto ctx = translate_context_dgamma(S);
    auto e = ext1(S, S);
    Mat<TestType> cls(f, 1, 1);
    cls.at(0, 0) = f.one();
    auto rep = snake_chain_audit(ctx, realize_ext_class(e, cls));
    REQUIRE(rep.lhs_dim == 1);
    REQUIRE(rep.rhs_dim == 1);
    REQUIRE(rep.pass());
  }
}

TEMPLATE_TEST_CASE("AR duality mod injectives", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("dual numbers, c = x = S") {
    auto D = dual_numbers(f);
    auto S = simple_dualnum(D);
    auto ctx = translate_context_dgamma(S);
    auto data = verify_ar_duality_inj(ctx, S, injective_envelope(S), minimal_presentation(S));
    INFO(data.report.name);
    REQUIRE(data.report.lhs_dim == 1);
    REQUIRE(data.report.rhs_dim == 1);
    REQUIRE(data.report.pass());
  }
  SECTION("A2, c = S1, x = S2") {
    auto A = a2(f);
    auto S1 = simple_at(A, 0), S2 = simple_at(A, 1);
    auto ctx = translate_context_dgamma(S1);
    auto data = verify_ar_duality_inj(ctx, S2, injective_envelope(S2), minimal_presentation(S1));
    REQUIRE(data.report.lhs_dim == 1);
    REQUIRE(data.report.rhs_dim == 1);
    REQUIRE(data.report.pass());
  }
  SECTION("projective c gives zero on both sides") {
    auto A = a2(f);
    auto P = projective_at(A, 0);
    auto ctx = translate_context_dgamma(P);
    for (auto x : {simple_at(A, 0), simple_at(A, 1)}) {
      auto data = verify_ar_duality_inj(ctx, x, injective_envelope(x), minimal_presentation(P));
      REQUIRE(data.report.lhs_dim == 0);
      REQUIRE(data.report.rhs_dim == 0);
      REQUIRE(data.report.pass());
    }
  }
}

TEMPLATE_TEST_CASE("AR duality mod projectives", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("dual numbers, c = x = S") {
    auto D = dual_numbers(f);
    auto S = simple_dualnum(D);
    auto ctx = translate_context_dgamma(S);
    auto data = verify_ar_duality_proj(ctx, S, minimal_presentation(S));
    REQUIRE(data.report.lhs_dim == 1);
    REQUIRE(data.report.rhs_dim == 1);
    REQUIRE(data.report.pass());
  }
  SECTION("A2, c = x = S1: Ext^1(S1, tau S1) = Ext^1(S1, S2) = k") {
    auto A = a2(f);
    auto S1 = simple_at(A, 0);
    auto ctx = translate_context_dgamma(S1);
    auto data = verify_ar_duality_proj(ctx, S1, minimal_presentation(S1));
    REQUIRE(data.report.lhs_dim == 1);
    REQUIRE(data.report.rhs_dim == 1);
    REQUIRE(data.report.pass());
  }
  SECTION("projective x: both sides vanish with c = x") {
    auto A = a2(f);
    auto P = projective_at(A, 0);
    auto ctx = translate_context_dgamma(P);
    auto data = verify_ar_duality_proj(ctx, P, minimal_presentation(P));
    REQUIRE(data.report.lhs_dim == 0);
    REQUIRE(data.report.rhs_dim == 0);
    REQUIRE(data.report.pass());
  }
}

TEMPLATE_TEST_CASE("almost split sequences", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("dual numbers: 0 -> S -> Lambda -> S -> 0") {
    auto D = dual_numbers(f);
    auto S = simple_dualnum(D);
    auto r = almost_split_sequence(S);
    REQUIRE(r.seq.iota.src.total_dim() == 1);
    REQUIRE(r.seq.iota.dst.total_dim() == 2);
    REQUIRE(r.seq.pi.dst.total_dim() == 1);
    REQUIRE_FALSE(ses_is_split(r.seq));
    REQUIRE_FALSE(r.division_warning);
    std::vector<Module<TestType>> fixtures = {S, regular_module(D)};
    REQUIRE(right_almost_split_audit(r.seq, fixtures));
  }
  SECTION("A2: 0 -> S2 -> P1 -> S1 -> 0") {
    auto A = a2(f);
    auto r = almost_split_sequence(simple_at(A, 0));
    REQUIRE(r.seq.iota.src.dims == std::vector<std::size_t>{0, 1});
    REQUIRE(r.seq.iota.dst.dims == std::vector<std::size_t>{1, 1});
    REQUIRE_FALSE(ses_is_split(r.seq));
    std::vector<Module<TestType>> fixtures = {simple_at(A, 0), simple_at(A, 1),
                                              projective_at(A, 0)};
    REQUIRE(right_almost_split_audit(r.seq, fixtures));
  }
  SECTION("projective end term is rejected") {
    auto A = a2(f);
    REQUIRE_THROWS_WITH(almost_split_sequence(projective_at(A, 0)),
                        Catch::Matchers::ContainsSubstring("projective"));
  }
  SECTION("decomposable input is rejected") {
    auto D = dual_numbers(f);
    auto S = simple_dualnum(D);
    auto M = direct_sum<TestType>({S, S}).mod;
    REQUIRE_THROWS_WITH(almost_split_sequence(M),
                        Catch::Matchers::ContainsSubstring("decomposable"));
  }
  SECTION("k[x]/(x^3): the sequence ending at the length-2 module has middle S + Lambda") {
    auto T = truncated_poly3(f);
    Mat<TestType> n(f, 2, 2);
    n.at(1, 0) = f.one();
    auto M2 = make_module(T, {2}, {n});
    auto r = almost_split_sequence(M2);
    REQUIRE(r.seq.iota.src.total_dim() == 2);
    REQUIRE(r.seq.iota.dst.total_dim() == 4);
    REQUIRE_FALSE(ses_is_split(r.seq));
    Mat<TestType> z1(f, 1, 1);
    auto S = make_module(T, {1}, {z1});
    std::vector<Module<TestType>> fixtures = {S, M2, regular_module(T)};
    REQUIRE(right_almost_split_audit(r.seq, fixtures));
    // middle = S + Lambda
    auto parts = fitting_decompose(r.seq.iota.dst);
    REQUIRE(parts.size() == 2);
    std::vector<std::size_t> dims = {parts[0].mod.total_dim(), parts[1].mod.total_dim()};
    std::sort(dims.begin(), dims.end());
    REQUIRE(dims == std::vector<std::size_t>{1, 3});
  }
}

TEMPLATE_TEST_CASE("determined epimorphisms", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  SECTION("vanishing stable hom gives the identity") {
    auto D = dual_numbers(f);
    auto S = simple_dualnum(D);
    auto L = regular_module(D);
    auto de = determined_epi(S, L);  // every S -> Lambda factors through a projective
    REQUIRE(de.trivial);
    REQUIRE(is_iso(de.pi));
  }
  SECTION("dual numbers, c = x = S: pi is Lambda ->> S") {
    auto D = dual_numbers(f);
    auto S = simple_dualnum(D);
    auto de = determined_epi(S, S);
    REQUIRE_FALSE(de.trivial);
    REQUIRE(de.pi.src.total_dim() == 2);
    REQUIRE(de.seq.iota.src.total_dim() == 1);
    auto cover = projective_cover(S);
    for (const auto& phi : hom_basis(S, S)) {
      const bool factors = factor_through_epi(de.pi, phi).has_value();
      const bool stably_zero = factors_through_projective(phi, cover).has_value();
      REQUIRE(factors == stably_zero);
    }
  }
  SECTION("A2, c = x = S1: pi is P1 ->> S1, with minimality") {
    auto A = a2(f);
    auto S1 = simple_at(A, 0);
    auto de = determined_epi(S1, S1);
    REQUIRE_FALSE(de.trivial);
    REQUIRE(de.pi.src.dims == std::vector<std::size_t>{1, 1});
    // factorization biconditional on the Hom(c, x) basis
    auto cover = projective_cover(S1);
    for (const auto& phi : hom_basis(S1, S1)) {
      const bool factors = factor_through_epi(de.pi, phi).has_value();
      const bool stably_zero = factors_through_projective(phi, cover).has_value();
      REQUIRE(factors == stably_zero);
    }
    // minimality: endomorphisms of X_C fixing pi are invertible
    auto XC = de.pi.src;
    auto id = identity_morphism(XC);
    for (const auto& h : hom_basis(XC, XC))
      if (compose(de.pi, h).is_zero()) REQUIRE(is_iso(mor_add(id, h)));
  }
}

TEMPLATE_TEST_CASE("right determined morphisms", "", Rationals, PrimeField) {
  TestType f = field_of<TestType>();
  auto A = a2(f);
  auto S1 = simple_at(A, 0), S2 = simple_at(A, 1);
  auto P1 = projective_at(A, 0);
  std::vector<Module<TestType>> fixtures = {S1, S2, P1};
  SECTION("identities are right determined for every c") {
    for (const auto& c : fixtures)
      for (const auto& y : fixtures)
        REQUIRE_FALSE(right_determined_check(identity_morphism(y), c, fixtures).has_value());
  }
  SECTION("the almost split epi is right c-determined") {
    auto r = almost_split_sequence(S1);
    REQUIRE_FALSE(right_determined_check(r.seq.pi, S1, fixtures).has_value());
  }
  SECTION("split epis are right determined for every c") {
    auto sum = direct_sum<TestType>({S2, P1});
    for (const auto& c : fixtures)
      REQUIRE_FALSE(right_determined_check(sum.project[1], c, fixtures).has_value());
  }
}

TEST_CASE("stably nonzero maps induce nonzero transformations of Ext functors") {
  Rationals Q;
  auto D = dual_numbers(Q);
  auto S = simple_dualnum(D);
  auto L = regular_module(D);
  std::vector<Module<Rationals>> fixtures = {S, L};
  // Hom-bar(S, S) -> transformations Ext^1(-, S) -> Ext^1(-, S)
  auto env = injective_envelope(S);
  auto sh = stable_hom_inj(S, S, env);
  REQUIRE(sh.dim() == 1);
  for (std::size_t t = 0; t < sh.dim(); ++t) {
    Mat<Rationals> e(Q, sh.dim(), 1);
    e.at(t, 0) = Q.one();
    auto rep = sh.representative(S, S, e);
    bool nonzero_somewhere = false;
    for (const auto& m : fixtures) {
      auto ext_m = ext1(m, S);
      if (!ext1_push(ext_m, ext_m, rep).is_zero()) nonzero_somewhere = true;
    }
    REQUIRE(nonzero_somewhere);
  }
}
