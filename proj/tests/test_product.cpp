#include <doctest.h>

#include "opca/fixtures.hpp"
#include "opca/product.hpp"

using namespace opca;

namespace {

OpcaMorphism map_to(const OpcaRef& a, const OpcaRef& b, std::vector<Elem> m) {
  auto f = make_morphism(a, b, std::move(m));
  REQUIRE(f.has_value());
  return *f;
}

}  // namespace

TEST_CASE("ONE x ONE is equivalent to ONE") {
  auto one = fixture_one();
  ProductOpca p = product(one, one);
  CHECK(p.carrier->size() == 1);
  CHECK(opcas_equivalent(p.carrier, one));
}

TEST_CASE("C2 x C2 is the grid with componentwise meet") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, c2);
  REQUIRE(p.carrier->size() == 4);
  // Componentwise application oracle.
  for (Elem x = 0; x < 4; ++x)
    for (Elem y = 0; y < 4; ++y) {
      auto [x0, x1] = p.unpair(x);
      auto [y0, y1] = p.unpair(y);
      auto v = p.carrier->app(x, y);
      REQUIRE(v.has_value());
      CHECK(*v == p.pair(*c2->app(x0, y0), *c2->app(x1, y1)));
    }
  CHECK(p.carrier->k() == p.pair(c2->k(), c2->k()));
  CHECK(p.carrier->s() == p.pair(c2->s(), c2->s()));
}

TEST_CASE("C2 x ONE projects equivalently onto C2") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, fixture_one());
  CHECK(opcas_equivalent(p.carrier, c2));
  // pi0 and the tuple <id, !> witness the equivalence directly.
  OpcaMorphism back = tuple_morphism(
      p, identity_morphism(c2), map_to(c2, fixture_one(), {0, 0}));
  OpcaMorphism round = compose(back, p.pi0);
  CHECK(morphisms_isomorphic(round, identity_morphism(c2)));
}

TEST_CASE("tuples commute with the projections on the nose") {
  auto c2 = fixture_c2();
  auto v3 = fixture_v3();
  ProductOpca p = product(c2, v3);
  for (const auto& b : {fixture_one(), c2, v3})
    for (const auto& f0 : enumerate_morphisms(b, c2))
      for (const auto& f1 : enumerate_morphisms(b, v3)) {
        OpcaMorphism t = tuple_morphism(p, f0, f1);
        CHECK(compose(t, p.pi0).map == f0.map);
        CHECK(compose(t, p.pi1).map == f1.map);
      }
}

TEST_CASE("diagonal tuple on C2") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, c2);
  OpcaMorphism diag =
      tuple_morphism(p, identity_morphism(c2), identity_morphism(c2));
  CHECK(compose(diag, p.pi0).map == identity_morphism(c2).map);
  CHECK(compose(diag, p.pi1).map == identity_morphism(c2).map);
}

TEST_CASE("tuple of bang morphisms into ONE x ONE") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  ProductOpca p = product(one, one);
  OpcaMorphism bang = map_to(c2, one, {0, 0});
  OpcaMorphism t = tuple_morphism(p, bang, bang);
  for (Elem x = 0; x < c2->size(); ++x) CHECK(t.map[x] == 0);
}

TEST_CASE("cd tuple witness evaluates and verifies") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, c2);
  OpcaMorphism id = identity_morphism(c2);
  auto n = check_cd(id);
  REQUIRE(n.has_value());
  Elem witness = cd_tuple_witness(p, id, id, *n, *n);
  OpcaMorphism diag = tuple_morphism(p, id, id);
  CHECK(cd_witness_valid(diag, witness));
  // An independent search also finds some witness.
  CHECK(check_cd(diag).has_value());

  auto one = fixture_one();
  ProductOpca po = product(one, one);
  OpcaMorphism bang = map_to(c2, one, {0, 0});
  Elem w2 = cd_tuple_witness(po, bang, bang, 0, 0);
  CHECK(w2 == 0);
}

TEST_CASE("cd tuple witness across fixture pairs") {
  auto fixtures = fixture_opcas();
  for (const auto& a0 : fixtures)
    for (const auto& a1 : fixtures) {
      ProductOpca p = product(a0, a1);
      for (const auto& b : {fixture_c2(), fixture_v3()}) {
        for (const auto& f0 : enumerate_morphisms(b, a0)) {
          auto n0 = check_cd(f0);
          if (!n0) continue;
          for (const auto& f1 : enumerate_morphisms(b, a1)) {
            auto n1 = check_cd(f1);
            if (!n1) continue;
            CHECK_NOTHROW(cd_tuple_witness(p, f0, f1, *n0, *n1));
          }
        }
      }
    }
}

TEST_CASE("cotuple [id,id] multiplies out through the pairing combinator") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, c2);
  CotupleResult r =
      cotuple_morphism(p, identity_morphism(c2), identity_morphism(c2));
  for (Elem x = 0; x < p.carrier->size(); ++x) {
    auto [x0, x1] = p.unpair(x);
    auto expect = c2->app_chain({c2->combinators().p, x0, x1});
    REQUIRE(expect.has_value());
    CHECK(r.morphism.map[x] == *expect);
  }
}

TEST_CASE("cotuple into ONE is constant") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  ProductOpca p = product(c2, c2);
  OpcaMorphism bang = map_to(c2, one, {0, 0});
  CotupleResult r = cotuple_morphism(p, bang, bang);
  for (Elem x = 0; x < p.carrier->size(); ++x) CHECK(r.morphism.map[x] == 0);
}

TEST_CASE("couniqueness realizer verifies on comparable cotuple pairs") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, c2);
  OpcaMorphism id = identity_morphism(c2);
  CotupleResult g = cotuple_morphism(p, id, id);
  OpcaMorphism gk0 = compose(p.kappa0, g.morphism);
  OpcaMorphism gk1 = compose(p.kappa1, g.morphism);
  auto s0 = find_inequality_realizer(gk0, gk0);
  auto s1 = find_inequality_realizer(gk1, gk1);
  REQUIRE(s0.has_value());
  REQUIRE(s1.has_value());
  Elem s = couniqueness_realizer(p, g.morphism, g.morphism, s0->realizer,
                                 s1->realizer);
  CHECK(ineq_realizer_valid(g.morphism, g.morphism, s));
}

TEST_CASE("couniqueness rejects invalid input realizers") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, c2);
  CotupleResult g =
      cotuple_morphism(p, identity_morphism(c2), identity_morphism(c2));
  CotupleResult g2 = cotuple_morphism(p, constant_morphism(c2, c2, 1),
                                      constant_morphism(c2, c2, 1));
  OpcaMorphism lhs = compose(p.kappa0, g2.morphism);
  OpcaMorphism rhs = compose(p.kappa0, g.morphism);
  if (!ineq_realizer_valid(lhs, rhs, 1))
    CHECK_THROWS_AS(
        couniqueness_realizer(p, g2.morphism, g.morphism, 1, 1), Error);
}

TEST_CASE("biproduct certificates on fixture pairs") {
  CHECK_NOTHROW(check_biproduct(fixture_c2(), fixture_c2()));
  CHECK_NOTHROW(check_biproduct(fixture_one(), fixture_one()));
  BiproductCertificate c = check_biproduct(fixture_c2(), fixture_v3());
  CHECK(c.zero01.is_zero);
  CHECK(c.zero10.is_zero);
}

TEST_CASE("disjointness witnesses extract zero bounds") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  ProductOpca p = product(c2, c2);

  // B = ONE: both legs are trivially zero.
  OpcaMorphism f0 = map_to(one, c2, {0});
  OpcaMorphism f1 = map_to(one, c2, {0});
  auto s = find_inequality_realizer(compose(f0, p.kappa0),
                                    compose(f1, p.kappa1));
  REQUIRE(s.has_value());
  DisjointnessWitness w = disjointness_certificate(p, f0, f1, s->realizer);
  CHECK(c2->le(w.zero_witness1, f1.map[0]));

  // B = C2 with constant-1 legs.
  OpcaMorphism g0 = constant_morphism(c2, c2, 1);
  OpcaMorphism g1 = constant_morphism(c2, c2, 1);
  auto s2 = find_inequality_realizer(compose(g0, p.kappa0),
                                     compose(g1, p.kappa1));
  REQUIRE(s2.has_value());
  DisjointnessWitness w2 = disjointness_certificate(p, g0, g1, s2->realizer);
  for (Elem b = 0; b < c2->size(); ++b) {
    CHECK(c2->le(w2.zero_witness0, g0.map[b]));
    CHECK(c2->le(w2.zero_witness1, g1.map[b]));
  }
  if (!ineq_realizer_valid(compose(g0, p.kappa0), compose(g1, p.kappa1),
                           p.pair(1, 1)))
    CHECK_THROWS_AS(disjointness_certificate(p, g0, g1, p.pair(1, 1)), Error);
}

TEST_CASE("dual disjointness extracts bounds from s f0(i)") {
  auto c2 = fixture_c2();
  ProductOpca p = product(c2, c2);
  OpcaMorphism f0 = constant_morphism(c2, c2, 1);
  OpcaMorphism f1 = constant_morphism(c2, c2, 1);
  auto s = find_inequality_realizer(compose(p.pi0, f0), compose(p.pi1, f1));
  REQUIRE(s.has_value());
  DisjointnessWitness w = dual_disjointness_certificate(p, f0, f1, s->realizer);
  for (Elem a1 = 0; a1 < c2->size(); ++a1)
    CHECK(c2->le(w.zero_witness1, f1.map[a1]));
}

TEST_CASE("coproducts of adjoint pairs") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  OpcaMorphism id = identity_morphism(c2);
  auto idadj = check_adjunction(id, id);
  REQUIRE(idadj.has_value());
  AdjCoproductResult r = adj_coproduct(*idadj, *idadj);
  // h_*(h*(c)) = p f_*(f*(c)) g_*(g*(c)) recomputed independently.
  for (Elem c = 0; c < c2->size(); ++c) {
    auto direct = c2->app_chain({c2->combinators().p, c, c});
    REQUIRE(direct.has_value());
    CHECK(r.pair.right.map[r.pair.left.map[c]] == *direct);
  }

  OpcaMorphism bang = map_to(c2, one, {0, 0});
  OpcaMorphism point = map_to(one, c2, {0});
  auto ba = check_adjunction(bang, point);
  REQUIRE(ba.has_value());
  CHECK_NOTHROW(adj_coproduct(*ba, *ba));
}

TEST_CASE("diagonal cd probe on the fixtures") {
  // All fixtures are pseudotrivial, so the counterexample hypothesis fails
  // and the diagonal stays computationally dense.
  for (const auto& a : fixture_opcas())
    for (int arity : {2, 3})
      CHECK(diagonal_cd_probe(a, arity).has_value());
}
