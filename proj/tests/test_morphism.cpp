#include <doctest.h>

#include "opca/fixtures.hpp"
#include "opca/morphism.hpp"

using namespace opca;

namespace {

OpcaMorphism map_to(const OpcaRef& a, const OpcaRef& b,
                    std::vector<Elem> m) {
  auto f = make_morphism(a, b, std::move(m));
  REQUIRE(f.has_value());
  return *f;
}

}  // namespace

TEST_CASE("trackers on the chain") {
  auto c2 = fixture_c2();
  std::vector<Elem> id = {0, 1};
  // The canonical search returns the first valid tracker, which is 0 here;
  // 1 also tracks the identity (1 ^ a ^ a' = a * a').
  auto t = find_tracker(*c2, *c2, id);
  REQUIRE(t.has_value());
  CHECK(*t == 0);
  CHECK(tracker_valid(*c2, *c2, id, 1));

  auto one = fixture_one();
  CHECK(find_tracker(*c2, *one, {0, 0}) == 0);
  // Constant-to-0: 0 is below everything, so any candidate works.
  auto tc = find_tracker(*c2, *c2, {0, 0});
  REQUIRE(tc.has_value());
  CHECK(tracker_valid(*c2, *c2, {0, 0}, *tc));
}

TEST_CASE("order realizers, including the order-reversing map") {
  auto c2 = fixture_c2();
  auto u = find_order_realizer(*c2, *c2, {0, 1});
  REQUIRE(u.has_value());
  CHECK(order_realizer_valid(*c2, *c2, {0, 1}, 1));
  // 0 -> 1, 1 -> 0 reverses the order; 0 realizes it since 0 <= everything.
  auto rev = find_order_realizer(*c2, *c2, {1, 0});
  REQUIRE(rev.has_value());
  CHECK(*rev == 0);
  CHECK(find_order_realizer(*c2, *fixture_one(), {0, 0}) == 0);
}

TEST_CASE("inequality realizers order the hom-set") {
  auto c2 = fixture_c2();
  OpcaMorphism id = identity_morphism(c2);
  auto refl = find_inequality_realizer(id, id);
  REQUIRE(refl.has_value());

  OpcaMorphism c1 = constant_morphism(c2, c2, 1);
  OpcaMorphism c0 = constant_morphism(c2, c2, 0);
  CHECK(find_inequality_realizer(id, c1).has_value());
  auto down = find_inequality_realizer(c1, c0);
  REQUIRE(down.has_value());
  CHECK(down->realizer == 0);  // 0 * 1 = 0 <= 0

  auto v3 = fixture_v3();
  OpcaMorphism idv = identity_morphism(v3);
  CHECK_THROWS_AS(find_inequality_realizer(id, idv), Error);
}

TEST_CASE("composition synthesizes fresh certificates") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  OpcaMorphism id = identity_morphism(c2);
  OpcaMorphism comp = compose(id, id);
  CHECK(comp.map == id.map);

  OpcaMorphism bang = map_to(c2, one, {0, 0});
  OpcaMorphism point = map_to(one, c2, {0});
  // ! o < is the identity on ONE.
  OpcaMorphism round = compose(point, bang);
  CHECK(morphisms_isomorphic(round, identity_morphism(one)));
  // < o ! lands constantly at the chosen point: a zero morphism.
  OpcaMorphism zero = compose(bang, point);
  CHECK(is_zero_morphism(zero).is_zero);
}

TEST_CASE("zero morphism characterizations agree") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  ZeroVerdict z1 = is_zero_morphism(map_to(c2, one, {0, 0}));
  CHECK(z1.is_zero);
  // The identity on a trivial OPCA is itself zero: the image has a lower
  // bound 0.
  ZeroVerdict z2 = is_zero_morphism(identity_morphism(c2));
  CHECK(z2.is_zero);
  CHECK(z2.image_lower_bound == 0);
  CHECK(z2.factor_through_point.has_value());
  REQUIRE(z2.hom_top_checked.has_value());
  CHECK(*z2.hom_top_checked);
}

TEST_CASE("zero characterizations agree across every fixture hom-set") {
  for (const auto& a : fixture_opcas())
    for (const auto& b : fixture_opcas())
      for (const auto& f : enumerate_morphisms(a, b))
        CHECK(is_zero_morphism(f).is_zero);  // all fixtures are trivial
}

TEST_CASE("computational density on the fixtures") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  // ! into the point is always c.d.
  for (const auto& a : fixture_opcas()) {
    std::vector<Elem> bang(a->size(), 0);
    auto n = check_cd(map_to(a, one, bang));
    REQUIRE(n.has_value());
    CHECK(*n == 0);
  }
  // < out of the point is c.d. because C2 is trivial.
  CHECK(check_cd(map_to(one, c2, {0})).has_value());
  // The identity: n = i works (r = s), so a witness exists.
  for (const auto& a : fixture_opcas()) {
    OpcaMorphism id = identity_morphism(a);
    auto n = check_cd(id);
    REQUIRE(n.has_value());
    CHECK(cd_witness_valid(id, a->combinators().i));
  }
}

TEST_CASE("cdm witnesses and the proof construction") {
  auto c2 = fixture_c2();
  OpcaMorphism id = identity_morphism(c2);
  auto n = check_cd(id);
  REQUIRE(n.has_value());
  Elem m = construct_m_from_n(id, *n);
  CHECK(cdm_witness_valid(id, m));
  CHECK(check_cdm(id).has_value());

  auto one = fixture_one();
  OpcaMorphism bang = map_to(c2, one, {0, 0});
  CHECK(check_cdm(bang) == 0);
}

TEST_CASE("cd and cdm agree over every fixture morphism") {
  for (const auto& a : fixture_opcas())
    for (const auto& b : fixture_opcas())
      for (const auto& f : enumerate_morphisms(a, b)) {
        auto n = check_cd(f);
        auto m = check_cdm(f);
        CHECK(n.has_value() == m.has_value());
        if (n) CHECK_NOTHROW(construct_m_from_n(f, *n));
        if (m) CHECK(cd_witness_valid(f, *m));  // cdm witnesses satisfy cd
      }
}

TEST_CASE("discreteness on the fixtures") {
  auto c2 = fixture_c2();
  for (const auto& a : fixture_opcas())
    CHECK(is_discrete(identity_morphism(a)).verdict);
  CHECK(is_discrete(map_to(c2, fixture_one(), {0, 0})).verdict);
  // Trivial source: every subset is bounded below by the least element.
  for (const auto& f : enumerate_morphisms(c2, fixture_v3()))
    CHECK(is_discrete(f).verdict);
}

TEST_CASE("adjunctions: bang -| point and the identity pair") {
  auto c2 = fixture_c2();
  auto one = fixture_one();
  OpcaMorphism bang = map_to(c2, one, {0, 0});
  OpcaMorphism point = map_to(one, c2, {0});
  auto adj = check_adjunction(bang, point);
  REQUIRE(adj.has_value());

  auto idadj = check_adjunction(identity_morphism(c2), identity_morphism(c2));
  REQUIRE(idadj.has_value());
  CHECK(ineq_realizer_valid(identity_morphism(c2), identity_morphism(c2),
                            c2->combinators().i));
}

TEST_CASE("cd composition laws over all fixture morphism pairs") {
  auto fixtures = fixture_opcas();
  for (const auto& a : fixtures)
    for (const auto& b : fixtures) {
      auto hom_ab = enumerate_morphisms(a, b);
      for (const auto& c : fixtures) {
        auto hom_bc = enumerate_morphisms(b, c);
        for (const auto& f : hom_ab)
          for (const auto& g : hom_bc) {
            OpcaMorphism gf = compose(f, g);
            bool f_cd = check_cd(f).has_value();
            bool g_cd = check_cd(g).has_value();
            bool gf_cd = check_cd(gf).has_value();
            if (f_cd && g_cd) CHECK(gf_cd);  // (i)
            if (gf_cd) CHECK(g_cd);          // (ii)
            if (is_discrete(gf).verdict) CHECK(is_discrete(f).verdict);  // (iii)
          }
      }
    }
}

TEST_CASE("cd and discreteness are downward closed in the hom-order") {
  auto c2 = fixture_c2();
  auto v3 = fixture_v3();
  for (const auto& a : {c2, v3}) {
    auto homs = enumerate_morphisms(a, c2);
    for (const auto& f : homs)
      for (const auto& f2 : homs) {
        if (!find_inequality_realizer(f2, f)) continue;
        if (check_cd(f).has_value()) CHECK(check_cd(f2).has_value());
        if (is_discrete(f).verdict) CHECK(is_discrete(f2).verdict);
      }
  }
}

TEST_CASE("morphism validity is stable under isomorphism") {
  auto c2 = fixture_c2();
  auto v3 = fixture_v3();
  auto homs = enumerate_morphisms(v3, c2);
  for (const auto& f : homs)
    for (const auto& g : homs)
      if (morphisms_isomorphic(f, g)) {
        CHECK(find_tracker(*v3, *c2, g.map).has_value());
        CHECK(find_order_realizer(*v3, *c2, g.map).has_value());
      }
}
