#include <doctest.h>

#include "opca/fixtures.hpp"
#include "opca/poset.hpp"

using namespace opca;

namespace {

PosetRef chain2() { return fixture_c2()->order_ref(); }
PosetRef v3() { return fixture_v3()->order_ref(); }

Bits mask_of(const PosetRef& p, std::initializer_list<const char*> names) {
  Bits m(p->size());
  for (const char* n : names) m.set(p->require(n));
  return m;
}

// Oracle: the least downward-closed superset of `seed`, found by scanning
// all subsets (usable for |p| <= 6).
Bits closure_oracle(const FinPoset& p, const Bits& seed) {
  int n = p.size();
  Bits best(n);
  bool found = false;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(i);
    if (!seed.subset_of(s)) continue;
    bool closed = true;
    s.for_each([&](int e) {
      if (!p.below(e).subset_of(s)) closed = false;
    });
    if (!closed) continue;
    if (!found || s.count() < best.count()) {
      best = s;
      found = true;
    }
  }
  REQUIRE(found);
  return best;
}

// Oracle: all nonempty downsets by subset scan, in ascending mask order.
std::vector<Bits> downsets_oracle(const FinPoset& p) {
  std::vector<Bits> out;
  int n = p.size();
  for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) {
    Bits s(n);
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.set(i);
    bool closed = true;
    s.for_each([&](int e) {
      if (!p.below(e).subset_of(s)) closed = false;
    });
    if (closed) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("poset construction validates") {
  CHECK_THROWS_AS(FinPoset::make("bad", {}, {}), Error);
  CHECK_THROWS_AS(FinPoset::make("bad", {"a", "a"}, {}), Error);
  CHECK_THROWS_AS(FinPoset::make("bad", {"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  Error);
  CHECK_THROWS_AS(FinPoset::make("bad", {"a"}, {{"a", "zz"}}), Error);
  // Generators close transitively.
  PosetRef c3 = FinPoset::make("c", {"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
  CHECK(c3->le(0, 2));
  CHECK_FALSE(c3->le(2, 0));
}

TEST_CASE("downset closure on the chain") {
  auto p = chain2();
  CHECK(downset_closure(p, {"1"}).members == mask_of(p, {"0", "1"}));
  CHECK(downset_closure(p, {"0"}).members == mask_of(p, {"0"}));
}

TEST_CASE("downset closure on V3") {
  auto p = v3();
  CHECK(downset_closure(p, {"a"}).members == mask_of(p, {"bot", "a"}));
}

TEST_CASE("downset closure rejects bad seeds") {
  auto p = chain2();
  CHECK_THROWS_AS(downset_closure(p, std::vector<std::string>{}), Error);
  CHECK_THROWS_AS(downset_closure(p, {"nope"}), Error);
}

TEST_CASE("closure is the least downset containing the seed") {
  std::vector<PosetRef> posets = {chain2(), v3(), fixture_a3(), fixture_n4(),
                                  fixture_f4(),
                                  product_poset(chain2(), v3())};
  for (const auto& p : posets) {
    for (uint64_t mask = 1; mask < (uint64_t(1) << p->size()); ++mask) {
      Bits seed(p->size());
      for (int i = 0; i < p->size(); ++i)
        if ((mask >> i) & 1) seed.set(i);
      CHECK(downset_closure(p, seed).members == closure_oracle(*p, seed));
    }
  }
}

TEST_CASE("product poset ONE x ONE is a point") {
  auto one = fixture_one()->order_ref();
  CHECK(product_poset(one, one)->size() == 1);
}

TEST_CASE("product poset C2 x C2 is the componentwise grid") {
  auto p = chain2();
  auto grid = product_poset(p, p);
  REQUIRE(grid->size() == 4);
  for (Elem a0 = 0; a0 < 2; ++a0)
    for (Elem a1 = 0; a1 < 2; ++a1)
      for (Elem b0 = 0; b0 < 2; ++b0)
        for (Elem b1 = 0; b1 < 2; ++b1)
          CHECK(grid->le(pair_index(*p, a0, a1), pair_index(*p, b0, b1)) ==
                (p->le(a0, b0) && p->le(a1, b1)));
  CHECK(grid->name_of(pair_index(*p, 0, 1)) == "(0,1)");
}

TEST_CASE("product of antichains is an antichain") {
  auto a2 = fixture_a2();
  auto prod = product_poset(a2, a2);
  int comparable = 0;
  for (int x = 0; x < prod->size(); ++x)
    for (int y = 0; y < prod->size(); ++y)
      if (x != y && prod->le(x, y)) ++comparable;
  CHECK(comparable == 0);
}

TEST_CASE("nonempty downset enumeration matches the subset-scan oracle") {
  std::vector<PosetRef> posets = {fixture_one()->order_ref(), chain2(), v3(),
                                  fixture_a3(), fixture_n4(), fixture_f4(),
                                  product_poset(v3(), v3())};
  for (const auto& p : posets) {
    auto got = nonempty_downset_masks(*p, 1 << 20);
    auto want = downsets_oracle(*p);
    CHECK(got == want);
  }
}

TEST_CASE("nonempty downsets of the fixtures") {
  CHECK(nonempty_downsets(chain2()).size() == 2);
  CHECK(nonempty_downsets(fixture_one()->order_ref()).size() == 1);
  auto v = nonempty_downsets(v3());
  REQUIRE(v.size() == 4);
  CHECK(v[0].members == mask_of(v3(), {"bot"}));
  CHECK(v[1].members == mask_of(v3(), {"bot", "a"}));
  CHECK(v[2].members == mask_of(v3(), {"bot", "b"}));
  CHECK(v[3].members == mask_of(v3(), {"bot", "a", "b"}));
}

TEST_CASE("downset enumeration honors the size limit") {
  CHECK_THROWS_AS(nonempty_downset_masks(*fixture_a4(), 3), Error);
}

TEST_CASE("pairing downsets into the product is injective") {
  auto p = v3();
  auto q = chain2();
  auto prod = product_poset(p, q);
  auto dp = nonempty_downset_masks(*p, 1 << 20);
  auto dq = nonempty_downset_masks(*q, 1 << 20);
  std::vector<Bits> seen;
  for (const auto& a : dp)
    for (const auto& b : dq) {
      Bits prod_mask(prod->size());
      a.for_each([&](int x) {
        b.for_each([&](int y) { prod_mask.set(pair_index(*q, x, y)); });
      });
      CHECK(is_downward_closed(*prod, prod_mask));
      for (const auto& s : seen) CHECK_FALSE(s == prod_mask);
      seen.push_back(prod_mask);
    }
}

TEST_CASE("product is associative and commutative up to pairing") {
  auto a = chain2();
  auto b = v3();
  auto c = fixture_a2();
  auto ab_c = product_poset(product_poset(a, b), c);
  auto a_bc = product_poset(a, product_poset(b, c));
  REQUIRE(ab_c->size() == a_bc->size());
  // ((x,y),z) <= ((x',y'),z') iff (x,(y,z)) <= (x',(y',z')) under the
  // canonical reindexing.
  int nb = b->size(), nc = c->size();
  auto left = [&](int x, int y, int z) { return (x * nb + y) * nc + z; };
  auto right = [&](int x, int y, int z) { return x * (nb * nc) + y * nc + z; };
  for (int x = 0; x < a->size(); ++x)
    for (int y = 0; y < nb; ++y)
      for (int z = 0; z < nc; ++z)
        for (int x2 = 0; x2 < a->size(); ++x2)
          for (int y2 = 0; y2 < nb; ++y2)
            for (int z2 = 0; z2 < nc; ++z2)
              CHECK(ab_c->le(left(x, y, z), left(x2, y2, z2)) ==
                    a_bc->le(right(x, y, z), right(x2, y2, z2)));

  auto ab = product_poset(a, b);
  auto ba = product_poset(b, a);
  for (int x = 0; x < a->size(); ++x)
    for (int y = 0; y < nb; ++y)
      for (int x2 = 0; x2 < a->size(); ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          CHECK(ab->le(pair_index(*b, x, y), pair_index(*b, x2, y2)) ==
                ba->le(pair_index(*a, y, x), pair_index(*a, y2, x2)));
}
