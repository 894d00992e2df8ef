#include <doctest.h>

#include <random>

#include "opca/commands.hpp"
#include "opca/fixtures.hpp"

using namespace opca;

TEST_CASE("parser resolves binders, constants and application") {
  auto c2 = fixture_c2();
  TermPtr t = parse_term("\\k s x y z. k x (s y z)", *c2);
  REQUIRE(t->kind == Term::Kind::Lam);
  const Term& body = *t->body;
  // k x (s y z) parses as App(App(k, x), App(App(s, y), z)).
  REQUIRE(body.kind == Term::Kind::App);
  CHECK(body.fn->kind == Term::Kind::App);
  CHECK(body.fn->fn->var == "k");
  CHECK(body.fn->arg->var == "x");
  CHECK(body.arg->fn->fn->var == "s");
  CHECK(body.arg->fn->arg->var == "y");
  CHECK(body.arg->arg->var == "z");
}

namespace {

// The 2-chain with 1*1 left undefined: every defined entry is 0, axiom (0)
// holds, and (k,s) = (0,0) is still valid, giving an OPCA with a genuinely
// partial table.
OpcaRef partial_c2() {
  static OpcaRef a = [] {
    PosetRef p = FinPoset::make("C2p", {"0", "1"}, {{"0", "1"}});
    AppTable t(2);
    t.at(0, 0) = 0;
    t.at(0, 1) = 0;
    t.at(1, 0) = 0;
    return Opca::make(Opas::validate(p, t), "C2p");
  }();
  return a;
}

}  // namespace

TEST_CASE("parse errors carry positions and kinds") {
  auto c2 = fixture_c2();
  CHECK_THROWS_AS(parse_term("", *c2), Error);
  CHECK_THROWS_AS(parse_term("(0 1", *c2), Error);
  CHECK_THROWS_AS(parse_term("\\. x", *c2), Error);
  CHECK_THROWS_AS(parse_term("zz", *c2), Error);  // UnknownIdentifier
  try {
    parse_term("0 zz", *c2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrKind::UnknownIdentifier);
  }
}

TEST_CASE("application is left-associative and binders shadow elements") {
  auto c2 = fixture_c2();
  TermPtr t = parse_term("0 1 0", *c2);
  REQUIRE(t->kind == Term::Kind::App);
  CHECK(t->fn->kind == Term::Kind::App);
  CHECK(t->arg->kind == Term::Kind::Const);
  CHECK(print_term(*t, *c2) == "0 1 0");

  TermPtr lam = parse_term("\\x. x", *c2);
  REQUIRE(lam->kind == Term::Kind::Lam);
  CHECK(lam->body->kind == Term::Kind::Var);

  // "0" used as a binder shadows the element 0.
  TermPtr sh = parse_term("\\0. 0", *c2);
  CHECK(sh->body->kind == Term::Kind::Var);

  TermPtr grouped = parse_term("0 (1 0)", *c2);
  CHECK(print_term(*grouped, *c2) == "0 (1 0)");
}

TEST_CASE("constants resolve to elements") {
  auto c2 = fixture_c2();
  TermPtr t = parse_term("0 1", *c2);
  CHECK(t->fn->c == 0);
  CHECK(t->arg->c == 1);
}

TEST_CASE("print then parse is the identity on ASTs") {
  auto v3 = fixture_v3();
  std::mt19937 rng(20250809);
  auto rnd_term = [&](auto&& self, int depth,
                      std::vector<std::string>& scope) -> TermPtr {
    int pick = int(rng() % (depth <= 0 ? 2 : 4));
    switch (pick) {
      case 0:
        if (!scope.empty()) return tvar(scope[rng() % scope.size()]);
        [[fallthrough]];
      case 1:
        return tconst(Elem(rng() % v3->size()));
      case 2: {
        auto f = self(self, depth - 1, scope);
        auto x = self(self, depth - 1, scope);
        return tapp(f, x);
      }
      default: {
        std::string v = "v" + std::to_string(scope.size());
        scope.push_back(v);
        auto body = self(self, depth - 1, scope);
        scope.pop_back();
        return tlam({v}, body);
      }
    }
  };
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> scope;
    TermPtr t = rnd_term(rnd_term, 4, scope);
    TermPtr back = parse_term(print_term(*t, *v3), *v3);
    CHECK(term_eq(*t, *back));
  }
}

TEST_CASE("evaluation over the meet chain and the point") {
  auto c2 = fixture_c2();
  auto r = eval_closed(*c2, *parse_term("1 0", *c2));
  CHECK(r.value == 0);
  auto one = fixture_one();
  CHECK(eval_closed(*one, *parse_term("* *", *one)).value == 0);
}

TEST_CASE("evaluation is strict in undefined subterms") {
  auto a = partial_c2();
  CHECK_FALSE(eval_closed(*a, *parse_term("1 1", *a)).defined());
  // Undefined propagates: a defined context around an undefined subterm
  // stays undefined.
  CHECK_FALSE(eval_closed(*a, *parse_term("(1 1) 0", *a)).defined());
  CHECK_FALSE(eval_closed(*a, *parse_term("0 (1 1)", *a)).defined());
  CHECK(eval_closed(*a, *parse_term("1 0", *a)).value == 0);

  CHECK_THROWS_AS(eval_closed(*a, *tvar("x")), Error);
  CHECK_THROWS_AS(eval_closed(*a, *tlam({"x"}, tvar("x"))), Error);
}

TEST_CASE("bracket abstraction: identity behaves as i") {
  for (const auto& a : fixture_opcas()) {
    Elem id = bracket_abstract(*a, tvar("x"), {"x"});
    // lambda* x. x is the element s k k.
    auto skk = a->app_chain({a->s(), a->k(), a->k()});
    REQUIRE(skk.has_value());
    CHECK(id == *skk);
    for (Elem x = 0; x < a->size(); ++x) {
      auto r = a->app(id, x);
      REQUIRE(r.has_value());
      CHECK(a->le(*r, x));
    }
  }
}

TEST_CASE("bracket abstraction over C2 computes i at the canonical choice") {
  auto c2 = fixture_c2();
  Elem e = bracket_abstract(*c2, tvar("x"), {"x"});
  CHECK(e == 0);  // k = s = 0, so skk = 0
  auto applied = c2->app(e, 0);
  CHECK(applied == 0);
}

TEST_CASE("lambda* x y. y x over V3 lands below the reversed application") {
  auto v3 = fixture_v3();
  Elem a = v3->order().require("a");
  Elem b = v3->order().require("b");
  Elem bot = v3->order().require("bot");
  Elem c = bracket_abstract(*v3, tapp(tvar("y"), tvar("x")), {"x", "y"});
  auto r = v3->app_chain({c, a, b});
  REQUIRE(r.has_value());
  // b * a is the meet bot; the compiled element refines it.
  CHECK(*r == bot);
  CHECK(v3->le(*r, *v3->app(b, a)));
}

TEST_CASE("bracket abstraction rejects stray free variables") {
  auto c2 = fixture_c2();
  CHECK_THROWS_AS(bracket_abstract(*c2, tvar("y"), {"x"}), Error);
}

TEST_CASE("kleene comparison implements the four relations") {
  auto c2 = fixture_c2();
  TermPtr zero = tconst(0), one = tconst(1);
  CHECK(kleene_compare(*c2, *zero, *one, CompareMode::Refines));
  CHECK(kleene_compare(*c2, *zero, *one, CompareMode::Le));
  CHECK_FALSE(kleene_compare(*c2, *zero, *one, CompareMode::Eq));
  CHECK_FALSE(kleene_compare(*c2, *zero, *one, CompareMode::KleeneEqual));
  CHECK(kleene_compare(*c2, *zero, *zero, CompareMode::Eq));

  // Two undefined expressions are Kleene equal but not le-comparable.
  auto pc2 = partial_c2();
  TermPtr undef = parse_term("1 1", *pc2);
  CHECK(kleene_compare(*pc2, *undef, *undef, CompareMode::KleeneEqual));
  CHECK_FALSE(kleene_compare(*pc2, *undef, *undef, CompareMode::Le));
  CHECK(value_refines(*c2, std::nullopt, std::nullopt));
  CHECK(value_refines(*c2, Elem(0), std::nullopt));
  CHECK_FALSE(value_refines(*c2, std::nullopt, Elem(0)));

  // Over ONE any two defined closed terms stand in all four relations.
  auto one_a = fixture_one();
  TermPtr star = tconst(0);
  TermPtr app = tapp(star, star);
  for (auto mode : {CompareMode::Refines, CompareMode::KleeneEqual,
                    CompareMode::Le, CompareMode::Eq})
    CHECK(kleene_compare(*one_a, *star, *app, mode));
}

TEST_CASE("combinatory completeness on a small corpus") {
  // Depth-2 corpus here; the acceptance suite runs the full depth-3 sweep.
  for (const auto& a : {fixture_c2(), fixture_v3()}) {
    auto corpus = term_corpus(*a, 2, 3);
    CHECK(corpus.size() == 30);
    for (const auto& t : corpus) {
      Elem e = bracket_abstract(*a, t, {"x", "y", "z"});
      for (Elem x = 0; x < a->size(); ++x) {
        auto ex = a->app(e, x);
        REQUIRE(ex.has_value());
        for (Elem y = 0; y < a->size(); ++y)
          REQUIRE(a->app(*ex, y).has_value());
      }
    }
  }
}

TEST_CASE("swapping to another valid (k,s) keeps completeness") {
  auto base = fixture_c2();
  for (auto [k, s] : find_ks(base->opas())) {
    OpcaRef a =
        Opca::make(Opas::validate(base->order_ref(), base->opas().table()),
                   "C2ks", std::make_pair(k, s));
    TermPtr t = tapp(tvar("y"), tapp(tvar("x"), tconst(a->k())));
    Elem e = bracket_abstract(*a, t, {"x", "y"});
    for (Elem x = 0; x < 2; ++x) {
      auto ex = a->app(e, x);
      REQUIRE(ex.has_value());
      for (Elem y = 0; y < 2; ++y) {
        auto v = a->app(*ex, y);
        // t(x,y) = y (x k)
        auto xk = a->app(x, a->k());
        REQUIRE(xk.has_value());
        auto rhs = a->app(y, *xk);
        CHECK(value_refines(*a, v, rhs));
      }
    }
  }
}
