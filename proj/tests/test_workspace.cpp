#include <doctest.h>

#include "opca/commands.hpp"
#include "opca/fixtures.hpp"

using namespace opca;

namespace {

const char* kSample = R"(
# stock structures written out by hand
opca myC2
  elements 0 1
  le 0<1
  app 0 0 -> 0
  app 0 1 -> 0
  app 1 0 -> 0
  app 1 1 -> 1

opca pinned
  elements 0 1
  le 0<1
  app 0 0 -> 0
  app 0 1 -> 0
  app 1 0 -> 0
  app 1 1 -> 1
  k 0
  s 0

poset myA2
  elements u v

morphism f : myC2 -> myC2
  map 0 -> 0
  map 1 -> 1

applicative g : myC2 -o myC2
  map 0 -> {0}
  map 1 -> {0, 1}

assembly X over myC2
  point x1 {0}
  point x2 {0, 1}
)";

}  // namespace

TEST_CASE("workspace files parse into validated structures") {
  Workspace ws = make_workspace();
  load_workspace_text(ws, kSample, "<test>");
  OpcaRef a = ws.opca("myC2");
  CHECK(a->size() == 2);
  CHECK(a->k() == 0);  // canonical first pair
  CHECK(ws.opca("pinned")->k() == 0);
  CHECK(ws.poset("myA2")->size() == 2);
  CHECK(ws.morphism("f").map == std::vector<Elem>{0, 1});
  CHECK(ws.applicative("g").map[1] == a->order().full_mask());
  CHECK(ws.assembly("X")->size() == 2);
  // Fixtures are pre-registered; an opca name resolves as a poset too.
  CHECK(ws.opca("C2")->size() == 2);
  CHECK(ws.poset("C2")->size() == 2);
  CHECK(ws.poset("A2")->size() == 2);
  CHECK_THROWS_AS(ws.opca("nope"), Error);
}

TEST_CASE("workspace rejects bad input") {
  Workspace ws = make_workspace();
  CHECK_THROWS_AS(load_workspace_text(ws, "opca x\n  elements\n", "<t>"),
                  Error);
  CHECK_THROWS_AS(load_workspace_text(ws, "garbage line\n", "<t>"), Error);
  CHECK_THROWS_AS(
      load_workspace_text(ws, "opca C2\n  elements 0 1\n", "<t>"), Error);
  // An antichain with a full table admits no combinators.
  CHECK_THROWS_AS(load_workspace_text(ws,
                                      "opca bad\n"
                                      "  elements u v\n"
                                      "  app u u -> u\n"
                                      "  app u v -> u\n"
                                      "  app v u -> u\n"
                                      "  app v v -> u\n",
                                      "<t>"),
                  Error);
  // Pinning an invalid pair is a validation error: with 1*1 undefined,
  // k = 1 breaks axiom (1) even though (0,0) would be fine.
  CHECK_THROWS_AS(load_workspace_text(ws,
                                      "opca badpin\n"
                                      "  elements 0 1\n"
                                      "  le 0<1\n"
                                      "  app 0 0 -> 0\n"
                                      "  app 0 1 -> 0\n"
                                      "  app 1 0 -> 0\n"
                                      "  k 1\n"
                                      "  s 1\n",
                                      "<t>"),
                  Error);
}

TEST_CASE("sorted seed order reorders elements") {
  Workspace ws = make_workspace();
  load_workspace_text(ws,
                      "opca zz\n"
                      "  elements b a\n"
                      "  le a<b\n"
                      "  app a a -> a\n"
                      "  app a b -> a\n"
                      "  app b a -> a\n"
                      "  app b b -> b\n",
                      "<t>", SeedOrder::Sorted);
  CHECK(ws.opca("zz")->name_of(0) == "a");
}

TEST_CASE("run_command covers the primary commands") {
  Workspace ws = make_workspace();
  load_workspace_text(ws, kSample, "<test>");
  CommandOptions opts;

  auto run = [&](std::vector<std::string> args) {
    return run_command(ws, args, opts);
  };

  CHECK(run({"validate", "C2"}).pass);
  CHECK(run({"combinators", "C2"}).certificates[0].witness["pairs"].size() ==
        4);
  CHECK(run({"eval", "C2", "(\\x. x) 0"}).text.find("= 0") !=
        std::string::npos);
  CHECK(run({"compile", "C2", "\\x y. y x"}).pass);
  CHECK(run({"hom", "f"}).pass);
  CHECK(run({"ineq", "f", "f"}).pass);
  CHECK(run({"cd", "f"}).pass);
  CHECK(run({"cdm", "f"}).pass);
  CHECK(run({"discrete", "f"}).pass);
  CHECK(run({"zero", "f"}).pass);  // C2 is trivial
  CHECK(run({"trivial", "C2"}).pass);
  CHECK(run({"product", "C2", "V3"}).pass);
  CHECK(run({"coproduct", "f", "f"}).pass);
  CHECK(run({"biproduct", "C2", "C2"}).pass);
  CHECK(run({"adjoint", "f", "f"}).pass);
  CHECK(run({"downset", "V3"}).pass);
  CHECK(run({"downset", "A2"}).pass);
  CHECK(run({"monad-laws", "C2"}).pass);
  CHECK(run({"projective", "g"}).pass);
  CHECK(run({"right-adjoint", "f"}).pass);
  CHECK(run({"pca-coproduct", "g", "g"}).pass);
  CHECK(run({"hmaps", "C2", "C2"}).pass);
  CHECK(run({"mediator", "g", "g"}).pass);
  CHECK(run({"noprod", "A2", "A2"}).pass);
  CHECK(run({"enumerate", "A2"}).pass);
  CHECK(run({"assembly", "X"}).pass);
  CHECK_THROWS_AS(run({"frobnicate"}), Error);
  CHECK_THROWS_AS(run({"cd", "missing"}), Error);

  // noprod on a poset with a least element is not applicable, which does
  // not count as a failure.
  CommandResult na = run({"noprod", "C2", "A2"});
  CHECK(na.pass);
  CHECK(na.certificates[0].verdict == "not-applicable");
}

TEST_CASE("certificates replay with identical verdicts and bytes") {
  Workspace ws = make_workspace();
  load_workspace_text(ws, kSample, "<test>");
  CommandOptions opts;
  std::vector<std::vector<std::string>> cmds = {
      {"validate", "C2"},
      {"combinators", "V3"},
      {"eval", "C2", "1 0"},
      {"compile", "C2", "\\x. x"},
      {"hom", "f"},
      {"ineq", "f", "f"},
      {"cd", "f"},
      {"cdm", "f"},
      {"discrete", "f"},
      {"zero", "f"},
      {"trivial", "V3"},
      {"product", "C2", "C2"},
      {"coproduct", "f", "f"},
      {"biproduct", "C2", "V3"},
      {"adjoint", "f", "f"},
      {"downset", "V3"},
      {"downset", "A3"},
      {"monad-laws", "C2"},
      {"projective", "g"},
      {"right-adjoint", "f"},
      {"pca-coproduct", "g", "g"},
      {"hmaps", "ONE", "C2"},
      {"mediator", "g", "g"},
      {"noprod", "A2", "A3"},
      {"noprod", "C2", "A2"},
      {"enumerate", "A2"},
      {"assembly", "X"},
  };
  for (const auto& cmd : cmds) {
    CAPTURE(cmd[0]);
    CommandResult r = run_command(ws, cmd, opts);
    for (const auto& cert : r.certificates) {
      // Round trip through JSON, re-verify, compare bytes.
      Certificate loaded = Certificate::from_json(cert.to_json());
      std::string verdict = reverify_certificate(loaded);
      CHECK(verdict == cert.verdict);
      Certificate replayed = loaded;
      replayed.verdict = verdict;
      CHECK(replayed.canonical() == cert.canonical());
    }
  }
}

TEST_CASE("deterministic serialization across repeated runs") {
  Workspace ws = make_workspace();
  CommandOptions opts;
  auto once = [&] {
    return run_command(ws, {"biproduct", "C2", "V3"}, opts)
        .certificates[0]
        .canonical();
  };
  std::string first = once();
  CHECK(first == once());
  CHECK(first.find("\"claim\"") != std::string::npos);
}
