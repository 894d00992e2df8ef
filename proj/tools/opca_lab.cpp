#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "opca/commands.hpp"

using namespace opca;

int main(int argc, char** argv) {
  CLI::App app{
      "opca-lab: exhaustive verification of finite ordered partial "
      "combinatory algebras"};
  app.allow_extras();

  std::vector<std::string> files;
  std::string json_path;
  std::string seed_order = "declared";
  CommandOptions opts;
  app.add_option("-f,--file", files, "workspace file(s) to load");
  app.add_option("--json", json_path, "write certificates to this path");
  app.add_option("--limit", opts.limit, "enumeration / listing cap");
  app.add_option("--threads", opts.budget.threads,
                 "worker threads for enumeration (results are identical)");
  app.add_option("--seed-order", seed_order,
                 "element order for loaded files: declared|sorted")
      ->check(CLI::IsMember({"declared", "sorted"}));
  app.footer(
      "commands:\n"
      "  validate [opca...]         axioms, combinators, derived laws\n"
      "  combinators <opca>         all valid (k,s) pairs\n"
      "  compile <opca> <term>      bracket abstraction to an element\n"
      "  eval <opca> <term>         evaluate a closed term\n"
      "  hom <f>                    tracker and order realizer\n"
      "  ineq <f> <g>               realizer for f <= g\n"
      "  cd <f> | cdm <f>           computational density witnesses\n"
      "  discrete <f> | zero <f>    discreteness / zero-morphism checks\n"
      "  trivial <opca>             least element and pseudotriviality\n"
      "  product|biproduct <a> <b>  product structure and biproduct laws\n"
      "  coproduct <f0> <f1>        cotuple with the explicit realizers\n"
      "  adjoint <l> <r>            adjunction realizers\n"
      "  downset <name>             T(opca) or the downsets of a poset\n"
      "  monad-laws <opca>          unit and associativity up to iso\n"
      "  projective <f>             delta-factorization search\n"
      "  right-adjoint <f>          Kleisli right adjoint construction\n"
      "  pca-coproduct <f0> <f1>    applicative cotuple\n"
      "  hmaps <a0> <a1>            h_* and h* with h* h_* = id\n"
      "  mediator <f0> <f1>         maximal mediating applicative morphism\n"
      "  noprod <p0> <p1>           no-products witness on posets\n"
      "  enumerate <poset>          all OPCA structures on the poset\n"
      "  assembly <name>            assembly validation and tracking\n"
      "  verify <cert.json>...      replay certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  std::vector<std::string> rest = app.remaining();
  if (rest.empty()) {
    std::cerr << app.help() << "\n";
    return 2;
  }

  try {
    Workspace ws = make_workspace();
    SeedOrder so =
        seed_order == "sorted" ? SeedOrder::Sorted : SeedOrder::Declared;
    for (const auto& f : files) load_workspace_file(ws, f, so);

    CommandResult res = run_command(ws, rest, opts);
    std::cout << res.text;
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) fail(ErrKind::ParseError, "cannot write '" + json_path + "'");
      if (res.certificates.size() == 1) {
        out << res.certificates[0].canonical();
      } else {
        json arr = json::array();
        for (const auto& c : res.certificates) arr.push_back(c.to_json());
        out << arr.dump(2) << "\n";
      }
    }
    return res.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrKind::ParseError:
      case ErrKind::SyntaxError:
      case ErrKind::UnknownCommand:
      case ErrKind::UnknownName:
      case ErrKind::UnknownElement:
        return 2;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
