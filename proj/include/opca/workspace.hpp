#pragma once

#include <map>

#include "opca/certificate.hpp"

namespace opca {

/// Named structures parsed from input files, with the stock fixtures
/// pre-registered. Names are unique per kind.
struct Workspace {
  std::map<std::string, PosetRef> posets;
  std::map<std::string, OpcaRef> opcas;
  std::map<std::string, OpcaMorphism> morphisms;
  std::map<std::string, ApplicativeMorphism> applicatives;
  std::map<std::string, AssemblyRef> assemblies;

  OpcaRef opca(const std::string& name) const;
  // Falls back to an OPCA's underlying order when no poset has the name.
  PosetRef poset(const std::string& name) const;
  const OpcaMorphism& morphism(const std::string& name) const;
  const ApplicativeMorphism& applicative(const std::string& name) const;
  AssemblyRef assembly(const std::string& name) const;
};

enum class SeedOrder { Declared, Sorted };

Workspace make_workspace();  // fixtures only

// Parses the line-oriented text format (blocks: poset, opca, morphism,
// applicative, assembly) and registers everything; all OPCAs are validated
// and morphism certificates searched. ParseError carries the line number.
void load_workspace_text(Workspace& ws, const std::string& text,
                         const std::string& filename = "<input>",
                         SeedOrder order = SeedOrder::Declared);
void load_workspace_file(Workspace& ws, const std::string& path,
                         SeedOrder order = SeedOrder::Declared);

}  // namespace opca
