#pragma once

#include <json.hpp>

#include "opca/assembly.hpp"

namespace opca {

using json = nlohmann::json;

/// A machine-readable, replayable record of one claim: the subject
/// structures are embedded so re-verification needs no external state.
struct Certificate {
  std::string claim;
  json subject;
  json witness;
  uint64_t search_space = 0;
  std::string verdict;  // "pass" | "fail" | "not-applicable"
  json combinator_choice;

  json to_json() const;
  static Certificate from_json(const json& j);
  std::string canonical() const;  // deterministic byte-stable serialization
  bool pass() const { return verdict == "pass"; }
};

json poset_to_json(const FinPoset& p);
PosetRef poset_from_json(const json& j);

json opca_to_json(const Opca& a);
OpcaRef opca_from_json(const json& j);

json morphism_to_json(const OpcaMorphism& f);
// Reconstructs source/target from the embedded subjects; stored
// certificates are carried over unverified (replay re-checks them).
OpcaMorphism morphism_from_json(const json& j);

json applicative_to_json(const ApplicativeMorphism& f);
ApplicativeMorphism applicative_from_json(const json& j);

json assembly_to_json(const Assembly& x);
AssemblyRef assembly_from_json(const json& j);

json mask_to_json(const FinPoset& p, const Bits& mask);
Bits mask_from_json(const FinPoset& p, const json& j);

json combinator_choice_of(const Opca& a);

}  // namespace opca
