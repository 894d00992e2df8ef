#pragma once

#include "opca/downset_monad.hpp"

namespace opca {

/// A finite set of points with an existence map into nonempty downsets of a
/// fixed base OPCA.
struct Assembly {
  OpcaRef base;
  std::string name;
  std::vector<std::string> points;
  std::vector<Bits> existence;  // per point, a nonempty downset over base

  int size() const { return int(points.size()); }
  int point_index(const std::string& p) const;
};
using AssemblyRef = std::shared_ptr<const Assembly>;

AssemblyRef make_assembly(const OpcaRef& base, std::string name,
                          std::vector<std::string> points,
                          std::vector<Bits> existence);

struct AssemblyMorphism {
  AssemblyRef source, target;
  std::vector<int> map;
  Elem tracker = kUndef;
};

bool assembly_tracker_valid(const Assembly& x, const Assembly& y,
                            const std::vector<int>& map, Elem r);

// First tracker in canonical order; BaseMismatch if the assemblies live
// over different OPCAs.
std::optional<Elem> find_assembly_tracker(const std::vector<int>& map,
                                          const Assembly& x,
                                          const Assembly& y);

std::optional<AssemblyMorphism> make_assembly_morphism(
    const AssemblyRef& x, const AssemblyRef& y, std::vector<int> map);

// Gamma forgets existence; nabla assigns the full carrier downset.
std::vector<std::string> gamma(const Assembly& x);
AssemblyRef nabla(const std::vector<std::string>& points, const OpcaRef& a);

/// Every function Gamma(X) -> S is tracked into nabla(S); the hom-set is in
/// bijection with the function set.
struct AdjunctionBijectionCertificate {
  uint64_t function_count;
  uint64_t tracked_count;
  std::vector<Elem> trackers;  // per function, canonical order
};
AdjunctionBijectionCertificate adjunction_bijection(
    const AssemblyRef& x, const std::vector<std::string>& s,
    const Budget& budget = {});

}  // namespace opca
