#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opca/common.hpp"

namespace opca {

class FinPoset;
using PosetRef = std::shared_ptr<const FinPoset>;

/// A finite poset over named elements. The declared element order fixes the
/// canonical enumeration order of every search and certificate downstream.
class FinPoset {
 public:
  // `le_generators` is any generating set of order pairs; the constructor
  // takes the reflexive-transitive closure and then checks antisymmetry.
  static PosetRef make(std::string name, std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>&
                           le_generators);

  // For synthesized posets (products, downset carriers) where the relation
  // is already reflexive and transitive by construction.
  static PosetRef make_from_relation(std::string name,
                                     std::vector<std::string> elements,
                                     const std::function<bool(int, int)>& le,
                                     bool validate = false);

  int size() const { return int(names_.size()); }
  const std::string& name() const { return name_; }
  const std::string& name_of(Elem e) const { return names_[e]; }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Elem> index_of(const std::string& name) const;
  Elem require(const std::string& name) const;

  bool le(Elem a, Elem b) const { return below_[b].test(a); }
  const Bits& below(Elem e) const { return below_[e]; }  // {x : x <= e}
  const Bits& above(Elem e) const { return above_[e]; }

  std::optional<Elem> least() const;
  std::vector<Elem> minimal_elements() const;
  bool has_lower_bound(const Bits& subset) const;
  std::optional<Elem> some_lower_bound(const Bits& subset) const;

  Bits empty_mask() const { return Bits(size()); }
  Bits full_mask() const;

 private:
  FinPoset() = default;
  std::string name_;
  std::vector<std::string> names_;
  std::vector<Bits> below_;
  std::vector<Bits> above_;
};

/// A nonempty downward-closed subset of a poset, as a membership bitmask.
struct Downset {
  PosetRef base;
  Bits members;

  std::vector<std::string> member_names() const;
};

// Least downward-closed superset of `seed`.
Bits downset_closure_mask(const FinPoset& p, const Bits& seed);
Downset downset_closure(const PosetRef& p, const std::vector<std::string>& seed);
Downset downset_closure(const PosetRef& p, const Bits& seed);

bool is_downward_closed(const FinPoset& p, const Bits& s);

// All nonempty downsets in canonical order (ascending membership bitmask,
// bit i = i-th declared element). Throws SizeLimit past `limit`.
std::vector<Bits> nonempty_downset_masks(const FinPoset& p, uint64_t limit);
std::vector<Downset> nonempty_downsets(const PosetRef& p,
                                       uint64_t limit = Budget{}.downset_limit);

// Carrier = pairs "(a,b)" in row-major declared order; componentwise order.
PosetRef product_poset(const PosetRef& p, const PosetRef& q);

inline Elem pair_index(const FinPoset& q, Elem a, Elem b) {
  return a * q.size() + b;
}
inline std::pair<Elem, Elem> unpair_index(const FinPoset& q, Elem e) {
  return {e / q.size(), e % q.size()};
}

}  // namespace opca
