#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opca/term.hpp"

namespace opca {

/// A total function between OPCA carriers together with its searched
/// certificates: a tracker t (t f(a) f(a') refines f(aa')) and an order
/// realizer u (u f(a') <= f(a) whenever a' <= a).
struct OpcaMorphism {
  OpcaRef source, target;
  std::vector<Elem> map;
  Elem tracker = kUndef;
  Elem order_realizer = kUndef;
  std::string name;

  Elem operator()(Elem a) const { return map[a]; }
};

/// Realizer for a pointwise inequality f <= g between parallel morphisms.
struct IneqCertificate {
  Elem realizer;
  uint64_t search_space;
};

std::optional<Elem> find_tracker(const Opca& source, const Opca& target,
                                 const std::vector<Elem>& map);
std::optional<Elem> find_order_realizer(const Opca& source, const Opca& target,
                                        const std::vector<Elem>& map);

bool tracker_valid(const Opca& source, const Opca& target,
                   const std::vector<Elem>& map, Elem t);
bool order_realizer_valid(const Opca& source, const Opca& target,
                          const std::vector<Elem>& map, Elem u);
bool ineq_realizer_valid(const OpcaMorphism& f, const OpcaMorphism& g, Elem s);

// Both certificates searched in canonical order; nullopt when either is
// missing (the map is then not a morphism).
std::optional<OpcaMorphism> make_morphism(const OpcaRef& source,
                                          const OpcaRef& target,
                                          std::vector<Elem> map,
                                          std::string name = "");

OpcaMorphism identity_morphism(const OpcaRef& a);
OpcaMorphism constant_morphism(const OpcaRef& a, const OpcaRef& b, Elem c);

// Throws SourceMismatch unless f and g are parallel.
std::optional<IneqCertificate> find_inequality_realizer(const OpcaMorphism& f,
                                                        const OpcaMorphism& g);

bool morphisms_isomorphic(const OpcaMorphism& f, const OpcaMorphism& g);

// compose(f, g): first f, then g; certificates are searched afresh.
OpcaMorphism compose(const OpcaMorphism& f, const OpcaMorphism& g);

/// Verdict of the three zero-morphism characterizations, which must agree:
/// factoring through the one-point OPCA up to iso, a lower bound on the
/// image, and being a top of the hom-preorder (the last only within budget).
struct ZeroVerdict {
  bool is_zero;
  std::optional<Elem> image_lower_bound;            // (ii)
  std::optional<Elem> factor_through_point;         // (i): the constant c
  std::optional<Elem> factor_up, factor_down;       // realizers for f ~ const c
  std::optional<bool> hom_top_checked;              // (iii) verdict, if swept
};
ZeroVerdict is_zero_morphism(const OpcaMorphism& f, const Budget& budget = {});

// First n with: for all s in B there is r in A with n f(r) <= s.
std::optional<Elem> check_cd(const OpcaMorphism& f);
bool cd_witness_valid(const OpcaMorphism& f, Elem n);

// First m with: for all s there is r with m f(ra) refining s f(a) for all a.
std::optional<Elem> check_cdm(const OpcaMorphism& f);
bool cdm_witness_valid(const OpcaMorphism& f, Elem m);
// First r for a fixed s under the cdm formula.
std::optional<Elem> cdm_r_for(const OpcaMorphism& f, Elem m, Elem s);

// Evaluates m = lambda* x. n(u(t f(p0) x))(u(t f(p1) x)) and verifies it
// satisfies the cdm formula; failure means a table or evaluator bug.
Elem construct_m_from_n(const OpcaMorphism& f, Elem n);

struct DiscreteVerdict {
  bool verdict;
  Bits counterexample;  // subset of the source with unbounded preimage
};
DiscreteVerdict is_discrete(const OpcaMorphism& f, const Budget& budget = {});

/// left: B -> A and right: A -> B with left -| right; unit realizer lives in
/// B (id_B <= right o left), counit realizer in A (left o right <= id_A).
struct AdjointPair {
  OpcaMorphism left, right;
  Elem unit_realizer;
  Elem counit_realizer;
};
std::optional<AdjointPair> check_adjunction(const OpcaMorphism& l,
                                            const OpcaMorphism& r);

// Every total map source -> target that admits both certificates, in
// canonical map order. Throws SizeLimit past the budget.
std::vector<OpcaMorphism> enumerate_morphisms(const OpcaRef& a,
                                              const OpcaRef& b,
                                              const Budget& budget = {});

// Convenience: search two morphisms witnessing equivalence in OPCA.
bool opcas_equivalent(const OpcaRef& a, const OpcaRef& b,
                      const Budget& budget = {});

}  // namespace opca
