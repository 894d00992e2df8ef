#pragma once

#include <map>

#include "opca/product.hpp"

namespace opca {

/// The OPCA TA of nonempty downsets of a base OPCA: inclusion order,
/// application alpha beta defined iff ab is defined for all a in alpha and
/// b in beta, combinators pinned to the principal downsets of k and s.
struct DownsetOpca {
  OpcaRef base;
  OpcaRef carrier;
  std::vector<Bits> member;       // carrier element -> mask over base
  std::map<Bits, Elem> index;     // inverse of `member`

  Elem index_of(const Bits& mask) const {
    auto it = index.find(mask);
    if (it == index.end())
      fail(ErrKind::UnknownElement, "set is not a nonempty downset");
    return it->second;
  }
  Elem principal(Elem a) const;   // index of the down-closure of {a}
};
using DownsetOpcaRef = std::shared_ptr<const DownsetOpca>;

DownsetOpcaRef build_T(const OpcaRef& a, const Budget& budget = {});

// alpha * beta in downset semantics; nullopt when some product is undefined.
std::optional<Bits> apply_downsets(const Opca& base, const Bits& alpha,
                                   const Bits& beta);
// r * alpha for an element r.
std::optional<Bits> elem_apply_downset(const Opca& base, Elem r,
                                       const Bits& alpha);

// Tf(alpha) = down-closure of the image, as a morphism TA -> TB.
OpcaMorphism T_on_morphism(const DownsetOpcaRef& ta, const DownsetOpcaRef& tb,
                           const OpcaMorphism& f);

struct MonadStructure {
  DownsetOpcaRef ta, tta;
  OpcaMorphism delta;       // A -> TA
  OpcaMorphism big_union;   // TTA -> TA
};
MonadStructure monad_structure(const OpcaRef& a, const Budget& budget = {});

/// Unit and associativity squares, each commuting up to isomorphism with
/// the two searched realizers recorded.
struct MonadLawCertificate {
  Elem unit_left_down, unit_left_up;    // union o delta_TA vs id_TA
  Elem unit_right_down, unit_right_up;  // union o T(delta) vs id_TA
  Elem assoc_down, assoc_up;            // union o union_TA vs union o T(union)
  uint64_t tta_size, ttta_size;
};
MonadLawCertificate monad_law_check(const OpcaRef& a,
                                    const Budget& budget = {});

/// A Kleisli arrow A -o B: a total function from A into nonempty downsets
/// of B with elementwise tracker r and order realizer u.
struct ApplicativeMorphism {
  OpcaRef source, target;
  std::vector<Bits> map;  // masks over the target
  Elem tracker = kUndef;
  Elem order_realizer = kUndef;
  std::string name;
};

bool applicative_tracker_valid(const ApplicativeMorphism& f, Elem r);
bool applicative_order_realizer_valid(const ApplicativeMorphism& f, Elem u);
std::optional<ApplicativeMorphism> make_applicative(const OpcaRef& source,
                                                    const OpcaRef& target,
                                                    std::vector<Bits> map,
                                                    std::string name = "");

ApplicativeMorphism delta_morphism(const OpcaRef& a);  // Kleisli identity
ApplicativeMorphism to_applicative(const OpcaMorphism& f);  // delta o f

// s realizes f <= g elementwise: s f(a) within g(a) for all a.
bool applicative_ineq_valid(const ApplicativeMorphism& f,
                            const ApplicativeMorphism& g, Elem s);
std::optional<Elem> find_applicative_inequality(const ApplicativeMorphism& f,
                                                const ApplicativeMorphism& g);
bool applicatives_isomorphic(const ApplicativeMorphism& f,
                             const ApplicativeMorphism& g);

// Kleisli composite: (g after f)(a) as the union of g over f(a).
ApplicativeMorphism applicative_compose(const ApplicativeMorphism& f,
                                        const ApplicativeMorphism& g);

// f'(a) = union of f over the downset of a; isomorphic to f via (i, u).
ApplicativeMorphism order_normalize(const ApplicativeMorphism& f);

// The T-algebra morphism TA -> TB with tilde(f) o delta_A ~ f verified.
OpcaMorphism tilde_lift(const ApplicativeMorphism& f,
                        const DownsetOpcaRef& ta, const DownsetOpcaRef& tb);

struct ProjectivityResult {
  std::vector<Elem> function;  // f0 with f ~ delta o f0
  Elem down, up;               // realizers of the isomorphism
  uint64_t search_space;
};
std::optional<ProjectivityResult> projectivity_search(
    const ApplicativeMorphism& f, const Budget& budget = {});

// First n with: for all s there is r with n f(r) within the downset of s.
std::optional<Elem> applicative_cd(const ApplicativeMorphism& f);
bool applicative_cd_witness_valid(const ApplicativeMorphism& f, Elem n);

/// Right adjoint of delta o f for a c.d. morphism f, built from a cdm
/// witness m: g(b) = downset of {a : m f(a) <= b}, with the proof's tracker
/// q = lambda* x y. r (p x y), unit realizer r and counit realizer m.
struct RightAdjointResult {
  ApplicativeMorphism g;   // B -o A
  Elem tracker_q;
  Elem unit_realizer_r;    // realizes id_A <= g (delta f)
  Elem counit_realizer_m;  // realizes (delta f) g <= id_B
};
RightAdjointResult right_adjoint_construct(const OpcaMorphism& f, Elem m);

/// Extraction of (projective, c.d.) data from an adjunction f -| g in PCA;
/// finite search replaces the proof's use of choice.
struct ProjectiveCdResult {
  std::vector<Elem> f0;
  Elem iso_down, iso_up;  // delta f0 <= f (identity combinator) and back
  Elem cd_witness;
};
ProjectiveCdResult adjoint_to_projective_cd(const ApplicativeMorphism& f,
                                            const ApplicativeMorphism& g,
                                            Elem unit_r, Elem counit_s);

// [f0,f1](a0,a1) = downset of {p b0 b1 : b0 in f0(a0), b1 in f1(a1)} with
// the cotuple iso laws verified by search.
struct PcaCotupleResult {
  ApplicativeMorphism morphism;
  Elem iso_down0, iso_up0, iso_down1, iso_up1;
};
PcaCotupleResult pca_cotuple(const ProductOpca& p,
                             const ApplicativeMorphism& f0,
                             const ApplicativeMorphism& f1);

/// h_*(alpha0, alpha1) = alpha0 x alpha1 and h*(alpha) = the coordinate
/// projections, between T(A0) x T(A1) and T(A0 x A1); h* h_* is the
/// identity on the nose and h* -| h_* holds with the recorded realizers.
struct HMapsResult {
  ProductOpca tprod;        // T(A0) x T(A1)
  DownsetOpcaRef tp;        // T(A0 x A1)
  ProductOpca base_prod;    // A0 x A1
  OpcaMorphism h_low;       // h_*
  OpcaMorphism h_up;        // h*
  Elem unit_realizer;       // id <= h_* h* on T(A0 x A1)
  Elem counit_realizer;     // h* h_* <= id on T(A0) x T(A1)
  bool round_trip_identity;  // h* o h_* equals id as a function
};
HMapsResult h_maps(const OpcaRef& a0, const OpcaRef& a1,
                   const Budget& budget = {});

// h_* o <f0,f1>: the maximal mediating applicative morphism B -o A0 x A1.
ApplicativeMorphism maximal_mediator(const ProductOpca& p,
                                     const ApplicativeMorphism& f0,
                                     const ApplicativeMorphism& f1);

/// Order-level witness that h* is not discrete over least-element-free
/// posets: per point (a0,a1) the displayed downset alpha with full
/// coordinate projections, with the intersection of the family empty.
struct NoprodCertificate {
  PosetRef prod;
  std::vector<Bits> alphas;  // one per (a0,a1), row-major
  bool intersection_empty;
  bool all_full_projections;
};
NoprodCertificate noprod_witness(const PosetRef& p0, const PosetRef& p1);

// Searches a left adjoint to h* among morphisms T(A0) x T(A1) -> T(A0 x A1).
std::optional<AdjointPair> hstar_left_adjoint_search(
    const OpcaRef& a0, const OpcaRef& a1, const Budget& budget = {});

// All applicative morphisms a -o b in canonical order (maps into the
// carrier of T(b) that admit both certificates).
std::vector<ApplicativeMorphism> enumerate_applicatives(
    const OpcaRef& a, const OpcaRef& b, const Budget& budget = {});

}  // namespace opca
