#pragma once

#include "opca/morphism.hpp"

namespace opca {

/// Binary product OPCA: coordinatewise order and application, combinators
/// pinned to (k0,k1) and (s0,s1); projections and the coprojections
/// kappa0(a) = (a, i1), kappa1(a) = (i0, a).
struct ProductOpca {
  OpcaRef factor0, factor1;
  OpcaRef carrier;
  OpcaMorphism pi0, pi1;
  OpcaMorphism kappa0, kappa1;

  Elem pair(Elem a0, Elem a1) const {
    return pair_index(factor1->order(), a0, a1);
  }
  std::pair<Elem, Elem> unpair(Elem e) const {
    return unpair_index(factor1->order(), e);
  }
};

ProductOpca product(const OpcaRef& a0, const OpcaRef& a1);

// Left-nested n-fold product of copies of `a` (arity >= 2).
ProductOpca power(const OpcaRef& a, int arity);

// <f0,f1> with certificates assembled from the factors (tracker (t0,t1),
// order realizer (u0,u1)); pi_i o <f0,f1> = f_i on the nose.
OpcaMorphism tuple_morphism(const ProductOpca& p, const OpcaMorphism& f0,
                            const OpcaMorphism& f1);

// The proof-extracted cd witness for <f0,f1>: n'_i = lambda* x.
// n_i (u_i (t_i f_i(p_i) x)) per factor, paired. Verified exhaustively.
Elem cd_tuple_witness(const ProductOpca& p, const OpcaMorphism& f0,
                      const OpcaMorphism& f1, Elem n0, Elem n1);

/// [f0,f1](a0,a1) = p f0(a0) f1(a1) with the explicit tracker, order
/// realizer and the iso realizers (p0, lambda* x. p x i) for
/// [f0,f1] o kappa_i ~ f_i, all evaluated and verified.
struct CotupleResult {
  OpcaMorphism morphism;
  Elem iso_down0, iso_up0;  // f kappa0 <= f0 and f0 <= f kappa0
  Elem iso_down1, iso_up1;
};
CotupleResult cotuple_morphism(const ProductOpca& p, const OpcaMorphism& f0,
                               const OpcaMorphism& f1);

// Evaluates the displayed uniqueness realizer for g <= g' given realizers
// s_i for g kappa_i <= g' kappa_i, and verifies it pointwise.
Elem couniqueness_realizer(const ProductOpca& p, const OpcaMorphism& g,
                           const OpcaMorphism& g2, Elem s0, Elem s1);

/// pi_i kappa_i ~ id (both realizers) and pi_j kappa_i a zero morphism.
struct BiproductCertificate {
  Elem iso00_down, iso00_up;  // pi0 kappa0 vs id_A0
  Elem iso11_down, iso11_up;
  ZeroVerdict zero01;  // pi1 kappa0
  ZeroVerdict zero10;  // pi0 kappa1
};
BiproductCertificate check_biproduct(const OpcaRef& a0, const OpcaRef& a1,
                                     const Budget& budget = {});

/// Lower-bound witnesses extracted from realizers of kappa0 f0 <= kappa1 f1
/// (and the searched converse), showing both legs are zero morphisms.
struct DisjointnessWitness {
  Elem zero_witness0;  // lower bound of f0's image
  Elem zero_witness1;  // lower bound of f1's image
  Elem reverse_realizer;
};
DisjointnessWitness disjointness_certificate(const ProductOpca& p,
                                             const OpcaMorphism& f0,
                                             const OpcaMorphism& f1, Elem s);

// Dual form: s realizes f0 pi0 <= f1 pi1; extraction yields s f0(i0) as a
// lower bound of f1's image (and symmetrically via the searched converse).
DisjointnessWitness dual_disjointness_certificate(const ProductOpca& p,
                                                  const OpcaMorphism& f0,
                                                  const OpcaMorphism& f1,
                                                  Elem s);

/// Coproduct of adjoint pairs: h* = <f*,g*>, h_* = [f_*,g_*], unit realizer
/// evaluated as lambda* x. p (r x) (s x), counit searched.
struct AdjCoproductResult {
  ProductOpca prod;
  AdjointPair pair;  // left = h*, right = h_*
};
AdjCoproductResult adj_coproduct(const AdjointPair& f, const AdjointPair& g);

// cd probe for the diagonal A -> A^arity; nullopt when the diagonal is not
// computationally dense.
std::optional<Elem> diagonal_cd_probe(const OpcaRef& a, int arity);

}  // namespace opca
