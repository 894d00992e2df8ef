#include "opca/product.hpp"

namespace opca {

ProductOpca product(const OpcaRef& a0, const OpcaRef& a1) {
  PosetRef order = product_poset(a0->order_ref(), a1->order_ref());
  int n1 = a1->size();
  AppTable table(order->size());
  for (Elem x = 0; x < order->size(); ++x)
    for (Elem y = 0; y < order->size(); ++y) {
      Elem v0 = a0->opas().raw_app(x / n1, y / n1);
      Elem v1 = a1->opas().raw_app(x % n1, y % n1);
      table.at(x, y) = (v0 == kUndef || v1 == kUndef) ? kUndef : v0 * n1 + v1;
    }
  Elem k = a0->k() * n1 + a1->k();
  Elem s = a0->s() * n1 + a1->s();
  OpcaRef carrier = Opca::make(Opas::validate(order, std::move(table)),
                               order->name(), std::make_pair(k, s));

  ProductOpca p;
  p.factor0 = a0;
  p.factor1 = a1;
  p.carrier = carrier;

  std::vector<Elem> m0(carrier->size()), m1(carrier->size());
  for (Elem x = 0; x < carrier->size(); ++x) {
    m0[x] = x / n1;
    m1[x] = x % n1;
  }
  auto pi0 = make_morphism(carrier, a0, std::move(m0), "pi0");
  auto pi1 = make_morphism(carrier, a1, std::move(m1), "pi1");
  if (!pi0 || !pi1)
    fail(ErrKind::ConstructionFailed, "projection lost its certificates");
  p.pi0 = std::move(*pi0);
  p.pi1 = std::move(*pi1);

  Elem i0 = a0->combinators().i, i1 = a1->combinators().i;
  std::vector<Elem> k0(a0->size()), k1(a1->size());
  for (Elem a = 0; a < a0->size(); ++a) k0[a] = a * n1 + i1;
  for (Elem a = 0; a < a1->size(); ++a) k1[a] = i0 * n1 + a;
  auto kap0 = make_morphism(a0, carrier, std::move(k0), "kappa0");
  auto kap1 = make_morphism(a1, carrier, std::move(k1), "kappa1");
  if (!kap0 || !kap1)
    fail(ErrKind::ConstructionFailed, "coprojection lost its certificates");
  p.kappa0 = std::move(*kap0);
  p.kappa1 = std::move(*kap1);
  return p;
}

ProductOpca power(const OpcaRef& a, int arity) {
  if (arity < 2) fail(ErrKind::Mismatch, "power needs arity >= 2");
  ProductOpca p = product(a, a);
  for (int i = 2; i < arity; ++i) p = product(p.carrier, a);
  return p;
}

OpcaMorphism tuple_morphism(const ProductOpca& p, const OpcaMorphism& f0,
                            const OpcaMorphism& f1) {
  if (f0.source != f1.source)
    fail(ErrKind::Mismatch, "tuple needs a shared source");
  if (f0.target != p.factor0 || f1.target != p.factor1)
    fail(ErrKind::Mismatch, "tuple targets do not match the product");
  std::vector<Elem> map(f0.map.size());
  for (size_t b = 0; b < map.size(); ++b)
    map[b] = p.pair(f0.map[b], f1.map[b]);
  OpcaMorphism out{f0.source, p.carrier, std::move(map),
                   p.pair(f0.tracker, f1.tracker),
                   p.pair(f0.order_realizer, f1.order_realizer),
                   "<" + f0.name + "," + f1.name + ">"};
  if (!tracker_valid(*out.source, *out.target, out.map, out.tracker) ||
      !order_realizer_valid(*out.source, *out.target, out.map,
                            out.order_realizer))
    fail(ErrKind::ConstructionFailed, "assembled tuple certificates fail");
  return out;
}

Elem cd_tuple_witness(const ProductOpca& p, const OpcaMorphism& f0,
                      const OpcaMorphism& f1, Elem n0, Elem n1) {
  const Opca& b = *f0.source;
  auto part = [&](const OpcaMorphism& f, Elem n, Elem proj_b) {
    // n'_i = lambda* x. n_i (u_i (t_i f_i(p_i) x))
    TermPtr body = tapp(
        tconst(n),
        tapp(tconst(f.order_realizer),
             tapp({tconst(f.tracker), tconst(f.map[proj_b]), tvar("x")})));
    return bracket_abstract(*f.target, body, {"x"});
  };
  Elem np0 = part(f0, n0, b.combinators().p0);
  Elem np1 = part(f1, n1, b.combinators().p1);
  Elem n = p.pair(np0, np1);
  OpcaMorphism tup = tuple_morphism(p, f0, f1);
  if (!cd_witness_valid(tup, n))
    fail(ErrKind::ConstructionFailed,
         "constructed cd witness fails for the tuple");
  return n;
}

CotupleResult cotuple_morphism(const ProductOpca& p, const OpcaMorphism& f0,
                               const OpcaMorphism& f1) {
  if (f0.target != f1.target)
    fail(ErrKind::Mismatch, "cotuple needs a shared target");
  if (f0.source != p.factor0 || f1.source != p.factor1)
    fail(ErrKind::Mismatch, "cotuple sources do not match the product");
  const OpcaRef& bref = f0.target;
  const Opca& b = *bref;
  const CombinatorSet& cb = b.combinators();

  std::vector<Elem> map(p.carrier->size());
  for (Elem x = 0; x < p.carrier->size(); ++x) {
    auto [x0, x1] = p.unpair(x);
    auto v = b.app_chain({cb.p, f0.map[x0], f1.map[x1]});
    if (!v)
      fail(ErrKind::ConstructionFailed, "p f0(a0) f1(a1) failed to evaluate");
    map[x] = *v;
  }

  // tracker: lambda* x y. p (t0 (p0 x) (p0 y)) (t1 (p1 x) (p1 y))
  auto pr = [&](Elem proj, const char* v) { return tapp(tconst(proj), tvar(v)); };
  TermPtr tr_body =
      tapp({tconst(cb.p),
            tapp({tconst(f0.tracker), pr(cb.p0, "x"), pr(cb.p0, "y")}),
            tapp({tconst(f1.tracker), pr(cb.p1, "x"), pr(cb.p1, "y")})});
  Elem tracker = bracket_abstract(b, tr_body, {"x", "y"});

  // order realizer: lambda* x. p (u0 (p0 x)) (u1 (p1 x))
  TermPtr or_body =
      tapp({tconst(cb.p), tapp(tconst(f0.order_realizer), pr(cb.p0, "x")),
            tapp(tconst(f1.order_realizer), pr(cb.p1, "x"))});
  Elem order_realizer = bracket_abstract(b, or_body, {"x"});

  OpcaMorphism f{p.carrier, bref, std::move(map), tracker, order_realizer,
                 "[" + f0.name + "," + f1.name + "]"};
  if (!tracker_valid(*f.source, b, f.map, tracker))
    fail(ErrKind::ConstructionFailed, "cotuple tracker fails");
  if (!order_realizer_valid(*f.source, b, f.map, order_realizer))
    fail(ErrKind::ConstructionFailed, "cotuple order realizer fails");

  // Iso realizers: p_i downwards, lambda* x. p x i upwards.
  Elem up = bracket_abstract(
      b, tapp({tconst(cb.p), tvar("x"), tconst(cb.i)}), {"x"});
  CotupleResult out{std::move(f), cb.p0, up, cb.p1, up};

  OpcaMorphism fk0 = compose(p.kappa0, out.morphism);
  OpcaMorphism fk1 = compose(p.kappa1, out.morphism);
  if (!ineq_realizer_valid(fk0, f0, out.iso_down0) ||
      !ineq_realizer_valid(f0, fk0, out.iso_up0) ||
      !ineq_realizer_valid(fk1, f1, out.iso_down1) ||
      !ineq_realizer_valid(f1, fk1, out.iso_up1))
    fail(ErrKind::ConstructionFailed, "cotuple iso realizers fail");
  return out;
}

Elem couniqueness_realizer(const ProductOpca& p, const OpcaMorphism& g,
                           const OpcaMorphism& g2, Elem s0, Elem s1) {
  if (g.source != g2.source || g.target != g2.target)
    fail(ErrKind::SourceMismatch, "uniqueness realizer needs parallel maps");
  if (g.source != p.carrier)
    fail(ErrKind::Mismatch, "morphisms must start at the product");
  OpcaMorphism gk0 = compose(p.kappa0, g), g2k0 = compose(p.kappa0, g2);
  OpcaMorphism gk1 = compose(p.kappa1, g), g2k1 = compose(p.kappa1, g2);
  if (!ineq_realizer_valid(gk0, g2k0, s0) ||
      !ineq_realizer_valid(gk1, g2k1, s1))
    fail(ErrKind::RealizerInvalid,
         "s_i do not realize g kappa_i <= g' kappa_i");

  const Opca& b = *g.target;
  const Opca& a0 = *p.factor0;
  const Opca& a1 = *p.factor1;
  const CombinatorSet& c0 = a0.combinators();
  const CombinatorSet& c1 = a1.combinators();

  // Constants of the product evaluated under g and g': (k,kbar), (i,ki),
  // (ki,i), where ki in each factor is that factor's kbar.
  Elem g2_k_kbar = g2.map[p.pair(a0.k(), c1.kbar)];
  Elem g_i_ki = g.map[p.pair(c0.i, c1.kbar)];
  Elem g_ki_i = g.map[p.pair(c0.kbar, c1.i)];

  // s = lambda* x. u'(t' (t' g'(k,kbar) (s0 (u (t g(i,ki) x))))
  //                    (s1 (u (t g(ki,i) x))))
  auto chase = [&](Elem si, Elem gc) {
    return tapp(tconst(si),
                tapp(tconst(g.order_realizer),
                     tapp({tconst(g.tracker), tconst(gc), tvar("x")})));
  };
  TermPtr body = tapp(
      tconst(g2.order_realizer),
      tapp({tconst(g2.tracker),
            tapp({tconst(g2.tracker), tconst(g2_k_kbar), chase(s0, g_i_ki)}),
            chase(s1, g_ki_i)}));
  Elem s = bracket_abstract(b, body, {"x"});
  if (!ineq_realizer_valid(g, g2, s))
    fail(ErrKind::ConstructionFailed,
         "constructed uniqueness realizer fails g <= g'");
  return s;
}

BiproductCertificate check_biproduct(const OpcaRef& a0, const OpcaRef& a1,
                                     const Budget& budget) {
  ProductOpca p = product(a0, a1);
  BiproductCertificate out{};

  OpcaMorphism pk00 = compose(p.kappa0, p.pi0);
  OpcaMorphism pk11 = compose(p.kappa1, p.pi1);
  OpcaMorphism id0 = identity_morphism(a0), id1 = identity_morphism(a1);
  auto d00 = find_inequality_realizer(pk00, id0);
  auto u00 = find_inequality_realizer(id0, pk00);
  auto d11 = find_inequality_realizer(pk11, id1);
  auto u11 = find_inequality_realizer(id1, pk11);
  if (!d00 || !u00 || !d11 || !u11)
    fail(ErrKind::ConstructionFailed, "pi_i kappa_i is not isomorphic to id");
  out.iso00_down = d00->realizer;
  out.iso00_up = u00->realizer;
  out.iso11_down = d11->realizer;
  out.iso11_up = u11->realizer;

  out.zero01 = is_zero_morphism(compose(p.kappa0, p.pi1), budget);
  out.zero10 = is_zero_morphism(compose(p.kappa1, p.pi0), budget);
  if (!out.zero01.is_zero || !out.zero10.is_zero)
    fail(ErrKind::ConstructionFailed, "pi_j kappa_i is not a zero morphism");
  return out;
}

DisjointnessWitness disjointness_certificate(const ProductOpca& p,
                                             const OpcaMorphism& f0,
                                             const OpcaMorphism& f1, Elem s) {
  if (f0.source != f1.source)
    fail(ErrKind::SourceMismatch, "legs need a shared source");
  OpcaMorphism k0f0 = compose(f0, p.kappa0);
  OpcaMorphism k1f1 = compose(f1, p.kappa1);
  if (!ineq_realizer_valid(k0f0, k1f1, s))
    fail(ErrKind::RealizerInvalid, "s does not realize kappa0 f0 <= kappa1 f1");

  // s = (s0,s1); s1 i1 bounds f1's image from below.
  auto [s0, s1] = p.unpair(s);
  (void)s0;
  const Opca& a1 = *p.factor1;
  auto w1 = a1.app(s1, a1.combinators().i);
  if (!w1) fail(ErrKind::ConstructionFailed, "s1 i failed to evaluate");
  for (Elem bb = 0; bb < f1.source->size(); ++bb)
    if (!a1.le(*w1, f1.map[bb]))
      fail(ErrKind::ConstructionFailed, "s1 i is not below the image of f1");

  // The symmetric witness needs the converse realizer, searched here.
  auto rev = find_inequality_realizer(k1f1, k0f0);
  if (!rev)
    fail(ErrKind::RealizerInvalid,
         "kappa1 f1 <= kappa0 f0 has no realizer; hypothesis needs the iso");
  auto [r0, r1] = p.unpair(rev->realizer);
  (void)r1;
  const Opca& a0 = *p.factor0;
  auto w0 = a0.app(r0, a0.combinators().i);
  if (!w0) fail(ErrKind::ConstructionFailed, "s0' i failed to evaluate");
  for (Elem bb = 0; bb < f0.source->size(); ++bb)
    if (!a0.le(*w0, f0.map[bb]))
      fail(ErrKind::ConstructionFailed, "s0' i is not below the image of f0");

  return DisjointnessWitness{*w0, *w1, rev->realizer};
}

DisjointnessWitness dual_disjointness_certificate(const ProductOpca& p,
                                                  const OpcaMorphism& f0,
                                                  const OpcaMorphism& f1,
                                                  Elem s) {
  if (f0.target != f1.target)
    fail(ErrKind::SourceMismatch, "legs need a shared target");
  OpcaMorphism f0p0 = compose(p.pi0, f0);
  OpcaMorphism f1p1 = compose(p.pi1, f1);
  if (!ineq_realizer_valid(f0p0, f1p1, s))
    fail(ErrKind::RealizerInvalid, "s does not realize f0 pi0 <= f1 pi1");

  const Opca& b = *f0.target;
  auto w1 = b.app(s, f0.map[p.factor0->combinators().i]);
  if (!w1) fail(ErrKind::ConstructionFailed, "s f0(i) failed to evaluate");
  for (Elem a1 = 0; a1 < f1.source->size(); ++a1)
    if (!b.le(*w1, f1.map[a1]))
      fail(ErrKind::ConstructionFailed, "s f0(i) is not below f1's image");

  auto rev = find_inequality_realizer(f1p1, f0p0);
  if (!rev)
    fail(ErrKind::RealizerInvalid,
         "f1 pi1 <= f0 pi0 has no realizer; hypothesis needs the iso");
  auto w0 = b.app(rev->realizer, f1.map[p.factor1->combinators().i]);
  if (!w0) fail(ErrKind::ConstructionFailed, "s' f1(i) failed to evaluate");
  for (Elem a0 = 0; a0 < f0.source->size(); ++a0)
    if (!b.le(*w0, f0.map[a0]))
      fail(ErrKind::ConstructionFailed, "s' f1(i) is not below f0's image");

  return DisjointnessWitness{*w0, *w1, rev->realizer};
}

AdjCoproductResult adj_coproduct(const AdjointPair& f, const AdjointPair& g) {
  // f: (f* : C -> A, f_* : A -> C), g: (g* : C -> B, g_* : B -> C).
  if (f.left.source != g.left.source)
    fail(ErrKind::Mismatch, "adjoint pairs must share the apex");
  const OpcaRef& c = f.left.source;
  ProductOpca p = product(f.left.target, g.left.target);

  OpcaMorphism hstar = tuple_morphism(p, f.left, g.left);
  CotupleResult hlow = cotuple_morphism(p, f.right, g.right);

  // unit: lambda* x. p (r x) (s x) realizes id_C <= h_* h*.
  const Opca& cc = *c;
  TermPtr body = tapp({tconst(cc.combinators().p),
                       tapp(tconst(f.unit_realizer), tvar("x")),
                       tapp(tconst(g.unit_realizer), tvar("x"))});
  Elem unit = bracket_abstract(cc, body, {"x"});
  OpcaMorphism hh = compose(hstar, hlow.morphism);
  if (!ineq_realizer_valid(identity_morphism(c), hh, unit))
    fail(ErrKind::ConstructionFailed, "unit realizer fails id <= h_* h*");

  OpcaMorphism hh2 = compose(hlow.morphism, hstar);
  auto counit =
      find_inequality_realizer(hh2, identity_morphism(p.carrier));
  if (!counit)
    fail(ErrKind::ConstructionFailed, "h* h_* <= id has no realizer");

  AdjCoproductResult out{std::move(p),
                         AdjointPair{std::move(hstar), std::move(hlow.morphism),
                                     unit, counit->realizer}};
  return out;
}

std::optional<Elem> diagonal_cd_probe(const OpcaRef& a, int arity) {
  ProductOpca p = power(a, arity);
  // Left-nested pairing ((x,x),x)...; index arithmetic matches the carrier
  // layout of `power`.
  std::vector<Elem> diag(a->size());
  for (Elem x = 0; x < a->size(); ++x) {
    Elem e = pair_index(a->order(), x, x);
    for (int i = 2; i < arity; ++i) e = e * a->size() + x;
    diag[x] = e;
  }
  auto m = make_morphism(a, p.carrier, std::move(diag), "diag");
  if (!m) return std::nullopt;
  return check_cd(*m);
}

}  // namespace opca
