#include "opca/downset_monad.hpp"

#include <algorithm>

namespace opca {

std::optional<Bits> apply_downsets(const Opca& base, const Bits& alpha,
                                   const Bits& beta) {
  Bits out(base.size());
  bool defined = true;
  alpha.for_each([&](Elem a) {
    if (!defined) return;
    beta.for_each([&](Elem b) {
      if (!defined) return;
      Elem v = base.opas().raw_app(a, b);
      if (v == kUndef) {
        defined = false;
        return;
      }
      out |= base.order().below(v);
    });
  });
  if (!defined) return std::nullopt;
  return out;
}

std::optional<Bits> elem_apply_downset(const Opca& base, Elem r,
                                       const Bits& alpha) {
  Bits out(base.size());
  bool defined = true;
  alpha.for_each([&](Elem a) {
    if (!defined) return;
    Elem v = base.opas().raw_app(r, a);
    if (v == kUndef) {
      defined = false;
      return;
    }
    out |= base.order().below(v);
  });
  if (!defined) return std::nullopt;
  return out;
}

Elem DownsetOpca::principal(Elem a) const {
  return index_of(base->order().below(a));
}

namespace {

std::string downset_name(const FinPoset& base, const Bits& mask) {
  std::string s = "{";
  bool first = true;
  mask.for_each([&](Elem e) {
    if (!first) s += ",";
    s += base.name_of(e);
    first = false;
  });
  return s + "}";
}

}  // namespace

DownsetOpcaRef build_T(const OpcaRef& a, const Budget& budget) {
  auto masks = nonempty_downset_masks(a->order(), budget.t_carrier_limit);
  int n = int(masks.size());

  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& m : masks) names.push_back(downset_name(a->order(), m));
  PosetRef order = FinPoset::make_from_relation(
      "T(" + a->name() + ")", std::move(names),
      [&](int x, int y) { return masks[x].subset_of(masks[y]); });

  auto t = std::make_shared<DownsetOpca>();
  t->base = a;
  t->member = std::move(masks);
  for (int i = 0; i < n; ++i) t->index[t->member[i]] = i;

  AppTable table(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto v = apply_downsets(*a, t->member[x], t->member[y]);
      table.at(x, y) = v ? t->index.at(*v) : kUndef;
    }
  Elem k = t->index.at(a->order().below(a->k()));
  Elem s = t->index.at(a->order().below(a->s()));
  t->carrier = Opca::make(Opas::validate(order, std::move(table)),
                          order->name(), std::make_pair(k, s));
  return t;
}

OpcaMorphism T_on_morphism(const DownsetOpcaRef& ta, const DownsetOpcaRef& tb,
                           const OpcaMorphism& f) {
  if (f.source != ta->base || f.target != tb->base)
    fail(ErrKind::Mismatch, "T(f) endpoints do not match the downset OPCAs");
  std::vector<Elem> map(ta->carrier->size());
  for (Elem x = 0; x < ta->carrier->size(); ++x) {
    Bits img(tb->base->size());
    ta->member[x].for_each(
        [&](Elem e) { img |= tb->base->order().below(f.map[e]); });
    map[x] = tb->index.at(img);
  }
  auto m = make_morphism(ta->carrier, tb->carrier, std::move(map),
                         "T(" + f.name + ")");
  if (!m)
    fail(ErrKind::ConstructionFailed, "T(f) lost its certificates");
  return *m;
}

MonadStructure monad_structure(const OpcaRef& a, const Budget& budget) {
  MonadStructure out;
  out.ta = build_T(a, budget);
  Budget tt = budget;
  tt.t_carrier_limit = budget.tt_carrier_limit;
  out.tta = build_T(out.ta->carrier, tt);

  std::vector<Elem> dmap(a->size());
  for (Elem x = 0; x < a->size(); ++x) dmap[x] = out.ta->principal(x);
  auto d = make_morphism(a, out.ta->carrier, std::move(dmap),
                         "delta_" + a->name());
  if (!d) fail(ErrKind::ConstructionFailed, "delta lost its certificates");
  out.delta = std::move(*d);

  std::vector<Elem> umap(out.tta->carrier->size());
  for (Elem x = 0; x < out.tta->carrier->size(); ++x) {
    Bits u(a->size());
    out.tta->member[x].for_each([&](Elem t) { u |= out.ta->member[t]; });
    umap[x] = out.ta->index.at(u);
  }
  auto u = make_morphism(out.tta->carrier, out.ta->carrier, std::move(umap),
                         "union_" + a->name());
  if (!u) fail(ErrKind::ConstructionFailed, "union lost its certificates");
  out.big_union = std::move(*u);
  return out;
}

MonadLawCertificate monad_law_check(const OpcaRef& a, const Budget& budget) {
  MonadStructure m = monad_structure(a, budget);
  Budget tb = budget;
  tb.t_carrier_limit = budget.downset_limit;
  DownsetOpcaRef ttta = build_T(m.tta->carrier, tb);

  MonadLawCertificate cert{};
  cert.tta_size = uint64_t(m.tta->carrier->size());
  cert.ttta_size = uint64_t(ttta->carrier->size());

  // delta_TA : TA -> TTA and union_TA : TTTA -> TTA, built against the
  // same TTA instance as m.big_union so the composites type-check.
  std::vector<Elem> dmap(m.ta->carrier->size());
  for (Elem x = 0; x < m.ta->carrier->size(); ++x)
    dmap[x] = m.tta->principal(x);
  auto delta_ta = make_morphism(m.ta->carrier, m.tta->carrier,
                                std::move(dmap), "delta_T");
  std::vector<Elem> umap(ttta->carrier->size());
  for (Elem x = 0; x < ttta->carrier->size(); ++x) {
    Bits acc(m.ta->carrier->size());
    ttta->member[x].for_each([&](Elem t) { acc |= m.tta->member[t]; });
    umap[x] = m.tta->index.at(acc);
  }
  auto union_ta = make_morphism(ttta->carrier, m.tta->carrier,
                                std::move(umap), "union_T");
  if (!delta_ta || !union_ta)
    fail(ErrKind::ConstructionFailed, "monad data lost its certificates");

  OpcaMorphism id_ta = identity_morphism(m.ta->carrier);

  auto require_iso = [&](const OpcaMorphism& f, const OpcaMorphism& g,
                         Elem& down, Elem& up, const char* what) {
    auto d = find_inequality_realizer(f, g);
    auto u = find_inequality_realizer(g, f);
    if (!d || !u)
      fail(ErrKind::ConstructionFailed,
           std::string("monad law '") + what + "' fails for " + a->name());
    down = d->realizer;
    up = u->realizer;
  };

  // union o delta_TA ~ id_TA
  OpcaMorphism left = compose(*delta_ta, m.big_union);
  require_iso(left, id_ta, cert.unit_left_down, cert.unit_left_up,
              "union o delta_T");

  // union o T(delta_A) ~ id_TA
  OpcaMorphism tdelta = T_on_morphism(m.ta, m.tta, m.delta);
  OpcaMorphism right = compose(tdelta, m.big_union);
  require_iso(right, id_ta, cert.unit_right_down, cert.unit_right_up,
              "union o T(delta)");

  // union o union_TA ~ union o T(union), on TTTA
  OpcaMorphism lhs = compose(*union_ta, m.big_union);
  OpcaMorphism tunion = T_on_morphism(ttta, m.tta, m.big_union);
  OpcaMorphism rhs = compose(tunion, m.big_union);
  require_iso(lhs, rhs, cert.assoc_down, cert.assoc_up, "associativity");
  return cert;
}

// ---------------------------------------------------------------------------
// Applicative morphisms

bool applicative_tracker_valid(const ApplicativeMorphism& f, Elem r) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y) {
      auto xy = a.app(x, y);
      if (!xy) continue;
      auto m1 = elem_apply_downset(b, r, f.map[x]);
      if (!m1) return false;
      auto m2 = apply_downsets(b, *m1, f.map[y]);
      if (!m2 || !m2->subset_of(f.map[*xy])) return false;
    }
  return true;
}

bool applicative_order_realizer_valid(const ApplicativeMorphism& f, Elem u) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  for (Elem x = 0; x < a.size(); ++x) {
    bool ok = true;
    a.order().below(x).for_each([&](Elem x2) {
      if (!ok) return;
      auto m = elem_apply_downset(b, u, f.map[x2]);
      ok = m && m->subset_of(f.map[x]);
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<ApplicativeMorphism> make_applicative(const OpcaRef& source,
                                                    const OpcaRef& target,
                                                    std::vector<Bits> map,
                                                    std::string name) {
  if (int(map.size()) != source->size())
    fail(ErrKind::Mismatch, "map size does not match source carrier");
  for (const auto& m : map) {
    if (m.size() != target->size())
      fail(ErrKind::UnknownElement, "downset mask does not match target");
    if (m.none())
      fail(ErrKind::ValidationError, "applicative value must be nonempty");
    if (!is_downward_closed(target->order(), m))
      fail(ErrKind::ValidationError, "applicative value must be a downset");
  }
  ApplicativeMorphism f{source, target, std::move(map), kUndef, kUndef,
                        std::move(name)};
  for (Elem r = 0; r < target->size(); ++r)
    if (applicative_tracker_valid(f, r)) {
      f.tracker = r;
      break;
    }
  if (f.tracker == kUndef) return std::nullopt;
  for (Elem u = 0; u < target->size(); ++u)
    if (applicative_order_realizer_valid(f, u)) {
      f.order_realizer = u;
      break;
    }
  if (f.order_realizer == kUndef) return std::nullopt;
  return f;
}

ApplicativeMorphism delta_morphism(const OpcaRef& a) {
  std::vector<Bits> map(a->size());
  for (Elem x = 0; x < a->size(); ++x) map[x] = a->order().below(x);
  auto f = make_applicative(a, a, std::move(map), "delta_" + a->name());
  if (!f) fail(ErrKind::ConstructionFailed, "delta is not applicative");
  return *f;
}

ApplicativeMorphism to_applicative(const OpcaMorphism& f) {
  std::vector<Bits> map(f.source->size());
  for (Elem x = 0; x < f.source->size(); ++x)
    map[x] = f.target->order().below(f.map[x]);
  auto g = make_applicative(f.source, f.target, std::move(map), f.name);
  if (!g)
    fail(ErrKind::ConstructionFailed,
         "projective image of a morphism is not applicative");
  return *g;
}

bool applicative_ineq_valid(const ApplicativeMorphism& f,
                            const ApplicativeMorphism& g, Elem s) {
  for (Elem x = 0; x < f.source->size(); ++x) {
    auto m = elem_apply_downset(*f.target, s, f.map[x]);
    if (!m || !m->subset_of(g.map[x])) return false;
  }
  return true;
}

std::optional<Elem> find_applicative_inequality(const ApplicativeMorphism& f,
                                                const ApplicativeMorphism& g) {
  if (f.source != g.source || f.target != g.target)
    fail(ErrKind::SourceMismatch, "inequality requires parallel arrows");
  for (Elem s = 0; s < f.target->size(); ++s)
    if (applicative_ineq_valid(f, g, s)) return s;
  return std::nullopt;
}

bool applicatives_isomorphic(const ApplicativeMorphism& f,
                             const ApplicativeMorphism& g) {
  return find_applicative_inequality(f, g) &&
         find_applicative_inequality(g, f);
}

ApplicativeMorphism applicative_compose(const ApplicativeMorphism& f,
                                        const ApplicativeMorphism& g) {
  if (f.target != g.source)
    fail(ErrKind::Mismatch, "Kleisli composition endpoints do not match");
  std::vector<Bits> map(f.source->size());
  for (Elem x = 0; x < f.source->size(); ++x) {
    Bits acc(g.target->size());
    f.map[x].for_each([&](Elem b) { acc |= g.map[b]; });
    map[x] = acc;
  }
  auto h = make_applicative(f.source, g.target, std::move(map),
                            g.name + " . " + f.name);
  if (!h)
    fail(ErrKind::ConstructionFailed,
         "Kleisli composite lost its certificates");
  return *h;
}

ApplicativeMorphism order_normalize(const ApplicativeMorphism& f) {
  std::vector<Bits> map(f.source->size());
  for (Elem x = 0; x < f.source->size(); ++x) {
    Bits acc(f.target->size());
    f.source->order().below(x).for_each([&](Elem x2) { acc |= f.map[x2]; });
    map[x] = acc;
  }
  auto g = make_applicative(f.source, f.target, std::move(map),
                            f.name + "'");
  if (!g)
    fail(ErrKind::ConstructionFailed,
         "order normalization lost its certificates");
  return *g;
}

OpcaMorphism tilde_lift(const ApplicativeMorphism& f,
                        const DownsetOpcaRef& ta, const DownsetOpcaRef& tb) {
  if (ta->base != f.source || tb->base != f.target)
    fail(ErrKind::Mismatch, "tilde lift endpoints do not match");
  std::vector<Elem> map(ta->carrier->size());
  for (Elem x = 0; x < ta->carrier->size(); ++x) {
    Bits acc(f.target->size());
    ta->member[x].for_each([&](Elem e) { acc |= f.map[e]; });
    map[x] = tb->index.at(acc);
  }
  auto m = make_morphism(ta->carrier, tb->carrier, std::move(map),
                         "tilde(" + f.name + ")");
  if (!m) fail(ErrKind::ConstructionFailed, "tilde lift lost its certificates");

  // tilde(f) o delta_A ~ f
  ApplicativeMorphism composite{
      f.source, f.target, {}, f.tracker, f.order_realizer, ""};
  composite.map.resize(f.source->size());
  for (Elem x = 0; x < f.source->size(); ++x)
    composite.map[x] = tb->member[m->map[ta->principal(x)]];
  if (!find_applicative_inequality(composite, f) ||
      !find_applicative_inequality(f, composite))
    fail(ErrKind::ConstructionFailed, "tilde(f) o delta is not isomorphic to f");
  return *m;
}

std::optional<ProjectivityResult> projectivity_search(
    const ApplicativeMorphism& f, const Budget& budget) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  double count = 1;
  for (int i = 0; i < a.size(); ++i) count *= b.size();
  if (count > double(budget.hom_sweep_limit))
    fail(ErrKind::SizeLimit, "projectivity sweep exceeds the budget");

  std::vector<Elem> f0(a.size(), 0);
  uint64_t space = uint64_t(count);
  while (true) {
    ApplicativeMorphism cand{f.source, f.target, {}, 0, 0, ""};
    cand.map.resize(a.size());
    for (Elem x = 0; x < a.size(); ++x)
      cand.map[x] = b.order().below(f0[x]);
    auto down = find_applicative_inequality(cand, f);
    if (down) {
      auto up = find_applicative_inequality(f, cand);
      if (up) return ProjectivityResult{f0, *down, *up, space};
    }
    int i = 0;
    while (i < a.size() && ++f0[i] == b.size()) f0[i++] = 0;
    if (i == a.size()) break;
  }
  return std::nullopt;
}

bool applicative_cd_witness_valid(const ApplicativeMorphism& f, Elem n) {
  const Opca& b = *f.target;
  for (Elem s = 0; s < b.size(); ++s) {
    bool found = false;
    for (Elem r = 0; r < f.source->size() && !found; ++r) {
      auto m = elem_apply_downset(b, n, f.map[r]);
      found = m && m->subset_of(b.order().below(s));
    }
    if (!found) return false;
  }
  return true;
}

std::optional<Elem> applicative_cd(const ApplicativeMorphism& f) {
  for (Elem n = 0; n < f.target->size(); ++n)
    if (applicative_cd_witness_valid(f, n)) return n;
  return std::nullopt;
}

RightAdjointResult right_adjoint_construct(const OpcaMorphism& f, Elem m) {
  const OpcaRef& aref = f.source;
  const OpcaRef& bref = f.target;
  const Opca& a = *aref;
  const Opca& b = *bref;
  if (!cdm_witness_valid(f, m))
    fail(ErrKind::RealizerInvalid, "m does not satisfy the cdm formula");

  // g(b) = down-closure of {a : m f(a) <= b}; nonempty by cd.
  std::vector<Bits> gmap(b.size());
  for (Elem y = 0; y < b.size(); ++y) {
    Bits seed(a.size());
    for (Elem x = 0; x < a.size(); ++x) {
      auto v = b.app(m, f.map[x]);
      if (v && b.le(*v, y)) seed.set(x);
    }
    if (seed.none())
      fail(ErrKind::ConstructionFailed,
           "g(b) is empty; m does not witness cd");
    gmap[y] = downset_closure_mask(a.order(), seed);
  }

  ApplicativeMorphism g{bref, aref, std::move(gmap), kUndef, kUndef,
                        "radj(" + f.name + ")"};

  // Tracker q = lambda* x y. r (p x y) for the cdm r at
  // s = lambda* x. m (u (t f(p0) x)) (m (u (t f(p1) x))).
  const CombinatorSet& ca = a.combinators();
  auto guard = [&](Elem proj) {
    return tapp(tconst(f.order_realizer),
                tapp({tconst(f.tracker), tconst(f.map[proj]), tvar("x")}));
  };
  TermPtr s_body = tapp(
      {tconst(m), guard(ca.p0), tapp(tconst(m), guard(ca.p1))});
  Elem s_elem = bracket_abstract(b, s_body, {"x"});
  auto r = cdm_r_for(f, m, s_elem);
  if (!r)
    fail(ErrKind::ConstructionFailed, "no cdm r for the tracker expression");
  TermPtr q_body =
      tapp(tconst(*r), tapp({tconst(ca.p), tvar("x"), tvar("y")}));
  Elem q = bracket_abstract(a, q_body, {"x", "y"});
  if (!applicative_tracker_valid(g, q))
    fail(ErrKind::ConstructionFailed, "proof tracker q fails for g");
  g.tracker = q;
  if (!applicative_order_realizer_valid(g, ca.i))
    fail(ErrKind::ConstructionFailed,
         "identity does not realize g's order preservation");
  g.order_realizer = ca.i;

  // Unit: the cdm r at s = i_B realizes id_A <= g (delta f).
  auto r_unit = cdm_r_for(f, m, b.combinators().i);
  if (!r_unit)
    fail(ErrKind::ConstructionFailed, "no cdm r at s = i");
  ApplicativeMorphism fprime = to_applicative(f);
  ApplicativeMorphism gf = applicative_compose(fprime, g);
  if (!applicative_ineq_valid(delta_morphism(aref), gf, *r_unit))
    fail(ErrKind::ConstructionFailed, "unit realizer fails id <= g f'");

  // Counit: m realizes f' g <= id_B.
  ApplicativeMorphism fg = applicative_compose(g, fprime);
  if (!applicative_ineq_valid(fg, delta_morphism(bref), m))
    fail(ErrKind::ConstructionFailed, "counit realizer fails f' g <= id");

  return RightAdjointResult{std::move(g), q, *r_unit, m};
}

ProjectiveCdResult adjoint_to_projective_cd(const ApplicativeMorphism& f,
                                            const ApplicativeMorphism& g,
                                            Elem unit_r, Elem counit_s) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  if (f.target != g.source || f.source != g.target)
    fail(ErrKind::Mismatch, "adjunction endpoints do not match");
  ApplicativeMorphism gf = applicative_compose(f, g);
  ApplicativeMorphism fg = applicative_compose(g, f);
  if (!applicative_ineq_valid(delta_morphism(f.source), gf, unit_r))
    fail(ErrKind::RealizerInvalid, "unit realizer fails id <= g f");
  if (!applicative_ineq_valid(fg, delta_morphism(f.target), counit_s))
    fail(ErrKind::RealizerInvalid, "counit realizer fails f g <= id");

  // f0(a): the first b in f(a) with (unit_r a) in g(b); canonical-order
  // selection replaces the proof's appeal to choice.
  std::vector<Elem> f0(a.size(), kUndef);
  for (Elem x = 0; x < a.size(); ++x) {
    auto rx = a.app(unit_r, x);
    if (!rx)
      fail(ErrKind::ExtractionFailed, "unit realizer is undefined at a point");
    bool found = false;
    f.map[x].for_each([&](Elem y) {
      if (found || !g.map[y].test(*rx)) return;
      f0[x] = y;
      found = true;
    });
    if (!found)
      fail(ErrKind::ExtractionFailed, "no image point with r a in g(f0(a))");
  }

  // delta f0 <= f via the identity combinator; f <= delta f0 via
  // s' = lambda* x. s (t r' x) with r' drawn from f(unit_r).
  ApplicativeMorphism proj{f.source, f.target, {}, f.tracker,
                           f.order_realizer, ""};
  proj.map.resize(a.size());
  for (Elem x = 0; x < a.size(); ++x)
    proj.map[x] = b.order().below(f0[x]);
  Elem down = b.combinators().i;
  if (!applicative_ineq_valid(proj, f, down))
    fail(ErrKind::ExtractionFailed, "identity fails delta f0 <= f");
  Elem rprime = f.map[unit_r].lowest();
  TermPtr body = tapp(
      tconst(counit_s),
      tapp({tconst(f.tracker), tconst(rprime), tvar("x")}));
  Elem up = bracket_abstract(b, body, {"x"});
  if (!applicative_ineq_valid(f, proj, up))
    fail(ErrKind::ExtractionFailed, "proof realizer fails f <= delta f0");

  auto n = applicative_cd(f);
  if (!n)
    fail(ErrKind::ExtractionFailed, "left adjoint admits no cd witness");
  return ProjectiveCdResult{std::move(f0), down, up, *n};
}

PcaCotupleResult pca_cotuple(const ProductOpca& p,
                             const ApplicativeMorphism& f0,
                             const ApplicativeMorphism& f1) {
  if (f0.target != f1.target)
    fail(ErrKind::Mismatch, "cotuple needs a shared target");
  if (f0.source != p.factor0 || f1.source != p.factor1)
    fail(ErrKind::Mismatch, "cotuple sources do not match the product");
  const Opca& b = *f0.target;
  Elem pb = b.combinators().p;

  std::vector<Bits> map(p.carrier->size());
  for (Elem x = 0; x < p.carrier->size(); ++x) {
    auto [x0, x1] = p.unpair(x);
    Bits acc(b.size());
    bool ok = true;
    f0.map[x0].for_each([&](Elem b0) {
      if (!ok) return;
      f1.map[x1].for_each([&](Elem b1) {
        if (!ok) return;
        auto v = b.app_chain({pb, b0, b1});
        if (!v) {
          ok = false;
          return;
        }
        acc |= b.order().below(*v);
      });
    });
    if (!ok || acc.none())
      fail(ErrKind::ConstructionFailed, "p b0 b1 failed to evaluate");
    map[x] = acc;
  }
  auto h = make_applicative(p.carrier, f0.target, std::move(map),
                            "[" + f0.name + "," + f1.name + "]");
  if (!h)
    fail(ErrKind::ConstructionFailed, "PCA cotuple lost its certificates");

  PcaCotupleResult out{std::move(*h), kUndef, kUndef, kUndef, kUndef};
  ApplicativeMorphism hk0 =
      applicative_compose(to_applicative(p.kappa0), out.morphism);
  ApplicativeMorphism hk1 =
      applicative_compose(to_applicative(p.kappa1), out.morphism);
  auto d0 = find_applicative_inequality(hk0, f0);
  auto u0 = find_applicative_inequality(f0, hk0);
  auto d1 = find_applicative_inequality(hk1, f1);
  auto u1 = find_applicative_inequality(f1, hk1);
  if (!d0 || !u0 || !d1 || !u1)
    fail(ErrKind::ConstructionFailed, "cotuple iso laws fail");
  out.iso_down0 = *d0;
  out.iso_up0 = *u0;
  out.iso_down1 = *d1;
  out.iso_up1 = *u1;
  return out;
}

HMapsResult h_maps(const OpcaRef& a0, const OpcaRef& a1,
                   const Budget& budget) {
  HMapsResult out{};
  out.base_prod = product(a0, a1);
  DownsetOpcaRef t0 = build_T(a0, budget);
  DownsetOpcaRef t1 = build_T(a1, budget);
  out.tprod = product(t0->carrier, t1->carrier);
  Budget pb = budget;
  pb.t_carrier_limit = budget.tt_carrier_limit;
  out.tp = build_T(out.base_prod.carrier, pb);

  int n1 = a1->size();
  // h_*: (alpha0, alpha1) -> alpha0 x alpha1
  std::vector<Elem> low(out.tprod.carrier->size());
  for (Elem x = 0; x < out.tprod.carrier->size(); ++x) {
    auto [i0, i1] = out.tprod.unpair(x);
    Bits prod_mask(out.base_prod.carrier->size());
    t0->member[i0].for_each([&](Elem e0) {
      t1->member[i1].for_each(
          [&](Elem e1) { prod_mask.set(e0 * n1 + e1); });
    });
    low[x] = out.tp->index.at(prod_mask);
  }
  auto hlow = make_morphism(out.tprod.carrier, out.tp->carrier,
                            std::move(low), "h_*");
  if (!hlow) fail(ErrKind::ConstructionFailed, "h_* lost its certificates");
  out.h_low = std::move(*hlow);

  // h*: alpha -> (T pi0 (alpha), T pi1 (alpha))
  std::vector<Elem> up(out.tp->carrier->size());
  for (Elem x = 0; x < out.tp->carrier->size(); ++x) {
    Bits m0(a0->size()), m1(a1->size());
    out.tp->member[x].for_each([&](Elem e) {
      m0.set(e / n1);
      m1.set(e % n1);
    });
    up[x] = out.tprod.pair(t0->index.at(m0), t1->index.at(m1));
  }
  auto hup = make_morphism(out.tp->carrier, out.tprod.carrier, std::move(up),
                           "h*");
  if (!hup) fail(ErrKind::ConstructionFailed, "h* lost its certificates");
  out.h_up = std::move(*hup);

  // h* o h_* is the identity on the nose.
  out.round_trip_identity = true;
  for (Elem x = 0; x < out.tprod.carrier->size(); ++x)
    if (out.h_up.map[out.h_low.map[x]] != x) out.round_trip_identity = false;

  auto adj = check_adjunction(out.h_up, out.h_low);
  if (!adj)
    fail(ErrKind::ConstructionFailed, "h* -| h_* adjunction fails");
  out.unit_realizer = adj->unit_realizer;
  out.counit_realizer = adj->counit_realizer;
  return out;
}

ApplicativeMorphism maximal_mediator(const ProductOpca& p,
                                     const ApplicativeMorphism& f0,
                                     const ApplicativeMorphism& f1) {
  if (f0.source != f1.source)
    fail(ErrKind::SourceMismatch, "mediator needs a shared source");
  if (f0.target != p.factor0 || f1.target != p.factor1)
    fail(ErrKind::Mismatch, "mediator targets do not match the product");
  int n1 = p.factor1->size();
  std::vector<Bits> map(f0.source->size());
  for (Elem x = 0; x < f0.source->size(); ++x) {
    Bits acc(p.carrier->size());
    f0.map[x].for_each([&](Elem e0) {
      f1.map[x].for_each([&](Elem e1) { acc.set(e0 * n1 + e1); });
    });
    map[x] = acc;
  }
  auto h = make_applicative(f0.source, p.carrier, std::move(map),
                            "med<" + f0.name + "," + f1.name + ">");
  if (!h)
    fail(ErrKind::ConstructionFailed, "mediator lost its certificates");
  return *h;
}

NoprodCertificate noprod_witness(const PosetRef& p0, const PosetRef& p1) {
  if (p0->least())
    fail(ErrKind::NotApplicable,
         "'" + p0->name() + "' has a least element " +
             p0->name_of(*p0->least()));
  if (p1->least())
    fail(ErrKind::NotApplicable,
         "'" + p1->name() + "' has a least element " +
             p1->name_of(*p1->least()));

  NoprodCertificate out{};
  out.prod = product_poset(p0, p1);
  int n1 = p1->size();
  Bits inter = out.prod->full_mask();
  out.all_full_projections = true;
  for (Elem a0 = 0; a0 < p0->size(); ++a0)
    for (Elem a1 = 0; a1 < p1->size(); ++a1) {
      Bits alpha(out.prod->size());
      for (Elem b0 = 0; b0 < p0->size(); ++b0)
        for (Elem b1 = 0; b1 < n1; ++b1)
          if (!p0->le(a0, b0) || !p1->le(a1, b1)) alpha.set(b0 * n1 + b1);
      if (alpha.none() || !is_downward_closed(*out.prod, alpha))
        fail(ErrKind::ConstructionFailed,
             "alpha is not a nonempty downset");
      Bits m0(p0->size()), m1(p1->size());
      alpha.for_each([&](Elem e) {
        m0.set(e / n1);
        m1.set(e % n1);
      });
      if (m0.count() != p0->size() || m1.count() != p1->size())
        out.all_full_projections = false;
      inter &= alpha;
      out.alphas.push_back(std::move(alpha));
    }
  out.intersection_empty = inter.none();
  return out;
}

std::optional<AdjointPair> hstar_left_adjoint_search(const OpcaRef& a0,
                                                     const OpcaRef& a1,
                                                     const Budget& budget) {
  HMapsResult h = h_maps(a0, a1, budget);
  auto candidates =
      enumerate_morphisms(h.tprod.carrier, h.tp->carrier, budget);
  for (const auto& l : candidates)
    if (auto adj = check_adjunction(l, h.h_up)) return adj;
  return std::nullopt;
}

std::vector<ApplicativeMorphism> enumerate_applicatives(const OpcaRef& a,
                                                        const OpcaRef& b,
                                                        const Budget& budget) {
  DownsetOpcaRef tb = build_T(b, budget);
  double count = 1;
  for (int i = 0; i < a->size(); ++i) count *= tb->carrier->size();
  if (count > double(budget.hom_sweep_limit))
    fail(ErrKind::SizeLimit, "applicative sweep exceeds the budget");

  std::vector<ApplicativeMorphism> out;
  std::vector<int> idx(a->size(), 0);
  while (true) {
    std::vector<Bits> map(a->size());
    for (Elem x = 0; x < a->size(); ++x) map[x] = tb->member[idx[x]];
    if (auto f = make_applicative(a, b, std::move(map)))
      out.push_back(std::move(*f));
    int i = 0;
    while (i < a->size() && ++idx[i] == tb->carrier->size()) idx[i++] = 0;
    if (i == a->size()) break;
  }
  return out;
}

}  // namespace opca
