#include "opca/morphism.hpp"

namespace opca {

bool tracker_valid(const Opca& source, const Opca& target,
                   const std::vector<Elem>& map, Elem t) {
  int n = source.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem a2 = 0; a2 < n; ++a2) {
      auto aa2 = source.app(a, a2);
      if (!aa2) continue;
      auto lhs = target.app_chain({t, map[a], map[a2]});
      if (!lhs || !target.le(*lhs, map[*aa2])) return false;
    }
  return true;
}

bool order_realizer_valid(const Opca& source, const Opca& target,
                          const std::vector<Elem>& map, Elem u) {
  int n = source.size();
  for (Elem a = 0; a < n; ++a) {
    bool ok = true;
    source.order().below(a).for_each([&](Elem a2) {
      if (!ok) return;
      auto lhs = target.app(u, map[a2]);
      if (!lhs || !target.le(*lhs, map[a])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<Elem> find_tracker(const Opca& source, const Opca& target,
                                 const std::vector<Elem>& map) {
  for (Elem t = 0; t < target.size(); ++t)
    if (tracker_valid(source, target, map, t)) return t;
  return std::nullopt;
}

std::optional<Elem> find_order_realizer(const Opca& source, const Opca& target,
                                        const std::vector<Elem>& map) {
  for (Elem u = 0; u < target.size(); ++u)
    if (order_realizer_valid(source, target, map, u)) return u;
  return std::nullopt;
}

std::optional<OpcaMorphism> make_morphism(const OpcaRef& source,
                                          const OpcaRef& target,
                                          std::vector<Elem> map,
                                          std::string name) {
  if (int(map.size()) != source->size())
    fail(ErrKind::Mismatch, "map size does not match source carrier");
  for (Elem v : map)
    if (v < 0 || v >= target->size())
      fail(ErrKind::UnknownElement, "map value out of range");
  auto t = find_tracker(*source, *target, map);
  if (!t) return std::nullopt;
  auto u = find_order_realizer(*source, *target, map);
  if (!u) return std::nullopt;
  return OpcaMorphism{source, target, std::move(map), *t, *u, std::move(name)};
}

OpcaMorphism identity_morphism(const OpcaRef& a) {
  std::vector<Elem> map(a->size());
  for (int i = 0; i < a->size(); ++i) map[i] = i;
  auto m = make_morphism(a, a, std::move(map), "id_" + a->name());
  if (!m) fail(ErrKind::ConstructionFailed, "identity is not a morphism");
  return *m;
}

OpcaMorphism constant_morphism(const OpcaRef& a, const OpcaRef& b, Elem c) {
  std::vector<Elem> map(a->size(), c);
  auto m = make_morphism(a, b, std::move(map),
                         "const_" + b->name_of(c));
  if (!m) fail(ErrKind::ConstructionFailed, "constant map is not a morphism");
  return *m;
}

bool ineq_realizer_valid(const OpcaMorphism& f, const OpcaMorphism& g,
                         Elem s) {
  const Opca& b = *f.target;
  for (Elem a = 0; a < f.source->size(); ++a) {
    auto v = b.app(s, f.map[a]);
    if (!v || !b.le(*v, g.map[a])) return false;
  }
  return true;
}

std::optional<IneqCertificate> find_inequality_realizer(
    const OpcaMorphism& f, const OpcaMorphism& g) {
  if (f.source != g.source || f.target != g.target)
    fail(ErrKind::SourceMismatch,
         "inequality requires parallel morphisms");
  for (Elem s = 0; s < f.target->size(); ++s)
    if (ineq_realizer_valid(f, g, s))
      return IneqCertificate{s, uint64_t(f.target->size())};
  return std::nullopt;
}

bool morphisms_isomorphic(const OpcaMorphism& f, const OpcaMorphism& g) {
  return find_inequality_realizer(f, g) && find_inequality_realizer(g, f);
}

OpcaMorphism compose(const OpcaMorphism& f, const OpcaMorphism& g) {
  if (f.target != g.source)
    fail(ErrKind::Mismatch, "composition endpoints do not match");
  std::vector<Elem> map(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
  auto m = make_morphism(f.source, g.target, std::move(map),
                         g.name + " o " + f.name);
  if (!m)
    fail(ErrKind::ConstructionFailed,
         "composite of morphisms lost its certificates");
  return *m;
}

ZeroVerdict is_zero_morphism(const OpcaMorphism& f, const Budget& budget) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  ZeroVerdict out{};

  // (ii) lower bound of the image
  Bits image(b.size());
  for (Elem x = 0; x < a.size(); ++x) image.set(f.map[x]);
  out.image_lower_bound = b.order().some_lower_bound(image);

  // (i) f isomorphic to a constant morphism
  for (Elem c = 0; c < b.size() && !out.factor_through_point; ++c) {
    std::optional<Elem> down, up;
    for (Elem s = 0; s < b.size() && !down; ++s) {
      bool ok = true;
      for (Elem x = 0; x < a.size() && ok; ++x) {
        auto v = b.app(s, f.map[x]);
        ok = v && b.le(*v, c);
      }
      if (ok) down = s;
    }
    if (!down) continue;
    for (Elem s = 0; s < b.size() && !up; ++s) {
      bool ok = true;
      auto sc = b.app(s, c);
      for (Elem x = 0; x < a.size() && ok; ++x) ok = sc && b.le(*sc, f.map[x]);
      if (ok) up = s;
    }
    if (up) {
      out.factor_through_point = c;
      out.factor_down = down;
      out.factor_up = up;
    }
  }

  if (out.image_lower_bound.has_value() !=
      out.factor_through_point.has_value())
    fail(ErrKind::ValidationError,
         "zero-morphism characterizations (i) and (ii) disagree");

  out.is_zero = out.image_lower_bound.has_value();

  // (iii) top of the hom-preorder, cross-checked within budget
  double count = 1;
  for (int i = 0; i < a.size(); ++i) count *= b.size();
  if (count <= double(budget.hom_sweep_limit)) {
    bool top = true;
    std::vector<Elem> map(a.size(), 0);
    while (true) {
      if (find_tracker(a, b, map) && find_order_realizer(a, b, map)) {
        OpcaMorphism g{f.source, f.target, map, 0, 0, ""};
        if (!find_inequality_realizer(g, f)) {
          top = false;
          break;
        }
      }
      int i = 0;
      while (i < a.size() && ++map[i] == b.size()) map[i++] = 0;
      if (i == a.size()) break;
    }
    out.hom_top_checked = top;
    if (top != out.is_zero)
      fail(ErrKind::ValidationError,
           "zero-morphism characterization (iii) disagrees with (i)/(ii)");
  }
  return out;
}

bool cd_witness_valid(const OpcaMorphism& f, Elem n) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  for (Elem s = 0; s < b.size(); ++s) {
    bool found = false;
    for (Elem r = 0; r < a.size() && !found; ++r) {
      auto v = b.app(n, f.map[r]);
      found = v && b.le(*v, s);
    }
    if (!found) return false;
  }
  return true;
}

std::optional<Elem> check_cd(const OpcaMorphism& f) {
  for (Elem n = 0; n < f.target->size(); ++n)
    if (cd_witness_valid(f, n)) return n;
  return std::nullopt;
}

namespace {

// m f(ra) refines s f(a) for all a, for fixed m, s, r.
bool cdm_r_valid(const OpcaMorphism& f, Elem m, Elem s, Elem r) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  for (Elem x = 0; x < a.size(); ++x) {
    auto rhs = b.app(s, f.map[x]);
    if (!rhs) continue;
    auto rx = a.app(r, x);
    if (!rx) return false;
    auto lhs = b.app(m, f.map[*rx]);
    if (!lhs || !b.le(*lhs, *rhs)) return false;
  }
  return true;
}

}  // namespace

std::optional<Elem> cdm_r_for(const OpcaMorphism& f, Elem m, Elem s) {
  for (Elem r = 0; r < f.source->size(); ++r)
    if (cdm_r_valid(f, m, s, r)) return r;
  return std::nullopt;
}

bool cdm_witness_valid(const OpcaMorphism& f, Elem m) {
  for (Elem s = 0; s < f.target->size(); ++s)
    if (!cdm_r_for(f, m, s)) return false;
  return true;
}

std::optional<Elem> check_cdm(const OpcaMorphism& f) {
  for (Elem m = 0; m < f.target->size(); ++m)
    if (cdm_witness_valid(f, m)) return m;
  return std::nullopt;
}

Elem construct_m_from_n(const OpcaMorphism& f, Elem n) {
  const Opca& b = *f.target;
  const CombinatorSet& ca = f.source->combinators();
  // m = lambda* x. n (u (t f(p0) x)) (u (t f(p1) x)), with p0, p1 taken in
  // the source and everything else in the target.
  auto u = [&](TermPtr inner) {
    return tapp(tconst(f.order_realizer), std::move(inner));
  };
  TermPtr body =
      tapp({tconst(n),
            u(tapp({tconst(f.tracker), tconst(f.map[ca.p0]), tvar("x")})),
            u(tapp({tconst(f.tracker), tconst(f.map[ca.p1]), tvar("x")}))});
  Elem m = bracket_abstract(b, body, {"x"});
  if (!cdm_witness_valid(f, m))
    fail(ErrKind::ConstructionFailed,
         "constructed m fails the cdm formula for " + f.name);
  return m;
}

DiscreteVerdict is_discrete(const OpcaMorphism& f, const Budget& budget) {
  const Opca& a = *f.source;
  const Opca& b = *f.target;
  if (a.size() > budget.discrete_cap)
    fail(ErrKind::SizeLimit, "discreteness sweep is 2^" +
                                 std::to_string(a.size()) + " subsets");
  uint64_t total = uint64_t(1) << a.size();
  for (uint64_t mask = 1; mask < total; ++mask) {
    Bits x(a.size()), fx(b.size());
    for (int i = 0; i < a.size(); ++i)
      if ((mask >> i) & 1) {
        x.set(i);
        fx.set(f.map[i]);
      }
    if (b.order().has_lower_bound(fx) && !a.order().has_lower_bound(x))
      return {false, x};
  }
  return {true, Bits(a.size())};
}

std::optional<AdjointPair> check_adjunction(const OpcaMorphism& l,
                                            const OpcaMorphism& r) {
  if (l.source != r.target || l.target != r.source)
    fail(ErrKind::Mismatch, "adjunction endpoints do not match");
  OpcaMorphism rl = compose(l, r);   // id on l.source side
  OpcaMorphism lr = compose(r, l);   // id on r.source side
  auto unit = find_inequality_realizer(identity_morphism(l.source), rl);
  if (!unit) return std::nullopt;
  auto counit = find_inequality_realizer(lr, identity_morphism(r.source));
  if (!counit) return std::nullopt;
  return AdjointPair{l, r, unit->realizer, counit->realizer};
}

std::vector<OpcaMorphism> enumerate_morphisms(const OpcaRef& a,
                                              const OpcaRef& b,
                                              const Budget& budget) {
  double count = 1;
  for (int i = 0; i < a->size(); ++i) count *= b->size();
  if (count > double(budget.hom_sweep_limit))
    fail(ErrKind::SizeLimit, "hom sweep of " + std::to_string(count) +
                                 " maps exceeds the budget");
  std::vector<OpcaMorphism> out;
  std::vector<Elem> map(a->size(), 0);
  while (true) {
    if (auto m = make_morphism(a, b, map)) out.push_back(std::move(*m));
    int i = 0;
    while (i < a->size() && ++map[i] == b->size()) map[i++] = 0;
    if (i == a->size()) break;
  }
  return out;
}

bool opcas_equivalent(const OpcaRef& a, const OpcaRef& b,
                      const Budget& budget) {
  auto fwd = enumerate_morphisms(a, b, budget);
  auto bwd = enumerate_morphisms(b, a, budget);
  OpcaMorphism ida = identity_morphism(a), idb = identity_morphism(b);
  for (const auto& f : fwd)
    for (const auto& g : bwd)
      if (morphisms_isomorphic(compose(f, g), ida) &&
          morphisms_isomorphic(compose(g, f), idb))
        return true;
  return false;
}

}  // namespace opca
