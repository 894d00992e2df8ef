#include "opca/commands.hpp"

#include <fstream>
#include <sstream>

#include "opca/fixtures.hpp"

namespace opca {

namespace {

const char* kPass = "pass";
const char* kFail = "fail";
const char* kNA = "not-applicable";

Certificate base_cert(std::string claim) {
  Certificate c;
  c.claim = std::move(claim);
  c.subject = json::object();
  c.witness = json::object();
  c.combinator_choice = json::object();
  c.verdict = kPass;
  return c;
}

void note_choice(Certificate& c, const Opca& a) {
  c.combinator_choice[a.name()] = {{"k", a.name_of(a.k())},
                                   {"s", a.name_of(a.s())}};
}

json elem_name(const Opca& a, Elem e) { return a.name_of(e); }

std::vector<std::string> corpus_vars(int n_vars) {
  std::vector<std::string> all = {"x", "y", "z"};
  return {all.begin(), all.begin() + n_vars};
}

struct CompletenessStats {
  uint64_t terms = 0;
  uint64_t defined_checks = 0;
  uint64_t refinement_checks = 0;
  uint64_t failures = 0;
};

// Evaluates t under an environment for the corpus variables.
std::optional<Elem> eval_env(const Opca& a, const Term& t,
                             const std::vector<std::string>& vars,
                             const std::vector<Elem>& env) {
  switch (t.kind) {
    case Term::Kind::Var:
      for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == t.var) return env[i];
      fail(ErrKind::OpenTerm, "unexpected variable " + t.var);
    case Term::Kind::Const:
      return t.c;
    case Term::Kind::App: {
      auto f = eval_env(a, *t.fn, vars, env);
      if (!f) return std::nullopt;
      auto x = eval_env(a, *t.arg, vars, env);
      if (!x) return std::nullopt;
      return a.app(*f, *x);
    }
    case Term::Kind::Lam:
      fail(ErrKind::OpenTerm, "lambda in corpus term");
  }
  return std::nullopt;
}

CompletenessStats completeness_sweep(const Opca& a, int depth, int n_vars) {
  auto corpus = term_corpus(a, depth, n_vars);
  auto vars = corpus_vars(n_vars);
  CompletenessStats st;
  st.terms = corpus.size();
  int n = a.size();
  std::vector<Elem> env(n_vars, 0);
  for (const auto& t : corpus) {
    Elem e = bracket_abstract(a, t, vars);
    // Partial applications (lambda* xs y. t) a... defined for every proper
    // prefix of the argument tuple.
    std::function<bool(Elem, int)> partials = [&](Elem acc, int i) -> bool {
      if (i == n_vars - 1) return true;
      for (Elem x = 0; x < n; ++x) {
        auto next = a.app(acc, x);
        ++st.defined_checks;
        if (!next) {
          ++st.failures;
          return false;
        }
        if (!partials(*next, i + 1)) return false;
      }
      return true;
    };
    partials(e, 0);
    // Full refinement: e a... b refines t(a..., b).
    std::function<void(Elem, int)> full = [&](Elem acc, int i) {
      if (i == n_vars) {
        return;
      }
      for (Elem x = 0; x < n; ++x) {
        env[i] = x;
        auto next = a.app(acc, x);
        if (i + 1 == n_vars) {
          ++st.refinement_checks;
          auto rhs = eval_env(a, *t, vars, env);
          if (!value_refines(a, next, rhs)) ++st.failures;
        } else if (next) {
          full(*next, i + 1);
        }
        // An undefined proper prefix already counted as a failure above.
      }
    };
    full(e, 0);
  }
  return st;
}

uint64_t hom_count(const OpcaRef& a, const OpcaRef& b) {
  uint64_t c = 1;
  for (int i = 0; i < a->size(); ++i) c *= uint64_t(b->size());
  return c;
}

}  // namespace

std::vector<TermPtr> term_corpus(const Opca& a, int depth, int n_vars) {
  std::vector<TermPtr> atoms;
  for (const auto& v : corpus_vars(n_vars)) atoms.push_back(tvar(v));
  atoms.push_back(tconst(a.k()));
  atoms.push_back(tconst(a.s()));

  std::vector<TermPtr> level = atoms;  // height <= 1
  for (int d = 2; d <= depth; ++d) {
    std::vector<TermPtr> next = atoms;
    for (const auto& f : level)
      for (const auto& x : level) next.push_back(tapp(f, x));
    level = std::move(next);
  }
  return level;
}

// ---------------------------------------------------------------------------
// Opca-level certificates

Certificate cert_opca_valid(const OpcaRef& a) {
  Certificate c = base_cert("opca-valid");
  c.subject["opca"] = opca_to_json(*a);
  note_choice(c, *a);
  const CombinatorSet& cs = a->combinators();
  c.witness["k"] = elem_name(*a, a->k());
  c.witness["s"] = elem_name(*a, a->s());
  c.witness["combinators"] = {
      {"i", elem_name(*a, cs.i)},     {"kbar", elem_name(*a, cs.kbar)},
      {"p", elem_name(*a, cs.p)},     {"p0", elem_name(*a, cs.p0)},
      {"p1", elem_name(*a, cs.p1)},   {"case", elem_name(*a, cs.case_c)}};
  c.search_space = uint64_t(a->size()) * a->size();
  return c;
}

Certificate cert_combinators(const OpcaRef& a) {
  Certificate c = base_cert("combinators");
  c.subject["opca"] = opca_to_json(*a);
  note_choice(c, *a);
  json pairs = json::array();
  for (auto [k, s] : find_ks(a->opas()))
    pairs.push_back({a->name_of(k), a->name_of(s)});
  c.witness["pairs"] = pairs;
  c.search_space = uint64_t(a->size()) * a->size();
  c.verdict = pairs.empty() ? kFail : kPass;
  return c;
}

Certificate cert_combinator_laws(const OpcaRef& a) {
  Certificate c = base_cert("combinator-laws");
  c.subject["opca"] = opca_to_json(*a);
  note_choice(c, *a);
  // derived_combinators checks every law exhaustively and throws on any
  // miss, so reaching this point is the verification.
  CombinatorSet cs = derived_combinators(*a);
  c.witness["i"] = elem_name(*a, cs.i);
  c.witness["kbar"] = elem_name(*a, cs.kbar);
  c.witness["p"] = elem_name(*a, cs.p);
  c.witness["p0"] = elem_name(*a, cs.p0);
  c.witness["p1"] = elem_name(*a, cs.p1);
  c.witness["case"] = elem_name(*a, cs.case_c);
  c.search_space = uint64_t(a->size()) * a->size();
  return c;
}

Certificate cert_combcomp(const OpcaRef& a, int depth, int n_vars) {
  Certificate c = base_cert("combinatory-completeness");
  c.subject["opca"] = opca_to_json(*a);
  c.subject["depth"] = depth;
  c.subject["variables"] = n_vars;
  c.subject["abstraction_order"] = "right-to-left";
  note_choice(c, *a);
  CompletenessStats st = completeness_sweep(*a, depth, n_vars);
  c.witness["terms"] = st.terms;
  c.witness["defined_checks"] = st.defined_checks;
  c.witness["refinement_checks"] = st.refinement_checks;
  c.witness["failures"] = st.failures;
  c.search_space = st.defined_checks + st.refinement_checks;
  c.verdict = st.failures == 0 ? kPass : kFail;
  return c;
}

Certificate cert_eval(const OpcaRef& a, const std::string& term) {
  Certificate c = base_cert("eval");
  c.subject["opca"] = opca_to_json(*a);
  c.subject["term"] = term;
  note_choice(c, *a);
  TermPtr t = eliminate_lams(*a, parse_term(term, *a));
  EvalResult r = eval_closed(*a, *t);
  c.witness["value"] = r.defined() ? json(a->name_of(*r.value)) : json();
  return c;
}

Certificate cert_compile(const OpcaRef& a, const std::string& term) {
  Certificate c = base_cert("compile");
  c.subject["opca"] = opca_to_json(*a);
  c.subject["term"] = term;
  c.subject["abstraction_order"] = "right-to-left";
  note_choice(c, *a);
  TermPtr t = eliminate_lams(*a, parse_term(term, *a));
  EvalResult r = eval_closed(*a, *t);
  if (!r.defined())
    fail(ErrKind::UndefinedCombinator, "compiled term does not evaluate");
  c.witness["element"] = a->name_of(*r.value);
  return c;
}

// ---------------------------------------------------------------------------
// Morphism certificates

Certificate cert_morphism(const OpcaMorphism& f) {
  Certificate c = base_cert("morphism");
  c.subject["morphism"] = morphism_to_json(f);
  note_choice(c, *f.source);
  note_choice(c, *f.target);
  c.witness["tracker"] = f.target->name_of(f.tracker);
  c.witness["order_realizer"] = f.target->name_of(f.order_realizer);
  c.search_space = uint64_t(f.target->size());
  return c;
}

Certificate cert_ineq(const OpcaMorphism& f, const OpcaMorphism& g) {
  Certificate c = base_cert("ineq");
  c.subject["lhs"] = morphism_to_json(f);
  c.subject["rhs"] = morphism_to_json(g);
  note_choice(c, *f.target);
  auto s = find_inequality_realizer(f, g);
  c.witness["realizer"] = s ? json(f.target->name_of(s->realizer)) : json();
  c.search_space = uint64_t(f.target->size());
  c.verdict = s ? kPass : kFail;
  return c;
}

Certificate cert_cd(const OpcaMorphism& f) {
  Certificate c = base_cert("cd");
  c.subject["morphism"] = morphism_to_json(f);
  note_choice(c, *f.target);
  auto n = check_cd(f);
  c.witness["n"] = n ? json(f.target->name_of(*n)) : json();
  c.search_space = uint64_t(f.target->size());
  c.verdict = n ? kPass : kFail;
  return c;
}

Certificate cert_cdm(const OpcaMorphism& f) {
  Certificate c = base_cert("cdm");
  c.subject["morphism"] = morphism_to_json(f);
  note_choice(c, *f.target);
  auto m = check_cdm(f);
  c.witness["m"] = m ? json(f.target->name_of(*m)) : json();
  if (auto n = m ? check_cd(f) : std::nullopt) {
    // Cross-check the proof construction from the direct cd witness.
    Elem m2 = construct_m_from_n(f, *n);
    c.witness["constructed_from"] = f.target->name_of(*n);
    c.witness["constructed_m"] = f.target->name_of(m2);
  }
  c.search_space = uint64_t(f.target->size());
  c.verdict = m ? kPass : kFail;
  return c;
}

Certificate cert_cd_cdm_agreement(const OpcaRef& a, const OpcaRef& b,
                                  const Budget& budget) {
  Certificate c = base_cert("cd-cdm-agreement");
  c.subject["a"] = opca_to_json(*a);
  c.subject["b"] = opca_to_json(*b);
  note_choice(c, *a);
  note_choice(c, *b);
  uint64_t morphisms = 0, cd_true = 0, disagreements = 0,
           construction_failures = 0, cdm_implies_cd_failures = 0;
  auto homs = enumerate_morphisms(a, b, budget);
  for (const auto& f : homs) {
    ++morphisms;
    auto n = check_cd(f);
    auto m = check_cdm(f);
    if (n.has_value() != m.has_value()) ++disagreements;
    if (n) {
      ++cd_true;
      try {
        construct_m_from_n(f, *n);
      } catch (const Error&) {
        ++construction_failures;
      }
    }
    if (m && !cd_witness_valid(f, *m)) ++cdm_implies_cd_failures;
  }
  c.witness["maps"] = hom_count(a, b);
  c.witness["morphisms"] = morphisms;
  c.witness["cd_count"] = cd_true;
  c.witness["disagreements"] = disagreements;
  c.witness["construction_failures"] = construction_failures;
  c.witness["cdm_implies_cd_failures"] = cdm_implies_cd_failures;
  c.search_space = hom_count(a, b);
  c.verdict = (disagreements == 0 && construction_failures == 0 &&
               cdm_implies_cd_failures == 0)
                  ? kPass
                  : kFail;
  return c;
}

Certificate cert_discrete(const OpcaMorphism& f, const Budget& budget) {
  Certificate c = base_cert("discrete");
  c.subject["morphism"] = morphism_to_json(f);
  note_choice(c, *f.source);
  DiscreteVerdict v = is_discrete(f, budget);
  c.witness["verdict"] = v.verdict;
  c.witness["counterexample"] =
      v.verdict ? json() : mask_to_json(f.source->order(), v.counterexample);
  c.search_space = uint64_t(1) << f.source->size();
  c.verdict = v.verdict ? kPass : kFail;
  return c;
}

Certificate cert_zero(const OpcaMorphism& f, const Budget& budget) {
  Certificate c = base_cert("zero");
  c.subject["morphism"] = morphism_to_json(f);
  note_choice(c, *f.target);
  ZeroVerdict v = is_zero_morphism(f, budget);
  c.witness["is_zero"] = v.is_zero;
  c.witness["image_lower_bound"] =
      v.image_lower_bound ? json(f.target->name_of(*v.image_lower_bound))
                          : json();
  c.witness["constant"] = v.factor_through_point
                              ? json(f.target->name_of(*v.factor_through_point))
                              : json();
  c.witness["factor_down"] =
      v.factor_down ? json(f.target->name_of(*v.factor_down)) : json();
  c.witness["factor_up"] =
      v.factor_up ? json(f.target->name_of(*v.factor_up)) : json();
  c.witness["hom_top_checked"] =
      v.hom_top_checked ? json(*v.hom_top_checked) : json();
  c.search_space = hom_count(f.source, f.target);
  c.verdict = v.is_zero ? kPass : kFail;
  return c;
}

Certificate cert_trivial(const OpcaRef& a) {
  Certificate c = base_cert("trivial");
  c.subject["opca"] = opca_to_json(*a);
  note_choice(c, *a);
  TrivialityVerdict t = is_trivial(*a);
  PseudotrivialityVerdict p = is_pseudotrivial(*a);
  c.witness["trivial"] = t.verdict;
  c.witness["least"] = t.least ? json(a->name_of(*t.least)) : json();
  json anti = json::array();
  for (Elem e : t.minimal_antichain) anti.push_back(a->name_of(e));
  c.witness["minimal_antichain"] = anti;
  c.witness["pseudotrivial"] = p.verdict;
  c.witness["unbounded_pair"] =
      p.unbounded_pair ? json({a->name_of(p.unbounded_pair->first),
                               a->name_of(p.unbounded_pair->second)})
                       : json();
  // At finite scale pseudotriviality collapses to triviality.
  if (p.verdict && !t.verdict)
    fail(ErrKind::ValidationError,
         "finite pseudotrivial OPCA without a least element");
  c.search_space = uint64_t(a->size()) * a->size();
  c.verdict = t.verdict ? kPass : kFail;
  return c;
}

Certificate cert_adjunction(const OpcaMorphism& l, const OpcaMorphism& r) {
  Certificate c = base_cert("adjunction");
  c.subject["left"] = morphism_to_json(l);
  c.subject["right"] = morphism_to_json(r);
  note_choice(c, *l.source);
  note_choice(c, *l.target);
  auto adj = check_adjunction(l, r);
  c.witness["unit_realizer"] =
      adj ? json(l.source->name_of(adj->unit_realizer)) : json();
  c.witness["counit_realizer"] =
      adj ? json(r.source->name_of(adj->counit_realizer)) : json();
  c.search_space = uint64_t(l.source->size()) + r.source->size();
  c.verdict = adj ? kPass : kFail;
  return c;
}

// ---------------------------------------------------------------------------
// Product / coproduct certificates

Certificate cert_product(const OpcaRef& a0, const OpcaRef& a1) {
  Certificate c = base_cert("product");
  c.subject["a0"] = opca_to_json(*a0);
  c.subject["a1"] = opca_to_json(*a1);
  note_choice(c, *a0);
  note_choice(c, *a1);
  ProductOpca p = product(a0, a1);
  c.witness["carrier_size"] = p.carrier->size();
  c.witness["k"] = p.carrier->name_of(p.carrier->k());
  c.witness["s"] = p.carrier->name_of(p.carrier->s());
  c.witness["pi0_tracker"] = a0->name_of(p.pi0.tracker);
  c.witness["pi1_tracker"] = a1->name_of(p.pi1.tracker);
  c.witness["kappa0_tracker"] = p.carrier->name_of(p.kappa0.tracker);
  c.witness["kappa1_tracker"] = p.carrier->name_of(p.kappa1.tracker);
  c.search_space = uint64_t(p.carrier->size()) * p.carrier->size();
  return c;
}

Certificate cert_two_product_law(const OpcaRef& a0, const OpcaRef& a1,
                                 const Budget& budget) {
  Certificate c = base_cert("two-product-law");
  c.subject["a0"] = opca_to_json(*a0);
  c.subject["a1"] = opca_to_json(*a1);
  note_choice(c, *a0);
  note_choice(c, *a1);
  ProductOpca p = product(a0, a1);
  uint64_t tuples = 0, strict_failures = 0, pairs = 0, reflect_failures = 0;
  for (const auto& b : fixture_opcas()) {
    // Mediators commute on the nose.
    auto h0 = enumerate_morphisms(b, a0, budget);
    auto h1 = enumerate_morphisms(b, a1, budget);
    for (const auto& f0 : h0)
      for (const auto& f1 : h1) {
        ++tuples;
        OpcaMorphism t = tuple_morphism(p, f0, f1);
        OpcaMorphism t0 = compose(t, p.pi0), t1 = compose(t, p.pi1);
        if (t0.map != f0.map || t1.map != f1.map) ++strict_failures;
      }
    // Order reflection: pi_i g <= pi_i g' for i = 0,1 forces g <= g' with
    // the assembled realizer (s0, s1).
    auto hp = enumerate_morphisms(b, p.carrier, budget);
    for (const auto& g : hp)
      for (const auto& g2 : hp) {
        auto s0 = find_inequality_realizer(compose(g, p.pi0),
                                           compose(g2, p.pi0));
        if (!s0) continue;
        auto s1 = find_inequality_realizer(compose(g, p.pi1),
                                           compose(g2, p.pi1));
        if (!s1) continue;
        ++pairs;
        if (!ineq_realizer_valid(g, g2,
                                 p.pair(s0->realizer, s1->realizer)))
          ++reflect_failures;
      }
  }
  c.witness["tuples"] = tuples;
  c.witness["strict_failures"] = strict_failures;
  c.witness["comparable_pairs"] = pairs;
  c.witness["reflection_failures"] = reflect_failures;
  c.search_space = tuples + pairs;
  c.verdict = (strict_failures == 0 && reflect_failures == 0) ? kPass : kFail;
  return c;
}

Certificate cert_coproduct(const OpcaMorphism& f0, const OpcaMorphism& f1) {
  Certificate c = base_cert("coproduct");
  c.subject["f0"] = morphism_to_json(f0);
  c.subject["f1"] = morphism_to_json(f1);
  note_choice(c, *f0.target);
  ProductOpca p = product(f0.source, f1.source);
  CotupleResult r = cotuple_morphism(p, f0, f1);
  const Opca& b = *f0.target;
  c.witness["tracker"] = b.name_of(r.morphism.tracker);
  c.witness["order_realizer"] = b.name_of(r.morphism.order_realizer);
  c.witness["iso_down0"] = b.name_of(r.iso_down0);
  c.witness["iso_up0"] = b.name_of(r.iso_up0);
  c.witness["iso_down1"] = b.name_of(r.iso_down1);
  c.witness["iso_up1"] = b.name_of(r.iso_up1);
  json map = json::array();
  for (Elem x = 0; x < p.carrier->size(); ++x)
    map.push_back(b.name_of(r.morphism.map[x]));
  c.witness["map"] = map;
  c.search_space = uint64_t(p.carrier->size()) * p.carrier->size();
  return c;
}

Certificate cert_coproduct_realizers(const OpcaRef& a0, const OpcaRef& a1,
                                     const OpcaRef& b, const Budget& budget) {
  Certificate c = base_cert("coproduct-realizers");
  c.subject["a0"] = opca_to_json(*a0);
  c.subject["a1"] = opca_to_json(*a1);
  c.subject["b"] = opca_to_json(*b);
  note_choice(c, *a0);
  note_choice(c, *a1);
  note_choice(c, *b);
  ProductOpca p = product(a0, a1);
  auto h0 = enumerate_morphisms(a0, b, budget);
  auto h1 = enumerate_morphisms(a1, b, budget);
  uint64_t cotuples = 0, failures = 0, uniq_pairs = 0, uniq_failures = 0;

  std::vector<OpcaMorphism> cots;
  std::vector<std::pair<OpcaMorphism, OpcaMorphism>> cot_kappas;
  for (const auto& f0 : h0)
    for (const auto& f1 : h1) {
      ++cotuples;
      try {
        CotupleResult r = cotuple_morphism(p, f0, f1);
        cots.push_back(r.morphism);
        cot_kappas.emplace_back(compose(p.kappa0, r.morphism),
                                compose(p.kappa1, r.morphism));
      } catch (const Error&) {
        ++failures;
      }
    }
  for (size_t i = 0; i < cots.size(); ++i)
    for (size_t j = 0; j < cots.size(); ++j) {
      auto s0 = find_inequality_realizer(cot_kappas[i].first,
                                         cot_kappas[j].first);
      if (!s0) continue;
      auto s1 = find_inequality_realizer(cot_kappas[i].second,
                                         cot_kappas[j].second);
      if (!s1) continue;
      ++uniq_pairs;
      try {
        couniqueness_realizer(p, cots[i], cots[j], s0->realizer,
                              s1->realizer);
      } catch (const Error&) {
        ++uniq_failures;
      }
    }
  c.witness["cotuples"] = cotuples;
  c.witness["construction_failures"] = failures;
  c.witness["uniqueness_pairs"] = uniq_pairs;
  c.witness["uniqueness_failures"] = uniq_failures;
  c.search_space = cotuples + uniq_pairs;
  c.verdict = (failures == 0 && uniq_failures == 0) ? kPass : kFail;
  return c;
}

Certificate cert_biproduct(const OpcaRef& a0, const OpcaRef& a1,
                           const Budget& budget) {
  Certificate c = base_cert("biproduct");
  c.subject["a0"] = opca_to_json(*a0);
  c.subject["a1"] = opca_to_json(*a1);
  note_choice(c, *a0);
  note_choice(c, *a1);
  BiproductCertificate r = check_biproduct(a0, a1, budget);
  c.witness["iso00"] = {a0->name_of(r.iso00_down), a0->name_of(r.iso00_up)};
  c.witness["iso11"] = {a1->name_of(r.iso11_down), a1->name_of(r.iso11_up)};
  c.witness["zero01_bound"] =
      a1->name_of(*r.zero01.image_lower_bound);
  c.witness["zero10_bound"] =
      a0->name_of(*r.zero10.image_lower_bound);
  c.search_space = uint64_t(a0->size()) + a1->size();
  return c;
}

Certificate cert_disjointness(const OpcaRef& a0, const OpcaRef& a1,
                              const OpcaRef& b, const Budget& budget) {
  Certificate c = base_cert("disjointness");
  c.subject["a0"] = opca_to_json(*a0);
  c.subject["a1"] = opca_to_json(*a1);
  c.subject["b"] = opca_to_json(*b);
  note_choice(c, *a0);
  note_choice(c, *a1);
  note_choice(c, *b);
  ProductOpca p = product(a0, a1);
  uint64_t applicable = 0, extraction_failures = 0;
  uint64_t dual_applicable = 0, dual_failures = 0;

  // kappa0 f0 ~ kappa1 f1 forces both legs zero.
  auto h0 = enumerate_morphisms(b, a0, budget);
  auto h1 = enumerate_morphisms(b, a1, budget);
  for (const auto& f0 : h0)
    for (const auto& f1 : h1) {
      auto s = find_inequality_realizer(compose(f0, p.kappa0),
                                        compose(f1, p.kappa1));
      if (!s) continue;
      auto rev = find_inequality_realizer(compose(f1, p.kappa1),
                                          compose(f0, p.kappa0));
      if (!rev) continue;
      ++applicable;
      try {
        disjointness_certificate(p, f0, f1, s->realizer);
      } catch (const Error&) {
        ++extraction_failures;
      }
    }
  // Dual: f0 pi0 ~ f1 pi1 forces both legs zero.
  auto g0 = enumerate_morphisms(a0, b, budget);
  auto g1 = enumerate_morphisms(a1, b, budget);
  for (const auto& f0 : g0)
    for (const auto& f1 : g1) {
      auto s = find_inequality_realizer(compose(p.pi0, f0),
                                        compose(p.pi1, f1));
      if (!s) continue;
      auto rev = find_inequality_realizer(compose(p.pi1, f1),
                                          compose(p.pi0, f0));
      if (!rev) continue;
      ++dual_applicable;
      try {
        dual_disjointness_certificate(p, f0, f1, s->realizer);
      } catch (const Error&) {
        ++dual_failures;
      }
    }
  c.witness["applicable_pairs"] = applicable;
  c.witness["extraction_failures"] = extraction_failures;
  c.witness["dual_applicable_pairs"] = dual_applicable;
  c.witness["dual_failures"] = dual_failures;
  c.search_space = applicable + dual_applicable;
  c.verdict = (extraction_failures == 0 && dual_failures == 0) ? kPass : kFail;
  return c;
}

// ---------------------------------------------------------------------------
// Downset-monad certificates

Certificate cert_downset_opca(const OpcaRef& a, const Budget& budget) {
  Certificate c = base_cert("downset-opca");
  c.subject["opca"] = opca_to_json(*a);
  note_choice(c, *a);
  DownsetOpcaRef t = build_T(a, budget);
  c.witness["carrier_size"] = t->carrier->size();
  c.witness["k"] = t->carrier->name_of(t->carrier->k());
  c.witness["s"] = t->carrier->name_of(t->carrier->s());
  c.search_space = uint64_t(t->carrier->size()) * t->carrier->size();
  return c;
}

Certificate cert_downsets(const PosetRef& p, uint64_t limit) {
  Certificate c = base_cert("downsets");
  c.subject["poset"] = poset_to_json(*p);
  c.subject["limit"] = limit;
  auto masks = nonempty_downset_masks(*p, limit);
  json sets = json::array();
  for (const auto& m : masks) sets.push_back(mask_to_json(*p, m));
  c.witness["count"] = masks.size();
  c.witness["sets"] = sets;
  c.search_space = masks.size();
  return c;
}

Certificate cert_monad_laws(const OpcaRef& a, const Budget& budget) {
  Certificate c = base_cert("monad-laws");
  c.subject["opca"] = opca_to_json(*a);
  note_choice(c, *a);
  MonadLawCertificate r = monad_law_check(a, budget);
  DownsetOpcaRef t = build_T(a, budget);
  const Opca& ta = *t->carrier;
  c.witness["tta_size"] = r.tta_size;
  c.witness["ttta_size"] = r.ttta_size;
  c.witness["unit_left"] = {ta.name_of(r.unit_left_down),
                            ta.name_of(r.unit_left_up)};
  c.witness["unit_right"] = {ta.name_of(r.unit_right_down),
                             ta.name_of(r.unit_right_up)};
  c.witness["assoc"] = {ta.name_of(r.assoc_down), ta.name_of(r.assoc_up)};
  c.search_space = r.tta_size + r.ttta_size;
  return c;
}

Certificate cert_projective(const ApplicativeMorphism& f,
                            const Budget& budget) {
  Certificate c = base_cert("projective");
  c.subject["applicative"] = applicative_to_json(f);
  note_choice(c, *f.target);
  auto r = projectivity_search(f, budget);
  if (r) {
    json f0 = json::array();
    for (Elem x : r->function) f0.push_back(f.target->name_of(x));
    c.witness["f0"] = f0;
    c.witness["down"] = f.target->name_of(r->down);
    c.witness["up"] = f.target->name_of(r->up);
    c.search_space = r->search_space;
  } else {
    c.witness["f0"] = json();
    c.search_space = hom_count(f.source, f.target);
  }
  c.verdict = r ? kPass : kFail;
  return c;
}

Certificate cert_right_adjoint(const OpcaMorphism& f) {
  Certificate c = base_cert("right-adjoint");
  c.subject["morphism"] = morphism_to_json(f);
  note_choice(c, *f.source);
  note_choice(c, *f.target);
  auto n = check_cd(f);
  if (!n) {
    c.witness["cd"] = false;
    c.verdict = kNA;  // theorem hypothesis fails: f is not c.d.
    return c;
  }
  Elem m = construct_m_from_n(f, *n);
  RightAdjointResult r = right_adjoint_construct(f, m);
  c.witness["cd"] = true;
  c.witness["n"] = f.target->name_of(*n);
  c.witness["m"] = f.target->name_of(m);
  c.witness["tracker_q"] = f.source->name_of(r.tracker_q);
  c.witness["unit_r"] = f.source->name_of(r.unit_realizer_r);
  json g = json::array();
  for (Elem b = 0; b < f.target->size(); ++b)
    g.push_back(mask_to_json(f.source->order(), r.g.map[b]));
  c.witness["g"] = g;
  c.search_space = uint64_t(f.target->size());
  return c;
}

Certificate cert_radj_roundtrip(const OpcaRef& a, const OpcaRef& b,
                                const Budget& budget) {
  Certificate c = base_cert("radj-roundtrip");
  c.subject["a"] = opca_to_json(*a);
  c.subject["b"] = opca_to_json(*b);
  note_choice(c, *a);
  note_choice(c, *b);
  uint64_t morphisms = 0, cd_count = 0, failures = 0;
  for (const auto& f : enumerate_morphisms(a, b, budget)) {
    ++morphisms;
    auto n = check_cd(f);
    if (!n) continue;
    ++cd_count;
    try {
      Elem m = construct_m_from_n(f, *n);
      RightAdjointResult r = right_adjoint_construct(f, m);
      ProjectiveCdResult back = adjoint_to_projective_cd(
          to_applicative(f), r.g, r.unit_realizer_r, r.counit_realizer_m);
      (void)back;  // extraction succeeding is the round-trip check
    } catch (const Error&) {
      ++failures;
    }
  }
  c.witness["morphisms"] = morphisms;
  c.witness["cd_count"] = cd_count;
  c.witness["failures"] = failures;
  c.search_space = hom_count(a, b);
  c.verdict = failures == 0 ? kPass : kFail;
  return c;
}

Certificate cert_pca_coproduct(const ApplicativeMorphism& f0,
                               const ApplicativeMorphism& f1) {
  Certificate c = base_cert("pca-coproduct");
  c.subject["f0"] = applicative_to_json(f0);
  c.subject["f1"] = applicative_to_json(f1);
  note_choice(c, *f0.target);
  ProductOpca p = product(f0.source, f1.source);
  PcaCotupleResult r = pca_cotuple(p, f0, f1);
  const Opca& b = *f0.target;
  c.witness["tracker"] = b.name_of(r.morphism.tracker);
  c.witness["order_realizer"] = b.name_of(r.morphism.order_realizer);
  c.witness["iso"] = {b.name_of(r.iso_down0), b.name_of(r.iso_up0),
                      b.name_of(r.iso_down1), b.name_of(r.iso_up1)};
  c.search_space = uint64_t(b.size());
  return c;
}

Certificate cert_pca_coproduct_sweep(const OpcaRef& a0, const OpcaRef& a1,
                                     const OpcaRef& b, const Budget& budget) {
  Certificate c = base_cert("pca-coproduct-sweep");
  c.subject["a0"] = opca_to_json(*a0);
  c.subject["a1"] = opca_to_json(*a1);
  c.subject["b"] = opca_to_json(*b);
  note_choice(c, *a0);
  note_choice(c, *a1);
  note_choice(c, *b);
  ProductOpca p = product(a0, a1);
  auto h0 = enumerate_applicatives(a0, b, budget);
  auto h1 = enumerate_applicatives(a1, b, budget);
  uint64_t pairs = 0, failures = 0, cd_closure_failures = 0;
  for (const auto& f0 : h0) {
    bool f0cd = applicative_cd(f0).has_value();
    for (const auto& f1 : h1) {
      ++pairs;
      try {
        PcaCotupleResult r = pca_cotuple(p, f0, f1);
        if (f0cd && !applicative_cd(r.morphism)) ++cd_closure_failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  c.witness["pairs"] = pairs;
  c.witness["construction_failures"] = failures;
  c.witness["cd_closure_failures"] = cd_closure_failures;
  c.search_space = pairs;
  c.verdict = (failures == 0 && cd_closure_failures == 0) ? kPass : kFail;
  return c;
}

Certificate cert_hmaps(const OpcaRef& a0, const OpcaRef& a1,
                       const Budget& budget) {
  Certificate c = base_cert("hmaps");
  c.subject["a0"] = opca_to_json(*a0);
  c.subject["a1"] = opca_to_json(*a1);
  note_choice(c, *a0);
  note_choice(c, *a1);
  HMapsResult r = h_maps(a0, a1, budget);
  c.witness["tp_size"] = r.tp->carrier->size();
  c.witness["tprod_size"] = r.tprod.carrier->size();
  c.witness["round_trip_identity"] = r.round_trip_identity;
  c.witness["unit_realizer"] = r.tp->carrier->name_of(r.unit_realizer);
  c.witness["counit_realizer"] = r.tprod.carrier->name_of(r.counit_realizer);
  c.search_space =
      uint64_t(r.tp->carrier->size()) * r.tprod.carrier->size();
  c.verdict = r.round_trip_identity ? kPass : kFail;
  return c;
}

Certificate cert_mediator(const ApplicativeMorphism& f0,
                          const ApplicativeMorphism& f1) {
  Certificate c = base_cert("mediator");
  c.subject["f0"] = applicative_to_json(f0);
  c.subject["f1"] = applicative_to_json(f1);
  note_choice(c, *f0.target);
  note_choice(c, *f1.target);
  ProductOpca p = product(f0.target, f1.target);
  ApplicativeMorphism med = maximal_mediator(p, f0, f1);
  // Mediator laws: (delta pi_i) o med ~ f_i.
  ApplicativeMorphism m0 = applicative_compose(med, to_applicative(p.pi0));
  ApplicativeMorphism m1 = applicative_compose(med, to_applicative(p.pi1));
  bool laws = applicatives_isomorphic(m0, f0) &&
              applicatives_isomorphic(m1, f1);
  c.witness["tracker"] = p.carrier->name_of(med.tracker);
  c.witness["order_realizer"] = p.carrier->name_of(med.order_realizer);
  c.witness["mediates"] = laws;
  c.search_space = uint64_t(p.carrier->size());
  c.verdict = laws ? kPass : kFail;
  return c;
}

Certificate cert_noprod(const PosetRef& p0, const PosetRef& p1) {
  Certificate c = base_cert("noprod-witness");
  c.subject["p0"] = poset_to_json(*p0);
  c.subject["p1"] = poset_to_json(*p1);
  try {
    NoprodCertificate r = noprod_witness(p0, p1);
    json alphas = json::array();
    for (const auto& a : r.alphas) alphas.push_back(mask_to_json(*r.prod, a));
    c.witness["alphas"] = alphas;
    c.witness["intersection_empty"] = r.intersection_empty;
    c.witness["all_full_projections"] = r.all_full_projections;
    c.search_space = uint64_t(p0->size()) * p1->size();
    c.verdict = (r.intersection_empty && r.all_full_projections) ? kPass
                                                                 : kFail;
  } catch (const Error& e) {
    if (e.kind() != ErrKind::NotApplicable) throw;
    c.witness["reason"] = e.what();
    c.verdict = kNA;
  }
  return c;
}

Certificate cert_enumerate(const PosetRef& p, uint64_t limit,
                           const Budget& budget) {
  Certificate c = base_cert("enumerate");
  c.subject["poset"] = poset_to_json(*p);
  c.subject["limit"] = limit;
  json found = json::array();
  EnumerationStats st = enumerate_opcas(
      p, limit,
      [&](const Opas& opas, Elem k, Elem s) {
        json entry;
        json app = json::array();
        for (Elem x = 0; x < opas.size(); ++x)
          for (Elem y = 0; y < opas.size(); ++y)
            if (auto v = opas.app(x, y))
              app.push_back({p->name_of(x), p->name_of(y), p->name_of(*v)});
        entry["app"] = app;
        entry["k"] = p->name_of(k);
        entry["s"] = p->name_of(s);
        found.push_back(std::move(entry));
        return true;
      },
      budget);
  c.witness["tables_passing_axiom0"] = st.tables_passing_axiom0;
  c.witness["structures_total"] = st.structures_total;
  c.witness["structures_streamed"] = st.structures_streamed;
  c.witness["least_element"] =
      p->least() ? json(p->name_of(*p->least())) : json();
  c.witness["structures"] = found;
  c.search_space = st.tables_passing_axiom0;
  return c;
}

// ---------------------------------------------------------------------------
// Assembly certificates

Certificate cert_assembly(const AssemblyRef& x) {
  Certificate c = base_cert("assembly");
  c.subject["assembly"] = assembly_to_json(*x);
  note_choice(c, *x->base);
  // Gamma o nabla is the identity on the underlying set.
  AssemblyRef nx = nabla(gamma(*x), x->base);
  bool gn = gamma(*nx) == x->points;
  // Every point map into the nabla assembly is tracked.
  AdjunctionBijectionCertificate adj = adjunction_bijection(x, x->points);
  c.witness["gamma_nabla_identity"] = gn;
  c.witness["functions"] = adj.function_count;
  c.witness["tracked"] = adj.tracked_count;
  c.search_space = adj.function_count;
  c.verdict = (gn && adj.tracked_count == adj.function_count) ? kPass : kFail;
  return c;
}

namespace {

std::vector<AssemblyRef> stock_assemblies(const OpcaRef& a) {
  Bits low = a->order().below(0);
  Bits full = a->order().full_mask();
  Bits high = a->order().below(a->size() - 1);
  return {
      make_assembly(a, "P1", {"q0"}, {full}),
      make_assembly(a, "P2", {"q0", "q1"}, {low, full}),
      make_assembly(a, "P3", {"q0", "q1", "q2"}, {low, full, high}),
  };
}

}  // namespace

Certificate cert_assembly_laws(const OpcaRef& a, const Budget& budget) {
  Certificate c = base_cert("assembly-laws");
  c.subject["opca"] = opca_to_json(*a);
  note_choice(c, *a);

  // Gamma o nabla = Id on sets of size 1..3.
  bool gn = true;
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::string> s;
    for (int i = 0; i < n; ++i) s.push_back("s" + std::to_string(i));
    if (gamma(*nabla(s, a)) != s) gn = false;
  }

  auto stock = stock_assemblies(a);
  // Identity tracked by i on every stock assembly; every function into a
  // nabla assembly tracked.
  uint64_t nabla_functions = 0, nabla_tracked = 0;
  bool identity_by_i = true;
  for (const auto& x : stock) {
    std::vector<int> idmap(x->size());
    for (int i = 0; i < x->size(); ++i) idmap[i] = i;
    if (!assembly_tracker_valid(*x, *x, idmap, a->combinators().i))
      identity_by_i = false;
    AdjunctionBijectionCertificate adj =
        adjunction_bijection(x, {"t0", "t1"}, budget);
    nabla_functions += adj.function_count;
    nabla_tracked += adj.tracked_count;
  }

  // Tracked composition closure over all stock assembly pairs.
  uint64_t composites = 0, composite_failures = 0;
  for (const auto& x : stock)
    for (const auto& y : stock)
      for (const auto& z : stock) {
        // every tracked f: x->y and g: y->z
        std::vector<int> f(x->size(), 0);
        while (true) {
          if (auto fm = make_assembly_morphism(x, y, f)) {
            std::vector<int> g(y->size(), 0);
            while (true) {
              if (auto gm = make_assembly_morphism(y, z, g)) {
                std::vector<int> comp(x->size());
                for (int i = 0; i < x->size(); ++i) comp[i] = g[f[i]];
                ++composites;
                if (!find_assembly_tracker(comp, *x, *z))
                  ++composite_failures;
              }
              int i = 0;
              while (i < y->size() && ++g[i] == z->size()) g[i++] = 0;
              if (i == y->size()) break;
            }
          }
          int i = 0;
          while (i < x->size() && ++f[i] == y->size()) f[i++] = 0;
          if (i == x->size()) break;
        }
      }

  c.witness["gamma_nabla_identity"] = gn;
  c.witness["identity_tracked_by_i"] = identity_by_i;
  c.witness["nabla_functions"] = nabla_functions;
  c.witness["nabla_tracked"] = nabla_tracked;
  c.witness["composites"] = composites;
  c.witness["composite_failures"] = composite_failures;
  c.search_space = nabla_functions + composites;
  c.verdict = (gn && identity_by_i && nabla_functions == nabla_tracked &&
               composite_failures == 0)
                  ? kPass
                  : kFail;
  return c;
}

// ---------------------------------------------------------------------------
// Replay

namespace {

std::string reverify_impl(const Certificate& c) {
  const json& sub = c.subject;
  const json& wit = c.witness;
  const std::string& claim = c.claim;

  auto wit_elem = [&](const Opca& a, const char* key) -> std::optional<Elem> {
    if (wit.at(key).is_null()) return std::nullopt;
    return a.order().require(wit.at(key).get<std::string>());
  };
  auto pass_iff = [](bool ok) { return ok ? kPass : kFail; };

  if (claim == "opca-valid" || claim == "combinator-laws") {
    OpcaRef a = opca_from_json(sub.at("opca"));  // construction re-validates
    CombinatorSet cs = a->combinators();
    const json& w = claim == "opca-valid" ? wit.at("combinators") : wit;
    return pass_iff(w.at("i") == a->name_of(cs.i) &&
                    w.at("kbar") == a->name_of(cs.kbar) &&
                    w.at("p") == a->name_of(cs.p) &&
                    w.at("p0") == a->name_of(cs.p0) &&
                    w.at("p1") == a->name_of(cs.p1) &&
                    w.at("case") == a->name_of(cs.case_c));
  }
  if (claim == "combinators") {
    OpcaRef a = opca_from_json(sub.at("opca"));
    json pairs = json::array();
    for (auto [k, s] : find_ks(a->opas()))
      pairs.push_back({a->name_of(k), a->name_of(s)});
    return pass_iff(pairs == wit.at("pairs") && !pairs.empty());
  }
  if (claim == "combinatory-completeness") {
    OpcaRef a = opca_from_json(sub.at("opca"));
    CompletenessStats st = completeness_sweep(*a, sub.at("depth").get<int>(),
                                              sub.at("variables").get<int>());
    return pass_iff(st.failures == 0 && st.terms == wit.at("terms") &&
                    st.defined_checks == wit.at("defined_checks") &&
                    st.refinement_checks == wit.at("refinement_checks"));
  }
  if (claim == "eval" || claim == "compile") {
    OpcaRef a = opca_from_json(sub.at("opca"));
    TermPtr t = eliminate_lams(
        *a, parse_term(sub.at("term").get<std::string>(), *a));
    EvalResult r = eval_closed(*a, *t);
    if (claim == "compile")
      return pass_iff(r.defined() &&
                      wit.at("element") == a->name_of(*r.value));
    json v = r.defined() ? json(a->name_of(*r.value)) : json();
    return pass_iff(v == wit.at("value"));
  }
  if (claim == "morphism") {
    OpcaMorphism f = morphism_from_json(sub.at("morphism"));
    Elem t = f.target->order().require(wit.at("tracker").get<std::string>());
    Elem u = f.target->order().require(
        wit.at("order_realizer").get<std::string>());
    return pass_iff(tracker_valid(*f.source, *f.target, f.map, t) &&
                    order_realizer_valid(*f.source, *f.target, f.map, u));
  }
  if (claim == "ineq") {
    OpcaMorphism f = morphism_from_json(sub.at("lhs"));
    OpcaMorphism g = morphism_from_json(sub.at("rhs"));
    g.source = f.source;
    g.target = f.target;
    if (wit.at("realizer").is_null())
      return pass_iff(false);  // stored as a failure; nothing to re-check
    Elem s = f.target->order().require(wit.at("realizer").get<std::string>());
    return pass_iff(ineq_realizer_valid(f, g, s));
  }
  if (claim == "cd") {
    OpcaMorphism f = morphism_from_json(sub.at("morphism"));
    if (wit.at("n").is_null()) return pass_iff(false);
    return pass_iff(cd_witness_valid(f, *wit_elem(*f.target, "n")));
  }
  if (claim == "cdm") {
    OpcaMorphism f = morphism_from_json(sub.at("morphism"));
    if (wit.at("m").is_null()) return pass_iff(false);
    bool ok = cdm_witness_valid(f, *wit_elem(*f.target, "m"));
    if (wit.contains("constructed_m"))
      ok = ok && cdm_witness_valid(
                     f, f.target->order().require(
                            wit.at("constructed_m").get<std::string>()));
    return pass_iff(ok);
  }
  if (claim == "cd-cdm-agreement") {
    Certificate fresh = cert_cd_cdm_agreement(opca_from_json(sub.at("a")),
                                              opca_from_json(sub.at("b")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "discrete") {
    OpcaMorphism f = morphism_from_json(sub.at("morphism"));
    DiscreteVerdict v = is_discrete(f);
    if (wit.at("verdict").get<bool>()) return pass_iff(v.verdict);
    Bits x = mask_from_json(f.source->order(), wit.at("counterexample"));
    Bits fx(f.target->size());
    x.for_each([&](Elem e) { fx.set(f.map[e]); });
    return pass_iff(!v.verdict && f.target->order().has_lower_bound(fx) &&
                    !f.source->order().has_lower_bound(x));
  }
  if (claim == "zero") {
    OpcaMorphism f = morphism_from_json(sub.at("morphism"));
    if (!wit.at("is_zero").get<bool>())
      return pass_iff(false);
    Elem b = *wit_elem(*f.target, "image_lower_bound");
    for (Elem x = 0; x < f.source->size(); ++x)
      if (!f.target->le(b, f.map[x])) return kFail;
    return kPass;
  }
  if (claim == "trivial") {
    OpcaRef a = opca_from_json(sub.at("opca"));
    TrivialityVerdict t = is_trivial(*a);
    if (wit.at("trivial").get<bool>()) {
      auto l = wit_elem(*a, "least");
      if (!l) return kFail;
      for (Elem x = 0; x < a->size(); ++x)
        if (!a->le(*l, x)) return kFail;
      return kPass;
    }
    return pass_iff(!t.verdict);
  }
  if (claim == "adjunction") {
    OpcaMorphism l = morphism_from_json(sub.at("left"));
    OpcaMorphism r = morphism_from_json(sub.at("right"));
    r.source = l.target;
    r.target = l.source;
    if (wit.at("unit_realizer").is_null()) return pass_iff(false);
    OpcaMorphism rl = compose(l, r), lr = compose(r, l);
    Elem unit =
        l.source->order().require(wit.at("unit_realizer").get<std::string>());
    Elem counit = r.source->order().require(
        wit.at("counit_realizer").get<std::string>());
    return pass_iff(
        ineq_realizer_valid(identity_morphism(l.source), rl, unit) &&
        ineq_realizer_valid(lr, identity_morphism(r.source), counit));
  }
  if (claim == "product") {
    ProductOpca p =
        product(opca_from_json(sub.at("a0")), opca_from_json(sub.at("a1")));
    return pass_iff(
        wit.at("carrier_size").get<int>() == p.carrier->size() &&
        wit.at("k") == p.carrier->name_of(p.carrier->k()) &&
        wit.at("s") == p.carrier->name_of(p.carrier->s()) &&
        wit.at("pi0_tracker") == p.factor0->name_of(p.pi0.tracker) &&
        wit.at("pi1_tracker") == p.factor1->name_of(p.pi1.tracker) &&
        wit.at("kappa0_tracker") == p.carrier->name_of(p.kappa0.tracker) &&
        wit.at("kappa1_tracker") == p.carrier->name_of(p.kappa1.tracker));
  }
  if (claim == "two-product-law") {
    Certificate fresh = cert_two_product_law(opca_from_json(sub.at("a0")),
                                             opca_from_json(sub.at("a1")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "coproduct") {
    OpcaMorphism f0 = morphism_from_json(sub.at("f0"));
    OpcaMorphism f1 = morphism_from_json(sub.at("f1"));
    f1.target = f0.target;
    ProductOpca p = product(f0.source, f1.source);
    CotupleResult r = cotuple_morphism(p, f0, f1);
    const Opca& b = *f0.target;
    json map = json::array();
    for (Elem x = 0; x < p.carrier->size(); ++x)
      map.push_back(b.name_of(r.morphism.map[x]));
    return pass_iff(wit.at("tracker") == b.name_of(r.morphism.tracker) &&
                    wit.at("order_realizer") ==
                        b.name_of(r.morphism.order_realizer) &&
                    wit.at("map") == map);
  }
  if (claim == "coproduct-realizers") {
    Certificate fresh = cert_coproduct_realizers(
        opca_from_json(sub.at("a0")), opca_from_json(sub.at("a1")),
        opca_from_json(sub.at("b")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "biproduct") {
    Certificate fresh = cert_biproduct(opca_from_json(sub.at("a0")),
                                       opca_from_json(sub.at("a1")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "disjointness") {
    Certificate fresh = cert_disjointness(opca_from_json(sub.at("a0")),
                                          opca_from_json(sub.at("a1")),
                                          opca_from_json(sub.at("b")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "downset-opca") {
    DownsetOpcaRef t = build_T(opca_from_json(sub.at("opca")));
    return pass_iff(wit.at("carrier_size").get<int>() == t->carrier->size() &&
                    wit.at("k") == t->carrier->name_of(t->carrier->k()) &&
                    wit.at("s") == t->carrier->name_of(t->carrier->s()));
  }
  if (claim == "downsets") {
    PosetRef p = poset_from_json(sub.at("poset"));
    auto masks = nonempty_downset_masks(*p, sub.at("limit").get<uint64_t>());
    json sets = json::array();
    for (const auto& m : masks) sets.push_back(mask_to_json(*p, m));
    return pass_iff(sets == wit.at("sets"));
  }
  if (claim == "monad-laws") {
    Certificate fresh = cert_monad_laws(opca_from_json(sub.at("opca")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "projective") {
    ApplicativeMorphism f = applicative_from_json(sub.at("applicative"));
    if (wit.at("f0").is_null()) return pass_iff(false);
    ApplicativeMorphism cand{f.source, f.target, {}, 0, 0, ""};
    cand.map.resize(f.source->size());
    for (int i = 0; i < f.source->size(); ++i)
      cand.map[i] = f.target->order().below(
          f.target->order().require(wit.at("f0").at(i).get<std::string>()));
    Elem down = f.target->order().require(wit.at("down").get<std::string>());
    Elem up = f.target->order().require(wit.at("up").get<std::string>());
    return pass_iff(applicative_ineq_valid(cand, f, down) &&
                    applicative_ineq_valid(f, cand, up));
  }
  if (claim == "right-adjoint") {
    OpcaMorphism f = morphism_from_json(sub.at("morphism"));
    if (!wit.at("cd").get<bool>()) return kNA;
    Elem m = f.target->order().require(wit.at("m").get<std::string>());
    RightAdjointResult r = right_adjoint_construct(f, m);
    json g = json::array();
    for (Elem b = 0; b < f.target->size(); ++b)
      g.push_back(mask_to_json(f.source->order(), r.g.map[b]));
    return pass_iff(g == wit.at("g") &&
                    wit.at("tracker_q") == f.source->name_of(r.tracker_q) &&
                    wit.at("unit_r") ==
                        f.source->name_of(r.unit_realizer_r));
  }
  if (claim == "radj-roundtrip") {
    Certificate fresh = cert_radj_roundtrip(opca_from_json(sub.at("a")),
                                            opca_from_json(sub.at("b")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "pca-coproduct") {
    ApplicativeMorphism f0 = applicative_from_json(sub.at("f0"));
    ApplicativeMorphism f1 = applicative_from_json(sub.at("f1"));
    f1.target = f0.target;
    ProductOpca p = product(f0.source, f1.source);
    PcaCotupleResult r = pca_cotuple(p, f0, f1);
    const Opca& b = *f0.target;
    return pass_iff(wit.at("tracker") == b.name_of(r.morphism.tracker) &&
                    wit.at("order_realizer") ==
                        b.name_of(r.morphism.order_realizer));
  }
  if (claim == "pca-coproduct-sweep") {
    Certificate fresh = cert_pca_coproduct_sweep(
        opca_from_json(sub.at("a0")), opca_from_json(sub.at("a1")),
        opca_from_json(sub.at("b")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "hmaps") {
    HMapsResult r =
        h_maps(opca_from_json(sub.at("a0")), opca_from_json(sub.at("a1")));
    return pass_iff(
        r.round_trip_identity == wit.at("round_trip_identity").get<bool>() &&
        wit.at("unit_realizer") == r.tp->carrier->name_of(r.unit_realizer) &&
        wit.at("counit_realizer") ==
            r.tprod.carrier->name_of(r.counit_realizer));
  }
  if (claim == "mediator") {
    ApplicativeMorphism f0 = applicative_from_json(sub.at("f0"));
    ApplicativeMorphism f1 = applicative_from_json(sub.at("f1"));
    f1.source = f0.source;
    Certificate fresh = cert_mediator(f0, f1);
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "noprod-witness") {
    PosetRef p0 = poset_from_json(sub.at("p0"));
    PosetRef p1 = poset_from_json(sub.at("p1"));
    if (c.verdict == kNA) return p0->least() || p1->least() ? kNA : kFail;
    NoprodCertificate r = noprod_witness(p0, p1);
    json alphas = json::array();
    for (const auto& a : r.alphas) alphas.push_back(mask_to_json(*r.prod, a));
    return pass_iff(alphas == wit.at("alphas") && r.intersection_empty &&
                    r.all_full_projections);
  }
  if (claim == "enumerate") {
    Certificate fresh = cert_enumerate(poset_from_json(sub.at("poset")),
                                       sub.at("limit").get<uint64_t>());
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "assembly") {
    AssemblyRef x = assembly_from_json(sub.at("assembly"));
    Certificate fresh = cert_assembly(x);
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  if (claim == "assembly-laws") {
    Certificate fresh = cert_assembly_laws(opca_from_json(sub.at("opca")));
    return fresh.witness == wit ? fresh.verdict : kFail;
  }
  fail(ErrKind::UnknownCommand, "no verifier for claim '" + claim + "'");
}

}  // namespace

std::string reverify_certificate(const Certificate& c) {
  try {
    return reverify_impl(c);
  } catch (const Error& e) {
    return e.kind() == ErrKind::NotApplicable ? kNA : kFail;
  }
}

// ---------------------------------------------------------------------------
// Command dispatch

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "validate",  "combinators",  "compile",       "eval",
      "hom",       "ineq",         "cd",            "cdm",
      "discrete",  "zero",         "trivial",       "product",
      "coproduct", "biproduct",    "adjoint",       "downset",
      "monad-laws", "projective",  "right-adjoint", "pca-coproduct",
      "hmaps",     "mediator",     "noprod",        "enumerate",
      "assembly",  "verify"};
  return names;
}

namespace {

void expect_args(const std::vector<std::string>& args, size_t n,
                 const std::string& usage) {
  if (args.size() != n + 1)
    fail(ErrKind::UnknownCommand, "usage: " + usage);
}

std::string describe(const Certificate& c) {
  std::ostringstream os;
  os << c.claim << ": " << c.verdict;
  if (!c.witness.is_null() && c.witness.is_object()) {
    for (const char* key :
         {"element", "value", "n", "m", "tracker", "realizer", "pairs",
          "least", "carrier_size", "count", "structures_total"})
      if (c.witness.contains(key))
        os << "  " << key << "=" << c.witness.at(key).dump();
  }
  return os.str();
}

}  // namespace

CommandResult run_command(Workspace& ws, const std::vector<std::string>& args,
                          const CommandOptions& opts) {
  if (args.empty()) fail(ErrKind::UnknownCommand, "no command given");
  const std::string& cmd = args[0];
  CommandResult res;
  auto emit = [&](Certificate c) {
    res.text += describe(c) + "\n";
    if (c.verdict != kPass) res.pass = c.verdict == kNA ? res.pass : false;
    res.certificates.push_back(std::move(c));
  };

  if (cmd == "validate") {
    if (args.size() == 1) {
      for (const auto& [name, a] : ws.opcas) emit(cert_opca_valid(a));
    } else {
      for (size_t i = 1; i < args.size(); ++i)
        emit(cert_opca_valid(ws.opca(args[i])));
    }
  } else if (cmd == "combinators") {
    expect_args(args, 1, "combinators <opca>");
    emit(cert_combinators(ws.opca(args[1])));
  } else if (cmd == "compile") {
    expect_args(args, 2, "compile <opca> <term>");
    emit(cert_compile(ws.opca(args[1]), args[2]));
  } else if (cmd == "eval") {
    expect_args(args, 2, "eval <opca> <term>");
    Certificate c = cert_eval(ws.opca(args[1]), args[2]);
    res.text += args[2] + " = " +
                (c.witness.at("value").is_null()
                     ? std::string("undefined")
                     : c.witness.at("value").get<std::string>()) +
                "\n";
    res.certificates.push_back(std::move(c));
  } else if (cmd == "hom") {
    expect_args(args, 1, "hom <morphism>");
    emit(cert_morphism(ws.morphism(args[1])));
  } else if (cmd == "ineq") {
    expect_args(args, 2, "ineq <f> <g>");
    emit(cert_ineq(ws.morphism(args[1]), ws.morphism(args[2])));
  } else if (cmd == "cd") {
    expect_args(args, 1, "cd <morphism>");
    emit(cert_cd(ws.morphism(args[1])));
  } else if (cmd == "cdm") {
    expect_args(args, 1, "cdm <morphism>");
    emit(cert_cdm(ws.morphism(args[1])));
  } else if (cmd == "discrete") {
    expect_args(args, 1, "discrete <morphism>");
    emit(cert_discrete(ws.morphism(args[1]), opts.budget));
  } else if (cmd == "zero") {
    expect_args(args, 1, "zero <morphism>");
    emit(cert_zero(ws.morphism(args[1]), opts.budget));
  } else if (cmd == "trivial") {
    expect_args(args, 1, "trivial <opca>");
    emit(cert_trivial(ws.opca(args[1])));
  } else if (cmd == "product") {
    expect_args(args, 2, "product <a0> <a1>");
    emit(cert_product(ws.opca(args[1]), ws.opca(args[2])));
  } else if (cmd == "coproduct") {
    expect_args(args, 2, "coproduct <f0> <f1>");
    emit(cert_coproduct(ws.morphism(args[1]), ws.morphism(args[2])));
  } else if (cmd == "biproduct") {
    expect_args(args, 2, "biproduct <a0> <a1>");
    emit(cert_biproduct(ws.opca(args[1]), ws.opca(args[2]), opts.budget));
  } else if (cmd == "adjoint") {
    expect_args(args, 2, "adjoint <left> <right>");
    emit(cert_adjunction(ws.morphism(args[1]), ws.morphism(args[2])));
  } else if (cmd == "downset") {
    expect_args(args, 1, "downset <opca-or-poset>");
    if (ws.opcas.count(args[1])) {
      emit(cert_downset_opca(ws.opca(args[1]), opts.budget));
    } else {
      emit(cert_downsets(ws.poset(args[1]), opts.budget.downset_limit));
    }
  } else if (cmd == "monad-laws") {
    expect_args(args, 1, "monad-laws <opca>");
    emit(cert_monad_laws(ws.opca(args[1]), opts.budget));
  } else if (cmd == "projective") {
    expect_args(args, 1, "projective <applicative>");
    emit(cert_projective(ws.applicative(args[1]), opts.budget));
  } else if (cmd == "right-adjoint") {
    expect_args(args, 1, "right-adjoint <morphism>");
    emit(cert_right_adjoint(ws.morphism(args[1])));
  } else if (cmd == "pca-coproduct") {
    expect_args(args, 2, "pca-coproduct <f0> <f1>");
    emit(cert_pca_coproduct(ws.applicative(args[1]), ws.applicative(args[2])));
  } else if (cmd == "hmaps") {
    expect_args(args, 2, "hmaps <a0> <a1>");
    emit(cert_hmaps(ws.opca(args[1]), ws.opca(args[2]), opts.budget));
  } else if (cmd == "mediator") {
    expect_args(args, 2, "mediator <f0> <f1>");
    emit(cert_mediator(ws.applicative(args[1]), ws.applicative(args[2])));
  } else if (cmd == "noprod") {
    expect_args(args, 2, "noprod <p0> <p1>");
    emit(cert_noprod(ws.poset(args[1]), ws.poset(args[2])));
  } else if (cmd == "enumerate") {
    expect_args(args, 1, "enumerate <poset>");
    emit(cert_enumerate(ws.poset(args[1]), opts.limit, opts.budget));
  } else if (cmd == "assembly") {
    expect_args(args, 1, "assembly <name>");
    emit(cert_assembly(ws.assembly(args[1])));
  } else if (cmd == "verify") {
    if (args.size() < 2) fail(ErrKind::UnknownCommand, "usage: verify <file>...");
    for (size_t i = 1; i < args.size(); ++i) {
      std::ifstream in(args[i]);
      if (!in) fail(ErrKind::ParseError, "cannot open '" + args[i] + "'");
      json doc = json::parse(in, nullptr, true);
      std::vector<json> docs;
      if (doc.is_array())
        docs.assign(doc.begin(), doc.end());
      else
        docs.push_back(doc);
      for (const auto& d : docs) {
        Certificate stored = Certificate::from_json(d);
        std::string verdict = reverify_certificate(stored);
        bool match = verdict == stored.verdict;
        Certificate replayed = stored;
        replayed.verdict = verdict;
        bool bytes = replayed.canonical() ==
                     stored.canonical();  // equal iff verdicts agree
        res.text += stored.claim + ": stored=" + stored.verdict +
                    " replayed=" + verdict +
                    (match && bytes ? " [ok]" : " [MISMATCH]") + "\n";
        if (!match || !bytes) res.pass = false;
      }
    }
  } else {
    fail(ErrKind::UnknownCommand, "unknown command '" + cmd + "'");
  }
  return res;
}

}  // namespace opca
