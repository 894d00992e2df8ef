#include "opca/opas.hpp"

#include <thread>

#include "opca/term.hpp"

namespace opca {

std::optional<Axiom0Witness> Opas::axiom0_counterexample(const FinPoset& order,
                                                         const AppTable& app) {
  int n = order.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem ab = app.at(a, b);
      if (ab == kUndef) continue;
      bool bad = false;
      Axiom0Witness w{};
      order.below(a).for_each([&](Elem a2) {
        if (bad) return;
        order.below(b).for_each([&](Elem b2) {
          if (bad) return;
          Elem v = app.at(a2, b2);
          if (v == kUndef) {
            w = {a2, a, b2, b, true};
            bad = true;
          } else if (!order.le(v, ab)) {
            w = {a2, a, b2, b, false};
            bad = true;
          }
        });
      });
      if (bad) return w;
    }
  return std::nullopt;
}

Opas Opas::validate(PosetRef order, AppTable app) {
  if (app.n != order->size())
    fail(ErrKind::UnknownElement,
         "application table size mismatch in '" + order->name() + "'");
  for (Elem v : app.v)
    if (v != kUndef && (v < 0 || v >= app.n))
      fail(ErrKind::UnknownElement, "table entry out of range");
  if (auto w = axiom0_counterexample(*order, app)) {
    const auto& nm = [&](Elem e) { return order->name_of(e); };
    fail(ErrKind::Axiom0Violation,
         "in '" + order->name() + "': " + nm(w->a_lo) + "<=" + nm(w->a_hi) +
             ", " + nm(w->b_lo) + "<=" + nm(w->b_hi) + ", " + nm(w->a_hi) +
             "*" + nm(w->b_hi) + " defined but " + nm(w->a_lo) + "*" +
             nm(w->b_lo) +
             (w->undefined ? " is undefined" : " is not below it"));
  }
  return Opas(std::move(order), std::move(app));
}

namespace {

bool ks_valid_on_table(const FinPoset& ord, const AppTable& t, Elem k,
                       Elem s) {
  int n = ord.size();
  // (1) k a b <= a
  for (Elem a = 0; a < n; ++a) {
    Elem ka = t.at(k, a);
    if (ka == kUndef) return false;
    for (Elem b = 0; b < n; ++b) {
      Elem kab = t.at(ka, b);
      if (kab == kUndef || !ord.le(kab, a)) return false;
    }
  }
  // (2) s a b defined
  for (Elem a = 0; a < n; ++a) {
    Elem sa = t.at(s, a);
    if (sa == kUndef) return false;
    for (Elem b = 0; b < n; ++b)
      if (t.at(sa, b) == kUndef) return false;
  }
  // (3) s a b c refines a c (b c)
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      Elem sab = t.at(t.at(s, a), b);
      for (Elem c = 0; c < n; ++c) {
        Elem ac = t.at(a, c);
        Elem bc = t.at(b, c);
        if (ac == kUndef || bc == kUndef) continue;
        Elem rhs = t.at(ac, bc);
        if (rhs == kUndef) continue;
        Elem lhs = t.at(sab, c);
        if (lhs == kUndef || !ord.le(lhs, rhs)) return false;
      }
    }
  return true;
}

std::optional<std::pair<Elem, Elem>> first_ks_on_table(const FinPoset& ord,
                                                       const AppTable& t) {
  for (Elem k = 0; k < ord.size(); ++k)
    for (Elem s = 0; s < ord.size(); ++s)
      if (ks_valid_on_table(ord, t, k, s)) return std::make_pair(k, s);
  return std::nullopt;
}

}  // namespace

bool ks_pair_valid(const Opas& opas, Elem k, Elem s) {
  return ks_valid_on_table(opas.order(), opas.table(), k, s);
}

std::vector<std::pair<Elem, Elem>> find_ks(const Opas& opas) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem k = 0; k < opas.size(); ++k)
    for (Elem s = 0; s < opas.size(); ++s)
      if (ks_pair_valid(opas, k, s)) out.emplace_back(k, s);
  return out;
}

std::optional<Elem> Opca::app_chain(const std::vector<Elem>& es) const {
  if (es.empty()) return std::nullopt;
  Elem acc = es[0];
  for (size_t i = 1; i < es.size(); ++i) {
    Elem next = opas_.raw_app(acc, es[i]);
    if (next == kUndef) return std::nullopt;
    acc = next;
  }
  return acc;
}

namespace {

void check_law(const Opca& a, bool ok, const std::string& what) {
  if (!ok)
    fail(ErrKind::ValidationError,
         "combinator law '" + what + "' fails in " + a.name());
}

}  // namespace

CombinatorSet derived_combinators(const Opca& a) {
  auto eval_or_fail = [&](const TermPtr& t, const char* what) -> Elem {
    EvalResult r = eval_closed(a, *t);
    if (!r.defined())
      fail(ErrKind::UndefinedCombinator,
           std::string(what) + " does not evaluate in " + a.name());
    return *r.value;
  };

  CombinatorSet cs;
  cs.i = eval_or_fail(tapp({tconst(a.s()), tconst(a.k()), tconst(a.k())}),
                      "i = skk");
  cs.kbar = eval_or_fail(tapp(tconst(a.k()), tconst(cs.i)), "kbar = ki");
  cs.p = bracket_abstract(a, tapp({tvar("z"), tvar("x"), tvar("y")}),
                          {"x", "y", "z"});
  cs.p0 = bracket_abstract(a, tapp(tvar("x"), tconst(a.k())), {"x"});
  cs.p1 = bracket_abstract(a, tapp(tvar("x"), tconst(cs.kbar)), {"x"});
  cs.case_c = cs.i;

  int n = a.size();
  for (Elem x = 0; x < n; ++x) {
    auto ix = a.app(cs.i, x);
    check_law(a, ix && a.le(*ix, x), "i a <= a");
    for (Elem y = 0; y < n; ++y) {
      auto kb = a.app_chain({cs.kbar, x, y});
      check_law(a, kb && a.le(*kb, y), "kbar a b <= b");
      auto pxy = a.app_chain({cs.p, x, y});
      check_law(a, pxy.has_value(), "p a b defined");
      auto l = a.app(cs.p0, *pxy);
      check_law(a, l && a.le(*l, x), "p0 (p a b) <= a");
      auto r = a.app(cs.p1, *pxy);
      check_law(a, r && a.le(*r, y), "p1 (p a b) <= b");
      auto ct = a.app_chain({cs.case_c, a.k(), x, y});
      check_law(a, ct && a.le(*ct, x), "C k a b <= a");
      auto cf = a.app_chain({cs.case_c, cs.kbar, x, y});
      check_law(a, cf && a.le(*cf, y), "C kbar a b <= b");
    }
  }
  return cs;
}

OpcaRef Opca::make(Opas opas, std::string name,
                   std::optional<std::pair<Elem, Elem>> pinned) {
  auto a = std::shared_ptr<Opca>(new Opca(std::move(opas), std::move(name)));
  if (pinned) {
    if (!ks_pair_valid(a->opas_, pinned->first, pinned->second))
      fail(ErrKind::ValidationError,
           "pinned (k,s) = (" + a->name_of(pinned->first) + "," +
               a->name_of(pinned->second) + ") fails axioms (1)-(3) in " +
               a->name());
    a->k_ = pinned->first;
    a->s_ = pinned->second;
  } else {
    auto pairs = find_ks(a->opas_);
    if (pairs.empty())
      fail(ErrKind::NoCombinators,
           "'" + a->name() + "' admits no (k,s): it is an OPAS, not an OPCA");
    a->k_ = pairs[0].first;
    a->s_ = pairs[0].second;
  }
  a->combs_ = derived_combinators(*a);
  return a;
}

TrivialityVerdict is_trivial(const Opca& a) {
  if (auto l = a.order().least()) return {true, l, {}};
  return {false, std::nullopt, a.order().minimal_elements()};
}

PseudotrivialityVerdict is_pseudotrivial(const Opca& a) {
  int n = a.size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) {
      Bits pair(n);
      pair.set(x);
      pair.set(y);
      if (!a.order().has_lower_bound(pair))
        return {false, std::make_pair(x, y)};
    }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Exhaustive structure search
//
// Entries are filled in row-major order and every assignment is checked for
// monotonicity against the entries already placed, so the leaves are exactly
// the tables passing axiom (0), visited in canonical table order (undefined
// before e0 before e1 ...).

namespace {

struct FoundTable {
  AppTable table;
  Elem k, s;
};

struct TableDfs {
  const FinPoset& ord;
  int n;
  AppTable table;
  uint64_t axiom0_count = 0;
  uint64_t total_count = 0;
  std::vector<FoundTable> found;
  uint64_t found_cap;

  TableDfs(const FinPoset& o, uint64_t cap)
      : ord(o), n(o.size()), table(o.size()), found_cap(cap) {}

  bool consistent(int idx, Elem v) const {
    Elem a = idx / n, b = idx % n;
    for (int j = 0; j < idx; ++j) {
      Elem a2 = j / n, b2 = j % n;
      Elem v2 = table.v[j];
      if (ord.le(a, a2) && ord.le(b, b2) && v2 != kUndef &&
          (v == kUndef || !ord.le(v, v2)))
        return false;
      if (ord.le(a2, a) && ord.le(b2, b) && v != kUndef &&
          (v2 == kUndef || !ord.le(v2, v)))
        return false;
    }
    return true;
  }

  void rec(int idx) {
    if (idx == n * n) {
      ++axiom0_count;
      if (auto ks = first_ks_on_table(ord, table)) {
        ++total_count;
        if (found.size() < found_cap)
          found.push_back({table, ks->first, ks->second});
      }
      return;
    }
    for (Elem v = kUndef; v < n; ++v) {
      if (!consistent(idx, v)) continue;
      table.v[idx] = v;
      rec(idx + 1);
    }
    table.v[idx] = kUndef;
  }
};

}  // namespace

EnumerationStats enumerate_opcas(
    const PosetRef& order, uint64_t limit,
    const std::function<bool(const Opas&, Elem k, Elem s)>& yield,
    const Budget& budget) {
  int n = order->size();
  int cap = budget.enumerate_allow4 ? 4 : budget.enumerate_cap;
  if (n > cap)
    fail(ErrKind::SizeLimit,
         "structure enumeration capped at " + std::to_string(cap) +
             " elements (got " + std::to_string(n) + ")");

  EnumerationStats stats;
  std::vector<FoundTable> found;

  if (budget.threads <= 1) {
    TableDfs dfs(*order, limit);
    dfs.rec(0);
    stats.tables_passing_axiom0 = dfs.axiom0_count;
    stats.structures_total = dfs.total_count;
    found = std::move(dfs.found);
  } else {
    // One worker per value of the first table entry; branch results are
    // concatenated in canonical branch order, so output and stats are
    // independent of the thread count.
    int branches = n + 1;
    std::vector<TableDfs> dfs(branches, TableDfs(*order, limit));
    std::vector<std::thread> pool;
    for (int b = 0; b < branches; ++b)
      pool.emplace_back([&dfs, b] {
        Elem v = Elem(b) - 1;
        if (!dfs[b].consistent(0, v)) return;
        dfs[b].table.v[0] = v;
        dfs[b].rec(1);
      });
    for (auto& t : pool) t.join();
    for (int b = 0; b < branches; ++b) {
      stats.tables_passing_axiom0 += dfs[b].axiom0_count;
      stats.structures_total += dfs[b].total_count;
      for (auto& f : dfs[b].found) {
        if (found.size() >= limit) break;
        found.push_back(std::move(f));
      }
    }
    if (found.size() > limit) found.resize(limit);
  }

  for (auto& f : found) {
    if (stats.structures_streamed >= limit) break;
    Opas opas = Opas::validate(order, f.table);  // closed under the validator
    ++stats.structures_streamed;
    if (!yield(opas, f.k, f.s)) break;
  }
  return stats;
}

}  // namespace opca
