#include "opca/poset.hpp"

#include <algorithm>
#include <map>

namespace opca {

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::EmptySeed: return "EmptySeed";
    case ErrKind::UnknownElement: return "UnknownElement";
    case ErrKind::SizeLimit: return "SizeLimit";
    case ErrKind::Axiom0Violation: return "Axiom0Violation";
    case ErrKind::NoCombinators: return "NoCombinators";
    case ErrKind::UndefinedCombinator: return "UndefinedCombinator";
    case ErrKind::OpenTerm: return "OpenTerm";
    case ErrKind::UnboundVariable: return "UnboundVariable";
    case ErrKind::SyntaxError: return "SyntaxError";
    case ErrKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrKind::Mismatch: return "Mismatch";
    case ErrKind::SourceMismatch: return "SourceMismatch";
    case ErrKind::ConstructionFailed: return "ConstructionFailed";
    case ErrKind::RealizerInvalid: return "RealizerInvalid";
    case ErrKind::NotApplicable: return "NotApplicable";
    case ErrKind::ExtractionFailed: return "ExtractionFailed";
    case ErrKind::BaseMismatch: return "BaseMismatch";
    case ErrKind::ParseError: return "ParseError";
    case ErrKind::ValidationError: return "ValidationError";
    case ErrKind::UnknownCommand: return "UnknownCommand";
    case ErrKind::UnknownName: return "UnknownName";
  }
  return "Error";
}

PosetRef FinPoset::make(
    std::string name, std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& le_generators) {
  if (elements.empty())
    fail(ErrKind::ValidationError, "poset '" + name + "' has no elements");
  std::map<std::string, int> index;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], int(i)).second)
      fail(ErrKind::ValidationError,
           "duplicate element '" + elements[i] + "' in poset '" + name + "'");
  }
  int n = int(elements.size());

  // below[b] = {a : a <= b}; start from reflexivity plus generators, then
  // close transitively.
  std::vector<Bits> below(n, Bits(n));
  for (int i = 0; i < n; ++i) below[i].set(i);
  for (const auto& [lo, hi] : le_generators) {
    auto il = index.find(lo), ih = index.find(hi);
    if (il == index.end())
      fail(ErrKind::UnknownElement, "'" + lo + "' in order of '" + name + "'");
    if (ih == index.end())
      fail(ErrKind::UnknownElement, "'" + hi + "' in order of '" + name + "'");
    below[ih->second].set(il->second);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int b = 0; b < n; ++b) {
      Bits acc = below[b];
      below[b].for_each([&](int m) { acc |= below[m]; });
      if (!(acc == below[b])) {
        below[b] = acc;
        changed = true;
      }
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (below[b].test(a) && below[a].test(b))
        fail(ErrKind::ValidationError,
             "antisymmetry fails in poset '" + name + "': " + elements[a] +
                 " <= " + elements[b] + " and conversely");

  auto p = std::shared_ptr<FinPoset>(new FinPoset());
  p->name_ = std::move(name);
  p->names_ = std::move(elements);
  p->below_ = std::move(below);
  p->above_.assign(n, Bits(n));
  for (int b = 0; b < n; ++b)
    p->below_[b].for_each([&](int a) { p->above_[a].set(b); });
  return p;
}

PosetRef FinPoset::make_from_relation(std::string name,
                                      std::vector<std::string> elements,
                                      const std::function<bool(int, int)>& le,
                                      bool validate) {
  if (elements.empty())
    fail(ErrKind::ValidationError, "poset '" + name + "' has no elements");
  int n = int(elements.size());
  auto p = std::shared_ptr<FinPoset>(new FinPoset());
  p->name_ = std::move(name);
  p->names_ = std::move(elements);
  p->below_.assign(n, Bits(n));
  p->above_.assign(n, Bits(n));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (le(a, b)) {
        p->below_[b].set(a);
        p->above_[a].set(b);
      }
  if (validate) {
    for (int a = 0; a < n; ++a) {
      if (!p->below_[a].test(a))
        fail(ErrKind::ValidationError, "relation not reflexive");
      for (int b = 0; b < n; ++b) {
        if (a != b && p->below_[b].test(a) && p->below_[a].test(b))
          fail(ErrKind::ValidationError, "relation not antisymmetric");
        if (p->below_[b].test(a) && !p->below_[a].subset_of(p->below_[b]))
          fail(ErrKind::ValidationError, "relation not transitive");
      }
    }
  }
  return p;
}

std::optional<Elem> FinPoset::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return Elem(i);
  return std::nullopt;
}

Elem FinPoset::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i)
    fail(ErrKind::UnknownElement, "'" + name + "' in poset '" + name_ + "'");
  return *i;
}

std::optional<Elem> FinPoset::least() const {
  for (int e = 0; e < size(); ++e)
    if (above_[e].count() == size()) return e;
  return std::nullopt;
}

std::vector<Elem> FinPoset::minimal_elements() const {
  std::vector<Elem> out;
  for (int e = 0; e < size(); ++e)
    if (below_[e].count() == 1) out.push_back(e);
  return out;
}

bool FinPoset::has_lower_bound(const Bits& subset) const {
  return some_lower_bound(subset).has_value();
}

std::optional<Elem> FinPoset::some_lower_bound(const Bits& subset) const {
  for (int e = 0; e < size(); ++e)
    if (subset.subset_of(above_[e])) return e;
  return std::nullopt;
}

Bits FinPoset::full_mask() const {
  Bits m(size());
  for (int i = 0; i < size(); ++i) m.set(i);
  return m;
}

std::vector<std::string> Downset::member_names() const {
  std::vector<std::string> out;
  members.for_each([&](int i) { out.push_back(base->name_of(i)); });
  return out;
}

Bits downset_closure_mask(const FinPoset& p, const Bits& seed) {
  Bits out(p.size());
  seed.for_each([&](int e) { out |= p.below(e); });
  return out;
}

Downset downset_closure(const PosetRef& p, const Bits& seed) {
  if (seed.none()) fail(ErrKind::EmptySeed, "downset seed is empty");
  if (seed.size() != p->size())
    fail(ErrKind::UnknownElement, "seed mask does not match poset");
  return Downset{p, downset_closure_mask(*p, seed)};
}

Downset downset_closure(const PosetRef& p,
                        const std::vector<std::string>& seed) {
  if (seed.empty()) fail(ErrKind::EmptySeed, "downset seed is empty");
  Bits m(p->size());
  for (const auto& s : seed) m.set(p->require(s));
  return downset_closure(p, m);
}

bool is_downward_closed(const FinPoset& p, const Bits& s) {
  bool ok = true;
  s.for_each([&](int e) {
    if (!p.below(e).subset_of(s)) ok = false;
  });
  return ok;
}

namespace {

// Backtracking enumeration that decides membership from the highest declared
// index down, visiting the "out" branch first; leaves arrive in ascending
// numeric order of the membership mask, and the tree size stays proportional
// to the number of downsets (every consistent partial assignment extends).
struct DownsetEnum {
  const FinPoset& p;
  uint64_t limit;
  std::vector<Bits> out;
  Bits in, decided_out, forced;

  DownsetEnum(const FinPoset& poset, uint64_t lim)
      : p(poset), limit(lim), in(poset.size()), decided_out(poset.size()),
        forced(poset.size()) {}

  void run() { rec(p.size() - 1); }

  void rec(int e) {
    if (e < 0) {
      if (in.any()) {
        if (out.size() >= limit)
          fail(ErrKind::SizeLimit,
               "more than " + std::to_string(limit) + " downsets in '" +
                   p.name() + "'");
        out.push_back(in);
      }
      return;
    }
    if (!forced.test(e)) {
      decided_out.set(e);
      rec(e - 1);
      decided_out.reset(e);
    }
    if (!p.below(e).intersects(decided_out)) {
      Bits saved_forced = forced;
      in.set(e);
      forced |= p.below(e);
      rec(e - 1);
      in.reset(e);
      forced = std::move(saved_forced);
    }
  }
};

}  // namespace

std::vector<Bits> nonempty_downset_masks(const FinPoset& p, uint64_t limit) {
  if (p.size() > 4096)
    fail(ErrKind::SizeLimit, "poset '" + p.name() + "' too large (" +
                                 std::to_string(p.size()) + " elements)");
  DownsetEnum e(p, limit);
  e.run();
  return std::move(e.out);
}

std::vector<Downset> nonempty_downsets(const PosetRef& p, uint64_t limit) {
  std::vector<Downset> out;
  for (auto& m : nonempty_downset_masks(*p, limit))
    out.push_back(Downset{p, std::move(m)});
  return out;
}

PosetRef product_poset(const PosetRef& p, const PosetRef& q) {
  std::vector<std::string> names;
  names.reserve(size_t(p->size()) * q->size());
  for (int a = 0; a < p->size(); ++a)
    for (int b = 0; b < q->size(); ++b)
      names.push_back("(" + p->name_of(a) + "," + q->name_of(b) + ")");
  int qs = q->size();
  return FinPoset::make_from_relation(
      "(" + p->name() + " x " + q->name() + ")", std::move(names),
      [&, qs](int x, int y) {
        return p->le(x / qs, y / qs) && q->le(x % qs, y % qs);
      });
}

}  // namespace opca
