#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "opca/poset.hpp"

namespace opca {

/// Partial binary application table; kUndef entries are undefined.
struct AppTable {
  int n = 0;
  std::vector<Elem> v;  // row-major, n*n

  AppTable() = default;
  explicit AppTable(int size) : n(size), v(size_t(size) * size, kUndef) {}

  Elem at(Elem a, Elem b) const { return v[size_t(a) * n + b]; }
  Elem& at(Elem a, Elem b) { return v[size_t(a) * n + b]; }
  bool defined(Elem a, Elem b) const { return at(a, b) != kUndef; }
};

struct Axiom0Witness {
  Elem a_lo, a_hi, b_lo, b_hi;  // a_lo <= a_hi, b_lo <= b_hi
  bool undefined;               // true: a_lo*b_lo undefined while a_hi*b_hi defined
};

/// An ordered partial applicative structure: monotonicity axiom checked
/// exhaustively at construction.
class Opas {
 public:
  static Opas validate(PosetRef order, AppTable app);

  // Exhaustive monotonicity check; nullopt when the table passes.
  static std::optional<Axiom0Witness> axiom0_counterexample(
      const FinPoset& order, const AppTable& app);

  const FinPoset& order() const { return *order_; }
  const PosetRef& order_ref() const { return order_; }
  const AppTable& table() const { return app_; }
  int size() const { return order_->size(); }

  Elem raw_app(Elem a, Elem b) const { return app_.at(a, b); }
  std::optional<Elem> app(Elem a, Elem b) const {
    Elem r = app_.at(a, b);
    if (r == kUndef) return std::nullopt;
    return r;
  }

 private:
  Opas(PosetRef order, AppTable app)
      : order_(std::move(order)), app_(std::move(app)) {}
  PosetRef order_;
  AppTable app_;
};

/// i, kbar, p, p0, p1 and the case combinator, derived from the chosen k, s.
struct CombinatorSet {
  Elem i = kUndef, kbar = kUndef, p = kUndef, p0 = kUndef, p1 = kUndef,
       case_c = kUndef;
};

class Opca;
using OpcaRef = std::shared_ptr<const Opca>;

/// An OPAS together with a chosen (k, s) pair and the derived combinators.
/// Axioms (1)-(3) and all derived-combinator laws are verified exhaustively
/// at construction; everything downstream may rely on them.
class Opca {
 public:
  // With no pinned pair, takes the first valid (k, s) in canonical order.
  static OpcaRef make(Opas opas, std::string name,
                      std::optional<std::pair<Elem, Elem>> pinned = {});

  const std::string& name() const { return name_; }
  const Opas& opas() const { return opas_; }
  const FinPoset& order() const { return opas_.order(); }
  const PosetRef& order_ref() const { return opas_.order_ref(); }
  int size() const { return opas_.size(); }

  std::optional<Elem> app(Elem a, Elem b) const { return opas_.app(a, b); }
  bool le(Elem a, Elem b) const { return order().le(a, b); }
  const std::string& name_of(Elem e) const { return order().name_of(e); }

  Elem k() const { return k_; }
  Elem s() const { return s_; }
  const CombinatorSet& combinators() const { return combs_; }

  // Left-fold application of an element chain; nullopt once any step is
  // undefined.
  std::optional<Elem> app_chain(const std::vector<Elem>& es) const;

 private:
  Opca(Opas opas, std::string name) : opas_(std::move(opas)), name_(std::move(name)) {}
  Opas opas_;
  std::string name_;
  Elem k_ = kUndef, s_ = kUndef;
  CombinatorSet combs_;
};

// (k, s) candidates satisfying axioms (1)-(3), in canonical order.
std::vector<std::pair<Elem, Elem>> find_ks(const Opas& opas);

bool ks_pair_valid(const Opas& opas, Elem k, Elem s);

// Derived combinators of an OPCA whose (k, s) is already fixed; evaluates
// the defining closed terms and verifies every law exhaustively.
CombinatorSet derived_combinators(const Opca& a);

struct TrivialityVerdict {
  bool verdict;
  std::optional<Elem> least;        // witness when trivial
  std::vector<Elem> minimal_antichain;  // counter-witness otherwise
};
TrivialityVerdict is_trivial(const Opca& a);

struct PseudotrivialityVerdict {
  bool verdict;
  std::optional<std::pair<Elem, Elem>> unbounded_pair;
};
PseudotrivialityVerdict is_pseudotrivial(const Opca& a);

// Streams every application table on `order` that passes monotonicity and
// admits some (k, s), in canonical table order, stopping after `limit`
// structures. The callback returns false to stop early.
struct EnumerationStats {
  uint64_t tables_passing_axiom0 = 0;
  uint64_t structures_total = 0;     // all tables admitting some (k,s)
  uint64_t structures_streamed = 0;  // yielded (bounded by `limit`)
};
EnumerationStats enumerate_opcas(
    const PosetRef& order, uint64_t limit,
    const std::function<bool(const Opas&, Elem k, Elem s)>& yield,
    const Budget& budget = {});

}  // namespace opca
