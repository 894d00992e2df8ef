#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "opca/opas.hpp"

namespace opca {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// AST of the term language over an OPCA. Application associates to the
/// left in both parsing and printing; Lam is surface syntax only and is
/// eliminated by bracket abstraction before evaluation.
struct Term {
  enum class Kind { Var, Const, App, Lam };
  Kind kind;

  std::string var;                   // Var
  Elem c = kUndef;                   // Const
  TermPtr fn, arg;                   // App
  std::vector<std::string> binders;  // Lam (nonempty, duplicate-free)
  TermPtr body;                      // Lam
};

TermPtr tvar(std::string name);
TermPtr tconst(Elem c);
TermPtr tapp(TermPtr f, TermPtr a);
TermPtr tapp(std::initializer_list<TermPtr> chain);  // left fold
TermPtr tlam(std::vector<std::string> binders, TermPtr body);

bool term_eq(const Term& a, const Term& b);
std::vector<std::string> free_vars(const Term& t);

// Grammar: juxtaposition is application (left-assoc), parentheses group,
// `\x y. t` binds; identifiers bound by an enclosing binder are variables,
// identifiers naming elements of `a` are constants, anything else is an
// error. Errors carry the byte offset.
TermPtr parse_term(const std::string& text, const Opca& a);

std::string print_term(const Term& t, const Opca& a);

/// Result of evaluating a closed term; undefined propagates strictly.
struct EvalResult {
  std::optional<Elem> value;
  bool defined() const { return value.has_value(); }
};

// Strict bottom-up evaluation through the partial table. Throws OpenTerm on
// free variables or un-eliminated Lam nodes.
EvalResult eval_closed(const Opca& a, const Term& t);

// Replaces every Lam node by its bracket-abstraction expansion (a Lam-free
// term over the same free variables).
TermPtr eliminate_lams(const Opca& a, const TermPtr& t);

// The element lambda* vars . t; requires FV(t) within vars. Iterates
// single-variable abstraction right to left, then evaluates the resulting
// closed term (UndefinedCombinator if that fails, which signals a table
// bug rather than a normal outcome).
Elem bracket_abstract(const Opca& a, const TermPtr& t,
                      const std::vector<std::string>& vars);

enum class CompareMode { Refines, KleeneEqual, Le, Eq };

// The four relations on closed-term values: e1 refines e2 (if e2 is
// defined, e1 is defined and below it), Kleene equality, and the strict
// forms requiring definedness of both sides.
bool kleene_compare(const Opca& a, const Term& e1, const Term& e2,
                    CompareMode mode);

bool value_refines(const Opca& a, const std::optional<Elem>& v1,
                   const std::optional<Elem>& v2);

}  // namespace opca
