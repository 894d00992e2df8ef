#include "opca/term.hpp"

#include <algorithm>
#include <set>

namespace opca {

TermPtr tvar(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->var = std::move(name);
  return t;
}

TermPtr tconst(Elem c) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Const;
  t->c = c;
  return t;
}

TermPtr tapp(TermPtr f, TermPtr a) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::App;
  t->fn = std::move(f);
  t->arg = std::move(a);
  return t;
}

TermPtr tapp(std::initializer_list<TermPtr> chain) {
  TermPtr acc;
  for (const auto& t : chain) acc = acc ? tapp(acc, t) : t;
  return acc;
}

TermPtr tlam(std::vector<std::string> binders, TermPtr body) {
  if (binders.empty())
    fail(ErrKind::ValidationError, "lambda with empty binder list");
  std::set<std::string> seen(binders.begin(), binders.end());
  if (seen.size() != binders.size())
    fail(ErrKind::ValidationError, "duplicate binder in lambda");
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Lam;
  t->binders = std::move(binders);
  t->body = std::move(body);
  return t;
}

bool term_eq(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Term::Kind::Var: return a.var == b.var;
    case Term::Kind::Const: return a.c == b.c;
    case Term::Kind::App:
      return term_eq(*a.fn, *b.fn) && term_eq(*a.arg, *b.arg);
    case Term::Kind::Lam:
      return a.binders == b.binders && term_eq(*a.body, *b.body);
  }
  return false;
}

namespace {

void collect_free(const Term& t, std::vector<std::string>& bound,
                  std::vector<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.var) == bound.end() &&
          std::find(out.begin(), out.end(), t.var) == out.end())
        out.push_back(t.var);
      break;
    case Term::Kind::Const:
      break;
    case Term::Kind::App:
      collect_free(*t.fn, bound, out);
      collect_free(*t.arg, bound, out);
      break;
    case Term::Kind::Lam: {
      size_t mark = bound.size();
      bound.insert(bound.end(), t.binders.begin(), t.binders.end());
      collect_free(*t.body, bound, out);
      bound.resize(mark);
      break;
    }
  }
}

}  // namespace

std::vector<std::string> free_vars(const Term& t) {
  std::vector<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool ident_char(char c) {
  switch (c) {
    case ' ': case '\t': case '\r': case '\n':
    case '\\': case '(': case ')': case '.': case ',': case '{': case '}':
      return false;
    default:
      return !iscntrl(static_cast<unsigned char>(c));
  }
}

struct Parser {
  const std::string& text;
  const Opca& a;
  size_t pos = 0;
  std::vector<std::string> scope;

  void skip_ws() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void err(const std::string& msg) {
    fail(ErrKind::SyntaxError, msg + " at offset " + std::to_string(pos));
  }

  bool at_ident() { return pos < text.size() && ident_char(text[pos]); }

  std::string ident() {
    size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  TermPtr atom() {
    skip_ws();
    if (pos >= text.size()) err("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      TermPtr t = term();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') err("expected ')'");
      ++pos;
      return t;
    }
    if (at_ident()) {
      size_t at = pos;
      std::string id = ident();
      if (std::find(scope.rbegin(), scope.rend(), id) != scope.rend())
        return tvar(id);
      if (auto e = a.order().index_of(id)) return tconst(*e);
      pos = at;
      fail(ErrKind::UnknownIdentifier,
           "'" + id + "' is neither bound nor an element of " + a.name() +
               " (offset " + std::to_string(at) + ")");
    }
    err(std::string("unexpected '") + text[pos] + "'");
  }

  TermPtr term() {
    skip_ws();
    if (pos < text.size() && text[pos] == '\\') {
      ++pos;
      std::vector<std::string> binders;
      skip_ws();
      while (at_ident()) {
        binders.push_back(ident());
        skip_ws();
      }
      if (binders.empty()) err("expected binder after '\\'");
      if (pos >= text.size() || text[pos] != '.') err("expected '.'");
      ++pos;
      scope.insert(scope.end(), binders.begin(), binders.end());
      TermPtr body = term();
      scope.resize(scope.size() - binders.size());
      return tlam(std::move(binders), std::move(body));
    }
    TermPtr t = atom();
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] == ')' || text[pos] == '\\') break;
      t = tapp(std::move(t), atom());
    }
    return t;
  }
};

}  // namespace

TermPtr parse_term(const std::string& text, const Opca& a) {
  Parser p{text, a, 0, {}};
  p.skip_ws();
  if (p.pos >= text.size()) p.err("empty term");
  TermPtr t = p.term();
  p.skip_ws();
  if (p.pos < text.size()) p.err("trailing input");
  return t;
}

namespace {

std::string print_atom(const Term& t, const Opca& a);

std::string print_rec(const Term& t, const Opca& a) {
  switch (t.kind) {
    case Term::Kind::Var: return t.var;
    case Term::Kind::Const: return a.name_of(t.c);
    case Term::Kind::App: {
      // A lambda in function position needs parentheses; a left-nested
      // application does not.
      std::string fn = t.fn->kind == Term::Kind::Lam
                           ? "(" + print_rec(*t.fn, a) + ")"
                           : print_rec(*t.fn, a);
      return fn + " " + print_atom(*t.arg, a);
    }
    case Term::Kind::Lam: {
      std::string s = "\\";
      for (size_t i = 0; i < t.binders.size(); ++i)
        s += (i ? " " : "") + t.binders[i];
      return s + ". " + print_rec(*t.body, a);
    }
  }
  return "";
}

std::string print_atom(const Term& t, const Opca& a) {
  if (t.kind == Term::Kind::App || t.kind == Term::Kind::Lam)
    return "(" + print_rec(t, a) + ")";
  return print_rec(t, a);
}

}  // namespace

std::string print_term(const Term& t, const Opca& a) {
  return print_rec(t, a);
}

// ---------------------------------------------------------------------------
// Evaluation

EvalResult eval_closed(const Opca& a, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Var:
      fail(ErrKind::OpenTerm, "free variable '" + t.var + "'");
    case Term::Kind::Lam:
      fail(ErrKind::OpenTerm, "lambda must be compiled before evaluation");
    case Term::Kind::Const:
      return {t.c};
    case Term::Kind::App: {
      EvalResult f = eval_closed(a, *t.fn);
      if (!f.defined()) return {std::nullopt};
      EvalResult x = eval_closed(a, *t.arg);
      if (!x.defined()) return {std::nullopt};
      return {a.app(*f.value, *x.value)};
    }
  }
  return {std::nullopt};
}

// ---------------------------------------------------------------------------
// Bracket abstraction
//
// abs(x, x)       = s k k
// abs(x, atom)    = k atom          (atom a constant or a variable /= x)
// abs(x, t0 t1)   = s abs(x,t0) abs(x,t1)
//
// Every application in the output is guarded by k or s, so the compiled
// closed term always evaluates under axioms (1)-(3).

namespace {

TermPtr abs_one(const Opca& a, const std::string& x, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (t->var == x)
        return tapp({tconst(a.s()), tconst(a.k()), tconst(a.k())});
      return tapp(tconst(a.k()), t);
    case Term::Kind::Const:
      return tapp(tconst(a.k()), t);
    case Term::Kind::App:
      return tapp({tconst(a.s()), abs_one(a, x, t->fn), abs_one(a, x, t->arg)});
    case Term::Kind::Lam:
      fail(ErrKind::ValidationError, "abstraction over a raw lambda");
  }
  return nullptr;
}

}  // namespace

TermPtr eliminate_lams(const Opca& a, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var:
    case Term::Kind::Const:
      return t;
    case Term::Kind::App:
      return tapp(eliminate_lams(a, t->fn), eliminate_lams(a, t->arg));
    case Term::Kind::Lam: {
      TermPtr body = eliminate_lams(a, t->body);
      for (size_t i = t->binders.size(); i-- > 0;)
        body = abs_one(a, t->binders[i], body);
      return body;
    }
  }
  return nullptr;
}

Elem bracket_abstract(const Opca& a, const TermPtr& t,
                      const std::vector<std::string>& vars) {
  if (vars.empty())
    fail(ErrKind::ValidationError, "bracket abstraction needs a binder");
  TermPtr body = eliminate_lams(a, t);
  for (const auto& v : free_vars(*body))
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      fail(ErrKind::UnboundVariable, "'" + v + "' not among the binders");
  for (size_t i = vars.size(); i-- > 0;) body = abs_one(a, vars[i], body);
  EvalResult r = eval_closed(a, *body);
  if (!r.defined())
    fail(ErrKind::UndefinedCombinator,
         "compiled combinator failed to evaluate in " + a.name());
  return *r.value;
}

bool value_refines(const Opca& a, const std::optional<Elem>& v1,
                   const std::optional<Elem>& v2) {
  if (!v2.has_value()) return true;
  return v1.has_value() && a.le(*v1, *v2);
}

bool kleene_compare(const Opca& a, const Term& e1, const Term& e2,
                    CompareMode mode) {
  auto v1 = eval_closed(a, e1).value;
  auto v2 = eval_closed(a, e2).value;
  switch (mode) {
    case CompareMode::Refines:
      return value_refines(a, v1, v2);
    case CompareMode::KleeneEqual:
      return value_refines(a, v1, v2) && value_refines(a, v2, v1);
    case CompareMode::Le:
      return v1 && v2 && a.le(*v1, *v2);
    case CompareMode::Eq:
      return v1 && v2 && *v1 == *v2;
  }
  return false;
}

}  // namespace opca
