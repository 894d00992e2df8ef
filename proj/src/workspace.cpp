#include "opca/workspace.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "opca/fixtures.hpp"

namespace opca {

OpcaRef Workspace::opca(const std::string& name) const {
  auto it = opcas.find(name);
  if (it == opcas.end())
    fail(ErrKind::UnknownName, "no opca named '" + name + "'");
  return it->second;
}

PosetRef Workspace::poset(const std::string& name) const {
  auto it = posets.find(name);
  if (it != posets.end()) return it->second;
  auto io = opcas.find(name);
  if (io != opcas.end()) return io->second->order_ref();
  fail(ErrKind::UnknownName, "no poset named '" + name + "'");
}

const OpcaMorphism& Workspace::morphism(const std::string& name) const {
  auto it = morphisms.find(name);
  if (it == morphisms.end())
    fail(ErrKind::UnknownName, "no morphism named '" + name + "'");
  return it->second;
}

const ApplicativeMorphism& Workspace::applicative(
    const std::string& name) const {
  auto it = applicatives.find(name);
  if (it == applicatives.end())
    fail(ErrKind::UnknownName, "no applicative morphism named '" + name + "'");
  return it->second;
}

AssemblyRef Workspace::assembly(const std::string& name) const {
  auto it = assemblies.find(name);
  if (it == assemblies.end())
    fail(ErrKind::UnknownName, "no assembly named '" + name + "'");
  return it->second;
}

Workspace make_workspace() {
  Workspace ws;
  for (const auto& a : fixture_opcas()) ws.opcas[a->name()] = a;
  for (const auto& p : fixture_posets()) ws.posets[p->name()] = p;
  return ws;
}

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    // Braces and commas separate so that {a, b} splits cleanly.
    std::string spaced;
    for (char c : raw) {
      if (c == '{' || c == '}' || c == ',') {
        spaced += ' ';
        spaced += c;
        spaced += ' ';
      } else {
        spaced += c;
      }
    }
    std::istringstream ls(spaced);
    Line line{number, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

[[noreturn]] void perr(const std::string& file, int line,
                       const std::string& msg) {
  fail(ErrKind::ParseError,
       file + ":" + std::to_string(line) + ": " + msg);
}

bool is_block_head(const std::string& t) {
  return t == "poset" || t == "opca" || t == "morphism" ||
         t == "applicative" || t == "assembly";
}

// Reads "{ a , b }" starting at tokens[i]; returns the names.
std::vector<std::string> read_set(const Line& ln, size_t& i,
                                  const std::string& file) {
  if (i >= ln.tokens.size() || ln.tokens[i] != "{")
    perr(file, ln.number, "expected '{'");
  ++i;
  std::vector<std::string> names;
  while (i < ln.tokens.size() && ln.tokens[i] != "}") {
    if (ln.tokens[i] != ",") names.push_back(ln.tokens[i]);
    ++i;
  }
  if (i >= ln.tokens.size()) perr(file, ln.number, "expected '}'");
  ++i;
  return names;
}

struct PendingOpca {
  std::string name;
  int line;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> le;
  std::vector<std::array<std::string, 3>> app;
  std::optional<std::string> k, s;
  bool is_poset;
};

struct PendingMorphism {
  std::string name, src, tgt;
  int line;
  bool applicative;
  std::vector<std::pair<std::string, std::vector<std::string>>> map;
};

struct PendingAssembly {
  std::string name, base;
  int line;
  std::vector<std::pair<std::string, std::vector<std::string>>> points;
};

}  // namespace

void load_workspace_text(Workspace& ws, const std::string& text,
                         const std::string& file, SeedOrder order) {
  std::vector<PendingOpca> opcas;
  std::vector<PendingMorphism> morphisms;
  std::vector<PendingAssembly> assemblies;

  PendingOpca* cur_opca = nullptr;
  PendingMorphism* cur_mor = nullptr;
  PendingAssembly* cur_asm = nullptr;

  for (const Line& ln : tokenize(text)) {
    const auto& t = ln.tokens;
    if (is_block_head(t[0])) {
      cur_opca = nullptr;
      cur_mor = nullptr;
      cur_asm = nullptr;
      if (t[0] == "poset" || t[0] == "opca") {
        if (t.size() != 2) perr(file, ln.number, "expected '" + t[0] + " <name>'");
        opcas.push_back(PendingOpca{t[1], ln.number, {}, {}, {}, {}, {},
                                    t[0] == "poset"});
        cur_opca = &opcas.back();
      } else if (t[0] == "morphism" || t[0] == "applicative") {
        bool app = t[0] == "applicative";
        const char* arrow = app ? "-o" : "->";
        if (t.size() != 6 || t[2] != ":" || t[4] != arrow)
          perr(file, ln.number,
               std::string("expected '") + t[0] + " <name> : <src> " + arrow +
                   " <tgt>'");
        morphisms.push_back(
            PendingMorphism{t[1], t[3], t[5], ln.number, app, {}});
        cur_mor = &morphisms.back();
      } else {  // assembly
        if (t.size() != 4 || t[2] != "over")
          perr(file, ln.number, "expected 'assembly <name> over <opca>'");
        assemblies.push_back(PendingAssembly{t[1], t[3], ln.number, {}});
        cur_asm = &assemblies.back();
      }
      continue;
    }

    if (cur_opca) {
      if (t[0] == "elements") {
        cur_opca->elements.insert(cur_opca->elements.end(), t.begin() + 1,
                                  t.end());
      } else if (t[0] == "le") {
        for (size_t i = 1; i < t.size(); ++i) {
          auto lt = t[i].find('<');
          if (lt == std::string::npos || lt == 0 || lt + 1 == t[i].size())
            perr(file, ln.number, "expected 'a<b' pairs after 'le'");
          cur_opca->le.emplace_back(t[i].substr(0, lt), t[i].substr(lt + 1));
        }
      } else if (t[0] == "app") {
        if (cur_opca->is_poset)
          perr(file, ln.number, "'app' is only allowed in opca blocks");
        if (t.size() != 5 || t[3] != "->")
          perr(file, ln.number, "expected 'app a b -> c'");
        cur_opca->app.push_back({t[1], t[2], t[4]});
      } else if (t[0] == "k" || t[0] == "s") {
        if (cur_opca->is_poset)
          perr(file, ln.number, "combinators are only allowed in opca blocks");
        if (t.size() != 2) perr(file, ln.number, "expected '" + t[0] + " <elem>'");
        (t[0] == "k" ? cur_opca->k : cur_opca->s) = t[1];
      } else {
        perr(file, ln.number, "unexpected directive '" + t[0] + "'");
      }
      continue;
    }

    if (cur_mor) {
      if (t[0] != "map") perr(file, ln.number, "expected 'map' lines");
      if (cur_mor->applicative) {
        size_t i = 3;
        if (t.size() < 4 || t[2] != "->")
          perr(file, ln.number, "expected 'map a -> {b, c}'");
        Line rest{ln.number, t};
        auto names = read_set(rest, i, file);
        if (i != t.size()) perr(file, ln.number, "trailing tokens");
        cur_mor->map.emplace_back(t[1], std::move(names));
      } else {
        if (t.size() != 4 || t[2] != "->")
          perr(file, ln.number, "expected 'map a -> b'");
        cur_mor->map.emplace_back(t[1], std::vector<std::string>{t[3]});
      }
      continue;
    }

    if (cur_asm) {
      if (t[0] != "point") perr(file, ln.number, "expected 'point' lines");
      size_t i = 2;
      Line rest{ln.number, t};
      auto names = read_set(rest, i, file);
      if (i != t.size() || t.size() < 3)
        perr(file, ln.number, "expected 'point x {a, b}'");
      cur_asm->points.emplace_back(t[1], std::move(names));
      continue;
    }

    perr(file, ln.number, "expected a block header");
  }

  // Build in declaration order so cross-references within one file work.
  for (auto& po : opcas) {
    if (po.elements.empty())
      perr(file, po.line, "'" + po.name + "' declares no elements");
    if (order == SeedOrder::Sorted)
      std::sort(po.elements.begin(), po.elements.end());
    if (ws.posets.count(po.name) || ws.opcas.count(po.name))
      perr(file, po.line, "name '" + po.name + "' is already defined");
    PosetRef p = FinPoset::make(po.name, po.elements, po.le);
    if (po.is_poset) {
      ws.posets[po.name] = p;
      continue;
    }
    AppTable table(p->size());
    for (const auto& e : po.app) {
      Elem a = p->require(e[0]), b = p->require(e[1]), c = p->require(e[2]);
      if (table.at(a, b) != kUndef)
        perr(file, po.line, "duplicate app entry in '" + po.name + "'");
      table.at(a, b) = c;
    }
    std::optional<std::pair<Elem, Elem>> pinned;
    if (po.k.has_value() != po.s.has_value())
      perr(file, po.line, "pin both k and s or neither");
    if (po.k) pinned = {p->require(*po.k), p->require(*po.s)};
    ws.opcas[po.name] =
        Opca::make(Opas::validate(p, std::move(table)), po.name, pinned);
  }

  for (auto& pm : morphisms) {
    if (ws.morphisms.count(pm.name) || ws.applicatives.count(pm.name))
      perr(file, pm.line, "name '" + pm.name + "' is already defined");
    OpcaRef src = ws.opca(pm.src);
    OpcaRef tgt = ws.opca(pm.tgt);
    if (pm.applicative) {
      std::vector<Bits> map(src->size());
      std::vector<bool> seen(src->size(), false);
      for (const auto& [from, tos] : pm.map) {
        Elem a = src->order().require(from);
        seen[a] = true;
        map[a] = downset_closure(tgt->order_ref(), tos).members;
      }
      for (int i = 0; i < src->size(); ++i)
        if (!seen[i])
          perr(file, pm.line,
               "'" + pm.name + "' has no value at " + src->name_of(i));
      auto f = make_applicative(src, tgt, std::move(map), pm.name);
      if (!f)
        fail(ErrKind::ValidationError,
             "'" + pm.name + "' admits no tracker or order realizer");
      ws.applicatives[pm.name] = std::move(*f);
    } else {
      std::vector<Elem> map(src->size(), kUndef);
      for (const auto& [from, tos] : pm.map)
        map[src->order().require(from)] = tgt->order().require(tos[0]);
      for (int i = 0; i < src->size(); ++i)
        if (map[i] == kUndef)
          perr(file, pm.line,
               "'" + pm.name + "' has no value at " + src->name_of(i));
      auto f = make_morphism(src, tgt, std::move(map), pm.name);
      if (!f)
        fail(ErrKind::ValidationError,
             "'" + pm.name + "' admits no tracker or order realizer");
      ws.morphisms[pm.name] = std::move(*f);
    }
  }

  for (auto& pa : assemblies) {
    if (ws.assemblies.count(pa.name))
      perr(file, pa.line, "name '" + pa.name + "' is already defined");
    OpcaRef base = ws.opca(pa.base);
    std::vector<std::string> points;
    std::vector<Bits> existence;
    for (const auto& [pt, names] : pa.points) {
      points.push_back(pt);
      existence.push_back(downset_closure(base->order_ref(), names).members);
    }
    ws.assemblies[pa.name] =
        make_assembly(base, pa.name, std::move(points), std::move(existence));
  }
}

void load_workspace_file(Workspace& ws, const std::string& path,
                         SeedOrder order) {
  std::ifstream in(path);
  if (!in) fail(ErrKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  load_workspace_text(ws, buf.str(), path, order);
}

}  // namespace opca
