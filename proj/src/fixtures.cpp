#include "opca/fixtures.hpp"

namespace opca {

AppTable meet_table(const FinPoset& p) {
  AppTable t(p.size());
  for (Elem a = 0; a < p.size(); ++a)
    for (Elem b = 0; b < p.size(); ++b) {
      Bits common = p.below(a) & p.below(b);
      Elem meet = kUndef;
      common.for_each([&](Elem c) {
        if (meet == kUndef || p.le(meet, c)) meet = c;
      });
      if (meet == kUndef)
        fail(ErrKind::ValidationError,
             "'" + p.name() + "' lacks a meet of " + p.name_of(a) + ", " +
                 p.name_of(b));
      // The greatest common lower bound; for the fixture shapes the scan
      // above finds it (every common-lower-bound set here is a chain).
      common.for_each([&](Elem c) {
        if (!p.le(c, meet))
          fail(ErrKind::ValidationError, "no greatest lower bound");
      });
      t.at(a, b) = meet;
    }
  return t;
}

namespace {

OpcaRef make_meet_opca(const std::string& name,
                       std::vector<std::string> elements,
                       std::vector<std::pair<std::string, std::string>> le) {
  PosetRef p = FinPoset::make(name, std::move(elements), le);
  return Opca::make(Opas::validate(p, meet_table(*p)), name);
}

}  // namespace

OpcaRef fixture_one() {
  static OpcaRef a = make_meet_opca("ONE", {"*"}, {});
  return a;
}

OpcaRef fixture_c2() {
  static OpcaRef a = make_meet_opca("C2", {"0", "1"}, {{"0", "1"}});
  return a;
}

OpcaRef fixture_c3() {
  static OpcaRef a =
      make_meet_opca("C3", {"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
  return a;
}

OpcaRef fixture_v3() {
  static OpcaRef a =
      make_meet_opca("V3", {"bot", "a", "b"}, {{"bot", "a"}, {"bot", "b"}});
  return a;
}

std::vector<OpcaRef> fixture_opcas() {
  return {fixture_one(), fixture_c2(), fixture_c3(), fixture_v3()};
}

PosetRef fixture_a2() {
  static PosetRef p = FinPoset::make("A2", {"x0", "x1"}, {});
  return p;
}

PosetRef fixture_a3() {
  static PosetRef p = FinPoset::make("A3", {"x0", "x1", "x2"}, {});
  return p;
}

PosetRef fixture_a4() {
  static PosetRef p = FinPoset::make("A4", {"x0", "x1", "x2", "x3"}, {});
  return p;
}

PosetRef fixture_n4() {
  static PosetRef p = FinPoset::make(
      "N4", {"x0", "x1", "y0", "y1"},
      {{"x0", "y0"}, {"x1", "y0"}, {"x1", "y1"}});
  return p;
}

PosetRef fixture_f4() {
  static PosetRef p = FinPoset::make(
      "F4", {"x0", "y0", "y1", "z"}, {{"x0", "y0"}, {"x0", "y1"}});
  return p;
}

std::vector<PosetRef> fixture_posets() {
  return {fixture_a2(), fixture_a3(), fixture_a4(), fixture_n4(),
          fixture_f4()};
}

}  // namespace opca
