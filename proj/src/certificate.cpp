#include "opca/certificate.hpp"

namespace opca {

json Certificate::to_json() const {
  json j;
  j["claim"] = claim;
  j["subject"] = subject;
  j["witness"] = witness;
  j["search_space"] = search_space;
  j["verdict"] = verdict;
  j["combinator_choice"] = combinator_choice;
  return j;
}

Certificate Certificate::from_json(const json& j) {
  Certificate c;
  c.claim = j.at("claim").get<std::string>();
  c.subject = j.at("subject");
  c.witness = j.at("witness");
  c.search_space = j.at("search_space").get<uint64_t>();
  c.verdict = j.at("verdict").get<std::string>();
  c.combinator_choice = j.at("combinator_choice");
  return c;
}

std::string Certificate::canonical() const { return to_json().dump(2) + "\n"; }

json poset_to_json(const FinPoset& p) {
  json j;
  j["name"] = p.name();
  j["elements"] = p.element_names();
  json le = json::array();
  for (Elem b = 0; b < p.size(); ++b)
    p.below(b).for_each([&](Elem a) {
      if (a != b) le.push_back({p.name_of(a), p.name_of(b)});
    });
  j["le"] = le;
  return j;
}

PosetRef poset_from_json(const json& j) {
  std::vector<std::pair<std::string, std::string>> le;
  for (const auto& pr : j.at("le"))
    le.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
  return FinPoset::make(j.at("name").get<std::string>(),
                        j.at("elements").get<std::vector<std::string>>(), le);
}

json opca_to_json(const Opca& a) {
  json j = poset_to_json(a.order());
  json app = json::array();
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (auto v = a.app(x, y))
        app.push_back({a.name_of(x), a.name_of(y), a.name_of(*v)});
  j["app"] = app;
  j["k"] = a.name_of(a.k());
  j["s"] = a.name_of(a.s());
  return j;
}

OpcaRef opca_from_json(const json& j) {
  PosetRef p = poset_from_json(j);
  AppTable t(p->size());
  for (const auto& e : j.at("app"))
    t.at(p->require(e.at(0).get<std::string>()),
         p->require(e.at(1).get<std::string>())) =
        p->require(e.at(2).get<std::string>());
  Elem k = p->require(j.at("k").get<std::string>());
  Elem s = p->require(j.at("s").get<std::string>());
  return Opca::make(Opas::validate(p, std::move(t)), p->name(),
                    std::make_pair(k, s));
}

json morphism_to_json(const OpcaMorphism& f) {
  json j;
  j["name"] = f.name;
  j["source"] = opca_to_json(*f.source);
  j["target"] = opca_to_json(*f.target);
  json map = json::array();
  for (Elem x = 0; x < f.source->size(); ++x)
    map.push_back(f.target->name_of(f.map[x]));
  j["map"] = map;
  j["tracker"] = f.target->name_of(f.tracker);
  j["order_realizer"] = f.target->name_of(f.order_realizer);
  return j;
}

OpcaMorphism morphism_from_json(const json& j) {
  OpcaRef src = opca_from_json(j.at("source"));
  OpcaRef tgt = opca_from_json(j.at("target"));
  std::vector<Elem> map;
  for (const auto& v : j.at("map"))
    map.push_back(tgt->order().require(v.get<std::string>()));
  return OpcaMorphism{
      src,
      tgt,
      std::move(map),
      tgt->order().require(j.at("tracker").get<std::string>()),
      tgt->order().require(j.at("order_realizer").get<std::string>()),
      j.at("name").get<std::string>()};
}

json mask_to_json(const FinPoset& p, const Bits& mask) {
  json out = json::array();
  mask.for_each([&](Elem e) { out.push_back(p.name_of(e)); });
  return out;
}

Bits mask_from_json(const FinPoset& p, const json& j) {
  Bits m(p.size());
  for (const auto& v : j) m.set(p.require(v.get<std::string>()));
  return m;
}

json applicative_to_json(const ApplicativeMorphism& f) {
  json j;
  j["name"] = f.name;
  j["source"] = opca_to_json(*f.source);
  j["target"] = opca_to_json(*f.target);
  json map = json::array();
  for (Elem x = 0; x < f.source->size(); ++x)
    map.push_back(mask_to_json(f.target->order(), f.map[x]));
  j["map"] = map;
  j["tracker"] = f.target->name_of(f.tracker);
  j["order_realizer"] = f.target->name_of(f.order_realizer);
  return j;
}

ApplicativeMorphism applicative_from_json(const json& j) {
  OpcaRef src = opca_from_json(j.at("source"));
  OpcaRef tgt = opca_from_json(j.at("target"));
  std::vector<Bits> map;
  for (const auto& v : j.at("map"))
    map.push_back(mask_from_json(tgt->order(), v));
  return ApplicativeMorphism{
      src,
      tgt,
      std::move(map),
      tgt->order().require(j.at("tracker").get<std::string>()),
      tgt->order().require(j.at("order_realizer").get<std::string>()),
      j.at("name").get<std::string>()};
}

json assembly_to_json(const Assembly& x) {
  json j;
  j["name"] = x.name;
  j["base"] = opca_to_json(*x.base);
  j["points"] = x.points;
  json ex = json::array();
  for (const auto& m : x.existence)
    ex.push_back(mask_to_json(x.base->order(), m));
  j["existence"] = ex;
  return j;
}

AssemblyRef assembly_from_json(const json& j) {
  OpcaRef base = opca_from_json(j.at("base"));
  std::vector<Bits> ex;
  for (const auto& m : j.at("existence"))
    ex.push_back(mask_from_json(base->order(), m));
  return make_assembly(base, j.at("name").get<std::string>(),
                       j.at("points").get<std::vector<std::string>>(),
                       std::move(ex));
}

json combinator_choice_of(const Opca& a) {
  json j;
  j[a.name()] = {{"k", a.name_of(a.k())}, {"s", a.name_of(a.s())}};
  return j;
}

}  // namespace opca
