#include "opca/assembly.hpp"

namespace opca {

int Assembly::point_index(const std::string& p) const {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i] == p) return int(i);
  fail(ErrKind::UnknownElement, "point '" + p + "' not in assembly " + name);
}

AssemblyRef make_assembly(const OpcaRef& base, std::string name,
                          std::vector<std::string> points,
                          std::vector<Bits> existence) {
  if (points.size() != existence.size())
    fail(ErrKind::ValidationError, "one existence set per point required");
  for (size_t i = 0; i < points.size(); ++i) {
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        fail(ErrKind::ValidationError, "duplicate point '" + points[i] + "'");
    if (existence[i].size() != base->size() || existence[i].none() ||
        !is_downward_closed(base->order(), existence[i]))
      fail(ErrKind::ValidationError,
           "existence of '" + points[i] + "' must be a nonempty downset");
  }
  auto x = std::make_shared<Assembly>();
  x->base = base;
  x->name = std::move(name);
  x->points = std::move(points);
  x->existence = std::move(existence);
  return x;
}

bool assembly_tracker_valid(const Assembly& x, const Assembly& y,
                            const std::vector<int>& map, Elem r) {
  for (int p = 0; p < x.size(); ++p) {
    auto img = elem_apply_downset(*x.base, r, x.existence[p]);
    if (!img || !img->subset_of(y.existence[map[p]])) return false;
  }
  return true;
}

std::optional<Elem> find_assembly_tracker(const std::vector<int>& map,
                                          const Assembly& x,
                                          const Assembly& y) {
  if (x.base != y.base)
    fail(ErrKind::BaseMismatch, "assemblies live over different OPCAs");
  for (Elem r = 0; r < x.base->size(); ++r)
    if (assembly_tracker_valid(x, y, map, r)) return r;
  return std::nullopt;
}

std::optional<AssemblyMorphism> make_assembly_morphism(const AssemblyRef& x,
                                                       const AssemblyRef& y,
                                                       std::vector<int> map) {
  if (int(map.size()) != x->size())
    fail(ErrKind::Mismatch, "map size does not match the source");
  for (int v : map)
    if (v < 0 || v >= y->size())
      fail(ErrKind::UnknownElement, "map value out of range");
  auto r = find_assembly_tracker(map, *x, *y);
  if (!r) return std::nullopt;
  return AssemblyMorphism{x, y, std::move(map), *r};
}

std::vector<std::string> gamma(const Assembly& x) { return x.points; }

AssemblyRef nabla(const std::vector<std::string>& points, const OpcaRef& a) {
  std::vector<Bits> full(points.size(), a->order().full_mask());
  std::vector<std::string> ps = points;
  return make_assembly(a, "nabla", std::move(ps), std::move(full));
}

AdjunctionBijectionCertificate adjunction_bijection(
    const AssemblyRef& x, const std::vector<std::string>& s,
    const Budget& budget) {
  if (s.empty())
    fail(ErrKind::ValidationError, "nabla of the empty set is not an assembly");
  AssemblyRef ns = nabla(s, x->base);
  double count = 1;
  for (int i = 0; i < x->size(); ++i) count *= double(s.size());
  if (count > double(budget.hom_sweep_limit))
    fail(ErrKind::SizeLimit, "function sweep exceeds the budget");

  AdjunctionBijectionCertificate cert{};
  cert.function_count = uint64_t(count);
  std::vector<int> map(x->size(), 0);
  while (true) {
    auto r = find_assembly_tracker(map, *x, *ns);
    if (r) {
      ++cert.tracked_count;
      cert.trackers.push_back(*r);
    }
    int i = 0;
    while (i < x->size() && ++map[i] == int(s.size())) map[i++] = 0;
    if (i == x->size()) break;
  }
  return cert;
}

}  // namespace opca
