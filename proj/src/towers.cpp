#include "gralg/towers.hpp"

namespace gralg {

std::string lim_status_str(LimStatus s) {
  switch (s) {
    case LimStatus::Stabilized: return "Stabilized";
    case LimStatus::SurjectiveTail: return "SurjectiveTail";
    default: return "Undetermined";
  }
}

TowerVerdict tower_limits(const AbTower& t) {
  if (t.maps.size() + 1 != t.objs.size())
    throw ValidationError("tower shape mismatch");
  if (t.maps.size() < 2) throw ValidationError("tower depth must be at least 2");
  const int n = static_cast<int>(t.maps.size());
  TowerVerdict v;
  std::vector<bool> iso(t.maps.size());
  bool all_surjective = true;
  for (size_t k = 0; k < t.maps.size(); ++k) {
    bool surj = t.maps[k].is_surjective();
    all_surjective = all_surjective && surj;
    iso[k] = surj && t.maps[k].is_injective();
  }
  int tail = n;
  while (tail > 0 && iso[static_cast<size_t>(tail) - 1]) --tail;
  if (n - tail >= 2) {
    v.status = LimStatus::Stabilized;
    v.value = t.objs[static_cast<size_t>(tail)];
    v.stage = tail;
    v.lim1_zero = true;
    v.reason = "isomorphism tail of length " + std::to_string(n - tail) + " from stage " +
               std::to_string(tail);
    return v;
  }
  // Zero tail: every transition from some stage on is the zero map, so both
  // grlim and grlim^1 vanish.  Composites of nonzero maps are not accepted:
  // a zero composite can factor through a zero object low in the tower while
  // the deep stages still grow.
  int zs = 0;
  for (int k = 0; k < n; ++k)
    if (!t.maps[static_cast<size_t>(k)].is_zero_map()) zs = k + 1;
  if (n - zs >= 2) {
    v.status = LimStatus::Stabilized;
    v.value = FpAbGroup::zero();
    v.stage = zs;
    v.lim1_zero = true;
    v.reason = "zero-map tail from stage " + std::to_string(zs);
    return v;
  }
  if (all_surjective) {
    v.status = LimStatus::SurjectiveTail;
    v.lim1_zero = true;
    v.reason = "all transitions surjective (Mittag-Leffler)";
    return v;
  }
  v.status = LimStatus::Undetermined;
  v.lim1_zero = false;
  v.reason = "no isomorphism tail within depth and some transition not surjective";
  return v;
}

AbTower ComplexTower::pi_tower(int i, const Degree& g) const {
  AbTower t;
  std::vector<HomologyData> hs;
  for (const GradedComplex& c : stages) hs.push_back(c.pi(i, g));
  for (const HomologyData& h : hs) t.objs.push_back(h.H);
  for (size_t k = 0; k < transitions.size(); ++k)
    t.maps.push_back(induced_map(hs[k + 1], hs[k], transitions[k].realize(i, g).mat));
  return t;
}

std::vector<MilnorEntry> milnor_check(const ComplexTower& t, int i,
                                      const std::vector<Degree>& degrees) {
  std::vector<MilnorEntry> out;
  for (const Degree& g : degrees) {
    MilnorEntry e;
    e.degree = g;
    AbTower ti = t.pi_tower(i, g);
    AbTower tip1 = t.pi_tower(i + 1, g);
    e.v_i = tower_limits(ti);
    e.v_ip1 = tower_limits(tip1);
    if (e.v_i.status != LimStatus::Stabilized || e.v_ip1.status != LimStatus::Stabilized)
      throw NotStabilized("pi tower not stabilized in degree " + deg_str(g));
    // Recover the limit through the full tower: the stable image of the
    // composite from the top stage down to the tail start.
    AbMap down = AbMap::identity(ti.objs.back());
    for (size_t k = ti.maps.size(); k-- > static_cast<size_t>(e.v_i.stage);)
      down = ti.maps[k].compose_after(down);
    e.limit = image_subgroup(down).group;
    e.match = e.limit.same_invariants(e.v_i.value.value()) &&
              (e.v_i.value->is_zero() || down.is_isomorphism());
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace gralg
