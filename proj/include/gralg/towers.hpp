// Towers of abelian groups and of complexes; limit verdicts with certified
// lim^1 vanishing, and the Milnor-sequence window check.
#pragma once

#include "gralg/complexes.hpp"

namespace gralg {

struct AbTower {
  std::vector<FpAbGroup> objs;  // stages 0..N
  std::vector<AbMap> maps;      // maps[k]: objs[k+1] -> objs[k]
};

enum class LimStatus { Stabilized, SurjectiveTail, Undetermined };

struct TowerVerdict {
  LimStatus status = LimStatus::Undetermined;
  std::optional<FpAbGroup> value;  // only when stabilized
  int stage = -1;                  // first stage of the isomorphism tail
  bool lim1_zero = false;          // certified zero; never certified nonzero
  std::string reason;
};

std::string lim_status_str(LimStatus s);

// Stabilized requires an isomorphism tail of at least two transitions.
TowerVerdict tower_limits(const AbTower& t);

struct ComplexTower {
  std::vector<GradedComplex> stages;    // 0..N
  std::vector<ComplexMap> transitions;  // [k]: stages[k+1] -> stages[k]

  AbTower pi_tower(int i, const Degree& g) const;
};

struct MilnorEntry {
  Degree degree;
  TowerVerdict v_i, v_ip1;
  FpAbGroup limit;  // R^0 grlim of the pi_i tower
  bool match = false;
};

// Requires both pi_i and pi_{i+1} towers to stabilize on every degree
// (NotStabilized otherwise); checks pi_i of the stable stage against the
// limit recovered through the full tower.
std::vector<MilnorEntry> milnor_check(const ComplexTower& t, int i,
                                      const std::vector<Degree>& degrees);

}  // namespace gralg
