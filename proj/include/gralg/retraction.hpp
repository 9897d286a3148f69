// Windowed carriers, the degreewise retraction of additive maps between
// them, and the comparison of degreewise families against genuine graded
// module maps.
#pragma once

#include "gralg/graded_module.hpp"

namespace gralg {

// Direct sum of the pieces of a module over the degrees reachable in a
// weight window, with per-degree block bookkeeping.
struct WindowedCarrier {
  GradedModule module;
  std::vector<Degree> degrees;
  std::vector<Eigen::Index> offset;  // size degrees + 1
  FpAbGroup total;                   // block-diagonal presentation

  Eigen::Index dim() const { return total.ngens; }
  Eigen::Index block_of(const Degree& g) const;  // -1 when absent
};

WindowedCarrier windowed_carrier(const GradedModule& m, const WeightWindow& w);

struct DegreewiseFamily {
  std::vector<Degree> degrees;
  std::vector<AbMap> comps;  // comps[k]: piece of src at degrees[k] -> piece of tgt
};

// Assemble a family into one additive map on the carriers (blocks off the
// diagonal are zero).
IntMat include_family(const WindowedCarrier& src, const WindowedCarrier& tgt,
                      const DegreewiseFamily& f);

// p_{N,g} o phi o i_{M,g} for every degree in the source carrier.
DegreewiseFamily retract_map(const WindowedCarrier& src, const WindowedCarrier& tgt,
                             const IntMat& total_map);

bool families_agree(const WindowedCarrier& tgt_carrier, const DegreewiseFamily& a,
                    const DegreewiseFamily& b);

struct HomFiberReport {
  FpAbGroup family_group;  // degreewise families commuting with the action
  FpAbGroup rmap_group;    // graded module maps, embedded over the window
  bool families_match = false;
  std::vector<Degree> degrees;
};

// Compares window-local families commuting with every variable action
// against genuine degree-zero module maps realized over the window.
HomFiberReport graded_hom_fiber_check(const GradedModule& m, const GradedModule& n,
                                      const WeightWindow& w);

}  // namespace gralg
