// Finitely presented abelian groups: canonical forms, maps, kernels,
// cokernels, subquotients, homology and hom groups.
#pragma once

#include <string>
#include <vector>

#include "gralg/errors.hpp"
#include "gralg/smith.hpp"

namespace gralg {

// Z^ngens / colspan(rels), with canonical decomposition
// (+)_k Z/torsion[k] (+) Z^free_rank and coordinate witnesses both ways:
// can_of_gen maps presentation coordinates to canonical ones (torsion block
// first, then free), gen_of_can is a section (can_of_gen * gen_of_can = id).
struct FpAbGroup {
  Eigen::Index ngens = 0;
  IntMat rels;  // ngens x nrels
  long free_rank = 0;
  std::vector<Int> torsion;  // d1 | d2 | ..., each >= 2
  IntMat can_of_gen;         // (t + free_rank) x ngens
  IntMat gen_of_can;         // ngens x (t + free_rank)

  static FpAbGroup from_presentation(Eigen::Index ngens, IntMat rels);
  static FpAbGroup from_invariants(long rank, std::vector<Int> torsion);
  static FpAbGroup zero() { return from_invariants(0, {}); }
  static FpAbGroup free_group(long r) { return from_invariants(r, {}); }
  static FpAbGroup cyclic(const Int& n);

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool same_invariants(const FpAbGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  Int order() const;  // 0 when infinite
  std::string invariant_string() const;

  bool elem_is_zero(const IntVec& x) const;
  IntVec reduce(const IntVec& x) const;  // canonical coordinates, torsion reduced mod d
};

// Homomorphism between presented groups, as a matrix on presentation
// generators carrying source relations into the target relation span.
struct AbMap {
  FpAbGroup src, tgt;
  IntMat mat;  // tgt.ngens x src.ngens

  static AbMap checked(FpAbGroup src, FpAbGroup tgt, IntMat mat);
  static AbMap unchecked(FpAbGroup src, FpAbGroup tgt, IntMat mat);
  static AbMap identity(const FpAbGroup& g);
  static AbMap zero_map(FpAbGroup src, FpAbGroup tgt);

  AbMap compose_after(const AbMap& inner) const;  // this o inner
  bool is_zero_map() const;
  bool is_surjective() const;
  bool is_injective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
};

// Subgroup of Z^n / colspan(nulls) generated by the columns of gens,
// presented on those generators.
struct SubgroupData {
  FpAbGroup group;
  IntMat gens;   // ambient n x k
  IntMat nulls;  // ambient n x l
  IntMat canonical_gens() const { return gens * group.gen_of_can; }
};

SubgroupData presented_subgroup(const IntMat& gens, const IntMat& nulls);

// span(a) <= span(b) + span(nulls), all in the same Z^n.
bool subgroup_leq(const IntMat& a, const IntMat& b, const IntMat& nulls);

FpAbGroup cokernel(const AbMap& f);
FpAbGroup cokernel_of(Eigen::Index ngens, const IntMat& image_and_rels);
SubgroupData kernel_subgroup(const AbMap& f);
SubgroupData image_subgroup(const AbMap& f);

// ker(d_out)/im(d_in) at the middle group, with enough data to induce maps.
struct HomologyData {
  FpAbGroup H;
  IntMat cycles;    // ambient x k, generator j of H is the class of cycles.col(j)
  IntMat null_lat;  // ambient x l: boundaries plus ambient relations
  Eigen::Index ambient = 0;
};

HomologyData ab_homology(const AbMap& d_in, const AbMap& d_out);

// Map on homology induced by f_ambient on middle presentation coordinates.
AbMap induced_map(const HomologyData& src, const HomologyData& tgt, const IntMat& f_ambient);

// Hom(A, B) with maps realizing the canonical generators.
struct HomGroupData {
  FpAbGroup group;
  std::vector<AbMap> basis_maps;
  IntMat elem_lattice;  // vec'd well-defined matrices
  IntMat elem_nulls;    // vec'd zero maps
};

HomGroupData hom_group(const FpAbGroup& a, const FpAbGroup& b);

}  // namespace gralg
