// Graded modules presented by generators and homogeneous relation columns,
// realized degreewise, plus graded maps with polynomial matrices.
#pragma once

#include "gralg/graded_ring.hpp"

namespace gralg {

struct GenLabel {
  Eigen::Index gen;
  Exp mono;
};

struct ModulePiece {
  Degree degree;
  std::vector<GenLabel> basis;
  std::vector<Eigen::Index> block_offset;           // size ngens + 1
  std::vector<std::map<Exp, Eigen::Index>> blocks;  // per-generator monomial index
  FpAbGroup group;
  std::shared_ptr<LinearSolver> rel_solver;  // factorization of group.rels
};

class GradedModule {
 public:
  GradedRing ring;
  std::vector<Degree> gens;                  // generator degrees a_j
  std::vector<std::vector<Poly>> rel_cols;   // column c = one relation, entry per generator
  std::vector<Degree> rel_degrees;           // degree of each relation column
  std::string name;

  static GradedModule make(GradedRing ring, std::vector<Degree> gens,
                           std::vector<std::vector<Poly>> rel_cols, std::string name = "M");
  static GradedModule free_module(GradedRing ring, std::vector<Degree> shifts,
                                  std::string name = "F");
  static GradedModule zero_module(GradedRing ring);

  Eigen::Index ngens() const { return static_cast<Eigen::Index>(gens.size()); }
  const ModulePiece& piece(const Degree& g) const;
  IntVec coords(const ModulePiece& p, const std::vector<Poly>& elem) const;

  // piece(shifted(g), h) = piece(*this, g + h)
  GradedModule shifted(const Degree& g) const;

  // Degrees reachable from the generators whose weight lies in the window.
  std::vector<Degree> window_degrees(const WeightWindow& w) const;
  std::optional<Rat> min_gen_weight() const;

 private:
  std::shared_ptr<std::map<Degree, ModulePiece, DegreeLess>> cache_ =
      std::make_shared<std::map<Degree, ModulePiece, DegreeLess>>();
};

struct GradedMap {
  GradedModule src, tgt;
  Degree offset;                       // sends degree g into degree g + offset
  std::vector<std::vector<Poly>> mat;  // mat[i][j]: coefficient of tgt gen i in image of src gen j

  static GradedMap make(GradedModule src, GradedModule tgt, Degree offset,
                        std::vector<std::vector<Poly>> mat);
  static GradedMap mult_by(const GradedModule& m, const Poly& f,
                           std::optional<Degree> offset = std::nullopt);
  static GradedMap zero(GradedModule src, GradedModule tgt, Degree offset);
  static GradedMap identity(const GradedModule& m);

  AbMap realize(const Degree& g) const;  // cached
  GradedMap compose_after(const GradedMap& inner) const;

 private:
  std::shared_ptr<std::map<Degree, AbMap, DegreeLess>> cache_ =
      std::make_shared<std::map<Degree, AbMap, DegreeLess>>();
};

struct DirectSumData {
  GradedModule module;
  std::vector<Eigen::Index> gen_offset;  // size parts + 1
};

DirectSumData direct_sum(const std::vector<const GradedModule*>& parts, std::string name);

}  // namespace gralg
