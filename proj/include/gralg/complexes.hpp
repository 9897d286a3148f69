// Bounded complexes of graded modules: Koszul complexes, tensoring with
// perfect complexes, homotopy pieces, and the quotient long-exact-sequence
// window check.
#pragma once

#include "gralg/graded_module.hpp"

namespace gralg {

struct GradedComplex {
  GradedRing ring;
  std::map<int, GradedModule> terms;
  std::map<int, GradedMap> diffs;  // diffs[i]: terms[i] -> terms[i-1], degree preserving

  static GradedComplex from_module(const GradedModule& m);
  // Validates d o d = 0 in the ring, entry by entry.
  static GradedComplex make(GradedRing ring, std::map<int, GradedModule> terms,
                            std::map<int, GradedMap> diffs);

  int lo() const { return terms.empty() ? 0 : terms.begin()->first; }
  int hi() const { return terms.empty() ? -1 : terms.rbegin()->first; }
  GradedModule term_or_zero(int i) const;
  AbMap realize_diff(int i, const Degree& g) const;  // zero map when absent
  HomologyData pi(int i, const Degree& g) const;
  std::vector<Degree> window_degrees(const WeightWindow& w) const;
  bool pi_vanishes(int i, const std::vector<Degree>& degs) const;
};

struct ComplexMap {
  GradedComplex src, tgt;
  Degree offset;  // common degree shift shared by every component
  std::map<int, GradedMap> comps;

  // Validates the chain condition symbolically in the ring.  Components may
  // shift degree, but all by the same amount.
  static ComplexMap make(GradedComplex src, GradedComplex tgt, std::map<int, GradedMap> comps);
  AbMap realize(int i, const Degree& g) const;  // piece at g -> piece at g + offset
  AbMap induced_on_pi(int i, const Degree& g) const;
};

struct KoszulData {
  GradedComplex complex;
  std::vector<std::vector<std::vector<int>>> subsets;  // per homological index
  std::vector<Poly> fs;
  long n = 1;
};

// Koszul complex on f_1^n, ..., f_r^n with standard signs.
KoszulData koszul_complex(const GradedRing& ring, std::vector<Poly> fs, long n = 1);

struct TensorPart {
  int q, p;            // homological indices in the two factors
  Eigen::Index pgen;   // generator of the perfect factor
  Eigen::Index gen_begin, gen_count;  // generator block in the total term
};

struct TensorComplexData {
  GradedComplex complex;
  std::map<int, std::vector<TensorPart>> parts;
};

// X (x)_R P for P a bounded complex of free modules (else NotPerfect).
TensorComplexData tensor_complexes(const GradedComplex& x, const GradedComplex& p);

TensorComplexData derived_quotient(const GradedModule& m, const std::vector<Poly>& fs, long n = 1);
TensorComplexData derived_quotient_complex(const GradedComplex& c, const std::vector<Poly>& fs,
                                           long n = 1);

TensorComplexData tensor_with_perfect(const GradedModule& m, const GradedComplex& p);

struct SesReport {
  int index = 0;
  Degree degree;
  FpAbGroup left, middle, right;  // pi_i(X)_g / f, pi_i(X/f)_g, ker(f) in pi_{i-1}(X)_{g-d}
  bool exact_left = false, exact_middle = false, exact_right = false;
  bool passed() const { return exact_left && exact_middle && exact_right; }
};

// Checks the degreewise sequence
//   0 -> pi_i(X)_g / f -> pi_i(X/f)_g -> ker(f : pi_{i-1}(X)_{g-d} -> pi_{i-1}(X)_g) -> 0
// with the explicit inclusion and projection maps.
SesReport verify_quotient_ses(const GradedComplex& x, const Poly& f, int i, const Degree& g);

}  // namespace gralg
