// Gradedwise and derived gradedwise adic completion, telescope vanishing
// certificates, completeness verdicts, derived Nakayama, and the
// pro-isomorphism bound for torsion towers.
#pragma once

#include "gralg/towers.hpp"

namespace gralg {

struct CompletionApproximation {
  GradedModule base;
  std::vector<Poly> ideal_gens;
  int precision = 0;
  bool derived = false;
  std::vector<Degree> degrees;  // window degrees reported on

  // classical stages: base with I^m relations appended, identity transitions
  std::vector<GradedModule> stage_modules;
  std::vector<GradedMap> module_transitions;
  std::map<Degree, TowerVerdict, DegreeLess> flags;  // per degree

  // derived stages: Koszul quotients at growing exponent
  ComplexTower tower;
  std::map<int, std::map<Degree, TowerVerdict, DegreeLess>> pi_flags;  // per index, degree
};

CompletionApproximation gradedwise_completion(const GradedModule& m, std::vector<Poly> fs,
                                              int precision, const WeightWindow& w);

CompletionApproximation derived_gradedwise_completion(const GradedModule& m,
                                                      std::vector<Poly> fs, int precision,
                                                      const WeightWindow& w);

// Stages X (x) Koszul(f^m) for m = 0..precision with multiplication
// transitions; shared by derived completion and completed tensor.
ComplexTower koszul_tower(const GradedComplex& x, const std::vector<Poly>& fs, int precision);

// Derived completion of M (x) P for a perfect complex P.
CompletionApproximation completed_tensor(const GradedModule& m, const GradedComplex& p,
                                         std::vector<Poly> fs, int precision,
                                         const WeightWindow& w);

enum class TelescopeStatus { Vanishes, NonVanishing, Undetermined };

struct TelescopeResult {
  TelescopeStatus status = TelescopeStatus::Undetermined;
  std::string certificate;
  std::optional<FpAbGroup> witness;  // stable nonzero image, when certified nonvanishing
  int param = -1;                    // vanishing stage / stabilization index
};

std::string telescope_status_str(TelescopeStatus s);

// Decides whether the f-multiplication telescope on pi_i(c) vanishes at
// degree g, inspecting stages g, g - deg f, ..., down to the given depth.
TelescopeResult telescope_vanishes_pi(const GradedComplex& c, int i, const Poly& f,
                                      const Degree& g, int depth);
TelescopeResult telescope_vanishes(const GradedModule& m, const Poly& f, const Degree& g,
                                   int depth);

enum class CertVerdict { Yes, No, Undetermined };

std::string cert_verdict_str(CertVerdict v);

struct CompletenessEntry {
  size_t f_index;
  int pi_index;
  Degree degree;
  TelescopeResult result;
};

struct CompletenessReport {
  CertVerdict verdict = CertVerdict::Undetermined;
  std::vector<CompletenessEntry> entries;
  std::vector<Degree> degrees;
};

CompletenessReport is_derived_gradedwise_complete(const GradedModule& m,
                                                  const std::vector<Poly>& fs,
                                                  const WeightWindow& w, int depth);
CompletenessReport is_complete_complex(const GradedComplex& c, const std::vector<Poly>& fs,
                                       const WeightWindow& w, int depth);

struct NakayamaReport {
  CompletenessReport completeness;
  int conn_index = 0;
  bool quotient_connective = false;  // pi_i of the Koszul quotient vanishes for i < conn_index
  bool asserted = false;             // the vanishing assertion on M was triggered
  bool module_connective = false;    // pi_i(M) vanishes likewise
  std::vector<Degree> counterexamples;  // degrees falsifying the assertion
  std::vector<Degree> degrees;
  bool passed() const { return !asserted || (module_connective && counterexamples.empty()); }
};

// Requires a certified-complete module (PreconditionNotCertified otherwise);
// when pi_i of the Koszul quotient vanishes on the window for i < conn_index,
// asserts and checks the same vanishing for M.
NakayamaReport derived_nakayama_check(const GradedModule& m, const std::vector<Poly>& fs,
                                      int conn_index, const WeightWindow& w, int depth);

struct ProIsoReport {
  std::vector<Degree> degrees;
  std::map<Degree, int, DegreeLess> c_of_degree;  // -1 when not found within depth
  int global_c = -1;
  bool certified = false;
};

// Finds c with M[f^{c+1}] = M[f^c] per window degree and verifies that f^c
// kills the f-power torsion there, so the torsion tower is pro-zero.
ProIsoReport pro_isomorphism_check(const GradedModule& m, const Poly& f, int depth,
                                   const WeightWindow& w);

}  // namespace gralg
