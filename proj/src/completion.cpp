#include "gralg/completion.hpp"

#include <functional>
#include <set>

namespace gralg {

namespace {
void tuples_with_sum(int r, int total, std::vector<long>& cur,
                     const std::function<void(const std::vector<long>&)>& emit) {
  if (static_cast<int>(cur.size()) == r) {
    if (total == 0) emit(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == r - 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (long e = 0; e <= total; ++e) {
    cur.push_back(e);
    tuples_with_sum(r, total - static_cast<int>(e), cur, emit);
    cur.pop_back();
  }
}

std::vector<Poly> ideal_power_products(const GradedRing& ring, const std::vector<Poly>& fs,
                                       int m) {
  std::vector<Poly> out;
  const int r = static_cast<int>(fs.size());
  if (r == 0) {
    if (m == 0) out.push_back(Poly::constant(ring.sig.nvars(), 1));
    return out;
  }
  std::vector<long> cur;
  tuples_with_sum(r, m, cur, [&](const std::vector<long>& alpha) {
    Poly p = Poly::constant(ring.sig.nvars(), 1);
    for (int i = 0; i < r; ++i)
      if (alpha[static_cast<size_t>(i)] > 0) p = p * fs[static_cast<size_t>(i)].pow(alpha[static_cast<size_t>(i)]);
    out.push_back(std::move(p));
  });
  return out;
}

void check_ideal_gens(const GradedRing& ring, const std::vector<Poly>& fs) {
  for (const Poly& f : fs) {
    if (f.is_zero()) throw ValidationError("ideal generator is zero");
    ring.homogeneous_degree(f);  // throws NotHomogeneous when mixed
  }
}
}  // namespace

CompletionApproximation gradedwise_completion(const GradedModule& m, std::vector<Poly> fs,
                                              int precision, const WeightWindow& w) {
  check_ideal_gens(m.ring, fs);
  if (precision < 2) throw ValidationError("precision must be at least 2");
  CompletionApproximation out;
  out.base = m;
  out.ideal_gens = fs;
  out.precision = precision;
  out.derived = false;
  out.degrees = m.window_degrees(w);
  int nv = m.ring.sig.nvars();
  for (int stage = 0; stage <= precision; ++stage) {
    std::vector<std::vector<Poly>> rels = m.rel_cols;
    for (const Poly& prod : ideal_power_products(m.ring, fs, stage))
      for (size_t j = 0; j < m.gens.size(); ++j) {
        std::vector<Poly> col(m.gens.size(), Poly::zero(nv));
        col[j] = prod;
        rels.push_back(std::move(col));
      }
    out.stage_modules.push_back(GradedModule::make(
        m.ring, m.gens, std::move(rels), m.name + "/I^" + std::to_string(stage)));
  }
  for (int stage = 0; stage < precision; ++stage) {
    std::vector<std::vector<Poly>> id(m.gens.size(),
                                      std::vector<Poly>(m.gens.size(), Poly::zero(nv)));
    for (size_t j = 0; j < m.gens.size(); ++j) id[j][j] = Poly::constant(nv, 1);
    out.module_transitions.push_back(
        GradedMap::make(out.stage_modules[static_cast<size_t>(stage) + 1],
                        out.stage_modules[static_cast<size_t>(stage)],
                        deg_zero(m.ring.sig.dim), std::move(id)));
  }
  for (const Degree& g : out.degrees) {
    AbTower t;
    for (const GradedModule& s : out.stage_modules) t.objs.push_back(s.piece(g).group);
    for (const GradedMap& f : out.module_transitions) t.maps.push_back(f.realize(g));
    out.flags.emplace(g, tower_limits(t));
  }
  return out;
}

ComplexTower koszul_tower(const GradedComplex& x, const std::vector<Poly>& fs, int precision) {
  check_ideal_gens(x.ring, fs);
  if (precision < 2) throw ValidationError("precision must be at least 2");
  int nv = x.ring.sig.nvars();
  ComplexTower tower;
  std::vector<TensorComplexData> stages;
  std::vector<KoszulData> kos;
  for (int m = 0; m <= precision; ++m) {
    kos.push_back(koszul_complex(x.ring, fs, m));
    stages.push_back(tensor_complexes(x, kos.back().complex));
    tower.stages.push_back(stages.back().complex);
  }
  for (int m = 0; m < precision; ++m) {
    const TensorComplexData& src = stages[static_cast<size_t>(m) + 1];
    const TensorComplexData& tgt = stages[static_cast<size_t>(m)];
    std::map<int, GradedMap> comps;
    for (const auto& [n, sparts] : src.parts) {
      auto it = tgt.parts.find(n);
      if (it == tgt.parts.end()) continue;
      const auto& tparts = it->second;
      const GradedModule& sterm = src.complex.terms.at(n);
      const GradedModule& tterm = tgt.complex.terms.at(n);
      std::vector<std::vector<Poly>> mat(
          static_cast<size_t>(tterm.ngens()),
          std::vector<Poly>(static_cast<size_t>(sterm.ngens()), Poly::zero(nv)));
      for (const TensorPart& sp : sparts) {
        const TensorPart* tp = nullptr;
        for (const TensorPart& cand : tparts)
          if (cand.q == sp.q && cand.p == sp.p && cand.pgen == sp.pgen) {
            tp = &cand;
            break;
          }
        if (!tp) continue;
        Poly prod = Poly::constant(nv, 1);
        for (int i : kos[static_cast<size_t>(m) + 1].subsets[static_cast<size_t>(sp.p)]
                         [static_cast<size_t>(sp.pgen)])
          prod = prod * fs[static_cast<size_t>(i)];
        for (Eigen::Index u = 0; u < sp.gen_count; ++u)
          mat[static_cast<size_t>(tp->gen_begin + u)][static_cast<size_t>(sp.gen_begin + u)] =
              prod;
      }
      comps.emplace(n, GradedMap::make(sterm, tterm, deg_zero(x.ring.sig.dim), std::move(mat)));
    }
    tower.transitions.push_back(
        ComplexMap::make(src.complex, tgt.complex, std::move(comps)));
  }
  return tower;
}

namespace {
void fill_derived_flags(CompletionApproximation& out, const WeightWindow& w) {
  const ComplexTower& t = out.tower;
  std::set<int> idxs;
  for (const GradedComplex& c : t.stages)
    for (const auto& [i, _] : c.terms) idxs.insert(i);
  for (int i : idxs) {
    auto& m = out.pi_flags[i];
    for (const Degree& g : out.degrees) m.emplace(g, tower_limits(t.pi_tower(i, g)));
  }
}
}  // namespace

CompletionApproximation derived_gradedwise_completion(const GradedModule& m,
                                                      std::vector<Poly> fs, int precision,
                                                      const WeightWindow& w) {
  CompletionApproximation out;
  out.base = m;
  out.ideal_gens = fs;
  out.precision = precision;
  out.derived = true;
  out.degrees = m.window_degrees(w);
  out.tower = koszul_tower(GradedComplex::from_module(m), fs, precision);
  fill_derived_flags(out, w);
  return out;
}

CompletionApproximation completed_tensor(const GradedModule& m, const GradedComplex& p,
                                         std::vector<Poly> fs, int precision,
                                         const WeightWindow& w) {
  TensorComplexData t = tensor_with_perfect(m, p);
  CompletionApproximation out;
  out.base = m;
  out.ideal_gens = fs;
  out.precision = precision;
  out.derived = true;
  out.degrees = t.complex.window_degrees(w);
  out.tower = koszul_tower(t.complex, fs, precision);
  fill_derived_flags(out, w);
  return out;
}

std::string telescope_status_str(TelescopeStatus s) {
  switch (s) {
    case TelescopeStatus::Vanishes: return "Vanishes";
    case TelescopeStatus::NonVanishing: return "NonVanishing";
    default: return "Undetermined";
  }
}

std::string cert_verdict_str(CertVerdict v) {
  switch (v) {
    case CertVerdict::Yes: return "certified-yes";
    case CertVerdict::No: return "certified-no";
    default: return "undetermined";
  }
}

TelescopeResult telescope_vanishes_pi(const GradedComplex& c, int i, const Poly& f,
                                      const Degree& g, int depth) {
  TelescopeResult res;
  if (depth < 1) throw ValidationError("depth must be at least 1");
  if (f.is_zero()) {
    res.status = TelescopeStatus::Vanishes;
    res.certificate = "zero multiplier: the telescope is pro-zero";
    res.param = 1;
    return res;
  }
  const GradingSignature& sig = c.ring.sig;
  Degree d = *c.ring.homogeneous_degree(f);
  if (!(d == deg_zero(sig.dim))) {
    // Positive-weight multiplier: pieces die below the generator weights.
    std::optional<Rat> wmin;
    for (const auto& [idx, t] : c.terms) {
      auto w = t.min_gen_weight();
      if (w && (!wmin || *w < *wmin)) wmin = w;
    }
    if (!wmin) {
      res.status = TelescopeStatus::Vanishes;
      res.certificate = "complex has no generators";
      res.param = 0;
      return res;
    }
    Rat wf = sig.weight_of(d);
    if (!(wf > 0)) throw ValidationError("nonzero degree with nonpositive weight");
    int k0 = 0;
    Rat wg = sig.weight_of(g);
    while (!(wg - k0 * wf < *wmin)) ++k0;
    res.status = TelescopeStatus::Vanishes;
    res.certificate = "weight certificate: stages from " + std::to_string(k0) +
                      " onward are zero pieces";
    res.param = k0;
    return res;
  }
  // Degree-zero multiplier: a single piece with an endomorphism; decide by
  // the image chain.
  Int cst = f.terms.begin()->second;
  HomologyData h = c.pi(i, g);
  if (h.H.is_zero()) {
    res.status = TelescopeStatus::Vanishes;
    res.certificate = "piece is zero";
    res.param = 0;
    return res;
  }
  const Eigen::Index n = h.H.ngens;
  Int power = 1;
  for (int k = 0; k < depth; ++k) {
    Int next = power * cst;
    IntMat cur = power * IntMat::Identity(n, n);
    IntMat nxt = next * IntMat::Identity(n, n);
    if (subgroup_leq(cur, nxt, h.H.rels)) {  // image chain stabilized
      SubgroupData stable = presented_subgroup(cur, h.H.rels);
      if (stable.group.is_zero()) {
        res.status = TelescopeStatus::Vanishes;
        res.certificate = "multiplier nilpotent on the piece after " + std::to_string(k) +
                          " steps";
        res.param = k;
      } else {
        res.status = TelescopeStatus::NonVanishing;
        res.certificate =
            "image chain stabilizes to a nonzero subgroup on which multiplication is "
            "bijective, so the limit surjects onto it";
        res.witness = stable.group;
        res.param = k;
      }
      return res;
    }
    power = next;
  }
  res.status = TelescopeStatus::Undetermined;
  res.certificate = "image chain still strictly decreasing at depth " + std::to_string(depth);
  return res;
}

TelescopeResult telescope_vanishes(const GradedModule& m, const Poly& f, const Degree& g,
                                   int depth) {
  return telescope_vanishes_pi(GradedComplex::from_module(m), 0, f, g, depth);
}

CompletenessReport is_complete_complex(const GradedComplex& c, const std::vector<Poly>& fs,
                                       const WeightWindow& w, int depth) {
  check_ideal_gens(c.ring, fs);
  CompletenessReport rep;
  rep.degrees = c.window_degrees(w);
  std::set<int> idxs;
  for (const auto& [i, _] : c.terms) idxs.insert(i);
  bool any_undet = false, any_non = false;
  for (size_t fi = 0; fi < fs.size(); ++fi)
    for (int i : idxs)
      for (const Degree& g : rep.degrees) {
        CompletenessEntry e{fi, i, g, telescope_vanishes_pi(c, i, fs[fi], g, depth)};
        if (e.result.status == TelescopeStatus::Undetermined) any_undet = true;
        if (e.result.status == TelescopeStatus::NonVanishing) any_non = true;
        rep.entries.push_back(std::move(e));
      }
  rep.verdict = any_non ? CertVerdict::No
                        : (any_undet ? CertVerdict::Undetermined : CertVerdict::Yes);
  return rep;
}

CompletenessReport is_derived_gradedwise_complete(const GradedModule& m,
                                                  const std::vector<Poly>& fs,
                                                  const WeightWindow& w, int depth) {
  return is_complete_complex(GradedComplex::from_module(m), fs, w, depth);
}

NakayamaReport derived_nakayama_check(const GradedModule& m, const std::vector<Poly>& fs,
                                      int conn_index, const WeightWindow& w, int depth) {
  NakayamaReport rep;
  rep.conn_index = conn_index;
  rep.completeness = is_derived_gradedwise_complete(m, fs, w, depth);
  if (rep.completeness.verdict != CertVerdict::Yes)
    throw PreconditionNotCertified("completeness verdict is " +
                                   cert_verdict_str(rep.completeness.verdict));
  rep.degrees = m.window_degrees(w);
  TensorComplexData q = derived_quotient(m, fs, 1);
  std::vector<Degree> qdegs = q.complex.window_degrees(w);
  rep.quotient_connective = true;
  for (const auto& [i, _] : q.complex.terms)
    if (i < conn_index && !q.complex.pi_vanishes(i, qdegs)) rep.quotient_connective = false;
  rep.asserted = rep.quotient_connective;
  rep.module_connective = true;
  if (conn_index > 0)  // a module sits in index 0; lower indices vanish anyway
    for (const Degree& g : rep.degrees)
      if (!m.piece(g).group.is_zero()) {
        rep.module_connective = false;
        if (rep.asserted) rep.counterexamples.push_back(g);
      }
  return rep;
}

ProIsoReport pro_isomorphism_check(const GradedModule& m, const Poly& f, int depth,
                                   const WeightWindow& w) {
  auto dopt = m.ring.homogeneous_degree(f);
  if (!dopt) throw ValidationError("zero multiplier has no torsion bound");
  if (depth < 2) throw ValidationError("depth must be at least 2");
  const Degree d = *dopt;
  ProIsoReport rep;
  rep.degrees = m.window_degrees(w);
  GradedMap mult = GradedMap::mult_by(m, f);
  bool all_found = true;
  std::map<Degree, std::vector<IntMat>, DegreeLess> kernels;  // per degree, K_0..K_depth
  for (const Degree& g : rep.degrees) {
    std::vector<IntMat> ks;
    const FpAbGroup& base = m.piece(g).group;
    IntMat b = IntMat::Identity(base.ngens, base.ngens);
    Degree cur = g;
    ks.push_back(kernel_subgroup(AbMap::unchecked(base, base, b)).gens);
    for (int k = 1; k <= depth; ++k) {
      b = mult.realize(cur).mat * b;
      cur = deg_add(cur, d);
      ks.push_back(
          kernel_subgroup(AbMap::unchecked(base, m.piece(cur).group, b)).gens);
    }
    // The chain K_0 <= K_1 <= ... may pause and grow again: stabilizing at one
    // degree says nothing until the neighboring degrees stabilize too.  Read
    // the plateau from the top, not the first equality.
    const IntMat& rels = base.rels;
    int growth = 0;
    for (int k = 0; k < depth; ++k)
      if (!subgroup_leq(ks[static_cast<size_t>(k) + 1], ks[static_cast<size_t>(k)], rels))
        growth = k + 1;
    int c = growth < depth ? growth : -1;
    rep.c_of_degree.emplace(g, c);
    if (c < 0)
      all_found = false;
    else
      rep.global_c = std::max(rep.global_c, c);
    kernels.emplace(g, std::move(ks));
  }
  if (!all_found || rep.global_c < 0) {
    rep.certified = false;
    return rep;
  }
  // f^c must kill all the f-power torsion seen in the window.
  rep.certified = true;
  for (const Degree& g : rep.degrees) {
    const FpAbGroup& base = m.piece(g).group;
    IntMat b = IntMat::Identity(base.ngens, base.ngens);
    Degree cur = g;
    for (int k = 0; k < rep.global_c; ++k) {
      b = mult.realize(cur).mat * b;
      cur = deg_add(cur, d);
    }
    const IntMat& kd = kernels.at(g).back();
    if (!m.piece(cur).rel_solver->contains_all(b * kd)) rep.certified = false;
  }
  return rep;
}

}  // namespace gralg
