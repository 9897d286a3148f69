#include "gralg/comodule.hpp"

#include <algorithm>
#include <set>

namespace gralg {

namespace {
bool all_zero(const std::vector<Poly>& v) {
  for (const Poly& p : v)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Poly> vec_add(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<Poly> out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] = out[i] + b[i];
  return out;
}
}  // namespace

GroupRingElement GroupRingElement::zero(Eigen::Index width, int nvars) {
  GroupRingElement x;
  x.width = width;
  x.nvars = nvars;
  return x;
}

GroupRingElement GroupRingElement::ring_term(const Poly& r, const Degree& g) {
  GroupRingElement x = zero(1, r.nvars);
  x.add_term(g, {r});
  return x;
}

GroupRingElement GroupRingElement::module_term(std::vector<Poly> m, const Degree& g) {
  GroupRingElement x;
  x.width = static_cast<Eigen::Index>(m.size());
  x.nvars = m.empty() ? 0 : m[0].nvars;
  x.add_term(g, m);
  return x;
}

void GroupRingElement::add_term(const Degree& g, const std::vector<Poly>& c) {
  auto it = terms.find(g);
  if (it == terms.end()) {
    if (!all_zero(c)) terms.emplace(g, c);
    return;
  }
  it->second = vec_add(it->second, c);
  if (all_zero(it->second)) terms.erase(it);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement out = *this;
  for (const auto& [g, c] : o.terms) out.add_term(g, c);
  return out;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [g, c] : out.terms)
    for (Poly& p : c) p = -p;
  return out;
}

GroupRingElement GroupRingElement::ring_mul(const GroupRingElement& o) const {
  GroupRingElement out = zero(1, nvars);
  for (const auto& [g, c] : terms)
    for (const auto& [h, d] : o.terms) out.add_term(deg_add(g, h), {c[0] * d[0]});
  return out;
}

std::string GroupRingElement::str(const GradingSignature& sig) const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : terms) {
    if (!out.empty()) out += " + ";
    if (width == 1) {
      out += "(" + c[0].str(sig.var_names) + ")";
    } else {
      out += "[";
      for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ", ";
        out += c[i].str(sig.var_names);
      }
      out += "]";
    }
    out += "*t^" + deg_str(g);
  }
  return out;
}

GroupRingElement act(const GroupRingElement& scalar, const GroupRingElement& m) {
  GroupRingElement out = GroupRingElement::zero(m.width, m.nvars);
  for (const auto& [g, c] : scalar.terms)
    for (const auto& [h, v] : m.terms) {
      std::vector<Poly> prod(v.size(), Poly::zero(m.nvars));
      for (size_t i = 0; i < v.size(); ++i) prod[i] = c[0] * v[i];
      out.add_term(deg_add(g, h), prod);
    }
  return out;
}

std::vector<Poly> counit(const GroupRingElement& x) {
  std::vector<Poly> out(static_cast<size_t>(x.width), Poly::zero(x.nvars));
  for (const auto& [g, c] : x.terms) out = vec_add(out, c);
  return out;
}

Poly counit_ring(const GroupRingElement& x) { return counit(x)[0]; }

GroupRingElement antipode(const GroupRingElement& x) {
  GroupRingElement out = GroupRingElement::zero(x.width, x.nvars);
  for (const auto& [g, c] : x.terms) out.add_term(deg_sub(deg_zero(static_cast<int>(g.size())), g), c);
  return out;
}

bool DegreePairLess::operator()(const std::pair<Degree, Degree>& a,
                                const std::pair<Degree, Degree>& b) const {
  DegreeLess dl;
  if (dl(a.first, b.first)) return true;
  if (dl(b.first, a.first)) return false;
  return dl(a.second, b.second);
}

void TensorExpansion::add_term(const Degree& a, const Degree& b, const std::vector<Poly>& c) {
  auto key = std::make_pair(a, b);
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!all_zero(c)) terms.emplace(key, c);
    return;
  }
  it->second = vec_add(it->second, c);
  if (all_zero(it->second)) terms.erase(it);
}

TensorExpansion comultiply(const GroupRingElement& x) {
  TensorExpansion out;
  out.width = x.width;
  out.nvars = x.nvars;
  for (const auto& [g, c] : x.terms) out.add_term(g, g, c);
  return out;
}

GroupRingElement CoactionData::apply_ring(const Poly& f) const {
  int nv = ring.sig.nvars();
  GroupRingElement out = GroupRingElement::zero(1, nv);
  for (const auto& [e, coef] : f.terms) {
    GroupRingElement term = GroupRingElement::ring_term(Poly::constant(nv, coef), deg_zero(ring.sig.dim));
    for (int v = 0; v < nv; ++v) {
      if (e[static_cast<size_t>(v)] == 0) continue;
      // scalars always go through the ring's own coaction: the stored images
      // describe the module generators when the carrier is a module
      GroupRingElement gi = ring_carrier()
          ? images[static_cast<size_t>(v)]
          : GroupRingElement::ring_term(Poly::variable(nv, v),
                                        ring.sig.gen_degrees[static_cast<size_t>(v)]);
      for (long k = 0; k < e[static_cast<size_t>(v)]; ++k) term = term.ring_mul(gi);
    }
    out = out + term;
  }
  return out;
}

GroupRingElement CoactionData::apply(const std::vector<Poly>& elem) const {
  if (ring_carrier()) return apply_ring(elem[0]);
  GroupRingElement out = GroupRingElement::zero(module->ngens(), ring.sig.nvars());
  for (size_t j = 0; j < elem.size(); ++j) {
    if (elem[j].is_zero()) continue;
    out = out + act(apply_ring(elem[j]), images[j]);
  }
  return out;
}

CoactionData coaction_from_grading(const GradedRing& r) {
  CoactionData c;
  c.ring = r;
  for (int v = 0; v < r.sig.nvars(); ++v)
    c.images.push_back(GroupRingElement::ring_term(Poly::variable(r.sig.nvars(), v),
                                                   r.sig.gen_degrees[static_cast<size_t>(v)]));
  return c;
}

CoactionData comodule_coaction(const GradedModule& m) {
  CoactionData c;
  c.ring = m.ring;
  c.module = m;
  int nv = m.ring.sig.nvars();
  for (Eigen::Index j = 0; j < m.ngens(); ++j) {
    std::vector<Poly> e(static_cast<size_t>(m.ngens()), Poly::zero(nv));
    e[static_cast<size_t>(j)] = Poly::constant(nv, 1);
    c.images.push_back(GroupRingElement::module_term(std::move(e), m.gens[static_cast<size_t>(j)]));
  }
  return c;
}

namespace {
bool ring_elem_zero(const GradedRing& r, const Poly& f) {
  for (const auto& [d, part] : r.decompose(f))
    if (!r.is_zero_in_ring(part)) return false;
  return true;
}

bool module_elem_zero(const GradedModule& m, const std::vector<Poly>& v) {
  std::map<Degree, std::vector<Poly>, DegreeLess> comps;
  int nv = m.ring.sig.nvars();
  for (size_t j = 0; j < v.size(); ++j)
    for (const auto& [d, part] : m.ring.decompose(v[j])) {
      Degree e = deg_add(d, m.gens[j]);
      auto it = comps.find(e);
      if (it == comps.end())
        it = comps.emplace(e, std::vector<Poly>(v.size(), Poly::zero(nv))).first;
      it->second[j] = it->second[j] + part;
    }
  for (const auto& [e, comp] : comps) {
    const ModulePiece& p = m.piece(e);
    if (!p.group.elem_is_zero(m.coords(p, comp))) return false;
  }
  return true;
}

bool carrier_elem_zero(const CoactionData& c, const std::vector<Poly>& v) {
  return c.ring_carrier() ? ring_elem_zero(c.ring, v[0]) : module_elem_zero(*c.module, v);
}

std::string carrier_elem_str(const CoactionData& c, const std::vector<Poly>& v) {
  if (c.ring_carrier()) return v[0].str(c.ring.sig.var_names);
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str(c.ring.sig.var_names);
  }
  return out + "]";
}

std::vector<std::vector<Poly>> generator_elements(const CoactionData& c) {
  std::vector<std::vector<Poly>> out;
  int nv = c.ring.sig.nvars();
  if (c.ring_carrier()) {
    for (int v = 0; v < nv; ++v) out.push_back({Poly::variable(nv, v)});
  } else {
    for (Eigen::Index j = 0; j < c.module->ngens(); ++j) {
      std::vector<Poly> e(static_cast<size_t>(c.module->ngens()), Poly::zero(nv));
      e[static_cast<size_t>(j)] = Poly::constant(nv, 1);
      out.push_back(std::move(e));
    }
  }
  return out;
}
}  // namespace

CoactionReport verify_coaction_axioms(const CoactionData& c,
                                      const std::vector<std::vector<Poly>>& samples) {
  CoactionReport rep;
  int nv = c.ring.sig.nvars();
  // Relations must map to zero, labelwise.
  std::vector<std::vector<Poly>> rels;
  if (c.ring_carrier()) {
    for (const Poly& f : c.ring.ideal) rels.push_back({f});
  } else {
    for (const auto& col : c.module->rel_cols) rels.push_back(col);
  }
  for (const auto& r : rels) {
    ++rep.checks;
    GroupRingElement img = c.apply(r);
    for (const auto& [g, coeff] : img.terms)
      if (!carrier_elem_zero(c, coeff))
        rep.failures.push_back({"welldefined", carrier_elem_str(c, r),
                                "relation image has nonzero t^" + deg_str(g) + " component"});
  }
  std::vector<std::vector<Poly>> elems = generator_elements(c);
  elems.insert(elems.end(), samples.begin(), samples.end());
  for (const auto& f : elems) {
    GroupRingElement img = c.apply(f);
    // counit: the labeled components sum back to the element.
    ++rep.checks;
    std::vector<Poly> diff = counit(img);
    for (size_t i = 0; i < f.size(); ++i) diff[i] = diff[i] - f[i];
    if (!carrier_elem_zero(c, diff))
      rep.failures.push_back({"counit", carrier_elem_str(c, f),
                              "(id x e) o rho differs from the identity"});
    // coassociativity: (rho x id) o rho = (id x Delta) o rho.
    ++rep.checks;
    TensorExpansion lhs;
    lhs.width = img.width;
    lhs.nvars = nv;
    for (const auto& [g, coeff] : img.terms) {
      GroupRingElement inner = c.apply(c.ring_carrier() ? std::vector<Poly>{coeff[0]} : coeff);
      for (const auto& [h, val] : inner.terms) lhs.add_term(h, g, val);
    }
    TensorExpansion rhs = comultiply(img);
    std::set<std::pair<Degree, Degree>, DegreePairLess> keys;
    for (const auto& [k, v] : lhs.terms) keys.insert(k);
    for (const auto& [k, v] : rhs.terms) keys.insert(k);
    for (const auto& k : keys) {
      std::vector<Poly> d(static_cast<size_t>(img.width), Poly::zero(nv));
      auto il = lhs.terms.find(k);
      if (il != lhs.terms.end()) d = il->second;
      auto ir = rhs.terms.find(k);
      if (ir != rhs.terms.end())
        for (size_t i = 0; i < d.size(); ++i) d[i] = d[i] - ir->second[i];
      if (!carrier_elem_zero(c, d)) {
        rep.failures.push_back({"coassoc", carrier_elem_str(c, f),
                                "mismatch at t^" + deg_str(k.first) + " x t^" + deg_str(k.second)});
        break;
      }
    }
  }
  return rep;
}

GradingRecovery grading_from_coaction(const CoactionData& c, const WeightWindow& w) {
  if (!c.ring_carrier()) throw ValidationError("grading recovery expects a ring coaction");
  int nv = c.ring.sig.nvars();
  std::vector<Degree> degs;
  for (int v = 0; v < nv; ++v) {
    const GroupRingElement& img = c.images[static_cast<size_t>(v)];
    if (img.terms.size() != 1)
      throw MixedGeneratorImage("generator " + c.ring.sig.var_names[static_cast<size_t>(v)] +
                                " maps to " + std::to_string(img.terms.size()) + " labels");
    const auto& [g, coeff] = *img.terms.begin();
    if (!(coeff[0] == Poly::variable(nv, v)))
      throw MixedGeneratorImage("generator " + c.ring.sig.var_names[static_cast<size_t>(v)] +
                                " image is not the generator itself");
    degs.push_back(g);
  }
  GradingSignature sig = c.ring.sig;
  sig.gen_degrees = degs;
  GradingRecovery out{GradedRing::make(sig, c.ring.ideal), {}};

  out.report = verify_coaction_axioms(c, {});
  // rho-extracted components must be homogeneous of their label degree and
  // sum back to the element, on a deterministic in-window sample.
  std::vector<Poly> samples;
  samples.push_back(Poly::constant(nv, 1));
  for (int v = 0; v < nv; ++v) samples.push_back(Poly::variable(nv, v));
  for (int v = 0; v < nv; ++v)
    for (int u = v; u < nv; ++u)
      samples.push_back(Poly::variable(nv, v) * Poly::variable(nv, u));
  for (int v = 0; v + 1 < nv; ++v)
    samples.push_back(Poly::variable(nv, v) + Poly::variable(nv, v + 1));
  if (nv > 0) {
    samples.push_back(Poly::constant(nv, 1) + Poly::variable(nv, 0));
    samples.push_back(Poly::variable(nv, 0) * Poly::constant(nv, 2) - Poly::constant(nv, 3));
  }
  for (const Poly& f : samples) {
    bool inside = true;
    for (const auto& [e, coef] : f.terms)
      if (!w.contains(sig.weight_of(sig.monomial_degree(e)))) inside = false;
    if (!inside) continue;
    ++out.report.checks;
    GroupRingElement img = c.apply_ring(f);
    Poly sum = Poly::zero(nv);
    for (const auto& [g, coeff] : img.terms) {
      sum = sum + coeff[0];
      try {
        auto d = out.ring.homogeneous_degree(coeff[0]);
        if (d && !(*d == g))
          out.report.failures.push_back({"component", f.str(sig.var_names),
                                         "t^" + deg_str(g) + " component has degree " + deg_str(*d)});
      } catch (const NotHomogeneous&) {
        out.report.failures.push_back({"component", f.str(sig.var_names),
                                       "t^" + deg_str(g) + " component is not homogeneous"});
      }
    }
    if (!ring_elem_zero(out.ring, sum - f))
      out.report.failures.push_back({"sum", f.str(sig.var_names),
                                     "extracted components do not sum to the element"});
  }
  if (!out.report.passed()) {
    const AxiomFailure& a = out.report.failures.front();
    throw AxiomViolation(a.axiom + " fails on " + a.element + ": " + a.detail);
  }
  return out;
}

ModuleGroupRing module_group_ring(const GradedModule& m, const WeightWindow& w) {
  ModuleGroupRing out;
  out.labels = m.window_degrees(w);
  if (out.labels.empty()) {
    out.module = GradedModule::zero_module(m.ring);
    out.gen_offset = {0};
    return out;
  }
  std::vector<GradedModule> shifts;
  shifts.reserve(out.labels.size());
  for (const Degree& h : out.labels)
    shifts.push_back(m.shifted(deg_sub(deg_zero(m.ring.sig.dim), h)));
  std::vector<const GradedModule*> parts;
  for (const GradedModule& s : shifts) parts.push_back(&s);
  DirectSumData ds = direct_sum(parts, m.name + "[G]");
  out.module = ds.module;
  out.gen_offset = ds.gen_offset;
  return out;
}

GradedPartRecovery graded_part_from_coaction(const GradedModule& m, const CoactionData& c,
                                             const Degree& g, const WeightWindow& w) {
  if (c.ring_carrier() && m.ngens() != 1)
    throw ValidationError("ring coaction recovery needs the ring as a rank-one module");
  GradedPartRecovery out;
  out.carrier = m.window_degrees(w);
  int nv = m.ring.sig.nvars();

  std::vector<const ModulePiece*> pieces;
  std::vector<Eigen::Index> off{0};
  for (const Degree& d : out.carrier) {
    pieces.push_back(&m.piece(d));
    off.push_back(off.back() + pieces.back()->group.ngens);
  }
  const Eigen::Index total = off.back();
  Eigen::Index nrel = 0;
  for (const ModulePiece* p : pieces) nrel += p->group.rels.cols();
  IntMat carrier_rels = IntMat::Zero(total, nrel);
  {
    Eigen::Index rc = 0;
    for (size_t k = 0; k < pieces.size(); ++k) {
      const IntMat& r = pieces[k]->group.rels;
      carrier_rels.block(off[k], rc, r.rows(), r.cols()) = r;
      rc += r.cols();
    }
  }
  FpAbGroup carrier_group = FpAbGroup::from_presentation(total, carrier_rels);

  // rho on every carrier basis vector, collecting the label set.
  std::vector<GroupRingElement> vals;
  std::set<Degree, DegreeLess> label_set{g};
  for (size_t k = 0; k < pieces.size(); ++k)
    for (const GenLabel& lbl : pieces[k]->basis) {
      std::vector<Poly> elem(static_cast<size_t>(m.ngens()), Poly::zero(nv));
      elem[static_cast<size_t>(lbl.gen)] = Poly::monomial(nv, lbl.mono, 1);
      vals.push_back(c.apply(elem));
      for (const auto& [h, coeff] : vals.back().terms) label_set.insert(h);
    }
  std::vector<Degree> labels(label_set.begin(), label_set.end());
  std::map<Degree, Eigen::Index, DegreeLess> row_of;
  for (size_t i = 0; i < labels.size(); ++i)
    row_of.emplace(labels[i], static_cast<Eigen::Index>(i) * total);

  std::map<Degree, size_t, DegreeLess> block_of;
  for (size_t k = 0; k < out.carrier.size(); ++k) block_of.emplace(out.carrier[k], k);

  IntMat a = IntMat::Zero(static_cast<Eigen::Index>(labels.size()) * total, total);
  Eigen::Index col = 0;
  for (size_t k = 0; k < pieces.size(); ++k)
    for (Eigen::Index u = 0; u < pieces[k]->group.ngens; ++u, ++col) {
      const GroupRingElement& val = vals[static_cast<size_t>(col)];
      for (const auto& [h, coeff] : val.terms) {
        Eigen::Index roff = row_of.at(h);
        // split the coefficient by internal degree; drop what leaves the window
        std::map<Degree, std::vector<Poly>, DegreeLess> comps;
        for (size_t j = 0; j < coeff.size(); ++j)
          for (const auto& [d, part] : m.ring.decompose(coeff[j])) {
            Degree e = deg_add(d, m.gens[j]);
            auto it = comps.find(e);
            if (it == comps.end())
              it = comps.emplace(e, std::vector<Poly>(coeff.size(), Poly::zero(nv))).first;
            it->second[j] = it->second[j] + part;
          }
        for (const auto& [e, comp] : comps) {
          auto bit = block_of.find(e);
          if (bit == block_of.end()) continue;
          IntVec x = m.coords(*pieces[bit->second], comp);
          for (Eigen::Index i = 0; i < x.size(); ++i)
            a(roff + off[bit->second] + i, col) += x(i);
        }
      }
      a(row_of.at(g) + off[k] + u, col) -= 1;
    }

  IntMat target_rels = IntMat::Zero(static_cast<Eigen::Index>(labels.size()) * total,
                                    static_cast<Eigen::Index>(labels.size()) * nrel);
  for (size_t i = 0; i < labels.size(); ++i)
    target_rels.block(static_cast<Eigen::Index>(i) * total, static_cast<Eigen::Index>(i) * nrel,
                      total, nrel) = carrier_rels;
  FpAbGroup target_group = FpAbGroup::from_presentation(
      static_cast<Eigen::Index>(labels.size()) * total, target_rels);

  SubgroupData sub = kernel_subgroup(AbMap::unchecked(carrier_group, target_group, a));
  out.group = sub.group;
  out.inclusion = sub.gens;

  const FpAbGroup& pg = m.piece(g).group;
  IntMat proj = IntMat::Zero(pg.ngens, total);
  auto bit = block_of.find(g);
  if (bit != block_of.end())
    proj.block(0, off[bit->second], pg.ngens, pg.ngens) =
        IntMat::Identity(pg.ngens, pg.ngens);
  AbMap comp = AbMap::checked(sub.group, pg, proj * sub.gens);
  out.projection_roundtrip = comp.is_isomorphism();
  return out;
}

RoundtripReport roundtrip_equivalence_check(const GradedModule& m, const WeightWindow& w) {
  RoundtripReport rep;
  CoactionData c = comodule_coaction(m);
  int nv = m.ring.sig.nvars();
  std::vector<std::vector<Poly>> samples;
  for (Eigen::Index j = 0; j < m.ngens(); ++j)
    for (int v = 0; v < nv; ++v) {
      std::vector<Poly> e(static_cast<size_t>(m.ngens()), Poly::zero(nv));
      e[static_cast<size_t>(j)] = Poly::variable(nv, v);
      samples.push_back(std::move(e));
    }
  rep.axioms_ok = verify_coaction_axioms(c, samples).passed();

  std::vector<Degree> degs = m.window_degrees(w);
  std::map<Degree, GradedPartRecovery, DegreeLess> recs;
  for (const Degree& g : degs) {
    GradedPartRecovery r = graded_part_from_coaction(m, c, g, w);
    RoundtripEntry e;
    e.degree = g;
    e.recovered = r.group.invariant_string();
    e.expected = m.piece(g).group.invariant_string();
    e.match = r.group.same_invariants(m.piece(g).group);
    e.projection_ok = r.projection_roundtrip;
    rep.entries.push_back(std::move(e));
    recs.emplace(g, std::move(r));
  }

  // Module action carries each recovered part into the next one.
  rep.action_ok = true;
  if (!degs.empty()) {
    std::vector<Eigen::Index> off{0};
    Eigen::Index nrel = 0;
    for (const Degree& d : degs) {
      off.push_back(off.back() + m.piece(d).group.ngens);
      nrel += m.piece(d).group.rels.cols();
    }
    Eigen::Index total = off.back();
    IntMat carrier_rels = IntMat::Zero(total, nrel);
    Eigen::Index rc = 0;
    for (size_t k = 0; k < degs.size(); ++k) {
      const IntMat& r = m.piece(degs[k]).group.rels;
      carrier_rels.block(off[k], rc, r.rows(), r.cols()) = r;
      rc += r.cols();
    }
    std::map<Degree, size_t, DegreeLess> block_of;
    for (size_t k = 0; k < degs.size(); ++k) block_of.emplace(degs[k], k);
    for (int v = 0; v < nv; ++v) {
      GradedMap mult = GradedMap::mult_by(m, Poly::variable(nv, v));
      const Degree& dv = m.ring.sig.gen_degrees[static_cast<size_t>(v)];
      IntMat tm = IntMat::Zero(total, total);
      for (size_t k = 0; k < degs.size(); ++k) {
        auto it = block_of.find(deg_add(degs[k], dv));
        if (it == block_of.end()) continue;
        AbMap f = mult.realize(degs[k]);
        tm.block(off[it->second], off[k], f.mat.rows(), f.mat.cols()) = f.mat;
      }
      for (size_t k = 0; k < degs.size(); ++k) {
        auto it = block_of.find(deg_add(degs[k], dv));
        if (it == block_of.end()) continue;
        if (!subgroup_leq(tm * recs.at(degs[k]).inclusion,
                          recs.at(degs[it->second]).inclusion, carrier_rels))
          rep.action_ok = false;
      }
    }
  }
  return rep;
}

}  // namespace gralg
