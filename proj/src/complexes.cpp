#include "gralg/complexes.hpp"

#include <algorithm>
#include <functional>

namespace gralg {

GradedComplex GradedComplex::from_module(const GradedModule& m) {
  GradedComplex c;
  c.ring = m.ring;
  c.terms.emplace(0, m);
  return c;
}

GradedComplex GradedComplex::make(GradedRing ring, std::map<int, GradedModule> terms,
                                  std::map<int, GradedMap> diffs) {
  GradedComplex c;
  c.ring = std::move(ring);
  c.terms = std::move(terms);
  c.diffs = std::move(diffs);
  for (const auto& [i, d] : c.diffs) {
    if (!c.terms.count(i) || !c.terms.count(i - 1))
      throw ValidationError("differential without matching terms");
    if (c.diffs.count(i + 1)) {
      GradedMap sq = d.compose_after(c.diffs.at(i + 1));
      for (const auto& row : sq.mat)
        for (const Poly& e : row)
          if (!c.ring.is_zero_in_ring(e))
            throw CompositionNotZero("d o d nonzero at index " + std::to_string(i + 1));
    }
  }
  return c;
}

GradedModule GradedComplex::term_or_zero(int i) const {
  auto it = terms.find(i);
  return it != terms.end() ? it->second : GradedModule::zero_module(ring);
}

AbMap GradedComplex::realize_diff(int i, const Degree& g) const {
  auto it = diffs.find(i);
  if (it != diffs.end()) return it->second.realize(g);
  return AbMap::zero_map(term_or_zero(i).piece(g).group, term_or_zero(i - 1).piece(g).group);
}

HomologyData GradedComplex::pi(int i, const Degree& g) const {
  return ab_homology(realize_diff(i + 1, g), realize_diff(i, g));
}

std::vector<Degree> GradedComplex::window_degrees(const WeightWindow& w) const {
  std::set<Degree, DegreeLess> degs;
  for (const auto& [i, t] : terms)
    for (const Degree& g : t.window_degrees(w)) degs.insert(g);
  return sort_degrees(ring.sig, std::move(degs));
}

bool GradedComplex::pi_vanishes(int i, const std::vector<Degree>& degs) const {
  for (const Degree& g : degs)
    if (!pi(i, g).H.is_zero()) return false;
  return true;
}

ComplexMap ComplexMap::make(GradedComplex src, GradedComplex tgt, std::map<int, GradedMap> comps) {
  if (!src.ring.same_ring(tgt.ring)) throw RingMismatch("chain map across different rings");
  ComplexMap f;
  f.src = std::move(src);
  f.tgt = std::move(tgt);
  f.comps = std::move(comps);
  Degree z = deg_zero(f.src.ring.sig.dim);
  f.offset = f.comps.empty() ? z : f.comps.begin()->second.offset;
  for (const auto& [i, c] : f.comps)
    if (!(c.offset == f.offset))
      throw ValidationError("chain map components must share one degree shift");
  auto comp_or_zero = [&](int i) -> GradedMap {
    auto it = f.comps.find(i);
    if (it != f.comps.end()) return it->second;
    return GradedMap::zero(f.src.term_or_zero(i), f.tgt.term_or_zero(i), f.offset);
  };
  auto diff_or_zero = [&](const GradedComplex& c, int i) -> GradedMap {
    auto it = c.diffs.find(i);
    if (it != c.diffs.end()) return it->second;
    return GradedMap::zero(c.term_or_zero(i), c.term_or_zero(i - 1), z);
  };
  std::set<int> idxs;
  for (const auto& [i, _] : f.comps) idxs.insert(i);
  for (const auto& [i, _] : f.src.diffs) idxs.insert(i);
  for (const auto& [i, _] : f.tgt.diffs) idxs.insert(i);
  for (int i : idxs) {
    GradedMap lhs = diff_or_zero(f.tgt, i).compose_after(comp_or_zero(i));
    GradedMap rhs = comp_or_zero(i - 1).compose_after(diff_or_zero(f.src, i));
    for (size_t r = 0; r < lhs.mat.size(); ++r)
      for (size_t c = 0; c < lhs.mat[r].size(); ++c)
        if (!f.src.ring.is_zero_in_ring(lhs.mat[r][c] - rhs.mat[r][c]))
          throw ValidationError("chain condition fails at index " + std::to_string(i));
  }
  return f;
}

AbMap ComplexMap::realize(int i, const Degree& g) const {
  auto it = comps.find(i);
  if (it != comps.end()) return it->second.realize(g);
  return AbMap::zero_map(src.term_or_zero(i).piece(g).group,
                         tgt.term_or_zero(i).piece(deg_add(g, offset)).group);
}

AbMap ComplexMap::induced_on_pi(int i, const Degree& g) const {
  return induced_map(src.pi(i, g), tgt.pi(i, deg_add(g, offset)), realize(i, g).mat);
}

namespace {
void combinations(int r, int p, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < r; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}
}  // namespace

KoszulData koszul_complex(const GradedRing& ring, std::vector<Poly> fs, long n) {
  if (n < 0) throw ValidationError("negative exponent");
  KoszulData k;
  k.fs = fs;
  k.n = n;
  const int r = static_cast<int>(fs.size());
  std::vector<Degree> fdeg;
  std::vector<Poly> fpow;
  for (const Poly& f : fs) {
    auto d = ring.homogeneous_degree(f);
    if (!d) throw ValidationError("Koszul generator is zero");
    fdeg.push_back(*d);
    fpow.push_back(f.pow(n));
  }
  k.subsets.resize(static_cast<size_t>(r) + 1);
  std::map<int, GradedModule> terms;
  for (int p = 0; p <= r; ++p) {
    combinations(r, p, k.subsets[static_cast<size_t>(p)]);
    std::vector<Degree> shifts;
    for (const auto& s : k.subsets[static_cast<size_t>(p)]) {
      Degree d = deg_zero(ring.sig.dim);
      for (int i : s) d = deg_add(d, deg_scale(n, fdeg[static_cast<size_t>(i)]));
      shifts.push_back(d);
    }
    terms.emplace(p, GradedModule::free_module(ring, std::move(shifts),
                                               "K" + std::to_string(p)));
  }
  std::map<int, GradedMap> diffs;
  int nv = ring.sig.nvars();
  for (int p = 1; p <= r; ++p) {
    const auto& srcs = k.subsets[static_cast<size_t>(p)];
    const auto& tgts = k.subsets[static_cast<size_t>(p) - 1];
    std::map<std::vector<int>, size_t> tidx;
    for (size_t t = 0; t < tgts.size(); ++t) tidx.emplace(tgts[t], t);
    std::vector<std::vector<Poly>> mat(tgts.size(), std::vector<Poly>(srcs.size(), Poly::zero(nv)));
    for (size_t s = 0; s < srcs.size(); ++s)
      for (size_t pos = 0; pos < srcs[s].size(); ++pos) {
        std::vector<int> rest = srcs[s];
        int j = rest[pos];
        rest.erase(rest.begin() + static_cast<long>(pos));
        Poly entry = fpow[static_cast<size_t>(j)];
        if (pos % 2 == 1) entry = -entry;
        mat[tidx.at(rest)][s] = entry;
      }
    diffs.emplace(p, GradedMap::make(terms.at(p), terms.at(p - 1), deg_zero(ring.sig.dim),
                                     std::move(mat)));
  }
  k.complex = GradedComplex::make(ring, std::move(terms), std::move(diffs));
  return k;
}

TensorComplexData tensor_complexes(const GradedComplex& x, const GradedComplex& p) {
  if (!x.ring.same_ring(p.ring)) throw RingMismatch("tensor across different rings");
  for (const auto& [i, t] : p.terms)
    if (!t.rel_cols.empty()) throw NotPerfect("tensor factor term " + std::to_string(i) +
                                              " is not free");
  const GradedRing& ring = x.ring;
  int nv = ring.sig.nvars();
  TensorComplexData out;
  std::map<int, GradedModule> terms;
  if (x.terms.empty() || p.terms.empty()) {
    out.complex = GradedComplex::make(ring, {}, {});
    return out;
  }
  for (int n = x.lo() + p.lo(); n <= x.hi() + p.hi(); ++n) {
    std::vector<TensorPart> parts;
    std::vector<GradedModule> copies;
    Eigen::Index off = 0;
    for (const auto& [q, xq] : x.terms) {
      int pp = n - q;
      auto it = p.terms.find(pp);
      if (it == p.terms.end()) continue;
      for (Eigen::Index jp = 0; jp < it->second.ngens(); ++jp) {
        const Degree& s = it->second.gens[static_cast<size_t>(jp)];
        Degree neg = deg_sub(deg_zero(ring.sig.dim), s);
        copies.push_back(xq.shifted(neg));
        parts.push_back({q, pp, jp, off, xq.ngens()});
        off += xq.ngens();
      }
    }
    if (copies.empty()) continue;
    std::vector<const GradedModule*> ptrs;
    for (const GradedModule& c : copies) ptrs.push_back(&c);
    terms.emplace(n, direct_sum(ptrs, "T" + std::to_string(n)).module);
    out.parts.emplace(n, std::move(parts));
  }
  std::map<int, GradedMap> diffs;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    int n = it->first;
    auto jt = terms.find(n - 1);
    if (jt == terms.end()) continue;
    const auto& sparts = out.parts.at(n);
    const auto& tparts = out.parts.at(n - 1);
    std::vector<std::vector<Poly>> mat(
        static_cast<size_t>(jt->second.ngens()),
        std::vector<Poly>(static_cast<size_t>(it->second.ngens()), Poly::zero(nv)));
    auto find_part = [](const std::vector<TensorPart>& ps, int q, int pp,
                        Eigen::Index jp) -> const TensorPart* {
      for (const TensorPart& t : ps)
        if (t.q == q && t.p == pp && t.pgen == jp) return &t;
      return nullptr;
    };
    for (const TensorPart& sp : sparts) {
      auto xd = x.diffs.find(sp.q);
      if (xd != x.diffs.end()) {
        const TensorPart* tp = find_part(tparts, sp.q - 1, sp.p, sp.pgen);
        if (tp) {
          for (Eigen::Index i = 0; i < tp->gen_count; ++i)
            for (Eigen::Index u = 0; u < sp.gen_count; ++u) {
              const Poly& e = xd->second.mat[static_cast<size_t>(i)][static_cast<size_t>(u)];
              if (!e.is_zero())
                mat[static_cast<size_t>(tp->gen_begin + i)][static_cast<size_t>(sp.gen_begin + u)] =
                    mat[static_cast<size_t>(tp->gen_begin + i)]
                       [static_cast<size_t>(sp.gen_begin + u)] + e;
            }
        }
      }
      auto pd = p.diffs.find(sp.p);
      if (pd != p.diffs.end()) {
        for (Eigen::Index kk = 0; kk < pd->second.tgt.ngens(); ++kk) {
          const Poly& e = pd->second.mat[static_cast<size_t>(kk)][static_cast<size_t>(sp.pgen)];
          if (e.is_zero()) continue;
          const TensorPart* tp = find_part(tparts, sp.q, sp.p - 1, kk);
          if (!tp) continue;
          Poly signed_e = (sp.q % 2 == 0) ? e : -e;
          for (Eigen::Index u = 0; u < sp.gen_count; ++u)
            mat[static_cast<size_t>(tp->gen_begin + u)][static_cast<size_t>(sp.gen_begin + u)] =
                mat[static_cast<size_t>(tp->gen_begin + u)]
                   [static_cast<size_t>(sp.gen_begin + u)] + signed_e;
        }
      }
    }
    diffs.emplace(n, GradedMap::make(it->second, jt->second, deg_zero(ring.sig.dim),
                                     std::move(mat)));
  }
  out.complex = GradedComplex::make(ring, std::move(terms), std::move(diffs));
  return out;
}

TensorComplexData derived_quotient(const GradedModule& m, const std::vector<Poly>& fs, long n) {
  return tensor_complexes(GradedComplex::from_module(m),
                          koszul_complex(m.ring, fs, n).complex);
}

TensorComplexData derived_quotient_complex(const GradedComplex& c, const std::vector<Poly>& fs,
                                           long n) {
  return tensor_complexes(c, koszul_complex(c.ring, fs, n).complex);
}

TensorComplexData tensor_with_perfect(const GradedModule& m, const GradedComplex& p) {
  return tensor_complexes(GradedComplex::from_module(m), p);
}

namespace {
// Coordinate inclusion of a term piece as a tensor part, and the projection
// back onto a part.
IntMat part_inclusion(const ModulePiece& from, const ModulePiece& to, const TensorPart& part) {
  IntMat a = IntMat::Zero(to.group.ngens, from.group.ngens);
  for (Eigen::Index u = 0; u < from.group.ngens; ++u) {
    const GenLabel& l = from.basis[static_cast<size_t>(u)];
    a(to.blocks[static_cast<size_t>(part.gen_begin + l.gen)].at(l.mono), u) = 1;
  }
  return a;
}

IntMat part_projection(const ModulePiece& from, const ModulePiece& to, const TensorPart& part) {
  IntMat a = IntMat::Zero(to.group.ngens, from.group.ngens);
  for (Eigen::Index u = 0; u < from.group.ngens; ++u) {
    const GenLabel& l = from.basis[static_cast<size_t>(u)];
    if (l.gen < part.gen_begin || l.gen >= part.gen_begin + part.gen_count) continue;
    a(to.blocks[static_cast<size_t>(l.gen - part.gen_begin)].at(l.mono), u) = 1;
  }
  return a;
}

// nullptr when the (q, p) summand is absent (its factor is zero there).
const TensorPart* find_part(const std::map<int, std::vector<TensorPart>>& parts, int n, int q,
                            int pp) {
  auto it = parts.find(n);
  if (it != parts.end())
    for (const TensorPart& t : it->second)
      if (t.q == q && t.p == pp) return &t;
  return nullptr;
}

bool subgroups_equal(const IntMat& a, const IntMat& b, const IntMat& nulls) {
  return subgroup_leq(a, b, nulls) && subgroup_leq(b, a, nulls);
}
}  // namespace

SesReport verify_quotient_ses(const GradedComplex& x, const Poly& f, int i, const Degree& g) {
  auto dopt = x.ring.homogeneous_degree(f);
  if (!dopt) throw ValidationError("quotient by the zero element");
  const Degree d = *dopt;
  const Degree gd = deg_sub(g, d);
  TensorComplexData c = derived_quotient_complex(x, {f}, 1);

  HomologyData hx_i = x.pi(i, g);
  HomologyData hx_i_low = x.pi(i, gd);
  HomologyData hc = c.complex.pi(i, g);
  HomologyData hx_m1_low = x.pi(i - 1, gd);
  HomologyData hx_m1 = x.pi(i - 1, g);

  GradedModule term_i = x.term_or_zero(i);
  GradedModule term_m1 = x.term_or_zero(i - 1);
  AbMap f_pi_i = induced_map(hx_i_low, hx_i, GradedMap::mult_by(term_i, f).realize(gd).mat);
  AbMap f_pi_m1 = induced_map(hx_m1_low, hx_m1, GradedMap::mult_by(term_m1, f).realize(gd).mat);

  SesReport rep;
  rep.index = i;
  rep.degree = g;
  rep.left = cokernel(f_pi_i);
  rep.middle = hc.H;
  rep.right = kernel_subgroup(f_pi_m1).group;

  GradedModule cterm = c.complex.term_or_zero(i);
  const ModulePiece& cpiece = cterm.piece(g);
  IntMat alpha, beta;
  if (c.complex.terms.count(i)) {
    if (const TensorPart* p0 = find_part(c.parts, i, i, 0))
      alpha = part_inclusion(term_i.piece(g), cpiece, *p0);
    else
      alpha = IntMat::Zero(cpiece.group.ngens, term_i.piece(g).group.ngens);
    if (const TensorPart* p1 = find_part(c.parts, i, i - 1, 1))
      beta = part_projection(cpiece, term_m1.piece(gd), *p1);
    else
      beta = IntMat::Zero(term_m1.piece(gd).group.ngens, cpiece.group.ngens);
  } else {
    alpha = IntMat::Zero(0, term_i.piece(g).group.ngens);
    beta = IntMat::Zero(term_m1.piece(gd).group.ngens, 0);
  }
  AbMap alpha_h = induced_map(hx_i, hc, alpha);
  AbMap beta_h = induced_map(hc, hx_m1_low, beta);

  rep.exact_left =
      subgroups_equal(kernel_subgroup(alpha_h).gens, f_pi_i.mat, hx_i.H.rels);
  rep.exact_middle =
      subgroups_equal(alpha_h.mat, kernel_subgroup(beta_h).gens, hc.H.rels);
  rep.exact_right =
      subgroups_equal(beta_h.mat, kernel_subgroup(f_pi_m1).gens, hx_m1_low.H.rels);
  return rep;
}

}  // namespace gralg
