#include "gralg/retraction.hpp"

#include <algorithm>

namespace gralg {

namespace {

// Sparse-by-blocks assembly of one big integer matrix.
struct Assembler {
  struct Block {
    Eigen::Index r, c;
    IntMat m;
  };
  Eigen::Index rows = 0, cols = 0;
  std::vector<Block> blocks;

  void put(Eigen::Index r, Eigen::Index c, IntMat m) {
    rows = std::max(rows, r + m.rows());
    cols = std::max(cols, c + m.cols());
    blocks.push_back({r, c, std::move(m)});
  }
  IntMat materialize(Eigen::Index r = -1, Eigen::Index c = -1) const {
    IntMat a = IntMat::Zero(std::max(rows, r), std::max(cols, c));
    for (const Block& b : blocks) a.block(b.r, b.c, b.m.rows(), b.m.cols()) += b.m;
    return a;
  }
};

}  // namespace

Eigen::Index WindowedCarrier::block_of(const Degree& g) const {
  for (size_t k = 0; k < degrees.size(); ++k)
    if (degrees[k] == g) return static_cast<Eigen::Index>(k);
  return -1;
}

WindowedCarrier windowed_carrier(const GradedModule& m, const WeightWindow& w) {
  WindowedCarrier c;
  c.module = m;
  c.degrees = m.window_degrees(w);
  c.offset.push_back(0);
  Assembler rels;
  Eigen::Index relcols = 0;
  for (const Degree& g : c.degrees) {
    const ModulePiece& p = m.piece(g);
    rels.put(c.offset.back(), relcols, p.group.rels);
    relcols += p.group.rels.cols();
    c.offset.push_back(c.offset.back() + p.group.ngens);
  }
  Eigen::Index dim = c.offset.back();
  c.total = FpAbGroup::from_presentation(dim, rels.materialize(dim, relcols));
  return c;
}

IntMat include_family(const WindowedCarrier& src, const WindowedCarrier& tgt,
                      const DegreewiseFamily& f) {
  IntMat a = IntMat::Zero(tgt.dim(), src.dim());
  for (size_t k = 0; k < f.degrees.size(); ++k) {
    Eigen::Index sb = src.block_of(f.degrees[k]);
    Eigen::Index tb = tgt.block_of(f.degrees[k]);
    if (sb < 0) throw ValidationError("family degree missing from source carrier");
    const AbMap& comp = f.comps[k];
    if (tb < 0) {
      if (comp.tgt.ngens != 0) throw ValidationError("family lands outside the target carrier");
      continue;
    }
    a.block(tgt.offset[static_cast<size_t>(tb)], src.offset[static_cast<size_t>(sb)],
            comp.mat.rows(), comp.mat.cols()) = comp.mat;
  }
  return a;
}

DegreewiseFamily retract_map(const WindowedCarrier& src, const WindowedCarrier& tgt,
                             const IntMat& total_map) {
  if (total_map.rows() != tgt.dim() || total_map.cols() != src.dim())
    throw ValidationError("total map has wrong shape for the carriers");
  DegreewiseFamily out;
  for (size_t k = 0; k < src.degrees.size(); ++k) {
    const Degree& g = src.degrees[k];
    const ModulePiece& ps = src.module.piece(g);
    const ModulePiece& pt = tgt.module.piece(g);
    Eigen::Index tb = tgt.block_of(g);
    IntMat block = IntMat::Zero(pt.group.ngens, ps.group.ngens);
    if (tb >= 0)
      block = total_map.block(tgt.offset[static_cast<size_t>(tb)], src.offset[k],
                              pt.group.ngens, ps.group.ngens);
    out.degrees.push_back(g);
    out.comps.push_back(AbMap::checked(ps.group, pt.group, std::move(block)));
  }
  return out;
}

bool families_agree(const WindowedCarrier& tgt_carrier, const DegreewiseFamily& a,
                    const DegreewiseFamily& b) {
  if (a.degrees != b.degrees) return false;
  for (size_t k = 0; k < a.degrees.size(); ++k) {
    const ModulePiece& pt = tgt_carrier.module.piece(a.degrees[k]);
    IntMat diff = a.comps[k].mat - b.comps[k].mat;
    if (!pt.rel_solver->contains_all(diff)) return false;
  }
  return true;
}

HomFiberReport graded_hom_fiber_check(const GradedModule& m, const GradedModule& n,
                                      const WeightWindow& w) {
  if (!m.ring.same_ring(n.ring)) throw RingMismatch("hom fiber across different rings");
  const GradingSignature& sig = m.ring.sig;
  HomFiberReport rep;
  rep.degrees = m.window_degrees(w);
  const auto& degs = rep.degrees;
  std::vector<Eigen::Index> mdim, ndim, uoff{0};
  for (const Degree& g : degs) {
    mdim.push_back(m.piece(g).group.ngens);
    ndim.push_back(n.piece(g).group.ngens);
    uoff.push_back(uoff.back() + mdim.back() * ndim.back());
  }
  const Eigen::Index udim = uoff.back();

  // Side A: families F_g with F_g . R_M = 0 and F_{g+dv} . x_v = x_v . F_g,
  // everything modulo the target piece relations.
  Assembler sysa;
  Eigen::Index row = 0, slack = udim;
  for (size_t k = 0; k < degs.size(); ++k) {
    const ModulePiece& pm = m.piece(degs[k]);
    const ModulePiece& pn = n.piece(degs[k]);
    Eigen::Index p = pm.group.rels.cols();
    if (p == 0 || ndim[k] == 0 || mdim[k] == 0) continue;
    sysa.put(row, uoff[k], kron(IntMat(pm.group.rels.transpose()),
                                IntMat::Identity(ndim[k], ndim[k])));
    IntMat sl = kron(IntMat::Identity(p, p), pn.group.rels);
    sysa.put(row, slack, sl);
    slack += sl.cols();
    row += p * ndim[k];
  }
  for (size_t k = 0; k < degs.size(); ++k) {
    for (int v = 0; v < sig.nvars(); ++v) {
      Degree g2 = deg_add(degs[k], sig.gen_degrees[static_cast<size_t>(v)]);
      auto it = std::find(degs.begin(), degs.end(), g2);
      if (it == degs.end()) continue;
      size_t k2 = static_cast<size_t>(it - degs.begin());
      if (mdim[k] == 0 || ndim[k2] == 0) continue;
      Poly xv = Poly::variable(sig.nvars(), v);
      IntMat a = GradedMap::mult_by(m, xv).realize(degs[k]).mat;  // M_g -> M_g2
      IntMat b = GradedMap::mult_by(n, xv).realize(degs[k]).mat;  // N_g -> N_g2
      sysa.put(row, uoff[k2], kron(IntMat(a.transpose()),
                                   IntMat::Identity(ndim[k2], ndim[k2])));
      sysa.put(row, uoff[k], -kron(IntMat::Identity(mdim[k], mdim[k]), b));
      IntMat sl = kron(IntMat::Identity(mdim[k], mdim[k]), n.piece(g2).group.rels);
      sysa.put(row, slack, sl);
      slack += sl.cols();
      row += mdim[k] * ndim[k2];
    }
  }
  IntMat xa = kernel_basis(sysa.materialize(row, slack)).topRows(udim);

  Assembler nullsasm;
  Eigen::Index nullcols = 0;
  for (size_t k = 0; k < degs.size(); ++k) {
    if (mdim[k] == 0) continue;
    IntMat nl = kron(IntMat::Identity(mdim[k], mdim[k]), n.piece(degs[k]).group.rels);
    nullsasm.put(uoff[k], nullcols, nl);
    nullcols += nl.cols();
  }
  IntMat nulls = nullsasm.materialize(udim, nullcols);
  rep.family_group = presented_subgroup(xa, nulls).group;

  // Side B: genuine module maps, by generator images.
  std::vector<Eigen::Index> coff{0};
  for (const Degree& a : m.gens) coff.push_back(coff.back() + n.piece(a).group.ngens);
  const Eigen::Index cdim = coff.back();
  Assembler sysb;
  Eigen::Index rowb = 0, slackb = cdim;
  for (size_t c = 0; c < m.rel_cols.size(); ++c) {
    const Degree& bc = m.rel_degrees[c];
    Eigen::Index h = n.piece(bc).group.ngens;
    if (h == 0) continue;
    for (size_t j = 0; j < m.gens.size(); ++j) {
      const Poly& e = m.rel_cols[c][j];
      if (e.is_zero()) continue;
      sysb.put(rowb, coff[j], GradedMap::mult_by(n, e).realize(m.gens[j]).mat);
    }
    sysb.put(rowb, slackb, n.piece(bc).group.rels);
    slackb += n.piece(bc).group.rels.cols();
    rowb += h;
  }
  IntMat xb = kernel_basis(sysb.materialize(rowb, slackb)).topRows(cdim);

  Assembler embed;
  for (size_t k = 0; k < degs.size(); ++k) {
    const ModulePiece& pm = m.piece(degs[k]);
    for (Eigen::Index u = 0; u < pm.group.ngens; ++u) {
      const GenLabel& lbl = pm.basis[static_cast<size_t>(u)];
      Poly mono = Poly::monomial(sig.nvars(), lbl.mono, 1);
      IntMat mm = GradedMap::mult_by(n, mono).realize(m.gens[static_cast<size_t>(lbl.gen)]).mat;
      embed.put(uoff[k] + u * ndim[k], coff[static_cast<size_t>(lbl.gen)], std::move(mm));
    }
  }
  IntMat sb_gens = embed.materialize(udim, cdim) * xb;
  rep.rmap_group = presented_subgroup(sb_gens, nulls).group;
  rep.families_match =
      subgroup_leq(sb_gens, xa, nulls) && subgroup_leq(xa, sb_gens, nulls);
  return rep;
}

}  // namespace gralg
