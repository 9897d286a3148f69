#include "gralg/day_tensor.hpp"

namespace gralg {

DayTensorPiece day_tensor_piece(const GradedModule& m, const GradedModule& n, const Degree& g) {
  if (!m.ring.same_ring(n.ring)) throw RingMismatch("tensor across different rings");
  const GradedRing& ring = m.ring;
  const GradingSignature& sig = ring.sig;
  // The weight band certifying a finite decomposition set comes from
  // pointedness; without generator weight bounds the set is not certified.
  auto wm = m.min_gen_weight();
  auto wn = n.min_gen_weight();
  DayTensorPiece out;
  out.degree = g;
  if (!wm || !wn) {  // one factor is the zero module
    out.group = FpAbGroup::zero();
    return out;
  }
  try {
    validate(sig);
  } catch (const NotPointed& e) {
    throw UnboundedDecomposition(std::string("decomposition set not finite: ") + e.what());
  }
  // Left-degree candidates: achievable degrees s of M with
  // min weight(N) <= weight(g) - weight(s).
  WeightWindow band{*wm, sig.weight_of(g) - *wn};
  std::vector<Degree> scands = m.window_degrees(band);
  std::map<Degree, Eigen::Index, DegreeLess> block_of;
  Eigen::Index total = 0;
  for (const Degree& s : scands) {
    Degree t = deg_sub(g, s);
    const ModulePiece& pm = m.piece(s);
    const ModulePiece& pn = n.piece(t);
    if (pm.group.ngens == 0 || pn.group.ngens == 0) continue;
    DayBlock b;
    b.s = s;
    b.t = t;
    b.offset = total;
    b.mdim = pm.group.ngens;
    b.ndim = pn.group.ngens;
    total += b.mdim * b.ndim;
    block_of.emplace(s, static_cast<Eigen::Index>(out.blocks.size()));
    out.blocks.push_back(std::move(b));
  }
  std::vector<IntVec> cols;
  auto block_rels = [&](const DayBlock& b) {
    const IntMat& rm = m.piece(b.s).group.rels;
    const IntMat& rn = n.piece(b.t).group.rels;
    IntMat left = kron(rm, IntMat::Identity(b.ndim, b.ndim));
    IntMat right = kron(IntMat::Identity(b.mdim, b.mdim), rn);
    for (const IntMat* r : {&left, &right})
      for (Eigen::Index c = 0; c < r->cols(); ++c) {
        IntVec col = IntVec::Zero(total);
        col.segment(b.offset, b.mdim * b.ndim) = r->col(c);
        cols.push_back(std::move(col));
      }
  };
  for (const DayBlock& b : out.blocks) block_rels(b);
  // Bilinearity across adjacent decompositions, one move per variable.
  for (int v = 0; v < sig.nvars(); ++v) {
    const Degree& dv = sig.gen_degrees[static_cast<size_t>(v)];
    Poly xv = Poly::variable(sig.nvars(), v);
    for (const DayBlock& b : out.blocks) {
      // (x_v u) (x) w  -  u (x) (x_v w), u in M_s, w in N_{t - dv}
      Degree s2 = deg_add(b.s, dv);
      auto it = block_of.find(s2);
      if (it == block_of.end()) continue;
      const DayBlock& b2 = out.blocks[static_cast<size_t>(it->second)];
      IntMat mu = GradedMap::mult_by(m, xv).realize(b.s).mat;     // M_s -> M_s2
      IntMat nu = GradedMap::mult_by(n, xv).realize(b2.t).mat;    // N_{t2} -> N_t
      for (Eigen::Index u = 0; u < b.mdim; ++u)
        for (Eigen::Index w = 0; w < b2.ndim; ++w) {
          IntVec col = IntVec::Zero(total);
          for (Eigen::Index i = 0; i < b2.mdim; ++i)
            if (mu(i, u) != 0) col(b2.offset + i * b2.ndim + w) += mu(i, u);
          for (Eigen::Index i = 0; i < b.ndim; ++i)
            if (nu(i, w) != 0) col(b.offset + u * b.ndim + i) -= nu(i, w);
          if (!col.isZero(0)) cols.push_back(std::move(col));
        }
    }
  }
  IntMat rels(total, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) rels.col(static_cast<Eigen::Index>(j)) = cols[j];
  out.group = FpAbGroup::from_presentation(total, rels);
  return out;
}

GradedModule tensor_module(const GradedModule& m, const GradedModule& n) {
  if (!m.ring.same_ring(n.ring)) throw RingMismatch("tensor across different rings");
  int nv = m.ring.sig.nvars();
  std::vector<Degree> gens;
  for (const Degree& a : m.gens)
    for (const Degree& b : n.gens) gens.push_back(deg_add(a, b));
  auto pair_index = [&](size_t j, size_t k) { return j * n.gens.size() + k; };
  std::vector<std::vector<Poly>> cols;
  for (const auto& col : m.rel_cols)
    for (size_t k = 0; k < n.gens.size(); ++k) {
      std::vector<Poly> full(gens.size(), Poly::zero(nv));
      for (size_t j = 0; j < m.gens.size(); ++j) full[pair_index(j, k)] = col[j];
      cols.push_back(std::move(full));
    }
  for (const auto& col : n.rel_cols)
    for (size_t j = 0; j < m.gens.size(); ++j) {
      std::vector<Poly> full(gens.size(), Poly::zero(nv));
      for (size_t k = 0; k < n.gens.size(); ++k) full[pair_index(j, k)] = col[k];
      cols.push_back(std::move(full));
    }
  return GradedModule::make(m.ring, std::move(gens), std::move(cols),
                            m.name + "(x)" + n.name);
}

}  // namespace gralg
