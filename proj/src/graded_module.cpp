#include "gralg/graded_module.hpp"

#include <algorithm>

namespace gralg {

GradedModule GradedModule::make(GradedRing ring, std::vector<Degree> gens,
                                std::vector<std::vector<Poly>> rel_cols, std::string name) {
  GradedModule m;
  m.ring = std::move(ring);
  m.gens = std::move(gens);
  m.name = std::move(name);
  for (auto& col : rel_cols) {
    if (col.size() != m.gens.size()) throw ValidationError("relation column has wrong length");
    std::optional<Degree> b;
    for (size_t j = 0; j < col.size(); ++j) {
      if (col[j].nvars != m.ring.sig.nvars())
        throw ValidationError("relation entry has wrong variable count");
      auto d = m.ring.homogeneous_degree(col[j]);
      if (!d) continue;
      Degree bj = deg_add(*d, m.gens[j]);
      if (b && !(bj == *b))
        throw NotHomogeneous("relation column mixes degrees " + deg_str(*b) + " and " + deg_str(bj));
      b = bj;
    }
    if (!b) continue;  // zero column
    m.rel_cols.push_back(std::move(col));
    m.rel_degrees.push_back(*b);
  }
  return m;
}

GradedModule GradedModule::free_module(GradedRing ring, std::vector<Degree> shifts,
                                       std::string name) {
  return make(std::move(ring), std::move(shifts), {}, std::move(name));
}

GradedModule GradedModule::zero_module(GradedRing ring) {
  return make(std::move(ring), {}, {}, "0");
}

const ModulePiece& GradedModule::piece(const Degree& g) const {
  auto it = cache_->find(g);
  if (it != cache_->end()) return it->second;
  const auto& sig = ring.sig;
  ModulePiece p;
  p.degree = g;
  p.block_offset.assign(1, 0);
  p.blocks.resize(gens.size());
  for (size_t j = 0; j < gens.size(); ++j) {
    auto monos = monomials_of_degree(sig, deg_sub(g, gens[j]));
    for (const Exp& m : monos) {
      p.blocks[j].emplace(m, static_cast<Eigen::Index>(p.basis.size()));
      p.basis.push_back({static_cast<Eigen::Index>(j), m});
    }
    p.block_offset.push_back(static_cast<Eigen::Index>(p.basis.size()));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(p.basis.size());
  std::vector<IntVec> cols;
  auto push_block = [&](IntVec& col, size_t j, const Poly& f) {
    for (const auto& [e, c] : f.terms) col(p.blocks[j].at(e)) += c;
  };
  for (size_t j = 0; j < gens.size(); ++j)
    for (size_t t = 0; t < ring.ideal.size(); ++t)
      for (const Exp& m :
           monomials_of_degree(sig, deg_sub(deg_sub(g, gens[j]), ring.ideal_degrees[t]))) {
        IntVec col = IntVec::Zero(n);
        push_block(col, j, Poly::monomial(sig.nvars(), m, 1) * ring.ideal[t]);
        cols.push_back(std::move(col));
      }
  for (size_t c = 0; c < rel_cols.size(); ++c)
    for (const Exp& m : monomials_of_degree(sig, deg_sub(g, rel_degrees[c]))) {
      IntVec col = IntVec::Zero(n);
      Poly mono = Poly::monomial(sig.nvars(), m, 1);
      for (size_t j = 0; j < gens.size(); ++j)
        if (!rel_cols[c][j].is_zero()) push_block(col, j, mono * rel_cols[c][j]);
      cols.push_back(std::move(col));
    }
  IntMat rels(n, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) rels.col(static_cast<Eigen::Index>(j)) = cols[j];
  p.group = FpAbGroup::from_presentation(n, rels);
  p.rel_solver = std::make_shared<LinearSolver>(p.group.rels);
  return cache_->emplace(g, std::move(p)).first->second;
}

IntVec GradedModule::coords(const ModulePiece& p, const std::vector<Poly>& elem) const {
  IntVec v = IntVec::Zero(p.group.ngens);
  for (size_t j = 0; j < elem.size(); ++j)
    for (const auto& [e, c] : elem[j].terms) {
      auto it = p.blocks[j].find(e);
      if (it == p.blocks[j].end())
        throw NotHomogeneous("element not supported in degree " + deg_str(p.degree));
      v(it->second) += c;
    }
  return v;
}

GradedModule GradedModule::shifted(const Degree& g) const {
  GradedModule m;
  m.ring = ring;
  m.name = name + "(" + deg_str(g) + ")";
  for (const Degree& a : gens) m.gens.push_back(deg_sub(a, g));
  m.rel_cols = rel_cols;
  for (const Degree& b : rel_degrees) m.rel_degrees.push_back(deg_sub(b, g));
  return m;
}

std::vector<Degree> GradedModule::window_degrees(const WeightWindow& w) const {
  std::set<Degree, DegreeLess> degs;
  for (const Degree& a : gens) {
    Rat wa = ring.sig.weight_of(a);
    for (const Degree& c : cone_degrees(ring.sig, w.hi - wa)) {
      Degree d = deg_add(a, c);
      if (w.contains(ring.sig.weight_of(d))) degs.insert(d);
    }
  }
  return sort_degrees(ring.sig, std::move(degs));
}

std::optional<Rat> GradedModule::min_gen_weight() const {
  std::optional<Rat> w;
  for (const Degree& a : gens) {
    Rat wa = ring.sig.weight_of(a);
    if (!w || wa < *w) w = wa;
  }
  return w;
}

GradedMap GradedMap::make(GradedModule src, GradedModule tgt, Degree offset,
                          std::vector<std::vector<Poly>> mat) {
  if (!src.ring.same_ring(tgt.ring)) throw RingMismatch("graded map across different rings");
  if (mat.size() != static_cast<size_t>(tgt.ngens()))
    throw ValidationError("map matrix has wrong height");
  for (size_t i = 0; i < mat.size(); ++i) {
    if (mat[i].size() != static_cast<size_t>(src.ngens()))
      throw ValidationError("map matrix has wrong width");
    for (size_t j = 0; j < mat[i].size(); ++j) {
      if (mat[i][j].is_zero()) continue;
      auto d = src.ring.homogeneous_degree(mat[i][j]);
      Degree expect = deg_sub(deg_add(src.gens[j], offset), tgt.gens[i]);
      if (!(*d == expect))
        throw NotHomogeneous("map entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") has degree " + deg_str(*d) + ", expected " + deg_str(expect));
    }
  }
  GradedMap f;
  f.src = std::move(src);
  f.tgt = std::move(tgt);
  f.offset = std::move(offset);
  f.mat = std::move(mat);
  return f;
}

GradedMap GradedMap::mult_by(const GradedModule& m, const Poly& f, std::optional<Degree> offset) {
  auto d = m.ring.homogeneous_degree(f);
  Degree off = d ? *d : (offset ? *offset : deg_zero(m.ring.sig.dim));
  std::vector<std::vector<Poly>> mat(m.gens.size(),
                                     std::vector<Poly>(m.gens.size(), Poly::zero(f.nvars)));
  for (size_t j = 0; j < m.gens.size(); ++j) mat[j][j] = f;
  return make(m, m, off, std::move(mat));
}

GradedMap GradedMap::zero(GradedModule src, GradedModule tgt, Degree offset) {
  int nv = src.ring.sig.nvars();
  std::vector<std::vector<Poly>> mat(tgt.gens.size(),
                                     std::vector<Poly>(src.gens.size(), Poly::zero(nv)));
  return make(std::move(src), std::move(tgt), std::move(offset), std::move(mat));
}

GradedMap GradedMap::identity(const GradedModule& m) {
  return mult_by(m, Poly::constant(m.ring.sig.nvars(), 1));
}

AbMap GradedMap::realize(const Degree& g) const {
  auto it = cache_->find(g);
  if (it != cache_->end()) return it->second;
  const ModulePiece& from = src.piece(g);
  const ModulePiece& to = tgt.piece(deg_add(g, offset));
  IntMat a = IntMat::Zero(to.group.ngens, from.group.ngens);
  for (Eigen::Index col = 0; col < from.group.ngens; ++col) {
    const GenLabel& lbl = from.basis[static_cast<size_t>(col)];
    Poly mono = Poly::monomial(src.ring.sig.nvars(), lbl.mono, 1);
    for (size_t i = 0; i < mat.size(); ++i) {
      const Poly& entry = mat[i][static_cast<size_t>(lbl.gen)];
      if (entry.is_zero()) continue;
      Poly img = mono * entry;
      for (const auto& [e, c] : img.terms) a(to.blocks[i].at(e), col) += c;
    }
  }
  if (from.group.rels.cols() > 0 && !to.rel_solver->contains_all(a * from.group.rels))
    throw MapNotWellDefined("realized map breaks a relation in degree " + deg_str(g));
  AbMap f = AbMap::unchecked(from.group, to.group, std::move(a));
  cache_->emplace(g, f);
  return f;
}

GradedMap GradedMap::compose_after(const GradedMap& inner) const {
  if (!src.ring.same_ring(inner.tgt.ring)) throw RingMismatch("composition across rings");
  int nv = src.ring.sig.nvars();
  std::vector<std::vector<Poly>> prod(mat.size(),
                                      std::vector<Poly>(inner.src.gens.size(), Poly::zero(nv)));
  for (size_t i = 0; i < mat.size(); ++i)
    for (size_t j = 0; j < inner.src.gens.size(); ++j)
      for (size_t k = 0; k < inner.tgt.gens.size(); ++k)
        if (!mat[i][k].is_zero() && !inner.mat[k][j].is_zero())
          prod[i][j] = prod[i][j] + mat[i][k] * inner.mat[k][j];
  return make(inner.src, tgt, deg_add(inner.offset, offset), std::move(prod));
}

DirectSumData direct_sum(const std::vector<const GradedModule*>& parts, std::string name) {
  if (parts.empty()) throw ValidationError("direct sum of nothing needs a ring");
  const GradedRing& ring = parts[0]->ring;
  int nv = ring.sig.nvars();
  DirectSumData out;
  out.gen_offset.push_back(0);
  std::vector<Degree> gens;
  for (const GradedModule* p : parts) {
    if (!p->ring.same_ring(ring)) throw RingMismatch("direct sum across different rings");
    gens.insert(gens.end(), p->gens.begin(), p->gens.end());
    out.gen_offset.push_back(static_cast<Eigen::Index>(gens.size()));
  }
  std::vector<std::vector<Poly>> cols;
  for (size_t k = 0; k < parts.size(); ++k)
    for (const auto& col : parts[k]->rel_cols) {
      std::vector<Poly> full(gens.size(), Poly::zero(nv));
      for (size_t j = 0; j < col.size(); ++j)
        full[static_cast<size_t>(out.gen_offset[k]) + j] = col[j];
      cols.push_back(std::move(full));
    }
  out.module = GradedModule::make(ring, std::move(gens), std::move(cols), std::move(name));
  return out;
}

}  // namespace gralg
