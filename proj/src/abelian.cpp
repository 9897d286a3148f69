#include "gralg/abelian.hpp"

#include <sstream>

namespace gralg {

namespace {
IntMat normalized_rels(Eigen::Index ngens, IntMat rels) {
  if (rels.rows() == 0 && rels.cols() == 0) return IntMat(ngens, 0);
  if (rels.rows() != ngens) throw std::invalid_argument("relations have wrong height");
  return rels;
}
}  // namespace

FpAbGroup FpAbGroup::from_presentation(Eigen::Index ngens, IntMat rels) {
  FpAbGroup g;
  g.ngens = ngens;
  g.rels = normalized_rels(ngens, std::move(rels));
  Smith s = smith_normal_form(g.rels);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < s.rank; ++k)
    if (s.diag(k) >= 2) {
      keep.push_back(k);
      g.torsion.push_back(s.diag(k));
    }
  for (Eigen::Index k = s.rank; k < ngens; ++k) keep.push_back(k);
  g.free_rank = ngens - s.rank;
  g.can_of_gen = IntMat(static_cast<Eigen::Index>(keep.size()), ngens);
  g.gen_of_can = IntMat(ngens, static_cast<Eigen::Index>(keep.size()));
  for (size_t r = 0; r < keep.size(); ++r) {
    g.can_of_gen.row(static_cast<Eigen::Index>(r)) = s.U.row(keep[r]);
    g.gen_of_can.col(static_cast<Eigen::Index>(r)) = s.Uinv.col(keep[r]);
  }
  return g;
}

FpAbGroup FpAbGroup::from_invariants(long rank, std::vector<Int> torsion) {
  Eigen::Index t = static_cast<Eigen::Index>(torsion.size());
  IntMat rels = IntMat::Zero(rank + t, t);
  for (Eigen::Index k = 0; k < t; ++k) rels(k, k) = torsion[k];
  return from_presentation(rank + t, rels);
}

FpAbGroup FpAbGroup::cyclic(const Int& n) {
  if (n == 0) return free_group(1);
  Int a = abs(n);
  if (a == 1) return zero();
  return from_invariants(0, {a});
}

Int FpAbGroup::order() const {
  if (free_rank > 0) return 0;
  Int o = 1;
  for (const Int& d : torsion) o *= d;
  return o;
}

std::string FpAbGroup::invariant_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1)
    os << "Z", first = false;
  else if (free_rank > 1)
    os << "Z^" << free_rank, first = false;
  for (const Int& d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d.get_str();
    first = false;
  }
  return os.str();
}

bool FpAbGroup::elem_is_zero(const IntVec& x) const {
  IntVec y = can_of_gen * x;
  for (size_t k = 0; k < torsion.size(); ++k)
    if (y(static_cast<Eigen::Index>(k)) % torsion[k] != 0) return false;
  for (Eigen::Index k = static_cast<Eigen::Index>(torsion.size()); k < y.size(); ++k)
    if (y(k) != 0) return false;
  return true;
}

IntVec FpAbGroup::reduce(const IntVec& x) const {
  IntVec y = can_of_gen * x;
  for (size_t k = 0; k < torsion.size(); ++k) {
    Int& v = y(static_cast<Eigen::Index>(k));
    v %= torsion[k];
    if (v < 0) v += torsion[k];
  }
  return y;
}

AbMap AbMap::checked(FpAbGroup src, FpAbGroup tgt, IntMat mat) {
  if (mat.rows() != tgt.ngens || mat.cols() != src.ngens)
    throw MapNotWellDefined("matrix shape does not match presentations");
  if (src.rels.cols() > 0) {
    LinearSolver tgt_rels(tgt.rels);
    if (!tgt_rels.contains_all(mat * src.rels))
      throw MapNotWellDefined("source relation not sent into target relation span");
  }
  return unchecked(std::move(src), std::move(tgt), std::move(mat));
}

AbMap AbMap::unchecked(FpAbGroup src, FpAbGroup tgt, IntMat mat) {
  AbMap f;
  f.src = std::move(src);
  f.tgt = std::move(tgt);
  f.mat = std::move(mat);
  return f;
}

AbMap AbMap::identity(const FpAbGroup& g) {
  return unchecked(g, g, IntMat::Identity(g.ngens, g.ngens));
}

AbMap AbMap::zero_map(FpAbGroup src, FpAbGroup tgt) {
  IntMat m = IntMat::Zero(tgt.ngens, src.ngens);
  return unchecked(std::move(src), std::move(tgt), std::move(m));
}

AbMap AbMap::compose_after(const AbMap& inner) const {
  if (inner.tgt.ngens != src.ngens) throw MapNotWellDefined("composition shape mismatch");
  return unchecked(inner.src, tgt, mat * inner.mat);
}

bool AbMap::is_zero_map() const {
  return LinearSolver(tgt.rels).contains_all(mat);
}

bool AbMap::is_surjective() const {
  return FpAbGroup::from_presentation(tgt.ngens, hstack(mat, tgt.rels)).is_zero();
}

bool AbMap::is_injective() const {
  return kernel_subgroup(*this).group.is_zero();
}

SubgroupData presented_subgroup(const IntMat& gens, const IntMat& nulls) {
  IntMat w = kernel_basis(hstack(gens, nulls));
  SubgroupData s;
  s.group = FpAbGroup::from_presentation(gens.cols(), w.topRows(gens.cols()));
  s.gens = gens;
  s.nulls = nulls;
  return s;
}

bool subgroup_leq(const IntMat& a, const IntMat& b, const IntMat& nulls) {
  return lattice_contains(hstack(b, nulls), a);
}

FpAbGroup cokernel(const AbMap& f) {
  return FpAbGroup::from_presentation(f.tgt.ngens, hstack(f.mat, f.tgt.rels));
}

FpAbGroup cokernel_of(Eigen::Index ngens, const IntMat& image_and_rels) {
  return FpAbGroup::from_presentation(ngens, image_and_rels);
}

SubgroupData kernel_subgroup(const AbMap& f) {
  IntMat k = kernel_basis(hstack(f.mat, f.tgt.rels));
  return presented_subgroup(IntMat(k.topRows(f.src.ngens)), f.src.rels);
}

SubgroupData image_subgroup(const AbMap& f) {
  return presented_subgroup(f.mat, f.tgt.rels);
}

HomologyData ab_homology(const AbMap& d_in, const AbMap& d_out) {
  if (d_in.tgt.ngens != d_out.src.ngens)
    throw MapNotWellDefined("homology: differentials do not share the middle group");
  LinearSolver out_rels(d_out.tgt.rels);
  if (!out_rels.contains_all(d_out.mat * d_in.mat))
    throw CompositionNotZero("d o d is nonzero on a generator");
  IntMat k = kernel_basis(hstack(d_out.mat, d_out.tgt.rels));
  HomologyData h;
  h.ambient = d_out.src.ngens;
  h.cycles = k.topRows(h.ambient);
  h.null_lat = hstack(d_in.mat, d_out.src.rels);
  h.H = presented_subgroup(h.cycles, h.null_lat).group;
  return h;
}

AbMap induced_map(const HomologyData& src, const HomologyData& tgt, const IntMat& f_ambient) {
  LinearSolver express(hstack(tgt.cycles, tgt.null_lat));
  IntMat a(tgt.H.ngens, src.H.ngens);
  for (Eigen::Index j = 0; j < src.cycles.cols(); ++j) {
    auto x = express.solve(f_ambient * src.cycles.col(j));
    if (!x) throw MapNotWellDefined("image of a cycle is not a cycle");
    a.col(j) = x->topRows(tgt.H.ngens);
  }
  return AbMap::checked(src.H, tgt.H, std::move(a));
}

HomGroupData hom_group(const FpAbGroup& a, const FpAbGroup& b) {
  const Eigen::Index p = a.rels.cols();
  IntMat ib = IntMat::Identity(b.ngens, b.ngens);
  IntMat constraint = kron(IntMat(a.rels.transpose()), ib);
  IntMat targets = kron(IntMat::Identity(p, p), b.rels);
  IntMat x = kernel_basis(hstack(constraint, targets)).topRows(a.ngens * b.ngens);
  IntMat nulls = kron(IntMat::Identity(a.ngens, a.ngens), b.rels);
  SubgroupData sub = presented_subgroup(x, nulls);
  HomGroupData h;
  h.group = sub.group;
  h.elem_lattice = x;
  h.elem_nulls = nulls;
  IntMat cg = sub.canonical_gens();
  for (Eigen::Index c = 0; c < cg.cols(); ++c) {
    IntMat f(b.ngens, a.ngens);
    for (Eigen::Index j = 0; j < a.ngens; ++j)
      for (Eigen::Index i = 0; i < b.ngens; ++i) f(i, j) = cg(j * b.ngens + i, c);
    h.basis_maps.push_back(AbMap::checked(a, b, std::move(f)));
  }
  return h;
}

}  // namespace gralg
