#include "gralg/graded_ring.hpp"

namespace gralg {

GradedRing GradedRing::make(GradingSignature sig, std::vector<Poly> ideal) {
  validate(sig);
  GradedRing r;
  r.sig = std::move(sig);
  for (Poly& f : ideal) {
    if (f.nvars != r.sig.nvars()) throw ValidationError("ideal generator has wrong variable count");
    if (f.is_zero()) continue;
    auto d = r.homogeneous_degree(f);
    r.ideal.push_back(std::move(f));
    r.ideal_degrees.push_back(*d);
  }
  return r;
}

const RingPiece& GradedRing::piece(const Degree& g) const {
  auto it = cache_->find(g);
  if (it != cache_->end()) return it->second;
  RingPiece p;
  p.degree = g;
  p.basis = monomials_of_degree(sig, g);
  for (size_t i = 0; i < p.basis.size(); ++i)
    p.index.emplace(p.basis[i], static_cast<Eigen::Index>(i));
  std::vector<IntVec> cols;
  for (size_t t = 0; t < ideal.size(); ++t) {
    for (const Exp& m : monomials_of_degree(sig, deg_sub(g, ideal_degrees[t]))) {
      Poly prod = Poly::monomial(sig.nvars(), m, 1) * ideal[t];
      IntVec col = IntVec::Zero(static_cast<Eigen::Index>(p.basis.size()));
      for (const auto& [e, c] : prod.terms) col(p.index.at(e)) += c;
      cols.push_back(std::move(col));
    }
  }
  IntMat rels(static_cast<Eigen::Index>(p.basis.size()), static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) rels.col(static_cast<Eigen::Index>(j)) = cols[j];
  p.group = FpAbGroup::from_presentation(static_cast<Eigen::Index>(p.basis.size()), std::move(rels));
  return cache_->emplace(g, std::move(p)).first->second;
}

std::map<Degree, Poly, DegreeLess> GradedRing::decompose(const Poly& f) const {
  std::map<Degree, Poly, DegreeLess> out;
  for (const auto& [e, c] : f.terms) {
    Degree d = sig.monomial_degree(e);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Poly::zero(f.nvars)).first;
    it->second.add_term(e, c);
  }
  return out;
}

std::optional<Degree> GradedRing::homogeneous_degree(const Poly& f) const {
  auto parts = decompose(f);
  if (parts.empty()) return std::nullopt;
  if (parts.size() > 1)
    throw NotHomogeneous("'" + f.str(names()) + "' mixes " + std::to_string(parts.size()) +
                         " degrees");
  return parts.begin()->first;
}

IntVec GradedRing::coords(const RingPiece& p, const Poly& f) const {
  IntVec v = IntVec::Zero(static_cast<Eigen::Index>(p.basis.size()));
  for (const auto& [e, c] : f.terms) {
    auto it = p.index.find(e);
    if (it == p.index.end())
      throw NotHomogeneous("'" + f.str(names()) + "' is not supported in degree " +
                           deg_str(p.degree));
    v(it->second) += c;
  }
  return v;
}

bool GradedRing::is_zero_in_ring(const Poly& f) const {
  if (f.is_zero()) return true;
  auto d = homogeneous_degree(f);
  const RingPiece& p = piece(*d);
  return p.group.elem_is_zero(coords(p, f));
}

AbMap GradedRing::mult_map(const Degree& g, const Poly& h) const {
  auto dh = homogeneous_degree(h);
  const RingPiece& from = piece(g);
  Degree tgt_deg = dh ? deg_add(g, *dh) : g;
  const RingPiece& to = piece(tgt_deg);
  IntMat m = IntMat::Zero(to.group.ngens, from.group.ngens);
  for (size_t j = 0; j < from.basis.size(); ++j)
    m.col(static_cast<Eigen::Index>(j)) = coords(to, Poly::monomial(sig.nvars(), from.basis[j], 1) * h);
  return AbMap::checked(from.group, to.group, std::move(m));
}

}  // namespace gralg
