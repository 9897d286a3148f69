// Graded polynomial rings Z[x_1..x_n]/I with pointed grading and exact
// degreewise realization of pieces as presented abelian groups.
#pragma once

#include <memory>
#include <optional>

#include "gralg/abelian.hpp"
#include "gralg/polynomial.hpp"

namespace gralg {

struct RingPiece {
  Degree degree;
  std::vector<Exp> basis;  // descending lex
  std::map<Exp, Eigen::Index> index;
  FpAbGroup group;
};

class GradedRing {
 public:
  GradingSignature sig;
  std::vector<Poly> ideal;  // homogeneous generators
  std::vector<Degree> ideal_degrees;

  // Validates pointedness and homogeneity of the ideal generators.
  static GradedRing make(GradingSignature sig, std::vector<Poly> ideal);

  const RingPiece& piece(const Degree& g) const;

  std::map<Degree, Poly, DegreeLess> decompose(const Poly& f) const;
  // nullopt for the zero polynomial; throws NotHomogeneous on mixed terms.
  std::optional<Degree> homogeneous_degree(const Poly& f) const;

  // Coordinates of a polynomial supported on the piece basis.
  IntVec coords(const RingPiece& p, const Poly& f) const;
  // Is the (homogeneous) polynomial zero in the quotient at its degree?
  bool is_zero_in_ring(const Poly& f) const;

  // Multiplication by a homogeneous h as a map piece(g) -> piece(g + deg h).
  AbMap mult_map(const Degree& g, const Poly& h) const;

  bool same_ring(const GradedRing& o) const { return sig == o.sig && ideal == o.ideal; }
  const std::vector<std::string>& names() const { return sig.var_names; }

 private:
  std::shared_ptr<std::map<Degree, RingPiece, DegreeLess>> cache_ =
      std::make_shared<std::map<Degree, RingPiece, DegreeLess>>();
};

}  // namespace gralg
