// Grading data: degrees in Q^k, weight functionals, pointedness, monomial
// and cone-degree enumeration under a weight bound.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gralg/errors.hpp"
#include "gralg/int_mat.hpp"

namespace gralg {

using Degree = std::vector<Rat>;  // length = signature dim
using Exp = std::vector<long>;    // length = number of variables

Degree deg_add(const Degree& a, const Degree& b);
Degree deg_sub(const Degree& a, const Degree& b);
Degree deg_scale(long n, const Degree& a);
Degree deg_zero(int dim);
std::string deg_str(const Degree& d);

struct DegreeLess {
  bool operator()(const Degree& a, const Degree& b) const;  // lexicographic
};

long rat_floor(const Rat& q);

// Variable degrees plus a weight functional certifying pointedness.
struct GradingSignature {
  int dim = 1;
  std::vector<Rat> weight;              // functional on Q^dim
  std::vector<Degree> gen_degrees;      // one per variable
  std::vector<std::string> var_names;   // same length

  int nvars() const { return static_cast<int>(gen_degrees.size()); }
  Rat weight_of(const Degree& d) const;
  Degree monomial_degree(const Exp& e) const;
  bool operator==(const GradingSignature& o) const {
    return dim == o.dim && weight == o.weight && gen_degrees == o.gen_degrees;
  }
};

struct PointednessCertificate {
  std::vector<Rat> gen_weights;  // strictly positive, one per variable
};

// Throws NotPointed unless every variable degree has positive weight.
PointednessCertificate validate(const GradingSignature& sig);

// All exponent vectors of the given degree, descending lexicographic order.
std::vector<Exp> monomials_of_degree(const GradingSignature& sig, const Degree& g);

// Distinct N-linear combinations of generator degrees with weight <= wmax,
// sorted by weight then lexicographically.
std::vector<Degree> cone_degrees(const GradingSignature& sig, const Rat& wmax);

// Sorted weight-then-lex, deduplicated.
std::vector<Degree> sort_degrees(const GradingSignature& sig, std::set<Degree, DegreeLess> degs);

struct WeightWindow {
  Rat lo, hi;
  bool contains(const Rat& w) const { return lo <= w && w <= hi; }
};

}  // namespace gralg
