// Multivariate integer polynomials with exact coefficients.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "gralg/grading.hpp"

namespace gralg {

struct Poly {
  int nvars = 0;
  std::map<Exp, Int> terms;  // zero coefficients never stored

  static Poly zero(int nvars) { return Poly{nvars, {}}; }
  static Poly constant(int nvars, const Int& c);
  static Poly variable(int nvars, int i);
  static Poly monomial(int nvars, Exp e, const Int& c);

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Poly& o) const { return nvars == o.nvars && terms == o.terms; }

  Poly& add_term(const Exp& e, const Int& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly pow(long n) const;

  std::string str(const std::vector<std::string>& names) const;
};

Poly parse_poly(const std::string& src, const std::vector<std::string>& names);

}  // namespace gralg
