// Smith normal form over Z with unimodular witnesses, integer kernels and solvers.
#pragma once

#include <optional>

#include "gralg/int_mat.hpp"

namespace gralg {

// U*A*V = D, with tracked two-sided inverses. D is diagonal, entries
// nonnegative, each dividing the next, zeros last.
struct Smith {
  IntMat U, Uinv, D, V, Vinv;
  Eigen::Index rank = 0;
  Int diag(Eigen::Index k) const { return D(k, k); }
};

Smith smith_normal_form(const IntMat& a);

// Basis of { x : a*x = 0 } as columns (a.cols() x k).
IntMat kernel_basis(const IntMat& a);

// Reusable factorization of a for solving a*x = b over Z.
class LinearSolver {
 public:
  explicit LinearSolver(IntMat a) : a_(std::move(a)), s_(smith_normal_form(a_)) {}
  const IntMat& matrix() const { return a_; }
  std::optional<IntVec> solve(const IntVec& b) const;
  std::optional<IntMat> solve_mat(const IntMat& b) const;
  bool contains(const IntVec& b) const { return solve(b).has_value(); }
  bool contains_all(const IntMat& b) const;

 private:
  IntMat a_;
  Smith s_;
};

// Column spans as sublattices of Z^n.
bool lattice_contains(const IntMat& a, const IntMat& b);  // span(b) <= span(a)
bool lattice_equal(const IntMat& a, const IntMat& b);

}  // namespace gralg
