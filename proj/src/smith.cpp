#include "gralg/smith.hpp"

#include <sstream>
#include <stdexcept>

namespace gralg {

std::string to_string(const IntMat& a) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    os << (i ? "," : "") << "[";
    for (Eigen::Index j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

struct Worker {
  IntMat D, U, Uinv, V, Vinv;

  explicit Worker(const IntMat& a) : D(a) {
    const auto m = a.rows(), n = a.cols();
    U = IntMat::Identity(m, m);
    Uinv = IntMat::Identity(m, m);
    V = IntMat::Identity(n, n);
    Vinv = IntMat::Identity(n, n);
  }

  void row_op(Eigen::Index i, Eigen::Index t, const Int& q) {  // row i -= q*row t
    D.row(i) -= q * D.row(t);
    U.row(i) -= q * U.row(t);
    Uinv.col(t) += q * Uinv.col(i);
  }
  void col_op(Eigen::Index j, Eigen::Index t, const Int& q) {  // col j -= q*col t
    D.col(j) -= q * D.col(t);
    V.col(j) -= q * V.col(t);
    Vinv.row(t) += q * Vinv.row(j);
  }
  void swap_rows(Eigen::Index i, Eigen::Index t) {
    if (i == t) return;
    D.row(i).swap(D.row(t));
    U.row(i).swap(U.row(t));
    Uinv.col(i).swap(Uinv.col(t));
  }
  void swap_cols(Eigen::Index j, Eigen::Index t) {
    if (j == t) return;
    D.col(j).swap(D.col(t));
    V.col(j).swap(V.col(t));
    Vinv.row(j).swap(Vinv.row(t));
  }
  void negate_row(Eigen::Index i) {
    D.row(i) = -D.row(i);
    U.row(i) = -U.row(i);
    Uinv.col(i) = -Uinv.col(i);
  }

  // Smallest |value| in the trailing block, ties by lowest (row, col).
  bool find_pivot(Eigen::Index t, Eigen::Index& pi, Eigen::Index& pj) const {
    bool found = false;
    Int best;
    for (Eigen::Index i = t; i < D.rows(); ++i)
      for (Eigen::Index j = t; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Int v = abs(D(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  Eigen::Index diagonalize() {
    const auto m = D.rows(), n = D.cols();
    Eigen::Index t = 0;
    while (t < m && t < n) {
      Eigen::Index pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool again = false;
        for (Eigen::Index i = t + 1; i < m; ++i) {
          if (D(i, t) == 0) continue;
          Int q = D(i, t) / D(t, t);
          row_op(i, t, q);
          if (D(i, t) != 0) {
            swap_rows(i, t);
            again = true;
          }
        }
        if (again) continue;
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (D(t, j) == 0) continue;
          Int q = D(t, j) / D(t, t);
          col_op(j, t, q);
          if (D(t, j) != 0) {
            swap_cols(j, t);
            again = true;
          }
        }
        if (!again) break;
      }
      ++t;
    }
    return t;
  }
};

}  // namespace

Smith smith_normal_form(const IntMat& a) {
  Worker w(a);
  Eigen::Index rank = w.diagonalize();
  // Enforce the divisibility chain, re-diagonalizing after each coupling.
  for (;;) {
    bool fixed = false;
    for (Eigen::Index i = 0; i + 1 < rank; ++i) {
      if (w.D(i + 1, i + 1) % w.D(i, i) == 0) continue;
      w.col_op(i, i + 1, Int(-1));  // col i += col i+1
      rank = w.diagonalize();
      fixed = true;
      break;
    }
    if (!fixed) break;
  }
  for (Eigen::Index i = 0; i < rank; ++i)
    if (w.D(i, i) < 0) w.negate_row(i);
  Smith s;
  s.U = std::move(w.U);
  s.Uinv = std::move(w.Uinv);
  s.D = std::move(w.D);
  s.V = std::move(w.V);
  s.Vinv = std::move(w.Vinv);
  s.rank = rank;
  return s;
}

IntMat kernel_basis(const IntMat& a) {
  Smith s = smith_normal_form(a);
  return s.V.rightCols(a.cols() - s.rank);
}

std::optional<IntVec> LinearSolver::solve(const IntVec& b) const {
  if (b.size() != a_.rows()) throw std::invalid_argument("solve: size mismatch");
  IntVec y = s_.U * b;
  IntVec x = IntVec::Zero(a_.cols());
  for (Eigen::Index k = 0; k < s_.rank; ++k) {
    if (y(k) % s_.diag(k) != 0) return std::nullopt;
    x(k) = y(k) / s_.diag(k);
  }
  for (Eigen::Index k = s_.rank; k < y.size(); ++k)
    if (y(k) != 0) return std::nullopt;
  return IntVec(s_.V * x);
}

std::optional<IntMat> LinearSolver::solve_mat(const IntMat& b) const {
  IntMat x(a_.cols(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    auto xj = solve(b.col(j));
    if (!xj) return std::nullopt;
    x.col(j) = *xj;
  }
  return x;
}

bool LinearSolver::contains_all(const IntMat& b) const {
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    if (!contains(b.col(j))) return false;
  return true;
}

bool lattice_contains(const IntMat& a, const IntMat& b) {
  return LinearSolver(a).contains_all(b);
}

bool lattice_equal(const IntMat& a, const IntMat& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

}  // namespace gralg
