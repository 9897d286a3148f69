// Tensor products of graded modules: degreewise Day convolution assembly and
// the presentation-level graded tensor product.
#pragma once

#include "gralg/graded_module.hpp"

namespace gralg {

struct DayBlock {
  Degree s, t;                 // s + t = degree of the piece
  Eigen::Index offset = 0;     // start in the assembled presentation
  Eigen::Index mdim = 0, ndim = 0;
};

struct DayTensorPiece {
  Degree degree;
  std::vector<DayBlock> blocks;
  FpAbGroup group;
};

// Degree-g piece of M (x)_R N assembled from finitely many (s, t) pairs.
DayTensorPiece day_tensor_piece(const GradedModule& m, const GradedModule& n, const Degree& g);

// Generators-and-relations tensor product M (x)_R N as a graded module.
GradedModule tensor_module(const GradedModule& m, const GradedModule& n);

}  // namespace gralg
