#pragma once

#include <cstddef>
#include <vector>

#include "flopdyn/matrix.hpp"
#include "flopdyn/rational.hpp"

namespace flopdyn {

struct EigenBlocks {
  Rational eigenvalue;
  std::vector<std::size_t> block_sizes;  // descending
  std::size_t algebraic_multiplicity() const;
};

// Rational Jordan structure: B^{-1} A B = J with J upper bidiagonal.
struct JordanStructure {
  std::vector<EigenBlocks> eigenvalues;  // eigenvalues in descending order
  Matrix basis;                          // generalized eigenvector columns

  // Assembles J in the same column order as `basis`.
  Matrix jordan_matrix() const;
  const EigenBlocks* find(const Rational& lambda) const;
};

// Throws IrrationalSpectrumError when char_poly(a) does not split over Q.
JordanStructure jordan_form(const Matrix& a);

}  // namespace flopdyn
