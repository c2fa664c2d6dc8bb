#include "flopdyn/jordan.hpp"

#include <algorithm>
#include <stdexcept>

#include "flopdyn/errors.hpp"
#include "flopdyn/polynomial.hpp"

namespace flopdyn {
namespace {

struct Chain {
  Vector top;
  std::size_t length;
};

std::size_t column_rank(const std::vector<Vector>& cols) {
  if (cols.empty()) return 0;
  return rank(Matrix::from_columns(cols));
}

// Greedy longest-chain construction inside the generalized eigenspace of
// one eigenvalue.
std::vector<Chain> build_chains(const Matrix& nilp, std::size_t multiplicity) {
  const std::size_t n = nilp.rows();
  std::vector<std::vector<Vector>> kernels{{}};  // kernels[k] = basis of ker N^k
  std::vector<std::size_t> dims{0};
  Matrix power = Matrix::identity(n);
  while (dims.back() < multiplicity) {
    power = power * nilp;
    kernels.push_back(nullspace(power));
    dims.push_back(kernels.back().size());
    if (dims.size() > n + 1) throw std::logic_error("jordan_form: kernel chain did not stabilize");
  }
  const std::size_t kmax = dims.size() - 1;

  std::vector<Chain> chains;
  for (std::size_t k = kmax; k >= 1; --k) {
    const std::size_t at_least_k = dims[k] - dims[k - 1];
    const std::size_t at_least_k1 = k < kmax ? dims[k + 1] - dims[k] : 0;
    std::size_t wanted = at_least_k - at_least_k1;

    std::vector<Vector> span = kernels[k - 1];
    for (const auto& ch : chains) {
      Vector v = ch.top;
      for (std::size_t s = 0; s < ch.length - k; ++s) v = nilp * v;
      span.push_back(std::move(v));
    }
    std::size_t current = column_rank(span);
    for (const auto& cand : kernels[k]) {
      if (wanted == 0) break;
      span.push_back(cand);
      const std::size_t r = column_rank(span);
      if (r > current) {
        current = r;
        chains.push_back({cand, k});
        --wanted;
      } else {
        span.pop_back();
      }
    }
    if (wanted != 0) throw std::logic_error("jordan_form: could not complete chain selection");
  }
  return chains;
}

}  // namespace

std::size_t EigenBlocks::algebraic_multiplicity() const {
  std::size_t s = 0;
  for (auto b : block_sizes) s += b;
  return s;
}

Matrix JordanStructure::jordan_matrix() const {
  const std::size_t n = basis.rows();
  Matrix j(n, n);
  std::size_t pos = 0;
  for (const auto& e : eigenvalues) {
    for (auto size : e.block_sizes) {
      for (std::size_t i = 0; i < size; ++i) {
        j(pos + i, pos + i) = e.eigenvalue;
        if (i + 1 < size) j(pos + i, pos + i + 1) = 1;
      }
      pos += size;
    }
  }
  return j;
}

const EigenBlocks* JordanStructure::find(const Rational& lambda) const {
  for (const auto& e : eigenvalues) {
    if (e.eigenvalue == lambda) return &e;
  }
  return nullptr;
}

JordanStructure jordan_form(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("jordan_form: non-square matrix");
  const std::size_t n = a.rows();
  const RootFactorization roots = rational_roots(char_poly(a));
  if (roots.remainder.degree() > 0) {
    throw IrrationalSpectrumError("characteristic polynomial has the irrational factor " +
                                  roots.remainder.to_string());
  }

  JordanStructure out;
  std::vector<Vector> columns;
  for (const auto& root : roots.roots) {
    const Matrix nilp = a - root.value * Matrix::identity(n);
    std::vector<Chain> chains = build_chains(nilp, root.multiplicity);
    std::stable_sort(chains.begin(), chains.end(),
                     [](const Chain& x, const Chain& y) { return x.length > y.length; });
    EigenBlocks blocks{root.value, {}};
    for (const auto& ch : chains) {
      blocks.block_sizes.push_back(ch.length);
      // Columns N^{k-1}v, ..., Nv, v so that A b_j = lambda b_j + b_{j-1}.
      std::vector<Vector> chain_cols(ch.length);
      Vector v = ch.top;
      for (std::size_t i = ch.length; i-- > 0;) {
        chain_cols[i] = v;
        v = nilp * v;
      }
      columns.insert(columns.end(), chain_cols.begin(), chain_cols.end());
    }
    out.eigenvalues.push_back(std::move(blocks));
  }
  out.basis = n ? Matrix::from_columns(columns) : Matrix();
  if (n && inverse(out.basis) * a * out.basis != out.jordan_matrix()) {
    throw std::logic_error("jordan_form: basis failed verification");
  }
  return out;
}

}  // namespace flopdyn
