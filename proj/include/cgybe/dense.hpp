#pragma once

// Dense Eigen views of sparse tensor operators, for numeric export and for
// cross-checking the sparse kernels against plain matrix arithmetic.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "cgybe/rational.hpp"
#include "cgybe/tensor_op.hpp"

namespace cgybe {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Standard matrix of f: entry (row = flattened output, col = flattened input).
template <class S, int A>
DenseMatrix<S> to_dense(const TensorOp<S, A>& f) {
  const auto dim = static_cast<Eigen::Index>(f.dim());
  DenseMatrix<S> m = DenseMatrix<S>::Zero(dim, dim);
  for (std::size_t x = 0; x < f.dim(); ++x) {
    for (const auto& [y, c] : f.column(x)) m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = c;
  }
  return m;
}

template <class S, int A>
TensorOp<S, A> from_dense(const DenseMatrix<S>& m, int n) {
  TensorOp<S, A> f(n);
  if (static_cast<std::size_t>(m.rows()) != f.dim() || static_cast<std::size_t>(m.cols()) != f.dim()) {
    throw std::invalid_argument("dense matrix shape does not match operator dimension");
  }
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    for (Eigen::Index row = 0; row < m.rows(); ++row) {
      f.add_flat(static_cast<std::size_t>(row), static_cast<std::size_t>(col), m(row, col));
    }
  }
  return f;
}

}  // namespace cgybe
