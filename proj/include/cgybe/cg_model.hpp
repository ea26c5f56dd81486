#pragma once

#include <algorithm>

#include "cgybe/laurent.hpp"
#include "cgybe/tensor_op.hpp"

namespace cgybe {

/// Shift coefficient of g: 1 if i <= k < j, -1 if j <= k < i, 0 otherwise.
/// Defined on all of Z^3.
constexpr int eta(int i, int j, int k) {
  if (i <= k && k < j) return 1;
  if (j <= k && k < i) return -1;
  return 0;
}

/// Unit step: 1 for x >= 0, 0 for x < 0.
constexpr int step_u(int x) { return x >= 0 ? 1 : 0; }

constexpr int kron_delta(int x) { return x == 0 ? 1 : 0; }

/// The flip e_i ⊗ e_j -> e_j ⊗ e_i.
template <class Scalar = LaurentQP>
Endo2<Scalar> permutation_op(int n) {
  Endo2<Scalar> perm(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) perm.add({j, i}, {i, j}, Scalar(1));
  }
  return perm;
}

/// g(e_i ⊗ e_j) = sum_k eta(i,j,k) e_k ⊗ e_{i+j-k}. Only k in
/// [min(i,j), max(i,j)) contribute, which keeps i+j-k inside 1..n.
template <class Scalar = LaurentQP>
Endo2<Scalar> g_op(int n) {
  Endo2<Scalar> g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = std::min(i, j); k < std::max(i, j); ++k) g.add({k, i + j - k}, {i, j}, Scalar(eta(i, j, k)));
    }
  }
  return g;
}

struct CGParams {
  int n = 1;
  LaurentQP alpha;
  LaurentQP beta;

  /// alpha = q, beta = q - q^-1: the Hecke normalization.
  static CGParams hecke(int n);
};

/// alpha·P + beta·g.
Endo2<> cg_op(const CGParams& params);

/// c(e_i ⊗ e_j) = q p^{i-j} e_j ⊗ e_i + sum_k (q - q^-1) p^{i-k} eta(i,j,k) e_k ⊗ e_{i+j-k},
/// with q and p symbolic.
Endo2<> cg_twisted_op(int n);

/// Closed-form inverse (R - beta·I)·(alpha(alpha - beta))^-1 of R = alpha·P + beta·g.
///
/// Throws std::invalid_argument when R is not alpha·P + beta·g, and
/// std::domain_error when alpha = beta (R is singular) or when alpha(alpha - beta)
/// is not a unit of the Laurent ring.
Endo2<> cg_inverse(const Endo2<>& r, const LaurentQP& alpha, const LaurentQP& beta);

}  // namespace cgybe
