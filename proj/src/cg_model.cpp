#include "cgybe/cg_model.hpp"

#include <stdexcept>

namespace cgybe {

CGParams CGParams::hecke(int n) {
  const LaurentQP q = LaurentQP::q();
  return {n, q, q - q.inverse()};
}

Endo2<> cg_op(const CGParams& params) {
  return linear_combo(params.alpha, permutation_op(params.n), params.beta, g_op(params.n));
}

Endo2<> cg_twisted_op(int n) {
  const LaurentQP q = LaurentQP::q();
  const LaurentQP q_inv = q.inverse();
  Endo2<> c(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      c.add({j, i}, {i, j}, LaurentQP::monomial(1, 1, i - j));
      for (int k = std::min(i, j); k < std::max(i, j); ++k) {
        const LaurentQP twist = LaurentQP::monomial(eta(i, j, k), 0, i - k);
        c.add({k, i + j - k}, {i, j}, (q - q_inv) * twist);
      }
    }
  }
  return c;
}

Endo2<> cg_inverse(const Endo2<>& r, const LaurentQP& alpha, const LaurentQP& beta) {
  if (r != cg_op({r.rank(), alpha, beta})) {
    throw std::invalid_argument("cg_inverse: operator is not alpha*P + beta*g for the given parameters");
  }
  if (alpha == beta) {
    throw std::domain_error("not invertible: alpha = beta = " + to_string(alpha));
  }
  const LaurentQP det = alpha * (alpha - beta);
  if (!det.is_unit()) {
    throw std::domain_error("alpha*(alpha - beta) = " + to_string(det) +
                            " is not a unit of the Laurent ring, so the inverse has no Laurent coefficients");
  }
  return scale(det.inverse(), r - scale(beta, identity_op<LaurentQP, 2>(r.rank())));
}

}  // namespace cgybe
