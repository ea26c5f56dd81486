#pragma once

// Seeded generators and brute-force oracles shared by the unit tests. Nothing
// here calls into the sparse kernels it is used to check.

#include <random>
#include <vector>

#include "cgybe/cg_model.hpp"
#include "cgybe/laurent.hpp"
#include "cgybe/rational.hpp"
#include "cgybe/tensor_op.hpp"

namespace cgybe::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int bound = 9) {
  const int num = uniform_int(-bound, bound);
  const int den = uniform_int(1, bound);
  return Rational(num) / den;
}

inline Rational random_nonzero_rational(int bound = 9) {
  Rational r;
  do {
    r = random_rational(bound);
  } while (r.is_zero());
  return r;
}

inline LaurentQP random_laurent(int max_terms = 4, int max_exp = 3) {
  std::vector<LaurentQP::Term> terms;
  const int count = uniform_int(0, max_terms);
  for (int t = 0; t < count; ++t) {
    terms.push_back({uniform_int(-max_exp, max_exp), uniform_int(-max_exp, max_exp), random_rational()});
  }
  return LaurentQP::from_terms(std::move(terms));
}

template <class S>
S random_scalar();

template <>
inline Rational random_scalar<Rational>() {
  return random_rational();
}

template <>
inline LaurentQP random_scalar<LaurentQP>() {
  return random_laurent(2, 2);
}

/// Sparse operator with roughly `density` of its entries filled.
template <class S, int A>
TensorOp<S, A> random_op(int n, double density = 0.3) {
  TensorOp<S, A> f(n);
  std::bernoulli_distribution fill(density);
  for (std::size_t x = 0; x < f.dim(); ++x) {
    for (std::size_t y = 0; y < f.dim(); ++y) {
      if (fill(rng())) f.add_flat(y, x, random_scalar<S>());
    }
  }
  return f;
}

/// The Cremmer-Gervais matrix written out case by case:
/// i = j, i < j (sum over i <= k < j) and i > j (sum over j < k < i).
/// With twisted = false every power of p is dropped (the p = 1 display).
inline Endo2<> case_display(int n, bool twisted) {
  const LaurentQP q = LaurentQP::q();
  const LaurentQP qi = q.inverse();
  auto p_pow = [twisted](int e) { return twisted ? LaurentQP::monomial(1, 0, e) : LaurentQP(1); };
  Endo2<> c(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        c.add({j, i}, {i, j}, q);
      } else if (i < j) {
        c.add({j, i}, {i, j}, q * p_pow(i - j));
        for (int k = i; k < j; ++k) c.add({k, i + j - k}, {i, j}, (q - qi) * p_pow(i - k));
      } else {
        c.add({j, i}, {i, j}, qi * p_pow(i - j));
        for (int k = j + 1; k < i; ++k) c.add({k, i + j - k}, {i, j}, (qi - q) * p_pow(i - k));
      }
    }
  }
  return c;
}

}  // namespace cgybe::testing
