#pragma once

#include <span>
#include <string>
#include <vector>

#include "cgybe/rational.hpp"

namespace cgybe {

/// Laurent polynomial in two commuting invertible symbols q and p with
/// rational coefficients: sum of c_{a,b} q^a p^b over a finite support.
///
/// Terms are stored sorted by (q exponent, p exponent) and no stored
/// coefficient is ever zero, so structural equality is ring equality.
class LaurentQP {
 public:
  struct Term {
    int q_exp = 0;
    int p_exp = 0;
    Rational coeff;

    bool operator==(const Term&) const = default;
  };

  LaurentQP() = default;
  LaurentQP(int constant);             // NOLINT(google-explicit-constructor)
  LaurentQP(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static LaurentQP monomial(const Rational& coeff, int q_exp, int p_exp);
  static LaurentQP q() { return monomial(1, 1, 0); }
  static LaurentQP p() { return monomial(1, 0, 1); }

  /// Builds a polynomial from arbitrary terms: duplicates are merged and zero
  /// coefficients dropped.
  static LaurentQP from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Units of the Laurent ring are exactly the nonzero single-term elements.
  bool is_unit() const { return terms_.size() == 1; }

  /// Inverse of a unit; throws std::domain_error otherwise.
  LaurentQP inverse() const;

  /// x^e; negative e requires a unit.
  LaurentQP pow(int e) const;

  Rational coeff(int q_exp, int p_exp) const;

  /// Exact value at q = qval, p = pval. Both must be nonzero.
  Rational eval(const Rational& qval, const Rational& pval) const;

  /// Substitutes p = 1, keeping q symbolic.
  LaurentQP at_p_one() const;

  LaurentQP& operator+=(const LaurentQP& rhs);
  LaurentQP& operator-=(const LaurentQP& rhs);
  LaurentQP& operator*=(const LaurentQP& rhs);

  friend LaurentQP operator+(LaurentQP lhs, const LaurentQP& rhs) { return lhs += rhs; }
  friend LaurentQP operator-(LaurentQP lhs, const LaurentQP& rhs) { return lhs -= rhs; }
  friend LaurentQP operator*(const LaurentQP& lhs, const LaurentQP& rhs);
  friend LaurentQP operator-(LaurentQP x);

  bool operator==(const LaurentQP&) const = default;

 private:
  std::vector<Term> terms_;
};

inline bool is_zero(const LaurentQP& x) { return x.is_zero(); }

/// Human-readable form such as "q - q^-1" or "1/2*q*p^-2 + 3".
std::string to_string(const LaurentQP& x);

/// LaTeX form such as "q - q^{-1}".
std::string to_latex(const LaurentQP& x);

/// Lifts a rational constant; identity on LaurentQP. Lets scalar-generic code
/// report differences in a single coefficient type.
inline LaurentQP to_laurent(const Rational& x) { return LaurentQP(x); }
inline const LaurentQP& to_laurent(const LaurentQP& x) { return x; }

}  // namespace cgybe
