#include "cgybe/laurent.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace cgybe {

namespace {

bool exp_less(const LaurentQP::Term& a, const LaurentQP::Term& b) {
  return std::tie(a.q_exp, a.p_exp) < std::tie(b.q_exp, b.p_exp);
}

// Sorts, merges equal exponents and drops zeros.
void canonicalize(std::vector<LaurentQP::Term>& terms) {
  std::sort(terms.begin(), terms.end(), exp_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    LaurentQP::Term merged = terms[i];
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].q_exp == merged.q_exp && terms[j].p_exp == merged.p_exp; ++j) {
      merged.coeff += terms[j].coeff;
    }
    if (!merged.coeff.is_zero()) terms[out++] = std::move(merged);
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists, with rhs scaled by sign.
std::vector<LaurentQP::Term> merge(std::span<const LaurentQP::Term> lhs,
                                   std::span<const LaurentQP::Term> rhs, int sign) {
  std::vector<LaurentQP::Term> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < lhs.size() && exp_less(lhs[i], rhs[j]))) {
      out.push_back(lhs[i++]);
    } else if (i == lhs.size() || exp_less(rhs[j], lhs[i])) {
      out.push_back(rhs[j++]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = sign < 0 ? lhs[i].coeff - rhs[j].coeff : lhs[i].coeff + rhs[j].coeff;
      if (!c.is_zero()) out.push_back({lhs[i].q_exp, lhs[i].p_exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentQP::LaurentQP(int constant) : LaurentQP(Rational(constant)) {}

LaurentQP::LaurentQP(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back({0, 0, constant});
}

LaurentQP LaurentQP::monomial(const Rational& coeff, int q_exp, int p_exp) {
  LaurentQP x;
  if (!coeff.is_zero()) x.terms_.push_back({q_exp, p_exp, coeff});
  return x;
}

LaurentQP LaurentQP::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  LaurentQP x;
  x.terms_ = std::move(terms);
  return x;
}

LaurentQP LaurentQP::inverse() const {
  if (!is_unit()) {
    throw std::domain_error("'" + to_string(*this) + "' is not a unit of the Laurent ring");
  }
  const Term& t = terms_.front();
  return monomial(Rational(1) / t.coeff, -t.q_exp, -t.p_exp);
}

LaurentQP LaurentQP::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentQP result(1);
  LaurentQP base = *this;
  for (unsigned k = static_cast<unsigned>(e); k != 0; k >>= 1) {
    if (k & 1u) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

Rational LaurentQP::coeff(int q_exp, int p_exp) const {
  const Term key{q_exp, p_exp, {}};
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), key, exp_less);
  if (it != terms_.end() && it->q_exp == q_exp && it->p_exp == p_exp) return it->coeff;
  return 0;
}

Rational LaurentQP::eval(const Rational& qval, const Rational& pval) const {
  if (qval.is_zero() || pval.is_zero()) {
    throw std::domain_error("q and p must be nonzero to evaluate a Laurent polynomial");
  }
  Rational sum = 0;
  for (const Term& t : terms_) sum += t.coeff * cgybe::pow(qval, t.q_exp) * cgybe::pow(pval, t.p_exp);
  return sum;
}

LaurentQP LaurentQP::at_p_one() const {
  std::vector<Term> collapsed = terms_;
  for (Term& t : collapsed) t.p_exp = 0;
  return from_terms(std::move(collapsed));
}

LaurentQP& LaurentQP::operator+=(const LaurentQP& rhs) {
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

LaurentQP& LaurentQP::operator-=(const LaurentQP& rhs) {
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

LaurentQP& LaurentQP::operator*=(const LaurentQP& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentQP operator*(const LaurentQP& lhs, const LaurentQP& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<LaurentQP::Term> product;
  product.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      product.push_back({a.q_exp + b.q_exp, a.p_exp + b.p_exp, a.coeff * b.coeff});
    }
  }
  return LaurentQP::from_terms(std::move(product));
}

LaurentQP operator-(LaurentQP x) {
  for (auto& t : x.terms_) t.coeff = -t.coeff;
  return x;
}

namespace {

struct Notation {
  std::string (*power)(const char* symbol, int exponent);
  std::string (*scalar)(const Rational& magnitude);
  const char* times;
};

// Terms are printed from highest to lowest q exponent so "q - q^-1" reads
// the way it is usually written.
std::string render(const LaurentQP& x, const Notation& notation) {
  if (x.is_zero()) return "0";
  std::string out;
  const auto terms = x.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const bool negative = it->coeff < 0;
    const Rational magnitude = negative ? Rational(-it->coeff) : it->coeff;
    if (it == terms.rbegin()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }

    std::string symbols;
    if (it->q_exp != 0) symbols += notation.power("q", it->q_exp);
    if (it->p_exp != 0) {
      if (!symbols.empty()) symbols += notation.times;
      symbols += notation.power("p", it->p_exp);
    }
    if (symbols.empty()) {
      out += notation.scalar(magnitude);
    } else if (magnitude == 1) {
      out += symbols;
    } else {
      out += notation.scalar(magnitude) + notation.times + symbols;
    }
  }
  return out;
}

constexpr Notation kPlain{
    [](const char* sym, int e) {
      return e == 1 ? std::string(sym) : std::string(sym) + "^" + std::to_string(e);
    },
    [](const Rational& c) { return to_compact_string(c); },
    "*",
};

constexpr Notation kLatex{
    [](const char* sym, int e) {
      return e == 1 ? std::string(sym) : std::string(sym) + "^{" + std::to_string(e) + "}";
    },
    [](const Rational& c) {
      if (denominator_of(c) == 1) return numerator_of(c).str();
      return "\\frac{" + numerator_of(c).str() + "}{" + denominator_of(c).str() + "}";
    },
    " ",
};

}  // namespace

std::string to_string(const LaurentQP& x) { return render(x, kPlain); }

std::string to_latex(const LaurentQP& x) { return render(x, kLatex); }

}  // namespace cgybe
