#include "cgybe/serialize.hpp"

#include "cgybe/dense.hpp"

#include <sstream>
#include <stdexcept>

namespace cgybe {

Json laurent_to_json(const LaurentQP& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) terms.push_back({{"q", t.q_exp}, {"p", t.p_exp}, {"coeff", to_fraction_string(t.coeff)}});
  return terms;
}

LaurentQP laurent_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent polynomial JSON must be an array of terms");
  std::vector<LaurentQP::Term> terms;
  try {
    for (const auto& t : j) {
      terms.push_back({t.at("q").get<int>(), t.at("p").get<int>(), parse_rational(t.at("coeff").get<std::string>())});
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed Laurent term: ") + e.what());
  }
  return LaurentQP::from_terms(std::move(terms));
}

template <int A>
Json op_to_json(const TensorOp<LaurentQP, A>& f) {
  Json entries = Json::array();
  for (std::size_t x = 0; x < f.dim(); ++x) {
    for (const auto& [y, c] : f.column(x)) {
      entries.push_back({{"out", f.unflatten(y)}, {"in", f.unflatten(x)}, {"coeff", laurent_to_json(c)}});
    }
  }
  return {{"n", f.rank()}, {"arity", A}, {"entries", std::move(entries)}};
}

template <int A>
TensorOp<LaurentQP, A> op_from_json(const Json& j) {
  try {
    if (j.at("arity").get<int>() != A) {
      throw std::invalid_argument("expected an operator of arity " + std::to_string(A));
    }
    TensorOp<LaurentQP, A> f(j.at("n").get<int>());
    for (const auto& e : j.at("entries")) {
      f.add(e.at("out").get<BasisTuple<A>>(), e.at("in").get<BasisTuple<A>>(), laurent_from_json(e.at("coeff")));
    }
    return f;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed operator JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed operator JSON: ") + e.what());
  }
}

namespace {

// Row r holds the image of the r-th input basis tuple, i.e. the transpose of
// the standard matrix.
std::vector<std::vector<std::string>> numeric_rows(const DenseMatrix<Rational>& m) {
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index in = 0; in < m.cols(); ++in) {
    auto& row = rows[static_cast<std::size_t>(in)];
    row.reserve(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index out = 0; out < m.rows(); ++out) row.push_back(to_compact_string(m(out, in)));
  }
  return rows;
}

}  // namespace

template <int A>
std::string to_csv(const TensorOp<Rational, A>& f) {
  std::ostringstream os;
  for (const auto& row : numeric_rows(to_dense(f))) {
    for (std::size_t y = 0; y < row.size(); ++y) os << (y == 0 ? "" : ",") << row[y];
    os << '\n';
  }
  return os.str();
}

template <int A>
Json numeric_to_json(const TensorOp<Rational, A>& f, const Rational& qval, const Rational& pval) {
  return {{"n", f.rank()},
          {"arity", A},
          {"q", to_compact_string(qval)},
          {"p", to_compact_string(pval)},
          {"rows", numeric_rows(to_dense(f))}};
}

namespace {

template <int A>
std::string basis_label(const BasisTuple<A>& t) {
  std::string label;
  for (int a = 0; a < A; ++a) {
    if (a != 0) label += " \\otimes ";
    label += "e_{" + std::to_string(t[a]) + "}";
  }
  return label;
}

std::string latex_scalar(const LaurentQP& x) { return to_latex(x); }
std::string latex_scalar(const Rational& x) { return to_latex(LaurentQP(x)); }

}  // namespace

template <class S, int A>
std::string to_latex(const TensorOp<S, A>& f) {
  std::ostringstream os;
  os << "\\begin{array}{c|" << std::string(f.dim(), 'c') << "}\n";
  for (std::size_t y = 0; y < f.dim(); ++y) os << " & " << basis_label<A>(f.unflatten(y));
  os << " \\\\\n\\hline\n";
  for (std::size_t x = 0; x < f.dim(); ++x) {
    os << basis_label<A>(f.unflatten(x));
    const auto& col = f.column(x);
    for (std::size_t y = 0; y < f.dim(); ++y) {
      const auto it = col.find(y);
      os << " & " << (it == col.end() ? std::string("0") : latex_scalar(it->second));
    }
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

Json report_to_json(const CheckReport& r) {
  Json witness = nullptr;
  if (r.witness) {
    witness = {{"input", r.witness->input},
               {"output", r.witness->output},
               {"difference", laurent_to_json(r.witness->difference)}};
  }
  Json j = {{"name", r.name}, {"passed", r.passed}, {"witness", witness}, {"elapsed_ms", r.elapsed.count()}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json report_to_json(const OracleReport& r) {
  Json j = {{"name", r.name},
            {"passed", r.passed},
            {"window", {{"lo", r.window.lo}, {"hi", r.window.hi}, {"arity", r.window.arity}}},
            {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)},
            {"elapsed_ms", r.elapsed.count()}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

template Json op_to_json<2>(const TensorOp<LaurentQP, 2>&);
template Json op_to_json<3>(const TensorOp<LaurentQP, 3>&);
template TensorOp<LaurentQP, 2> op_from_json<2>(const Json&);
template TensorOp<LaurentQP, 3> op_from_json<3>(const Json&);
template std::string to_csv<2>(const TensorOp<Rational, 2>&);
template std::string to_csv<3>(const TensorOp<Rational, 3>&);
template Json numeric_to_json<2>(const TensorOp<Rational, 2>&, const Rational&, const Rational&);
template Json numeric_to_json<3>(const TensorOp<Rational, 3>&, const Rational&, const Rational&);
template std::string to_latex<LaurentQP, 2>(const TensorOp<LaurentQP, 2>&);
template std::string to_latex<LaurentQP, 3>(const TensorOp<LaurentQP, 3>&);
template std::string to_latex<Rational, 2>(const TensorOp<Rational, 2>&);
template std::string to_latex<Rational, 3>(const TensorOp<Rational, 3>&);

}  // namespace cgybe
