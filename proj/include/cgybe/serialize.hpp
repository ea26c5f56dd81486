#pragma once

#include <string>

#include "json.hpp"

#include "cgybe/identity_oracle.hpp"
#include "cgybe/laurent.hpp"
#include "cgybe/rational.hpp"
#include "cgybe/tensor_op.hpp"
#include "cgybe/verifier.hpp"

namespace cgybe {

using Json = nlohmann::json;

/// [{"q": a, "p": b, "coeff": "num/den"}, ...] sorted by (a, b).
Json laurent_to_json(const LaurentQP& x);
/// Inverse of laurent_to_json; throws std::invalid_argument on malformed input.
LaurentQP laurent_from_json(const Json& j);

/// {"n", "arity", "entries": [{"out", "in", "coeff"}]}, entries sorted by
/// (in, out), basis labels 1-based.
template <int A>
Json op_to_json(const TensorOp<LaurentQP, A>& f);
template <int A>
TensorOp<LaurentQP, A> op_from_json(const Json& j);

/// Dense numeric matrix, one line per flattened input tuple (row-major,
/// 1-based order) and one column per flattened output tuple.
template <int A>
std::string to_csv(const TensorOp<Rational, A>& f);

/// {"n", "arity", "q", "p", "rows"}: the same layout as the CSV with
/// coefficients as compact rational strings.
template <int A>
Json numeric_to_json(const TensorOp<Rational, A>& f, const Rational& qval, const Rational& pval);

/// Array environment with one row per input basis tuple and one column per
/// output basis tuple, in the same order as the CSV.
template <class S, int A>
std::string to_latex(const TensorOp<S, A>& f);

Json report_to_json(const CheckReport& r);
Json report_to_json(const OracleReport& r);

}  // namespace cgybe
