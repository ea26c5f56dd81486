#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cgybe/laurent.hpp"
#include "cgybe/parallel.hpp"
#include "cgybe/rational.hpp"

namespace cgybe {

/// Basis label e_{t[0]} ⊗ ... ⊗ e_{t[Arity-1]}, each entry in 1..n.
template <int Arity>
using BasisTuple = std::array<int, Arity>;

/// Sparse linear operator on V^{⊗Arity}, dim V = n, over the ring Scalar.
///
/// Stored column-wise: for every input basis tuple (flattened row-major,
/// 1-based labels) a sorted map from flattened output tuple to a nonzero
/// coefficient. Columns never hold zero coefficients, so the defaulted
/// equality is equality of operators.
template <class Scalar, int Arity>
class TensorOp {
  static_assert(Arity == 2 || Arity == 3, "only V⊗V and V⊗V⊗V are supported");

 public:
  using scalar_type = Scalar;
  using Index = BasisTuple<Arity>;
  using Column = std::map<std::size_t, Scalar>;
  static constexpr int arity = Arity;

  /// Zero operator on V^{⊗Arity} with dim V = n.
  explicit TensorOp(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("operator rank must be at least 1, got " + std::to_string(n));
    std::size_t dim = 1;
    for (int a = 0; a < Arity; ++a) dim *= static_cast<std::size_t>(n);
    columns_.resize(dim);
  }

  int rank() const { return n_; }
  std::size_t dim() const { return columns_.size(); }

  std::size_t flatten(const Index& t) const {
    std::size_t flat = 0;
    for (int v : t) {
      if (v < 1 || v > n_) {
        throw std::out_of_range("basis index " + std::to_string(v) + " outside 1.." + std::to_string(n_));
      }
      flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v - 1);
    }
    return flat;
  }

  Index unflatten(std::size_t flat) const {
    Index t{};
    for (int a = Arity - 1; a >= 0; --a) {
      t[a] = static_cast<int>(flat % static_cast<std::size_t>(n_)) + 1;
      flat /= static_cast<std::size_t>(n_);
    }
    return t;
  }

  /// Accumulates c into the (out, in) entry.
  void add(const Index& out, const Index& in, const Scalar& c) { add_flat(flatten(out), flatten(in), c); }

  void add_flat(std::size_t out, std::size_t in, const Scalar& c) {
    if (is_zero(c)) return;
    Column& col = columns_.at(in);
    auto [it, inserted] = col.try_emplace(out, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) col.erase(it);
    }
  }

  /// Replaces a whole column, dropping zero coefficients.
  void assign_column(std::size_t in, Column col) {
    std::erase_if(col, [](const auto& entry) { return is_zero(entry.second); });
    columns_.at(in) = std::move(col);
  }

  Scalar coeff(const Index& out, const Index& in) const {
    const Column& col = columns_[flatten(in)];
    const auto it = col.find(flatten(out));
    return it == col.end() ? Scalar{} : it->second;
  }

  const Column& column(std::size_t in) const { return columns_.at(in); }
  const Column& column(const Index& in) const { return columns_[flatten(in)]; }

  std::size_t nnz() const {
    std::size_t count = 0;
    for (const auto& col : columns_) count += col.size();
    return count;
  }

  bool is_zero_op() const { return nnz() == 0; }

  bool operator==(const TensorOp&) const = default;

 private:
  int n_;
  std::vector<Column> columns_;
};

template <class Scalar = LaurentQP>
using Endo2 = TensorOp<Scalar, 2>;
template <class Scalar = LaurentQP>
using Endo3 = TensorOp<Scalar, 3>;

/// Sparse vector in V^{⊗Arity}: basis tuple -> nonzero coefficient.
template <class Scalar, int Arity>
using SparseVector = std::map<BasisTuple<Arity>, Scalar>;

namespace detail {

template <class S, int A>
void require_same_rank(const TensorOp<S, A>& f, const TensorOp<S, A>& g, const char* what) {
  if (f.rank() != g.rank()) {
    throw std::invalid_argument(std::string(what) + ": rank mismatch (" + std::to_string(f.rank()) + " vs " +
                                std::to_string(g.rank()) + ")");
  }
}

}  // namespace detail

template <class Scalar, int Arity>
TensorOp<Scalar, Arity> identity_op(int n) {
  TensorOp<Scalar, Arity> id(n);
  for (std::size_t x = 0; x < id.dim(); ++x) id.add_flat(x, x, Scalar(1));
  return id;
}

/// Image f(e_in) as a sparse vector.
template <class S, int A>
SparseVector<S, A> apply(const TensorOp<S, A>& f, const std::type_identity_t<BasisTuple<A>>& in) {
  SparseVector<S, A> image;
  for (const auto& [out, c] : f.column(in)) image.emplace(f.unflatten(out), c);
  return image;
}

/// f ∘ g. Each output column is accumulated in full before zeros are
/// stripped; columns are independent and computed in parallel.
template <class S, int A>
TensorOp<S, A> compose(const TensorOp<S, A>& f, const TensorOp<S, A>& g) {
  detail::require_same_rank(f, g, "compose");
  TensorOp<S, A> result(f.rank());
  std::vector<typename TensorOp<S, A>::Column> columns(g.dim());
  parallel_for(g.dim(), [&](std::size_t x) {
    auto& acc = columns[x];
    for (const auto& [y, inner] : g.column(x)) {
      for (const auto& [z, outer] : f.column(y)) acc[z] += outer * inner;
    }
  });
  for (std::size_t x = 0; x < columns.size(); ++x) result.assign_column(x, std::move(columns[x]));
  return result;
}

template <class S, int A>
TensorOp<S, A> operator*(const TensorOp<S, A>& f, const TensorOp<S, A>& g) {
  return compose(f, g);
}

template <class S, int A>
TensorOp<S, A> scale(const std::type_identity_t<S>& c, const TensorOp<S, A>& f) {
  TensorOp<S, A> result(f.rank());
  if (is_zero(c)) return result;
  for (std::size_t x = 0; x < f.dim(); ++x) {
    for (const auto& [y, v] : f.column(x)) result.add_flat(y, x, c * v);
  }
  return result;
}

template <class S, int A>
TensorOp<S, A> operator*(const std::type_identity_t<S>& c, const TensorOp<S, A>& f) {
  return scale(c, f);
}

template <class S, int A>
TensorOp<S, A> operator+(TensorOp<S, A> f, const TensorOp<S, A>& g) {
  detail::require_same_rank(f, g, "add");
  for (std::size_t x = 0; x < g.dim(); ++x) {
    for (const auto& [y, v] : g.column(x)) f.add_flat(y, x, v);
  }
  return f;
}

template <class S, int A>
TensorOp<S, A> operator-(const TensorOp<S, A>& f) {
  return scale(S(-1), f);
}

template <class S, int A>
TensorOp<S, A> operator-(TensorOp<S, A> f, const TensorOp<S, A>& g) {
  detail::require_same_rank(f, g, "subtract");
  for (std::size_t x = 0; x < g.dim(); ++x) {
    for (const auto& [y, v] : g.column(x)) f.add_flat(y, x, -v);
  }
  return f;
}

/// a·f + b·g.
template <class S, int A>
TensorOp<S, A> linear_combo(const std::type_identity_t<S>& a, const TensorOp<S, A>& f,
                            const std::type_identity_t<S>& b, const TensorOp<S, A>& g) {
  detail::require_same_rank(f, g, "linear_combo");
  return scale(a, f) + scale(b, g);
}

/// f ⊗ Id on V⊗V⊗V.
template <class S>
TensorOp<S, 3> lift12(const TensorOp<S, 2>& f) {
  const int n = f.rank();
  TensorOp<S, 3> lifted(n);
  for (std::size_t x = 0; x < f.dim(); ++x) {
    const auto in = f.unflatten(x);
    for (const auto& [y, c] : f.column(x)) {
      const auto out = f.unflatten(y);
      for (int k = 1; k <= n; ++k) lifted.add({out[0], out[1], k}, {in[0], in[1], k}, c);
    }
  }
  return lifted;
}

/// Id ⊗ f on V⊗V⊗V.
template <class S>
TensorOp<S, 3> lift23(const TensorOp<S, 2>& f) {
  const int n = f.rank();
  TensorOp<S, 3> lifted(n);
  for (std::size_t x = 0; x < f.dim(); ++x) {
    const auto in = f.unflatten(x);
    for (const auto& [y, c] : f.column(x)) {
      const auto out = f.unflatten(y);
      for (int i = 1; i <= n; ++i) lifted.add({i, out[0], out[1]}, {i, in[0], in[1]}, c);
    }
  }
  return lifted;
}

/// One entry where two operators disagree; difference = lhs - rhs.
template <class S, int A>
struct Discrepancy {
  BasisTuple<A> input;
  BasisTuple<A> output;
  S difference;
};

/// The lexicographically smallest (input, output) entry at which f and g
/// differ, or nullopt when they are equal.
template <class S, int A>
std::optional<Discrepancy<S, A>> first_difference(const TensorOp<S, A>& f, const TensorOp<S, A>& g) {
  detail::require_same_rank(f, g, "first_difference");
  for (std::size_t x = 0; x < f.dim(); ++x) {
    const auto& lhs = f.column(x);
    const auto& rhs = g.column(x);
    if (lhs == rhs) continue;
    auto li = lhs.begin();
    auto ri = rhs.begin();
    while (li != lhs.end() || ri != rhs.end()) {
      std::size_t y;
      S diff;
      if (ri == rhs.end() || (li != lhs.end() && li->first < ri->first)) {
        y = li->first;
        diff = li->second;
        ++li;
      } else if (li == lhs.end() || ri->first < li->first) {
        y = ri->first;
        diff = -ri->second;
        ++ri;
      } else {
        y = li->first;
        diff = li->second - ri->second;
        ++li;
        ++ri;
      }
      if (!is_zero(diff)) return Discrepancy<S, A>{f.unflatten(x), f.unflatten(y), std::move(diff)};
    }
  }
  return std::nullopt;
}

template <class S, int A>
bool endo_eq(const TensorOp<S, A>& f, const TensorOp<S, A>& g) {
  return f == g;
}

/// Applies fn to every coefficient; results that vanish are dropped.
template <class S, int A, class Fn>
auto map_coefficients(const TensorOp<S, A>& f, Fn&& fn) {
  using T = std::decay_t<std::invoke_result_t<Fn&, const S&>>;
  TensorOp<T, A> result(f.rank());
  for (std::size_t x = 0; x < f.dim(); ++x) {
    for (const auto& [y, c] : f.column(x)) result.add_flat(y, x, fn(c));
  }
  return result;
}

/// Exact numeric specialization of a symbolic operator.
template <int A>
TensorOp<Rational, A> evaluate(const TensorOp<LaurentQP, A>& f, const Rational& qval, const Rational& pval) {
  if (qval.is_zero() || pval.is_zero()) throw std::domain_error("q and p must be nonzero");
  return map_coefficients(f, [&](const LaurentQP& c) { return c.eval(qval, pval); });
}

}  // namespace cgybe
