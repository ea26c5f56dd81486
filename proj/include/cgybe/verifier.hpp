#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "cgybe/laurent.hpp"
#include "cgybe/tensor_op.hpp"

namespace cgybe {

/// Smallest (input, output) entry of the difference operator lhs - rhs that
/// is nonzero.
struct Witness {
  std::vector<int> input;
  std::vector<int> output;
  LaurentQP difference;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::optional<Witness> witness;  // present iff !passed
  std::string detail;              // which sub-identity failed, when there are several
  std::chrono::duration<double, std::milli> elapsed{};
};

namespace detail {

template <class S, int A>
std::optional<Witness> to_witness(const std::optional<Discrepancy<S, A>>& d) {
  if (!d) return std::nullopt;
  return Witness{{d->input.begin(), d->input.end()}, {d->output.begin(), d->output.end()}, to_laurent(d->difference)};
}

class Stopwatch {
 public:
  std::chrono::duration<double, std::milli> elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// c12 c23 c12 = c23 c12 c23 with c12 = c ⊗ Id, c23 = Id ⊗ c. Works over any
/// coefficient type, so the same kernel checks symbolic and evaluated operators.
template <class S>
CheckReport check_ybe(const Endo2<S>& c, std::string name = "ybe") {
  detail::Stopwatch clock;
  const auto c12 = lift12(c);
  const auto c23 = lift23(c);
  const auto lhs = c12 * c23 * c12;
  const auto rhs = c23 * c12 * c23;
  CheckReport report;
  report.name = std::move(name);
  report.witness = detail::to_witness(first_difference(lhs, rhs));
  report.passed = !report.witness;
  report.elapsed = clock.elapsed();
  return report;
}

/// g12 g23 P12 + g12 P23 g12 + P12 g23 g12 = g23 g12 P23 + g23 P12 g23 + P23 g12 g23.
CheckReport check_compatibility(const Endo2<>& g);

/// Both cubic conditions under which every a·f + b·g solves the YBE:
/// f12 g23 g12 + g12 f23 g12 + g12 g23 f12 = f23 g12 g23 + g23 f12 g23 + g23 g12 f23,
/// and the same with f and g exchanged.
CheckReport check_mixed_conditions(const Endo2<>& f, const Endo2<>& g);

/// (R - q·I)(R + q^-1·I) = 0. Throws std::invalid_argument if qscalar is not a unit.
CheckReport check_hecke(const Endo2<>& r, const LaurentQP& qscalar);

/// g² = g, gP = -g and Pg = g + P - I for the rank-n g and P.
CheckReport check_gp_relations(int n);

/// R² = beta·R + alpha(alpha - beta)·I for R = alpha·P + beta·g.
CheckReport check_quadratic(int n, const LaurentQP& alpha, const LaurentQP& beta);

}  // namespace cgybe
