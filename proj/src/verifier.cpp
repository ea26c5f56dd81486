#include "cgybe/verifier.hpp"

#include <stdexcept>

#include "cgybe/cg_model.hpp"

namespace cgybe {

namespace {

using Op3 = Endo3<>;

// Records the first failing (lhs, rhs) pair among named sub-identities.
template <int A>
void record(CheckReport& report, const char* label, const TensorOp<LaurentQP, A>& lhs,
            const TensorOp<LaurentQP, A>& rhs) {
  if (!report.passed) return;
  if (auto witness = detail::to_witness(first_difference(lhs, rhs))) {
    report.passed = false;
    report.witness = std::move(witness);
    report.detail = label;
  }
}

// f_a g_b g_a + g_a f_b g_a + g_a g_b f_a: the three placements of one f
// among two g's. Swapping the (12, 23) roles gives the other side.
Op3 mixed_side(const Op3& f_a, const Op3& f_b, const Op3& g_a, const Op3& g_b) {
  return f_a * g_b * g_a + g_a * f_b * g_a + g_a * g_b * f_a;
}

}  // namespace

CheckReport check_compatibility(const Endo2<>& g) {
  detail::Stopwatch clock;
  const auto p = permutation_op(g.rank());
  const Op3 g12 = lift12(g), g23 = lift23(g), p12 = lift12(p), p23 = lift23(p);
  const Op3 lhs = g12 * g23 * p12 + g12 * p23 * g12 + p12 * g23 * g12;
  const Op3 rhs = g23 * g12 * p23 + g23 * p12 * g23 + p23 * g12 * g23;
  CheckReport report;
  report.name = "compat";
  record(report, "compatibility", lhs, rhs);
  report.elapsed = clock.elapsed();
  return report;
}

CheckReport check_mixed_conditions(const Endo2<>& f, const Endo2<>& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("check_mixed_conditions: rank mismatch");
  detail::Stopwatch clock;
  const Op3 f12 = lift12(f), f23 = lift23(f), g12 = lift12(g), g23 = lift23(g);
  CheckReport report;
  report.name = "mixed";
  record(report, "one f, two g", mixed_side(f12, f23, g12, g23), mixed_side(f23, f12, g23, g12));
  record(report, "one g, two f", mixed_side(g12, g23, f12, f23), mixed_side(g23, g12, f23, f12));
  report.elapsed = clock.elapsed();
  return report;
}

CheckReport check_hecke(const Endo2<>& r, const LaurentQP& qscalar) {
  if (!qscalar.is_unit()) {
    throw std::invalid_argument("check_hecke: '" + to_string(qscalar) + "' is not invertible in the Laurent ring");
  }
  detail::Stopwatch clock;
  const auto id = identity_op<LaurentQP, 2>(r.rank());
  const auto product = (r - scale(qscalar, id)) * (r + scale(qscalar.inverse(), id));
  CheckReport report;
  report.name = "hecke";
  record(report, "(R - q)(R + q^-1) = 0", product, Endo2<>(r.rank()));
  report.elapsed = clock.elapsed();
  return report;
}

CheckReport check_gp_relations(int n) {
  detail::Stopwatch clock;
  const auto g = g_op(n);
  const auto p = permutation_op(n);
  const auto id = identity_op<LaurentQP, 2>(n);
  CheckReport report;
  report.name = "gp";
  record(report, "g^2 = g", g * g, g);
  record(report, "gP = -g", g * p, -g);
  record(report, "Pg = g + P - I", p * g, g + p - id);
  report.elapsed = clock.elapsed();
  return report;
}

CheckReport check_quadratic(int n, const LaurentQP& alpha, const LaurentQP& beta) {
  detail::Stopwatch clock;
  const auto r = cg_op({n, alpha, beta});
  const auto id = identity_op<LaurentQP, 2>(n);
  CheckReport report;
  report.name = "quadratic";
  record(report, "R^2 = beta R + alpha(alpha - beta) I", r * r, scale(beta, r) + scale(alpha * (alpha - beta), id));
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace cgybe
