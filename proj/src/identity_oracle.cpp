#include "cgybe/identity_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cgybe/cg_model.hpp"

namespace cgybe {

void IntWindow::validate() const {
  if (lo > hi) {
    throw std::invalid_argument("empty window: lo = " + std::to_string(lo) + " > hi = " + std::to_string(hi));
  }
  if (arity < 1) throw std::invalid_argument("window arity must be positive");
}

std::size_t IntWindow::size() const {
  const auto side = static_cast<std::size_t>(hi - lo + 1);
  std::size_t total = 1;
  for (int a = 0; a < arity; ++a) total *= side;
  return total;
}

std::optional<std::vector<int>> find_in_window(const IntWindow& window,
                                               const std::function<bool(const std::vector<int>&)>& holds) {
  window.validate();
  std::vector<int> t(static_cast<std::size_t>(window.arity), window.lo);
  while (true) {
    if (!holds(t)) return t;
    int pos = window.arity - 1;
    while (pos >= 0 && t[pos] == window.hi) t[pos--] = window.lo;
    if (pos < 0) return std::nullopt;
    ++t[pos];
  }
}

namespace {

// sum over x in [min(a,b) - pad, max(a,b) + pad) of term(x). With pad = 0 this
// is exactly the support of eta(a, b, .).
template <class Term>
int support_sum(int a, int b, int pad, Term&& term) {
  int total = 0;
  for (int x = std::min(a, b) - pad; x < std::max(a, b) + pad; ++x) total += term(x);
  return total;
}

int zeta_padded(int i, int j, int k, int c, int h, int pad) {
  return support_sum(j, k, pad, [&](int a) { return eta(j, k, a) * eta(i, a, c) * eta(i + a - c, j + k - a, h); });
}

int cond2_rhs(int i, int j, int k, int c, int h, int pad) {
  return support_sum(i, j, pad,
                     [&](int s) { return eta(i, j, s) * eta(i + j - s, k, h + c - s) * eta(s, h + c - s, c); });
}

int prexi_lhs(int t, int s, int b, int d, int h, int pad) {
  return support_sum(t, s, pad, [&](int a) { return eta(t, s, a) * eta(b + a, d - a, h); });
}

int row_sum(int b, int c, int pad) {
  return support_sum(b, c, pad, [&](int a) { return eta(b, c, a); });
}

int g_square_lhs(int i, int j, int l, int pad) {
  return support_sum(i, j, pad, [&](int k) { return eta(i, j, k) * eta(k, i + j - k, l); });
}

using Predicate = std::function<bool(const std::vector<int>&)>;

OracleReport run_oracle(std::string name, const IntWindow& w, int required_arity, const Predicate& holds) {
  if (w.arity != required_arity) {
    throw std::invalid_argument(name + " needs a window of arity " + std::to_string(required_arity) + ", got " +
                                std::to_string(w.arity));
  }
  const auto start = std::chrono::steady_clock::now();
  OracleReport report;
  report.name = std::move(name);
  report.window = w;
  report.counterexample = find_in_window(w, holds);
  report.passed = !report.counterexample;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace

int zeta(int i, int j, int k, int c, int h) { return zeta_padded(i, j, k, c, h, 0); }

OracleReport check_cond1(const IntWindow& w) {
  return run_oracle("cond1", w, 5, [](const std::vector<int>& t) {
    const int i = t[0], j = t[1], k = t[2], a = t[3], b = t[4];
    const int lhs = eta(i, k, a + b - j) * eta(j, a + b - j, a) + eta(i, j, b + a - k) * eta(b + a - k, k, a) +
                    eta(i, j, b) * eta(i + j - b, k, a);
    const int rhs = eta(i, k, a) * eta(i + k - a, j, b) + eta(j, k, a) * eta(i, j + k - a, b) +
                    eta(j, k, j + k - b) * eta(i, j + k - b, a);
    return lhs == rhs;
  });
}

OracleReport check_uid(const IntWindow& w) {
  return run_oracle("uid", w, 5, [](const std::vector<int>& t) {
    const int a = t[0], b = t[1], i = t[2], j = t[3], k = t[4];
    auto u = step_u;
    const int lhs = u(a + b - i - j) * (u(a - j) + u(b - i) - u(b - j) - u(j - b)) + u(k - b) * u(a + b - i - k);
    const int rhs = u(a - i) * (u(k - b) - u(j - b) - u(b - j) + u(b + a - i - k)) + u(b - i) * u(a - j);
    return lhs == rhs;
  });
}

OracleReport check_prexi(const IntWindow& w) {
  return run_oracle("prexi", w, 5, [](const std::vector<int>& v) {
    const int t = v[0], s = v[1], b = v[2], d = v[3], h = v[4];
    const int rhs = (s - t) * eta(b + t, d - t, h) + (d - h - s) * eta(d - s, d - t, h) +
                    (h - b - s + 1) * eta(b + t, b + s, h);
    return prexi_lhs(t, s, b, d, h, 0) == rhs;
  });
}

OracleReport check_xi(const IntWindow& w) {
  return run_oracle("xi", w, 5, [](const std::vector<int>& t) {
    const int i = t[0], j = t[1], k = t[2], c = t[3], h = t[4];
    const int rhs =
        eta(j, k, c) * ((k - c - 1) * eta(i - c + k, j + k - c, h) + (j - h) * eta(j, j + k - c, h) +
                        (h - i) * eta(i, i + k - c, h)) +
        eta(i, j, c) * ((c - i + 1) * eta(i + j - c, i + k - c, h) + (h - j) * eta(i + j - c, j, h) +
                        (k - h) * eta(i + k - c, k, h));
    return zeta(i, j, k, c, h) == rhs;
  });
}

OracleReport check_cond2(const IntWindow& w) {
  return run_oracle("cond2", w, 5, [](const std::vector<int>& t) {
    return zeta(t[0], t[1], t[2], t[3], t[4]) == cond2_rhs(t[0], t[1], t[2], t[3], t[4], 0);
  });
}

OracleReport check_zeta_symmetry(const IntWindow& w) {
  return run_oracle("zeta_symmetry", w, 5, [](const std::vector<int>& t) {
    const int i = t[0], j = t[1], k = t[2], c = t[3], h = t[4];
    return cond2_rhs(i, j, k, c, h, 0) == zeta(i + j - k, i, j, h + c - k, i + j - h);
  });
}

OracleReport check_g_idempotent_identity(const IntWindow& w) {
  return run_oracle("g_idempotent", w, 3, [](const std::vector<int>& t) {
    const int i = t[0], j = t[1], l = t[2];
    return g_square_lhs(i, j, l, 0) == eta(i, j, l) && eta(j, i, l) == -eta(i, j, l) &&
           eta(i, j, i + j - l) == eta(i, j, l) + kron_delta(l - j) - kron_delta(l - i);
  });
}

OracleReport check_eta_identity(int which, int lo, int hi) {
  const std::string name = "ids" + std::to_string(which);
  auto window = [&](int arity) { return IntWindow{lo, hi, arity}; };
  switch (which) {
    case 1:
      return run_oracle(name, window(4), 4, [](const std::vector<int>& t) {
        const int a = t[0], b = t[1], c = t[2], d = t[3];
        return eta(a + d, b + d, c + d) == eta(a, b, c);
      });
    case 2:
      return run_oracle(name, window(3), 3,
                        [](const std::vector<int>& t) { return eta(t[0], t[1], t[2]) == -eta(t[1], t[0], t[2]); });
    case 3:
      return run_oracle(name, window(3), 3, [](const std::vector<int>& t) {
        const int a = t[0], b = t[1], c = t[2];
        return eta(a, b, c) == eta(-b, -a, -c - 1) && eta(a, b, c) == eta(a, b, a + b - c - 1);
      });
    case 4:
      return run_oracle(name, window(2), 2,
                        [](const std::vector<int>& t) { return eta(t[0], t[0] + 1, t[1]) == kron_delta(t[0] - t[1]); });
    case 5:
      return run_oracle(name, window(2), 2,
                        [](const std::vector<int>& t) { return row_sum(t[0], t[1], 0) == t[1] - t[0]; });
    case 6:
      return run_oracle(name, window(4), 4, [](const std::vector<int>& t) {
        const int a = t[0], b = t[1], c = t[2], d = t[3];
        return eta(a, b, d) + eta(b, c, d) == eta(a, c, d);
      });
    case 7:
      return run_oracle(name, window(3), 3, [](const std::vector<int>& t) {
        const int a = t[0], b = t[1], c = t[2];
        return eta(a, b + 1, c) * eta(c, a, b) == 0;
      });
    case 8:
      return run_oracle(name, window(4), 4, [](const std::vector<int>& t) {
        const int a = t[0], b = t[1], c = t[2], d = t[3];
        return eta(a, b, c) * eta(c, b, d) == eta(a, b, d) * eta(a, d + 1, c);
      });
    case 9:
      return run_oracle(name, window(5), 5, [](const std::vector<int>& t) {
        const int a = t[0], b = t[1], c = t[2], d = t[3], e = t[4];
        return eta(a, b, c) * eta(d, c, e) == eta(a, b, c) * eta(d, a, e) + eta(a, b, e) * eta(e + 1, b, c);
      });
    default:
      throw std::invalid_argument("there is no eta identity number " + std::to_string(which));
  }
}

std::vector<OracleReport> check_ids_suite(int lo, int hi) {
  std::vector<OracleReport> reports;
  for (int which = 1; which <= 9; ++which) reports.push_back(check_eta_identity(which, lo, hi));
  return reports;
}

OracleReport check_summation_padding(int lo, int hi, int pad) {
  const auto start = std::chrono::steady_clock::now();
  OracleReport report;
  report.name = "padding";
  report.window = IntWindow{lo, hi, 5};

  auto fail_on = [&](const char* which, const IntWindow& w, const Predicate& holds) {
    if (!report.passed) return;
    report.counterexample = find_in_window(w, holds);
    if (report.counterexample) {
      report.passed = false;
      report.window = w;
      report.detail = which;
    }
  };
  fail_on("zeta", {lo, hi, 5}, [pad](const std::vector<int>& t) {
    return zeta_padded(t[0], t[1], t[2], t[3], t[4], 0) == zeta_padded(t[0], t[1], t[2], t[3], t[4], pad);
  });
  fail_on("cond2 right side", {lo, hi, 5}, [pad](const std::vector<int>& t) {
    return cond2_rhs(t[0], t[1], t[2], t[3], t[4], 0) == cond2_rhs(t[0], t[1], t[2], t[3], t[4], pad);
  });
  fail_on("prexi left side", {lo, hi, 5}, [pad](const std::vector<int>& t) {
    return prexi_lhs(t[0], t[1], t[2], t[3], t[4], 0) == prexi_lhs(t[0], t[1], t[2], t[3], t[4], pad);
  });
  fail_on("row sum", {lo, hi, 2},
          [pad](const std::vector<int>& t) { return row_sum(t[0], t[1], 0) == row_sum(t[0], t[1], pad); });
  fail_on("g idempotent sum", {lo, hi, 3}, [pad](const std::vector<int>& t) {
    return g_square_lhs(t[0], t[1], t[2], 0) == g_square_lhs(t[0], t[1], t[2], pad);
  });

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

const std::vector<OracleEntry>& oracle_registry() {
  static const std::vector<OracleEntry> registry = [] {
    std::vector<OracleEntry> entries;
    auto cube5 = [](auto check) {
      return [check](int lo, int hi) { return check(IntWindow{lo, hi, 5}); };
    };
    entries.push_back({"uid", cube5(check_uid)});
    entries.push_back({"cond1", cube5(check_cond1)});
    for (int which = 1; which <= 9; ++which) {
      entries.push_back({"ids" + std::to_string(which),
                         [which](int lo, int hi) { return check_eta_identity(which, lo, hi); }});
    }
    entries.push_back({"prexi", cube5(check_prexi)});
    entries.push_back({"xi", cube5(check_xi)});
    entries.push_back({"cond2", cube5(check_cond2)});
    entries.push_back({"zeta_symmetry", cube5(check_zeta_symmetry)});
    entries.push_back({"g_idempotent",
                       [](int lo, int hi) { return check_g_idempotent_identity(IntWindow{lo, hi, 3}); }});
    entries.push_back({"padding", [](int lo, int hi) { return check_summation_padding(lo, hi); }});
    return entries;
  }();
  return registry;
}

}  // namespace cgybe
