#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cgybe {

/// All integer tuples in [lo, hi]^arity, enumerated lexicographically.
struct IntWindow {
  int lo = 0;
  int hi = 0;
  int arity = 1;

  /// Throws std::invalid_argument unless lo <= hi and arity >= 1.
  void validate() const;
  std::size_t size() const;

  bool operator==(const IntWindow&) const = default;
};

struct OracleReport {
  std::string name;
  IntWindow window;
  bool passed = true;
  std::optional<std::vector<int>> counterexample;  // present iff !passed
  std::string detail;
  std::chrono::duration<double, std::milli> elapsed{};
};

/// Calls visit(tuple) on every tuple of the window in lexicographic order
/// until it returns false. Returns the tuple that stopped the walk, if any.
std::optional<std::vector<int>> find_in_window(const IntWindow& window,
                                               const std::function<bool(const std::vector<int>&)>& holds);

/// zeta(i,j,k,c,h) = sum_a eta(j,k,a) eta(i,a,c) eta(i+a-c, j+k-a, h), the
/// sum running over the support [min(j,k), max(j,k)) of eta(j,k,.).
int zeta(int i, int j, int k, int c, int h);

// Each check below enumerates its window exhaustively; tuple coordinates are
// in the order the variables are listed.

/// (i,j,k,a,b): the scalar form of the compatibility condition.
OracleReport check_cond1(const IntWindow& w);

/// (a,b,i,j,k): the step-function identity behind the compatibility proof.
OracleReport check_uid(const IntWindow& w);

/// (t,s,b,d,h): sum_a eta(t,s,a) eta(b+a,d-a,h) in closed form.
OracleReport check_prexi(const IntWindow& w);

/// (i,j,k,c,h): zeta in closed form.
OracleReport check_xi(const IntWindow& w);

/// (i,j,k,c,h): the scalar form of the YBE for g.
OracleReport check_cond2(const IntWindow& w);

/// (i,j,k,c,h): the right side of the scalar YBE equals zeta(i+j-k, i, j, h+c-k, i+j-h).
OracleReport check_zeta_symmetry(const IntWindow& w);

/// (i,j,l): sum_k eta(i,j,k) eta(k,i+j-k,l) = eta(i,j,l), together with
/// eta(j,i,l) = -eta(i,j,l) and eta(i,j,i+j-l) = eta(i,j,l) + delta(l-j) - delta(l-i).
OracleReport check_g_idempotent_identity(const IntWindow& w);

/// One of the nine elementary eta identities (which = 1..9) over [lo, hi]
/// in as many variables as the identity has:
///   1 translation  eta(a+d,b+d,c+d) = eta(a,b,c)
///   2 antisymmetry eta(a,b,c) = -eta(b,a,c)
///   3 reflection   eta(a,b,c) = eta(-b,-a,-c-1) = eta(a,b,a+b-c-1)
///   4 unit step    eta(a,a+1,c) = delta(a-c)
///   5 row sum      sum_a eta(b,c,a) = c-b
///   6 cocycle      eta(a,b,d) + eta(b,c,d) = eta(a,c,d)
///   7 annihilation eta(a,b+1,c) eta(c,a,b) = 0
///   8 exchange     eta(a,b,c) eta(c,b,d) = eta(a,b,d) eta(a,d+1,c)
///   9 splitting    eta(a,b,c) eta(d,c,e) = eta(a,b,c) eta(d,a,e) + eta(a,b,e) eta(e+1,b,c)
OracleReport check_eta_identity(int which, int lo, int hi);

/// All nine, in order.
std::vector<OracleReport> check_ids_suite(int lo, int hi);

/// Recomputes every truncated sum in this module with its range widened by
/// pad on both sides and confirms nothing changes.
OracleReport check_summation_padding(int lo, int hi, int pad = 3);

struct OracleEntry {
  std::string name;
  std::function<OracleReport(int lo, int hi)> run;
};

/// Every named oracle, in a fixed order: uid, cond1, ids1..ids9, prexi, xi,
/// cond2, zeta_symmetry, g_idempotent, padding.
const std::vector<OracleEntry>& oracle_registry();

}  // namespace cgybe
