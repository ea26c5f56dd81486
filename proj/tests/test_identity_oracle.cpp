#include "doctest.h"

#include <set>
#include <stdexcept>

#include "cgybe/cg_model.hpp"
#include "cgybe/identity_oracle.hpp"

using namespace cgybe;

namespace {

// zeta with the summation index running over a wide fixed range.
int zeta_naive(int i, int j, int k, int c, int h) {
  int total = 0;
  for (int a = -30; a <= 30; ++a) total += eta(j, k, a) * eta(i, a, c) * eta(i + a - c, j + k - a, h);
  return total;
}

}  // namespace

TEST_CASE("zeta fixtures") {
  for (int c = 0; c <= 4; ++c) {
    for (int h = 0; h <= 4; ++h) {
      CAPTURE(c);
      CAPTURE(h);
      CHECK(zeta(1, 2, 3, c, h) == (c == 1 && h == 2 ? 1 : 0));
    }
  }
}

TEST_CASE("truncated zeta equals the untruncated sum") {
  for (int i = -2; i <= 6; ++i) {
    for (int j = -2; j <= 6; ++j) {
      for (int k = -2; k <= 6; ++k) {
        for (int c = -2; c <= 6; c += 2) {
          for (int h = -2; h <= 6; h += 2) CHECK(zeta(i, j, k, c, h) == zeta_naive(i, j, k, c, h));
        }
      }
    }
  }
}

TEST_CASE("spot values") {
  // prexi at (t,s,b,d,h) = (1,3,0,4,2): only a = 1 contributes.
  int prexi = 0;
  for (int a = -10; a <= 10; ++a) prexi += eta(1, 3, a) * eta(0 + a, 4 - a, 2);
  CHECK(prexi == 1);

  // g-idempotent at (1,4,2): k = 1, 2, 3 give 1 + 1 - 1.
  int g_square = 0;
  for (int k = -10; k <= 10; ++k) g_square += eta(1, 4, k) * eta(k, 5 - k, 2);
  CHECK(g_square == eta(1, 4, 2));
  CHECK(g_square == 1);

  CHECK(zeta(2, 3, 1, 2, 3) == zeta_naive(2, 3, 1, 2, 3));
  CHECK(zeta(1, 2, 3, 2, 2) == 0);
  CHECK(check_prexi({1, 3, 5}).passed);
}

TEST_CASE("uid at the origin") {
  // All step functions are 1: lhs = 1·(1+1-1-1) + 1 = 1, rhs = 1·(1-1-1+1) + 1 = 1.
  const auto r = check_uid({0, 0, 5});
  CHECK(r.passed);
  CHECK(r.window.size() == 1);
}

TEST_CASE("find_in_window walks lexicographically") {
  std::vector<std::vector<int>> seen;
  const auto stop = find_in_window({0, 2, 2}, [&](const std::vector<int>& t) {
    seen.push_back(t);
    return t != std::vector<int>{1, 0};
  });
  REQUIRE(stop);
  CHECK(*stop == std::vector<int>{1, 0});
  CHECK(seen == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});

  std::size_t count = 0;
  CHECK_FALSE(find_in_window({-1, 1, 3}, [&](const std::vector<int>&) {
    ++count;
    return true;
  }));
  CHECK(count == 27);
  CHECK(IntWindow{-1, 1, 3}.size() == 27);
}

TEST_CASE("window errors") {
  CHECK_THROWS_AS(check_cond1({0, 1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(check_g_idempotent_identity({0, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(check_xi({2, 1, 5}), std::invalid_argument);
  CHECK_THROWS_AS(check_eta_identity(3, 4, -3), std::invalid_argument);
  CHECK_THROWS_AS(check_eta_identity(10, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_summation_padding(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(find_in_window({0, 1, 0}, [](const std::vector<int>&) { return true; }), std::invalid_argument);
}

TEST_CASE("a broken identity reports its first counterexample") {
  // eta(a, b, c) == eta(b, a, c) fails first at (0, 1, 0) on [0, 2]^3.
  const auto stop =
      find_in_window({0, 2, 3}, [](const std::vector<int>& t) { return eta(t[0], t[1], t[2]) == eta(t[1], t[0], t[2]); });
  REQUIRE(stop);
  CHECK(*stop == std::vector<int>{0, 1, 0});
}

TEST_CASE("every oracle holds on the standard windows") {
  for (auto [lo, hi] : {std::pair{-3, 4}, std::pair{1, 6}}) {
    CAPTURE(lo);
    for (const auto& entry : oracle_registry()) {
      const OracleReport r = entry.run(lo, hi);
      CAPTURE(entry.name);
      CHECK(r.name == entry.name);
      CHECK(r.passed);
      CHECK_FALSE(r.counterexample);
      CHECK(r.window.lo == lo);
      CHECK(r.window.hi == hi);
    }
  }
}

TEST_CASE("registry names and ids arities") {
  std::vector<std::string> names;
  for (const auto& e : oracle_registry()) names.push_back(e.name);
  CHECK(names == std::vector<std::string>{"uid", "cond1", "ids1", "ids2", "ids3", "ids4", "ids5", "ids6", "ids7",
                                          "ids8", "ids9", "prexi", "xi", "cond2", "zeta_symmetry", "g_idempotent",
                                          "padding"});
  const std::vector<int> arities = {4, 3, 3, 2, 2, 4, 3, 4, 5};
  const auto suite = check_ids_suite(0, 2);
  REQUIRE(suite.size() == 9);
  for (std::size_t w = 0; w < suite.size(); ++w) {
    CHECK(suite[w].name == "ids" + std::to_string(w + 1));
    CHECK(suite[w].window.arity == arities[w]);
  }
}

TEST_CASE("scalar YBE for g matches the operator") {
  // The coefficient of e_c ⊗ e_h' ⊗ e_h'' in g12 g23 g12 (e_i ⊗ e_j ⊗ e_k) is
  // zeta-shaped; summing both sides against the operator over n = 4 checks
  // that cond2 is the right scalar form.
  const int n = 4;
  const auto g = g_op(n);
  const auto g12 = lift12(g), g23 = lift23(g);
  const auto lhs = g12 * g23 * g12;
  const auto rhs = g23 * g12 * g23;
  CHECK(lhs == rhs);
  CHECK(check_cond2({1, n, 5}).passed);
}
