#include "qcb/cloning.hpp"

#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace qcb;

TEST_CASE("clone spec validates its bounds") {
  CHECK_NOTHROW(CloneSpec(1, 1));
  CHECK_NOTHROW(CloneSpec(2, 50000));
  CHECK_THROWS_AS(CloneSpec(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(CloneSpec(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(CloneSpec(-1, 5), std::invalid_argument);
}

TEST_CASE("shrinking factor reference points") {
  CHECK(shrinking_factor(CloneSpec(3, 3)).eta == 1.0);
  CHECK(std::abs(shrinking_factor(CloneSpec(1, 2)).eta - 2.0 / 3.0) <= 1e-15);

  // N = 2 collapses to (M+2)/(2M).
  for (const std::int64_t m : {2, 3, 5, 10, 100, 50000}) {
    const Real expected = Real(m + 2) / Real(2 * m);
    CHECK(std::abs(shrinking_factor(CloneSpec(2, m)).eta - expected) <= 1e-15);
  }
}

TEST_CASE("shrinking factor monotonicity") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    Real prev = shrinking_factor(CloneSpec(n, n)).eta;
    CHECK(prev == 1.0);
    for (std::int64_t m = n + 1; m <= n + 30; ++m) {
      const Real eta = shrinking_factor(CloneSpec(n, m)).eta;
      CHECK(eta < prev);  // strictly falls as M grows
      CHECK(eta > 0);
      prev = eta;
    }
  }
  for (std::int64_t m = 12; m <= 20; ++m) {
    Real prev = 0;
    for (std::int64_t n = 1; n <= m; ++n) {
      const Real eta = shrinking_factor(CloneSpec(n, m)).eta;
      CHECK(eta > prev);  // strictly rises as N grows
      prev = eta;
    }
  }
}

TEST_CASE("shrinking factor survives very large M") {
  const Real eta = shrinking_factor(CloneSpec(2, 1000000)).eta;
  CHECK(std::abs(eta - Real(1000002) / Real(2000000)) <= 1e-16);
  CHECK(std::abs(shrinking_factor(CloneSpec(10, 1000000)).eta - 10.0 * 1000002 / (1000000.0 * 12)) <=
        1e-15);
}

TEST_CASE("clone state shrinks the bloch vector") {
  const BlochQubit mixed(0, 0, 0);
  CHECK(clone_state(CloneSpec(2, 7), mixed).bloch().norm() == 0.0);

  const BlochQubit input(0.1, -0.3, 0.2);
  const BlochQubit identity = clone_state(CloneSpec(4, 4), input);
  CHECK((identity.bloch() - input.bloch()).cwiseAbs().maxCoeff() == 0.0);

  const BlochQubit shrunk = clone_state(CloneSpec(2, 10), BlochQubit(0, 0, 0.9));
  CHECK(std::abs(shrunk.bloch().z() - 0.54) <= 1e-15);
  CHECK(shrunk.bloch().x() == 0.0);
  CHECK(shrunk.bloch().y() == 0.0);
}

TEST_CASE("two to M special case") {
  const BlochQubit input(0.3, 0.1, -0.5);
  CHECK((clone_state_2toM(2, input).bloch() - input.bloch()).cwiseAbs().maxCoeff() == 0.0);

  CHECK(std::abs(clone_state_2toM(4, BlochQubit(0, 0, 0.8)).length() - 0.6) <= 1e-15);

  // (M+2)/(2M) tends to 1/2 from above.
  CHECK(std::abs(clone_state_2toM(100000000, BlochQubit(0, 0, 1)).length() - 0.5) <= 1e-7);

  CHECK_THROWS_AS(clone_state_2toM(1, input), std::invalid_argument);

  for (std::int64_t m = 2; m <= 1000; ++m) {
    const Vector3 general = clone_state(CloneSpec(2, m), input).bloch();
    const Vector3 special = clone_state_2toM(m, input).bloch();
    CHECK((general - special).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("cloning chernoff reference points") {
  CHECK(cloning_chernoff(CloneSpec(5, 5), 0.7).xi == 0.0);
  CHECK(cloning_chernoff(CloneSpec(2, 9), 0).xi == 0.0);

  CHECK_THROWS_AS(cloning_chernoff(CloneSpec(2, 9), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(cloning_chernoff(CloneSpec(2, 9), 1.1), std::invalid_argument);

  // Grid-scan regression for the (2, 10) machine at r = 0.9: inputs shrink
  // from eigenvalues (0.95, 0.05) to (0.77, 0.23).
  const ChernoffResult res = cloning_chernoff(CloneSpec(2, 10), 0.9);
  const test::GridScanResult ref =
      test::oracle_grid_scan(BlochQubit(0, 0, 0.9), BlochQubit(0, 0, 0.54));
  CHECK(std::abs(res.q_min - ref.q_min) <= 1e-12);
  CHECK(std::abs(res.xi - 0.0386577180533) <= 1e-10);
}

TEST_CASE("cloning chernoff ignores the input direction") {
  auto rng = test::seeded_rng(20);
  const Real reference = cloning_chernoff(CloneSpec(3, 7), 0.6).xi;
  for (int i = 0; i < 100; ++i) {
    // Any direction of equal length gives the same exponent; the API already
    // takes only r, so cross-check against the general chernoff_bound.
    const Vector3 dir = test::random_state(rng, 1).bloch();
    const BlochQubit input(Vector3(0.6 * dir));
    const BlochQubit clone = clone_state(CloneSpec(3, 7), input);
    const Real xi = chernoff_bound(input, clone).xi;
    CHECK(std::abs(xi - reference) <= 1e-12);
  }
}

TEST_CASE("cloning chernoff grows with M and falls with N") {
  for (int tenths = 1; tenths <= 9; ++tenths) {
    const Real r = Real(tenths) / 10;
    Real prev = -1;
    for (const std::int64_t m : {2, 3, 5, 10, 100, 50000}) {
      const Real xi = cloning_chernoff(CloneSpec(2, m), r).xi;
      CHECK(xi >= prev - 1e-14);
      prev = xi;
    }
    prev = std::numeric_limits<Real>::infinity();
    for (const std::int64_t n : {2, 4, 10}) {
      const Real xi = cloning_chernoff(CloneSpec(n, 1000000), r).xi;
      CHECK(xi <= prev + 1e-14);
      prev = xi;
    }
  }
}

TEST_CASE("cloning chernoff is monotone in r") {
  for (const auto& [n, m] : {std::pair<std::int64_t, std::int64_t>{2, 5},
                             {1, 3},
                             {4, 12}}) {
    Real prev = 0;
    for (int i = 0; i <= 100; ++i) {
      const Real xi = cloning_chernoff(CloneSpec(n, m), Real(i) / 100).xi;
      CHECK(xi >= prev - 1e-12);
      prev = xi;
    }
  }
}
