#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fracplast/plasticity.hpp"

using namespace fracplast;
using doctest::Approx;

namespace {
const MaterialParams kSteel{205e9, 1.2e9};
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(kSteel.validate());
  CHECK_THROWS_AS((MaterialParams{0.0, 1e9}.validate()), std::domain_error);
  CHECK_THROWS_AS((MaterialParams{205e9, -1.0}.validate()), std::domain_error);
  CHECK_NOTHROW(MaterialParams::elastic(205e9).validate());
}

TEST_CASE("elastic trial") {
  PointState s;
  s.eps_total = 0.005;
  auto t = elastic_trial(s, 0.0, kSteel);
  CHECK(t.sigma_trial == Approx(1025e6));
  CHECK(t.f_trial == Approx(-175e6));

  t = elastic_trial(PointState{}, 0.0, kSteel);
  CHECK(t.sigma_trial == 0.0);
  CHECK(t.f_trial == -kSteel.sigma_Y);

  s.eps_total = 0.007;
  t = elastic_trial(s, 0.0, kSteel);
  CHECK(t.sigma_trial == Approx(1435e6));
  CHECK(t.f_trial == Approx(235e6));
}

TEST_CASE("return map in tension and compression") {
  const PointState s0;
  const auto t = elastic_trial(s0, 0.007, kSteel);
  const auto s = return_map(t, s0, 0.007, kSteel);
  CHECK(s.dgamma_last == Approx(0.0011463414634146341).epsilon(1e-14));
  CHECK(s.sigma == Approx(1.2e9));
  CHECK(s.eps_plastic == Approx(0.0011463414634146341).epsilon(1e-14));
  CHECK(s.eps_total == Approx(0.007));

  const auto tc = elastic_trial(s0, -0.007, kSteel);
  const auto sc = return_map(tc, s0, -0.007, kSteel);
  CHECK(sc.sigma == -s.sigma);
  CHECK(sc.eps_plastic == -s.eps_plastic);
  CHECK(sc.dgamma_last == s.dgamma_last);
}

TEST_CASE("return map refuses admissible trials") {
  const PointState s0;
  const auto t = elastic_trial(s0, 0.001, kSteel);
  CHECK_THROWS_AS(return_map(t, s0, 0.001, kSteel), std::logic_error);
}

TEST_CASE("continuity at the yield surface") {
  const double eps_y = kSteel.sigma_Y / kSteel.E;
  const auto s = update_point(PointState{}, eps_y * (1 + 1e-12), kSteel);
  CHECK(s.dgamma_last <= 1e-14);
  CHECK(s.sigma == Approx(kSteel.sigma_Y).epsilon(1e-12));
}

TEST_CASE("update_point: elastic, plastic, unloading") {
  auto s = update_point(PointState{}, 0.001, kSteel);
  CHECK(s.eps_plastic == 0.0);
  CHECK(s.sigma == Approx(205e6));

  s = update_point(PointState{}, 0.007, kSteel);
  CHECK(s.sigma == Approx(1.2e9));
  CHECK(s.eps_plastic == Approx(0.0011463414634146341).epsilon(1e-14));

  const auto u = update_point(s, -0.002, kSteel);
  CHECK(u.eps_plastic == s.eps_plastic);
  CHECK(u.dgamma_last == 0.0);
  CHECK(u.sigma == Approx(kSteel.E * (u.eps_total - u.eps_plastic)));
  CHECK(u.sigma == Approx(1.2e9 - 205e9 * 0.002));
}

TEST_CASE("elastic material never yields") {
  const auto mat = MaterialParams::elastic(205e9);
  const auto s = update_point(PointState{}, 0.5, mat);
  CHECK(s.eps_plastic == 0.0);
  CHECK(s.sigma == Approx(205e9 * 0.5));
}

TEST_CASE("zero increment on an admissible state is the identity") {
  auto s = update_point(PointState{}, 0.009, kSteel);
  const auto again = update_point(s, 0.0, kSteel);
  CHECK(again.sigma == s.sigma);
  CHECK(again.eps_plastic == s.eps_plastic);
  CHECK(again.eps_total == s.eps_total);
}

TEST_CASE("monotonic loading is path independent") {
  for (int steps : {1, 7, 100, 1000}) {
    PointState s;
    for (int k = 0; k < steps; ++k) s = update_point(s, 0.01 / steps, kSteel);
    CHECK(s.sigma == Approx(1.2e9).epsilon(1e-12));
    CHECK(std::abs(s.eps_plastic - (0.01 - 1.2e9 / 205e9)) <= 1e-12);
  }
}

TEST_CASE("random histories satisfy KKT and sign equivariance") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> inc(-3e-3, 3e-3);
  for (int h = 0; h < 200; ++h) {
    PointState s, mirrored;
    for (int k = 0; k < 40; ++k) {
      const double d = inc(rng);
      s = update_point(s, d, kSteel);
      mirrored = update_point(mirrored, -d, kSteel);
      const double f = yield_function(s.sigma, kSteel);
      CHECK(s.dgamma_last >= 0.0);
      CHECK(f <= 1e-10 * kSteel.sigma_Y);
      CHECK(std::abs(s.dgamma_last * f) <= 1e-10 * kSteel.sigma_Y);
      CHECK(mirrored.sigma == -s.sigma);
      CHECK(mirrored.eps_plastic == -s.eps_plastic);
    }
  }
}
