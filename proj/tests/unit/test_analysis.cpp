#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "wavekin/analysis.hpp"
#include "wavekin/errors.hpp"

using namespace wavekin;
using Catch::Approx;
using oracle::kPi;

TEST_CASE("root finding", "[analysis]") {
  CHECK(bisect_root([](double x) { return x * x - 2.0; }, 0.0, 2.0) ==
        Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(bisect_root([](double x) { return x * x + 1.0; }, -1.0, 1.0),
                  FeatureNotFound);
  const auto zeros = find_zeros([](double x) { return std::sin(x); }, {0.5, 10.0});
  REQUIRE(zeros.size() == 3);
  CHECK(zeros[0] == Approx(kPi).epsilon(1e-15));
  CHECK(zeros[2] == Approx(3 * kPi).epsilon(1e-15));
  // Touching zeros are not crossings.
  CHECK(find_zeros([](double x) { return x * x; }, {-1.0, 1.0}).empty());
}

TEST_CASE("least squares line", "[analysis]") {
  const std::vector<double> xs{0, 1, 2, 3};
  const std::vector<double> ys{1, 3, 5, 7};
  const LinearFit fit = fit_line(xs, ys);
  CHECK(fit.slope == Approx(2.0));
  CHECK(fit.intercept == Approx(1.0));
  CHECK(fit.rms_residual == Approx(0.0).margin(1e-15));
  CHECK_THROWS_AS(fit_line(std::vector<double>{0, 1}, std::vector<double>{0, 1}),
                  DegenerateFit);
  CHECK_THROWS_AS(fit_line(std::vector<double>{1, 1, 1}, std::vector<double>{0, 1, 2}),
                  DegenerateFit);
}

TEST_CASE("front tracking at beta 0.6", "[analysis]") {
  const BoostParams p{.beta = 0.6};
  const FactorPair f(p);
  std::vector<double> times;
  for (int i = 0; i <= 20; ++i) times.push_back(0.1 * i);

  // Analytic carrier node x = v t + pi / (gamma kappa0) = 0.6 t + 0.8 pi.
  const FrontTrace carrier =
      track_front(f, {0.3 * kPi, 1.3 * kPi + 1.2}, times, FrontTarget::carrier_node,
                  0.8 * kPi);
  CHECK(carrier.fitted_speed == Approx(0.6).margin(1e-6));
  CHECK(carrier.fit_residual < 1e-8);
  for (std::size_t i = 0; i < times.size(); ++i) {
    CHECK(carrier.positions[i] == Approx(0.6 * times[i] + 0.8 * kPi).epsilon(1e-12));
  }

  const FrontTrace modulation = track_front(f, {-2.0, 8.0}, times,
                                            FrontTarget::modulation_crest, 1.0);
  CHECK(modulation.fitted_speed == Approx(5.0 / 3.0).margin(1e-6));
  CHECK(carrier.fitted_speed * modulation.fitted_speed == Approx(1.0).margin(1e-5));
}

TEST_CASE("front speeds across velocities", "[analysis]") {
  for (double beta : {0.1, 0.5, 0.9, -0.5}) {
    for (double c : {1.0, 2.5}) {
      const BoostParams p{.beta = beta, .c = c, .omega0 = 1.3};
      const FrontSpeeds fs = measure_front_speeds(p);
      const double v = p.velocity();
      INFO("beta = " << beta << " c = " << c);
      CHECK(std::abs(fs.carrier.fitted_speed / v - 1.0) < 1e-6);
      CHECK(std::abs(fs.modulation.fitted_speed / (c * c / v) - 1.0) < 1e-6);
      CHECK(std::abs(fs.product / (c * c) - 1.0) < 1e-5);
    }
  }
}

TEST_CASE("front tracking errors", "[analysis]") {
  const FactorPair rest(BoostParams{});
  const std::vector<double> times{0.0, 0.5, 1.0};
  CHECK_THROWS_AS(track_front(rest, {-5, 5}, times, FrontTarget::modulation_crest),
                  FeatureNotFound);
  const FactorPair moving(BoostParams{.beta = 0.6});
  CHECK_THROWS_AS(track_front(moving, {2.6, 2.7}, times, FrontTarget::carrier_node),
                  FeatureNotFound);
  CHECK_THROWS_AS(track_front(moving, {-5, 5}, std::vector<double>{0.0, 1.0},
                              FrontTarget::carrier_node),
                  DegenerateFit);
  CHECK_THROWS_AS(track_front(moving, {-5, 5}, std::vector<double>{0.0, 1.0, 0.5},
                              FrontTarget::carrier_node),
                  DegenerateFit);
  CHECK_THROWS_AS(measure_front_speeds(BoostParams{}), FeatureNotFound);
}

TEST_CASE("de Broglie wave number and frequency from zero spacing", "[analysis]") {
  const BoostParams p{.beta = 0.6};
  const FactorPair f(p);
  CHECK(measure_wavenumber(f, 0.3, {-20.0, 20.0}) == Approx(0.75).epsilon(1e-6));
  CHECK(measure_frequency(f, 0.7, {0.0, 20.0}) == Approx(1.25).epsilon(1e-6));
  CHECK_THROWS_AS(measure_wavenumber(f, 0.0, {0.0, 1.0}), FeatureNotFound);
}

TEST_CASE("dephasing", "[analysis]") {
  CHECK(dephasing({.beta = 0.0}, 3.0) == 0.0);
  CHECK(dephasing({.beta = 0.6}, 1.0) == Approx(0.75).epsilon(1e-15));
  const BoostParams p{.beta = 0.35, .c = 2.0, .omega0 = 1.5};
  CHECK(dephasing(p, 2.4) == Approx(2.0 * dephasing(p, 1.2)).epsilon(1e-15));
  const FactorPair f(p);
  for (double x : {-3.0, 0.0, 2.5}) {
    const double dx = 0.9;
    CHECK(f.modulation_phase({x, 0, 0, 1.1}) - f.modulation_phase({x + dx, 0, 0, 1.1}) ==
          Approx(dephasing(p, dx)).epsilon(1e-12));
  }
}

TEST_CASE("isotropy frame search", "[analysis]") {
  CHECK(isotropy_search(2.0, 2.0, {}).beta == 0.0);

  SECTION("round trip with the Lorentz ray pair") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.99, 0.99);
    for (int i = 0; i < 500; ++i) {
      const BoostParams p{.beta = u(rng), .omega0 = 1.7};
      const RayPair r = doppler_pair(p);
      const IsotropyFrame frame = isotropy_search(r.omega1, r.omega2, p);
      REQUIRE(std::abs(frame.beta - p.beta) < 1e-10);
      REQUIRE(frame.common_omega == Approx(p.omega0).epsilon(1e-12));
    }
  }
  SECTION("Galilean pair: frame exists but the rest frequency is lost") {
    const BoostParams p{.beta = 0.6, .exponent_a = 0.0};
    const RayPair r = doppler_pair(p);
    const IsotropyFrame frame = isotropy_search(r.omega1, r.omega2, p);
    CHECK(frame.beta == Approx(0.6).epsilon(1e-12));
    CHECK(frame.common_omega == Approx(0.64).epsilon(1e-12));
  }
  CHECK_THROWS_AS(isotropy_search(0.0, 1.0, {}), NoSolution);
  CHECK_THROWS_AS(isotropy_search(1.0, -1.0, {}), NoSolution);
}

TEST_CASE("group closure defect", "[analysis]") {
  CHECK(group_closure_defect(1.0, 0.5, 0.5) < 1e-12);
  for (double a : {0.0, 0.5, 2.0, -1.0}) {
    CHECK(group_closure_defect(a, 0.37, 0.0) == 0.0);
  }
  // Exact rational values: (1.5 * 1.5) / 1.8, (4/3 * 1.5)^2 / (25/9 * 1.8), and
  // sqrt(4/5) * 1.25.
  CHECK(group_closure_defect(0.0, 0.5, 0.5) == Approx(0.25).epsilon(1e-14));
  CHECK(group_closure_defect(2.0, 0.5, 0.5) == Approx(0.2).epsilon(1e-13));
  CHECK(group_closure_defect(0.5, 0.5, 0.5) ==
        Approx(std::sqrt(5.0) / 2.0 - 1.0).epsilon(1e-13));

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (int i = 0; i < 1000; ++i) {
    REQUIRE(group_closure_defect(1.0, u(rng), u(rng)) < 1e-12);
  }
  CHECK_THROWS_AS(group_closure_defect(1.0, 1.0, 0.5), DomainError);
}

TEST_CASE("detectability reports", "[analysis]") {
  const auto lorentz = detectability_report(1.0, 0.5, 0.5);
  CHECK_FALSE(lorentz.anisotropy_flag);
  CHECK(lorentz.isotropy_frame_beta == Approx(0.8).epsilon(1e-12));
  CHECK(lorentz.isotropy_common_omega == Approx(1.0).epsilon(1e-12));

  const auto galilean = detectability_report(0.0, 0.5, 0.5);
  CHECK(galilean.anisotropy_flag);
  CHECK(galilean.closure_defect > 1e-3);

  const std::vector<double> as{0.0, 0.5, 1.0, 2.0};
  const std::vector<double> bs{0.1, 0.5, 0.9};
  const auto serial = detectability_sweep(as, bs, {}, 1);
  const auto parallel = detectability_sweep(as, bs, {}, 7);
  REQUIRE(serial.size() == 12);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].exponent_a == as[i / 3]);
    CHECK(serial[i].beta1 == bs[i % 3]);
    CHECK(serial[i].closure_defect == parallel[i].closure_defect);
    CHECK(serial[i].anisotropy_flag == (as[i / 3] != 1.0));
  }
}

TEST_CASE("Bohr residual", "[analysis]") {
  const auto four_pi = bohr_residual(1.0, 2.0 * kTwoPi);
  CHECK(four_pi.nearest_n == 2);
  CHECK(four_pi.residual == 0.0);

  const auto one = bohr_residual(0.75, kTwoPi / 0.75);
  CHECK(one.nearest_n == 1);
  CHECK(std::abs(one.residual) < 1e-15);

  // Exact half turn keeps the residual in (-pi, pi].
  const auto half = bohr_residual(1.0, 1.5 * kTwoPi);
  CHECK(half.nearest_n == 1);
  CHECK(half.residual == kTwoPi / 2.0);

  CHECK(bohr_residual(0.0, 3.0).nearest_n == 0);
  CHECK_THROWS_AS(bohr_residual(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(bohr_residual(1.0, 0.0), DomainError);
}

TEST_CASE("loop phase decomposition is exact", "[analysis][property]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mag(-3.0, 7.0);
  for (int i = 0; i < 20000; ++i) {
    const double phase = std::pow(10.0, mag(rng));
    const QuantizationResult q = decompose_loop_phase(phase);
    REQUIRE(kTwoPi * static_cast<double>(q.nearest_n) + q.residual == phase);
    REQUIRE(q.residual > -kTwoPi / 2.0);
    REQUIRE(q.residual <= kTwoPi / 2.0);
  }
}

namespace {

std::vector<Vec3> circle(double radius, std::size_t n) {
  std::vector<Vec3> path(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double th = kTwoPi * static_cast<double>(i % n) / static_cast<double>(n);
    path[i] = {radius * std::cos(th), radius * std::sin(th), 0.0};
  }
  return path;
}

}  // namespace

TEST_CASE("Bohr path integral", "[analysis]") {
  SECTION("constant wave number on a circle") {
    for (double radius : {0.5, 1.0, 13.0}) {
      const auto path = circle(radius, 10000);
      const std::vector<double> kappa(path.size(), 0.75);
      const auto q = bohr_path_integral(path, kappa);
      CHECK(std::abs(q.loop_phase - 0.75 * kTwoPi * radius) < 1e-8);
      CHECK(kTwoPi * static_cast<double>(q.nearest_n) + q.residual == q.loop_phase);
    }
  }
  SECTION("rest particle") {
    const auto path = circle(2.0, 100);
    const std::vector<double> kappa(path.size(), 0.0);
    const auto q = bohr_path_integral(path, kappa);
    CHECK(q.nearest_n == 0);
    CHECK(q.residual == 0.0);
  }
  SECTION("doubling sample density on a smooth profile") {
    const auto profile = [](const std::vector<Vec3>& path) {
      std::vector<double> k;
      for (const auto& p : path) k.push_back(0.75 + 0.2 * p.x + 0.1 * p.x * p.y);
      return k;
    };
    const auto coarse = circle(1.0, 10000);
    const auto fine = circle(1.0, 20000);
    const double a = bohr_path_integral(coarse, profile(coarse)).loop_phase;
    const double b = bohr_path_integral(fine, profile(fine)).loop_phase;
    CHECK(std::abs(a - b) < 1e-10);
    CHECK(a == Approx(0.75 * kTwoPi).epsilon(1e-12));
  }
  SECTION("polygon with straight sides integrates exactly") {
    const std::vector<Vec3> square{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 0}};
    const std::vector<double> k(square.size(), 1.0);
    // Corner curvature bends the side arcs; a dense straight polyline does not.
    std::vector<Vec3> dense;
    for (int side = 0; side < 4; ++side) {
      for (int i = 0; i < 100; ++i) {
        const double s = i / 100.0;
        const Vec3 c[4] = {{s, 0, 0}, {1, s, 0}, {1 - s, 1, 0}, {0, 1 - s, 0}};
        dense.push_back(c[side]);
      }
    }
    dense.push_back(dense.front());
    const std::vector<double> kd(dense.size(), 1.0);
    CHECK(bohr_path_integral(dense, kd).loop_phase == Approx(4.0).epsilon(1e-3));
    (void)k;
  }
  SECTION("errors") {
    const std::vector<Vec3> open{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    CHECK_THROWS_AS(bohr_path_integral(open, std::vector<double>(4, 1.0)),
                    OpenPathError);
    const std::vector<Vec3> tiny{{0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(bohr_path_integral(tiny, std::vector<double>(2, 1.0)),
                    InsufficientSamples);
    const auto path = circle(1.0, 10);
    CHECK_THROWS_AS(bohr_path_integral(path, std::vector<double>(3, 1.0)),
                    InsufficientSamples);
  }
}
