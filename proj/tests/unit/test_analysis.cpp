#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "imagewell/analysis.hpp"
#include "imagewell/spectral.hpp"

using namespace imagewell;
using std::numbers::pi;

TEST_CASE("particle-in-a-box and image-state levels") {
  CHECK(pib_energy(1, 1.0) == doctest::Approx(pi * pi / 2).epsilon(1e-15));
  CHECK(pib_energy(3, 2.0) == doctest::Approx(9.0 * pi * pi / 8).epsilon(1e-15));
  CHECK(image_state_energy(1) == -0.03125);
  CHECK(image_state_energy(2) == -0.0078125);
  CHECK(image_state_energy(3) == doctest::Approx(-1.0 / 288).epsilon(1e-15));
  CHECK(image_state_energy(3) == doctest::Approx(-0.00347222).epsilon(1e-6));
  CHECK_THROWS_AS(pib_energy(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(pib_energy(1, -1.0), std::domain_error);
  CHECK_THROWS_AS(image_state_energy(0), std::domain_error);
}

TEST_CASE("quantum defect") {
  CHECK(quantum_defect(4.0122415062, 1, 1.0) == doctest::Approx(0.0983071).epsilon(1e-6));
  CHECK(quantum_defect(18.467338037, 2, 1.0) == doctest::Approx(0.0655065).epsilon(1e-6));
  CHECK(std::abs(quantum_defect(pi * pi / 2, 1, 1.0)) < 1e-15);

  SUBCASE("round trip through the box formula") {
    for (double length : {0.5, 1.0, 7.0, 120.0}) {
      for (int n = 1; n <= 30; n += 7) {
        for (double delta : {-0.3, 0.0, 0.01, 0.45}) {
          const double k = pi * (n - delta) / length;
          CHECK(quantum_defect(0.5 * k * k, n, length) == doctest::Approx(delta).epsilon(1e-12).scale(1.0));
        }
      }
    }
  }
  CHECK_THROWS_AS(quantum_defect(0.0, 1, 1.0), std::domain_error);
  CHECK_THROWS_AS(quantum_defect(-0.03, 1, 100.0), std::domain_error);
}

TEST_CASE("single-plane ground state") {
  CHECK(single_plane_ground(0.0) == 0.0);
  CHECK(single_plane_ground(4.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(single_plane_ground_derivative(4.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-16));

  // Norm on [0, 200]; the tail beyond is below e^-100.
  const auto grid = build_grid(400, 200.0);
  const auto w = clenshaw_curtis_weights(grid);
  double norm = 0.0;
  for (int j = 0; j < grid.size(); ++j) {
    const double psi = single_plane_ground(grid.scaled_nodes[j] + 100.0);
    norm += w[j] * psi * psi;
  }
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));

  const double h = 1e-5;
  for (double x : {0.5, 3.0, 11.0}) {
    const double fd = (single_plane_ground(x + h) - single_plane_ground(x - h)) / (2 * h);
    CHECK(single_plane_ground_derivative(x) == doctest::Approx(fd).epsilon(1e-9));
  }
}

TEST_CASE("analytic splitting") {
  CHECK(analytic_splitting(8.0) == 0.0);
  CHECK(analytic_splitting(4.0) == doctest::Approx(0.25 * std::exp(-1.0) * 0.5).epsilon(1e-15));
  CHECK(analytic_splitting(4.0) == doctest::Approx(0.0459849).epsilon(1e-6));
  CHECK(analytic_splitting(20.0) < 0.0);
  const double half = 10.0;
  CHECK(analytic_splitting(20.0) ==
        doctest::Approx(2.0 * single_plane_ground(half) * single_plane_ground_derivative(half))
            .epsilon(1e-8));
  CHECK_THROWS_AS(analytic_splitting(0.0), std::domain_error);
}

TEST_CASE("default order") {
  CHECK(default_order(1.0) == 100);
  CHECK(default_order(25.0) == 100);
  CHECK(default_order(30.0) == 110);
  CHECK(default_order(60.0) == 155);
  CHECK(default_order(10000.0) == 2000);
  CHECK_THROWS_AS(default_order(0.0), std::domain_error);
}

TEST_CASE("defect table at L = 1") {
  const auto rows = defect_table(1.0, 100, 65);
  REQUIRE(rows.size() == 65);
  CHECK(rows[0].n == 1);
  REQUIRE(rows[0].defect.has_value());
  CHECK(*rows[0].defect == doctest::Approx(0.0983071).epsilon(1e-5));
  for (int k = 1; k < 40; ++k) {
    REQUIRE(rows[k].defect.has_value());
    CHECK(*rows[k].defect < *rows[k - 1].defect);
  }
}

TEST_CASE("defects vanish without the image potential") {
  AssembleOptions options;
  options.potential = zero_potential;
  const auto rows = defect_table(1.0, 100, 20, options);
  for (const auto& r : rows) {
    REQUIRE(r.defect.has_value());
    CHECK(std::abs(*r.defect) < 1e-10);
  }
}

TEST_CASE("bound states carry no defect") {
  const auto rows = defect_table(100.0, 200, 4);
  CHECK(rows[0].energy < 0.0);
  CHECK_FALSE(rows[0].defect.has_value());
}

TEST_CASE("splitting sweep") {
  const std::vector<double> lengths{1.0, 20.0, 30.0, 40.0, 50.0, 60.0};
  const auto records = splitting_sweep(lengths);
  REQUIRE(records.size() == lengths.size());
  CHECK(records[0].numeric == doctest::Approx(14.455096).epsilon(1e-7));
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].length == lengths[i]);
    CHECK(records[i].order == default_order(lengths[i]));
    CHECK(records[i].resolved);
    CHECK(records[i].numeric > 0.0);
    if (i > 0) CHECK(records[i].numeric < records[i - 1].numeric);
  }
  CHECK(records[1].analytic_abs() == doctest::Approx(-analytic_splitting(20.0)));

  // Once the prefactor L |1 - L/8| / 16 is divided out, ln dE is linear in L
  // to about 1%: three equally spaced points have a small second difference.
  auto reduced = [&](std::size_t i) {
    const double l = records[i].length;
    return std::log(records[i].numeric / (l * std::abs(1.0 - l / 8.0) / 16.0));
  };
  const double d1 = reduced(3) - reduced(2);
  const double d2 = reduced(4) - reduced(3);
  CHECK(std::abs(d2 - d1) < 0.02 * std::abs(d1));
  CHECK(d1 == doctest::Approx(-2.5).epsilon(0.03));

  const std::span<const SplittingRecord> tail(records.data() + 1, 5);
  const auto corrected = fit_splitting_decay(tail, DecayModel::AnalyticPrefactor);
  CHECK(corrected.rate == doctest::Approx(0.25).epsilon(0.02));
  CHECK(corrected.r_squared > 0.999);
  // The algebraic prefactor L |1 - L/8| flattens the raw slope.
  const auto raw = fit_splitting_decay(tail, DecayModel::PureExponential);
  CHECK(raw.rate == doctest::Approx(0.1876).epsilon(0.01));
}

TEST_CASE("splitting collapses at large separation") {
  const std::vector<double> lengths{10000.0};
  const auto records = splitting_sweep(lengths, 600);
  REQUIRE(records.size() == 1);
  CHECK(records[0].order == 600);
  CHECK(std::abs(records[0].numeric) <= 1e-11);
  CHECK_FALSE(records[0].resolved);
}

TEST_CASE("decay fit") {
  std::vector<SplittingRecord> synthetic;
  for (double length : {10.0, 20.0, 35.0}) {
    SplittingRecord r;
    r.length = length;
    r.numeric = 3.0 * std::exp(-0.4 * length);
    r.resolved = true;
    synthetic.push_back(r);
  }
  const auto fit = fit_splitting_decay(synthetic, DecayModel::PureExponential);
  CHECK(fit.rate == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0));

  synthetic[1].resolved = false;
  synthetic[2].resolved = false;
  CHECK_THROWS_AS(fit_splitting_decay(synthetic, DecayModel::PureExponential), std::domain_error);
}

TEST_CASE("energy sweep keeps order and matches single solves") {
  const std::vector<double> lengths{5.0, 1.0, 12.0};
  const auto rows = energy_sweep(lengths, 3, 64);
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].length == lengths[i]);
    CHECK(rows[i].order == 64);
    const auto direct = solve(64, lengths[i], 3);
    for (int k = 0; k < 3; ++k) CHECK(rows[i].energies[k] == direct.energies[k]);
  }
  const std::vector<double> bad{1.0, -2.0};
  CHECK_THROWS(energy_sweep(bad, 2));
}

TEST_CASE("log spacing") {
  const auto v = log_spaced(1.0, 100.0, 5);
  REQUIRE(v.size() == 5);
  CHECK(v.front() == 1.0);
  CHECK(v.back() == 100.0);
  CHECK(v[2] == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(v[1] == doctest::Approx(std::sqrt(10.0)).epsilon(1e-14));
  CHECK(log_spaced(3.0, 9.0, 1) == std::vector<double>{3.0});
  CHECK_THROWS_AS(log_spaced(0.0, 1.0, 3), std::domain_error);
  CHECK_THROWS_AS(log_spaced(1.0, 2.0, 0), std::domain_error);
}
