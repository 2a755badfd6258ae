#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "semiwkb/closed.hpp"
#include "semiwkb/error.hpp"
#include "semiwkb/regge.hpp"

using namespace semiwkb;
using doctest::Approx;

namespace {

std::vector<MesonRecord> synthetic(double kappa, double alpha_s) {
  std::vector<MesonRecord> out;
  for (int n = 0; n <= 1; ++n) {
    for (const auto& p : regge_trajectory(n, 2, kappa, alpha_s)) {
      out.push_back({"x", std::sqrt(p.e_sq), p.l, n});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("trajectories") {
  const auto t = regge_trajectory(0, 5, 0.14, 0.0);
  REQUIRE(t.size() == 6);
  CHECK(t[0].e_sq == Approx(1.68));
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i].e_sq - t[i - 1].e_sq == Approx(1.12));
  const auto t2 = regge_trajectory(0, 3, 0.2, 0.0);
  CHECK(t2[1].e_sq - t2[0].e_sq == Approx(1.6));
  CHECK(regge_trajectory(0, 1, 0.14, 0.39)[0].e_sq == Approx(1.2432));
}

TEST_CASE("noiseless roundtrip") {
  const auto fit = fit_regge(synthetic(0.14, 0.39));
  CHECK(std::abs(fit.kappa - 0.14) < 1e-12);
  CHECK(std::abs(fit.alpha_s - 0.39) < 1e-12);
  CHECK(fit.c_sq == Approx(funnel_shift(0.14, 0.39)).epsilon(1e-12));
  CHECK(fit.rms_residual < 1e-12);
  CHECK(fit.warnings.empty());
}

TEST_CASE("degenerate and short inputs") {
  std::vector<MesonRecord> same = {{"a", 1.0, 1, 0}, {"b", 1.1, 1, 0}, {"c", 1.2, 1, 0}};
  try {
    fit_regge(same);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DegenerateFit);
  }
  CHECK_THROWS_AS(fit_regge({{"a", 1.0, 0, 0}, {"b", 1.5, 1, 0}}), Error);
}

TEST_CASE("one percent mass noise") {
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<double> errors;
  for (int draw = 0; draw < 100; ++draw) {
    auto data = synthetic(0.14, 0.39);
    for (auto& r : data) r.mass *= 1.0 + noise(rng);
    errors.push_back(std::abs(fit_regge(data).kappa - 0.14) / 0.14);
  }
  std::nth_element(errors.begin(), errors.begin() + 50, errors.end());
  CHECK(errors[50] < 0.05);
}

TEST_CASE("csv ingestion") {
  std::istringstream in(
      "# light mesons\n"
      "name,mass_gev,l,n_r,weight\n"
      "rho,0.775,0,0,1\n"
      "\n"
      "a2,1.318,1,0,2\n"
      "rho3,1.689,2,0,1\n");
  const auto rows = read_meson_csv(in);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].name == "a2");
  CHECK(rows[1].weight == 2.0);
  CHECK(rows[2].l == 2);
  std::istringstream bad("mass,l\n1,2\n");
  CHECK_THROWS_AS(read_meson_csv(bad), Error);
  std::istringstream junk("name,mass_gev,l,n_r\nrho,abc,0,0\n");
  CHECK_THROWS_AS(read_meson_csv(junk), Error);
  CHECK_THROWS_AS(read_meson_csv_file("/nonexistent/mesons.csv"), Error);
}

TEST_CASE("negative alpha_s is flagged") {
  const auto fit = fit_regge(synthetic(0.14, -0.1));
  CHECK(fit.alpha_s == Approx(-0.1));
  CHECK_FALSE(fit.warnings.empty());
}
