#include "doctest.h"

#include <cmath>
#include <limits>

#include "semiwkb/error.hpp"
#include "semiwkb/model.hpp"

using namespace semiwkb;
using doctest::Approx;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected semiwkb::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("potential values") {
  const auto coulomb = PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.5);
  CHECK(potential_value(2.0, coulomb) == Approx(-0.25));
  const auto linear = PotentialSpec::linear(Coupling::Scalar, 0.0, 0.2);
  CHECK(potential_value(3.0, linear) == Approx(0.6));
  const auto funnel = PotentialSpec::funnel(Coupling::Scalar, 0.0, 0.39, 0.14);
  CHECK(potential_value(1.0, funnel) == Approx(-0.25));
  CHECK(effective_mass(1.0, PotentialSpec::funnel(Coupling::Scalar, 2.0, 0.39, 0.14)) ==
        Approx(1.75));
}

TEST_CASE("non-positive radius is a domain error") {
  const auto s = PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.5);
  CHECK(kind_of([&] { potential_value(0.0, s); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { potential_value(-1.0, s); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { effective_p_squared(0.0, 0.7, s, QuantumNumbers(0, 0)); }) ==
        ErrorKind::Domain);
}

TEST_CASE("p squared vanishes at known turning points") {
  const auto vc = PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.5);
  CHECK(effective_p_squared(std::sqrt(2.0), 1.0 / std::sqrt(2.0), vc, QuantumNumbers(0, 0)) ==
        Approx(0.0).epsilon(1e-12));
  const auto lin = PotentialSpec::linear(Coupling::Scalar, 0.0, 0.2, true);
  CHECK(std::abs(effective_p_squared(1.733521, std::sqrt(8.8), lin, QuantumNumbers(1, 2))) <
        1e-5);
  CHECK(effective_p_squared(1e4, std::sqrt(8.8), lin, QuantumNumbers(1, 2)) < 0.0);
}

TEST_CASE("p squared matches the unfactored expression") {
  const QuantumNumbers qn(1, 2);
  for (double r : {0.3, 1.0, 4.0}) {
    const double e = 0.93;
    const auto vc = PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.2);
    const double v = -0.2 / r;
    CHECK(effective_p_squared(r, e, vc, qn) ==
          Approx((e - v) * (e - v) - 1.0 - 6.25 / (r * r)).epsilon(1e-12));
    const auto sf = PotentialSpec::funnel(Coupling::Scalar, 0.4, 0.3, 0.2, true);
    const double w = 0.4 - 0.3 / r + 0.2 * r;
    CHECK(effective_p_squared(r, 2.0 * e, sf, qn) ==
          Approx(e * e - w * w - 6.25 / (r * r)).epsilon(1e-12));
  }
}

TEST_CASE("potential spec validation") {
  CHECK(kind_of([] { PotentialSpec::coulomb(Coupling::Vector, -1.0, 0.1); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { PotentialSpec::coulomb(Coupling::Vector, 1.0, -0.1); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] { PotentialSpec::linear(Coupling::Scalar, 0.0, 0.0); }) ==
        ErrorKind::InvalidArgument);
  CHECK(kind_of([] {
          PotentialSpec::coulomb(Coupling::Vector, std::numeric_limits<double>::quiet_NaN(), 0.1);
        }) == ErrorKind::InvalidArgument);
  CHECK_FALSE(PotentialSpec::linear(Coupling::Vector, 1.0, 0.2).normalizable());
  CHECK(PotentialSpec::linear(Coupling::Scalar, 1.0, 0.2).normalizable());
  CHECK(PotentialSpec::linear(Coupling::Scalar, 1.0, 0.2, true).kinetic_energy(3.0) == 1.5);
}

TEST_CASE("quantum numbers") {
  const QuantumNumbers qn(2, 3, 1);
  CHECK(qn.principal() == 6);
  CHECK(qn.n_theta() == 2);
  CHECK(kind_of([] { QuantumNumbers(-1, 0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { QuantumNumbers(0, -1); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { QuantumNumbers(0, 1, 2); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { QuantumNumbers(0, 1, -1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coulomb auxiliaries and supercriticality") {
  const auto aux = coulomb_aux(0, 0.3);
  CHECK(aux.lambda_vector == Approx(0.4));
  CHECK(aux.lambda_scalar == Approx(std::sqrt(0.34)));
  CHECK(std::isnan(coulomb_aux(0, 0.6).lambda_vector));
  CHECK(supercritical(PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.6), 0));
  CHECK_FALSE(supercritical(PotentialSpec::coulomb(Coupling::Vector, 1.0, 0.6), 1));
  CHECK_FALSE(supercritical(PotentialSpec::coulomb(Coupling::Scalar, 1.0, 0.6), 0));
  CHECK(centrifugal_coefficient(2) == 6.25);
}
