#include <doctest.h>

#include <cmath>

#include "wavekin/errors.hpp"
#include "wavekin/kernel.hpp"

using namespace wavekin;

TEST_SUITE_BEGIN("kernel");

TEST_CASE("evaluate on the two families") {
  CHECK(evaluate(InteractionKernel::acoustic(2), 3.0) == 3.0);
  CHECK(evaluate(InteractionKernel::regularized(2.0, 1.0), 1.0) == 0.5);
  CHECK(evaluate(InteractionKernel::acoustic(3), 0.0) == 0.0);
  CHECK(evaluate(InteractionKernel::acoustic(3), 2.0) == 4.0);
  CHECK(evaluate(InteractionKernel::regularized(1.5, 0.25), 2.0) ==
        doctest::Approx(std::pow(2.0, 1.5) * std::pow(3.0, -0.25))
            .epsilon(1e-15));
}

TEST_CASE("evaluate rejects bad frequencies") {
  const auto kernel = InteractionKernel::acoustic(2);
  CHECK_THROWS_AS(evaluate(kernel, -1.0), InputError);
  CHECK_THROWS_AS(evaluate(kernel, std::nan("")), InputError);
  CHECK_THROWS_AS(evaluate(kernel, std::numeric_limits<double>::infinity()),
                  InputError);
}

TEST_CASE("U(0) is exactly zero for every variant") {
  CHECK(InteractionKernel::acoustic(2).value(0.0) == 0.0);
  CHECK(InteractionKernel::acoustic(5).value(0.0) == 0.0);
  CHECK(InteractionKernel::regularized(2.0, 1.0).value(0.0) == 0.0);
  // Even inadmissible parameters keep the zero branch.
  CHECK(InteractionKernel::acoustic(1).value(0.0) == 0.0);
  CHECK(InteractionKernel::regularized(0.5, 0.0).value(0.0) == 0.0);
}

TEST_CASE("validate_params names each violated inequality") {
  CHECK(validate_params(InteractionKernel::regularized(2.0, 1.0)).admissible);
  CHECK(validate_params(InteractionKernel::acoustic(2)).admissible);
  CHECK(validate_params(InteractionKernel::acoustic(3)).admissible);

  const auto bad_rho = validate_params(InteractionKernel::regularized(0.5, 0.0));
  CHECK_FALSE(bad_rho.admissible);
  REQUIRE(bad_rho.violated_conditions.size() >= 1);
  CHECK(bad_rho.violated_conditions[0] == "rho >= 1");

  const auto bad_d = validate_params(InteractionKernel::acoustic(1));
  CHECK_FALSE(bad_d.admissible);
  REQUIRE(bad_d.violated_conditions.size() == 1);
  CHECK(bad_d.violated_conditions[0] == "d >= 2");

  const auto bad_beta = validate_params(InteractionKernel::regularized(1.0, 0.5));
  CHECK_FALSE(bad_beta.admissible);
  CHECK(bad_beta.violated_conditions[0] == "beta <= rho - 1");

  const auto bad_gap = validate_params(InteractionKernel::regularized(3.0, 1.0));
  CHECK_FALSE(bad_gap.admissible);
  CHECK(bad_gap.violated_conditions[0] == "rho - beta < 2");
}

TEST_CASE("superadditivity certificate: linear kernel sits on equality") {
  const auto cert =
      check_superadditivity(InteractionKernel::acoustic(2), 10.0, 100);
  CHECK(cert.holds);
  CHECK(std::abs(cert.worst_margin) <= cert.atol);
  CHECK_FALSE(cert.witness.has_value());
}

TEST_CASE("superadditivity certificate: admissible kernels hold") {
  for (const auto& kernel :
       {InteractionKernel::acoustic(3), InteractionKernel::regularized(2.0, 1.0),
        InteractionKernel::regularized(1.0, 0.0)}) {
    const auto cert = check_superadditivity(kernel, 10.0, 100);
    CHECK(cert.holds);
    CHECK(cert.worst_margin >= -cert.atol);
  }
}

TEST_CASE("superadditivity certificate: inadmissible kernel reports witness") {
  // beta > rho - 1; the lattice scan is the oracle for these frozen values.
  const auto cert =
      check_superadditivity(InteractionKernel::regularized(1.0, 0.5), 5.0, 200);
  CHECK_FALSE(cert.holds);
  CHECK(cert.worst_margin ==
        doctest::Approx(-0.23290150637481544).epsilon(1e-12));
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->first == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(cert.witness->second ==
        doctest::Approx(1.206030150753769).epsilon(1e-12));
}

TEST_CASE("monotonicity certificate") {
  CHECK(check_monotonicity(InteractionKernel::acoustic(2), 10.0, 100).holds);
  CHECK(check_monotonicity(InteractionKernel::regularized(2.0, 1.0), 10.0, 100)
            .holds);

  // rho=1, beta=3 decreases beyond omega = 0.5.
  const auto kernel = InteractionKernel::regularized(1.0, 3.0);
  const auto cert = check_monotonicity(kernel, 5.0, 200);
  CHECK_FALSE(cert.holds);
  CHECK(cert.worst_margin ==
        doctest::Approx(-0.0015700875365776412).epsilon(1e-12));
  REQUIRE(cert.witness.has_value());
  CHECK(kernel.value(cert.witness->second) < kernel.value(cert.witness->first));
  CHECK(cert.witness->first > 0.5);
}

TEST_CASE("certificate preconditions") {
  const auto kernel = InteractionKernel::acoustic(2);
  CHECK_THROWS_AS(check_superadditivity(kernel, 0.0, 100), InputError);
  CHECK_THROWS_AS(check_superadditivity(kernel, 1.0, 1), InputError);
  CHECK_THROWS_AS(check_monotonicity(kernel, -1.0, 100), InputError);
}

TEST_SUITE_END();
