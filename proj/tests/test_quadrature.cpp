#include <doctest.h>

#include <cmath>

#include "bigm1/params.hpp"
#include "bigm1/quadrature.hpp"

using namespace bigm1;

TEST_CASE("Gauss-Jacobi integrates monomials against t^delta (1-t)^gamma") {
  const double cases[][2] = {{0, 0}, {-0.5, -0.5}, {0.25, -0.75}, {2, 1.5}, {-0.9, 3}};
  for (const auto& gd : cases) {
    const double gamma = gd[0], delta = gd[1];
    for (std::size_t count : {1u, 2u, 5u, 12u}) {
      const QuadratureRule rule = gauss_jacobi_rule(gamma, delta, count);
      CHECK(rule.size() == count);
      for (std::size_t k = 0; k < 2 * count; ++k) {
        double sum = 0;
        for (std::size_t j = 0; j < count; ++j) sum += rule.weights[j] * std::pow(rule.nodes[j], static_cast<double>(k));
        CHECK(sum == doctest::Approx(beta_function(delta + 1 + k, gamma + 1)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("Gauss-Jacobi nodes are ascending inside (0,1)") {
  const QuadratureRule rule = gauss_jacobi_rule(-0.5, 0.5, 40);
  for (std::size_t j = 0; j < rule.size(); ++j) {
    CHECK(rule.nodes[j] > 0);
    CHECK(rule.nodes[j] < 1);
    CHECK(rule.weights[j] > 0);
    if (j > 0) CHECK(rule.nodes[j] > rule.nodes[j - 1]);
  }
}

TEST_CASE("Legendre case matches known nodes") {
  const QuadratureRule rule = gauss_jacobi_rule(0, 0, 2);
  CHECK(rule.nodes[0] == doctest::Approx(0.5 - 0.5 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.nodes[1] == doctest::Approx(0.5 + 0.5 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(rule.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("beta function") {
  CHECK(beta_function(1, 1) == doctest::Approx(1.0));
  CHECK(beta_function(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(beta_function(2, 3) == doctest::Approx(1.0 / 12).epsilon(1e-14));
}

TEST_CASE("invalid exponents are rejected") {
  CHECK_THROWS_AS(gauss_jacobi_rule(-1, 0, 3), InvalidParameters);
  CHECK_THROWS_AS(gauss_jacobi_rule(0, -1.5, 3), InvalidParameters);
  CHECK_THROWS_AS(gauss_jacobi_rule(0, 0, 0), InvalidParameters);
}
