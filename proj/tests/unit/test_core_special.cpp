#include "common.hpp"
#include "extwhit/core_special.hpp"
#include "oracles.hpp"

using namespace extwhit;

TEST_SUITE("core-special") {
  TEST_CASE("log_gamma at simple points") {
    CHECK(std::abs(log_gamma(1.0)) < 1e-15);
    CHECK(std::abs(log_gamma(0.5) - 0.5723649429247001) < 1e-15);
    CHECK(std::abs(log_gamma(5.0) - std::log(24.0)) < 1e-14);
  }

  TEST_CASE("log_gamma against the shifted Stirling oracle") {
    for (const Complex z : {Complex(3.7, 1.2), Complex(0.3, 0.1), Complex(12.5, -7.0), Complex(1.0, 30.0),
                            Complex(60.0, 40.0), Complex(0.9, -2.5)}) {
      CAPTURE(z);
      CHECK(rel(log_gamma(z), oracle::log_gamma(z)) < 1e-13);
    }
  }

  TEST_CASE("log_gamma on the left half-plane agrees with reflection in modulus") {
    for (const Complex z : {Complex(-2.5, 0.3), Complex(-0.7, -1.1), Complex(-10.2, 4.0)}) {
      CAPTURE(z);
      // |Gamma(z) Gamma(1-z)| = pi / |sin(pi z)|
      const double lhs = (log_gamma(z) + log_gamma(1.0 - z)).real();
      const double rhs = std::log(M_PI / std::abs(std::sin(M_PI * z)));
      CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }

  TEST_CASE("log_gamma poles") {
    CHECK_THROWS_AS(log_gamma(0.0), PoleError);
    CHECK_THROWS_AS(log_gamma(-3.0), PoleError);
    CHECK_THROWS_AS(beta(-1.0, 2.0), PoleError);
  }

  TEST_CASE("beta values and symmetry") {
    CHECK(rel(beta(1.0, 1.0), 1.0) < 1e-15);
    CHECK(rel(beta(2.0, 3.0), 1.0 / 12.0) < 1e-14);
    for (const auto& [x, y] : {std::pair{Complex(1.3, 0.4), Complex(2.2, -1.0)}, {Complex(0.5, 2.0), Complex(3.0, 0.0)}}) {
      CHECK(rel(beta(x, y), beta(y, x)) < 1e-14);
    }
  }

  TEST_CASE("beta Gamma-ratio consistency") {
    for (const auto& [x, y, w] : {std::tuple{Complex(1.3), Complex(0.7), Complex(2.1)},
                                  {Complex(0.5, 0.5), Complex(2.0, -1.0), Complex(1.5, 0.25)},
                                  {Complex(4.0), Complex(3.5), Complex(0.2, 1.0)}}) {
      CHECK(rel(beta(x, y) * beta(x + y, w), beta(y, w) * beta(y + w, x)) < 1e-12);
    }
  }

  TEST_CASE("pochhammer") {
    CHECK(pochhammer(Complex(2.3, -1.0), 0) == Complex(1.0));
    CHECK(rel(pochhammer(1.0, 5), 120.0) < 1e-15);
    CHECK(rel(pochhammer(0.5, 3), 1.875) < 1e-15);
    for (const Complex a : {Complex(0.3), Complex(-2.5, 1.0), Complex(4.0, 0.5)}) {
      for (int n = 0; n < 6; ++n) {
        for (int m = 0; m < 6; ++m) CHECK(rel(pochhammer(a, n) * pochhammer(a + double(n), m), pochhammer(a, n + m)) < 1e-14);
      }
    }
  }

  TEST_CASE("chf_classic closed forms") {
    for (const Complex z : {Complex(0.3), Complex(-4.0), Complex(2.0, 3.0)}) {
      CHECK(rel(chf_classic(1.7, 1.7, z), std::exp(z)) < 1e-13);
    }
    CHECK(rel(chf_classic(1.0, 2.0, 1.0), M_E - 1.0) < 1e-15);
    CHECK_THROWS_AS(chf_classic(1.0, -2.0, 1.0), PoleError);
    // Phi(1/2; 3/2; -x) = sqrt(pi) erf(sqrt x) / (2 sqrt x)
    const double x = 2.5;
    CHECK(rel(chf_classic(0.5, 1.5, -x), std::sqrt(M_PI) * std::erf(std::sqrt(x)) / (2.0 * std::sqrt(x))) < 1e-14);
  }

  TEST_CASE("chf_classic Kummer transformation") {
    for (const Complex b : {Complex(0.5), Complex(1.5, 0.5), Complex(-1.3)}) {
      for (const Complex c : {Complex(2.5), Complex(0.7, -0.2)}) {
        for (const Complex z : {Complex(10.0), Complex(-7.0), Complex(3.0, 4.0), Complex(0.0, -9.0), Complex(0.5)}) {
          CAPTURE(b);
          CAPTURE(c);
          CAPTURE(z);
          CHECK(rel(chf_classic(b, c, z), chf_classic(c - b, c, -z).unscaled() * std::exp(z)) < 1e-10);
        }
      }
    }
  }

  TEST_CASE("chf_classic derivative rule by central difference") {
    const Complex b(0.8), c(2.3);
    for (const Complex z : {Complex(0.5), Complex(-3.0), Complex(1.0, 2.0), Complex(6.0)}) {
      const double h = 1e-5 * std::max(1.0, std::abs(z));
      const Complex fd = (chf_classic(b, c, z + h).unscaled() - chf_classic(b, c, z - h).unscaled()) / (2.0 * h);
      CHECK(rel(fd, b / c * chf_classic(b + 1.0, c + 1.0, z).unscaled()) < 1e-6);
    }
  }

  TEST_CASE("gauss_classic") {
    CHECK(rel(gauss_classic(0.3, 1.2, 2.0, 0.0), 1.0) < 1e-15);
    CHECK(rel(gauss_classic(1.0, 1.0, 2.0, 0.5), 2.0 * std::log(2.0)) < 1e-14);
    CHECK_THROWS_AS(gauss_classic(1.0, 1.0, 2.0, 1.0), DomainError);
    CHECK_THROWS_AS(gauss_classic(1.0, 1.0, 2.0, Complex(0.0, -1.5)), DomainError);
    CHECK_THROWS_AS(gauss_classic(1.0, 1.0, -1.0, 0.5), PoleError);
  }

  TEST_CASE("whittaker_classic") {
    CHECK(rel(whittaker_classic(0.0, 0.5, 1.0), 1.0421906109874948) < 1e-15);
    CHECK(whittaker_classic(0.0, 0.5, 0.0).unscaled() == Complex(0.0));
    CHECK(rel(whittaker_classic(0.0, 0.5, 2.0 * I), 2.0 * std::sinh(I)) < 1e-14);
    CHECK_THROWS_AS(whittaker_classic(0.0, -0.5, 1.0), DomainError);
  }
}
