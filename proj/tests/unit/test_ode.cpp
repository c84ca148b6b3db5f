#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tprabi/alpha.hpp"
#include "tprabi/ode.hpp"

using tprabi::Complex;
using tprabi::ModelParams;
using tprabi::OdeCoefficients;
using tprabi::Polynomial;

namespace {

struct Draw {
  std::mt19937_64 gen;
  explicit Draw(std::uint64_t seed) : gen(seed) {}
  double operator()(double lo, double hi) {
    return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
  }
  Complex disc(double radius) {
    const double r = radius * std::sqrt((*this)(0.0, 1.0));
    return std::polar(r, (*this)(0.0, 6.283185307179586));
  }
};

}  // namespace

TEST_SUITE("ode") {

TEST_CASE("hand-evaluated coefficient set") {
  // omega=1, lambda=0.2, epsilon=0, delta=0, E=0, alpha=0.1
  const ModelParams params(0.0, 0.0, 1.0, 0.2);
  const OdeCoefficients c = tprabi::ode_coefficients(params, 0.1, 0.0);
  CHECK(std::abs(c.a1 - Complex(0.8)) < 1e-12);
  CHECK(std::abs(c.b2 - Complex(-23.76)) < 1e-12);
  CHECK(std::abs(c.b0 - Complex(11.2)) < 1e-12);
  CHECK(std::abs(c.p3 - Complex(-4.568)) < 1e-12);
  CHECK(std::abs(c.p1 - Complex(-20.52)) < 1e-12);
  CHECK(std::abs(c.q4 - Complex(1.0416)) < 1e-12);
  CHECK(std::abs(c.q2 - Complex(-19.352)) < 1e-12);
  CHECK(std::abs(c.q0 - Complex(4.12)) < 1e-12);
}

TEST_CASE("alpha = 0 recovers the untransformed coefficients") {
  Draw draw(23);
  for (int trial = 0; trial < 100; ++trial) {
    const double om = draw(0.3, 2.0);
    const double lam = (draw(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * draw(0.05, 0.9);
    const double eps = draw(-1.5, 1.5);
    const double del = draw(0.0, 2.0);
    const Complex e(draw(-3.0, 3.0), draw(-1.0, 1.0));
    const ModelParams params(del, eps, om, lam);
    const OdeCoefficients c = tprabi::ode_coefficients(params, 0.0, e);

    const double lam2 = lam * lam, om2 = om * om;
    const Complex expected[8] = {
        0.0,
        1.0 - om2 / lam2,
        (e + 2.0 * om + eps) / lam,
        om / lam,
        om * (e - om + eps) / lam2,
        1.0,
        2.0 * (eps - om) / lam,
        (2.0 * lam2 + eps * eps - e * e - del * del) / lam2};
    const Complex got[8] = {c.a1, c.b2, c.b0, c.p3, c.p1, c.q4, c.q2, c.q0};
    for (int k = 0; k < 8; ++k)
      CHECK(std::abs(got[k] - expected[k]) / (1.0 + std::abs(expected[k])) <
            1e-14);
  }
}

TEST_CASE("q4 vanishes at roots of the gauge quartic") {
  for (double L : {0.1, 0.2, 0.45, 0.8, 1.2}) {
    const ModelParams params(0.3, 0.1, 1.0, L);
    for (const auto& branch : tprabi::alpha_closed_form(params.lambda_ratio())) {
      const OdeCoefficients c =
          tprabi::ode_coefficients(params, branch.value, 0.7);
      CHECK(std::abs(c.q4) < 1e-9);
    }
  }
}

TEST_CASE("operator on simple inputs") {
  const ModelParams params(0.2, 0.1, 1.0, 0.3);
  const OdeCoefficients c = tprabi::ode_coefficients(params, 0.05, 0.4);

  CHECK(tprabi::apply_operator(c, Polynomial()).is_zero());

  const Polynomial image1 = tprabi::apply_operator(c, Polynomial::constant(1.0));
  CHECK(image1.degree() == 4);
  CHECK(std::abs(image1.coeff(0) - c.q0) < 1e-15);
  CHECK(std::abs(image1.coeff(2) - c.q2) < 1e-15);
  CHECK(std::abs(image1.coeff(4) - c.q4) < 1e-15);

  // with q4 forced to zero, L[z] collapses to (p3+q2) z^3 + (p1+q0) z
  OdeCoefficients c0 = c;
  c0.q4 = 0.0;
  const Polynomial imagez = tprabi::apply_operator(c0, Polynomial({0.0, 1.0}));
  CHECK(imagez.degree() <= 3);
  CHECK(std::abs(imagez.coeff(3) - (c0.p3 + c0.q2)) < 1e-15);
  CHECK(std::abs(imagez.coeff(1) - (c0.p1 + c0.q0)) < 1e-15);
  CHECK(std::abs(imagez.coeff(0)) < 1e-15);
  CHECK(std::abs(imagez.coeff(2)) < 1e-15);
}

TEST_CASE("degree bound with q4 = 0") {
  const ModelParams params(0.2, 0.1, 1.0, 0.3);
  OdeCoefficients c = tprabi::ode_coefficients(params, 0.05, 0.4);
  c.q4 = 0.0;
  for (int deg = 1; deg <= 6; ++deg) {
    std::vector<Complex> coeffs(deg + 1, Complex(0.3, -0.2));
    coeffs[deg] = 1.0;
    const Polynomial image = tprabi::apply_operator(c, Polynomial(coeffs));
    CHECK(image.degree() <= deg + 2);
  }
}

TEST_CASE("residual norm") {
  CHECK(tprabi::residual_norm(Polynomial()) == 0.0);
  Polynomial cancel({0.0, 0.0, 1.0});
  cancel += Polynomial({0.0, 0.0, -1.0});
  CHECK(tprabi::residual_norm(cancel) == 0.0);
  const double norm = tprabi::residual_norm(Polynomial({3.0}));
  CHECK(norm == doctest::Approx(3.0 / 4.0));
  CHECK(tprabi::residual_norm(Polynomial({1e-12})) ==
        doctest::Approx(1e-12).epsilon(1e-6));
}

TEST_CASE("gauged derivatives agree with finite differences") {
  Draw draw(29);
  const Complex alpha(0.21, -0.13);
  const Polynomial phi({{0.5, -0.2}, {1.0, 0.3}, {-0.7, 0.1}, {0.2, 0.0}});
  auto full = [&](int order, Complex z) {
    return std::exp(alpha * z * z) *
           tprabi::gauged_derivatives(alpha, phi, z)[order];
  };
  const double h = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    const Complex z = draw.disc(1.5);
    for (int order = 1; order <= 4; ++order) {
      const Complex fd =
          (full(order - 1, z + h) - full(order - 1, z - h)) / (2.0 * h);
      const Complex an = full(order, z);
      CHECK(std::abs(fd - an) / (1.0 + std::abs(an)) < 1e-6);
    }
  }
}

TEST_CASE("pointwise residual equals the transformed-operator route") {
  Draw draw(31);
  for (int trial = 0; trial < 20; ++trial) {
    const double om = draw(0.5, 1.5);
    const double lam = draw(0.1, 0.6);
    const double eps = draw(-1.0, 1.0);
    const double del = draw(0.0, 1.5);
    const Complex e(draw(-2.0, 2.0), draw(-1.0, 1.0));
    const Complex a(draw(-0.4, 0.4), draw(-0.3, 0.3));
    const ModelParams params(del, eps, om, lam);
    const OdeCoefficients c = tprabi::ode_coefficients(params, a, e);

    const int deg = static_cast<int>(draw(0.0, 6.999));
    std::vector<Complex> coeffs(deg + 1);
    for (Complex& ck : coeffs) ck = Complex(draw(-1, 1), draw(-1, 1));
    const Polynomial phi(coeffs);
    const Polynomial image = tprabi::apply_operator(c, phi);

    for (int k = 0; k < 20; ++k) {
      const Complex z = draw.disc(1.5);
      const Complex raw = tprabi::raw_residual_pointwise(params, e, a, phi, z);
      const Complex via = std::exp(a * z * z) * image.eval(z);
      CHECK(std::abs(raw - via) / (1.0 + std::abs(via)) < 1e-8);
    }
  }
}

TEST_CASE("pointwise residual at the origin is the constant coefficient") {
  const ModelParams params(0.4, 0.2, 1.0, 0.3);
  const Complex e(0.9, 0.0);
  const Complex q0 =
      (2.0 * 0.09 + 0.04 - e * e - 0.16) / 0.09;  // (2l^2+eps^2-E^2-d^2)/l^2
  const Complex raw = tprabi::raw_residual_pointwise(
      params, e, 0.0, Polynomial::constant(1.0), 0.0);
  CHECK(std::abs(raw - q0) < 1e-13);
}

TEST_CASE("singular coupling rejected") {
  const ModelParams params(0.4, 0.2, 1.0, 0.0);
  CHECK_THROWS_AS((void)tprabi::ode_coefficients(params, 0.0, 0.0),
                  tprabi::InvalidParameter);
  CHECK_THROWS_AS((void)tprabi::raw_residual_pointwise(
                      params, 0.0, 0.0, Polynomial::constant(1.0), 0.0),
                  tprabi::InvalidParameter);
}

}  // TEST_SUITE
