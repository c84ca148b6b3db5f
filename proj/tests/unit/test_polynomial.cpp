#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "tprabi/polynomial.hpp"

using tprabi::Complex;
using tprabi::Polynomial;

namespace {

std::vector<Complex> random_distinct_roots(std::mt19937_64& gen, int n,
                                           double min_dist) {
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
  };
  std::vector<Complex> roots;
  while (static_cast<int>(roots.size()) < n) {
    const Complex cand(uniform(-2.0, 2.0), uniform(-2.0, 2.0));
    bool ok = true;
    for (const Complex& r : roots)
      if (std::abs(cand - r) < min_dist) ok = false;
    if (ok) roots.push_back(cand);
  }
  return roots;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("from_roots basics") {
  const Polynomial one = Polynomial::from_roots({});
  CHECK(one.degree() == 0);
  CHECK(one.coeff(0) == Complex(1.0));

  const std::vector<Complex> pm1 = {1.0, -1.0};
  const Polynomial p = Polynomial::from_roots(pm1);
  CHECK(p.degree() == 2);
  CHECK(std::abs(p.coeff(0) - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(p.coeff(1)) < 1e-15);
  CHECK(std::abs(p.coeff(2) - Complex(1.0)) < 1e-15);

  // conjugate pair 0.5 +/- 0.5i gives z^2 - z + 0.5
  const std::vector<Complex> pair = {{0.5, 0.5}, {0.5, -0.5}};
  const Polynomial q = Polynomial::from_roots(pair);
  CHECK(std::abs(q.coeff(0) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(q.coeff(1) - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(q.coeff(2) - Complex(1.0)) < 1e-15);
  for (const Complex& r : pair) CHECK(std::abs(q.eval(r)) < 1e-15);
}

TEST_CASE("derivative") {
  const Polynomial p({-1.0, 0.0, 1.0});  // z^2 - 1
  const Polynomial d = p.derivative();
  CHECK(d.degree() == 1);
  CHECK(std::abs(d.coeff(1) - Complex(2.0)) < 1e-15);

  CHECK(Polynomial::constant(5.0).derivative().is_zero());

  const Polynomial z4({0.0, 0.0, 0.0, 0.0, 1.0});
  const Polynomial d3 = z4.derivative();
  CHECK(d3.degree() == 3);
  CHECK(std::abs(d3.coeff(3) - Complex(4.0)) < 1e-15);
}

TEST_CASE("arithmetic") {
  const Polynomial zp1({1.0, 1.0});
  const Polynomial zm1({-1.0, 1.0});
  const Polynomial prod = zp1 * zm1;
  CHECK(std::abs(prod.coeff(0) - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(prod.coeff(1)) < 1e-15);
  CHECK(std::abs(prod.coeff(2) - Complex(1.0)) < 1e-15);

  const Polynomial z2({0.0, 0.0, 1.0});
  Polynomial sum = z2;
  sum += z2 * Complex(-1.0);
  CHECK(sum.is_zero());
  CHECK(sum.degree() == -1);

  const Polynomial iz({0.0, {0.0, 1.0}});
  const Polynomial sq = iz * iz;
  CHECK(std::abs(sq.coeff(2) - Complex(-1.0)) < 1e-15);
}

TEST_CASE("evaluation") {
  const Polynomial p({-1.0, 0.0, 1.0});
  CHECK(std::abs(p.eval(1.0)) < 1e-15);
  CHECK(std::abs(p.eval({0.0, 1.0}) - Complex(-2.0)) < 1e-15);
  CHECK(std::abs(Polynomial::constant(1.0).eval({3.0, -2.0}) - Complex(1.0)) <
        1e-15);
  CHECK(Polynomial().eval({1.0, 1.0}) == Complex(0.0));
}

TEST_CASE("roots evaluate to zero") {
  std::mt19937_64 gen(11);
  for (int n = 1; n <= 10; ++n) {
    const auto roots = random_distinct_roots(gen, n, 0.05);
    const Polynomial p = Polynomial::from_roots(roots);
    for (const Complex& r : roots) {
      const double bound = 1e-10 * std::pow(1.0 + std::abs(r), n);
      CHECK(std::abs(p.eval(r)) < bound);
    }
  }
}

TEST_CASE("product rule in coefficient space") {
  std::mt19937_64 gen(13);
  auto uniform = [&](double lo, double hi) {
    return lo + (hi - lo) * ((gen() >> 11) * 0x1.0p-53);
  };
  for (int trial = 0; trial < 30; ++trial) {
    const int da = 1 + static_cast<int>(uniform(0.0, 5.999));
    const int db = 1 + static_cast<int>(uniform(0.0, 5.999));
    std::vector<Complex> ca(da + 1), cb(db + 1);
    for (Complex& c : ca) c = Complex(uniform(-1, 1), uniform(-1, 1));
    for (Complex& c : cb) c = Complex(uniform(-1, 1), uniform(-1, 1));
    const Polynomial a(ca), b(cb);

    const Polynomial lhs = (a * b).derivative();
    const Polynomial rhs = a.derivative() * b + a * b.derivative();
    const double scale = rhs.max_abs_coeff() + 1.0;
    for (int k = 0; k <= lhs.degree(); ++k)
      CHECK(std::abs(lhs.coeff(k) - rhs.coeff(k)) / scale < 1e-12);
  }
}

TEST_CASE("symmetric sums on fixed sets") {
  const std::vector<Complex> two = {1.0, -1.0};
  const auto s2 = tprabi::symmetric_sums(two);
  CHECK(std::abs(s2.s1) < 1e-15);
  CHECK(std::abs(s2.s2 - Complex(1.0)) < 1e-15);
  CHECK(std::abs(s2.s3) < 1e-15);  // vacuous for n = 2

  const std::vector<Complex> three = {1.0, 0.0, -1.0};
  const auto s3 = tprabi::symmetric_sums(three);
  CHECK(std::abs(s3.s1) < 1e-15);
  CHECK(std::abs(s3.s2 - Complex(3.0)) < 1e-14);
  CHECK(std::abs(s3.s3) < 1e-14);
}

TEST_CASE("symmetric sums identity for random sets") {
  std::mt19937_64 gen(17);
  for (int n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto roots = random_distinct_roots(gen, n, 0.1);
      const auto sums = tprabi::symmetric_sums(roots);
      const double expected = 0.5 * n * (n - 1);
      CHECK(std::abs(sums.s1) < 1e-10);
      CHECK(std::abs(sums.s2 - Complex(expected)) < 1e-10);
      CHECK(std::abs(sums.s3) < 1e-10);
    }
  }
  // six specific roots: s2 = 15
  const auto roots = random_distinct_roots(gen, 6, 0.1);
  const auto sums = tprabi::symmetric_sums(roots);
  CHECK(std::abs(sums.s2 - Complex(15.0)) < 1e-10);
}

TEST_CASE("degenerate roots rejected") {
  const std::vector<Complex> bad = {1.0, 1.0 + 1e-13};
  CHECK_THROWS_AS((void)tprabi::symmetric_sums(bad), tprabi::DegenerateRoots);
}

TEST_CASE("nonfinite input rejected") {
  const std::vector<Complex> bad = {
      Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)};
  CHECK_THROWS_AS((void)Polynomial(bad), tprabi::InvalidParameter);
}

}  // TEST_SUITE
