#include "tprabi/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace tprabi {

Polynomial::Polynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (const Complex& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw InvalidParameter("Polynomial: coefficients must be finite");
  }
  trim();
}

Polynomial Polynomial::constant(Complex value) {
  return Polynomial(std::vector<Complex>{value});
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  Polynomial result = constant(1.0);
  std::vector<Complex> factor(2);
  for (const Complex& r : roots) {
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw InvalidParameter("from_roots: roots must be finite");
    factor[0] = -r;
    factor[1] = 1.0;
    result *= Polynomial(factor);
  }
  return result;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0))
    coeffs_.pop_back();
}

Complex Polynomial::eval(Complex z) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * static_cast<double>(k);
  return Polynomial(std::move(d));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size())
    coeffs_.resize(other.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Complex> prod(a.coeffs_.size() + b.coeffs_.size() - 1,
                            Complex(0.0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(Complex scale) {
  for (Complex& c : coeffs_) c *= scale;
  trim();
  return *this;
}

SymmetricSums symmetric_sums(std::span<const Complex> roots) {
  const std::size_t n = roots.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= 1e-12)
        throw DegenerateRoots("symmetric_sums: coincident roots");

  SymmetricSums sums{Complex(0.0), Complex(0.0), Complex(0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const Complex d = roots[i] - roots[j];
      sums.s1 += 1.0 / d;
      sums.s2 += roots[i] / d;
      for (std::size_t l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        sums.s3 += 1.0 / ((roots[i] - roots[l]) * d);
      }
    }
  }
  return sums;
}

}  // namespace tprabi
