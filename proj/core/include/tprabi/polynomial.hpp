#ifndef TPRABI_POLYNOMIAL_HPP
#define TPRABI_POLYNOMIAL_HPP

#include <span>
#include <vector>

#include "tprabi/types.hpp"

namespace tprabi {

// Dense univariate polynomial with complex coefficients, stored in ascending
// degree. Canonical form: the zero polynomial has an empty coefficient list;
// otherwise the leading coefficient is nonzero (exact trailing zeros are
// trimmed, no tolerance is applied).
class Polynomial {
 public:
  Polynomial() = default;  // zero polynomial
  explicit Polynomial(std::vector<Complex> coeffs);

  static Polynomial constant(Complex value);
  // Monic product of (z - r) over the given roots; empty list gives 1.
  static Polynomial from_roots(std::span<const Complex> roots);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Complex coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex(0.0);
  }
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex eval(Complex z) const;  // Horner
  Polynomial derivative() const;
  double max_abs_coeff() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(Complex scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial p, Complex scale) {
    p *= scale;
    return p;
  }
  friend Polynomial operator*(Complex scale, Polynomial p) {
    p *= scale;
    return p;
  }

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

// The three double/triple sums over pairwise-distinct root indices,
//   s1 = sum_{i, j!=i} 1/(z_i - z_j)
//   s2 = sum_{i, j!=i} z_i/(z_i - z_j)
//   s3 = sum_{i, l!=j!=i} 1/((z_i - z_l)(z_i - z_j))
// For any set of n distinct roots these equal (0, n(n-1)/2, 0).
struct SymmetricSums {
  Complex s1;
  Complex s2;
  Complex s3;
};

// Throws DegenerateRoots if two roots are closer than 1e-12.
SymmetricSums symmetric_sums(std::span<const Complex> roots);

}  // namespace tprabi

#endif  // TPRABI_POLYNOMIAL_HPP
