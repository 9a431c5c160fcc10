#pragma once

// Dense complex polynomials, lowest degree first.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace lune {

using Complex = std::complex<double>;

class Polynomial;

/// Monic polynomial u^d + c_{d-1} u^{d-1} + ... + c_0. The leading 1 is implicit
/// and never stored, so monicity cannot be broken by rounding.
class MonicPolynomial {
 public:
  MonicPolynomial() = default;  // the constant 1
  explicit MonicPolynomial(std::vector<Complex> lower_coefficients);

  std::size_t degree() const { return lower_.size(); }

  // c_0 .. c_{d-1}
  std::span<const Complex> coefficients() const { return lower_; }

  // Coefficient of u^k for 0 <= k <= degree(); 0 above the degree.
  Complex coefficient(std::size_t k) const;

  // max(1, max_k |c_k|), the scale used by residual and coefficient tolerances.
  double coefficient_scale() const;

  Complex operator()(Complex u) const;

  // Same polynomial with the leading 1 made explicit.
  Polynomial full() const;

  // Multiplies in place by (u - root).
  void multiply_linear(Complex root);

  friend MonicPolynomial operator*(const MonicPolynomial& a, const MonicPolynomial& b);

 private:
  std::vector<Complex> lower_;
};

/// General polynomial a_0 + a_1 u + ... + a_d u^d (leading coefficient may be anything).
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0, 0.0}} {}
  explicit Polynomial(std::vector<Complex> coefficients);

  // Index of the highest stored coefficient; the zero polynomial reports 0.
  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Complex> coefficients() const { return coeffs_; }
  Complex leading() const { return coeffs_.back(); }
  bool is_zero() const;

  Complex operator()(Complex u) const;

  // Divides through by the leading coefficient. Throws std::domain_error when it is zero.
  MonicPolynomial to_monic() const;

 private:
  std::vector<Complex> coeffs_;
};

// prod_j (u - roots_j), expanded by repeated multiplication with linear factors.
MonicPolynomial expand_from_roots(std::span<const Complex> roots);

// Exact coefficientwise derivative. The derivative of a constant is the zero polynomial.
Polynomial derivative(const MonicPolynomial& p);

// Largest absolute coefficient difference, including the leading coefficient.
double max_coefficient_difference(const MonicPolynomial& a, const MonicPolynomial& b);

}  // namespace lune
