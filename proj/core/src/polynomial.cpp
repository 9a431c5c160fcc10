#include "lune/polynomial.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wide.h"

namespace lune {

MonicPolynomial::MonicPolynomial(std::vector<Complex> lower_coefficients)
    : lower_(std::move(lower_coefficients)) {}

Complex MonicPolynomial::coefficient(std::size_t k) const {
  if (k < lower_.size()) return lower_[k];
  if (k == lower_.size()) return {1.0, 0.0};
  return {0.0, 0.0};
}

double MonicPolynomial::coefficient_scale() const {
  double scale = 1.0;
  for (const auto& c : lower_) scale = std::max(scale, std::abs(c));
  return scale;
}

Complex MonicPolynomial::operator()(Complex u) const {
  Complex acc{1.0, 0.0};
  for (auto it = lower_.rbegin(); it != lower_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

Polynomial MonicPolynomial::full() const {
  std::vector<Complex> all(lower_);
  all.emplace_back(1.0, 0.0);
  return Polynomial(std::move(all));
}

void MonicPolynomial::multiply_linear(Complex root) {
  // With a_0..a_d the full old coefficients (a_d = 1), the product has b_k = a_{k-1} - r a_k.
  const std::size_t d = lower_.size();
  lower_.emplace_back(1.0, 0.0);
  for (std::size_t k = d; k > 0; --k) lower_[k] = lower_[k - 1] - root * lower_[k];
  lower_[0] = -root * lower_[0];
}

MonicPolynomial operator*(const MonicPolynomial& a, const MonicPolynomial& b) {
  const std::size_t da = a.degree();
  const std::size_t db = b.degree();
  std::vector<detail::Wide> out(da + db);
  for (std::size_t i = 0; i <= da; ++i) {
    const detail::Wide ai = detail::widen(a.coefficient(i));
    for (std::size_t j = 0; j <= db; ++j) {
      if (i + j == da + db) continue;  // implicit leading 1
      out[i + j] = out[i + j] + ai * detail::widen(b.coefficient(j));
    }
  }
  return detail::to_monic(out);
}

Polynomial::Polynomial(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0.0, 0.0);
}

bool Polynomial::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Complex& c) { return c == Complex{0.0, 0.0}; });
}

Complex Polynomial::operator()(Complex u) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

MonicPolynomial Polynomial::to_monic() const {
  const Complex lead = coeffs_.back();
  if (lead == Complex{0.0, 0.0}) throw std::domain_error("to_monic: leading coefficient is zero");
  std::vector<Complex> lower(coeffs_.begin(), coeffs_.end() - 1);
  for (auto& c : lower) c /= lead;
  return MonicPolynomial(std::move(lower));
}

MonicPolynomial expand_from_roots(std::span<const Complex> roots) {
  return detail::to_monic(detail::expand_wide(roots));
}

Polynomial derivative(const MonicPolynomial& p) {
  const std::size_t d = p.degree();
  if (d == 0) return Polynomial{};
  std::vector<Complex> out(d);
  for (std::size_t k = 1; k <= d; ++k) out[k - 1] = static_cast<double>(k) * p.coefficient(k);
  return Polynomial(std::move(out));
}

double max_coefficient_difference(const MonicPolynomial& a, const MonicPolynomial& b) {
  const std::size_t d = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (std::size_t k = 0; k <= d; ++k)
    worst = std::max(worst, std::abs(a.coefficient(k) - b.coefficient(k)));
  return worst;
}

}  // namespace lune
