#include "oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace oracle {

Complex combination_at(std::span<const Complex> zeros, std::span<const double> weights, Complex u) {
  Complex total{0.0, 0.0};
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    Complex term{weights[j], 0.0};
    for (std::size_t k = 0; k < zeros.size(); ++k)
      if (k != j) term *= u - zeros[k];
    total += term;
  }
  return total;
}

Complex product_at(std::span<const Complex> zeros, Complex u) {
  Complex p{1.0, 0.0};
  for (const auto& z : zeros) p *= u - z;
  return p;
}

std::pair<Complex, Complex> quadratic_roots(Complex b, Complex c) {
  const Complex disc = std::sqrt(b * b - 4.0 * c);
  return {(-b + disc) / 2.0, (-b - disc) / 2.0};
}

double angle_at(Complex u, Complex a, Complex b) { return std::abs(std::arg((b - u) / (a - u))); }

namespace {

// Position of t on the counterclockwise arc from z+ to z, as a fraction in [0, 1].
bool on_outer_arc(double t, const lune::ChordArc& chord) {
  const double two_pi = 2.0 * std::numbers::pi;
  double rel = std::fmod(t - chord.theta_plus(), two_pi);
  if (rel < 0.0) rel += two_pi;
  return rel <= two_pi - chord.alpha();
}

double segment_distance(Complex u, Complex a, Complex b) {
  const Complex ab = b - a;
  double t = ((u - a) * std::conj(ab)).real() / std::norm(ab);
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(u - (a + t * ab));
}

}  // namespace

std::vector<Complex> sample_lune(const lune::ChordArc& chord, std::size_t count, std::mt19937_64& rng) {
  // Bounding box of the closed lune, derived here rather than taken from the library.
  double x0 = std::min(chord.z().real(), chord.z_plus().real());
  double x1 = std::max(chord.z().real(), chord.z_plus().real());
  double y0 = std::min(chord.z().imag(), chord.z_plus().imag());
  double y1 = std::max(chord.z().imag(), chord.z_plus().imag());
  const double cardinal[4] = {0.0, std::numbers::pi / 2, std::numbers::pi, 3 * std::numbers::pi / 2};
  for (double t : cardinal) {
    if (!on_outer_arc(t, chord)) continue;
    x0 = std::min(x0, std::cos(t));
    x1 = std::max(x1, std::cos(t));
    y0 = std::min(y0, std::sin(t));
    y1 = std::max(y1, std::sin(t));
  }
  std::uniform_real_distribution<double> ux(x0, x1);
  std::uniform_real_distribution<double> uy(y0, y1);
  const Complex a = chord.z();
  const Complex b = chord.z_plus();
  // The outer-arc side of line (a, b) is where the cross product is >= 0.
  std::vector<Complex> out;
  out.reserve(count);
  while (out.size() < count) {
    const Complex u{ux(rng), uy(rng)};
    if (std::abs(u) > 1.0) continue;
    const double cross = (std::conj(a - u) * (b - u)).imag();
    if (cross < 0.0) continue;
    out.push_back(u);
  }
  return out;
}

std::vector<Complex> sample_disk(std::size_t count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> out;
  out.reserve(count);
  while (out.size() < count) {
    const Complex u{unit(rng), unit(rng)};
    if (std::abs(u) <= 1.0) out.push_back(u);
  }
  return out;
}

double distance_to_lune_boundary(Complex u, const lune::ChordArc& chord) {
  const double to_chord = segment_distance(u, chord.z(), chord.z_plus());
  double to_arc;
  if (u != Complex{0.0, 0.0} && on_outer_arc(std::arg(u), chord))
    to_arc = std::abs(1.0 - std::abs(u));
  else
    to_arc = std::min(std::abs(u - chord.z()), std::abs(u - chord.z_plus()));
  return std::min(to_chord, to_arc);
}

}  // namespace oracle
