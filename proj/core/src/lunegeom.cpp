#include "lune/lunegeom.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lune {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

bool on_closed_arc(double t, double from, double length) {
  const double offset = normalize_angle(t - from);
  return offset <= length + 1e-15 || offset >= kTwoPi - 1e-15;
}

}  // namespace

ChordArc::ChordArc(double theta, double theta_plus)
    : ChordArc(theta, theta_plus, unit_point(theta),
               unit_point(theta_plus >= kTwoPi ? theta_plus - kTwoPi : theta_plus)) {}

ChordArc::ChordArc(double theta, double theta_plus, Complex z, Complex z_plus)
    : theta_(theta), theta_plus_(theta_plus), alpha_(theta_plus - theta), z_(z), z_plus_(z_plus) {
  if (!std::isfinite(theta) || !std::isfinite(theta_plus))
    throw std::invalid_argument("chord: non-finite angle");
  if (!(alpha_ > 0.0 && alpha_ < kTwoPi))
    throw std::invalid_argument("chord: need theta < theta_plus < theta + 2pi");
}

AngleValue subtended_angle(Complex u, const ChordArc& chord) {
  const Complex a = chord.z() - u;
  const Complex b = chord.z_plus() - u;
  if (std::abs(a) <= kTolEndpoint || std::abs(b) <= kTolEndpoint)
    return {chord.alpha() / 2.0, true};
  // atan2 of (|cross|, dot) stays accurate near 0 and pi, where arccos loses half the digits.
  return {std::atan2(std::abs(cross(a, b)), dot(a, b)), false};
}

bool in_half_plane(Complex u, const ChordArc& chord) {
  // Twice the signed area of (z, z+, u); positive on the side of the arc z+ -> z.
  const double area2 = cross(chord.z() - u, chord.z_plus() - u);
  return 0.5 * area2 >= -kTolGeom;
}

bool in_lune(Complex u, const ChordArc& chord) {
  return std::abs(u) <= 1.0 + kTolGeom && in_half_plane(u, chord);
}

double signed_arg_difference(Complex w, const ChordArc& chord) {
  const Complex a = chord.z() - w;
  const Complex b = chord.z_plus() - w;
  if (std::abs(a) <= kTolEndpoint || std::abs(b) <= kTolEndpoint)
    throw std::domain_error("signed_arg_difference: point coincides with a chord endpoint");
  const double d = std::atan2(cross(a, b), dot(a, b));
  return d == -std::numbers::pi ? std::numbers::pi : d;
}

double half_gap_angle(const ChordArc& chord) { return chord.alpha() / 2.0; }

bool lune_diameter_bound(Complex u, const ChordArc& chord) {
  if (!(chord.alpha() > std::numbers::pi))
    throw std::invalid_argument("lune_diameter_bound: requires alpha > pi");
  if (!in_lune(u, chord)) throw std::invalid_argument("lune_diameter_bound: point is not in the lune");
  return std::abs(u - chord.z()) <= 2.0 * std::sin(chord.alpha() / 2.0) + kTolGeom;
}

double angle_gain_delta(double epsilon, double alpha) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("angle_gain_delta: epsilon must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < kTwoPi))
    throw std::invalid_argument("angle_gain_delta: alpha must lie in (0, 2pi)");
  return alpha <= std::numbers::pi ? 0.5 * epsilon * std::sin(alpha / 2.0) : 0.5 * epsilon;
}

bool convex_hull_contains(std::span<const Complex> points, Complex u) {
  if (points.empty()) throw std::invalid_argument("convex_hull_contains: no points");
  std::vector<Complex> pts(points.begin(), points.end());
  auto less = [](Complex a, Complex b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  std::sort(pts.begin(), pts.end(), less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  // Andrew's monotone chain, counterclockwise, collinear points dropped.
  std::vector<Complex> hull;
  if (pts.size() > 2) {
    hull.resize(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
      while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
      hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
      while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
      hull[k++] = pts[i];
    }
    hull.resize(k - 1);
  } else {
    hull = pts;
  }

  if (hull.size() == 1) return std::abs(u - hull[0]) <= kTolGeom;
  if (hull.size() == 2) {
    const Complex d = hull[1] - hull[0];
    const double t = std::clamp(dot(u - hull[0], d) / std::norm(d), 0.0, 1.0);
    return std::abs(u - (hull[0] + t * d)) <= kTolGeom;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    if (cross(b - a, u - a) / std::abs(b - a) < -kTolGeom) return false;
  }
  return true;
}

Box lune_bounding_box(const ChordArc& chord) {
  std::vector<Complex> extremes{chord.z(), chord.z_plus()};
  const double arc_start = normalize_angle(chord.theta_plus());
  const double arc_length = kTwoPi - chord.alpha();
  for (int k = 0; k < 4; ++k) {
    const double t = k * std::numbers::pi / 2.0;
    if (on_closed_arc(t, arc_start, arc_length)) extremes.push_back(unit_point(t));
  }
  Box box{1.0, -1.0, 1.0, -1.0};
  for (const auto& p : extremes) {
    box.x_min = std::min(box.x_min, p.real());
    box.x_max = std::max(box.x_max, p.real());
    box.y_min = std::min(box.y_min, p.imag());
    box.y_max = std::max(box.y_max, p.imag());
  }
  return box;
}

std::vector<Complex> lune_outline(const ChordArc& chord, std::size_t arc_samples) {
  arc_samples = std::max<std::size_t>(arc_samples, 2);
  const double arc_length = kTwoPi - chord.alpha();
  std::vector<Complex> out;
  out.reserve(arc_samples);
  out.push_back(chord.z_plus());
  for (std::size_t i = 1; i + 1 < arc_samples; ++i)
    out.push_back(unit_point(chord.theta_plus() +
                             arc_length * static_cast<double>(i) / static_cast<double>(arc_samples - 1)));
  out.push_back(chord.z());
  return out;
}

}  // namespace lune
