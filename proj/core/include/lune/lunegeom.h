#pragma once

// Geometry of the region bounded by a chord [z, z+] of the unit circle and the
// counterclockwise arc from z+ back to z (the closed unit disk intersected with
// the half-plane on that arc's side of the chord).

#include <span>
#include <vector>

#include "lune/polynomial.h"
#include "lune/zeros.h"

namespace lune {

// Distance from an endpoint below which the endpoint convention applies.
inline constexpr double kTolEndpoint = 1e-9;
// Slack for all closed-set membership predicates.
inline constexpr double kTolGeom = 1e-10;

/// Chord between z = e^{i theta} and z+ = e^{i theta_plus}, theta < theta_plus < theta + 2pi,
/// together with the counterclockwise arc z -> z+ of length alpha.
class ChordArc {
 public:
  // Endpoints computed from the angles; theta_plus may exceed 2pi.
  ChordArc(double theta, double theta_plus);
  // Endpoints supplied explicitly so they can be bitwise equal to stored zeros.
  ChordArc(double theta, double theta_plus, Complex z, Complex z_plus);

  double theta() const { return theta_; }
  double theta_plus() const { return theta_plus_; }
  double alpha() const { return alpha_; }
  Complex z() const { return z_; }
  Complex z_plus() const { return z_plus_; }

 private:
  double theta_;
  double theta_plus_;
  double alpha_;
  Complex z_;
  Complex z_plus_;
};

struct AngleValue {
  double value = 0.0;          // in [0, pi]
  bool endpoint_case = false;  // endpoint convention applied, value == alpha/2
};

// Unoriented angle at u between the rays to z and z+; alpha/2 within kTolEndpoint of
// either endpoint.
AngleValue subtended_angle(Complex u, const ChordArc& chord);

// Closed half-plane bounded by the chord line, on the side of the arc z+ -> z.
bool in_half_plane(Complex u, const ChordArc& chord);

// Closed unit disk intersected with the half-plane.
bool in_lune(Complex u, const ChordArc& chord);

// Representative of arg(z+ - w) - arg(z - w) in (-pi, pi]. Throws std::domain_error
// within kTolEndpoint of an endpoint.
double signed_arg_difference(Complex w, const ChordArc& chord);

// Inscribed angle alpha/2 seen from the circle off the open arc z -> z+.
double half_gap_angle(const ChordArc& chord);

// |u - z| <= 2 sin(alpha/2) for u in the lune of a chord with alpha > pi.
// Throws std::invalid_argument if alpha <= pi or u is not in the lune.
bool lune_diameter_bound(Complex u, const ChordArc& chord);

// Guaranteed excess of the subtended angle over alpha/2 for lune points with |u| < 1 - eps:
// (eps/2) sin(alpha/2) when alpha <= pi, eps/2 otherwise.
double angle_gain_delta(double epsilon, double alpha);

// Closed convex hull containment within kTolGeom.
bool convex_hull_contains(std::span<const Complex> points, Complex u);

struct Box {
  double x_min, x_max, y_min, y_max;
};

// Axis-aligned bounding box of the lune.
Box lune_bounding_box(const ChordArc& chord);

// Closed outline of the lune: the arc z+ -> z sampled at `arc_samples` points, then back
// along the chord.
std::vector<Complex> lune_outline(const ChordArc& chord, std::size_t arc_samples = 128);

}  // namespace lune
