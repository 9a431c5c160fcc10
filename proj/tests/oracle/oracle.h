#pragma once

// Independent reference computations for the tests. Nothing here calls into the
// library's root finder or coefficient expansion.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "lune/lunegeom.h"
#include "lune/polynomial.h"

namespace oracle {

using lune::Complex;

// sum_j lambda_j prod_{k != j} (u - z_k), straight from the definition.
Complex combination_at(std::span<const Complex> zeros, std::span<const double> weights, Complex u);

// prod (u - z_k).
Complex product_at(std::span<const Complex> zeros, Complex u);

// Roots of u^2 + b u + c by the quadratic formula.
std::pair<Complex, Complex> quadratic_roots(Complex b, Complex c);

// Unoriented angle at u between rays to a and b, via the argument of a quotient.
double angle_at(Complex u, Complex a, Complex b);

// Uniform points of the closed lune by rejection from its bounding box.
std::vector<Complex> sample_lune(const lune::ChordArc& chord, std::size_t count, std::mt19937_64& rng);

// Uniform points of the closed unit disk.
std::vector<Complex> sample_disk(std::size_t count, std::mt19937_64& rng);

// Distance from u to the boundary of the lune (chord segment plus arc).
double distance_to_lune_boundary(Complex u, const lune::ChordArc& chord);

}  // namespace oracle
