#pragma once

#include <span>
#include <vector>

#include "wbayes/measure.hpp"

namespace wbayes {

// Hilbert-space algebra of B^2(P). All Density results are canonical
// representatives; operands must share grid and reference.

/// f (+)_P g: pointwise product of P-densities.
Density perturb(const Density& f, const Density& g);
/// alpha (.)_P f: pointwise power of a P-density.
Density power(double alpha, const Density& f);
/// (-1) (.)_P f
Density inverse(const Density& f);
/// f (-)_P g
Density subtract(const Density& f, const Density& g);

/// <f, g>_B(P), evaluated in clr_P coordinates.
double inner_product(const Density& f, const Density& g);
double norm(const Density& f);
double distance(const Density& f, const Density& g);

/// (1/N) (.)_P (+)_i f_i, accumulated in log space.
Density sample_mean(std::span<const Density> sample);
/// f_i (-)_P mean, for every element.
std::vector<Density> center(std::span<const Density> sample);

}  // namespace wbayes
