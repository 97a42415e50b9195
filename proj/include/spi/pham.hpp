#pragma once

#include <utility>
#include <vector>

#include "spi/generator.hpp"

namespace spi {

enum class Axis { Alpha1, Alpha2 };

/// Sylvester resultant of f and g with respect to the eliminated variable,
/// as a polynomial in the other one. g must have a nonzero constant leading
/// coefficient in the eliminated variable. A zero resultant throws
/// DegenerateSystem.
UniPoly sylvester_resultant(const BiPoly& f, const BiPoly& g, Axis eliminate);

/// All solutions in GF(p)^2 of the Pham system d1 = d2 = 0, where
/// d1 = c1 * alpha1^(B+1) + (total degree <= B) and
/// d2 = c2 * alpha2^(B+1) + (total degree <= B), c1, c2 != 0.
/// Sorted lexicographically by residues; every pair is checked by
/// substitution.
std::vector<std::pair<Felt, Felt>> solve_pham(const BiPoly& d1,
                                              const BiPoly& d2, int B);

}  // namespace spi
