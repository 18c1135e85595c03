#pragma once

#include <random>
#include <vector>

#include "potalg/potential.hpp"

namespace potalg {

/// Seeded random cyclic potential with valuation exactly 3: 3..6 terms with
/// words of degree 3..5, numerators in [-9,9]\{0}, denominators in [1,9],
/// then symmetrized.  Draws again until the valuation lands on 3.
Potential random_cyclic_potential(std::mt19937_64& rng);

/// Same recipe with all words of one fixed degree; nonzero result.
Potential random_homogeneous_potential(std::mt19937_64& rng, int degree);

std::vector<Potential> random_cyclic_corpus(std::uint64_t seed, int count);
std::vector<Potential> random_homogeneous_corpus(std::uint64_t seed, int count,
                                                 int degree);

}  // namespace potalg
