#pragma once

#include <vector>

#include "potalg/potential.hpp"
#include "potalg/word.hpp"

namespace potalg {

/// Root-multiplicity classes of the abelianized binary cubic.
enum class CubicTag { TripleRoot, DoubleRoot, ThreeDistinct };

std::string cubic_tag_name(CubicTag t);

/// Canonical data attached to a class: the canonical potential, its defining
/// relations, the (already complete) Groebner leading words, and the Hilbert
/// series head to depth 10.
struct CanonicalClassData {
  CubicTag tag;
  Potential potential;
  std::vector<NcPoly> relations;
  std::vector<Word> gb_leading_words;
  std::vector<Scalar> series_head;
};

/// Class of a nonzero homogeneous degree-3 potential, decided by the
/// gcd of the dehomogenized abelianization with its derivative (with the
/// root at infinity counted when the x^3 coefficient vanishes).  Rejects
/// base fields of characteristic 2 and 3.
CubicTag classify_cubic(const Potential& F);

CanonicalClassData canonical_data(CubicTag tag);

}  // namespace potalg
