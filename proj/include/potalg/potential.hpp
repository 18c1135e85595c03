#pragma once

#include <array>
#include <utility>

#include "potalg/cpoly.hpp"
#include "potalg/ncpoly.hpp"

namespace potalg {

/// Sum of all cyclic rotations of w, repeated rotations counted with
/// multiplicity (so x^3 maps to 3*x^3).
NcPoly cyclic_symmetrize(const Word& w, int alphabet = 2);
/// Linear extension to polynomials.
NcPoly cyclic_symmetrize(const NcPoly& f);

/// Termwise one-step rotation of every word.
NcPoly rotate_terms(const NcPoly& f);

/// True iff the termwise rotation operator fixes f.
bool is_cyclic_invariant(const NcPoly& f);

/// The cyclic derivative: sends a word starting with `letter` to its tail,
/// every other word to zero; extended linearly.
NcPoly partial_derivative(const NcPoly& f, int letter);

/// (F - sum letter*dF, F - sum dF*letter).  First component vanishes for any
/// F with zero constant term; the second vanishes iff F is cyclic invariant.
/// DomainError if F has a constant term.
std::pair<NcPoly, NcPoly> euler_defects(const NcPoly& f);

/// Sum of commutators [letter, d_letter F]; zero iff F is cyclic invariant.
/// DomainError if F has constant or linear terms.
NcPoly syzygy_defect(const NcPoly& f);

/// Image in the commutative polynomial ring (two letters only).
CPoly abelianize(const NcPoly& f);

/// A cyclically invariant polynomial on {x, y} with valuation >= 3.
class Potential {
 public:
  /// Validates alphabet, cyclic invariance and valuation.
  explicit Potential(NcPoly body);
  /// Escape hatch: skips validation (for property tests on raw inputs).
  static Potential unchecked(NcPoly body);

  const NcPoly& body() const { return body_; }
  int valuation() const { return body_.valuation(); }
  int degree() const { return body_.degree(); }
  bool is_homogeneous() const { return body_.is_homogeneous(); }

  NcPoly dx() const { return partial_derivative(body_, 0); }
  NcPoly dy() const { return partial_derivative(body_, 1); }
  std::array<NcPoly, 2> derivatives() const { return {dx(), dy()}; }
  /// The nonzero derivatives (defining relations of the potential algebra).
  std::vector<NcPoly> relations() const;

 private:
  struct Unchecked {};
  Potential(NcPoly body, Unchecked) : body_(std::move(body)) {}
  NcPoly body_;
};

/// 2x2 array of second cyclic derivatives; entry(i, j) = d_i d_j F.
struct Hessian {
  std::array<std::array<NcPoly, 2>, 2> entries;
  const NcPoly& entry(int i, int j) const { return entries[size_t(i)][size_t(j)]; }
};

Hessian hessian(const Potential& F);

/// Substitute x -> m[0][0] x + m[0][1] y, y -> m[1][0] x + m[1][1] y.
/// DomainError on singular m.  The result is again a valid potential.
Potential linear_substitute(const Potential& F,
                            const std::array<std::array<Scalar, 2>, 2>& m);

}  // namespace potalg
