#pragma once

#include <optional>
#include <vector>

#include "potalg/cpoly.hpp"
#include "potalg/potential.hpp"

namespace potalg {

/// Reduced commutative Groebner basis in two variables under lex x > y.
std::vector<CPoly> buchberger_lex2(std::vector<CPoly> relations);

/// Number of standard monomials; nullopt when the staircase is not cofinite.
std::optional<long long> quotient_dim_comm(const std::vector<CPoly>& basis);

/// Lex normal form against a basis (used by tests and the gap analysis).
CPoly normal_form_comm(const CPoly& f, const std::vector<CPoly>& basis);

/// Gap analysis of the section-6 family.
struct GapReport {
  std::optional<long long> dim_a;  // nullopt = infinite
  long long dim_b = 0;
  std::optional<long long> gap;
  bool multiple_of_four = false;
  /// pairs (k, multiplicity) with k >= 2 summing to the gap, when one exists
  std::optional<std::vector<std::pair<int, long long>>> squares;
};

/// The potential x^2*y + xyx + yx^2 + xy^2 + yxy + y^2x + a(y) where
/// a = sum_{j=3}^{n} a_j y^j; coefficients indexed from a_3.
Potential family_potential(const std::vector<Scalar>& a_coeffs);

/// dim A from the noncommutative engine, dim B from the commutative one,
/// and the gap analysis.  a_coeffs = (a_3, ..., a_n), n > 3, a_n != 0.
GapReport wemyss_gap(const std::vector<Scalar>& a_coeffs);

/// A representation g = sum mult * k^2 with k >= 2 (largest square first
/// with backtracking), or nullopt when none exists.
std::optional<std::vector<std::pair<int, long long>>> squares_decomposition(
    long long g);

}  // namespace potalg
