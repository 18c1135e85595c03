#pragma once

#include <array>

#include "potalg/groebner.hpp"
#include "potalg/linalg.hpp"

namespace potalg {

/// An exact matrix between graded slices of the algebra, with explicit
/// normal-word bases.  Basis entries carry a copy index for A^2 summands.
/// Columns are stored sparsely (row index, value); dense() materializes the
/// full matrix with rows = codomain basis, columns = domain basis.
struct GradedMap {
  int domain_degree = 0;
  int codomain_degree = 0;
  std::vector<std::pair<Word, int>> domain_basis;
  std::vector<std::pair<Word, int>> codomain_basis;
  std::vector<SparseCol> columns;

  QMatrix dense() const;
  long rank() const { return rank_sparse(columns); }
};

/// True iff outer(inner(.)) is the zero map (column-wise sparse check).
bool compose_is_zero(const GradedMap& outer, const GradedMap& inner);

/// The degree-k slice  0 -> A_k -> A_{k+1}^2 -> A_{k+n}^2 -> A_{k+n+1} -> 0
/// of the potential complex, for a homogeneous potential of degree n+1.
struct SliceMaps {
  GradedMap d3;  // u |-> (xu, yu)
  GradedMap d2;  // Hessian, entries multiplying on the left
  GradedMap d1;  // (u, v) |-> xu + yv
};

/// Exactness at the three positions right of A_k, plus the alternating-sum
/// defect b_k - 2 b_{k+1} + 2 b_{k+n} - b_{k+n+1}.
struct SliceReport {
  int k = 0;
  std::array<long long, 4> dims{};   // b_k, 2b_{k+1}, 2b_{k+n}, b_{k+n+1}
  std::array<long long, 3> ranks{};  // d3, d2, d1
  std::array<bool, 3> exact_at{};    // at A^2_{k+1}, A^2_{k+n}, A_{k+n+1}
  long long euler_defect = 0;
};

/// Normal words of one degree, ascending in the basis order.
std::vector<Word> normal_word_basis(const TruncatedGB& gb, int degree);

/// Requires F homogeneous (degree >= 3) and a basis certified through
/// degree k+n+1; StalenessError otherwise.
SliceMaps build_slice(const Potential& F, const TruncatedGB& gb, int k);

/// d1 o d2 = 0 and d2 o d3 = 0 on every slice whose top degree fits within
/// max_degree.
bool verify_chain(const Potential& F, const TruncatedGB& gb, int max_degree);

SliceReport slice_exactness(const Potential& F, const TruncatedGB& gb, int k);

}  // namespace potalg
