#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "potalg/automaton.hpp"
#include "potalg/ncpoly.hpp"
#include "potalg/potential.hpp"

namespace potalg {

/// Completeness certificate of a truncated basis.
///  - Saturated: every overlap ambiguity of the final elements resolved; the
///    basis is a full reduced Groebner basis of the ideal (Diamond Lemma).
///  - CompleteGraded: homogeneous input, every ambiguity of degree <= bound
///    resolved; leading words and normal words are exact through the bound.
///  - CompleteUpToBound: non-homogeneous input, ambiguities checked through
///    the bound only.
enum class GBCertificate { CompleteUpToBound, CompleteGraded, Saturated };

std::string certificate_name(GBCertificate c);

/// An overlap ambiguity left unchecked because it sits above the bound.
struct OverlapSite {
  size_t left = 0;
  size_t right = 0;
  Word ambiguity;
};

/// A monic, interreduced rewriting system with a degree bound and a
/// completeness certificate.  No element's leading word occurs as a factor
/// in another element's leading word.
class TruncatedGB {
 public:
  const std::vector<NcPoly>& elements() const { return elements_; }
  const MonomialOrder& order() const { return order_; }
  int degree_bound() const { return bound_; }
  GBCertificate certificate() const { return certificate_; }
  const std::vector<OverlapSite>& unresolved_overlaps() const {
    return unresolved_;
  }
  long overlaps_processed() const { return overlaps_processed_; }

  std::vector<Word> leading_words() const;
  /// Normal forms are trustworthy for inputs of degree <= d.
  bool covers_degree(int d) const;
  /// Graded dimensions via normal words are exact through degree d.
  bool graded_certified(int d) const;

  /// Header line plus one canonical-text element per line.
  std::string serialize() const;

 private:
  friend TruncatedGB complete(std::vector<NcPoly> relations, MonomialOrder ord,
                              int bound);
  TruncatedGB(MonomialOrder ord, int bound) : order_(std::move(ord)), bound_(bound) {}

  std::vector<NcPoly> elements_;
  MonomialOrder order_ = MonomialOrder::deglex();
  int bound_ = 0;
  GBCertificate certificate_ = GBCertificate::CompleteUpToBound;
  std::vector<OverlapSite> unresolved_;
  long overlaps_processed_ = 0;
};

/// Overlap completion truncated at the degree bound.  Deterministic:
/// relations are canonicalized on entry and ambiguities processed smallest
/// first (total degree, then monomial order).
TruncatedGB complete(std::vector<NcPoly> relations, MonomialOrder ord,
                     int bound);

/// Total reduction: no word of the result contains any leading word of G as
/// a factor.  StalenessError when f exceeds the certified range.
NcPoly normal_form(const NcPoly& f, const TruncatedGB& g);

/// Reduction with randomized rule/occurrence choices; for a complete basis
/// the result agrees with normal_form on every path.
NcPoly normal_form_randomized(const NcPoly& f, const TruncatedGB& g,
                              std::mt19937_64& rng);

/// Counts per degree of words avoiding every leading word as a factor.
std::vector<mpz_class> normal_word_census(const std::vector<Word>& leading_words,
                                          int max_degree, int alphabet = 2);

/// Graded / filtered dimension report.
struct DimReport {
  enum class Method { NormalWords, BruteForceOracle, TruncatedQuotient };

  std::vector<long long> per_degree;
  std::optional<long long> total;  // nullopt = not finite / not certified
  Method method = Method::NormalWords;
  std::string verdict;  // probe only: "Stabilized(v)" or "Inconclusive"

  long long sum() const;
  static std::string method_name(Method m);
};

/// Dimensions of the graded slices through max_degree, from the normal-word
/// census of a graded-certified basis.
DimReport graded_dims(const TruncatedGB& gb, int max_degree);

/// Total dimension of the quotient from a Saturated basis: the normal-word
/// count when the leading-word ideal is cofinite, Infinite otherwise.
DimReport quotient_dim(const TruncatedGB& gb);

/// Anti-regression oracle: dim A_d = alphabet^d - rank of the span of all
/// u*g*v of degree d, by exact row reduction.  Relations must be homogeneous.
DimReport graded_dim_oracle(const std::vector<NcPoly>& relations,
                            int max_degree, const MonomialOrder& ord =
                                                MonomialOrder::deglex());

/// Dimension of span(words of degree < N) modulo the degree-N truncations of
/// all u*g*v over the derivative relations; pure linear algebra.
DimReport truncated_quotient_dim(const Potential& F, int N);

/// truncated_quotient_dim for N = 1..max_n with a stabilization verdict:
/// Stabilized(v) iff the last `window` values all equal v and the pivot-word
/// ideal of the final truncation is cofinite.
DimReport completion_dim_probe(const Potential& F, int max_n, int window);

}  // namespace potalg
