#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "potalg/automaton.hpp"
#include "potalg/scalar.hpp"

namespace potalg {

/// Dense univariate polynomial over Scalar (in the series variable t).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  static UniPoly constant(const Scalar& c) { return UniPoly({c}); }
  /// Polynomial c * t^k.
  static UniPoly monomial(const Scalar& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Scalar coeff(int k) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Scalar& c) const;
  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

  UniPoly derivative() const;
  /// Exact evaluation at a scalar point.
  Scalar eval(const Scalar& t0) const;
  /// Quotient and remainder by a nonzero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;  // coeffs_[k] multiplies t^k; trailing nonzero
};

/// Monic gcd over the coefficient field.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// A lazily extendable coefficient sequence.  Coefficients, once produced,
/// never change; extension past the known prefix either invokes the
/// generator or fails with DomainError when there is none.
class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Scalar> prefix);
  PowerSeries(std::vector<Scalar> prefix, std::function<Scalar(int)> generator);

  Scalar coeff(int k) const;
  int known_up_to() const;
  std::vector<Scalar> prefix(int n) const;  // coefficients 0..n

 private:
  struct State {
    std::vector<Scalar> coeffs;
    std::function<Scalar(int)> generator;
    mutable std::mutex mu;
  };
  std::shared_ptr<State> state_;
};

/// numerator/denominator pair with denominator(0) != 0; expansion follows
/// the linear recurrence induced by the denominator.
class RationalSeries {
 public:
  RationalSeries(UniPoly numerator, UniPoly denominator);

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }

  /// First N+1 Taylor coefficients, exact.
  std::vector<Scalar> expand_prefix(int n) const;
  /// Lazy expansion backed by the denominator recurrence.
  PowerSeries expand() const;

  /// gcd-reduced with integer coefficients where possible and den(0) > 0.
  RationalSeries reduced() const;

  /// "num / den" with polynomials in t.
  std::string str() const;

 private:
  UniPoly num_, den_;
};

/// Degree-truncated expansion per the operation contract.
std::vector<Scalar> expand(const RationalSeries& rs, int n);

/// The Golod-Shafarevich comparison series 1/(1 - d t + sum s_k t^k).
RationalSeries gs_series(int generators,
                         const std::map<int, long>& relation_counts);

/// Tail variant: `tail_count` relations in every degree >= tail_start, on
/// top of the finitely supported counts.
RationalSeries gs_series_with_tail(int generators,
                                   const std::map<int, long>& relation_counts,
                                   int tail_start, long tail_count);

/// The |H| operator: coefficients copied until the first negative one, zeros
/// afterwards; also reports the index of the first negative coefficient in
/// [0, N] when present.
std::pair<std::vector<Scalar>, std::optional<int>> abs_truncate(
    const PowerSeries& ps, int n);

/// Exact rational evaluation (signature of the operation contract).
Scalar eval_exact(const UniPoly& p, const Scalar& t0);

/// Census of factor-avoiding words plus the exact rational generating
/// function recovered from the avoidance automaton (minimal denominator,
/// certified by the automaton state-count bound).
std::pair<std::vector<mpz_class>, RationalSeries> hilbert_from_forbidden(
    const std::vector<Word>& leading_words, int n, int alphabet = 2);

/// a_i >= b_i for all i <= n (rational coefficients).
bool coefficientwise_geq(const PowerSeries& a, const PowerSeries& b, int n);

/// Minimal linear recurrence (Berlekamp-Massey over the field); returns the
/// connection polynomial c with c(0) = 1 such that sum_j c_j a_{k-j} = 0 for
/// all k >= len(c)-1 within the prefix.
UniPoly minimal_recurrence(const std::vector<Scalar>& seq);

/// "1, 2, 4, 6, 9, ..." rendering used by the CLI.
std::string series_head_str(const std::vector<Scalar>& coeffs);

}  // namespace potalg
