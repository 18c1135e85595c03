#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "potalg/scalar.hpp"
#include "potalg/word.hpp"

namespace potalg {

/// A noncommutative polynomial: finitely supported Word -> Scalar map over a
/// fixed alphabet.  Zero coefficients are never stored; terms are kept in the
/// canonical internal order (WordKeyLess) for deterministic iteration.
class NcPoly {
 public:
  using TermMap = std::map<Word, Scalar, WordKeyLess>;

  explicit NcPoly(int alphabet = 2) : alphabet_(alphabet) {}

  static NcPoly zero(int alphabet = 2) { return NcPoly(alphabet); }
  static NcPoly unit(int alphabet = 2) {
    return term(Word(), Scalar(1), alphabet);
  }
  static NcPoly term(const Word& w, const Scalar& c, int alphabet = 2);
  static NcPoly letter(int idx, int alphabet = 2) {
    return term(Word::single(idx), Scalar(1), alphabet);
  }

  int alphabet_size() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  int support_size() const { return static_cast<int>(terms_.size()); }
  const TermMap& terms() const { return terms_; }
  Scalar coeff(const Word& w) const;

  /// Accumulates c on w, pruning the term if the sum vanishes.
  void add_term(const Word& w, const Scalar& c);

  /// Maximal word length in the support; -1 for the zero polynomial.
  int degree() const;
  /// Minimal word length in the support; -1 for the zero polynomial.
  int valuation() const;
  bool is_homogeneous() const;
  NcPoly homogeneous_component(int d) const;
  /// Terms of degree < n (the truncation projection).
  NcPoly truncate_below(int n) const;

  NcPoly operator-() const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Scalar& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(NcPoly a, const Scalar& c) { return a *= c; }
  friend NcPoly operator*(const Scalar& c, NcPoly a) { return a *= c; }
  NcPoly operator*(const NcPoly& o) const;

  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

 private:
  void check_alphabet(const NcPoly& o) const;

  int alphabet_;
  TermMap terms_;
};

/// Free-algebra product (bilinear extension of concatenation).
NcPoly nc_mul(const NcPoly& f, const NcPoly& g);

/// The ord-maximal word of the support with its coefficient.
/// DomainError on the zero polynomial.
std::pair<Word, Scalar> leading_term(const NcPoly& f, const MonomialOrder& ord);

/// u * f * v with u, v words.
NcPoly sandwich(const Word& u, const NcPoly& f, const Word& v);

/// f^n by repeated multiplication; n >= 0.
NcPoly nc_pow(const NcPoly& f, int n);

/// Canonical text form: terms descending in ord, reduced fraction
/// coefficients, e.g. "x*y + y*x + y^2".
std::string to_text(const NcPoly& f,
                    const MonomialOrder& ord = MonomialOrder::deglex());

std::ostream& operator<<(std::ostream& os, const NcPoly& f);

}  // namespace potalg
