#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "potalg/scalar.hpp"

namespace potalg {

/// Exponent pair for x^i * y^j.
struct Expo {
  int i = 0;
  int j = 0;
  bool operator==(const Expo&) const = default;
  int degree() const { return i + j; }
  bool divides(const Expo& o) const { return i <= o.i && j <= o.j; }
  Expo operator+(const Expo& o) const { return {i + o.i, j + o.j}; }
  Expo operator-(const Expo& o) const { return {i - o.i, j - o.j}; }
  static Expo lcm(const Expo& a, const Expo& b) {
    return {a.i > b.i ? a.i : b.i, a.j > b.j ? a.j : b.j};
  }
};

/// Lexicographic order with x > y: compare i, then j.  Ascending comparator.
struct ExpoLexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

/// A commutative polynomial in two variables with exact coefficients.
class CPoly {
 public:
  using TermMap = std::map<Expo, Scalar, ExpoLexLess>;

  CPoly() = default;
  static CPoly term(Expo e, const Scalar& c);
  static CPoly constant(const Scalar& c) { return term({0, 0}, c); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Scalar coeff(Expo e) const;
  void add_term(Expo e, const Scalar& c);
  int degree() const;  // total degree; -1 for zero

  /// Lex-leading monomial and coefficient; DomainError on zero.
  std::pair<Expo, Scalar> leading() const;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const Scalar& c);
  CPoly operator*(const CPoly& o) const;
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const Scalar& c, CPoly a) { return a *= c; }
  friend CPoly operator*(CPoly a, const Scalar& c) { return a *= c; }

  bool operator==(const CPoly& o) const { return terms_ == o.terms_; }

  std::string str() const;

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const CPoly& f);

}  // namespace potalg
