#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "potalg/errors.hpp"

namespace potalg {

enum class FieldKind { Rationals, PrimeField };

inline constexpr std::uint64_t kDefaultPrime = 2147483629ULL;

/// Coefficient field selector: exact rationals (default) or Z/p.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t prime = 0;  // 0 for rationals

  static FieldSpec rationals() { return FieldSpec{FieldKind::Rationals, 0}; }
  static FieldSpec prime_field(std::uint64_t p = kDefaultPrime);

  bool operator==(const FieldSpec&) const = default;
  std::string description() const;
};

/// An exact field element: arbitrary-precision rational, or a residue mod a
/// prime.  All arithmetic is exact; mixing fields raises StructuralError.
/// Rationals are kept in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar() : q_(0) {}
  Scalar(long n) : q_(static_cast<long>(n)) {}  // NOLINT: implicit by design
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q);

  static Scalar modular(std::uint64_t value, std::uint64_t prime);
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  /// The integer v embedded in the given field.
  static Scalar integer(long v, const FieldSpec& f);
  /// Parse "p", "-p" or "p/q" into the given field.
  static Scalar parse(const std::string& text, const FieldSpec& f);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t prime() const { return p_; }
  FieldSpec field() const;

  bool is_zero() const;
  bool is_one() const;
  /// Sign of a rational (-1, 0, 1).  Undefined over Z/p.
  int sign() const;

  const mpq_class& rational_value() const;
  std::uint64_t modular_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar reciprocal() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "p", "-p/q" for rationals; the canonical residue for Z/p.
  std::string str() const;

 private:
  void check_same_field(const Scalar& o) const;

  mpq_class q_;           // valid when p_ == 0
  std::uint64_t r_ = 0;   // valid when p_ != 0
  std::uint64_t p_ = 0;   // 0 = rationals
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace potalg
