#include "potalg/scalar.hpp"

#include <ostream>

namespace potalg {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid over signed 128-bit to avoid overflow
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                              19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 62)) throw StructuralError("prime too large");
  if (!is_prime_u64(p))
    throw StructuralError("Z/p modulus " + std::to_string(p) + " is not prime");
  return FieldSpec{FieldKind::PrimeField, p};
}

std::string FieldSpec::description() const {
  if (kind == FieldKind::Rationals) return "Q";
  return "Z/" + std::to_string(prime);
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Scalar::Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Scalar Scalar::modular(std::uint64_t value, std::uint64_t prime) {
  if (prime == 0) throw StructuralError("modulus must be nonzero");
  Scalar s;
  s.p_ = prime;
  s.r_ = value % prime;
  return s;
}

Scalar Scalar::zero(const FieldSpec& f) {
  return f.kind == FieldKind::Rationals ? Scalar(0) : modular(0, f.prime);
}

Scalar Scalar::one(const FieldSpec& f) {
  return f.kind == FieldKind::Rationals ? Scalar(1) : modular(1, f.prime);
}

Scalar Scalar::integer(long v, const FieldSpec& f) {
  if (f.kind == FieldKind::Rationals) return Scalar(v);
  long r = v % static_cast<long>(f.prime);
  if (r < 0) r += static_cast<long>(f.prime);
  return modular(static_cast<std::uint64_t>(r), f.prime);
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw DomainError("bad rational: " + text);
  if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
  q.canonicalize();
  if (f.kind == FieldKind::Rationals) return Scalar(q);
  mpz_class p_mpz(static_cast<unsigned long>(f.prime));
  mpz_class num = q.get_num() % p_mpz;
  if (num < 0) num += p_mpz;
  mpz_class den = q.get_den() % p_mpz;
  Scalar n = modular(num.get_ui(), f.prime);
  Scalar d = modular(den.get_ui(), f.prime);
  return n / d;
}

FieldSpec Scalar::field() const {
  return p_ == 0 ? FieldSpec::rationals() : FieldSpec{FieldKind::PrimeField, p_};
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

int Scalar::sign() const {
  if (p_ != 0) throw DomainError("sign undefined over Z/p");
  return sgn(q_);
}

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw StructuralError("not a rational scalar");
  return q_;
}

std::uint64_t Scalar::modular_value() const {
  if (p_ == 0) throw StructuralError("not a Z/p scalar");
  return r_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_)
    throw StructuralError("scalar field mismatch: " + field().description() +
                          " vs " + o.field().description());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= p_) r_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    r_ = (r_ >= o.r_) ? r_ - o.r_ : r_ + p_ - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (p_ == 0)
    q_ *= o.q_;
  else
    r_ = mulmod(r_, o.r_, p_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  if (o.is_zero()) throw DomainError("division by zero");
  if (p_ == 0)
    q_ /= o.q_;
  else
    r_ = mulmod(r_, invmod(o.r_, p_), p_);
  return *this;
}

Scalar Scalar::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = 1 / q_;
  else
    s.r_ = invmod(r_, p_);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace potalg
