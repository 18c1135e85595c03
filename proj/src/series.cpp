#include "potalg/series.hpp"

#include <algorithm>

#include "potalg/errors.hpp"

namespace potalg {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

UniPoly UniPoly::monomial(const Scalar& c, int k) {
  std::vector<Scalar> v(size_t(k) + 1, Scalar(0));
  v[size_t(k)] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Scalar(0);
  return coeffs_[size_t(k)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = coeff(int(i)) + o.coeff(int(i));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Scalar> v(std::max(coeffs_.size(), o.coeffs_.size()), Scalar(0));
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = coeff(int(i)) - o.coeff(int(i));
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Scalar> v(coeffs_.size() + o.coeffs_.size() - 1, Scalar(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Scalar& c) const {
  std::vector<Scalar> v = coeffs_;
  for (auto& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Scalar> v(coeffs_.size() - 1, Scalar(0));
  for (size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Scalar::integer(long(i), coeffs_[i].field());
  return UniPoly(std::move(v));
}

Scalar UniPoly::eval(const Scalar& t0) const {
  Scalar acc = Scalar::zero(t0.field());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t0 + *it;
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  UniPoly r = *this;
  std::vector<Scalar> q(degree() >= d.degree()
                            ? size_t(degree() - d.degree()) + 1
                            : 0,
                        Scalar(0));
  Scalar lead_inv = d.coeffs_.back().reciprocal();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Scalar f = r.coeffs_.back() * lead_inv;
    q[size_t(shift)] = f;
    for (int i = 0; i <= d.degree(); ++i)
      r.coeffs_[size_t(i + shift)] -= f * d.coeffs_[size_t(i)];
    r.trim();
  }
  return {UniPoly(std::move(q)), r};
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    Scalar c = coeff(k);
    if (c.is_zero()) continue;
    bool negative = c.is_rational() && c.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    if (k == 0) {
      out += c.str();
    } else {
      std::string pow = k == 1 ? var : var + "^" + std::to_string(k);
      out += c.is_one() ? pow : c.str() + "*" + pow;
    }
  }
  return out;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * a.coeffs().back().reciprocal();
}

PowerSeries::PowerSeries(std::vector<Scalar> prefix)
    : state_(std::make_shared<State>()) {
  state_->coeffs = std::move(prefix);
}

PowerSeries::PowerSeries(std::vector<Scalar> prefix,
                         std::function<Scalar(int)> generator)
    : state_(std::make_shared<State>()) {
  state_->coeffs = std::move(prefix);
  state_->generator = std::move(generator);
}

Scalar PowerSeries::coeff(int k) const {
  if (k < 0) throw DomainError("negative series index");
  std::lock_guard<std::mutex> lock(state_->mu);
  while (static_cast<int>(state_->coeffs.size()) <= k) {
    if (!state_->generator)
      throw DomainError("series coefficient " + std::to_string(k) +
                        " beyond known prefix");
    state_->coeffs.push_back(
        state_->generator(static_cast<int>(state_->coeffs.size())));
  }
  return state_->coeffs[size_t(k)];
}

int PowerSeries::known_up_to() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return static_cast<int>(state_->coeffs.size()) - 1;
}

std::vector<Scalar> PowerSeries::prefix(int n) const {
  std::vector<Scalar> out;
  out.reserve(size_t(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(coeff(k));
  return out;
}

RationalSeries::RationalSeries(UniPoly numerator, UniPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.coeff(0).is_zero())
    throw DomainError("denominator has zero constant term");
}

std::vector<Scalar> RationalSeries::expand_prefix(int n) const {
  std::vector<Scalar> a;
  a.reserve(size_t(n) + 1);
  Scalar d0_inv = den_.coeff(0).reciprocal();
  for (int k = 0; k <= n; ++k) {
    Scalar acc = num_.coeff(k);
    int top = std::min(k, den_.degree());
    for (int i = 1; i <= top; ++i) acc -= den_.coeff(i) * a[size_t(k - i)];
    a.push_back(acc * d0_inv);
  }
  return a;
}

PowerSeries RationalSeries::expand() const {
  RationalSeries self = *this;
  auto cache = std::make_shared<std::vector<Scalar>>();
  auto gen = [self, cache](int k) -> Scalar {
    while (static_cast<int>(cache->size()) <= k) {
      int m = static_cast<int>(cache->size());
      Scalar acc = self.num_.coeff(m);
      int top = std::min(m, self.den_.degree());
      for (int i = 1; i <= top; ++i)
        acc -= self.den_.coeff(i) * (*cache)[size_t(m - i)];
      cache->push_back(acc / self.den_.coeff(0));
    }
    return (*cache)[size_t(k)];
  };
  return PowerSeries({}, std::move(gen));
}

RationalSeries RationalSeries::reduced() const {
  UniPoly g = poly_gcd(num_, den_);
  UniPoly n = num_, d = den_;
  if (!g.is_zero() && g.degree() > 0) {
    n = num_.divmod(g).first;
    d = den_.divmod(g).first;
  }
  if (!d.coeff(0).is_rational()) {
    Scalar inv = d.coeff(0).reciprocal();
    return RationalSeries(n * inv, d * inv);
  }
  // clear rational denominators, divide by integer content, den(0) > 0
  mpz_class lcm = 1;
  auto fold_lcm = [&lcm](const UniPoly& p) {
    for (const Scalar& c : p.coeffs()) {
      mpz_class gg;
      const mpz_class& den = c.rational_value().get_den();
      mpz_gcd(gg.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / gg * den;
    }
  };
  fold_lcm(n);
  fold_lcm(d);
  n = n * Scalar(mpq_class(lcm));
  d = d * Scalar(mpq_class(lcm));
  mpz_class content = 0;
  auto fold_content = [&content](const UniPoly& p) {
    for (const Scalar& c : p.coeffs())
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
              c.rational_value().get_num().get_mpz_t());
  };
  fold_content(n);
  fold_content(d);
  if (content != 0) {
    Scalar inv(mpq_class(mpz_class(1), content));
    n = n * inv;
    d = d * inv;
  }
  if (d.coeff(0).sign() < 0) {
    n = n * Scalar(-1);
    d = d * Scalar(-1);
  }
  return RationalSeries(n, d);
}

std::string RationalSeries::str() const {
  std::string num = num_.str();
  std::string den = den_.str();
  if (num_.degree() > 0) num = "(" + num + ")";
  if (den_.degree() > 0) den = "(" + den + ")";
  return num + " / " + den;
}

std::vector<Scalar> expand(const RationalSeries& rs, int n) {
  return rs.expand_prefix(n);
}

RationalSeries gs_series(int generators,
                         const std::map<int, long>& relation_counts) {
  if (generators < 1) throw DomainError("need at least one generator");
  int top = 1;
  for (const auto& [deg, count] : relation_counts) {
    if (deg < 2) throw DomainError("relation degrees start at 2");
    if (count < 0) throw DomainError("negative relation count");
    if (count > 0) top = std::max(top, deg);
  }
  std::vector<Scalar> den(size_t(top) + 1, Scalar(0));
  den[0] = Scalar(1);
  den[1] = Scalar(-long(generators));
  for (const auto& [deg, count] : relation_counts)
    den[size_t(deg)] += Scalar(count);
  return RationalSeries(UniPoly::constant(Scalar(1)), UniPoly(std::move(den)));
}

RationalSeries gs_series_with_tail(int generators,
                                   const std::map<int, long>& relation_counts,
                                   int tail_start, long tail_count) {
  if (tail_start < 2) throw DomainError("tail must start at degree >= 2");
  if (tail_count < 0) throw DomainError("negative relation count");
  for (const auto& [deg, count] : relation_counts)
    if (count > 0 && deg >= tail_start)
      throw DomainError("finite counts must sit below the tail");
  RationalSeries base = gs_series(generators, relation_counts);
  UniPoly one_minus_t(std::vector<Scalar>{Scalar(1), Scalar(-1)});
  UniPoly den = one_minus_t * base.denominator() +
                UniPoly::monomial(Scalar(tail_count), tail_start);
  return RationalSeries(one_minus_t, den);
}

std::pair<std::vector<Scalar>, std::optional<int>> abs_truncate(
    const PowerSeries& ps, int n) {
  std::vector<Scalar> out;
  out.reserve(size_t(n) + 1);
  std::optional<int> first_negative;
  for (int k = 0; k <= n; ++k) {
    if (first_negative) {
      out.push_back(Scalar(0));
      continue;
    }
    Scalar c = ps.coeff(k);
    if (c.sign() < 0) {
      first_negative = k;
      out.push_back(Scalar(0));
    } else {
      out.push_back(c);
    }
  }
  return {std::move(out), first_negative};
}

Scalar eval_exact(const UniPoly& p, const Scalar& t0) { return p.eval(t0); }

UniPoly minimal_recurrence(const std::vector<Scalar>& seq) {
  // Berlekamp-Massey over the coefficient field
  std::vector<Scalar> c{Scalar(1)}, b{Scalar(1)};
  int L = 0, m = 1;
  Scalar coef_b(1);
  for (size_t i = 0; i < seq.size(); ++i) {
    Scalar delta = seq[i];
    for (int j = 1; j <= L; ++j)
      delta += c[size_t(j)] * seq[i - size_t(j)];
    if (delta.is_zero()) {
      ++m;
      continue;
    }
    std::vector<Scalar> t = c;
    Scalar f = delta / coef_b;
    if (c.size() < b.size() + size_t(m)) c.resize(b.size() + size_t(m), Scalar(0));
    for (size_t j = 0; j < b.size(); ++j) c[size_t(m) + j] -= f * b[j];
    if (2 * L <= static_cast<int>(i)) {
      L = static_cast<int>(i) + 1 - L;
      b = std::move(t);
      coef_b = delta;
      m = 1;
    } else {
      ++m;
    }
  }
  c.resize(size_t(L) + 1);
  return UniPoly(std::move(c));
}

std::pair<std::vector<mpz_class>, RationalSeries> hilbert_from_forbidden(
    const std::vector<Word>& leading_words, int n, int alphabet) {
  FactorAvoidanceAutomaton automaton(leading_words, alphabet);
  int states = std::max(automaton.state_count(), 1);
  int depth = std::max(n, 2 * states + 4);
  std::vector<mpz_class> counts = automaton.census(depth);

  std::vector<Scalar> seq;
  seq.reserve(counts.size());
  for (const mpz_class& v : counts) seq.emplace_back(mpq_class(v));
  UniPoly den = minimal_recurrence(seq);

  // numerator = den * series; the recurrence makes it a polynomial whose
  // support the computed range certifies
  std::vector<Scalar> prod(seq.size(), Scalar(0));
  for (size_t k = 0; k < seq.size(); ++k) {
    Scalar acc(0);
    for (int i = 0; i <= std::min(int(k), den.degree()); ++i)
      acc += den.coeff(i) * seq[k - size_t(i)];
    prod[k] = acc;
  }
  UniPoly num(std::move(prod));

  RationalSeries rs = RationalSeries(num, den).reduced();
  // certificate: the rational form must reproduce the census on the range
  // that pins it down (2 * state count + slack)
  std::vector<Scalar> back = rs.expand_prefix(depth);
  for (size_t k = 0; k < seq.size(); ++k)
    if (back[k] != seq[k])
      throw DomainError("rational form fails to reproduce the census");
  counts.resize(size_t(n) + 1);
  return {std::move(counts), std::move(rs)};
}

bool coefficientwise_geq(const PowerSeries& a, const PowerSeries& b, int n) {
  for (int k = 0; k <= n; ++k)
    if ((a.coeff(k) - b.coeff(k)).sign() < 0) return false;
  return true;
}

std::string series_head_str(const std::vector<Scalar>& coeffs) {
  std::string out;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ", ";
    out += coeffs[i].str();
  }
  return out;
}

}  // namespace potalg
