#include "potalg/cpoly.hpp"

#include <ostream>
#include <vector>

#include "potalg/errors.hpp"
#include "potalg/word.hpp"

namespace potalg {

CPoly CPoly::term(Expo e, const Scalar& c) {
  CPoly f;
  if (!c.is_zero()) f.terms_.emplace(e, c);
  return f;
}

Scalar CPoly::coeff(Expo e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void CPoly::add_term(Expo e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int CPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.degree());
  return d;
}

std::pair<Expo, Scalar> CPoly::leading() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

CPoly CPoly::operator-() const {
  CPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CPoly& CPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

CPoly CPoly::operator*(const CPoly& o) const {
  CPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

namespace {
std::string expo_str(Expo e) {
  if (e.i == 0 && e.j == 0) return "1";
  std::string s;
  if (e.i > 0) {
    s += letter_name(0);
    if (e.i > 1) s += "^" + std::to_string(e.i);
  }
  if (e.j > 0) {
    if (!s.empty()) s += "*";
    s += letter_name(1);
    if (e.j > 1) s += "^" + std::to_string(e.j);
  }
  return s;
}
}  // namespace

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  // descending lex, matching the noncommutative canonical form style
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Scalar c = it->second;
    bool negative = c.is_rational() && c.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    Expo e = it->first;
    if (e.i == 0 && e.j == 0) {
      out += c.str();
    } else if (c.is_one()) {
      out += expo_str(e);
    } else {
      out += c.str() + "*" + expo_str(e);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const CPoly& f) {
  return os << f.str();
}

}  // namespace potalg
