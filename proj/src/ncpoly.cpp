#include "potalg/ncpoly.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

namespace potalg {

NcPoly NcPoly::term(const Word& w, const Scalar& c, int alphabet) {
  if (w.max_letter() >= alphabet)
    throw StructuralError("word letter outside alphabet");
  NcPoly f(alphabet);
  if (!c.is_zero()) f.terms_.emplace(w, c);
  return f;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int NcPoly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int NcPoly::valuation() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();
}

bool NcPoly::is_homogeneous() const {
  return terms_.empty() || degree() == valuation();
}

NcPoly NcPoly::homogeneous_component(int d) const {
  NcPoly out(alphabet_);
  for (const auto& [w, c] : terms_)
    if (w.degree() == d) out.terms_.emplace(w, c);
  return out;
}

NcPoly NcPoly::truncate_below(int n) const {
  NcPoly out(alphabet_);
  for (const auto& [w, c] : terms_) {
    if (w.degree() >= n) break;  // terms ascend by degree
    out.terms_.emplace(w, c);
  }
  return out;
}

void NcPoly::check_alphabet(const NcPoly& o) const {
  if (alphabet_ != o.alphabet_)
    throw StructuralError("alphabet mismatch: " + std::to_string(alphabet_) +
                          " vs " + std::to_string(o.alphabet_) + " letters");
}

NcPoly NcPoly::operator-() const {
  NcPoly out(alphabet_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
  return out;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_alphabet(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly NcPoly::operator*(const NcPoly& o) const { return nc_mul(*this, o); }

bool NcPoly::operator==(const NcPoly& o) const {
  return alphabet_ == o.alphabet_ && terms_ == o.terms_;
}

NcPoly nc_mul(const NcPoly& f, const NcPoly& g) {
  if (f.alphabet_size() != g.alphabet_size())
    throw StructuralError("alphabet mismatch in product");
  NcPoly out(f.alphabet_size());
  for (const auto& [wf, cf] : f.terms())
    for (const auto& [wg, cg] : g.terms()) out.add_term(wf * wg, cf * cg);
  return out;
}

std::pair<Word, Scalar> leading_term(const NcPoly& f,
                                     const MonomialOrder& ord) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

NcPoly sandwich(const Word& u, const NcPoly& f, const Word& v) {
  NcPoly out(f.alphabet_size());
  for (const auto& [w, c] : f.terms()) out.add_term(u * w * v, c);
  return out;
}

NcPoly nc_pow(const NcPoly& f, int n) {
  if (n < 0) throw DomainError("negative power of a polynomial");
  FieldSpec field = f.is_zero() ? FieldSpec::rationals()
                                : f.terms().begin()->second.field();
  NcPoly out = NcPoly::term(Word(), Scalar::one(field), f.alphabet_size());
  for (int i = 0; i < n; ++i) out = nc_mul(out, f);
  return out;
}

std::string to_text(const NcPoly& f, const MonomialOrder& ord) {
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const Word, Scalar>*> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](auto* a, auto* b) { return ord.less(b->first, a->first); });

  std::string out;
  bool first = true;
  for (auto* t : terms) {
    const Word& w = t->first;
    Scalar c = t->second;
    bool negative = c.is_rational() && c.sign() < 0;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) c = -c;
    if (w.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += w.str();
    } else {
      out += c.str() + "*" + w.str();
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const NcPoly& f) {
  return os << to_text(f);
}

}  // namespace potalg
