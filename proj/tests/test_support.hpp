#pragma once

#include <gmpxx.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "potalg/ncpoly.hpp"
#include "potalg/parse.hpp"

namespace potalg::test {

/// Independent representation for the multiplication oracle: plain letter
/// strings mapped to GMP rationals, no shared code with NcPoly.
using FlatPoly = std::map<std::string, mpq_class>;

inline FlatPoly flatten(const NcPoly& f) {
  FlatPoly out;
  for (const auto& [w, c] : f.terms()) out[w.letters()] = c.rational_value();
  return out;
}

inline FlatPoly naive_mul(const FlatPoly& a, const FlatPoly& b) {
  FlatPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      mpq_class prod = ca * cb;
      auto it = out.find(wa + wb);
      if (it == out.end())
        out.emplace(wa + wb, prod);
      else
        it->second += prod;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline Word random_word(std::mt19937_64& rng, int min_deg, int max_deg,
                        int alphabet = 2) {
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  std::uniform_int_distribution<int> letter(0, alphabet - 1);
  std::string s(size_t(deg(rng)), char(0));
  for (char& c : s) c = char(letter(rng));
  return Word(std::move(s));
}

inline Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  return Scalar(num(rng), den(rng));
}

inline NcPoly random_poly(std::mt19937_64& rng, int max_support, int min_deg,
                          int max_deg, int alphabet = 2) {
  std::uniform_int_distribution<int> count(0, max_support);
  NcPoly f(alphabet);
  int terms = count(rng);
  for (int t = 0; t < terms; ++t)
    f.add_term(random_word(rng, min_deg, max_deg, alphabet),
               random_scalar(rng));
  return f;
}

/// Exhaustive census oracle: count words avoiding all forbidden factors by
/// direct enumeration.
inline std::vector<long> census_by_enumeration(
    const std::vector<Word>& forbidden, int max_deg, int alphabet = 2) {
  std::vector<long> counts;
  for (int d = 0; d <= max_deg; ++d) {
    long n = 0;
    for (const Word& w : all_words(d, alphabet)) {
      bool ok = true;
      for (const Word& f : forbidden)
        if (w.contains_factor(f)) {
          ok = false;
          break;
        }
      if (ok) ++n;
    }
    counts.push_back(n);
  }
  return counts;
}

}  // namespace potalg::test
