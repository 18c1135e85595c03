#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "potalg/errors.hpp"

namespace potalg {

/// Letter names used for printing: index 0 is "x", 1 is "y", then z, w.
std::string letter_name(int index);
/// Inverse of letter_name for single-character names; -1 if unknown.
int letter_index(char name);

/// A word over a fixed alphabet, stored as packed letter indices.
/// The empty word is the multiplicative identity; degree = length.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  static Word single(int letter) { return Word(std::string(1, char(letter))); }
  static Word power(int letter, int exponent) {
    return Word(std::string(static_cast<size_t>(exponent), char(letter)));
  }

  int degree() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int letter(int i) const { return letters_[static_cast<size_t>(i)]; }
  int max_letter() const;
  const std::string& letters() const { return letters_; }

  Word operator*(const Word& o) const { return Word(letters_ + o.letters_); }

  /// First letter moved to the end; identity on the empty word.
  Word rotated() const;

  bool contains_factor(const Word& f) const;
  Word prefix(int len) const { return Word(letters_.substr(0, size_t(len))); }
  Word suffix(int len) const {
    return Word(letters_.substr(letters_.size() - size_t(len)));
  }
  Word slice(int from, int len) const {
    return Word(letters_.substr(size_t(from), size_t(len)));
  }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }

  /// Human-readable form with powers collapsed, e.g. "x^2*y"; "1" when empty.
  std::string str() const;

 private:
  std::string letters_;
};

Word rotate_word(const Word& w);

struct WordHash {
  size_t operator()(const Word& w) const {
    return std::hash<std::string>()(w.letters());
  }
};

/// Degree-lexicographic order with a configurable letter precedence.
/// Total, degree-compatible and multiplicative; default precedence x > y.
class MonomialOrder {
 public:
  /// precedence[r] = letter index of rank r (rank 0 compares greatest).
  static MonomialOrder deglex(std::vector<int> precedence = {0, 1});

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  /// Usable directly as a std::map comparator.
  bool operator()(const Word& a, const Word& b) const { return less(a, b); }

  int alphabet_size() const { return static_cast<int>(rank_.size()); }
  /// e.g. "deglex letters=x>y"
  std::string description() const;

 private:
  std::vector<int> rank_;  // rank_[letter] = precedence position, 0 greatest
};

/// Structural comparator equal to deglex with precedence x > y; used as the
/// canonical internal term order so polynomial storage is deterministic.
struct WordKeyLess {
  bool operator()(const Word& a, const Word& b) const;
};

/// All words of the given degree over the alphabet, ascending in WordKeyLess.
std::vector<Word> all_words(int degree, int alphabet);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace potalg
