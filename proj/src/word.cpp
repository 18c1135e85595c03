#include "potalg/word.hpp"

#include <algorithm>
#include <ostream>

namespace potalg {

namespace {
constexpr char kLetterNames[] = {'x', 'y', 'z', 'w'};
}

std::string letter_name(int index) {
  if (index >= 0 && index < 4) return std::string(1, kLetterNames[index]);
  return "g" + std::to_string(index);
}

int letter_index(char name) {
  for (int i = 0; i < 4; ++i)
    if (kLetterNames[i] == name) return i;
  return -1;
}

int Word::max_letter() const {
  int m = -1;
  for (char c : letters_) m = std::max(m, int(c));
  return m;
}

Word Word::rotated() const {
  if (letters_.size() <= 1) return *this;
  return Word(letters_.substr(1) + letters_[0]);
}

Word rotate_word(const Word& w) { return w.rotated(); }

bool Word::contains_factor(const Word& f) const {
  if (f.empty()) return true;
  return letters_.find(f.letters_) != std::string::npos;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < letters_.size()) {
    size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (!out.empty()) out += "*";
    out += letter_name(letters_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

MonomialOrder MonomialOrder::deglex(std::vector<int> precedence) {
  MonomialOrder ord;
  ord.rank_.assign(precedence.size(), -1);
  for (size_t r = 0; r < precedence.size(); ++r) {
    int letter = precedence[r];
    if (letter < 0 || letter >= static_cast<int>(precedence.size()) ||
        ord.rank_[size_t(letter)] != -1)
      throw StructuralError("letter precedence is not a permutation");
    ord.rank_[size_t(letter)] = static_cast<int>(r);
  }
  return ord;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = 0; i < a.degree(); ++i) {
    int la = a.letter(i), lb = b.letter(i);
    if (la == lb) continue;
    // lower rank number = higher precedence = greater word
    return rank_[size_t(la)] < rank_[size_t(lb)] ? 1 : -1;
  }
  return 0;
}

std::string MonomialOrder::description() const {
  std::vector<int> by_rank(rank_.size());
  for (size_t l = 0; l < rank_.size(); ++l) by_rank[size_t(rank_[l])] = int(l);
  std::string s = "deglex letters=";
  for (size_t i = 0; i < by_rank.size(); ++i) {
    if (i) s += ">";
    s += letter_name(by_rank[i]);
  }
  return s;
}

bool WordKeyLess::operator()(const Word& a, const Word& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // same degree: deglex with x > y means smaller letter index = greater word,
  // hence ascending order is reverse-lexicographic on the index strings
  return a.letters() > b.letters();
}

std::vector<Word> all_words(int degree, int alphabet) {
  std::vector<Word> out;
  std::string cur(static_cast<size_t>(degree), char(0));
  // enumerate in ascending WordKeyLess order: start from all-(k-1) descending
  // is overkill; enumerate lexicographically then sort
  long long total = 1;
  for (int i = 0; i < degree; ++i) total *= alphabet;
  out.reserve(static_cast<size_t>(total));
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = degree - 1; i >= 0; --i) {
      cur[size_t(i)] = char(c % alphabet);
      c /= alphabet;
    }
    out.emplace_back(cur);
  }
  std::sort(out.begin(), out.end(), WordKeyLess());
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

}  // namespace potalg
