#include "potalg/corpus.hpp"

namespace potalg {

namespace {

Word random_word(std::mt19937_64& rng, int degree) {
  std::string letters(size_t(degree), char(0));
  std::uniform_int_distribution<int> letter(0, 1);
  for (char& c : letters) c = char(letter(rng));
  return Word(std::move(letters));
}

Scalar random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  long n = 0;
  while (n == 0) n = num(rng);
  return Scalar(n, den(rng));
}

NcPoly random_combination(std::mt19937_64& rng, int min_deg, int max_deg) {
  std::uniform_int_distribution<int> term_count(3, 6);
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  NcPoly f(2);
  int terms = term_count(rng);
  for (int t = 0; t < terms; ++t)
    f.add_term(random_word(rng, deg(rng)), random_coeff(rng));
  return f;
}

}  // namespace

Potential random_cyclic_potential(std::mt19937_64& rng) {
  while (true) {
    NcPoly f = cyclic_symmetrize(random_combination(rng, 3, 5));
    if (!f.is_zero() && f.valuation() == 3) return Potential(std::move(f));
  }
}

Potential random_homogeneous_potential(std::mt19937_64& rng, int degree) {
  while (true) {
    NcPoly f = cyclic_symmetrize(random_combination(rng, degree, degree));
    if (!f.is_zero()) return Potential(std::move(f));
  }
}

std::vector<Potential> random_cyclic_corpus(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<Potential> out;
  out.reserve(size_t(count));
  for (int i = 0; i < count; ++i) out.push_back(random_cyclic_potential(rng));
  return out;
}

std::vector<Potential> random_homogeneous_corpus(std::uint64_t seed, int count,
                                                 int degree) {
  std::mt19937_64 rng(seed);
  std::vector<Potential> out;
  out.reserve(size_t(count));
  for (int i = 0; i < count; ++i)
    out.push_back(random_homogeneous_potential(rng, degree));
  return out;
}

}  // namespace potalg
