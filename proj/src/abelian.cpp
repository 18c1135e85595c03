#include "potalg/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "potalg/groebner.hpp"

namespace potalg {

namespace {

CPoly make_monic(CPoly f) {
  Scalar lc = f.leading().second;
  return f * lc.reciprocal();
}

}  // namespace

CPoly normal_form_comm(const CPoly& f, const std::vector<CPoly>& basis) {
  std::map<Expo, Scalar, ExpoLexLess> acc;
  for (const auto& [e, c] : f.terms()) acc.emplace(e, c);
  CPoly out;
  while (!acc.empty()) {
    auto it = std::prev(acc.end());
    Expo e = it->first;
    Scalar c = it->second;
    acc.erase(it);
    const CPoly* match = nullptr;
    for (const CPoly& g : basis)
      if (g.leading().first.divides(e)) {
        match = &g;
        break;
      }
    if (match == nullptr) {
      out.add_term(e, c);
      continue;
    }
    auto [lm, lc] = match->leading();
    Expo shift = e - lm;
    Scalar factor = c / lc;
    for (const auto& [ge, gc] : match->terms()) {
      if (ge == lm) continue;
      Expo pe = ge + shift;
      Scalar delta = -(factor * gc);
      auto [pit, inserted] = acc.emplace(pe, delta);
      if (!inserted) {
        pit->second += delta;
        if (pit->second.is_zero()) acc.erase(pit);
      }
    }
  }
  return out;
}

std::vector<CPoly> buchberger_lex2(std::vector<CPoly> relations) {
  std::vector<CPoly> basis;
  for (CPoly& r : relations)
    if (!r.is_zero()) basis.push_back(make_monic(std::move(r)));
  std::sort(basis.begin(), basis.end(), [](const CPoly& a, const CPoly& b) {
    ExpoLexLess lt;
    auto la = a.leading().first, lb = b.leading().first;
    if (!(la == lb)) return lt(la, lb);
    return a.str() < b.str();
  });

  std::set<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace(i, j);

  while (!pairs.empty()) {
    auto [i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    Expo li = basis[i].leading().first, lj = basis[j].leading().first;
    Expo l = Expo::lcm(li, lj);
    CPoly s = CPoly::term(l - li, Scalar(1)) * basis[i] -
              CPoly::term(l - lj, Scalar(1)) * basis[j];
    CPoly r = normal_form_comm(s, basis);
    if (r.is_zero()) continue;
    r = make_monic(std::move(r));
    size_t idx = basis.size();
    basis.push_back(std::move(r));
    for (size_t k = 0; k < idx; ++k) pairs.emplace(k, idx);
  }

  // reduced basis: minimal leading monomials, fully reduced tails, monic
  std::vector<CPoly> reduced;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Expo li = basis[i].leading().first, lj = basis[j].leading().first;
      if (lj.divides(li) && !(li == lj && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<CPoly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = make_monic(normal_form_comm(reduced[i], others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const CPoly& a, const CPoly& b) {
    return ExpoLexLess()(a.leading().first, b.leading().first);
  });
  return reduced;
}

std::optional<long long> quotient_dim_comm(const std::vector<CPoly>& basis) {
  std::vector<Expo> lms;
  for (const CPoly& g : basis)
    if (!g.is_zero()) lms.push_back(g.leading().first);
  if (lms.empty()) return std::nullopt;  // free polynomial ring
  for (const Expo& e : lms)
    if (e.i == 0 && e.j == 0) return 0;  // unit ideal

  int x_power = -1, y_power = -1;
  for (const Expo& e : lms) {
    if (e.j == 0) x_power = x_power < 0 ? e.i : std::min(x_power, e.i);
    if (e.i == 0) y_power = y_power < 0 ? e.j : std::min(y_power, e.j);
  }
  if (x_power < 0 || y_power < 0) return std::nullopt;

  long long count = 0;
  for (int i = 0; i < x_power; ++i)
    for (int j = 0; j < y_power; ++j) {
      bool standard = true;
      for (const Expo& e : lms)
        if (e.divides({i, j})) {
          standard = false;
          break;
        }
      if (standard) ++count;
    }
  return count;
}

Potential family_potential(const std::vector<Scalar>& a_coeffs) {
  if (a_coeffs.size() < 2)
    throw DomainError("family needs deg a = n > 3, so at least a_3..a_4");
  if (a_coeffs.back().is_zero())
    throw DomainError("top family coefficient a_n must be nonzero");
  for (const Scalar& c : a_coeffs)
    if (!c.is_rational())
      throw StructuralError(
          "the gap analysis runs over the rationals (the odd/even split "
          "needs characteristic 0)");

  NcPoly body = cyclic_symmetrize(Word::power(0, 2) * Word::single(1)) +
                cyclic_symmetrize(Word::single(0) * Word::power(1, 2));
  for (size_t idx = 0; idx < a_coeffs.size(); ++idx) {
    int j = static_cast<int>(idx) + 3;
    body += NcPoly::term(Word::power(1, j), a_coeffs[idx]);
  }
  return Potential(std::move(body));
}

GapReport wemyss_gap(const std::vector<Scalar>& a_coeffs) {
  Potential F = family_potential(a_coeffs);
  const int n = static_cast<int>(a_coeffs.size()) + 2;

  std::vector<CPoly> comm_relations;
  for (const NcPoly& g : F.relations())
    comm_relations.push_back(abelianize(g));
  std::vector<CPoly> comm_basis = buchberger_lex2(std::move(comm_relations));
  std::optional<long long> dim_b = quotient_dim_comm(comm_basis);
  if (!dim_b)
    throw DomainError("family abelianization came out infinite dimensional");

  std::optional<long long> dim_a;
  bool saturated = false;
  for (int bound = 3 * n; bound <= 3 * n + 8; bound += 4) {
    TruncatedGB gb = complete(F.relations(), MonomialOrder::deglex(), bound);
    if (gb.certificate() != GBCertificate::Saturated) continue;
    dim_a = quotient_dim(gb).total;
    saturated = true;
    break;
  }
  if (!saturated)
    throw DomainError("family completion failed to saturate");

  GapReport report;
  report.dim_b = *dim_b;
  report.dim_a = dim_a;
  if (dim_a) {
    report.gap = *dim_a - *dim_b;
    report.multiple_of_four = *report.gap % 4 == 0;
    report.squares = squares_decomposition(*report.gap);
  }
  return report;
}

namespace {

bool squares_dfs(long long remaining, int max_k,
                 std::vector<std::pair<int, long long>>& picks) {
  if (remaining == 0) return true;
  for (int k = max_k; k >= 2; --k) {
    long long sq = static_cast<long long>(k) * k;
    if (sq > remaining) continue;
    for (long long mult = remaining / sq; mult >= 1; --mult) {
      picks.emplace_back(k, mult);
      if (squares_dfs(remaining - mult * sq, k - 1, picks)) return true;
      picks.pop_back();
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<int, long long>>> squares_decomposition(
    long long g) {
  if (g < 0) throw DomainError("squares decomposition needs g >= 0");
  int max_k = 2;
  while (static_cast<long long>(max_k + 1) * (max_k + 1) <= g) ++max_k;
  std::vector<std::pair<int, long long>> picks;
  if (!squares_dfs(g, max_k, picks)) return std::nullopt;
  std::sort(picks.begin(), picks.end());
  return picks;
}

}  // namespace potalg
