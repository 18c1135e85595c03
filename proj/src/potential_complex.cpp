#include "potalg/potential_complex.hpp"

#include <map>

namespace potalg {

QMatrix GradedMap::dense() const {
  QMatrix m(codomain_basis.size(),
            std::vector<Scalar>(domain_basis.size(), Scalar(0)));
  for (size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) m[size_t(r)][c] = v;
  return m;
}

bool compose_is_zero(const GradedMap& outer, const GradedMap& inner) {
  for (const SparseCol& col : inner.columns) {
    std::map<int, Scalar> acc;
    for (const auto& [mid, v] : col) {
      for (const auto& [row, w] : outer.columns[size_t(mid)]) {
        auto [it, inserted] = acc.emplace(row, v * w);
        if (!inserted) it->second += v * w;
      }
    }
    for (const auto& [row, v] : acc)
      if (!v.is_zero()) return false;
  }
  return true;
}

namespace {

void require_complex_input(const Potential& F) {
  if (F.body().is_zero()) throw DomainError("zero potential");
  if (!F.is_homogeneous())
    throw DomainError("the potential complex needs a homogeneous potential");
}

struct SliceBasis {
  std::vector<Word> words;
  std::map<std::string, int> index;
};

SliceBasis slice_basis(const TruncatedGB& gb, int degree) {
  SliceBasis b;
  b.words = normal_word_basis(gb, degree);
  for (size_t i = 0; i < b.words.size(); ++i)
    b.index.emplace(b.words[i].letters(), int(i));
  return b;
}

std::vector<std::pair<Word, int>> doubled(const std::vector<Word>& words) {
  std::vector<std::pair<Word, int>> out;
  out.reserve(words.size() * 2);
  for (int copy = 0; copy < 2; ++copy)
    for (const Word& w : words) out.emplace_back(w, copy);
  return out;
}

/// Sparse coordinates of f in the copy-indexed normal-word basis.
SparseCol coordinates(const NcPoly& f, const SliceBasis& basis, int copy) {
  SparseCol col;
  for (const auto& [w, c] : f.terms()) {
    auto it = basis.index.find(w.letters());
    if (it == basis.index.end())
      throw DomainError("reduced element leaves the normal-word basis");
    col.emplace_back(copy * int(basis.words.size()) + it->second, c);
  }
  return col;
}

SparseCol merge(SparseCol a, SparseCol b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return a;
}

}  // namespace

std::vector<Word> normal_word_basis(const TruncatedGB& gb, int degree) {
  std::vector<Word> lws = gb.leading_words();
  std::vector<Word> out;
  int alphabet = gb.order().alphabet_size();
  for (const Word& w : all_words(degree, alphabet)) {
    bool normal = true;
    for (const Word& lw : lws)
      if (w.contains_factor(lw)) {
        normal = false;
        break;
      }
    if (normal) out.push_back(w);
  }
  return out;
}

SliceMaps build_slice(const Potential& F, const TruncatedGB& gb, int k) {
  require_complex_input(F);
  const int n = F.degree() - 1;
  if (!gb.graded_certified(k + n + 1))
    throw StalenessError("basis not certified to degree " +
                         std::to_string(k + n + 1));

  SliceBasis bk = slice_basis(gb, k);
  SliceBasis bk1 = slice_basis(gb, k + 1);
  SliceBasis bkn = slice_basis(gb, k + n);
  SliceBasis bkn1 = slice_basis(gb, k + n + 1);

  Hessian h = hessian(F);
  const Scalar unit = Scalar::one(F.body().terms().begin()->second.field());

  SliceMaps maps;

  // d3(u) = (xu, yu)
  maps.d3.domain_degree = k;
  maps.d3.codomain_degree = k + 1;
  for (const Word& w : bk.words) maps.d3.domain_basis.emplace_back(w, 0);
  maps.d3.codomain_basis = doubled(bk1.words);
  for (const Word& w : bk.words) {
    NcPoly u = NcPoly::term(w, unit);
    NcPoly xu = normal_form(sandwich(Word::single(0), u, Word()), gb);
    NcPoly yu = normal_form(sandwich(Word::single(1), u, Word()), gb);
    maps.d3.columns.push_back(
        merge(coordinates(xu, bk1, 0), coordinates(yu, bk1, 1)));
  }

  // d2(u, v) = H (u, v)^T, Hessian entries multiplying on the left
  maps.d2.domain_degree = k + 1;
  maps.d2.codomain_degree = k + n;
  maps.d2.domain_basis = doubled(bk1.words);
  maps.d2.codomain_basis = doubled(bkn.words);
  for (const auto& [w, copy] : maps.d2.domain_basis) {
    NcPoly u = NcPoly::term(w, unit);
    NcPoly top = normal_form(nc_mul(h.entry(0, copy), u), gb);
    NcPoly bottom = normal_form(nc_mul(h.entry(1, copy), u), gb);
    maps.d2.columns.push_back(
        merge(coordinates(top, bkn, 0), coordinates(bottom, bkn, 1)));
  }

  // d1(u, v) = xu + yv
  maps.d1.domain_degree = k + n;
  maps.d1.codomain_degree = k + n + 1;
  maps.d1.domain_basis = doubled(bkn.words);
  for (const Word& w : bkn1.words) maps.d1.codomain_basis.emplace_back(w, 0);
  for (const auto& [w, copy] : maps.d1.domain_basis) {
    NcPoly u = NcPoly::term(w, unit);
    NcPoly image = normal_form(sandwich(Word::single(copy), u, Word()), gb);
    maps.d1.columns.push_back(coordinates(image, bkn1, 0));
  }

  return maps;
}

bool verify_chain(const Potential& F, const TruncatedGB& gb, int max_degree) {
  require_complex_input(F);
  const int n = F.degree() - 1;
  for (int k = 0; k + n + 1 <= max_degree; ++k) {
    SliceMaps maps = build_slice(F, gb, k);
    if (!compose_is_zero(maps.d2, maps.d3)) return false;
    if (!compose_is_zero(maps.d1, maps.d2)) return false;
  }
  return true;
}

SliceReport slice_exactness(const Potential& F, const TruncatedGB& gb, int k) {
  SliceMaps maps = build_slice(F, gb, k);
  SliceReport report;
  report.k = k;
  report.dims = {static_cast<long long>(maps.d3.domain_basis.size()),
                 static_cast<long long>(maps.d2.domain_basis.size()),
                 static_cast<long long>(maps.d1.domain_basis.size()),
                 static_cast<long long>(maps.d1.codomain_basis.size())};
  report.ranks = {maps.d3.rank(), maps.d2.rank(), maps.d1.rank()};

  bool chain_32 = compose_is_zero(maps.d2, maps.d3);
  bool chain_21 = compose_is_zero(maps.d1, maps.d2);
  report.exact_at = {
      chain_32 && report.ranks[0] + report.ranks[1] == report.dims[1],
      chain_21 && report.ranks[1] + report.ranks[2] == report.dims[2],
      report.ranks[2] == report.dims[3]};
  report.euler_defect =
      report.dims[0] - report.dims[1] + report.dims[2] - report.dims[3];
  return report;
}

}  // namespace potalg
