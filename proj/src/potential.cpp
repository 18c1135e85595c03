#include "potalg/potential.hpp"

#include "potalg/errors.hpp"

namespace potalg {

NcPoly cyclic_symmetrize(const Word& w, int alphabet) {
  NcPoly out(alphabet);
  if (w.empty()) {
    out.add_term(w, Scalar(1));
    return out;
  }
  Word r = w;
  for (int i = 0; i < w.degree(); ++i) {
    out.add_term(r, Scalar(1));
    r = r.rotated();
  }
  return out;
}

NcPoly cyclic_symmetrize(const NcPoly& f) {
  NcPoly out(f.alphabet_size());
  for (const auto& [w, c] : f.terms()) {
    if (w.empty()) {
      out.add_term(w, c);
      continue;
    }
    Word r = w;
    for (int i = 0; i < w.degree(); ++i) {
      out.add_term(r, c);
      r = r.rotated();
    }
  }
  return out;
}

NcPoly rotate_terms(const NcPoly& f) {
  NcPoly out(f.alphabet_size());
  for (const auto& [w, c] : f.terms()) out.add_term(w.rotated(), c);
  return out;
}

bool is_cyclic_invariant(const NcPoly& f) { return rotate_terms(f) == f; }

NcPoly partial_derivative(const NcPoly& f, int letter) {
  if (letter < 0 || letter >= f.alphabet_size())
    throw StructuralError("derivative letter outside alphabet");
  NcPoly out(f.alphabet_size());
  for (const auto& [w, c] : f.terms()) {
    if (!w.empty() && w.letter(0) == letter)
      out.add_term(w.slice(1, w.degree() - 1), c);
  }
  return out;
}

std::pair<NcPoly, NcPoly> euler_defects(const NcPoly& f) {
  if (!f.coeff(Word()).is_zero())
    throw DomainError("euler identity requires zero constant term");
  const int k = f.alphabet_size();
  NcPoly left = f, right = f;
  for (int l = 0; l < k; ++l) {
    NcPoly d = partial_derivative(f, l);
    left -= sandwich(Word::single(l), d, Word());
    right -= sandwich(Word(), d, Word::single(l));
  }
  return {left, right};
}

NcPoly syzygy_defect(const NcPoly& f) {
  if (f.valuation() >= 0 && f.valuation() < 2)
    throw DomainError("syzygy defect requires zero constant and linear parts");
  const int k = f.alphabet_size();
  NcPoly out(k);
  for (int l = 0; l < k; ++l) {
    NcPoly d = partial_derivative(f, l);
    out += sandwich(Word::single(l), d, Word());
    out -= sandwich(Word(), d, Word::single(l));
  }
  return out;
}

CPoly abelianize(const NcPoly& f) {
  if (f.alphabet_size() != 2)
    throw StructuralError("abelianization expects a two-letter alphabet");
  CPoly out;
  for (const auto& [w, c] : f.terms()) {
    Expo e{0, 0};
    for (int i = 0; i < w.degree(); ++i)
      (w.letter(i) == 0 ? e.i : e.j) += 1;
    out.add_term(e, c);
  }
  return out;
}

Potential::Potential(NcPoly body) : body_(std::move(body)) {
  if (body_.alphabet_size() != 2)
    throw StructuralError("potentials live on the two-letter alphabet");
  if (!is_cyclic_invariant(body_))
    throw DomainError("potential body is not cyclically invariant");
  if (!body_.is_zero() && body_.valuation() < 3)
    throw DomainError("potential must have valuation >= 3");
}

Potential Potential::unchecked(NcPoly body) {
  return Potential(std::move(body), Unchecked{});
}

std::vector<NcPoly> Potential::relations() const {
  std::vector<NcPoly> rels;
  for (const NcPoly& d : derivatives())
    if (!d.is_zero()) rels.push_back(d);
  return rels;
}

Hessian hessian(const Potential& F) {
  Hessian h;
  for (int j = 0; j < 2; ++j) {
    NcPoly dj = partial_derivative(F.body(), j);
    for (int i = 0; i < 2; ++i)
      h.entries[size_t(i)][size_t(j)] = partial_derivative(dj, i);
  }
  return h;
}

Potential linear_substitute(const Potential& F,
                            const std::array<std::array<Scalar, 2>, 2>& m) {
  Scalar det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det.is_zero()) throw DomainError("singular substitution matrix");
  std::array<NcPoly, 2> images;
  for (int l = 0; l < 2; ++l) {
    NcPoly img(2);
    img.add_term(Word::single(0), m[size_t(l)][0]);
    img.add_term(Word::single(1), m[size_t(l)][1]);
    images[size_t(l)] = std::move(img);
  }
  NcPoly out(2);
  for (const auto& [w, c] : F.body().terms()) {
    NcPoly prod = NcPoly::term(Word(), Scalar::one(m[0][0].field()));
    for (int i = 0; i < w.degree(); ++i)
      prod = nc_mul(prod, images[size_t(w.letter(i))]);
    out += c * prod;
  }
  return Potential(std::move(out));
}

}  // namespace potalg
