#include "potalg/classify3.hpp"

#include "potalg/groebner.hpp"
#include "potalg/parse.hpp"
#include "potalg/series.hpp"

namespace potalg {

std::string cubic_tag_name(CubicTag t) {
  switch (t) {
    case CubicTag::TripleRoot: return "TripleRoot";
    case CubicTag::DoubleRoot: return "DoubleRoot";
    case CubicTag::ThreeDistinct: return "ThreeDistinct";
  }
  return "?";
}

CubicTag classify_cubic(const Potential& F) {
  if (F.body().is_zero()) throw DomainError("zero potential");
  if (!F.is_homogeneous() || F.degree() != 3)
    throw DomainError("classification needs a homogeneous degree-3 potential");

  CPoly ab = abelianize(F.body());
  FieldSpec field = ab.leading().second.field();
  if (field.kind == FieldKind::PrimeField &&
      (field.prime == 2 || field.prime == 3))
    throw DomainError("gcd criterion unavailable in characteristic 2 and 3");

  // dehomogenize the binary cubic by x-degree: p(z) = sum coeff(x^i y^{3-i}) z^i
  std::vector<Scalar> coeffs(4, Scalar::zero(field));
  for (const auto& [e, c] : ab.terms()) coeffs[size_t(e.i)] = c;
  UniPoly p{std::vector<Scalar>(coeffs)};
  int infinity_mult = 3 - p.degree();  // p is nonzero since F is

  int repeated = std::max(infinity_mult - 1, 0);
  if (p.degree() >= 1) repeated += poly_gcd(p, p.derivative()).degree();

  switch (repeated) {
    case 0: return CubicTag::ThreeDistinct;
    case 1: return CubicTag::DoubleRoot;
    case 2: return CubicTag::TripleRoot;
  }
  throw DomainError("impossible multiplicity pattern");
}

CanonicalClassData canonical_data(CubicTag tag) {
  const char* potential_text = nullptr;
  switch (tag) {
    case CubicTag::TripleRoot: potential_text = "x^3"; break;
    case CubicTag::DoubleRoot: potential_text = "cyc(x^2*y)"; break;
    case CubicTag::ThreeDistinct:
      potential_text = "cyc(x^2*y) + cyc(x*y^2)";
      break;
  }
  Potential pot{parse_ncpoly(potential_text)};

  std::vector<NcPoly> relations;
  switch (tag) {
    case CubicTag::TripleRoot:
      relations = {parse_ncpoly("x^2")};
      break;
    case CubicTag::DoubleRoot:
      relations = {parse_ncpoly("x*y + y*x"), parse_ncpoly("x^2")};
      break;
    case CubicTag::ThreeDistinct:
      relations = {parse_ncpoly("x*y + y*x + y^2"), parse_ncpoly("x^2 - y^2")};
      break;
  }

  TruncatedGB gb = complete(relations, MonomialOrder::deglex(), 8);
  if (gb.certificate() != GBCertificate::Saturated)
    throw DomainError("canonical relations failed to saturate");

  CanonicalClassData data{tag, pot, relations, gb.leading_words(), {}};
  for (const mpz_class& v : normal_word_census(data.gb_leading_words, 10))
    data.series_head.emplace_back(mpq_class(v));
  return data;
}

}  // namespace potalg
