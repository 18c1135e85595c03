#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potalg/corpus.hpp"
#include "potalg/groebner.hpp"
#include "test_support.hpp"

using namespace potalg;

namespace {

NcPoly P(const std::string& s) { return parse_ncpoly(s); }

const MonomialOrder kOrd = MonomialOrder::deglex();

/// The running-example potential x^{n-1} y^2 cyclically symmetrized.
Potential ex1_potential(int n) {
  return Potential(
      cyclic_symmetrize(Word::power(0, n - 1) * Word::power(1, 2)));
}

std::vector<long long> census_ll(const std::vector<Word>& lws, int max_deg) {
  std::vector<long long> out;
  for (const mpz_class& v : normal_word_census(lws, max_deg))
    out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST_CASE("normal_form examples") {
  TruncatedGB g1 = complete({P("x^2")}, kOrd, 6);
  CHECK(normal_form(P("x^2*y"), g1).is_zero());

  TruncatedGB g2 = complete({P("x*y + y*x + y^2")}, kOrd, 6);
  CHECK(normal_form(P("x*y"), g2) == P("-y*x - y^2"));

  // the single overlap of the n = 4 running example resolves
  Potential f = ex1_potential(4);
  TruncatedGB g3 = complete(f.relations(), kOrd, 10);
  NcPoly spoly =
      sandwich(Word(), P("x^2*y^2 + x*y^2*x + y^2*x^2"), Word::single(1)) -
      sandwich(Word::single(0), P("x^3*y + y*x^3"), Word());
  CHECK(normal_form(spoly, g3).is_zero());
}

TEST_CASE("complete: canonical degree-3 relations are already a basis") {
  TruncatedGB gb = complete({P("x*y + y*x"), P("x^2")}, kOrd, 8);
  CHECK(gb.elements().size() == 2);
  CHECK(gb.certificate() == GBCertificate::Saturated);
  // elements ascend by (degree, order): xy < x^2 under deglex with x > y
  CHECK(gb.elements()[0] == P("x*y + y*x"));
  CHECK(gb.elements()[1] == P("x^2"));
}

TEST_CASE("complete: running example has exactly one overlap, resolving") {
  for (int n = 3; n <= 6; ++n) {
    Potential f = ex1_potential(n);
    TruncatedGB gb = complete(f.relations(), kOrd, 2 * (n + 1));
    CHECK(gb.elements().size() == 2);
    CHECK(gb.overlaps_processed() == 1);
    CHECK(gb.certificate() == GBCertificate::Saturated);
    std::vector<Word> lws = gb.leading_words();
    REQUIRE(lws.size() == 2);
    CHECK(lws[0] == Word::power(0, n - 2) * Word::power(1, 2));
    CHECK(lws[1] == Word::power(0, n - 1) * Word::single(1));
  }
}

TEST_CASE("complete: section-6 relations for a = y^4") {
  TruncatedGB gb =
      complete({P("x*y + y*x + y^2"), P("x*y + y*x + x^2 + y^3")}, kOrd, 12);
  CHECK(gb.certificate() == GBCertificate::Saturated);
  std::vector<Word> lws = gb.leading_words();
  REQUIRE(lws.size() == 3);
  CHECK(lws[0] == Word({0, 1}));      // xy
  CHECK(lws[1] == Word({1, 1, 1}));   // y^3 < x^3 in deglex with x > y
  CHECK(lws[2] == Word({0, 0, 0}));   // x^3
  CHECK(*quotient_dim(gb).total == 9);
}

TEST_CASE("complete rejects bad input") {
  CHECK_THROWS_AS(complete({NcPoly::zero()}, kOrd, 5), DomainError);
  CHECK_THROWS_AS(complete({}, kOrd, 5), DomainError);
  CHECK_THROWS_AS(complete({P("x^3*y")}, kOrd, 2), DomainError);
}

TEST_CASE("completion output is independent of input order") {
  std::vector<NcPoly> rels{P("x*y + y*x + y^2"), P("x*y + y*x + x^2 + y^3")};
  TruncatedGB a = complete(rels, kOrd, 12);
  std::swap(rels[0], rels[1]);
  TruncatedGB b = complete(rels, kOrd, 12);
  CHECK(a.serialize() == b.serialize());

  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    Potential f = random_cyclic_potential(rng);
    std::vector<NcPoly> r1 = f.relations();
    std::vector<NcPoly> r2(r1.rbegin(), r1.rend());
    CHECK(complete(r1, kOrd, 8).serialize() == complete(r2, kOrd, 8).serialize());
  }
}

TEST_CASE("normal words: census examples") {
  CHECK(census_ll({Word({0, 0})}, 4) ==
        std::vector<long long>{1, 2, 3, 5, 8});
  CHECK(census_ll({Word({0, 0, 1, 1}), Word({0, 0, 0, 1})}, 5) ==
        std::vector<long long>{1, 2, 4, 8, 14, 25});

  FactorAvoidanceAutomaton fin(
      {Word({0, 1}), Word({0, 0, 0}), Word({1, 1, 1})}, 2);
  CHECK(fin.language_is_finite());
  CHECK(*fin.total_count() == 9);
}

TEST_CASE("census agrees with exhaustive enumeration to degree 12") {
  std::vector<std::vector<Word>> cases{
      {Word({0, 0})},
      {Word({0, 0, 1, 1}), Word({0, 0, 0, 1})},
      {Word({0, 1}), Word({0, 0, 0}), Word({1, 1, 1})},
      {Word({0, 1, 0})},
  };
  for (const auto& fb : cases) {
    std::vector<long long> automaton = census_ll(fb, 12);
    std::vector<long> brute = test::census_by_enumeration(fb, 12);
    for (int d = 0; d <= 12; ++d)
      CHECK(automaton[size_t(d)] == brute[size_t(d)]);
  }
}

TEST_CASE("graded_dim_oracle examples") {
  Potential f = ex1_potential(3);
  DimReport r = graded_dim_oracle(f.relations(), 4);
  CHECK(r.per_degree == std::vector<long long>{1, 2, 4, 6, 9});
  CHECK(r.method == DimReport::Method::BruteForceOracle);

  DimReport r2 = graded_dim_oracle({P("x^2")}, 4);
  CHECK(r2.per_degree == std::vector<long long>{1, 2, 3, 5, 8});

  DimReport r3 = graded_dim_oracle({}, 5);
  CHECK(r3.per_degree == std::vector<long long>{1, 2, 4, 8, 16, 32});

  CHECK_THROWS_AS(graded_dim_oracle({P("x + x^2")}, 3), DomainError);
}

TEST_CASE("census equals oracle on random homogeneous potentials") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 4; ++i) {
    int degree = 4 + (i % 2);
    Potential f = random_homogeneous_potential(rng, degree);
    TruncatedGB gb = complete(f.relations(), kOrd, 9);
    DimReport census = graded_dims(gb, 9);
    DimReport oracle = graded_dim_oracle(f.relations(), 9);
    CHECK(census.per_degree == oracle.per_degree);
  }
}

TEST_CASE("reduction is confluent on a complete basis") {
  Potential f = ex1_potential(3);
  TruncatedGB gb = complete(f.relations(), kOrd, 12);
  std::mt19937_64 rng(83);
  for (int i = 0; i < 500; ++i) {
    NcPoly g = test::random_poly(rng, 6, 0, 7);
    NcPoly canonical = normal_form(g, gb);
    CHECK(normal_form_randomized(g, gb, rng) == canonical);
  }
}

TEST_CASE("staleness guards") {
  TruncatedGB gb = complete({P("x*y + y*x + x^2 + y^3")}, kOrd, 4);
  if (gb.certificate() != GBCertificate::Saturated)
    CHECK_THROWS_AS(normal_form(P("x^6"), gb), StalenessError);
  Potential f = ex1_potential(4);
  TruncatedGB graded = complete(f.relations(), kOrd, 10);
  CHECK(graded.covers_degree(1000));  // saturated: certificate is global
}

TEST_CASE("truncated_quotient_dim examples") {
  DimReport cube = truncated_quotient_dim(Potential(P("x^3")), 5);
  CHECK(cube.per_degree == std::vector<long long>{1, 2, 3, 5, 8});
  CHECK(*cube.total == 19);
  CHECK(cube.method == DimReport::Method::TruncatedQuotient);

  std::mt19937_64 rng(89);
  for (int i = 0; i < 25; ++i) {
    Potential f = random_cyclic_potential(rng);
    CHECK(*truncated_quotient_dim(f, 5).total >= 8);
  }

  Potential wemyss(P("cyc(x^2*y) + y^3 + y^4"));
  DimReport probe = truncated_quotient_dim(wemyss, 12);
  CHECK(*probe.total == 8);

  CHECK_THROWS_AS(truncated_quotient_dim(Potential(P("x^3")), 2), DomainError);
}

TEST_CASE("completion_dim_probe stabilizes on the named potentials") {
  Potential w1(P("cyc(x^2*y) + y^3 + y^4"));
  DimReport r1 = completion_dim_probe(w1, 10, 3);
  CHECK(r1.verdict == "Stabilized(8)");
  CHECK(*r1.total == 8);

  Potential w2(P("x^3 + y^3 + (x+y)^4"));
  DimReport r2 = completion_dim_probe(w2, 10, 3);
  CHECK(r2.verdict == "Stabilized(8)");

  // the Wemyss "dimension 9" potential: the algebra itself has dimension 9
  // while its truncations (and hence its completion) stabilize at 8
  Potential w3(P("1/3*cyc(x*y^2) + x^3 + x^4"));
  DimReport r3 = completion_dim_probe(w3, 10, 3);
  CHECK(r3.verdict == "Stabilized(8)");
  TruncatedGB gb = complete(w3.relations(), kOrd, 12);
  REQUIRE(gb.certificate() == GBCertificate::Saturated);
  CHECK(*quotient_dim(gb).total == 9);

  // homogeneous potentials have infinite-dimensional algebras: inconclusive
  Potential h = ex1_potential(3);
  DimReport r4 = completion_dim_probe(h, 9, 3);
  CHECK(r4.verdict == "Inconclusive");
  CHECK(!r4.total.has_value());
}

TEST_CASE("truncation dimensions lower-bound quotient and completion") {
  for (const char* text : {"cyc(x^2*y) + y^3 + y^4", "x^3 + y^3 + (x+y)^4",
                           "1/3*cyc(x*y^2) + x^3 + x^4"}) {
    Potential f(P(text));
    DimReport probe = completion_dim_probe(f, 10, 3);
    REQUIRE(probe.total.has_value());
    TruncatedGB gb = complete(f.relations(), kOrd, 14);
    REQUIRE(gb.certificate() == GBCertificate::Saturated);
    std::optional<long long> dim_a = quotient_dim(gb).total;
    for (long long d : probe.per_degree) {
      CHECK(d <= *probe.total);
      if (dim_a) CHECK(d <= *dim_a);
    }
    if (dim_a) CHECK(*probe.total <= *dim_a);
  }
}

TEST_CASE("basis serialization format") {
  TruncatedGB gb = complete({P("x*y + y*x"), P("x^2")}, kOrd, 8);
  std::string s = gb.serialize();
  CHECK(s == "order=deglex letters=x>y bound=8 certificate=Saturated\n"
             "x*y + y*x\n"
             "x^2\n");
}

TEST_CASE("graded dims require a certificate") {
  // one relation whose completion above the bound is unknown
  TruncatedGB gb = complete({P("x*y*x + y^3")}, kOrd, 5);
  if (gb.certificate() == GBCertificate::CompleteGraded)
    CHECK_THROWS_AS(graded_dims(gb, 9), StalenessError);
}
