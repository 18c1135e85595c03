#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "potalg/series.hpp"
#include "test_support.hpp"

using namespace potalg;

namespace {

UniPoly U(std::vector<long> coeffs) {
  std::vector<Scalar> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

std::vector<long> longs(const std::vector<Scalar>& v) {
  std::vector<long> out;
  for (const Scalar& s : v) {
    REQUIRE(s.rational_value().get_den() == 1);
    out.push_back(long(s.rational_value().get_num().get_si()));
  }
  return out;
}

/// Independent certificate: den * expansion == num as truncated series,
/// convolved directly over raw GMP rationals.
void check_multiply_back(const RationalSeries& rs,
                         const std::vector<Scalar>& expansion) {
  for (size_t k = 0; k < expansion.size(); ++k) {
    mpq_class acc = 0;
    for (size_t i = 0; i <= k && int(i) <= rs.denominator().degree(); ++i)
      acc += rs.denominator().coeff(int(i)).rational_value() *
             expansion[k - i].rational_value();
    CHECK(acc == rs.numerator().coeff(int(k)).rational_value());
  }
}

const UniPoly kOne = U({1});

}  // namespace

TEST_CASE("expand examples") {
  RationalSeries h3(kOne, U({1, -2, 0, 2, -1}));
  CHECK(longs(expand(h3, 8)) ==
        std::vector<long>{1, 2, 4, 6, 9, 12, 16, 20, 25});
  check_multiply_back(h3, expand(h3, 40));

  RationalSeries h4(kOne, U({1, -2, 0, 0, 2, -1}));
  CHECK(longs(expand(h4, 5)) == std::vector<long>{1, 2, 4, 8, 14, 25});

  RationalSeries geom(kOne, U({1, -1}));
  CHECK(longs(expand(geom, 3)) == std::vector<long>{1, 1, 1, 1});

  CHECK_THROWS_AS(RationalSeries(kOne, U({0, 1})), DomainError);
}

TEST_CASE("gs_series examples") {
  RationalSeries pro2 = gs_series(2, {{4, 2}});
  CHECK(pro2.denominator() == U({1, -2, 0, 0, 2}));
  CHECK(pro2.numerator() == kOne);

  RationalSeries pro1 = gs_series_with_tail(2, {}, 4, 2);
  CHECK(pro1.denominator() == U({1, -3, 2, 0, 2}));
  CHECK(pro1.numerator() == U({1, -1}));

  RationalSeries free_algebra = gs_series(2, {});
  CHECK(free_algebra.denominator() == U({1, -2}));

  CHECK_THROWS_AS(gs_series(0, {}), DomainError);
  CHECK_THROWS_AS(gs_series(2, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(gs_series(2, {{3, -1}}), DomainError);
}

TEST_CASE("abs_truncate finds the first negative coefficient") {
  // |1/(1-2t+2t^4)|: the recurrence a_k = 2a_{k-1} - 2a_{k-4} goes negative
  // at index 18 (1,2,4,8,14,24,...,656,160,-1088)
  RationalSeries n4 = gs_series(2, {{4, 2}});
  auto [trunc4, first4] = abs_truncate(n4.expand(), 20);
  REQUIRE(first4.has_value());
  CHECK(*first4 == 18);
  CHECK(trunc4[17] == Scalar(160));
  CHECK(trunc4[18].is_zero());
  CHECK(trunc4[19].is_zero());
  check_multiply_back(n4, expand(n4, 18));
  CHECK(expand(n4, 18)[18].sign() < 0);

  RationalSeries n3 = gs_series(2, {{3, 2}});
  auto [trunc3, first3] = abs_truncate(n3.expand(), 20);
  REQUIRE(first3.has_value());
  CHECK(*first3 == 7);

  RationalSeries n5 = gs_series(2, {{5, 2}});
  auto [trunc5, first5] = abs_truncate(n5.expand(), 200);
  CHECK(!first5.has_value());

  auto [same, none] = abs_truncate(PowerSeries({Scalar(1), Scalar(2)}), 1);
  CHECK(!none.has_value());
  CHECK(same == std::vector<Scalar>{Scalar(1), Scalar(2)});
}

TEST_CASE("eval_exact examples") {
  UniPoly p = U({1, -2, 0, 0, 1, 1});
  Scalar t0(654, 1000);
  Scalar v = eval_exact(p, t0);
  CHECK(v.sign() < 0);
  // exact value -169238269093 / 500^5
  CHECK(v.rational_value().get_num() == mpz_class("-169238269093"));
  CHECK(v.rational_value().get_den() == mpz_class("31250000000000"));

  CHECK(eval_exact(U({1, -2}), Scalar(1, 2)).is_zero());
  CHECK(eval_exact(kOne, Scalar(7, 3)) == Scalar(1));
}

TEST_CASE("hilbert_from_forbidden examples") {
  // the n = 4 running example: forbidden {x^2 y^2, x^3 y}
  std::vector<Word> fb{Word({0, 0, 1, 1}), Word({0, 0, 0, 1})};
  auto [census, rs] = hilbert_from_forbidden(fb, 12);
  CHECK(rs.numerator() == kOne);
  CHECK(rs.denominator() == U({1, -2, 0, 0, 2, -1}));
  CHECK(census[4] == 14);
  CHECK(census[5] == 25);

  // normal words y^k and y^k x
  auto [census2, rs2] = hilbert_from_forbidden(
      {Word({0, 1}), Word({0, 0})}, 10);
  for (int k = 1; k <= 10; ++k) CHECK(census2[size_t(k)] == 2);
  std::vector<Scalar> back = rs2.expand_prefix(30);
  for (int k = 1; k <= 30; ++k) CHECK(back[size_t(k)] == Scalar(2));

  auto [census3, rs3] = hilbert_from_forbidden({}, 6);
  CHECK(census3[6] == 64);
  CHECK(rs3.denominator() == U({1, -2}));
  CHECK(rs3.numerator() == kOne);

  // finite language: polynomial generating function
  auto [census4, rs4] = hilbert_from_forbidden(
      {Word({0, 1}), Word({0, 0, 0}), Word({1, 1, 1})}, 8);
  mpz_class total = 0;
  for (const mpz_class& c : census4) total += c;
  CHECK(total == 9);
  CHECK(census4[5] == 0);
  CHECK(rs4.denominator().degree() == 0);
}

TEST_CASE("census agrees with exhaustive enumeration") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> nwords(0, 3);
    std::vector<Word> fb;
    int k = nwords(rng);
    for (int i = 0; i < k; ++i) fb.push_back(test::random_word(rng, 1, 4));
    auto [census, rs] = hilbert_from_forbidden(fb, 9);
    std::vector<long> brute = test::census_by_enumeration(fb, 9);
    for (int d = 0; d <= 9; ++d) CHECK(census[size_t(d)] == brute[size_t(d)]);
  }
}

TEST_CASE("denominator recurrence holds to depth 100") {
  std::vector<RationalSeries> cases{
      RationalSeries(kOne, U({1, -2, 0, 2, -1})),
      RationalSeries(U({1, -1}), U({1, -3, 2, 0, 0, 2})),
      RationalSeries(U({3, 0, 1}), U({2, -1, -1, 5})),
  };
  for (const RationalSeries& rs : cases) {
    std::vector<Scalar> a = expand(rs, 100);
    for (int k = rs.numerator().degree() + 1; k <= 100; ++k) {
      Scalar acc(0);
      for (int i = 0; i <= rs.denominator().degree() && i <= k; ++i)
        acc += rs.denominator().coeff(i) * a[size_t(k - i)];
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("running-example recurrence identity for n in 3..6") {
  for (int n = 3; n <= 6; ++n) {
    std::vector<Scalar> den(size_t(n) + 2, Scalar(0));
    den[0] = Scalar(1);
    den[1] = Scalar(-2);
    den[size_t(n)] = Scalar(2);
    den[size_t(n) + 1] = Scalar(-1);
    RationalSeries rs(kOne, UniPoly(std::move(den)));
    std::vector<Scalar> a = expand(rs, 61 + n + 1);
    for (int k = 0; k <= 60; ++k) {
      Scalar lhs = a[size_t(k + n + 1)];
      Scalar rhs = Scalar(2) * a[size_t(k + n)] - Scalar(2) * a[size_t(k + 1)] +
                   a[size_t(k)];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("growth classification of the minimal series") {
  // n = 3: cubic-bounded growth
  RationalSeries h3(kOne, U({1, -2, 0, 2, -1}));
  std::vector<Scalar> a3 = expand(h3, 100);
  for (int k = 0; k <= 100; ++k) {
    long bound = long(k + 2) * (k + 2) * (k + 2);
    CHECK((Scalar(bound) - a3[size_t(k)]).sign() >= 0);
  }
  // n = 4: ratio at least 11/10 on 20..100
  RationalSeries h4(kOne, U({1, -2, 0, 0, 2, -1}));
  std::vector<Scalar> a4 = expand(h4, 101);
  for (int k = 20; k <= 100; ++k) {
    Scalar ratio = a4[size_t(k + 1)] / a4[size_t(k)];
    CHECK((ratio - Scalar(11, 10)).sign() >= 0);
  }
}

TEST_CASE("coefficientwise order") {
  RationalSeries free_algebra = gs_series(2, {});
  RationalSeries h3(kOne, U({1, -2, 0, 2, -1}));
  CHECK(coefficientwise_geq(free_algebra.expand(), h3.expand(), 10));
  CHECK(!coefficientwise_geq(h3.expand(), free_algebra.expand(), 10));
  CHECK(coefficientwise_geq(h3.expand(), h3.expand(), 25));
}

TEST_CASE("power series are lazily extended and immutable") {
  int calls = 0;
  PowerSeries ps({Scalar(5)}, [&calls](int k) {
    ++calls;
    return Scalar(k);
  });
  CHECK(ps.coeff(0) == Scalar(5));
  CHECK(calls == 0);
  CHECK(ps.coeff(3) == Scalar(3));
  CHECK(calls == 3);
  CHECK(ps.coeff(1) == Scalar(1));
  CHECK(calls == 3);  // memoized
  CHECK(ps.known_up_to() == 3);

  PowerSeries fixed({Scalar(1), Scalar(2)});
  CHECK_THROWS_AS(fixed.coeff(5), DomainError);
}

TEST_CASE("series text forms") {
  RationalSeries h4(kOne, U({1, -2, 0, 0, 2, -1}));
  CHECK(h4.str() == "1 / (1 - 2*t + 2*t^4 - t^5)");
  CHECK(series_head_str(expand(h4, 4)) == "1, 2, 4, 8, 14");
  CHECK(U({0, 1, 0, -3}).str() == "t - 3*t^3");
}

TEST_CASE("rational series reduction cancels common factors") {
  // (1-t)(1-2t) / (1-t)(1-t) should reduce to (1-2t)/(1-t)
  UniPoly num = U({1, -1}) * U({1, -2});
  UniPoly den = U({1, -1}) * U({1, -1});
  RationalSeries reduced = RationalSeries(num, den).reduced();
  CHECK(reduced.numerator() == U({1, -2}));
  CHECK(reduced.denominator() == U({1, -1}));
}
