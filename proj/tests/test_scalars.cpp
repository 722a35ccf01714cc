#include <doctest.h>

#include "oracles.hpp"
#include "skein/errors.hpp"
#include "skein/univariate.hpp"

using namespace skein;
using oracle::S;

TEST_CASE("quantum integers") {
  CHECK(quantum_int(0).is_zero());
  CHECK(quantum_int(1) == LaurentPoly(1L));
  CHECK(quantum_int(2) == var_s() + var_s(-1));
  for (int i = 0; i <= 20; ++i) {
    CHECK(quantum_int(i) * z_poly() == var_s(i) - var_s(-i));
    CHECK(Scalar(quantum_int(i)) == oracle::qint_fraction(i));
  }
}

TEST_CASE("quantum factorials") {
  CHECK(quantum_factorial(0) == LaurentPoly(1L));
  CHECK(quantum_factorial(2) == var_s() + var_s(-1));
  const LaurentPoly three = (var_s() + var_s(-1)) * (var_s(2) + LaurentPoly(1L) + var_s(-2));
  CHECK(quantum_factorial(3) == three);
  Scalar prod(1L);
  for (int i = 1; i <= 6; ++i) prod *= oracle::qint_fraction(i);
  CHECK(Scalar(quantum_factorial(6)) == prod);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    const LaurentPoly a = oracle::random_laurent(rng), b = oracle::random_laurent(rng), c = oracle::random_laurent(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a + LaurentPoly() == a);
  }
}

TEST_CASE("stored terms are nonzero and distinct") {
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    const LaurentPoly p = oracle::random_laurent(rng, 8, 1) * oracle::random_laurent(rng, 8, 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(p.coeff(i) != 0);
      if (i) CHECK(p.exponent(i - 1) < p.exponent(i));
    }
  }
}

TEST_CASE("scalar equality is an equivalence") {
  std::mt19937 rng(9);
  for (int t = 0; t < 40; ++t) {
    const Scalar a = oracle::random_scalar(rng);
    const Scalar k = oracle::random_scalar(rng);
    if (k.is_zero()) continue;
    // Same value written two ways.
    const Scalar b(a.numerator() * k.numerator() * k.denominator(), a.denominator() * k.numerator() * k.denominator());
    const Scalar c = (a * k) / k;
    CHECK(a == a);
    CHECK(a == b);
    CHECK(b == a);
    CHECK(b == c);
    CHECK(a == c);
  }
}

TEST_CASE("field arithmetic") {
  std::mt19937 rng(10);
  for (int t = 0; t < 30; ++t) {
    const Scalar a = oracle::random_scalar(rng), b = oracle::random_scalar(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1L));
  }
  CHECK((Scalar() / S("x + s")).is_zero());
  CHECK_THROWS_AS(Scalar(LaurentPoly(1L), LaurentPoly()), std::domain_error);
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
}

TEST_CASE("text round trip") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    const Scalar a = oracle::random_scalar(rng);
    CHECK(Scalar::parse(a.to_string()) == a);
    CHECK(Scalar::parse(a.to_string()).to_string() == a.to_string());
  }
  CHECK(S("2*x^-1*s + s^-1") == Scalar(LaurentPoly::monomial(-1, 0, 1, 2) + var_s(-1)));
  CHECK(S("(s^2 - s^-2)/(s - s^-1)") == Scalar(quantum_int(2)));
  CHECK(var_s(2).to_string() == "s^2");
  CHECK(quantum_int(2).to_string() == "s + s^-1");
}

TEST_CASE("parse errors carry positions") {
  try {
    (void)S("x + * v");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(S("(x + v"), ParseError);
  CHECK_THROWS_AS(S("q"), ParseError);
  CHECK_THROWS_AS(S("x/0"), ParseError);
}

TEST_CASE("delta") {
  CHECK(delta() == (oracle::V(-1) - oracle::V(1)) / oracle::Z());
}

TEST_CASE("bar involution") {
  CHECK(bar(S("x*v^2 - 3*s^-1")) == S("x^-1*v^-2 - 3*s"));
  std::mt19937 rng(12);
  for (int t = 0; t < 20; ++t) {
    const Scalar a = oracle::random_scalar(rng), b = oracle::random_scalar(rng);
    CHECK(bar(bar(a)) == a);
    CHECK(bar(a * b) == bar(a) * bar(b));
  }
}

TEST_CASE("sl(N) specialization") {
  CHECK(specialize_slN(S("x*v^-1"), 2) == TFraction(UniLaurent::monomial(3)));
  CHECK(specialize_slN(delta(), 2) == TFraction(UniLaurent::monomial(2) + UniLaurent::monomial(-2)));
  for (int N = 2; N <= 5; ++N) {
    // [N] written in t: (t^{N^2} - t^{-N^2}) / (t^N - t^{-N}).
    UniLaurent q;
    for (int j = 0; j < N; ++j) q += UniLaurent::monomial(N * (N - 1 - 2 * j));
    CHECK(specialize_slN(delta(), N) == TFraction(q));
  }
  std::mt19937 rng(13);
  for (int t = 0; t < 20; ++t) {
    const Scalar a(oracle::random_laurent(rng)), b(oracle::random_laurent(rng));
    for (int N = 2; N <= 3; ++N) {
      CHECK(specialize_slN(a * b, N) == specialize_slN(a, N) * specialize_slN(b, N));
      CHECK(specialize_slN(a + b, N) == specialize_slN(a, N) + specialize_slN(b, N));
    }
  }
  // s^2 - x^-4 specializes to zero at N = 2.
  CHECK_THROWS_AS(specialize_slN(Scalar(LaurentPoly(1L), var_s(2) - var_x(-4)), 2), SpecializationError);
}

TEST_CASE("h expansion") {
  const auto one = h_expand(TFraction(UniLaurent::monomial(4)), 2, 1);
  CHECK(one == std::vector<Rational>{1, 1});
  CHECK(h_expand(TFraction(UniLaurent(1L)), 3, 3) == std::vector<Rational>{1, 0, 0, 0});
  CHECK(h_expand(specialize_slN(delta(), 2), 2, 1) == std::vector<Rational>{2, 0});
  // e^{h/2} = 1 + h/2 + h^2/8.
  CHECK(h_expand(TFraction(UniLaurent::monomial(2)), 2, 2) == std::vector<Rational>{1, Rational(1, 2), Rational(1, 8)});
  const TFraction pole(UniLaurent(1L), UniLaurent::monomial(1) - UniLaurent(1L));
  CHECK_THROWS_AS(h_expand(pole, 2, 1), SpecializationError);
}
