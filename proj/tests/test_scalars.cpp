#include <doctest.h>

#include <shv/scalars/integer_factor.hpp>
#include <shv/scalars/polynomial.hpp>
#include <shv/scalars/rational_function.hpp>
#include <shv/scalars/scalar.hpp>
#include <shv/scalars/sqrt2.hpp>

using namespace shv;

TEST_CASE("rationals stay in lowest terms") {
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-3, 6).to_string() == "-1/2");
    CHECK(Rational(7, 2).twice() == 7);
    CHECK_THROWS(Rational::parse("1.5"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("prime factors multiply back") {
    const mpz_class n("600851475143");
    mpz_class prod = 1;
    for (const auto& f : prime_factors(n)) prod *= f;
    CHECK(prod == n);
    const auto f360 = prime_factors(mpz_class(360));
    CHECK(f360 == std::vector<mpz_class>{2, 2, 2, 3, 3, 5});
    CHECK(positive_divisors(mpz_class(12)).size() == 6);
}

TEST_CASE("rational roots of a product of linear factors") {
    const Polynomial p = Polynomial::variable(Parameter::p);
    const Polynomial f = (p - Polynomial(1)) * (p + Polynomial(2)) * (Polynomial(2) * p - Polynomial(3)) * (p * p + Polynomial(1));
    const auto roots = rational_roots_in(f, Parameter::p);
    CHECK(roots == std::vector<Rational>{Rational(-2), Rational(1), Rational(3, 2)});
}

TEST_CASE("polynomial gcd and exact division") {
    const Polynomial r = Polynomial::variable(Parameter::r);
    const Polynomial a = (r - Polynomial(1)) * (r + Polynomial(3));
    const Polynomial b = (r - Polynomial(1)) * (r - Polynomial(5));
    CHECK(make_monic(gcd(a, b)) == r - Polynomial(1));
    CHECK(a.divide_exact(r + Polynomial(3)) == r - Polynomial(1));
    CHECK_THROWS(a.divide_exact(r + Polynomial(4)));
}

TEST_CASE("rational functions reduce") {
    const Polynomial r = Polynomial::variable(Parameter::r);
    RationalFunction f((r * r - Polynomial(1)), (r - Polynomial(1)));
    CHECK(f == RationalFunction(r + Polynomial(1)));
    CHECK(f.evaluate({{Parameter::r, Rational(2)}}) == Rational(3));
}

TEST_CASE("sqrt2 field") {
    const RationalSqrt2 s = RationalSqrt2::sqrt2();
    CHECK(s * s == RationalSqrt2(2));
    const RationalSqrt2 x(Rational(1), Rational(1));
    CHECK(x.inverse() == RationalSqrt2(Rational(-1), Rational(1)));
    CHECK(x * x.inverse() == RationalSqrt2(1));
}

TEST_CASE("scalar modes never mix") {
    const Scalar a = Scalar::parse("3/2", ScalarMode::Specialized);
    const Scalar b = Scalar::parse("cL - 3", ScalarMode::Symbolic);
    CHECK(a.rational() == Rational(3, 2));
    CHECK(b.evaluate({{Parameter::cL, Rational(11, 2)}}) == Rational(5, 2));
    CHECK_THROWS_AS(a + b, ModeMismatch);
}
